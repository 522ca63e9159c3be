#ifndef BILAT_POSET_HPP
#define BILAT_POSET_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bilat {

/// A finite poset (or raw binary relation while under construction).
/// At the scales of this toolkit the topology of a Priestley space is
/// discrete, so a finite poset is the whole datum.
struct Poset {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> leq; // leq[a][b]: a <= b

    int size() const { return static_cast<int>(names.size()); }
    bool le(int a, int b) const { return leq[(std::size_t)a][(std::size_t)b]; }

    static Poset discrete(std::vector<std::string> names);
    static Poset chain(int n); // 0 < 1 < ... < n-1
};

bool is_reflexive(const Poset& p);
bool is_transitive(const Poset& p);
bool is_antisymmetric(const Poset& p);
bool is_partial_order(const Poset& p);
bool is_preorder(const Poset& p);

Poset order_dual(const Poset& p);
Poset disjoint_union(const Poset& x, const Poset& y);
Poset product_poset(const Poset& x, const Poset& y);
Poset induced_subposet(const Poset& p, const std::vector<int>& points);

std::optional<int> poset_bottom(const Poset& p);
std::optional<int> poset_top(const Poset& p);

/// Least upper bound / greatest lower bound of a pair, if they exist.
std::optional<int> poset_join(const Poset& p, int a, int b);
std::optional<int> poset_meet(const Poset& p, int a, int b);
bool poset_is_lattice(const Poset& p); // nonempty, every pair has lub and glb

std::vector<int> order_interval(const Poset& p, int x, int y); // {z : x<=z<=y}

std::vector<std::pair<int, int>> cover_pairs(const Poset& p);

/// Bijective order-embedding in both directions; first found in the
/// deterministic search order.
std::optional<std::vector<int>> find_poset_isomorphism(const Poset& x, const Poset& y);

} // namespace bilat

#endif
