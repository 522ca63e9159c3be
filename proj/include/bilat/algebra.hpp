#ifndef BILAT_ALGEBRA_HPP
#define BILAT_ALGEBRA_HPP

#include "bilat/signature.hpp"

#include <memory>
#include <string>
#include <vector>

namespace bilat {

class FinAlgebra;
using AlgPtr = std::shared_ptr<const FinAlgebra>;

/// A finite algebra: a non-empty universe of named elements together with a
/// total operation table for every symbol of its signature.  Element
/// identity is the positional index; names are presentation-only.
/// Immutable after construction.
class FinAlgebra {
  public:
    FinAlgebra(Signature sig, std::vector<std::string> elems,
               std::vector<std::vector<int>> tables);

    const Signature& sig() const { return sig_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<std::string>& elems() const { return elems_; }
    const std::string& name_of(int e) const { return elems_.at(static_cast<std::size_t>(e)); }
    int index_of(std::string_view elem_name) const; // -1 if absent

    const std::vector<int>& table(int op) const { return tables_[static_cast<std::size_t>(op)]; }
    const std::vector<int>& table(std::string_view op) const;

    int apply(int op, int a = -1, int b = -1) const;
    int apply(std::string_view op, int a = -1, int b = -1) const;

    /// a <= b in the order of the semilattice given by a binary join table.
    bool leq_under_join(std::string_view join_op, int a, int b) const;

    friend bool operator==(const FinAlgebra&, const FinAlgebra&) = default;

  private:
    Signature sig_;
    std::vector<std::string> elems_;
    std::vector<std::vector<int>> tables_; // arity 0: 1 entry; 1: n; 2: n*n row-major
};

AlgPtr make_alg(FinAlgebra a);
AlgPtr make_alg(Signature sig, std::vector<std::string> elems,
                std::vector<std::vector<int>> tables);

/// A homomorphism between algebras of a common signature.  Preservation of
/// every operation is checked on construction, over all argument tuples.
struct Hom {
    AlgPtr source;
    AlgPtr target;
    std::vector<int> map;

    static Hom make(AlgPtr source, AlgPtr target, std::vector<int> map);
    /// Preservation check without constructing; empty result means "is a hom".
    static bool preserves_all(const FinAlgebra& src, const FinAlgebra& tgt,
                              const std::vector<int>& map);

    int operator()(int e) const { return map[static_cast<std::size_t>(e)]; }
    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }
};

/// g after f.
Hom compose(const Hom& g, const Hom& f);
Hom identity_hom(AlgPtr a);

/// A subset of an algebra's universe closed under all operations and
/// containing every nullary value.  Elements are kept sorted ascending.
struct SubUniverse {
    AlgPtr parent;
    std::vector<int> elements;

    static SubUniverse make(AlgPtr parent, std::vector<int> elements);
    bool contains(int e) const;
};

/// Closure of a subset under the operations; throws nothing, always total.
std::vector<int> close_subset(const FinAlgebra& a, std::vector<int> seed);
bool is_subuniverse(const FinAlgebra& a, const std::vector<int>& sorted_elems);

/// The subalgebra on a subuniverse, with inherited element names,
/// together with the inclusion hom.
std::pair<FinAlgebra, std::vector<int>> subalgebra(const SubUniverse& s);

/// A congruence stored as a canonical partition: block_of[e] is the block
/// index of e, blocks numbered by first occurrence.  Compatibility with
/// every operation is checked on construction.
struct Congruence {
    AlgPtr parent;
    std::vector<int> block_of;
    int block_count = 0;

    static Congruence make(AlgPtr parent, const std::vector<int>& labels);
    bool related(int a, int b) const { return block_of[(std::size_t)a] == block_of[(std::size_t)b]; }
    std::vector<std::vector<int>> blocks() const;

    /// theta refines psi (every theta-block inside a psi-block).
    static bool refines(const Congruence& theta, const Congruence& psi);
    friend bool operator==(const Congruence& x, const Congruence& y) {
        return x.block_of == y.block_of;
    }
    friend bool operator<(const Congruence& x, const Congruence& y) {
        return x.block_of < y.block_of;
    }
};

/// Renumber arbitrary labels into the canonical first-occurrence form.
std::vector<int> canonical_partition(const std::vector<int>& labels);

bool is_compatible_partition(const FinAlgebra& a, const std::vector<int>& block_of);

FinAlgebra product(const FinAlgebra& a, const FinAlgebra& b);

/// Quotient by a congruence; block representative = least index in block.
/// Also returns the canonical projection as a Hom.
std::pair<FinAlgebra, Hom> quotient(AlgPtr a, const Congruence& theta);

/// Kernel of a hom as a congruence of its source.
Congruence kernel(const Hom& h);

} // namespace bilat

#endif
