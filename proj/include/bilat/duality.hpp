#ifndef BILAT_DUALITY_HPP
#define BILAT_DUALITY_HPP

#include "bilat/algebra.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/poset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bilat {

/// An alter ego: one or two generator algebras retopologised as a
/// relational structure.  Every relation must be a subuniverse of the
/// product of its sorts and every nullary a one-element subuniverse;
/// both are checked by `check_alter_ego`.
struct AlterEgo {
    Variety variety = Variety::DB;
    std::vector<AlgPtr> sorts;

    struct Relation {
        std::string name;
        int sort_a = 0, sort_b = 0;
        std::vector<std::pair<int, int>> pairs;
    };
    std::vector<Relation> relations;

    struct Nullary {
        std::string name;
        int sort = 0;
        int element = 0;
    };
    std::vector<Nullary> nullaries;
};

void check_alter_ego(const AlterEgo& e);

/// The standard egos: DB -> (4; leq_k); DB- -> (4-; 01, 10, leq_k);
/// DPB -> (2+, 2-; leq_k per sort); DPB- -> the same plus the four
/// nullaries; D -> (2; leq); D- -> (2; 0, 1, leq).
AlterEgo standard_alter_ego(Variety v);

/// A finite multisorted structure typed over an alter ego: per-sort point
/// lists, one lifted instance per ego relation, one point per ego nullary.
struct StructuredSpace {
    std::vector<std::vector<std::string>> point_names; // per sort

    struct RelInstance {
        int sort_a = 0, sort_b = 0;
        std::vector<std::pair<int, int>> pairs;
    };
    std::vector<RelInstance> relations; // parallel to ego.relations
    std::vector<int> nullary_sorts;     // parallel to ego.nullaries
    std::vector<int> nullary_points;

    int sorts() const { return static_cast<int>(point_names.size()); }
    int sort_size(int s) const { return static_cast<int>(point_names[(std::size_t)s].size()); }
    int total_points() const;
    int offset(int s) const; // flattened index of the first point of sort s
    int sort_of(int flat) const;

    bool in_relation(int rel, int i, int j) const;

    /// Single-sorted spaces viewed as posets through their first relation.
    Poset as_poset() const;
};

StructuredSpace product_space(const StructuredSpace& x, const StructuredSpace& y);
StructuredSpace power_space(const AlterEgo& e, int n); // sortwise n-th power

std::optional<std::vector<std::vector<int>>> find_space_isomorphism(const StructuredSpace& x,
                                                                    const StructuredSpace& y);

/// The natural dual D(A): hom-sets into the ego's sorts with the ego
/// structure lifted pointwise.
struct NaturalDual {
    AlgPtr algebra;
    AlterEgo ego;
    std::vector<std::vector<Hom>> homs; // per sort; point i of sort s is homs[s][i]
    StructuredSpace space;
};

NaturalDual natural_dual(AlgPtr a, const AlterEgo& e);

/// All structure-preserving maps X -> ego, as flattened assignments, in
/// lexicographic order.  `candidate_guard` bounds the naive search-space
/// size; exceeding it throws guard_exceeded with an estimate.
std::vector<std::vector<int>> enumerate_evaluation_maps(const StructuredSpace& x,
                                                        const AlterEgo& e,
                                                        Exec policy = Exec::Parallel,
                                                        std::uint64_t candidate_guard = 1u << 30);

std::uint64_t evaluation_candidate_estimate(const StructuredSpace& x, const AlterEgo& e);

/// E(X) materialised as a finite algebra with pointwise operations.
/// Throws guard_exceeded when |E(X)| exceeds `table_cap`.
struct EvaluationAlgebra {
    FinAlgebra algebra;
    std::vector<std::vector<int>> maps; // element i is maps[i]
};

EvaluationAlgebra evaluation_algebra(const StructuredSpace& x, const AlterEgo& e,
                                     Exec policy = Exec::Parallel,
                                     std::uint64_t candidate_guard = 1u << 30,
                                     std::size_t table_cap = 1u << 13);

struct DualityReport {
    bool evaluation_iso = false;
    bool coevaluation_iso = false;
    std::vector<std::string> witnesses;
    bool full() const { return evaluation_iso && coevaluation_iso; }
};

/// Checks that e_A : A -> E(D(A)) is a bijective homomorphism and that
/// eps_X : X -> D(E(X)) at X = D(A) is an isomorphism of structures.
DualityReport verify_full_duality(AlgPtr a, const AlterEgo& e);

struct FreeAlgebra {
    FinAlgebra algebra;
    std::vector<int> generators; // indices of the projection elements
    StructuredSpace power;
    std::vector<std::vector<int>> maps;
};

/// F(n) = E(ego^n), the free algebra on n generators.
FreeAlgebra free_algebra(Variety v, int n, std::uint64_t candidate_guard = 1u << 20,
                         std::size_t table_cap = 1u << 13);

/// |F(n)| without materialising operation tables.
std::uint64_t free_algebra_size(Variety v, int n, std::uint64_t candidate_guard,
                                Exec policy = Exec::Parallel);

struct Coproduct {
    FinAlgebra algebra;
    Hom into_left;  // A -> A + B
    Hom into_right; // B -> A + B
};

/// A + B = E(D(A) x D(B)).
Coproduct coproduct_algebras(AlgPtr a, AlgPtr b, const AlterEgo& e,
                             std::uint64_t candidate_guard = 1u << 20,
                             std::size_t table_cap = 1u << 13);

struct SubstructureLattice {
    std::vector<std::vector<int>> substructures; // flattened point sets, sorted
    std::vector<int> congruence_index;           // position in the congruence lattice
    CongruenceLattice congruences;
    bool anti_isomorphism = false;
    std::vector<std::string> violations;
};

/// Closed substructures of D(A) (point subsets containing the nullary
/// points) paired with the order-reversing bijection onto Con(A).
SubstructureLattice closed_substructure_lattice(const NaturalDual& d);

/// The contravariant action of D on a hom: - o h, with lifted structure
/// preservation verified.  Returns per-sort point maps D(B) -> D(A).
std::vector<std::vector<int>> dual_of_hom(const Hom& h, const NaturalDual& dual_of_source,
                                          const NaturalDual& dual_of_target);

} // namespace bilat

#endif
