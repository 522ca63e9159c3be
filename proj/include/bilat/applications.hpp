#ifndef BILAT_APPLICATIONS_HPP
#define BILAT_APPLICATIONS_HPP

#include "bilat/algebra.hpp"
#include "bilat/duality.hpp"
#include "bilat/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bilat {

/// Classification of the unifier structure of a finite algebra, computed
/// from its natural dual poset:
///   DB:  unsolvable iff trivial; 1 if the dual is a lattice; omega if not
///        but every interval [x,y] is; 0 otherwise.
///   DB-: always solvable; 1 iff the dual is a lattice, else 0.
enum class UnificationType { Unsolvable, Unitary, Finitary, Nullary };

std::string unification_type_name(UnificationType t);

struct UnificationVerdict {
    UnificationType status = UnificationType::Unsolvable;
    Poset dual;                                        // re-checkable evidence
    std::optional<std::pair<int, int>> witness_pair;     // pair without join or meet
    std::optional<std::pair<int, int>> witness_interval; // interval that is not a lattice
};

UnificationVerdict unification_type(AlgPtr a);

/// Terms over a signature extended with the derived knowledge operations
/// (or_k/and_k are available on DB algebras through the 90-degree
/// formulas).  Variables are indices.
struct Term {
    bool is_var = false;
    int var = -1;
    std::string op;
    std::vector<Term> args;

    static Term v(int i);
    static Term o(std::string op, std::vector<Term> args = {});
};

struct Clause {
    std::string name;
    int n_vars = 0;
    std::vector<std::pair<Term, Term>> premises;
    std::vector<std::pair<Term, Term>> conclusions;
};

/// The three-clause basis for DB admissibility:
///   (1) ({x and_k y = 1t}, {x = 1t, y = 1t})
///   (2) ({x or_k y = 1t}, {x = 1t, y = 1t})
///   (3) ({0t = 1t}, {})
std::vector<Clause> admissibility_basis_clauses();

struct ClauseResult {
    std::string name;
    bool holds = false;
    std::vector<int> witness; // failing assignment, element indices
};

/// A clause holds iff every assignment satisfying all premises satisfies
/// some conclusion; the empty conclusion set is never satisfied.
/// Assignments are scanned in lexicographic order, so the witness is the
/// first failing one.
ClauseResult evaluate_clause(const FinAlgebra& a, const Clause& c);

struct FreeEmbedding {
    int generators = 0;    // n with A embedded into F(n)
    StructuredSpace power; // the dual space of F(n)
    /// Per element of A, its image in F(n) as a structure-preserving map
    /// on the power space.  Injectivity and the homomorphism property are
    /// verified pointwise, so the embedding stands without tabulating
    /// F(n); `free`/`embedding` are additionally materialised when F(n)
    /// fits under the guards.
    std::vector<std::vector<int>> images;
    std::optional<FinAlgebra> free;
    std::optional<Hom> embedding;
};

/// Embeds A into a finite free algebra through the onto dual-space map
/// built from a bounded enumeration of D(A); DB requires the dual to be
/// non-empty and bounded, DB- always succeeds.
FreeEmbedding embed_into_free(AlgPtr a, std::uint64_t candidate_guard = 1u << 20,
                              std::size_t table_cap = 1u << 13);

struct AdmissibilityReport {
    std::vector<ClauseResult> clause_results;
    bool clauses_hold = false;
    bool dual_nonempty = false;
    bool dual_bounded = false;
    bool equivalence_holds = false; // clauses_hold == (dual_nonempty && dual_bounded)
    std::optional<Hom> embedding;   // present when the dual is non-empty bounded
};

AdmissibilityReport admissibility_check(AlgPtr a);

struct StructuralTests {
    std::optional<bool> injective; // empty for DB- ("not applicable")
    bool weakly_projective = false;
};

/// injective: every element has a t-complement; weakly projective: the
/// natural dual is a lattice.
StructuralTests structural_tests(AlgPtr a);

} // namespace bilat

#endif
