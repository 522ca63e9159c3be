#ifndef BILAT_ENUMERATE_HPP
#define BILAT_ENUMERATE_HPP

#include "bilat/algebra.hpp"

#include <optional>
#include <vector>

namespace bilat {

/// Execution policy for the enumeration kernels.  Parallel runs split the
/// search at the top branching level across OpenMP threads and concatenate
/// per-branch results in branch order, so both policies produce identical
/// output.  The serial policy is the reference implementation.
enum class Exec { Serial, Parallel };

/// A generating sequence: nullary values generate the start closure, then
/// greedily the least element outside the closure so far.  Every element of
/// the algebra is reachable from the returned generators plus constants.
std::vector<int> generating_sequence(const FinAlgebra& a);

/// All homomorphisms a -> b, each one exactly once, sorted lexicographically
/// by image tuple.  Backtracks over generator images with closure
/// propagation after each assignment.
std::vector<Hom> enumerate_homs(AlgPtr a, AlgPtr b, Exec policy = Exec::Parallel);

/// All subuniverses of a (the empty set excluded, a itself included),
/// sorted by size then lexicographically.  Breadth-first search over closed
/// sets: the closure of every closed-set-plus-one-element is again visited.
std::vector<SubUniverse> enumerate_subuniverses(AlgPtr a);

struct CongruenceLattice {
    std::vector<Congruence> congruences;      // bottom (identity) first, top last
    std::vector<std::vector<bool>> refines;   // refines[i][j]: c_i refines c_j

    int bottom_index() const { return 0; }
    int top_index() const { return static_cast<int>(congruences.size()) - 1; }
};

/// All congruences of a with the refinement order.  Principal congruences
/// are generated for every pair and closed under joins.
CongruenceLattice congruence_lattice(AlgPtr a, Exec policy = Exec::Parallel);

/// Join of two congruences (transitive closure of the union).
Congruence join_congruences(const Congruence& x, const Congruence& y);

/// Principal congruence collapsing a and b.
Congruence principal_congruence(AlgPtr alg, int a, int b);

/// A bijective homomorphism a -> b if one exists.  Backtracking over
/// generator images with invariant pruning on operation-degree
/// fingerprints; the first map in the (deterministic) search order wins.
std::optional<Hom> find_isomorphism(AlgPtr a, AlgPtr b);

bool isomorphic(AlgPtr a, AlgPtr b);

} // namespace bilat

#endif
