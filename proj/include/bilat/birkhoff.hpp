#ifndef BILAT_BIRKHOFF_HPP
#define BILAT_BIRKHOFF_HPP

#include "bilat/algebra.hpp"
#include "bilat/poset.hpp"

#include <optional>

namespace bilat {

/// Finite Priestley duality for bounded (D) and unbounded (D-)
/// distributive lattices, realised through hom-functors: dual points are
/// the lattice homomorphisms into the two-element lattice, ordered
/// pointwise.  In the unbounded case the two constant maps belong to the
/// dual and are its distinguished bottom and top.

struct DoublyPointedSpace {
    Poset poset;
    int bottom = -1;
    int top = -1;
};

struct PriestleyDual {
    bool bounded = true;
    Poset poset;
    int bottom = -1, top = -1;               // meaningful iff !bounded
    std::vector<std::vector<int>> hom_maps;  // per point: 0/1 value on each lattice element

    DoublyPointedSpace doubly_pointed() const { return {poset, bottom, top}; }
};

/// Dual space of a valid D or D- algebra; throws validation_error otherwise.
PriestleyDual priestley_dual(const FinAlgebra& lattice);

/// Bounded case: all up-sets under union/intersection with bounds.
FinAlgebra upset_algebra(const Poset& x);
/// Unbounded case: up-sets containing top and not bottom, no bounds in the
/// signature (the finite rendering of "proper non-empty clopen up-sets").
FinAlgebra upset_algebra(const DoublyPointedSpace& x);

DoublyPointedSpace order_dual(const DoublyPointedSpace& x);

/// Coproduct in P (disjoint union).
Poset coproduct_spaces(const Poset& x, const Poset& y);
/// Coproduct in P01 (disjoint union, bottoms identified, tops identified).
DoublyPointedSpace coproduct_spaces(const DoublyPointedSpace& x, const DoublyPointedSpace& y);

/// Elements with exactly one lower cover (bounded D input); the classical
/// cross-check |H(L)| = |J(L)|.
std::vector<int> join_irreducibles(const FinAlgebra& lattice);

/// Order on a lattice algebra: a <= b iff a or b = b.
Poset order_of_lattice(const FinAlgebra& lattice);

} // namespace bilat

#endif
