#ifndef BILAT_VARIETIES_HPP
#define BILAT_VARIETIES_HPP

#include "bilat/algebra.hpp"
#include "bilat/enumerate.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bilat {

struct Violation {
    std::string axiom;
    std::vector<std::string> witness; // element names
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// The canonical generators and small companions:
///   "4"    the four-element bilattice (DB), universe 00,11,01,10
///   "4-"   its unbounded counterpart (DB-)
///   "2+"   two-element pre-bilattice, k-order = t-order (DPB)
///   "2-"   two-element pre-bilattice, k-order = dual t-order (DPB)
///   "2+-"  unbounded 2+ (DPB-)
///   "2--"  unbounded 2- (DPB-)
///   "2"    two-element bounded lattice (D)
///   "2lat-" two-element unbounded lattice (D-)
/// ASCII aliases: 4u, 2p, 2m, 2pu, 2mu, 2u.
FinAlgebra canonical(std::string_view name);

/// One-element algebra of the given variety.
FinAlgebra trivial_algebra(Variety v);

/// Exhaustive axiom check of A against the variety's defining laws,
/// including the twelve cross-distributivity instances and the derived
/// sanity inequalities.  Failures are collected, not thrown.
ValidationReport validate(const FinAlgebra& a, Variety v);

Variety variety_of(const FinAlgebra& a); // from the signature name

/// Knowledge operations from t-operations and the k-bounds:
///   a or_k b  = ((a and_t b) and_t 0k) or_t ((a or_t b) and_t 1k)
///   a and_k b = ((a and_t b) and_t 1k) or_t ((a or_t b) and_t 0k)
/// Requires 0k, 1k in the type (DB or DPB).
std::pair<std::vector<int>, std::vector<int>> derive_knowledge_ops(const FinAlgebra& a);

/// Reducts.  t_reduct lands in D (bounded input) or D- (unbounded);
/// k_reduct uses stored k-operations when present and derived ones
/// otherwise.  drop_negation forgets "not" (DB -> DPB, DB- -> DPB-).
FinAlgebra t_reduct(const FinAlgebra& a);
FinAlgebra k_reduct(const FinAlgebra& a);
FinAlgebra drop_negation(const FinAlgebra& a);
/// DB -> DB-: stored knowledge operations derived from the bounds,
/// constants dropped.
FinAlgebra to_unbounded_bilattice(const FinAlgebra& a);
/// Full pre-bilattice reduct (or_t, and_t, or_k, and_k) of any
/// (pre-)bilattice, in the DPB- signature.
FinAlgebra pre_bilattice_reduct(const FinAlgebra& a);

struct SeparationWitness {
    std::string generator; // canonical name of the target generator
    Hom hom;               // h with h(a) != h(b)
};

/// A homomorphism into the variety's generator separating a and b,
/// constructed through a prime t-filter.  Deterministic: the least
/// separating filter in the enumeration order is used.
SeparationWitness separating_family(AlgPtr a, int x, int y);

} // namespace bilat

#endif
