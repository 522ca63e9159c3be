#ifndef BILAT_PRODREP_HPP
#define BILAT_PRODREP_HPP

#include "bilat/algebra.hpp"

#include <vector>

namespace bilat {

/// The product bilattice on L x L: t-structure L x L^dual, k-structure
/// L x L, negation (a,b) |-> (b,a); bounded inputs give DB algebras with
/// 0t=(0,1), 1t=(1,0), 0k=(0,0), 1k=(1,1), unbounded inputs give DB-.
struct BowtieAlgebra {
    FinAlgebra algebra;
    Hom first;  // projection onto the left factor (lattice hom on reducts)
    Hom second; // projection onto the right factor
};

BowtieAlgebra bowtie(const FinAlgebra& lattice);

/// V(A) = [0k, 1t] inside the t-order, a bounded distributive lattice with
/// bounds 0k and 1t.  The MPSV-style interval [0t, 1k] is provided as a
/// cross-check accessor.
FinAlgebra truth_interval(const FinAlgebra& a);
FinAlgebra truth_interval_mpsv(const FinAlgebra& a);

/// theta_A = {(a,b) : a and_t b = a or_k b}; verified to be a congruence
/// of the t-reduct (hard error otherwise).  V-(A) = A_t/theta_A.
Congruence theta_congruence(AlgPtr a);
FinAlgebra theta_quotient(AlgPtr a);

/// A ~ L (.) L with L = truth_interval(A) (bounded) or theta_quotient(A)
/// (unbounded).  The explicit coordinate map is tried first and the
/// generic isomorphism search is the fallback; failure is a hard error.
struct ProductRepresentation {
    FinAlgebra factor;  // the representing lattice L
    FinAlgebra product; // L (.) L
    Hom iso;            // A -> L (.) L
};

ProductRepresentation verify_product_representation(AlgPtr a);

} // namespace bilat

#endif
