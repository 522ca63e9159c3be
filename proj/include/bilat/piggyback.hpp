#ifndef BILAT_PIGGYBACK_HPP
#define BILAT_PIGGYBACK_HPP

#include "bilat/algebra.hpp"
#include "bilat/birkhoff.hpp"
#include "bilat/duality.hpp"
#include "bilat/poset.hpp"

#include <array>
#include <string>
#include <vector>

namespace bilat {

/// A lattice hom from the t-reduct of the generator into 2 (constants
/// allowed in the unbounded case), with a symbolic tag: "alpha"/"beta" on
/// the four-element generators, "0bar"/"1bar" for the constant maps,
/// "w<i>" otherwise.
struct OmegaMap {
    std::string tag;
    std::vector<int> map; // 0/1 per element of M
};

struct OmegaSet {
    AlgPtr generator;
    bool bounded = true;
    std::vector<OmegaMap> omegas;

    int find_tag(const std::string& tag) const; // -1 if absent
};

/// All bound-preserving lattice homs U(M) -> 2 (bounded), or all lattice
/// homs including the two constants (unbounded).  Works for any algebra
/// whose t-reduct is a distributive lattice.
OmegaSet omega_set(AlgPtr m, bool bounded);

/// Binary piggyback relations: for each ordered pair (w1,w2) the maximal
/// subuniverses of M^2 inside the sublattice {(a,b) : w1(a) <= w2(b)}.
/// Unbounded case additionally: for each w and i the maximal subuniverses
/// of M inside {a : w(a) = i}.
struct PiggybackRelations {
    OmegaSet omega;
    // binary[w1][w2]: each relation is a sorted pair list.
    std::vector<std::vector<std::vector<std::vector<std::pair<int, int>>>>> binary;
    // unary[w][i]: each relation is a sorted element list (empty when bounded).
    std::vector<std::array<std::vector<std::vector<int>>, 2>> unary;
};

PiggybackRelations piggyback_relations(AlgPtr m, bool bounded);

/// The dismount construction: Y_A = D(A) x Omega with
///   (x,w1) preceq (y,w2)  iff  (x,y) lies in some lifted r in R_{w1,w2},
/// quotiented by approx = preceq meet its converse.  The pre-order is
/// asserted, never closed; Phi([(x,w)]) = w o x must be an isomorphism
/// onto the Priestley dual of the t-reduct.  Both failures are hard
/// errors.  Point (x,w) has flat index w*|D(A)| + x, and the class
/// representative is the least flat index.
struct PreorderedCover {
    AlgPtr algebra;
    NaturalDual dual;
    OmegaSet omega;
    PiggybackRelations relations;

    int n_dual = 0, n_omega = 0;
    std::vector<std::vector<bool>> preceq; // on flat points
    std::vector<int> class_of;             // flat point -> class
    std::vector<int> class_rep;            // class -> least flat point
    Poset quotient;                        // classes with preceq/approx

    bool unbounded = false;
    int c0 = -1, c1 = -1; // distinguished classes, unbounded case only

    PriestleyDual target;                // priestley_dual(t_reduct(A))
    std::vector<std::vector<int>> phi;   // class -> 0/1 map on A
    std::vector<int> phi_index;          // class -> target point

    int flat(int x, int w) const { return w * n_dual + x; }
};

PreorderedCover dismount(AlgPtr a);

/// Operation transfer onto the dismounted space.  Slots:
///   endo_ops       unary symbols acting as D-endomorphisms   -> fbar (order-preserving)
///   dual_endo_ops  unary symbols acting as dual endomorphisms -> hbar  (order-reversing)
///   nullary_ops    constants -> cbar (an up-set of classes)
/// Each transfer is verified against the directly computed Priestley-side
/// map through Phi; failure is a hard error.
struct TransferSpec {
    std::vector<std::string> endo_ops;
    std::vector<std::string> dual_endo_ops;
    std::vector<std::string> nullary_ops;
};

TransferSpec default_transfer_spec(Variety v);

struct TransferredStructure {
    PreorderedCover cover;
    std::vector<std::vector<int>> fbar; // per endo op: class -> class
    std::vector<std::vector<int>> hbar; // per dual-endo op: class -> class
    std::vector<std::vector<int>> cbar; // per nullary op: sorted class list
};

TransferredStructure transfer_operations(AlgPtr a, const TransferSpec& spec);
TransferredStructure transfer_operations(AlgPtr a);

/// The knowledge-order dual of A in DB: Y = D(A) x {alpha,beta} with
///   (x,w) preceq' (y,w') iff w = w' and x <= y in D(A),
/// and eta(x,alpha) = alpha o x, eta(x,beta) = 1 - beta o x, an
/// order-isomorphism onto the Priestley dual of the k-reduct.  The space
/// is two like-oriented copies of D(A).
struct KnowledgeDual {
    AlgPtr algebra;
    NaturalDual dual;
    Poset space;                       // 2|D(A)| points, alpha block first
    std::vector<std::vector<int>> eta; // per flat point: 0/1 map on A
    PriestleyDual target;              // priestley_dual(k_reduct(A))
    std::vector<int> eta_index;        // flat point -> target point
};

KnowledgeDual knowledge_dual(AlgPtr a);

} // namespace bilat

#endif
