#ifndef BILAT_CORPUS_HPP
#define BILAT_CORPUS_HPP

#include "bilat/algebra.hpp"
#include "bilat/common.hpp"

#include <string>
#include <vector>

namespace bilat {

struct CorpusEntry {
    std::string name;
    AlgPtr algebra;
};

/// The n-element chain as a D or D- algebra.
FinAlgebra chain_lattice(int n, bool bounded);

/// All distributive lattices with at most max_size elements, one per
/// isomorphism class (chains and the four-element diamond up to size 4;
/// larger sizes are generated from posets and deduplicated).
std::vector<FinAlgebra> small_lattices(int max_size, bool bounded);

/// A pseudo-random distributive lattice: the up-set lattice of a random
/// poset on at most three points, retried until |L| <= max_size.
FinAlgebra random_lattice(SplitMix64& rng, int max_size, bool bounded);

/// A random subalgebra or quotient of the base algebra.
FinAlgebra random_derived(SplitMix64& rng, AlgPtr base);

/// The verification corpus: the canonical algebras, products, bowties of
/// all lattices with at most four elements, and `n_random` seeded
/// sub/quotient algebras of those.  Entries carry DB, DB- and DPB
/// signatures; filter by variety as needed.
std::vector<CorpusEntry> verification_corpus(std::uint64_t seed, int n_random);

/// Seeded DPB- algebras built from bowtie reducts by subalgebras and
/// quotients, all of size <= 16.
std::vector<CorpusEntry> random_dpbu_corpus(std::uint64_t seed, int count);

} // namespace bilat

#endif
