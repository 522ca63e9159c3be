#include "bilat/corpus.hpp"

#include "bilat/birkhoff.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/prodrep.hpp"
#include "bilat/varieties.hpp"

#include <algorithm>

namespace bilat {

FinAlgebra chain_lattice(int n, bool bounded) {
    if (n < 1) throw precondition_error("chain_lattice needs n >= 1");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    std::vector<int> orr((std::size_t)n * n), andd((std::size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            orr[(std::size_t)(a * n + b)] = std::max(a, b);
            andd[(std::size_t)(a * n + b)] = std::min(a, b);
        }
    if (bounded)
        return FinAlgebra(signature_of(Variety::D), std::move(names),
                          {std::move(orr), std::move(andd), {0}, {n - 1}});
    return FinAlgebra(signature_of(Variety::Du), std::move(names),
                      {std::move(orr), std::move(andd)});
}

namespace {

FinAlgebra diamond_lattice(bool bounded) {
    FinAlgebra two = chain_lattice(2, true);
    FinAlgebra prod = product(two, two);
    if (bounded) return prod;
    return FinAlgebra(signature_of(Variety::Du), prod.elems(),
                      {prod.table("or"), prod.table("and")});
}

FinAlgebra strip_bounds(const FinAlgebra& l) {
    return FinAlgebra(signature_of(Variety::Du), l.elems(), {l.table("or"), l.table("and")});
}

FinAlgebra upset_lattice_of_poset(const Poset& p, bool bounded) {
    FinAlgebra l = upset_algebra(p); // bounded by construction
    return bounded ? l : strip_bounds(l);
}

} // namespace

std::vector<FinAlgebra> small_lattices(int max_size, bool bounded) {
    std::vector<FinAlgebra> out;
    std::vector<AlgPtr> kept;
    auto add = [&](FinAlgebra l) {
        if (l.size() > max_size) return;
        AlgPtr p = make_alg(l);
        for (const auto& k : kept)
            if (find_isomorphism(k, p)) return;
        kept.push_back(p);
        out.push_back(std::move(l));
    };
    for (int n = 1; n <= std::min(max_size, 4); ++n) add(chain_lattice(n, bounded));
    if (max_size >= 4) add(diamond_lattice(bounded));
    if (max_size <= 4) return out;

    // Beyond four elements: up-set lattices of posets on up to six points,
    // enumerated from upper-triangular transitive relations.  Six points
    // suffice: a lattice with at most seven elements has at most six
    // join-irreducibles.
    for (int npts = 1; npts <= 6; ++npts) {
        const int nedges = npts * (npts - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << nedges); ++mask) {
            Poset p = Poset::discrete([&] {
                std::vector<std::string> names;
                for (int i = 0; i < npts; ++i) names.push_back("p" + std::to_string(i));
                return names;
            }());
            int bit = 0;
            for (int i = 0; i < npts; ++i)
                for (int j = i + 1; j < npts; ++j, ++bit)
                    if (mask >> bit & 1u) p.leq[(std::size_t)i][(std::size_t)j] = true;
            if (!is_transitive(p)) continue;
            // Quick size filter before building the lattice.
            int upsets = 0;
            for (std::uint32_t um = 0; um < (1u << npts); ++um) {
                bool up = true;
                for (int i = 0; i < npts && up; ++i) {
                    if (!(um >> i & 1u)) continue;
                    for (int j = 0; j < npts && up; ++j)
                        if (p.le(i, j) && !(um >> j & 1u)) up = false;
                }
                if (up) ++upsets;
            }
            if (upsets > max_size) continue;
            FinAlgebra l = upset_lattice_of_poset(p, bounded);
            add(std::move(l));
        }
    }
    return out;
}

FinAlgebra random_lattice(SplitMix64& rng, int max_size, bool bounded) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        const int npts = 1 + static_cast<int>(rng.below(3));
        Poset p = Poset::discrete([&] {
            std::vector<std::string> names;
            for (int i = 0; i < npts; ++i) names.push_back("p" + std::to_string(i));
            return names;
        }());
        for (int i = 0; i < npts; ++i)
            for (int j = i + 1; j < npts; ++j)
                if (rng.below(2)) p.leq[(std::size_t)i][(std::size_t)j] = true;
        // Transitive closure keeps it a poset (edges only go upward).
        for (int k = 0; k < npts; ++k)
            for (int i = 0; i < npts; ++i)
                for (int j = 0; j < npts; ++j)
                    if (p.le(i, k) && p.le(k, j)) p.leq[(std::size_t)i][(std::size_t)j] = true;
        FinAlgebra l = upset_lattice_of_poset(p, bounded);
        if (l.size() <= max_size) return l;
    }
    return chain_lattice(std::min(2, max_size), bounded);
}

FinAlgebra random_derived(SplitMix64& rng, AlgPtr base) {
    if (rng.below(2) == 0) {
        auto subs = enumerate_subuniverses(base);
        auto [alg, elems] = subalgebra(subs[rng.below(subs.size())]);
        (void)elems;
        return alg;
    }
    auto lat = congruence_lattice(base);
    auto [alg, proj] = quotient(base, lat.congruences[rng.below(lat.congruences.size())]);
    (void)proj;
    return alg;
}

std::vector<CorpusEntry> verification_corpus(std::uint64_t seed, int n_random) {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, FinAlgebra a) {
        out.push_back({std::move(name), make_alg(std::move(a))});
    };

    add("4", canonical("4"));
    add("4^2", product(canonical("4"), canonical("4")));
    add("4-", canonical("4-"));
    add("2+", canonical("2+"));
    add("2-", canonical("2-"));
    add("2+x2-", product(canonical("2+"), canonical("2-")));

    {
        int i = 0;
        for (const auto& l : small_lattices(4, true))
            add("bowtie(D" + std::to_string(i++) + ")", bowtie(l).algebra);
    }
    {
        int i = 0;
        for (const auto& l : small_lattices(4, false))
            add("bowtie(Du" + std::to_string(i++) + ")", bowtie(l).algebra);
    }

    SplitMix64 rng(seed);
    const std::size_t base_count = out.size();
    for (int r = 0; r < n_random; ++r) {
        const auto& base = out[rng.below(base_count)];
        FinAlgebra derived = random_derived(rng, base.algebra);
        add("derived" + std::to_string(r) + "(" + base.name + ")", std::move(derived));
    }
    return out;
}

std::vector<CorpusEntry> random_dpbu_corpus(std::uint64_t seed, int count) {
    std::vector<CorpusEntry> out;
    SplitMix64 rng(seed);
    while (static_cast<int>(out.size()) < count) {
        FinAlgebra l = random_lattice(rng, 4, false);
        AlgPtr base = make_alg(pre_bilattice_reduct(bowtie(l).algebra));
        const int steps = static_cast<int>(rng.below(3));
        FinAlgebra cur = *base;
        for (int s = 0; s < steps; ++s) cur = random_derived(rng, make_alg(cur));
        out.push_back({"dpbu" + std::to_string(out.size()), make_alg(std::move(cur))});
    }
    return out;
}

} // namespace bilat
