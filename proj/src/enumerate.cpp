#include "bilat/enumerate.hpp"

#include "bilat/common.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bilat {

std::vector<int> generating_sequence(const FinAlgebra& a) {
    std::vector<int> gens;
    std::vector<int> closed = close_subset(a, {});
    while (static_cast<int>(closed.size()) < a.size()) {
        int next = -1;
        std::size_t pos = 0;
        for (int e = 0; e < a.size(); ++e) {
            if (pos < closed.size() && closed[pos] == e) {
                ++pos;
                continue;
            }
            next = e;
            break;
        }
        gens.push_back(next);
        std::vector<int> seed = closed;
        seed.push_back(next);
        closed = close_subset(a, seed);
    }
    return gens;
}

namespace {

// Shared machinery for hom/iso search: a partial map source -> target with
// closure propagation.  Assigning an element triggers derivation of every
// element reachable by operations from the determined set; conflicts or
// (for iso search) collisions abort the branch.
struct MapSearch {
    const FinAlgebra& src;
    const FinAlgebra& tgt;
    std::vector<int> image;          // -1 = undetermined
    std::vector<int> determined;     // insertion order
    std::vector<char> used;          // target occupancy, for injective search
    bool injective_only = false;

    MapSearch(const FinAlgebra& s, const FinAlgebra& t, bool injective)
        : src(s), tgt(t), image(static_cast<std::size_t>(s.size()), -1),
          used(static_cast<std::size_t>(t.size()), 0), injective_only(injective) {}

    bool set(int e, int v) {
        if (image[(std::size_t)e] != -1) return image[(std::size_t)e] == v;
        if (injective_only) {
            if (used[(std::size_t)v]) return false;
            used[(std::size_t)v] = 1;
        }
        image[(std::size_t)e] = v;
        determined.push_back(e);
        return true;
    }

    // Propagate from determined[from..]; returns false on conflict.
    bool propagate(std::size_t from) {
        const auto& ops = src.sig().ops;
        for (std::size_t k = from; k < determined.size(); ++k) {
            const int e = determined[k];
            const int ve = image[(std::size_t)e];
            for (std::size_t op = 0; op < ops.size(); ++op) {
                const int o = static_cast<int>(op);
                if (ops[op].arity == 1) {
                    if (!set(src.apply(o, e), tgt.apply(o, ve))) return false;
                } else if (ops[op].arity == 2) {
                    for (std::size_t j = 0; j <= k; ++j) {
                        const int d = determined[j];
                        const int vd = image[(std::size_t)d];
                        if (!set(src.apply(o, e, d), tgt.apply(o, ve, vd))) return false;
                        if (!set(src.apply(o, d, e), tgt.apply(o, vd, ve))) return false;
                    }
                }
            }
        }
        return true;
    }

    bool seed_constants() {
        const auto& ops = src.sig().ops;
        for (std::size_t op = 0; op < ops.size(); ++op)
            if (ops[op].arity == 0 &&
                !set(src.apply(static_cast<int>(op)), tgt.apply(static_cast<int>(op))))
                return false;
        return propagate(0);
    }
};

void hom_dfs(MapSearch state, const std::vector<int>& gens, std::size_t gi,
             const std::vector<std::vector<int>>& candidates,
             std::vector<std::vector<int>>& out) {
    if (gi == gens.size()) {
        out.push_back(state.image);
        return;
    }
    const int g = gens[gi];
    if (state.image[(std::size_t)g] != -1) {
        hom_dfs(std::move(state), gens, gi + 1, candidates, out);
        return;
    }
    for (int v : candidates[gi]) {
        MapSearch branch = state;
        const std::size_t mark = branch.determined.size();
        if (!branch.set(g, v)) continue;
        if (!branch.propagate(mark)) continue;
        hom_dfs(std::move(branch), gens, gi + 1, candidates, out);
    }
}

std::vector<std::vector<int>> search_maps(const FinAlgebra& a, const FinAlgebra& b,
                                          bool injective,
                                          const std::vector<std::vector<int>>& candidates,
                                          const std::vector<int>& gens, Exec policy) {
    MapSearch root(a, b, injective);
    if (!root.seed_constants()) return {};
    if (gens.empty()) {
        std::vector<std::vector<int>> out;
        hom_dfs(std::move(root), gens, 0, candidates, out);
        return out;
    }

    // Branch on the first generator's image; the per-branch searches are
    // independent and results concatenate in candidate order.
    const int g0 = gens[0];
    const auto& top = candidates[0];
    std::vector<std::vector<std::vector<int>>> buckets(top.size());

    auto run_branch = [&](std::size_t bi) {
        MapSearch branch = root;
        const std::size_t mark = branch.determined.size();
        if (!branch.set(g0, top[bi])) return;
        if (!branch.propagate(mark)) return;
        hom_dfs(std::move(branch), gens, 1, candidates, buckets[bi]);
    };

    if (policy == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t bi = 0; bi < top.size(); ++bi) run_branch(bi);
    } else {
        for (std::size_t bi = 0; bi < top.size(); ++bi) run_branch(bi);
    }

    std::vector<std::vector<int>> out;
    for (auto& bucket : buckets)
        for (auto& m : bucket) out.push_back(std::move(m));
    return out;
}

} // namespace

std::vector<Hom> enumerate_homs(AlgPtr a, AlgPtr b, Exec policy) {
    if (a->sig() != b->sig()) throw precondition_error("incompatible signatures");
    auto gens = generating_sequence(*a);
    std::vector<int> all(static_cast<std::size_t>(b->size()));
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
    std::vector<std::vector<int>> candidates(gens.size(), all);

    auto maps = search_maps(*a, *b, false, candidates, gens, policy);
    std::sort(maps.begin(), maps.end());
    std::vector<Hom> out;
    out.reserve(maps.size());
    for (auto& m : maps) out.push_back(Hom::make(a, b, std::move(m)));
    return out;
}

std::vector<SubUniverse> enumerate_subuniverses(AlgPtr a) {
    const FinAlgebra& alg = *a;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;

    auto visit = [&](std::vector<int> s) {
        if (s.empty()) return; // algebras are non-empty
        if (seen.insert(s).second) queue.push_back(std::move(s));
    };

    visit(close_subset(alg, {}));
    for (int e = 0; e < alg.size(); ++e) visit(close_subset(alg, {e}));

    for (std::size_t k = 0; k < queue.size(); ++k) {
        const std::vector<int> s = queue[k];
        std::size_t pos = 0;
        for (int e = 0; e < alg.size(); ++e) {
            if (pos < s.size() && s[pos] == e) {
                ++pos;
                continue;
            }
            std::vector<int> seed = s;
            seed.push_back(e);
            visit(close_subset(alg, std::move(seed)));
        }
    }

    std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    std::vector<SubUniverse> out;
    out.reserve(sorted.size());
    for (auto& s : sorted) out.push_back(SubUniverse{a, std::move(s)});
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(std::size_t n) : up(n) {
        for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (up[(std::size_t)x] != x) {
            up[(std::size_t)x] = up[(std::size_t)up[(std::size_t)x]];
            x = up[(std::size_t)x];
        }
        return x;
    }
    // Returns true if the classes were distinct.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (x > y) std::swap(x, y); // keep least index as root
        up[(std::size_t)y] = x;
        return true;
    }
    std::vector<int> labels() {
        std::vector<int> out(up.size());
        for (std::size_t i = 0; i < up.size(); ++i) out[i] = find(static_cast<int>(i));
        return out;
    }
};

// Smallest congruence containing the given pairs: union-find closed under
// one-coordinate operation applications.
std::vector<int> congruence_closure(const FinAlgebra& a,
                                    std::vector<std::pair<int, int>> pending) {
    const int n = a.size();
    UnionFind uf(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < pending.size(); ++k) {
        auto [x, y] = pending[k];
        if (!uf.unite(x, y)) continue;
        for (std::size_t op = 0; op < a.sig().ops.size(); ++op) {
            const int arity = a.sig().ops[op].arity;
            const int o = static_cast<int>(op);
            if (arity == 1) {
                pending.emplace_back(a.apply(o, x), a.apply(o, y));
            } else if (arity == 2) {
                for (int c = 0; c < n; ++c) {
                    pending.emplace_back(a.apply(o, x, c), a.apply(o, y, c));
                    pending.emplace_back(a.apply(o, c, x), a.apply(o, c, y));
                }
            }
        }
    }
    return canonical_partition(uf.labels());
}

} // namespace

Congruence principal_congruence(AlgPtr alg, int a, int b) {
    return Congruence::make(alg, congruence_closure(*alg, {{a, b}}));
}

Congruence join_congruences(const Congruence& x, const Congruence& y) {
    const std::size_t n = x.block_of.size();
    if (y.block_of.size() != n) throw precondition_error("congruences over different algebras");
    UnionFind uf(n);
    for (std::size_t e = 1; e < n; ++e) {
        for (std::size_t d = 0; d < e; ++d) {
            if (x.block_of[e] == x.block_of[d] || y.block_of[e] == y.block_of[d])
                uf.unite(static_cast<int>(d), static_cast<int>(e));
        }
    }
    return Congruence::make(x.parent, canonical_partition(uf.labels()));
}

CongruenceLattice congruence_lattice(AlgPtr a, Exec policy) {
    const int n = a->size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<std::vector<int>> principal(pairs.size());
    if (policy == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t k = 0; k < pairs.size(); ++k)
            principal[k] = congruence_closure(*a, {pairs[k]});
    } else {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            principal[k] = congruence_closure(*a, {pairs[k]});
    }

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> identity(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) identity[(std::size_t)e] = e;
    seen.insert(identity);
    queue.push_back(identity);
    for (auto& p : principal)
        if (seen.insert(p).second) queue.push_back(p);

    // Close under joins with principals; every congruence is such a join.
    for (std::size_t k = 0; k < queue.size(); ++k) {
        for (const auto& p : principal) {
            UnionFind uf(static_cast<std::size_t>(n));
            for (int e = 0; e < n; ++e) {
                for (int d = 0; d < e; ++d) {
                    if (queue[k][(std::size_t)e] == queue[k][(std::size_t)d] ||
                        p[(std::size_t)e] == p[(std::size_t)d])
                        uf.unite(d, e);
                }
            }
            auto joined = canonical_partition(uf.labels());
            if (seen.insert(joined).second) queue.push_back(joined);
        }
    }

    std::vector<std::vector<int>> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        int bx = 1 + *std::max_element(x.begin(), x.end());
        int by = 1 + *std::max_element(y.begin(), y.end());
        if (bx != by) return bx > by; // finer (more blocks) first
        return x < y;
    });

    CongruenceLattice lat;
    lat.congruences.reserve(all.size());
    for (auto& p : all) lat.congruences.push_back(Congruence::make(a, p));
    const std::size_t m = lat.congruences.size();
    lat.refines.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            lat.refines[i][j] = Congruence::refines(lat.congruences[i], lat.congruences[j]);
    return lat;
}

namespace {

// Iterated refinement of element colors by operation structure; isomorphic
// algebras get equal color multisets, and any isomorphism preserves colors.
std::vector<std::uint64_t> fingerprint_colors(const FinAlgebra& a) {
    const int n = a.size();
    std::vector<std::uint64_t> color(static_cast<std::size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
        for (int e = 0; e < n; ++e) {
            std::string acc;
            acc.reserve(64);
            auto feed = [&](std::uint64_t v) {
                acc.append(reinterpret_cast<const char*>(&v), sizeof v);
            };
            feed(color[(std::size_t)e]);
            for (std::size_t op = 0; op < a.sig().ops.size(); ++op) {
                const int arity = a.sig().ops[op].arity;
                const int o = static_cast<int>(op);
                if (arity == 0) {
                    feed(a.apply(o) == e ? 1 : 0);
                } else if (arity == 1) {
                    feed(color[(std::size_t)a.apply(o, e)]);
                } else {
                    std::vector<std::uint64_t> row;
                    row.reserve(static_cast<std::size_t>(2 * n));
                    for (int c = 0; c < n; ++c) {
                        std::uint64_t h = color[(std::size_t)a.apply(o, e, c)] * 3 +
                                          color[(std::size_t)a.apply(o, c, e)] * 7 +
                                          color[(std::size_t)c] * 31;
                        row.push_back(h);
                    }
                    std::sort(row.begin(), row.end());
                    for (auto v : row) feed(v);
                }
            }
            next[(std::size_t)e] = fnv1a64(acc);
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

} // namespace

std::optional<Hom> find_isomorphism(AlgPtr a, AlgPtr b) {
    if (a->sig() != b->sig()) throw precondition_error("incompatible signatures");
    if (a->size() != b->size()) return std::nullopt;

    auto ca = fingerprint_colors(*a);
    auto cb = fingerprint_colors(*b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    auto gens = generating_sequence(*a);
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (int v = 0; v < b->size(); ++v)
            if (cb[(std::size_t)v] == ca[(std::size_t)gens[gi]]) candidates[gi].push_back(v);

    auto maps = search_maps(*a, *b, true, candidates, gens, Exec::Serial);
    for (auto& m : maps) {
        bool total = std::none_of(m.begin(), m.end(), [](int v) { return v < 0; });
        if (!total) continue;
        if (!Hom::preserves_all(*a, *b, m)) continue;
        Hom h = Hom::make(a, b, m);
        if (h.is_bijective()) return h;
    }
    return std::nullopt;
}

bool isomorphic(AlgPtr a, AlgPtr b) { return find_isomorphism(a, b).has_value(); }

} // namespace bilat
