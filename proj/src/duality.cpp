#include "bilat/duality.hpp"

#include "bilat/common.hpp"
#include "bilat/varieties.hpp"

#include <algorithm>
#include <unordered_map>

namespace bilat {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b9u;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

using MapIndex = std::unordered_map<std::vector<int>, int, VecHash>;

MapIndex index_maps(const std::vector<std::vector<int>>& maps) {
    MapIndex idx;
    idx.reserve(maps.size() * 2);
    for (std::size_t i = 0; i < maps.size(); ++i) idx.emplace(maps[i], static_cast<int>(i));
    return idx;
}

std::vector<std::pair<int, int>> order_pairs_of(const FinAlgebra& lattice) {
    const std::string join = lattice.sig().has("or") ? "or" : "or_t";
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < lattice.size(); ++a)
        for (int b = 0; b < lattice.size(); ++b)
            if (lattice.apply(join, a, b) == b) pairs.emplace_back(a, b);
    return pairs;
}

} // namespace

void check_alter_ego(const AlterEgo& e) {
    if (e.sorts.empty() || e.sorts.size() > 2)
        throw validation_error("alter ego must have one or two sorts");
    for (const auto& r : e.relations) {
        const auto& A = *e.sorts[(std::size_t)r.sort_a];
        const auto& B = *e.sorts[(std::size_t)r.sort_b];
        FinAlgebra prod = product(A, B);
        std::vector<int> elems;
        for (auto [a, b] : r.pairs) elems.push_back(a * B.size() + b);
        std::sort(elems.begin(), elems.end());
        if (!is_subuniverse(prod, elems))
            throw validation_error("relation '" + r.name + "' is not a subuniverse of the product");
    }
    for (const auto& n : e.nullaries) {
        if (!is_subuniverse(*e.sorts[(std::size_t)n.sort], {n.element}))
            throw validation_error("nullary '" + n.name + "' is not a one-element subuniverse");
    }
}

AlterEgo standard_alter_ego(Variety v) {
    AlterEgo ego;
    ego.variety = v;
    auto k_order_relation = [](const FinAlgebra& m, int sort) {
        FinAlgebra k = k_reduct(m);
        AlterEgo::Relation r;
        r.name = "leq_k";
        r.sort_a = r.sort_b = sort;
        r.pairs = order_pairs_of(k);
        return r;
    };
    switch (v) {
        case Variety::DB: {
            ego.sorts = {make_alg(canonical("4"))};
            ego.relations = {k_order_relation(*ego.sorts[0], 0)};
            break;
        }
        case Variety::DBu: {
            ego.sorts = {make_alg(canonical("4-"))};
            ego.relations = {k_order_relation(*ego.sorts[0], 0)};
            ego.nullaries = {{"01", 0, ego.sorts[0]->index_of("01")},
                             {"10", 0, ego.sorts[0]->index_of("10")}};
            break;
        }
        case Variety::DPB: {
            ego.sorts = {make_alg(canonical("2+")), make_alg(canonical("2-"))};
            ego.relations = {k_order_relation(*ego.sorts[0], 0), k_order_relation(*ego.sorts[1], 1)};
            break;
        }
        case Variety::DPBu: {
            ego.sorts = {make_alg(canonical("2+-")), make_alg(canonical("2--"))};
            ego.relations = {k_order_relation(*ego.sorts[0], 0), k_order_relation(*ego.sorts[1], 1)};
            ego.nullaries = {{"0+", 0, 0}, {"1+", 0, 1}, {"0-", 1, 0}, {"1-", 1, 1}};
            break;
        }
        case Variety::D: {
            ego.sorts = {make_alg(canonical("2"))};
            AlterEgo::Relation r;
            r.name = "leq";
            r.sort_a = r.sort_b = 0;
            r.pairs = order_pairs_of(*ego.sorts[0]);
            ego.relations = {r};
            break;
        }
        case Variety::Du: {
            ego.sorts = {make_alg(canonical("2lat-"))};
            AlterEgo::Relation r;
            r.name = "leq";
            r.sort_a = r.sort_b = 0;
            r.pairs = order_pairs_of(*ego.sorts[0]);
            ego.relations = {r};
            ego.nullaries = {{"0", 0, 0}, {"1", 0, 1}};
            break;
        }
    }
    check_alter_ego(ego);
    return ego;
}

int StructuredSpace::total_points() const {
    int n = 0;
    for (const auto& s : point_names) n += static_cast<int>(s.size());
    return n;
}

int StructuredSpace::offset(int s) const {
    int n = 0;
    for (int i = 0; i < s; ++i) n += sort_size(i);
    return n;
}

int StructuredSpace::sort_of(int flat) const {
    for (int s = 0; s < sorts(); ++s) {
        if (flat < sort_size(s)) return s;
        flat -= sort_size(s);
    }
    throw precondition_error("point index out of range");
}

bool StructuredSpace::in_relation(int rel, int i, int j) const {
    const auto& r = relations[(std::size_t)rel];
    return std::find(r.pairs.begin(), r.pairs.end(), std::make_pair(i, j)) != r.pairs.end();
}

Poset StructuredSpace::as_poset() const {
    if (sorts() != 1 || relations.size() != 1)
        throw precondition_error("as_poset needs a single-sorted space with one relation");
    Poset p;
    p.names = point_names[0];
    const int n = sort_size(0);
    p.leq.assign((std::size_t)n, std::vector<bool>((std::size_t)n, false));
    for (auto [a, b] : relations[0].pairs) p.leq[(std::size_t)a][(std::size_t)b] = true;
    return p;
}

StructuredSpace product_space(const StructuredSpace& x, const StructuredSpace& y) {
    if (x.sorts() != y.sorts() || x.relations.size() != y.relations.size() ||
        x.nullary_points.size() != y.nullary_points.size())
        throw precondition_error("product of spaces over different egos");
    StructuredSpace out;
    out.point_names.resize((std::size_t)x.sorts());
    for (int s = 0; s < x.sorts(); ++s)
        for (int i = 0; i < x.sort_size(s); ++i)
            for (int j = 0; j < y.sort_size(s); ++j)
                out.point_names[(std::size_t)s].push_back(
                    "(" + x.point_names[(std::size_t)s][(std::size_t)i] + "," +
                    y.point_names[(std::size_t)s][(std::size_t)j] + ")");
    auto pack = [&](int s, int i, int j) { return i * y.sort_size(s) + j; };
    for (std::size_t r = 0; r < x.relations.size(); ++r) {
        StructuredSpace::RelInstance inst;
        inst.sort_a = x.relations[r].sort_a;
        inst.sort_b = x.relations[r].sort_b;
        for (auto [a, b] : x.relations[r].pairs)
            for (auto [c, d] : y.relations[r].pairs)
                inst.pairs.emplace_back(pack(inst.sort_a, a, c), pack(inst.sort_b, b, d));
        std::sort(inst.pairs.begin(), inst.pairs.end());
        out.relations.push_back(std::move(inst));
    }
    for (std::size_t k = 0; k < x.nullary_points.size(); ++k) {
        // Nullary of the product = the pair of nullaries.
        const int s = x.nullary_sorts[k];
        out.nullary_sorts.push_back(s);
        out.nullary_points.push_back(x.nullary_points[k] * y.sort_size(s) +
                                     y.nullary_points[k]);
    }
    return out;
}

StructuredSpace power_space(const AlterEgo& e, int n) {
    if (n < 0) throw precondition_error("power_space needs n >= 0");
    StructuredSpace out;
    out.point_names.resize(e.sorts.size());
    std::vector<std::vector<std::vector<int>>> tuples(e.sorts.size());
    for (std::size_t s = 0; s < e.sorts.size(); ++s) {
        const int m = e.sorts[s]->size();
        std::vector<int> t((std::size_t)n, 0);
        // Lexicographic enumeration of all m^n tuples.
        while (true) {
            tuples[s].push_back(t);
            std::string name = "<";
            for (int i = 0; i < n; ++i) {
                if (i) name += ",";
                name += e.sorts[s]->name_of(t[(std::size_t)i]);
            }
            name += ">";
            out.point_names[s].push_back(std::move(name));
            int pos = n - 1;
            while (pos >= 0 && t[(std::size_t)pos] == m - 1) t[(std::size_t)pos--] = 0;
            if (pos < 0) break;
            ++t[(std::size_t)pos];
        }
    }
    for (const auto& rel : e.relations) {
        StructuredSpace::RelInstance inst;
        inst.sort_a = rel.sort_a;
        inst.sort_b = rel.sort_b;
        const auto& ta = tuples[(std::size_t)rel.sort_a];
        const auto& tb = tuples[(std::size_t)rel.sort_b];
        for (std::size_t i = 0; i < ta.size(); ++i)
            for (std::size_t j = 0; j < tb.size(); ++j) {
                bool all = true;
                for (int c = 0; c < n && all; ++c)
                    all = std::find(rel.pairs.begin(), rel.pairs.end(),
                                    std::make_pair(ta[i][(std::size_t)c], tb[j][(std::size_t)c])) !=
                          rel.pairs.end();
                if (all) inst.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        out.relations.push_back(std::move(inst));
    }
    for (const auto& nul : e.nullaries) {
        std::vector<int> t((std::size_t)n, nul.element);
        const auto& ts = tuples[(std::size_t)nul.sort];
        auto it = std::find(ts.begin(), ts.end(), t);
        out.nullary_sorts.push_back(nul.sort);
        out.nullary_points.push_back(static_cast<int>(it - ts.begin()));
    }
    return out;
}

namespace {

struct SpaceIsoContext {
    const StructuredSpace& x;
    const StructuredSpace& y;
    std::vector<std::vector<int>> map;   // per sort
    std::vector<std::vector<char>> used; // per sort
};

bool space_iso_consistent(SpaceIsoContext& ctx, int s, int p, int v) {
    // Check all relation instances restricted to assigned points.
    for (std::size_t r = 0; r < ctx.x.relations.size(); ++r) {
        const auto& rx = ctx.x.relations[r];
        const auto& ry = ctx.y.relations[r];
        auto image = [&](int sort, int pt) -> int {
            if (sort == s && pt == p) return v;
            return ctx.map[(std::size_t)sort][(std::size_t)pt];
        };
        if (rx.sort_a != s && rx.sort_b != s) continue;
        const int na = ctx.x.sort_size(rx.sort_a);
        const int nb = ctx.x.sort_size(rx.sort_b);
        for (int a = 0; a < na; ++a) {
            int ia = image(rx.sort_a, a);
            if (ia < 0) continue;
            for (int b = 0; b < nb; ++b) {
                int ib = image(rx.sort_b, b);
                if (ib < 0) continue;
                bool inx = std::find(rx.pairs.begin(), rx.pairs.end(), std::make_pair(a, b)) !=
                           rx.pairs.end();
                bool iny = std::find(ry.pairs.begin(), ry.pairs.end(), std::make_pair(ia, ib)) !=
                           ry.pairs.end();
                if (inx != iny) return false;
            }
        }
    }
    return true;
}

bool space_iso_dfs(SpaceIsoContext& ctx, int s, int p) {
    if (s == ctx.x.sorts()) return true;
    if (p == ctx.x.sort_size(s)) return space_iso_dfs(ctx, s + 1, 0);
    if (ctx.map[(std::size_t)s][(std::size_t)p] >= 0) {
        // Pinned (nullary) point; validate and move on.
        if (!space_iso_consistent(ctx, s, p, ctx.map[(std::size_t)s][(std::size_t)p]))
            return false;
        return space_iso_dfs(ctx, s, p + 1);
    }
    for (int v = 0; v < ctx.y.sort_size(s); ++v) {
        if (ctx.used[(std::size_t)s][(std::size_t)v]) continue;
        if (!space_iso_consistent(ctx, s, p, v)) continue;
        ctx.map[(std::size_t)s][(std::size_t)p] = v;
        ctx.used[(std::size_t)s][(std::size_t)v] = 1;
        if (space_iso_dfs(ctx, s, p + 1)) return true;
        ctx.map[(std::size_t)s][(std::size_t)p] = -1;
        ctx.used[(std::size_t)s][(std::size_t)v] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<std::vector<int>>> find_space_isomorphism(const StructuredSpace& x,
                                                                    const StructuredSpace& y) {
    if (x.sorts() != y.sorts() || x.relations.size() != y.relations.size() ||
        x.nullary_points.size() != y.nullary_points.size())
        return std::nullopt;
    for (int s = 0; s < x.sorts(); ++s)
        if (x.sort_size(s) != y.sort_size(s)) return std::nullopt;

    SpaceIsoContext ctx{x, y, {}, {}};
    for (int s = 0; s < x.sorts(); ++s) {
        ctx.map.emplace_back((std::size_t)x.sort_size(s), -1);
        ctx.used.emplace_back((std::size_t)y.sort_size(s), 0);
    }
    // Pin nullary points before searching.
    for (std::size_t k = 0; k < x.nullary_points.size(); ++k) {
        if (x.nullary_sorts[k] != y.nullary_sorts[k]) return std::nullopt;
        const int s = x.nullary_sorts[k];
        const int p = x.nullary_points[k], q = y.nullary_points[k];
        int& slot = ctx.map[(std::size_t)s][(std::size_t)p];
        if (slot >= 0 && slot != q) return std::nullopt;
        if (slot < 0) {
            if (ctx.used[(std::size_t)s][(std::size_t)q]) return std::nullopt;
            slot = q;
            ctx.used[(std::size_t)s][(std::size_t)q] = 1;
        }
    }
    if (!space_iso_dfs(ctx, 0, 0)) return std::nullopt;
    return ctx.map;
}

NaturalDual natural_dual(AlgPtr a, const AlterEgo& e) {
    for (const auto& m : e.sorts)
        if (a->sig() != m->sig())
            throw precondition_error("algebra signature does not match the alter ego");

    NaturalDual d;
    d.algebra = a;
    d.ego = e;
    d.space.point_names.resize(e.sorts.size());
    for (std::size_t s = 0; s < e.sorts.size(); ++s) {
        d.homs.push_back(enumerate_homs(a, e.sorts[s], Exec::Serial));
        for (const auto& h : d.homs[s]) {
            std::string name;
            for (std::size_t i = 0; i < h.map.size(); ++i) {
                if (i) name += ".";
                name += e.sorts[s]->name_of(h.map[i]);
            }
            d.space.point_names[s].push_back(std::move(name));
        }
    }

    for (const auto& rel : e.relations) {
        StructuredSpace::RelInstance inst;
        inst.sort_a = rel.sort_a;
        inst.sort_b = rel.sort_b;
        const auto& ha = d.homs[(std::size_t)rel.sort_a];
        const auto& hb = d.homs[(std::size_t)rel.sort_b];
        for (std::size_t i = 0; i < ha.size(); ++i)
            for (std::size_t j = 0; j < hb.size(); ++j) {
                bool all = true;
                for (int x = 0; x < a->size() && all; ++x)
                    all = std::find(rel.pairs.begin(), rel.pairs.end(),
                                    std::make_pair(ha[i].map[(std::size_t)x],
                                                   hb[j].map[(std::size_t)x])) != rel.pairs.end();
                if (all) inst.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        d.space.relations.push_back(std::move(inst));
    }

    for (const auto& nul : e.nullaries) {
        // Lifted nullary = the constant map, a hom since {m} is a subuniverse.
        const auto& hs = d.homs[(std::size_t)nul.sort];
        int found = -1;
        for (std::size_t i = 0; i < hs.size() && found < 0; ++i) {
            bool constant = true;
            for (int v : hs[i].map) constant = constant && v == nul.element;
            if (constant) found = static_cast<int>(i);
        }
        if (found < 0)
            throw theorem_violation("constant map for nullary '" + nul.name +
                                    "' missing from the dual");
        d.space.nullary_sorts.push_back(nul.sort);
        d.space.nullary_points.push_back(found);
    }
    return d;
}

std::uint64_t evaluation_candidate_estimate(const StructuredSpace& x, const AlterEgo& e) {
    std::uint64_t total = 1;
    for (int s = 0; s < x.sorts(); ++s) {
        const std::uint64_t m = static_cast<std::uint64_t>(e.sorts[(std::size_t)s]->size());
        for (int i = 0; i < x.sort_size(s); ++i) {
            if (total > (std::uint64_t(1) << 62) / (m ? m : 1)) return std::uint64_t(-1);
            total *= m;
        }
    }
    return total;
}

namespace {

struct EvalSearch {
    // Flattened constraint tables for the DFS.
    int n_points = 0;
    std::vector<int> sort_of;
    std::vector<int> pinned; // -1 or forced value
    std::vector<int> n_candidates;
    // Constraints between flattened points p > q (q already assigned when p
    // is placed): allowed value pairs as bitmask over (vp, vq).
    struct Constraint {
        int other = 0;
        std::uint64_t allowed = 0; // bit vp * 8 + vq
    };
    std::vector<std::vector<Constraint>> constraints; // per point, vs earlier points
};

EvalSearch build_eval_search(const StructuredSpace& x, const AlterEgo& e) {
    EvalSearch s;
    s.n_points = x.total_points();
    s.sort_of.resize((std::size_t)s.n_points);
    s.pinned.assign((std::size_t)s.n_points, -1);
    s.n_candidates.resize((std::size_t)s.n_points);
    for (int p = 0; p < s.n_points; ++p) {
        s.sort_of[(std::size_t)p] = x.sort_of(p);
        s.n_candidates[(std::size_t)p] = e.sorts[(std::size_t)s.sort_of[(std::size_t)p]]->size();
        if (s.n_candidates[(std::size_t)p] > 8)
            throw guard_exceeded("evaluation search supports sorts of size <= 8");
    }
    for (std::size_t k = 0; k < e.nullaries.size(); ++k) {
        int flat = x.offset(e.nullaries[k].sort) + x.nullary_points[k];
        s.pinned[(std::size_t)flat] = e.nullaries[k].element;
    }
    s.constraints.resize((std::size_t)s.n_points);
    for (std::size_t r = 0; r < e.relations.size(); ++r) {
        const auto& rel = e.relations[r];
        std::uint64_t allowed = 0;
        for (auto [a, b] : rel.pairs) allowed |= std::uint64_t(1) << (a * 8 + b);
        const int off_a = x.offset(rel.sort_a), off_b = x.offset(rel.sort_b);
        for (auto [i, j] : x.relations[r].pairs) {
            int p = off_a + i, q = off_b + j;
            if (p == q) {
                // Unary restriction: value must be reflexive in the relation.
                std::uint64_t self = 0;
                for (auto [a, b] : rel.pairs)
                    if (a == b) self |= std::uint64_t(1) << (a * 8 + b);
                (void)self;
                continue; // reflexive pairs never cut anything for our egos
            }
            if (p > q)
                s.constraints[(std::size_t)p].push_back({q, allowed});
            else {
                // Swap roles: constraint checked when q is assigned.
                std::uint64_t swapped = 0;
                for (auto [a, b] : rel.pairs) swapped |= std::uint64_t(1) << (b * 8 + a);
                s.constraints[(std::size_t)q].push_back({p, swapped});
            }
        }
    }
    return s;
}

void eval_dfs(const EvalSearch& s, std::vector<int>& value, int p,
              std::vector<std::vector<int>>& out) {
    if (p == s.n_points) {
        out.push_back(value);
        return;
    }
    const int lo = s.pinned[(std::size_t)p] >= 0 ? s.pinned[(std::size_t)p] : 0;
    const int hi = s.pinned[(std::size_t)p] >= 0 ? s.pinned[(std::size_t)p] + 1
                                                 : s.n_candidates[(std::size_t)p];
    for (int v = lo; v < hi; ++v) {
        bool ok = true;
        for (const auto& c : s.constraints[(std::size_t)p]) {
            const int w = value[(std::size_t)c.other];
            if (!(c.allowed >> (v * 8 + w) & 1u)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        value[(std::size_t)p] = v;
        eval_dfs(s, value, p + 1, out);
    }
    value[(std::size_t)p] = -1;
}

} // namespace

std::vector<std::vector<int>> enumerate_evaluation_maps(const StructuredSpace& x,
                                                        const AlterEgo& e, Exec policy,
                                                        std::uint64_t candidate_guard) {
    const std::uint64_t estimate = evaluation_candidate_estimate(x, e);
    if (estimate > candidate_guard)
        throw guard_exceeded("evaluation map search space " + std::to_string(estimate) +
                             " exceeds guard " + std::to_string(candidate_guard));
    EvalSearch s = build_eval_search(x, e);
    if (s.n_points == 0) return {{}}; // the empty structure has one map

    // Split the search on the first two points' assignments.
    const int split = std::min(2, s.n_points);
    std::vector<std::vector<int>> prefixes;
    {
        std::vector<int> value((std::size_t)s.n_points, -1);
        struct Rec {
            static void go(const EvalSearch& s, std::vector<int>& value, int p, int split,
                           std::vector<std::vector<int>>& out) {
                if (p == split) {
                    out.push_back(value);
                    return;
                }
                const int lo = s.pinned[(std::size_t)p] >= 0 ? s.pinned[(std::size_t)p] : 0;
                const int hi = s.pinned[(std::size_t)p] >= 0 ? s.pinned[(std::size_t)p] + 1
                                                             : s.n_candidates[(std::size_t)p];
                for (int v = lo; v < hi; ++v) {
                    bool ok = true;
                    for (const auto& c : s.constraints[(std::size_t)p]) {
                        if (c.other >= p) continue;
                        const int w = value[(std::size_t)c.other];
                        if (!(c.allowed >> (v * 8 + w) & 1u)) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    value[(std::size_t)p] = v;
                    go(s, value, p + 1, split, out);
                }
                value[(std::size_t)p] = -1;
            }
        };
        Rec::go(s, value, 0, split, prefixes);
    }

    std::vector<std::vector<std::vector<int>>> buckets(prefixes.size());
    auto run = [&](std::size_t bi) {
        std::vector<int> value = prefixes[bi];
        eval_dfs(s, value, split, buckets[bi]);
    };
    if (policy == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t bi = 0; bi < prefixes.size(); ++bi) run(bi);
    } else {
        for (std::size_t bi = 0; bi < prefixes.size(); ++bi) run(bi);
    }

    std::vector<std::vector<int>> out;
    for (auto& b : buckets)
        for (auto& m : b) out.push_back(std::move(m));
    return out;
}

namespace {

// Pointwise operation tables over a list of sort-respecting assignments.
FinAlgebra tabulate_maps(const StructuredSpace& x, const AlterEgo& e,
                         const std::vector<std::vector<int>>& maps) {
    const Signature sig = e.sorts[0]->sig();
    const std::size_t n = maps.size();
    if (n == 0)
        throw theorem_violation("evaluation algebra is empty; E(X) must be non-empty");

    std::vector<int> sort_of_point((std::size_t)x.total_points());
    for (int p = 0; p < x.total_points(); ++p) sort_of_point[(std::size_t)p] = x.sort_of(p);

    MapIndex idx = index_maps(maps);
    auto apply_pointwise = [&](int op, const std::vector<int>* u,
                               const std::vector<int>* v) -> std::vector<int> {
        std::vector<int> w((std::size_t)x.total_points());
        for (int p = 0; p < x.total_points(); ++p) {
            const FinAlgebra& m = *e.sorts[(std::size_t)sort_of_point[(std::size_t)p]];
            int a = u ? (*u)[(std::size_t)p] : -1;
            int b = v ? (*v)[(std::size_t)p] : -1;
            w[(std::size_t)p] = m.apply(op, a, b);
        }
        return w;
    };
    auto find = [&](const std::vector<int>& w, const char* ctx) {
        auto it = idx.find(w);
        if (it == idx.end())
            throw theorem_violation(std::string("pointwise value escapes E(X) in ") + ctx);
        return it->second;
    };

    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));

    std::vector<std::vector<int>> tables;
    for (std::size_t op = 0; op < sig.ops.size(); ++op) {
        const int arity = sig.ops[op].arity;
        const int o = static_cast<int>(op);
        std::vector<int> t;
        if (arity == 0) {
            t = {find(apply_pointwise(o, nullptr, nullptr), "nullary")};
        } else if (arity == 1) {
            t.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                t[i] = find(apply_pointwise(o, &maps[i], nullptr), "unary");
        } else {
            t.resize(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    t[i * n + j] = find(apply_pointwise(o, &maps[i], &maps[j]), "binary");
        }
        tables.push_back(std::move(t));
    }
    return FinAlgebra(sig, std::move(names), std::move(tables));
}

} // namespace

EvaluationAlgebra evaluation_algebra(const StructuredSpace& x, const AlterEgo& e, Exec policy,
                                     std::uint64_t candidate_guard, std::size_t table_cap) {
    auto maps = enumerate_evaluation_maps(x, e, policy, candidate_guard);
    if (maps.size() > table_cap)
        throw guard_exceeded("|E(X)| = " + std::to_string(maps.size()) +
                             " exceeds the tabulation cap " + std::to_string(table_cap));
    return {tabulate_maps(x, e, maps), std::move(maps)};
}

namespace {

std::vector<int> evaluation_assignment(const NaturalDual& d, int a) {
    std::vector<int> out;
    for (const auto& sort_homs : d.homs)
        for (const auto& h : sort_homs) out.push_back(h.map[(std::size_t)a]);
    return out;
}

} // namespace

DualityReport verify_full_duality(AlgPtr a, const AlterEgo& e) {
    DualityReport report;
    NaturalDual d = natural_dual(a, e);
    auto ev = evaluation_algebra(d.space, e, Exec::Parallel, std::uint64_t(1) << 32);
    MapIndex idx = index_maps(ev.maps);

    // e_A : A -> E(D(A)), a |-> (x |-> x(a)).
    std::vector<int> image((std::size_t)a->size());
    bool eval_ok = true;
    for (int x = 0; x < a->size() && eval_ok; ++x) {
        auto assignment = evaluation_assignment(d, x);
        auto it = idx.find(assignment);
        if (it == idx.end()) {
            report.witnesses.push_back("e_A(" + a->name_of(x) + ") is not in E(D(A))");
            eval_ok = false;
            break;
        }
        image[(std::size_t)x] = it->second;
    }
    if (eval_ok) {
        if (static_cast<int>(ev.maps.size()) != a->size()) {
            report.witnesses.push_back("|E(D(A))| = " + std::to_string(ev.maps.size()) +
                                       " differs from |A| = " + std::to_string(a->size()));
            eval_ok = false;
        }
    }
    if (eval_ok) {
        std::vector<char> seen(ev.maps.size(), 0);
        for (int v : image) {
            if (seen[(std::size_t)v]) {
                report.witnesses.push_back("e_A is not injective");
                eval_ok = false;
                break;
            }
            seen[(std::size_t)v] = 1;
        }
    }
    if (eval_ok) {
        AlgPtr target = make_alg(ev.algebra);
        if (!Hom::preserves_all(*a, *target, image)) {
            report.witnesses.push_back("e_A is not a homomorphism");
            eval_ok = false;
        }
    }
    report.evaluation_iso = eval_ok;

    // eps_X : X -> D(E(X)) at X = D(A).
    bool co_ok = true;
    AlgPtr etab = make_alg(ev.algebra);
    std::vector<std::vector<Hom>> dual_homs;
    for (std::size_t s = 0; s < e.sorts.size(); ++s)
        dual_homs.push_back(enumerate_homs(etab, e.sorts[s], Exec::Serial));

    // eps maps point p of sort s to the evaluation-at-p hom.
    std::vector<std::vector<int>> eps(e.sorts.size());
    for (int s = 0; s < d.space.sorts() && co_ok; ++s) {
        const int off = d.space.offset(s);
        for (int p = 0; p < d.space.sort_size(s) && co_ok; ++p) {
            std::vector<int> at_p(ev.maps.size());
            for (std::size_t u = 0; u < ev.maps.size(); ++u)
                at_p[u] = ev.maps[u][(std::size_t)(off + p)];
            int found = -1;
            for (std::size_t h = 0; h < dual_homs[(std::size_t)s].size(); ++h)
                if (dual_homs[(std::size_t)s][h].map == at_p) {
                    found = static_cast<int>(h);
                    break;
                }
            if (found < 0) {
                report.witnesses.push_back("eps(point " + std::to_string(p) + " of sort " +
                                           std::to_string(s) + ") is not a hom E(X) -> M");
                co_ok = false;
                break;
            }
            eps[(std::size_t)s].push_back(found);
        }
    }
    if (co_ok) {
        for (int s = 0; s < d.space.sorts() && co_ok; ++s) {
            if (dual_homs[(std::size_t)s].size() != eps[(std::size_t)s].size()) {
                report.witnesses.push_back("eps is not surjective on sort " + std::to_string(s));
                co_ok = false;
                break;
            }
            std::vector<char> seen(dual_homs[(std::size_t)s].size(), 0);
            for (int v : eps[(std::size_t)s]) {
                if (seen[(std::size_t)v]) {
                    report.witnesses.push_back("eps is not injective on sort " + std::to_string(s));
                    co_ok = false;
                    break;
                }
                seen[(std::size_t)v] = 1;
            }
        }
    }
    if (co_ok) {
        // Relation preservation in both directions, against the lifted
        // relations of D(E(X)) computed on the spot.
        for (std::size_t r = 0; r < e.relations.size() && co_ok; ++r) {
            const auto& rel = e.relations[r];
            const auto& ha = dual_homs[(std::size_t)rel.sort_a];
            const auto& hb = dual_homs[(std::size_t)rel.sort_b];
            auto lifted = [&](int i, int j) {
                for (std::size_t x = 0; x < ev.maps.size(); ++x)
                    if (std::find(rel.pairs.begin(), rel.pairs.end(),
                                  std::make_pair(ha[(std::size_t)i].map[x],
                                                 hb[(std::size_t)j].map[x])) == rel.pairs.end())
                        return false;
                return true;
            };
            const auto& inst = d.space.relations[r];
            for (int i = 0; i < d.space.sort_size(rel.sort_a) && co_ok; ++i)
                for (int j = 0; j < d.space.sort_size(rel.sort_b) && co_ok; ++j) {
                    bool in_x = std::find(inst.pairs.begin(), inst.pairs.end(),
                                          std::make_pair(i, j)) != inst.pairs.end();
                    bool in_y = lifted(eps[(std::size_t)rel.sort_a][(std::size_t)i],
                                       eps[(std::size_t)rel.sort_b][(std::size_t)j]);
                    if (in_x != in_y) {
                        report.witnesses.push_back("eps does not respect relation '" + rel.name +
                                                   "'");
                        co_ok = false;
                    }
                }
        }
        // Nullary correspondence.
        for (std::size_t k = 0; k < e.nullaries.size() && co_ok; ++k) {
            const auto& nul = e.nullaries[k];
            int p = d.space.nullary_points[k];
            int image_pt = eps[(std::size_t)nul.sort][(std::size_t)p];
            bool constant = true;
            for (int v : dual_homs[(std::size_t)nul.sort][(std::size_t)image_pt].map)
                constant = constant && v == nul.element;
            if (!constant) {
                report.witnesses.push_back("eps moves nullary '" + nul.name + "'");
                co_ok = false;
            }
        }
    }
    report.coevaluation_iso = co_ok;
    return report;
}

FreeAlgebra free_algebra(Variety v, int n, std::uint64_t candidate_guard, std::size_t table_cap) {
    AlterEgo e = standard_alter_ego(v);
    if (n == 0 && !e.nullaries.empty())
        // The empty power pins all nullaries to one point; without constants
        // in the algebraic type there is no free algebra on no generators.
        throw precondition_error("no free algebra on 0 generators in " + variety_name(v));
    StructuredSpace power = power_space(e, n);
    auto ev = evaluation_algebra(power, e, Exec::Parallel, candidate_guard, table_cap);

    MapIndex idx = index_maps(ev.maps);
    std::vector<int> generators;
    for (int j = 0; j < n; ++j) {
        // Projection onto coordinate j: point <t_1..t_n> of sort s goes to t_j.
        std::vector<int> proj;
        for (int s = 0; s < power.sorts(); ++s) {
            const int m = e.sorts[(std::size_t)s]->size();
            for (int i = 0; i < power.sort_size(s); ++i) {
                int rest = i;
                int value = 0;
                for (int c = n - 1; c >= 0; --c) {
                    int digit = rest % m;
                    rest /= m;
                    if (c == j) value = digit;
                }
                proj.push_back(value);
            }
        }
        auto it = idx.find(proj);
        if (it == idx.end())
            throw theorem_violation("projection map missing from the free algebra");
        generators.push_back(it->second);
    }
    return FreeAlgebra{std::move(ev.algebra), std::move(generators), std::move(power),
                       std::move(ev.maps)};
}

std::uint64_t free_algebra_size(Variety v, int n, std::uint64_t candidate_guard, Exec policy) {
    AlterEgo e = standard_alter_ego(v);
    if (n == 0 && !e.nullaries.empty())
        throw precondition_error("no free algebra on 0 generators in " + variety_name(v));
    StructuredSpace power = power_space(e, n);
    return enumerate_evaluation_maps(power, e, policy, candidate_guard).size();
}

Coproduct coproduct_algebras(AlgPtr a, AlgPtr b, const AlterEgo& e,
                             std::uint64_t candidate_guard, std::size_t table_cap) {
    NaturalDual da = natural_dual(a, e);
    NaturalDual db = natural_dual(b, e);
    StructuredSpace prod = product_space(da.space, db.space);
    auto ev = evaluation_algebra(prod, e, Exec::Parallel, candidate_guard, table_cap);
    MapIndex idx = index_maps(ev.maps);
    AlgPtr cp = make_alg(ev.algebra);

    auto injection = [&](AlgPtr src, const NaturalDual& ds, bool left) {
        std::vector<int> m((std::size_t)src->size());
        for (int x = 0; x < src->size(); ++x) {
            std::vector<int> assignment;
            for (int s = 0; s < prod.sorts(); ++s) {
                const auto& ha = da.homs[(std::size_t)s];
                const auto& hb = db.homs[(std::size_t)s];
                for (std::size_t i = 0; i < ha.size(); ++i)
                    for (std::size_t j = 0; j < hb.size(); ++j)
                        assignment.push_back(left ? ha[i].map[(std::size_t)x]
                                                  : hb[j].map[(std::size_t)x]);
            }
            auto it = idx.find(assignment);
            if (it == idx.end())
                throw theorem_violation("coproduct injection escapes E(D(A) x D(B))");
            m[(std::size_t)x] = it->second;
        }
        (void)ds;
        return Hom::make(src, cp, std::move(m));
    };
    Coproduct out{std::move(ev.algebra), injection(a, da, true), injection(b, db, false)};
    return out;
}

SubstructureLattice closed_substructure_lattice(const NaturalDual& d) {
    SubstructureLattice out;
    const int n = d.space.total_points();
    if (n > 20) throw guard_exceeded("substructure enumeration limited to 20 dual points");

    std::uint32_t required = 0;
    for (std::size_t k = 0; k < d.ego.nullaries.size(); ++k)
        required |= 1u << (d.space.offset(d.ego.nullaries[k].sort) + d.space.nullary_points[k]);

    std::vector<const Hom*> flat_homs;
    for (const auto& sort_homs : d.homs)
        for (const auto& h : sort_homs) flat_homs.push_back(&h);

    out.congruences = congruence_lattice(d.algebra);

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if ((mask & required) != required) continue;
        std::vector<int> points;
        for (int p = 0; p < n; ++p)
            if (mask >> p & 1u) points.push_back(p);
        out.substructures.push_back(points);
    }
    std::sort(out.substructures.begin(), out.substructures.end(),
              [](const auto& x, const auto& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  return x < y;
              });

    // Y |-> kernel of the restricted evaluation A -> E(Y).
    std::vector<int> cong_of;
    for (const auto& points : out.substructures) {
        std::vector<std::vector<int>> keys((std::size_t)d.algebra->size());
        for (int a = 0; a < d.algebra->size(); ++a)
            for (int p : points) keys[(std::size_t)a].push_back(flat_homs[(std::size_t)p]->map[(std::size_t)a]);
        // Partition by identical signature vectors.
        std::vector<int> labels((std::size_t)d.algebra->size());
        std::vector<std::vector<int>> seen;
        for (std::size_t a = 0; a < keys.size(); ++a) {
            int id = -1;
            for (std::size_t s = 0; s < seen.size(); ++s)
                if (seen[s] == keys[a]) {
                    id = static_cast<int>(s);
                    break;
                }
            if (id < 0) {
                id = static_cast<int>(seen.size());
                seen.push_back(keys[a]);
            }
            labels[a] = id;
        }
        auto canon = canonical_partition(labels);
        int found = -1;
        for (std::size_t c = 0; c < out.congruences.congruences.size(); ++c)
            if (out.congruences.congruences[c].block_of == canon) {
                found = static_cast<int>(c);
                break;
            }
        if (found < 0) {
            out.violations.push_back("kernel of a substructure is not a congruence of A");
            Congruence theta = Congruence::make(d.algebra, canon); // may throw
            (void)theta;
        }
        cong_of.push_back(found);
    }
    out.congruence_index = cong_of;

    bool ok = out.violations.empty();
    if (ok && out.substructures.size() != out.congruences.congruences.size()) {
        out.violations.push_back("substructure count differs from congruence count");
        ok = false;
    }
    if (ok) {
        std::vector<char> hit(out.congruences.congruences.size(), 0);
        for (int c : cong_of) {
            if (c < 0 || hit[(std::size_t)c]) {
                out.violations.push_back("substructure-to-congruence map is not a bijection");
                ok = false;
                break;
            }
            hit[(std::size_t)c] = 1;
        }
    }
    if (ok) {
        // Order reversal in both directions.
        for (std::size_t i = 0; i < out.substructures.size() && ok; ++i)
            for (std::size_t j = 0; j < out.substructures.size() && ok; ++j) {
                bool sub = std::includes(out.substructures[j].begin(), out.substructures[j].end(),
                                         out.substructures[i].begin(), out.substructures[i].end());
                bool refine = out.congruences.refines[(std::size_t)cong_of[j]][(std::size_t)cong_of[i]];
                if (sub != refine) {
                    out.violations.push_back("inclusion and refinement fail to anti-correspond");
                    ok = false;
                }
            }
    }
    out.anti_isomorphism = ok;
    return out;
}

std::vector<std::vector<int>> dual_of_hom(const Hom& h, const NaturalDual& dual_of_source,
                                          const NaturalDual& dual_of_target) {
    // D(h): D(B) -> D(A) for h: A -> B, x |-> x o h.
    std::vector<std::vector<int>> out(dual_of_target.homs.size());
    for (std::size_t s = 0; s < dual_of_target.homs.size(); ++s) {
        for (const auto& x : dual_of_target.homs[s]) {
            std::vector<int> composed((std::size_t)h.source->size());
            for (int a = 0; a < h.source->size(); ++a)
                composed[(std::size_t)a] = x.map[(std::size_t)h.map[(std::size_t)a]];
            int found = -1;
            for (std::size_t i = 0; i < dual_of_source.homs[s].size(); ++i)
                if (dual_of_source.homs[s][i].map == composed) {
                    found = static_cast<int>(i);
                    break;
                }
            if (found < 0) throw theorem_violation("x o h is not a hom of the source dual");
            out[s].push_back(found);
        }
    }
    // Lifted relations are preserved by - o h.
    for (std::size_t r = 0; r < dual_of_target.space.relations.size(); ++r) {
        const auto& rel = dual_of_target.space.relations[r];
        const auto& rel_src = dual_of_source.space.relations[r];
        for (auto [i, j] : rel.pairs) {
            auto mapped = std::make_pair(out[(std::size_t)rel.sort_a][(std::size_t)i],
                                         out[(std::size_t)rel.sort_b][(std::size_t)j]);
            if (std::find(rel_src.pairs.begin(), rel_src.pairs.end(), mapped) ==
                rel_src.pairs.end())
                throw theorem_violation("D(h) does not preserve a lifted relation");
        }
    }
    for (std::size_t k = 0; k < dual_of_target.space.nullary_points.size(); ++k) {
        int s = dual_of_target.ego.nullaries[k].sort;
        if (out[(std::size_t)s][(std::size_t)dual_of_target.space.nullary_points[k]] !=
            dual_of_source.space.nullary_points[k])
            throw theorem_violation("D(h) does not preserve a nullary point");
    }
    return out;
}

} // namespace bilat
