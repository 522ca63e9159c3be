#include "bilat/birkhoff.hpp"

#include "bilat/common.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/varieties.hpp"

#include <algorithm>

namespace bilat {

namespace {

std::string bits_name(const std::vector<int>& map) {
    std::string s;
    s.reserve(map.size());
    for (int v : map) s.push_back(v ? '1' : '0');
    return s;
}

} // namespace

PriestleyDual priestley_dual(const FinAlgebra& lattice) {
    Variety v = variety_of(lattice);
    if (!is_lattice_variety(v)) throw precondition_error("priestley_dual expects a D or D- algebra");
    auto report = validate(lattice, v);
    if (!report.valid)
        throw validation_error("not a valid distributive lattice: " + report.violations[0].axiom);

    const bool bounded = (v == Variety::D);
    AlgPtr L = make_alg(lattice);
    AlgPtr two = make_alg(canonical(bounded ? "2" : "2lat-"));
    auto homs = enumerate_homs(L, two, Exec::Serial);

    PriestleyDual dual;
    dual.bounded = bounded;
    const int m = static_cast<int>(homs.size());
    dual.poset.leq.assign((std::size_t)m, std::vector<bool>((std::size_t)m, false));
    for (int i = 0; i < m; ++i) {
        dual.hom_maps.push_back(homs[(std::size_t)i].map);
        dual.poset.names.push_back(bits_name(homs[(std::size_t)i].map));
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            bool le = true;
            for (int e = 0; e < lattice.size() && le; ++e)
                le = dual.hom_maps[(std::size_t)i][(std::size_t)e] <=
                     dual.hom_maps[(std::size_t)j][(std::size_t)e];
            dual.poset.leq[(std::size_t)i][(std::size_t)j] = le;
        }

    if (!bounded) {
        for (int i = 0; i < m; ++i) {
            bool all0 = true, all1 = true;
            for (int v2 : dual.hom_maps[(std::size_t)i]) {
                all0 = all0 && v2 == 0;
                all1 = all1 && v2 == 1;
            }
            if (all0) dual.bottom = i;
            if (all1) dual.top = i;
        }
        if (dual.bottom < 0 || dual.top < 0)
            throw theorem_violation("constant maps missing from the unbounded dual");
    }
    return dual;
}

namespace {

std::vector<std::vector<int>> upsets_of(const Poset& x, bool proper_pointed, int bottom, int top) {
    const int n = x.size();
    if (n > 22) throw guard_exceeded("up-set enumeration limited to 22 points");
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int p = 0; p < n && ok; ++p) {
            if (!(mask >> p & 1u)) continue;
            for (int q = 0; q < n && ok; ++q)
                if (x.le(p, q) && !(mask >> q & 1u)) ok = false;
        }
        if (!ok) continue;
        if (proper_pointed) {
            if (!(mask >> top & 1u)) continue;
            if (mask >> bottom & 1u) continue;
        }
        std::vector<int> members;
        for (int p = 0; p < n; ++p)
            if (mask >> p & 1u) members.push_back(p);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

FinAlgebra upset_lattice(const Poset& x, const std::vector<std::vector<int>>& upsets,
                         bool bounded) {
    const std::size_t m = upsets.size();
    std::vector<std::string> names;
    names.reserve(m);
    for (const auto& u : upsets) {
        std::string s = "{";
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (i) s += ",";
            s += x.names[(std::size_t)u[i]];
        }
        s += "}";
        names.push_back(std::move(s));
    }

    auto index_of = [&](const std::vector<int>& u) {
        auto it = std::find(upsets.begin(), upsets.end(), u);
        return static_cast<int>(it - upsets.begin());
    };

    std::vector<int> orr(m * m), andd(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<int> uni, inter;
            std::set_union(upsets[i].begin(), upsets[i].end(), upsets[j].begin(), upsets[j].end(),
                           std::back_inserter(uni));
            std::set_intersection(upsets[i].begin(), upsets[i].end(), upsets[j].begin(),
                                  upsets[j].end(), std::back_inserter(inter));
            orr[i * m + j] = index_of(uni);
            andd[i * m + j] = index_of(inter);
        }

    if (!bounded)
        return FinAlgebra(signature_of(Variety::Du), std::move(names),
                          {std::move(orr), std::move(andd)});

    std::vector<int> all;
    for (int p = 0; p < x.size(); ++p) all.push_back(p);
    int bot = index_of({}), top = index_of(all);
    return FinAlgebra(signature_of(Variety::D), std::move(names),
                      {std::move(orr), std::move(andd), {bot}, {top}});
}

} // namespace

FinAlgebra upset_algebra(const Poset& x) {
    if (!is_partial_order(x)) throw precondition_error("upset_algebra expects a partial order");
    return upset_lattice(x, upsets_of(x, false, -1, -1), true);
}

FinAlgebra upset_algebra(const DoublyPointedSpace& x) {
    if (!is_partial_order(x.poset))
        throw precondition_error("upset_algebra expects a partial order");
    if (x.bottom < 0 || x.top < 0) throw precondition_error("missing distinguished points");
    for (int p = 0; p < x.poset.size(); ++p)
        if (!x.poset.le(x.bottom, p) || !x.poset.le(p, x.top))
            throw precondition_error("distinguished points are not the bounds");
    auto upsets = upsets_of(x.poset, true, x.bottom, x.top);
    if (upsets.empty())
        throw precondition_error("no up-set contains top without bottom (bottom = top?)");
    return upset_lattice(x.poset, upsets, false);
}

DoublyPointedSpace order_dual(const DoublyPointedSpace& x) {
    return {order_dual(x.poset), x.top, x.bottom};
}

Poset coproduct_spaces(const Poset& x, const Poset& y) { return disjoint_union(x, y); }

DoublyPointedSpace coproduct_spaces(const DoublyPointedSpace& x, const DoublyPointedSpace& y) {
    if (x.bottom == x.top || y.bottom == y.top)
        throw precondition_error("P01 coproduct needs distinct endpoints");
    // Points: merged bottom, interior of x, interior of y, merged top.
    DoublyPointedSpace out;
    std::vector<int> xmap((std::size_t)x.poset.size(), -1), ymap((std::size_t)y.poset.size(), -1);
    out.poset.names.push_back("bot");
    out.bottom = 0;
    xmap[(std::size_t)x.bottom] = 0;
    ymap[(std::size_t)y.bottom] = 0;
    for (int p = 0; p < x.poset.size(); ++p)
        if (p != x.bottom && p != x.top) {
            xmap[(std::size_t)p] = static_cast<int>(out.poset.names.size());
            out.poset.names.push_back("l:" + x.poset.names[(std::size_t)p]);
        }
    for (int p = 0; p < y.poset.size(); ++p)
        if (p != y.bottom && p != y.top) {
            ymap[(std::size_t)p] = static_cast<int>(out.poset.names.size());
            out.poset.names.push_back("r:" + y.poset.names[(std::size_t)p]);
        }
    out.top = static_cast<int>(out.poset.names.size());
    out.poset.names.push_back("top");
    xmap[(std::size_t)x.top] = out.top;
    ymap[(std::size_t)y.top] = out.top;

    const int n = out.poset.size();
    out.poset.leq.assign((std::size_t)n, std::vector<bool>((std::size_t)n, false));
    for (int a = 0; a < n; ++a) {
        out.poset.leq[(std::size_t)a][(std::size_t)a] = true;
        out.poset.leq[(std::size_t)out.bottom][(std::size_t)a] = true;
        out.poset.leq[(std::size_t)a][(std::size_t)out.top] = true;
    }
    for (int a = 0; a < x.poset.size(); ++a)
        for (int b = 0; b < x.poset.size(); ++b)
            if (x.poset.le(a, b))
                out.poset.leq[(std::size_t)xmap[(std::size_t)a]][(std::size_t)xmap[(std::size_t)b]] =
                    true;
    for (int a = 0; a < y.poset.size(); ++a)
        for (int b = 0; b < y.poset.size(); ++b)
            if (y.poset.le(a, b))
                out.poset.leq[(std::size_t)ymap[(std::size_t)a]][(std::size_t)ymap[(std::size_t)b]] =
                    true;
    return out;
}

Poset order_of_lattice(const FinAlgebra& lattice) {
    const std::string join = lattice.sig().has("or") ? "or" : "or_t";
    Poset p;
    p.names = lattice.elems();
    const int n = lattice.size();
    p.leq.assign((std::size_t)n, std::vector<bool>((std::size_t)n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            p.leq[(std::size_t)a][(std::size_t)b] = lattice.apply(join, a, b) == b;
    return p;
}

std::vector<int> join_irreducibles(const FinAlgebra& lattice) {
    if (variety_of(lattice) != Variety::D)
        throw precondition_error("join_irreducibles expects a bounded D algebra");
    Poset p = order_of_lattice(lattice);
    auto covers = cover_pairs(p);
    std::vector<int> lower_cover_count((std::size_t)lattice.size(), 0);
    for (auto [a, b] : covers) ++lower_cover_count[(std::size_t)b];
    std::vector<int> out;
    const int bottom = lattice.apply("0");
    for (int e = 0; e < lattice.size(); ++e)
        if (e != bottom && lower_cover_count[(std::size_t)e] == 1) out.push_back(e);
    return out;
}

} // namespace bilat
