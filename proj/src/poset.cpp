#include "bilat/poset.hpp"

#include "bilat/common.hpp"

#include <algorithm>

namespace bilat {

Poset Poset::discrete(std::vector<std::string> names) {
    Poset p;
    const std::size_t n = names.size();
    p.names = std::move(names);
    p.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) p.leq[i][i] = true;
    return p;
}

Poset Poset::chain(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    Poset p = discrete(std::move(names));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) p.leq[(std::size_t)i][(std::size_t)j] = true;
    return p;
}

bool is_reflexive(const Poset& p) {
    for (int a = 0; a < p.size(); ++a)
        if (!p.le(a, a)) return false;
    return true;
}

bool is_transitive(const Poset& p) {
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!p.le(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (p.le(b, c) && !p.le(a, c)) return false;
        }
    return true;
}

bool is_antisymmetric(const Poset& p) {
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p.le(a, b) && p.le(b, a)) return false;
    return true;
}

bool is_preorder(const Poset& p) { return is_reflexive(p) && is_transitive(p); }

bool is_partial_order(const Poset& p) { return is_preorder(p) && is_antisymmetric(p); }

Poset order_dual(const Poset& p) {
    Poset d = p;
    for (std::size_t i = 0; i < d.names.size(); ++i) d.names[i] = p.names[i];
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) d.leq[(std::size_t)a][(std::size_t)b] = p.le(b, a);
    return d;
}

Poset disjoint_union(const Poset& x, const Poset& y) {
    Poset out;
    for (const auto& n : x.names) out.names.push_back("l:" + n);
    for (const auto& n : y.names) out.names.push_back("r:" + n);
    const int n = out.size();
    out.leq.assign((std::size_t)n, std::vector<bool>((std::size_t)n, false));
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b) out.leq[(std::size_t)a][(std::size_t)b] = x.le(a, b);
    for (int a = 0; a < y.size(); ++a)
        for (int b = 0; b < y.size(); ++b)
            out.leq[(std::size_t)(x.size() + a)][(std::size_t)(x.size() + b)] = y.le(a, b);
    return out;
}

Poset product_poset(const Poset& x, const Poset& y) {
    Poset out;
    for (const auto& nx : x.names)
        for (const auto& ny : y.names) out.names.push_back("(" + nx + "," + ny + ")");
    const int n = out.size();
    out.leq.assign((std::size_t)n, std::vector<bool>((std::size_t)n, false));
    auto pack = [&](int a, int b) { return a * y.size() + b; };
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < y.size(); ++b)
            for (int c = 0; c < x.size(); ++c)
                for (int d = 0; d < y.size(); ++d)
                    out.leq[(std::size_t)pack(a, b)][(std::size_t)pack(c, d)] =
                        x.le(a, c) && y.le(b, d);
    return out;
}

Poset induced_subposet(const Poset& p, const std::vector<int>& points) {
    Poset out;
    for (int q : points) out.names.push_back(p.names[(std::size_t)q]);
    const std::size_t n = points.size();
    out.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out.leq[a][b] = p.le(points[a], points[b]);
    return out;
}

std::optional<int> poset_bottom(const Poset& p) {
    for (int a = 0; a < p.size(); ++a) {
        bool below_all = true;
        for (int b = 0; b < p.size() && below_all; ++b) below_all = p.le(a, b);
        if (below_all) return a;
    }
    return std::nullopt;
}

std::optional<int> poset_top(const Poset& p) {
    for (int a = 0; a < p.size(); ++a) {
        bool above_all = true;
        for (int b = 0; b < p.size() && above_all; ++b) above_all = p.le(b, a);
        if (above_all) return a;
    }
    return std::nullopt;
}

std::optional<int> poset_join(const Poset& p, int a, int b) {
    std::optional<int> best;
    for (int u = 0; u < p.size(); ++u) {
        if (!p.le(a, u) || !p.le(b, u)) continue;
        if (!best || p.le(u, *best)) best = u;
    }
    if (!best) return std::nullopt;
    for (int u = 0; u < p.size(); ++u)
        if (p.le(a, u) && p.le(b, u) && !p.le(*best, u)) return std::nullopt;
    return best;
}

std::optional<int> poset_meet(const Poset& p, int a, int b) {
    std::optional<int> best;
    for (int u = 0; u < p.size(); ++u) {
        if (!p.le(u, a) || !p.le(u, b)) continue;
        if (!best || p.le(*best, u)) best = u;
    }
    if (!best) return std::nullopt;
    for (int u = 0; u < p.size(); ++u)
        if (p.le(u, a) && p.le(u, b) && !p.le(u, *best)) return std::nullopt;
    return best;
}

bool poset_is_lattice(const Poset& p) {
    if (p.size() == 0) return false;
    for (int a = 0; a < p.size(); ++a)
        for (int b = a; b < p.size(); ++b)
            if (!poset_join(p, a, b) || !poset_meet(p, a, b)) return false;
    return true;
}

std::vector<int> order_interval(const Poset& p, int x, int y) {
    std::vector<int> out;
    for (int z = 0; z < p.size(); ++z)
        if (p.le(x, z) && p.le(z, y)) out.push_back(z);
    return out;
}

std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
    std::vector<std::pair<int, int>> out;
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !p.le(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && p.le(a, c) && p.le(c, b)) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

namespace {

std::vector<std::pair<int, int>> degree_pairs(const Poset& p) {
    std::vector<std::pair<int, int>> deg((std::size_t)p.size());
    for (int a = 0; a < p.size(); ++a) {
        int down = 0, up = 0;
        for (int b = 0; b < p.size(); ++b) {
            if (p.le(b, a)) ++down;
            if (p.le(a, b)) ++up;
        }
        deg[(std::size_t)a] = {down, up};
    }
    return deg;
}

bool poset_iso_dfs(const Poset& x, const Poset& y, std::vector<int>& map,
                   std::vector<char>& used, int next,
                   const std::vector<std::pair<int, int>>& dx,
                   const std::vector<std::pair<int, int>>& dy) {
    if (next == x.size()) return true;
    for (int v = 0; v < y.size(); ++v) {
        if (used[(std::size_t)v] || dx[(std::size_t)next] != dy[(std::size_t)v]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev) {
            ok = (x.le(prev, next) == y.le(map[(std::size_t)prev], v)) &&
                 (x.le(next, prev) == y.le(v, map[(std::size_t)prev]));
        }
        if (!ok) continue;
        map[(std::size_t)next] = v;
        used[(std::size_t)v] = 1;
        if (poset_iso_dfs(x, y, map, used, next + 1, dx, dy)) return true;
        used[(std::size_t)v] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_poset_isomorphism(const Poset& x, const Poset& y) {
    if (x.size() != y.size()) return std::nullopt;
    auto dx = degree_pairs(x), dy = degree_pairs(y);
    {
        auto sx = dx, sy = dy;
        std::sort(sx.begin(), sx.end());
        std::sort(sy.begin(), sy.end());
        if (sx != sy) return std::nullopt;
    }
    std::vector<int> map((std::size_t)x.size(), -1);
    std::vector<char> used((std::size_t)y.size(), 0);
    if (poset_iso_dfs(x, y, map, used, 0, dx, dy)) return map;
    return std::nullopt;
}

} // namespace bilat
