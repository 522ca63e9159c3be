#include "bilat/algebra.hpp"

#include "bilat/common.hpp"

#include <algorithm>
#include <set>

namespace bilat {

FinAlgebra::FinAlgebra(Signature sig, std::vector<std::string> elems,
                       std::vector<std::vector<int>> tables)
    : sig_(std::move(sig)), elems_(std::move(elems)), tables_(std::move(tables)) {
    if (elems_.empty()) throw validation_error("algebra universe must be non-empty");
    for (std::size_t i = 0; i < sig_.ops.size(); ++i)
        for (std::size_t j = i + 1; j < sig_.ops.size(); ++j)
            if (sig_.ops[i].name == sig_.ops[j].name)
                throw validation_error("duplicate operation symbol: " + sig_.ops[i].name);
    if (tables_.size() != sig_.ops.size())
        throw validation_error("table count does not match signature");
    const std::size_t n = elems_.size();
    for (std::size_t i = 0; i < tables_.size(); ++i) {
        const int arity = sig_.ops[i].arity;
        const std::size_t want = arity == 0 ? 1 : arity == 1 ? n : n * n;
        if (tables_[i].size() != want)
            throw validation_error("table for '" + sig_.ops[i].name + "' has wrong size");
        for (int v : tables_[i])
            if (v < 0 || v >= static_cast<int>(n))
                throw validation_error("table for '" + sig_.ops[i].name +
                                       "' has an out-of-range entry");
    }
}

int FinAlgebra::index_of(std::string_view elem_name) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i] == elem_name) return static_cast<int>(i);
    return -1;
}

const std::vector<int>& FinAlgebra::table(std::string_view op) const {
    int i = sig_.index_of(op);
    if (i < 0) throw precondition_error("unknown operation symbol: " + std::string(op));
    return tables_[static_cast<std::size_t>(i)];
}

int FinAlgebra::apply(int op, int a, int b) const {
    const int arity = sig_.ops[static_cast<std::size_t>(op)].arity;
    const auto& t = tables_[static_cast<std::size_t>(op)];
    switch (arity) {
        case 0: return t[0];
        case 1: return t[static_cast<std::size_t>(a)];
        default: return t[static_cast<std::size_t>(a) * elems_.size() + static_cast<std::size_t>(b)];
    }
}

int FinAlgebra::apply(std::string_view op, int a, int b) const {
    int i = sig_.index_of(op);
    if (i < 0) throw precondition_error("unknown operation symbol: " + std::string(op));
    return apply(i, a, b);
}

bool FinAlgebra::leq_under_join(std::string_view join_op, int a, int b) const {
    return apply(join_op, a, b) == b;
}

AlgPtr make_alg(FinAlgebra a) { return std::make_shared<const FinAlgebra>(std::move(a)); }

AlgPtr make_alg(Signature sig, std::vector<std::string> elems,
                std::vector<std::vector<int>> tables) {
    return make_alg(FinAlgebra(std::move(sig), std::move(elems), std::move(tables)));
}

bool Hom::preserves_all(const FinAlgebra& src, const FinAlgebra& tgt,
                        const std::vector<int>& map) {
    const int n = src.size();
    for (std::size_t op = 0; op < src.sig().ops.size(); ++op) {
        const int arity = src.sig().ops[op].arity;
        const int top = static_cast<int>(op);
        if (arity == 0) {
            if (map[(std::size_t)src.apply(top)] != tgt.apply(top)) return false;
        } else if (arity == 1) {
            for (int a = 0; a < n; ++a)
                if (map[(std::size_t)src.apply(top, a)] != tgt.apply(top, map[(std::size_t)a]))
                    return false;
        } else {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (map[(std::size_t)src.apply(top, a, b)] !=
                        tgt.apply(top, map[(std::size_t)a], map[(std::size_t)b]))
                        return false;
        }
    }
    return true;
}

Hom Hom::make(AlgPtr source, AlgPtr target, std::vector<int> map) {
    if (!source || !target) throw precondition_error("hom endpoints must be non-null");
    if (source->sig() != target->sig())
        throw precondition_error("incompatible signatures");
    if (map.size() != static_cast<std::size_t>(source->size()))
        throw precondition_error("hom map has wrong domain size");
    for (int v : map)
        if (v < 0 || v >= target->size())
            throw precondition_error("hom map has an out-of-range value");
    if (!preserves_all(*source, *target, map))
        throw validation_error("map is not a homomorphism");
    Hom h;
    h.source = std::move(source);
    h.target = std::move(target);
    h.map = std::move(map);
    return h;
}

bool Hom::is_injective() const {
    std::vector<char> seen(static_cast<std::size_t>(target->size()), 0);
    for (int v : map) {
        if (seen[(std::size_t)v]) return false;
        seen[(std::size_t)v] = 1;
    }
    return true;
}

bool Hom::is_surjective() const {
    std::vector<char> seen(static_cast<std::size_t>(target->size()), 0);
    for (int v : map) seen[(std::size_t)v] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Hom compose(const Hom& g, const Hom& f) {
    if (f.target.get() != g.source.get() && !(*f.target == *g.source))
        throw precondition_error("hom composition endpoints do not match");
    std::vector<int> m(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) m[i] = g.map[(std::size_t)f.map[i]];
    return Hom::make(f.source, g.target, std::move(m));
}

Hom identity_hom(AlgPtr a) {
    std::vector<int> m(static_cast<std::size_t>(a->size()));
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i);
    return Hom::make(a, a, std::move(m));
}

std::vector<int> close_subset(const FinAlgebra& a, std::vector<int> seed) {
    const int n = a.size();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<int> work;
    auto add = [&](int e) {
        if (!in[(std::size_t)e]) {
            in[(std::size_t)e] = 1;
            work.push_back(e);
        }
    };
    for (int e : seed) add(e);
    for (std::size_t op = 0; op < a.sig().ops.size(); ++op)
        if (a.sig().ops[op].arity == 0) add(a.apply(static_cast<int>(op)));

    // Process each new element against everything already present.
    for (std::size_t k = 0; k < work.size(); ++k) {
        const int e = work[k];
        for (std::size_t op = 0; op < a.sig().ops.size(); ++op) {
            const int arity = a.sig().ops[op].arity;
            const int o = static_cast<int>(op);
            if (arity == 1) {
                add(a.apply(o, e));
            } else if (arity == 2) {
                for (std::size_t j = 0; j <= k; ++j) {
                    add(a.apply(o, e, work[j]));
                    add(a.apply(o, work[j], e));
                }
            }
        }
    }
    std::vector<int> out;
    for (int e = 0; e < n; ++e)
        if (in[(std::size_t)e]) out.push_back(e);
    return out;
}

bool is_subuniverse(const FinAlgebra& a, const std::vector<int>& sorted_elems) {
    if (sorted_elems.empty()) return false;
    auto closed = close_subset(a, sorted_elems);
    return closed == sorted_elems;
}

SubUniverse SubUniverse::make(AlgPtr parent, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!is_subuniverse(*parent, elements))
        throw validation_error("subset is not a subuniverse");
    return SubUniverse{std::move(parent), std::move(elements)};
}

bool SubUniverse::contains(int e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

std::pair<FinAlgebra, std::vector<int>> subalgebra(const SubUniverse& s) {
    const FinAlgebra& p = *s.parent;
    const auto& elems = s.elements;
    std::vector<int> back(static_cast<std::size_t>(p.size()), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) back[(std::size_t)elems[i]] = static_cast<int>(i);

    std::vector<std::string> names;
    names.reserve(elems.size());
    for (int e : elems) names.push_back(p.name_of(e));

    std::vector<std::vector<int>> tables;
    const std::size_t m = elems.size();
    for (std::size_t op = 0; op < p.sig().ops.size(); ++op) {
        const int arity = p.sig().ops[op].arity;
        const int o = static_cast<int>(op);
        std::vector<int> t;
        if (arity == 0) {
            t = {back[(std::size_t)p.apply(o)]};
        } else if (arity == 1) {
            t.resize(m);
            for (std::size_t i = 0; i < m; ++i) t[i] = back[(std::size_t)p.apply(o, elems[i])];
        } else {
            t.resize(m * m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    t[i * m + j] = back[(std::size_t)p.apply(o, elems[i], elems[j])];
        }
        tables.push_back(std::move(t));
    }
    return {FinAlgebra(p.sig(), std::move(names), std::move(tables)), elems};
}

std::vector<int> canonical_partition(const std::vector<int>& labels) {
    std::vector<int> out(labels.size(), -1);
    std::vector<int> rename;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int lbl = labels[i];
        int id = -1;
        for (std::size_t k = 0; k < rename.size(); ++k)
            if (rename[k] == lbl) { id = static_cast<int>(k); break; }
        if (id < 0) {
            id = static_cast<int>(rename.size());
            rename.push_back(lbl);
        }
        out[i] = id;
    }
    return out;
}

bool is_compatible_partition(const FinAlgebra& a, const std::vector<int>& block_of) {
    const int n = a.size();
    for (std::size_t op = 0; op < a.sig().ops.size(); ++op) {
        const int arity = a.sig().ops[op].arity;
        const int o = static_cast<int>(op);
        if (arity == 1) {
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    if (block_of[(std::size_t)x] == block_of[(std::size_t)y] &&
                        block_of[(std::size_t)a.apply(o, x)] != block_of[(std::size_t)a.apply(o, y)])
                        return false;
        } else if (arity == 2) {
            // One-coordinate swaps suffice; two-coordinate compatibility follows.
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    if (block_of[(std::size_t)x] != block_of[(std::size_t)y]) continue;
                    for (int c = 0; c < n; ++c) {
                        if (block_of[(std::size_t)a.apply(o, x, c)] !=
                            block_of[(std::size_t)a.apply(o, y, c)])
                            return false;
                        if (block_of[(std::size_t)a.apply(o, c, x)] !=
                            block_of[(std::size_t)a.apply(o, c, y)])
                            return false;
                    }
                }
        }
    }
    return true;
}

Congruence Congruence::make(AlgPtr parent, const std::vector<int>& labels) {
    if (labels.size() != static_cast<std::size_t>(parent->size()))
        throw precondition_error("partition has wrong size");
    auto block_of = canonical_partition(labels);
    if (!is_compatible_partition(*parent, block_of))
        throw validation_error("partition is not a congruence");
    Congruence c;
    c.parent = std::move(parent);
    c.block_count = 1 + *std::max_element(block_of.begin(), block_of.end());
    c.block_of = std::move(block_of);
    return c;
}

std::vector<std::vector<int>> Congruence::blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count));
    for (std::size_t e = 0; e < block_of.size(); ++e)
        out[(std::size_t)block_of[e]].push_back(static_cast<int>(e));
    return out;
}

bool Congruence::refines(const Congruence& theta, const Congruence& psi) {
    const std::size_t n = theta.block_of.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (theta.block_of[a] == theta.block_of[b] && psi.block_of[a] != psi.block_of[b])
                return false;
    return true;
}

FinAlgebra product(const FinAlgebra& a, const FinAlgebra& b) {
    if (a.sig() != b.sig()) throw precondition_error("incompatible signatures");
    const int na = a.size(), nb = b.size();
    const std::size_t n = static_cast<std::size_t>(na) * static_cast<std::size_t>(nb);
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) names.push_back("(" + a.name_of(i) + "," + b.name_of(j) + ")");

    auto pack = [nb](int i, int j) { return i * nb + j; };
    std::vector<std::vector<int>> tables;
    for (std::size_t op = 0; op < a.sig().ops.size(); ++op) {
        const int arity = a.sig().ops[op].arity;
        const int o = static_cast<int>(op);
        std::vector<int> t;
        if (arity == 0) {
            t = {pack(a.apply(o), b.apply(o))};
        } else if (arity == 1) {
            t.resize(n);
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < nb; ++j)
                    t[(std::size_t)pack(i, j)] = pack(a.apply(o, i), b.apply(o, j));
        } else {
            t.resize(n * n);
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < nb; ++j)
                    for (int k = 0; k < na; ++k)
                        for (int l = 0; l < nb; ++l)
                            t[(std::size_t)pack(i, j) * n + (std::size_t)pack(k, l)] =
                                pack(a.apply(o, i, k), b.apply(o, j, l));
        }
        tables.push_back(std::move(t));
    }
    return FinAlgebra(a.sig(), std::move(names), std::move(tables));
}

std::pair<FinAlgebra, Hom> quotient(AlgPtr a, const Congruence& theta) {
    if (theta.parent.get() != a.get() && !(*theta.parent == *a))
        throw precondition_error("congruence does not belong to the algebra");
    const FinAlgebra& alg = *a;
    auto blocks = theta.blocks();
    const std::size_t m = blocks.size();

    // Representative = least index in block; block order follows representatives.
    std::vector<int> rep(m);
    for (std::size_t b = 0; b < m; ++b) rep[b] = blocks[b].front();
    std::vector<std::size_t> order(m);
    for (std::size_t b = 0; b < m; ++b) order[b] = b;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return rep[x] < rep[y]; });
    std::vector<int> newblock(m);
    for (std::size_t pos = 0; pos < m; ++pos) newblock[order[pos]] = static_cast<int>(pos);

    std::vector<int> proj(static_cast<std::size_t>(alg.size()));
    for (std::size_t e = 0; e < proj.size(); ++e)
        proj[e] = newblock[(std::size_t)theta.block_of[e]];

    std::vector<std::string> names(m);
    for (std::size_t b = 0; b < m; ++b)
        names[(std::size_t)newblock[b]] = "[" + alg.name_of(rep[b]) + "]";

    std::vector<int> class_rep(m);
    for (std::size_t b = 0; b < m; ++b) class_rep[(std::size_t)newblock[b]] = rep[b];

    std::vector<std::vector<int>> tables;
    for (std::size_t op = 0; op < alg.sig().ops.size(); ++op) {
        const int arity = alg.sig().ops[op].arity;
        const int o = static_cast<int>(op);
        std::vector<int> t;
        if (arity == 0) {
            t = {proj[(std::size_t)alg.apply(o)]};
        } else if (arity == 1) {
            t.resize(m);
            for (std::size_t i = 0; i < m; ++i) t[i] = proj[(std::size_t)alg.apply(o, class_rep[i])];
        } else {
            t.resize(m * m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    t[i * m + j] = proj[(std::size_t)alg.apply(o, class_rep[i], class_rep[j])];
        }
        tables.push_back(std::move(t));
    }
    FinAlgebra q(alg.sig(), std::move(names), std::move(tables));
    AlgPtr qp = make_alg(q);
    Hom h = Hom::make(a, qp, proj);
    return {*qp, h};
}

Congruence kernel(const Hom& h) {
    return Congruence::make(h.source, h.map);
}

} // namespace bilat
