#include "bilat/piggyback.hpp"

#include "bilat/common.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/varieties.hpp"

#include <algorithm>

namespace bilat {

int OmegaSet::find_tag(const std::string& tag) const {
    for (std::size_t i = 0; i < omegas.size(); ++i)
        if (omegas[i].tag == tag) return static_cast<int>(i);
    return -1;
}

OmegaSet omega_set(AlgPtr m, bool bounded) {
    FinAlgebra t = t_reduct(*m);
    Variety tv = variety_of(t);
    if ((tv == Variety::D) != bounded)
        throw precondition_error("bounded flag does not match the lattice reduct");
    {
        auto rep = validate(t, tv);
        if (!rep.valid) throw validation_error("t-reduct is not a distributive lattice");
    }
    AlgPtr tr = make_alg(std::move(t));
    AlgPtr two = make_alg(canonical(bounded ? "2" : "2lat-"));
    auto homs = enumerate_homs(tr, two, Exec::Serial);

    OmegaSet out;
    out.generator = m;
    out.bounded = bounded;
    int generic = 0;
    const int ten = m->index_of("10");
    for (const auto& h : homs) {
        OmegaMap w;
        w.map = h.map;
        bool all0 = std::all_of(w.map.begin(), w.map.end(), [](int v) { return v == 0; });
        bool all1 = std::all_of(w.map.begin(), w.map.end(), [](int v) { return v == 1; });
        if (all0)
            w.tag = "0bar";
        else if (all1)
            w.tag = "1bar";
        else if (m->size() == 4 && ten >= 0)
            w.tag = w.map[(std::size_t)ten] == 1 ? "alpha" : "beta";
        else
            w.tag = "w" + std::to_string(generic++);
        out.omegas.push_back(std::move(w));
    }
    return out;
}

namespace {

// Maximal members (by inclusion) of a family of sorted vectors.
template <typename T>
std::vector<std::vector<T>> maximal_members(std::vector<std::vector<T>> family) {
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < family.size() && !dominated; ++j) {
            if (i == j) continue;
            if (family[i].size() < family[j].size() &&
                std::includes(family[j].begin(), family[j].end(), family[i].begin(),
                              family[i].end()))
                dominated = true;
            if (family[i] == family[j] && j < i) dominated = true; // dedup
        }
        if (!dominated) out.push_back(family[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

PiggybackRelations piggyback_relations(AlgPtr m, bool bounded) {
    PiggybackRelations out{omega_set(m, bounded), {}, {}};
    const auto& omegas = out.omega.omegas;
    const int nm = m->size();
    const int nw = static_cast<int>(omegas.size());

    // Subuniverses of M^2 once, as sorted pair lists.
    AlgPtr square = make_alg(product(*m, *m));
    std::vector<std::vector<std::pair<int, int>>> subs2;
    for (const auto& s : enumerate_subuniverses(square)) {
        std::vector<std::pair<int, int>> pairs;
        for (int e : s.elements) pairs.emplace_back(e / nm, e % nm);
        subs2.push_back(std::move(pairs));
    }
    std::vector<std::vector<int>> subs1;
    for (const auto& s : enumerate_subuniverses(m)) subs1.push_back(s.elements);

    out.binary.assign((std::size_t)nw, {});
    for (int w1 = 0; w1 < nw; ++w1) {
        out.binary[(std::size_t)w1].resize((std::size_t)nw);
        for (int w2 = 0; w2 < nw; ++w2) {
            std::vector<std::vector<std::pair<int, int>>> inside;
            for (const auto& r : subs2) {
                bool ok = true;
                for (auto [a, b] : r)
                    if (omegas[(std::size_t)w1].map[(std::size_t)a] >
                        omegas[(std::size_t)w2].map[(std::size_t)b]) {
                        ok = false;
                        break;
                    }
                if (ok) inside.push_back(r);
            }
            out.binary[(std::size_t)w1][(std::size_t)w2] = maximal_members(std::move(inside));
        }
    }

    out.unary.assign((std::size_t)nw, {});
    if (!bounded) {
        for (int w = 0; w < nw; ++w) {
            for (int i = 0; i < 2; ++i) {
                std::vector<std::vector<int>> inside;
                for (const auto& r : subs1) {
                    bool ok = true;
                    for (int a : r)
                        if (omegas[(std::size_t)w].map[(std::size_t)a] != i) {
                            ok = false;
                            break;
                        }
                    if (ok) inside.push_back(r);
                }
                out.unary[(std::size_t)w][(std::size_t)i] = maximal_members(std::move(inside));
            }
        }
    }
    return out;
}

namespace {

bool lifted_pair_member(const std::vector<std::pair<int, int>>& rel, const Hom& x, const Hom& y) {
    for (std::size_t a = 0; a < x.map.size(); ++a)
        if (std::find(rel.begin(), rel.end(), std::make_pair(x.map[a], y.map[a])) == rel.end())
            return false;
    return true;
}

bool lifted_set_member(const std::vector<int>& rel, const Hom& x) {
    for (int v : x.map)
        if (!std::binary_search(rel.begin(), rel.end(), v)) return false;
    return true;
}

std::vector<int> compose_omega(const OmegaMap& w, const Hom& x) {
    std::vector<int> out(x.map.size());
    for (std::size_t a = 0; a < x.map.size(); ++a) out[a] = w.map[(std::size_t)x.map[a]];
    return out;
}

} // namespace

PreorderedCover dismount(AlgPtr a) {
    const Variety v = variety_of(*a);
    if (v != Variety::DB && v != Variety::DBu)
        throw precondition_error("dismount expects a DB or DB- algebra");
    const bool bounded = (v == Variety::DB);

    AlterEgo ego = standard_alter_ego(v);
    PreorderedCover cover;
    cover.algebra = a;
    cover.dual = natural_dual(a, ego);
    cover.relations = piggyback_relations(ego.sorts[0], bounded);
    cover.omega = cover.relations.omega;
    cover.unbounded = !bounded;
    cover.target = priestley_dual(t_reduct(*a));

    const auto& homs = cover.dual.homs[0];
    cover.n_dual = static_cast<int>(homs.size());
    cover.n_omega = static_cast<int>(cover.omega.omegas.size());
    const int ny = cover.n_dual * cover.n_omega;

    // preceq exactly as defined; no closure.
    cover.preceq.assign((std::size_t)ny, std::vector<bool>((std::size_t)ny, false));
    for (int w1 = 0; w1 < cover.n_omega; ++w1)
        for (int w2 = 0; w2 < cover.n_omega; ++w2) {
            const auto& rels = cover.relations.binary[(std::size_t)w1][(std::size_t)w2];
            for (int x = 0; x < cover.n_dual; ++x)
                for (int y = 0; y < cover.n_dual; ++y) {
                    bool related = false;
                    for (const auto& r : rels)
                        if (lifted_pair_member(r, homs[(std::size_t)x], homs[(std::size_t)y])) {
                            related = true;
                            break;
                        }
                    if (related)
                        cover.preceq[(std::size_t)cover.flat(x, w1)][(std::size_t)cover.flat(y, w2)] =
                            true;
                }
        }

    Poset raw;
    raw.names.resize((std::size_t)ny);
    for (int w = 0; w < cover.n_omega; ++w)
        for (int x = 0; x < cover.n_dual; ++x)
            raw.names[(std::size_t)cover.flat(x, w)] =
                "(" + cover.dual.space.point_names[0][(std::size_t)x] + "," +
                cover.omega.omegas[(std::size_t)w].tag + ")";
    raw.leq = cover.preceq;
    if (!is_preorder(raw))
        throw theorem_violation("the dismount relation is not a pre-order");

    // approx classes, representative = least flat index.
    cover.class_of.assign((std::size_t)ny, -1);
    for (int y = 0; y < ny; ++y) {
        if (cover.class_of[(std::size_t)y] >= 0) continue;
        int cls = static_cast<int>(cover.class_rep.size());
        cover.class_rep.push_back(y);
        cover.class_of[(std::size_t)y] = cls;
        for (int z = y + 1; z < ny; ++z)
            if (cover.preceq[(std::size_t)y][(std::size_t)z] &&
                cover.preceq[(std::size_t)z][(std::size_t)y])
                cover.class_of[(std::size_t)z] = cls;
    }

    const int nc = static_cast<int>(cover.class_rep.size());
    cover.quotient.names.resize((std::size_t)nc);
    for (int c = 0; c < nc; ++c)
        cover.quotient.names[(std::size_t)c] = "[" + raw.names[(std::size_t)cover.class_rep[c]] + "]";
    cover.quotient.leq.assign((std::size_t)nc, std::vector<bool>((std::size_t)nc, false));
    for (int c = 0; c < nc; ++c)
        for (int d = 0; d < nc; ++d)
            cover.quotient.leq[(std::size_t)c][(std::size_t)d] =
                cover.preceq[(std::size_t)cover.class_rep[c]][(std::size_t)cover.class_rep[d]];
    if (!is_partial_order(cover.quotient))
        throw theorem_violation("the dismount quotient is not a partial order");

    // Phi([(x,w)]) = w o x; well-definedness across each class.
    cover.phi.resize((std::size_t)nc);
    for (int y = 0; y < ny; ++y) {
        const int x = y % cover.n_dual, w = y / cover.n_dual;
        auto value = compose_omega(cover.omega.omegas[(std::size_t)w], homs[(std::size_t)x]);
        int cls = cover.class_of[(std::size_t)y];
        if (cover.phi[(std::size_t)cls].empty())
            cover.phi[(std::size_t)cls] = value;
        else if (cover.phi[(std::size_t)cls] != value)
            throw theorem_violation("Phi is not constant on an approx-class");
    }

    // Phi is a bijection onto the Priestley dual of the t-reduct and an
    // order-isomorphism.
    cover.phi_index.assign((std::size_t)nc, -1);
    for (int c = 0; c < nc; ++c) {
        int found = -1;
        for (std::size_t p = 0; p < cover.target.hom_maps.size(); ++p)
            if (cover.target.hom_maps[p] == cover.phi[(std::size_t)c]) {
                found = static_cast<int>(p);
                break;
            }
        if (found < 0) throw theorem_violation("Phi value is not a point of H(U(A))");
        cover.phi_index[(std::size_t)c] = found;
    }
    {
        std::vector<char> seen((std::size_t)cover.target.poset.size(), 0);
        for (int p : cover.phi_index) {
            if (seen[(std::size_t)p]) throw theorem_violation("Phi is not injective");
            seen[(std::size_t)p] = 1;
        }
        if (nc != cover.target.poset.size())
            throw theorem_violation("Phi is not surjective onto H(U(A))");
        for (int c = 0; c < nc; ++c)
            for (int d = 0; d < nc; ++d)
                if (cover.quotient.le(c, d) !=
                    cover.target.poset.le(cover.phi_index[(std::size_t)c],
                                          cover.phi_index[(std::size_t)d]))
                    throw theorem_violation("Phi is not an order-isomorphism");
    }

    if (!bounded) {
        // c_i = the class of the union of the lifted unary relations.
        for (int i = 0; i < 2; ++i) {
            int cls = -1;
            for (int w = 0; w < cover.n_omega; ++w)
                for (const auto& r : cover.relations.unary[(std::size_t)w][(std::size_t)i])
                    for (int x = 0; x < cover.n_dual; ++x)
                        if (lifted_set_member(r, homs[(std::size_t)x])) {
                            int c = cover.class_of[(std::size_t)cover.flat(x, w)];
                            if (cls < 0)
                                cls = c;
                            else if (cls != c)
                                throw theorem_violation(
                                    "distinguished point classes are not unique");
                        }
            if (cls < 0) throw theorem_violation("distinguished point class is empty");
            (i == 0 ? cover.c0 : cover.c1) = cls;
        }
        auto bot = poset_bottom(cover.quotient), top = poset_top(cover.quotient);
        if (!bot || *bot != cover.c0 || !top || *top != cover.c1)
            throw theorem_violation("c0/c1 are not the bounds of the quotient");
    }

    return cover;
}

TransferSpec default_transfer_spec(Variety v) {
    if (v == Variety::DB) return {{}, {"not"}, {"0k", "1k"}};
    if (v == Variety::DBu) return {{}, {"not"}, {}};
    throw precondition_error("operation transfer is set up for DB and DB-");
}

TransferredStructure transfer_operations(AlgPtr a) {
    return transfer_operations(a, default_transfer_spec(variety_of(*a)));
}

TransferredStructure transfer_operations(AlgPtr a, const TransferSpec& spec) {
    TransferredStructure out{dismount(a), {}, {}, {}};
    PreorderedCover& cover = out.cover;
    const FinAlgebra& m = *cover.dual.ego.sorts[0];
    const int nc = static_cast<int>(cover.class_rep.size());

    // "id" names the synthetic identity slot; anything else must be a unary
    // symbol of the signature.
    auto apply_unary = [](const FinAlgebra& alg, const std::string& op, int e) {
        return op == "id" ? e : alg.apply(op, e);
    };

    // w |-> index of (w o g) or (1 - w o g) within Omega.
    auto omega_after = [&](const std::string& op, bool complement) {
        std::vector<int> out_idx((std::size_t)cover.n_omega, -1);
        for (int w = 0; w < cover.n_omega; ++w) {
            std::vector<int> composed((std::size_t)m.size());
            for (int e = 0; e < m.size(); ++e) {
                int v = cover.omega.omegas[(std::size_t)w].map[(std::size_t)apply_unary(m, op, e)];
                composed[(std::size_t)e] = complement ? 1 - v : v;
            }
            for (std::size_t u = 0; u < cover.omega.omegas.size(); ++u)
                if (cover.omega.omegas[u].map == composed) {
                    out_idx[(std::size_t)w] = static_cast<int>(u);
                    break;
                }
            if (out_idx[(std::size_t)w] < 0)
                throw theorem_violation("omega composed with '" + op + "' leaves Omega");
        }
        return out_idx;
    };

    auto transfer_unary = [&](const std::string& op, bool complement) {
        auto widx = omega_after(op, complement);
        std::vector<int> bar((std::size_t)nc, -1);
        for (int y = 0; y < cover.n_dual * cover.n_omega; ++y) {
            const int x = y % cover.n_dual, w = y / cover.n_dual;
            int img = cover.class_of[(std::size_t)cover.flat(x, widx[(std::size_t)w])];
            int cls = cover.class_of[(std::size_t)y];
            if (bar[(std::size_t)cls] < 0)
                bar[(std::size_t)cls] = img;
            else if (bar[(std::size_t)cls] != img)
                throw theorem_violation("transferred '" + op + "' is not well defined");
        }
        return bar;
    };

    // Verify a commuting square against the directly computed Priestley map.
    auto verify_square = [&](const std::string& op, bool complement, const std::vector<int>& bar) {
        const int np = cover.target.poset.size();
        std::vector<int> direct((std::size_t)np, -1);
        for (int p = 0; p < np; ++p) {
            std::vector<int> z((std::size_t)a->size());
            for (int e = 0; e < a->size(); ++e) {
                int v = cover.target.hom_maps[(std::size_t)p][(std::size_t)apply_unary(*a, op, e)];
                z[(std::size_t)e] = complement ? 1 - v : v;
            }
            for (std::size_t q = 0; q < cover.target.hom_maps.size(); ++q)
                if (cover.target.hom_maps[q] == z) {
                    direct[(std::size_t)p] = static_cast<int>(q);
                    break;
                }
            if (direct[(std::size_t)p] < 0)
                throw theorem_violation("Priestley-side transfer of '" + op +
                                        "' leaves the dual space");
        }
        for (int c = 0; c < nc; ++c)
            if (direct[(std::size_t)cover.phi_index[(std::size_t)c]] !=
                cover.phi_index[(std::size_t)bar[(std::size_t)c]])
                throw theorem_violation("commuting square fails for '" + op + "'");
    };

    for (const auto& op : spec.endo_ops) {
        auto bar = transfer_unary(op, false);
        for (int c = 0; c < nc; ++c)
            for (int d = 0; d < nc; ++d)
                if (cover.quotient.le(c, d) &&
                    !cover.quotient.le(bar[(std::size_t)c], bar[(std::size_t)d]))
                    throw theorem_violation("transferred '" + op + "' is not order-preserving");
        verify_square(op, false, bar);
        out.fbar.push_back(std::move(bar));
    }
    for (const auto& op : spec.dual_endo_ops) {
        auto bar = transfer_unary(op, true);
        for (int c = 0; c < nc; ++c)
            for (int d = 0; d < nc; ++d)
                if (cover.quotient.le(c, d) &&
                    !cover.quotient.le(bar[(std::size_t)d], bar[(std::size_t)c]))
                    throw theorem_violation("transferred '" + op + "' is not order-reversing");
        verify_square(op, true, bar);
        out.hbar.push_back(std::move(bar));
    }
    for (const auto& op : spec.nullary_ops) {
        // cbar = classes of the points (x,w) with w(c^M) = 1.
        const int cm = m.apply(op);
        std::vector<char> member((std::size_t)nc, 0);
        for (int w = 0; w < cover.n_omega; ++w) {
            if (cover.omega.omegas[(std::size_t)w].map[(std::size_t)cm] != 1) continue;
            for (int x = 0; x < cover.n_dual; ++x)
                member[(std::size_t)cover.class_of[(std::size_t)cover.flat(x, w)]] = 1;
        }
        std::vector<int> cbar;
        for (int c = 0; c < nc; ++c)
            if (member[(std::size_t)c]) cbar.push_back(c);
        // Up-set check.
        for (int c : cbar)
            for (int d = 0; d < nc; ++d)
                if (cover.quotient.le(c, d) && !member[(std::size_t)d])
                    throw theorem_violation("transferred constant '" + op + "' is not an up-set");
        // Phi carries cbar onto {z : z(c^A) = 1}.
        const int ca = a->apply(op);
        for (int c = 0; c < nc; ++c) {
            bool direct =
                cover.target.hom_maps[(std::size_t)cover.phi_index[(std::size_t)c]][(std::size_t)ca] ==
                1;
            if (direct != (member[(std::size_t)c] != 0))
                throw theorem_violation("constant transfer square fails for '" + op + "'");
        }
        out.cbar.push_back(std::move(cbar));
    }
    return out;
}

KnowledgeDual knowledge_dual(AlgPtr a) {
    if (variety_of(*a) != Variety::DB)
        throw precondition_error("knowledge_dual expects a DB algebra");

    AlterEgo ego = standard_alter_ego(Variety::DB);
    KnowledgeDual out{a, natural_dual(a, ego), {}, {}, priestley_dual(k_reduct(*a)), {}};

    OmegaSet omega = omega_set(ego.sorts[0], true);
    const int alpha = omega.find_tag("alpha"), beta = omega.find_tag("beta");
    if (alpha < 0 || beta < 0) throw theorem_violation("alpha/beta missing from Omega(4)");

    const auto& homs = out.dual.homs[0];
    const int nd = static_cast<int>(homs.size());
    const Poset dual_poset = nd ? out.dual.space.as_poset() : Poset{};

    // Two like-oriented copies of D(A): alpha block then beta block.
    out.space.names.resize((std::size_t)(2 * nd));
    out.space.leq.assign((std::size_t)(2 * nd), std::vector<bool>((std::size_t)(2 * nd), false));
    for (int copy = 0; copy < 2; ++copy)
        for (int x = 0; x < nd; ++x) {
            out.space.names[(std::size_t)(copy * nd + x)] =
                "(" + out.dual.space.point_names[0][(std::size_t)x] + "," +
                (copy == 0 ? "alpha" : "beta") + ")";
            for (int y = 0; y < nd; ++y)
                out.space.leq[(std::size_t)(copy * nd + x)][(std::size_t)(copy * nd + y)] =
                    dual_poset.le(x, y);
        }

    out.eta.resize((std::size_t)(2 * nd));
    for (int copy = 0; copy < 2; ++copy)
        for (int x = 0; x < nd; ++x) {
            const OmegaMap& w = omega.omegas[(std::size_t)(copy == 0 ? alpha : beta)];
            std::vector<int> value = compose_omega(w, homs[(std::size_t)x]);
            if (copy == 1)
                for (int& v : value) v = 1 - v;
            out.eta[(std::size_t)(copy * nd + x)] = std::move(value);
        }

    out.eta_index.assign((std::size_t)(2 * nd), -1);
    std::vector<char> seen((std::size_t)out.target.poset.size(), 0);
    for (std::size_t y = 0; y < out.eta.size(); ++y) {
        int found = -1;
        for (std::size_t p = 0; p < out.target.hom_maps.size(); ++p)
            if (out.target.hom_maps[p] == out.eta[y]) {
                found = static_cast<int>(p);
                break;
            }
        if (found < 0) throw theorem_violation("eta value is not a point of H(A_k)");
        if (seen[(std::size_t)found]) throw theorem_violation("eta is not injective");
        seen[(std::size_t)found] = 1;
        out.eta_index[y] = found;
    }
    if (out.eta.size() != out.target.hom_maps.size())
        throw theorem_violation("eta is not surjective onto H(A_k)");
    for (std::size_t y = 0; y < out.eta.size(); ++y)
        for (std::size_t z = 0; z < out.eta.size(); ++z)
            if (out.space.leq[y][z] != out.target.poset.le(out.eta_index[y], out.eta_index[z]))
                throw theorem_violation("eta is not an order-isomorphism");

    return out;
}

} // namespace bilat
