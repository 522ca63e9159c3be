#include "bilat/applications.hpp"

#include "bilat/common.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/varieties.hpp"

#include <algorithm>
#include <unordered_map>

namespace bilat {

std::string unification_type_name(UnificationType t) {
    switch (t) {
        case UnificationType::Unsolvable: return "unsolvable";
        case UnificationType::Unitary: return "1";
        case UnificationType::Finitary: return "omega";
        case UnificationType::Nullary: return "0";
    }
    return "?";
}

UnificationVerdict unification_type(AlgPtr a) {
    const Variety v = variety_of(*a);
    if (v != Variety::DB && v != Variety::DBu)
        throw precondition_error("unification_type expects a DB or DB- algebra");

    NaturalDual d = natural_dual(a, standard_alter_ego(v));
    UnificationVerdict out;
    out.dual = d.space.as_poset();

    if (v == Variety::DB && a->size() == 1) {
        out.status = UnificationType::Unsolvable;
        return out;
    }

    std::optional<std::pair<int, int>> bad_pair;
    for (int x = 0; x < out.dual.size() && !bad_pair; ++x)
        for (int y = x; y < out.dual.size(); ++y)
            if (!poset_join(out.dual, x, y) || !poset_meet(out.dual, x, y)) {
                bad_pair = {x, y};
                break;
            }
    if (!bad_pair) {
        out.status = UnificationType::Unitary;
        return out;
    }
    out.witness_pair = bad_pair;

    if (v == Variety::DBu) {
        out.status = UnificationType::Nullary;
        return out;
    }

    for (int x = 0; x < out.dual.size(); ++x)
        for (int y = 0; y < out.dual.size(); ++y) {
            if (!out.dual.le(x, y)) continue;
            Poset inter = induced_subposet(out.dual, order_interval(out.dual, x, y));
            if (!poset_is_lattice(inter)) {
                out.status = UnificationType::Nullary;
                out.witness_interval = {x, y};
                for (int p = 0; p < inter.size() && !out.witness_pair; ++p)
                    for (int q = p; q < inter.size(); ++q)
                        if (!poset_join(inter, p, q) || !poset_meet(inter, p, q)) {
                            out.witness_pair = {p, q};
                            break;
                        }
                return out;
            }
        }
    out.status = UnificationType::Finitary;
    return out;
}

Term Term::v(int i) {
    Term t;
    t.is_var = true;
    t.var = i;
    return t;
}

Term Term::o(std::string op, std::vector<Term> args) {
    Term t;
    t.op = std::move(op);
    t.args = std::move(args);
    return t;
}

std::vector<Clause> admissibility_basis_clauses() {
    using T = Term;
    Clause c1{"k-meet-top", 2,
              {{T::o("and_k", {T::v(0), T::v(1)}), T::o("1t")}},
              {{T::v(0), T::o("1t")}, {T::v(1), T::o("1t")}}};
    Clause c2{"k-join-top", 2,
              {{T::o("or_k", {T::v(0), T::v(1)}), T::o("1t")}},
              {{T::v(0), T::o("1t")}, {T::v(1), T::o("1t")}}};
    Clause c3{"nontrivial", 0, {{T::o("0t"), T::o("1t")}}, {}};
    return {c1, c2, c3};
}

namespace {

struct OpEnv {
    const FinAlgebra& a;
    std::vector<int> derived_or_k, derived_and_k; // used when absent from the type

    int apply(const std::string& op, int x, int y) const {
        if (!a.sig().has(op)) {
            const int n = a.size();
            if (op == "or_k") return derived_or_k[(std::size_t)(x * n + y)];
            if (op == "and_k") return derived_and_k[(std::size_t)(x * n + y)];
            throw precondition_error("unknown operation in clause: " + op);
        }
        return a.apply(op, x, y);
    }
    int apply0(const std::string& op) const { return a.apply(op); }
    int apply1(const std::string& op, int x) const { return a.apply(op, x); }
};

int eval_term(const Term& t, const OpEnv& env, const std::vector<int>& assignment) {
    if (t.is_var) return assignment[(std::size_t)t.var];
    if (t.args.empty()) return env.apply0(t.op);
    if (t.args.size() == 1) return env.apply1(t.op, eval_term(t.args[0], env, assignment));
    return env.apply(t.op, eval_term(t.args[0], env, assignment),
                     eval_term(t.args[1], env, assignment));
}

} // namespace

ClauseResult evaluate_clause(const FinAlgebra& a, const Clause& c) {
    OpEnv env{a, {}, {}};
    if (!a.sig().has("or_k") && a.sig().has("0k")) {
        auto [ork, andk] = derive_knowledge_ops(a);
        env.derived_or_k = std::move(ork);
        env.derived_and_k = std::move(andk);
    }

    ClauseResult out{c.name, true, {}};
    const int n = a.size();
    std::vector<int> assignment((std::size_t)c.n_vars, 0);
    while (true) {
        bool premises_ok = true;
        for (const auto& [lhs, rhs] : c.premises)
            if (eval_term(lhs, env, assignment) != eval_term(rhs, env, assignment)) {
                premises_ok = false;
                break;
            }
        if (premises_ok) {
            bool some_conclusion = false;
            for (const auto& [lhs, rhs] : c.conclusions)
                if (eval_term(lhs, env, assignment) == eval_term(rhs, env, assignment)) {
                    some_conclusion = true;
                    break;
                }
            if (!some_conclusion) {
                out.holds = false;
                out.witness = assignment;
                return out;
            }
        }
        // Next assignment in lexicographic order.
        int pos = c.n_vars - 1;
        while (pos >= 0 && assignment[(std::size_t)pos] == n - 1) assignment[(std::size_t)pos--] = 0;
        if (pos < 0) break;
        ++assignment[(std::size_t)pos];
    }
    return out;
}

FreeEmbedding embed_into_free(AlgPtr a, std::uint64_t candidate_guard, std::size_t table_cap) {
    const Variety v = variety_of(*a);
    if (v != Variety::DB && v != Variety::DBu)
        throw precondition_error("embed_into_free expects a DB or DB- algebra");

    AlterEgo ego = standard_alter_ego(v);
    NaturalDual d = natural_dual(a, ego);
    const int nd = static_cast<int>(d.homs[0].size());
    if (nd == 0) throw precondition_error("the natural dual is empty");
    Poset dual = d.space.as_poset();
    auto bot = poset_bottom(dual), top = poset_top(dual);
    if (!bot || !top) throw precondition_error("the natural dual is not bounded");

    // Enumeration {t, b, x_1..x_n}; pad with t when only the endpoints
    // exist so that the constructed map can be onto.
    std::vector<int> others;
    for (int p = 0; p < nd; ++p)
        if (p != *bot && p != *top) others.push_back(p);
    if (others.empty() && nd >= 2) others.push_back(*top);
    const int n = static_cast<int>(others.size());

    const FinAlgebra& m = *ego.sorts[0];
    const int k0 = m.index_of("01"), k1 = m.index_of("10");
    StructuredSpace power = power_space(ego, n);

    // f(c_1..c_n) = b if all c_i = 0k; x_i if c_i is the only non-0k
    // coordinate and c_i != 1k; t otherwise.
    const int npts = power.sort_size(0);
    std::vector<int> f((std::size_t)npts);
    for (int i = 0; i < npts; ++i) {
        int rest = i, nonzero = -1, count = 0;
        bool saw_k1 = false;
        std::vector<int> digits((std::size_t)n);
        for (int c = n - 1; c >= 0; --c) {
            digits[(std::size_t)c] = rest % m.size();
            rest /= m.size();
        }
        for (int c = 0; c < n; ++c)
            if (digits[(std::size_t)c] != k0) {
                ++count;
                nonzero = c;
                saw_k1 = saw_k1 || digits[(std::size_t)c] == k1;
            }
        if (count == 0)
            f[(std::size_t)i] = *bot;
        else if (count == 1 && !saw_k1)
            f[(std::size_t)i] = others[(std::size_t)nonzero];
        else
            f[(std::size_t)i] = *top;
    }

    // f must be onto, relation-preserving and nullary-preserving.
    {
        std::vector<char> hit((std::size_t)nd, 0);
        for (int i : f) hit[(std::size_t)i] = 1;
        if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }))
            throw theorem_violation("dual-space map is not onto");
        for (auto [p, q] : power.relations[0].pairs)
            if (!d.space.in_relation(0, f[(std::size_t)p], f[(std::size_t)q]))
                throw theorem_violation("dual-space map does not preserve the order");
        for (std::size_t k = 0; k < power.nullary_points.size(); ++k)
            if (f[(std::size_t)power.nullary_points[k]] != d.space.nullary_points[k])
                throw theorem_violation("dual-space map does not preserve a nullary");
    }

    // E(f) o e_A : a |-> (p |-> hom_{f(p)}(a)), verified elementwise so
    // that F(n) never needs to be materialised.
    FreeEmbedding out;
    out.generators = n;
    out.power = power;
    out.images.resize((std::size_t)a->size());
    for (int x = 0; x < a->size(); ++x) {
        std::vector<int> w((std::size_t)npts);
        for (int p = 0; p < npts; ++p)
            w[(std::size_t)p] = d.homs[0][(std::size_t)f[(std::size_t)p]].map[(std::size_t)x];
        out.images[(std::size_t)x] = std::move(w);
    }

    // Each image lies in E(power): order- and nullary-preserving.
    const auto& ego_rel = ego.relations[0].pairs;
    for (const auto& w : out.images) {
        for (auto [p, q] : power.relations[0].pairs)
            if (std::find(ego_rel.begin(), ego_rel.end(),
                          std::make_pair(w[(std::size_t)p], w[(std::size_t)q])) == ego_rel.end())
                throw theorem_violation("embedding image escapes the free algebra");
        for (std::size_t k = 0; k < power.nullary_points.size(); ++k)
            if (w[(std::size_t)power.nullary_points[k]] != ego.nullaries[k].element)
                throw theorem_violation("embedding image moves a nullary");
    }
    // Injectivity.
    for (std::size_t x = 0; x < out.images.size(); ++x)
        for (std::size_t y = x + 1; y < out.images.size(); ++y)
            if (out.images[x] == out.images[y])
                throw theorem_violation("embedding into the free algebra is not injective");
    // Homomorphism property, pointwise over the power space.
    for (std::size_t op = 0; op < a->sig().ops.size(); ++op) {
        const int arity = a->sig().ops[op].arity;
        const int o = static_cast<int>(op);
        auto check = [&](int res, int x, int y) {
            for (int p = 0; p < npts; ++p) {
                int lhs = out.images[(std::size_t)res][(std::size_t)p];
                int rhs = m.apply(o, x < 0 ? -1 : out.images[(std::size_t)x][(std::size_t)p],
                                  y < 0 ? -1 : out.images[(std::size_t)y][(std::size_t)p]);
                if (lhs != rhs) throw theorem_violation("embedding is not a homomorphism");
            }
        };
        if (arity == 0) {
            check(a->apply(o), -1, -1);
        } else if (arity == 1) {
            for (int x = 0; x < a->size(); ++x) check(a->apply(o, x), x, -1);
        } else {
            for (int x = 0; x < a->size(); ++x)
                for (int y = 0; y < a->size(); ++y) check(a->apply(o, x, y), x, y);
        }
    }

    // Materialise F(n) when it fits; the embedding becomes a plain Hom.
    if (evaluation_candidate_estimate(power, ego) <= candidate_guard) {
        try {
            auto free = evaluation_algebra(power, ego, Exec::Parallel, candidate_guard, table_cap);
            AlgPtr fp = make_alg(free.algebra);
            std::vector<int> emb((std::size_t)a->size());
            bool all_found = true;
            for (int x = 0; x < a->size() && all_found; ++x) {
                int found = -1;
                for (std::size_t i = 0; i < free.maps.size(); ++i)
                    if (free.maps[i] == out.images[(std::size_t)x]) {
                        found = static_cast<int>(i);
                        break;
                    }
                if (found < 0)
                    throw theorem_violation("embedding image escapes the free algebra");
                emb[(std::size_t)x] = found;
            }
            out.embedding = Hom::make(a, fp, std::move(emb));
            out.free = std::move(free.algebra);
        } catch (const guard_exceeded&) {
            // map-level verification above already stands
        }
    }
    return out;
}

AdmissibilityReport admissibility_check(AlgPtr a) {
    if (variety_of(*a) != Variety::DB)
        throw precondition_error("admissibility_check expects a DB algebra");
    AdmissibilityReport out;
    for (const auto& c : admissibility_basis_clauses())
        out.clause_results.push_back(evaluate_clause(*a, c));
    out.clauses_hold = std::all_of(out.clause_results.begin(), out.clause_results.end(),
                                   [](const ClauseResult& r) { return r.holds; });

    NaturalDual d = natural_dual(a, standard_alter_ego(Variety::DB));
    Poset dual = d.space.as_poset();
    out.dual_nonempty = dual.size() > 0;
    out.dual_bounded = out.dual_nonempty && poset_bottom(dual) && poset_top(dual);
    out.equivalence_holds = out.clauses_hold == (out.dual_nonempty && out.dual_bounded);
    if (out.dual_nonempty && out.dual_bounded) out.embedding = embed_into_free(a).embedding;
    return out;
}

StructuralTests structural_tests(AlgPtr a) {
    const Variety v = variety_of(*a);
    if (v != Variety::DB && v != Variety::DBu)
        throw precondition_error("structural_tests expects a DB or DB- algebra");

    StructuralTests out;
    if (v == Variety::DB) {
        const int t0 = a->apply("0t"), t1 = a->apply("1t");
        bool all = true;
        for (int x = 0; x < a->size() && all; ++x) {
            bool has = false;
            for (int y = 0; y < a->size() && !has; ++y)
                has = a->apply("or_t", x, y) == t1 && a->apply("and_t", x, y) == t0;
            all = has;
        }
        out.injective = all;
    }
    NaturalDual d = natural_dual(a, standard_alter_ego(v));
    out.weakly_projective = poset_is_lattice(d.space.as_poset());
    return out;
}

} // namespace bilat
