#include "bilat/varieties.hpp"

#include "bilat/common.hpp"

#include <algorithm>

namespace bilat {

namespace {

// The four-element universe in the order 00, 11, 01, 10; element i is the
// bit pair bits[i].  t-order is componentwise, k-order compares the second
// bit reversed (bottom 01, top 10).
constexpr int kFourBits[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};

int four_index(int b1, int b2) {
    for (int i = 0; i < 4; ++i)
        if (kFourBits[i][0] == b1 && kFourBits[i][1] == b2) return i;
    return -1;
}

std::vector<int> four_binary(int (*f1)(int, int), int (*f2)(int, int)) {
    std::vector<int> t(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            t[(std::size_t)(a * 4 + b)] =
                four_index(f1(kFourBits[a][0], kFourBits[b][0]), f2(kFourBits[a][1], kFourBits[b][1]));
    return t;
}

int bmax(int x, int y) { return x | y; }
int bmin(int x, int y) { return x & y; }

std::vector<int> four_or_t() { return four_binary(bmax, bmax); }
std::vector<int> four_and_t() { return four_binary(bmin, bmin); }
std::vector<int> four_or_k() { return four_binary(bmax, bmin); }
std::vector<int> four_and_k() { return four_binary(bmin, bmax); }

std::vector<int> four_not() {
    std::vector<int> t(4);
    for (int a = 0; a < 4; ++a)
        t[(std::size_t)a] = four_index(1 - kFourBits[a][1], 1 - kFourBits[a][0]);
    return t;
}

const std::vector<std::string> kFourNames = {"00", "11", "01", "10"};

FinAlgebra two_lattice(bool bounded) {
    std::vector<int> orr = {0, 1, 1, 1}, andd = {0, 0, 0, 1};
    if (bounded)
        return FinAlgebra(signature_of(Variety::D), {"0", "1"}, {orr, andd, {0}, {1}});
    return FinAlgebra(signature_of(Variety::Du), {"0", "1"}, {orr, andd});
}

FinAlgebra two_prebilattice(bool plus, bool bounded) {
    std::vector<int> orr = {0, 1, 1, 1}, andd = {0, 0, 0, 1};
    // k-operations: equal to the t-ones on 2+, swapped on 2-.
    std::vector<int> ork = plus ? orr : andd;
    std::vector<int> andk = plus ? andd : orr;
    if (bounded) {
        int k0 = plus ? 0 : 1, k1 = plus ? 1 : 0;
        return FinAlgebra(signature_of(Variety::DPB), {"0", "1"},
                          {orr, andd, {0}, {1}, {k0}, {k1}});
    }
    return FinAlgebra(signature_of(Variety::DPBu), {"0", "1"}, {orr, andd, ork, andk});
}

} // namespace

FinAlgebra canonical(std::string_view name) {
    if (name == "4")
        return FinAlgebra(signature_of(Variety::DB), kFourNames,
                          {four_or_t(), four_and_t(), four_not(),
                           {four_index(0, 0)}, {four_index(1, 1)},
                           {four_index(0, 1)}, {four_index(1, 0)}});
    if (name == "4-" || name == "4u")
        return FinAlgebra(signature_of(Variety::DBu), kFourNames,
                          {four_or_t(), four_and_t(), four_or_k(), four_and_k(), four_not()});
    if (name == "2+" || name == "2p") return two_prebilattice(true, true);
    if (name == "2-" || name == "2m") return two_prebilattice(false, true);
    if (name == "2+-" || name == "2pu") return two_prebilattice(true, false);
    if (name == "2--" || name == "2mu") return two_prebilattice(false, false);
    if (name == "2") return two_lattice(true);
    if (name == "2lat-" || name == "2u") return two_lattice(false);
    throw precondition_error("unknown canonical algebra: " + std::string(name));
}

FinAlgebra trivial_algebra(Variety v) {
    Signature sig = signature_of(v);
    std::vector<std::vector<int>> tables;
    for (const auto& op : sig.ops)
        tables.emplace_back(op.arity == 0 ? 1 : op.arity == 1 ? 1 : 1, 0);
    return FinAlgebra(std::move(sig), {"*"}, std::move(tables));
}

Variety variety_of(const FinAlgebra& a) { return parse_variety(a.sig().name); }

std::pair<std::vector<int>, std::vector<int>> derive_knowledge_ops(const FinAlgebra& a) {
    if (!a.sig().has("0k") || !a.sig().has("1k"))
        throw precondition_error("derive_knowledge_ops needs the knowledge bounds in the type");
    const int n = a.size();
    const int k0 = a.apply("0k"), k1 = a.apply("1k");
    std::vector<int> ork(static_cast<std::size_t>(n) * n), andk(ork.size());
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int meet = a.apply("and_t", x, y);
            int join = a.apply("or_t", x, y);
            ork[(std::size_t)(x * n + y)] =
                a.apply("or_t", a.apply("and_t", meet, k0), a.apply("and_t", join, k1));
            andk[(std::size_t)(x * n + y)] =
                a.apply("or_t", a.apply("and_t", meet, k1), a.apply("and_t", join, k0));
        }
    }
    return {std::move(ork), std::move(andk)};
}

namespace {

struct LatticeOps {
    std::vector<int> join, meet;
};

LatticeOps knowledge_tables(const FinAlgebra& a) {
    if (a.sig().has("or_k")) return {a.table("or_k"), a.table("and_k")};
    auto [ork, andk] = derive_knowledge_ops(a);
    return {std::move(ork), std::move(andk)};
}

class Validator {
  public:
    Validator(const FinAlgebra& a, ValidationReport& r) : a_(a), r_(r) {}

    void fail(const std::string& axiom, std::initializer_list<int> witness) {
        Violation v;
        v.axiom = axiom;
        for (int e : witness) v.witness.push_back(a_.name_of(e));
        r_.violations.push_back(std::move(v));
        r_.valid = false;
    }

    // join/meet tables passed explicitly so derived operations can be checked.
    void lattice_laws(const std::string& tag, const std::vector<int>& j,
                      const std::vector<int>& m) {
        const int n = a_.size();
        auto J = [&](int x, int y) { return j[(std::size_t)(x * n + y)]; };
        auto M = [&](int x, int y) { return m[(std::size_t)(x * n + y)]; };
        for (int x = 0; x < n; ++x) {
            if (J(x, x) != x) fail(tag + " join idempotent", {x});
            if (M(x, x) != x) fail(tag + " meet idempotent", {x});
            for (int y = 0; y < n; ++y) {
                if (J(x, y) != J(y, x)) fail(tag + " join commutative", {x, y});
                if (M(x, y) != M(y, x)) fail(tag + " meet commutative", {x, y});
                if (J(x, M(x, y)) != x) fail(tag + " absorption", {x, y});
                if (M(x, J(x, y)) != x) fail(tag + " absorption", {x, y});
                for (int z = 0; z < n; ++z) {
                    if (J(J(x, y), z) != J(x, J(y, z))) fail(tag + " join associative", {x, y, z});
                    if (M(M(x, y), z) != M(x, M(y, z))) fail(tag + " meet associative", {x, y, z});
                }
            }
        }
    }

    void distributes_over(const std::string& name_f, const std::vector<int>& f,
                          const std::string& name_g, const std::vector<int>& g) {
        const int n = a_.size();
        auto F = [&](int x, int y) { return f[(std::size_t)(x * n + y)]; };
        auto G = [&](int x, int y) { return g[(std::size_t)(x * n + y)]; };
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (F(x, G(y, z)) != G(F(x, y), F(x, z))) {
                        fail(name_f + " distributes over " + name_g, {x, y, z});
                        return;
                    }
    }

    const FinAlgebra& a_;
    ValidationReport& r_;
};

} // namespace

ValidationReport validate(const FinAlgebra& a, Variety v) {
    if (a.sig() != signature_of(v))
        throw precondition_error("algebra signature does not match variety " + variety_name(v));
    ValidationReport report;
    Validator val(a, report);
    const int n = a.size();

    if (is_lattice_variety(v)) {
        val.lattice_laws("lattice", a.table("or"), a.table("and"));
        val.distributes_over("or", a.table("or"), "and", a.table("and"));
        val.distributes_over("and", a.table("and"), "or", a.table("or"));
        if (v == Variety::D) {
            const int b = a.apply("0"), t = a.apply("1");
            for (int x = 0; x < n; ++x) {
                if (a.apply("or", b, x) != x) val.fail("0 is bottom", {x});
                if (a.apply("and", t, x) != x) val.fail("1 is top", {x});
            }
        }
        return report;
    }

    const auto& ort = a.table("or_t");
    const auto& andt = a.table("and_t");
    val.lattice_laws("t", ort, andt);

    LatticeOps k;
    try {
        k = knowledge_tables(a);
    } catch (const precondition_error&) {
        val.fail("knowledge operations unavailable", {});
        return report;
    }
    val.lattice_laws("k", k.join, k.meet);

    // Twelve cross-distributivity instances.
    const std::vector<std::pair<std::string, const std::vector<int>*>> four_ops = {
        {"or_t", &ort}, {"and_t", &andt}, {"or_k", &k.join}, {"and_k", &k.meet}};
    for (const auto& f : four_ops)
        for (const auto& g : four_ops)
            if (f.second != g.second) val.distributes_over(f.first, *f.second, g.first, *g.second);

    auto leq_t = [&](int x, int y) { return ort[(std::size_t)(x * n + y)] == y; };
    auto leq_k = [&](int x, int y) { return k.join[(std::size_t)(x * n + y)] == y; };

    if (is_bounded(v)) {
        const int t0 = a.apply("0t"), t1 = a.apply("1t");
        const int k0 = a.apply("0k"), k1 = a.apply("1k");
        for (int x = 0; x < n; ++x) {
            if (a.apply("or_t", t0, x) != x) val.fail("0t is t-bottom", {x});
            if (a.apply("and_t", t1, x) != x) val.fail("1t is t-top", {x});
            if (k.join[(std::size_t)(k0 * n + x)] != x) val.fail("0k is k-bottom", {x});
            if (k.meet[(std::size_t)(k1 * n + x)] != x) val.fail("1k is k-top", {x});
        }
    }

    if (has_negation(v)) {
        const auto& neg = a.table("not");
        auto N = [&](int x) { return neg[(std::size_t)x]; };
        for (int x = 0; x < n; ++x) {
            if (N(N(x)) != x) val.fail("not involutory", {x});
            for (int y = 0; y < n; ++y) {
                if (N(a.apply("or_t", x, y)) != a.apply("and_t", N(x), N(y)))
                    val.fail("not dual endomorphism of t-lattice", {x, y});
                if (N(a.apply("and_t", x, y)) != a.apply("or_t", N(x), N(y)))
                    val.fail("not dual endomorphism of t-lattice", {x, y});
                if (N(k.join[(std::size_t)(x * n + y)]) !=
                    k.join[(std::size_t)(N(x) * n + N(y))])
                    val.fail("not endomorphism of k-lattice", {x, y});
                if (N(k.meet[(std::size_t)(x * n + y)]) !=
                    k.meet[(std::size_t)(N(x) * n + N(y))])
                    val.fail("not endomorphism of k-lattice", {x, y});
            }
        }
        if (v == Variety::DB) {
            if (N(a.apply("0t")) != a.apply("1t")) val.fail("not interchanges 0t,1t", {});
            if (N(a.apply("1t")) != a.apply("0t")) val.fail("not interchanges 0t,1t", {});
            if (N(a.apply("0k")) != a.apply("0k")) val.fail("not fixes 0k", {});
            if (N(a.apply("1k")) != a.apply("1k")) val.fail("not fixes 1k", {});
        }
    }

    // Derived sanity inequalities.
    for (int x = 0; x < n && report.valid; ++x)
        for (int y = 0; y < n; ++y) {
            int mt = a.apply("and_t", x, y), jt = a.apply("or_t", x, y);
            for (const auto* star : {&k.join, &k.meet}) {
                int s = (*star)[(std::size_t)(x * n + y)];
                if (!leq_t(mt, s) || !leq_t(s, jt)) {
                    val.fail("t-interpolation of knowledge operations", {x, y});
                    break;
                }
            }
        }
    for (int x = 0; x < n && report.valid; ++x)
        for (int y = 0; y < n; ++y) {
            if (!leq_k(x, y)) continue;
            for (int z = 0; z < n; ++z) {
                if (!leq_k(y, z)) continue;
                if (!leq_t(a.apply("and_t", x, z), y) || !leq_t(y, a.apply("or_t", x, z)))
                    val.fail("k-betweenness implies t-betweenness", {x, y, z});
            }
        }

    return report;
}

namespace {

FinAlgebra lattice_from_tables(const FinAlgebra& a, std::vector<int> join,
                               std::vector<int> meet, int bottom, int top, bool bounded) {
    std::vector<std::vector<int>> tables = {std::move(join), std::move(meet)};
    if (bounded) {
        tables.push_back({bottom});
        tables.push_back({top});
    }
    return FinAlgebra(signature_of(bounded ? Variety::D : Variety::Du), a.elems(),
                      std::move(tables));
}

} // namespace

FinAlgebra t_reduct(const FinAlgebra& a) {
    Variety v = variety_of(a);
    if (is_lattice_variety(v)) return a;
    bool bounded = is_bounded(v);
    int b = bounded ? a.apply("0t") : 0, t = bounded ? a.apply("1t") : 0;
    return lattice_from_tables(a, a.table("or_t"), a.table("and_t"), b, t, bounded);
}

FinAlgebra k_reduct(const FinAlgebra& a) {
    Variety v = variety_of(a);
    if (is_lattice_variety(v)) throw precondition_error("lattice has no knowledge reduct");
    auto k = knowledge_tables(a);
    bool bounded = is_bounded(v);
    int b = bounded ? a.apply("0k") : 0, t = bounded ? a.apply("1k") : 0;
    return lattice_from_tables(a, std::move(k.join), std::move(k.meet), b, t, bounded);
}

FinAlgebra drop_negation(const FinAlgebra& a) {
    Variety v = variety_of(a);
    if (v == Variety::DB)
        return FinAlgebra(signature_of(Variety::DPB), a.elems(),
                          {a.table("or_t"), a.table("and_t"), a.table("0t"), a.table("1t"),
                           a.table("0k"), a.table("1k")});
    if (v == Variety::DBu)
        return FinAlgebra(signature_of(Variety::DPBu), a.elems(),
                          {a.table("or_t"), a.table("and_t"), a.table("or_k"), a.table("and_k")});
    throw precondition_error("drop_negation expects a bilattice");
}

FinAlgebra to_unbounded_bilattice(const FinAlgebra& a) {
    if (variety_of(a) != Variety::DB)
        throw precondition_error("to_unbounded_bilattice expects a DB algebra");
    auto [ork, andk] = derive_knowledge_ops(a);
    return FinAlgebra(signature_of(Variety::DBu), a.elems(),
                      {a.table("or_t"), a.table("and_t"), std::move(ork), std::move(andk),
                       a.table("not")});
}

FinAlgebra pre_bilattice_reduct(const FinAlgebra& a) {
    Variety v = variety_of(a);
    if (is_lattice_variety(v)) throw precondition_error("lattice has no pre-bilattice reduct");
    auto k = knowledge_tables(a);
    return FinAlgebra(signature_of(Variety::DPBu), a.elems(),
                      {a.table("or_t"), a.table("and_t"), std::move(k.join), std::move(k.meet)});
}

SeparationWitness separating_family(AlgPtr a, int x, int y) {
    if (x == y) throw precondition_error("separating_family needs two distinct elements");
    const Variety v = variety_of(*a);
    if (is_lattice_variety(v)) throw precondition_error("separating_family expects a (pre-)bilattice");
    if (a->size() == 1) throw precondition_error("no separating hom");

    const bool bounded = is_bounded(v);
    AlgPtr t_red = make_alg(t_reduct(*a));
    AlgPtr two = make_alg(canonical(bounded ? "2" : "2lat-"));
    auto filters = enumerate_homs(t_red, two, Exec::Serial);
    const Hom* sep = nullptr;
    for (const auto& f : filters)
        if (f(x) != f(y)) {
            sep = &f;
            break;
        }
    if (!sep) throw precondition_error("no separating hom");
    const auto& xf = sep->map;

    if (has_negation(v)) {
        // h(c) = x(c)(1 - x(not c)) as a bit pair, swapped when x is
        // k-antitone.  Bit pairs index into the canonical four-element
        // universe.
        AlgPtr four = make_alg(canonical(bounded ? "4" : "4-"));
        const auto& neg = a->table("not");
        bool swap_bits;
        if (bounded) {
            swap_bits = xf[(std::size_t)a->apply("0k")] == 1;
        } else {
            // x is a k-lattice hom or a k-lattice dual hom; test which.
            swap_bits = false;
            const int n = a->size();
            for (int p = 0; p < n && !swap_bits; ++p)
                for (int q = 0; q < n; ++q) {
                    if (a->apply("or_k", p, q) != q) continue; // p <=k q
                    if (xf[(std::size_t)p] > xf[(std::size_t)q]) {
                        swap_bits = true;
                        break;
                    }
                }
        }
        std::vector<int> h(static_cast<std::size_t>(a->size()));
        for (int c = 0; c < a->size(); ++c) {
            int b1 = xf[(std::size_t)c];
            int b2 = 1 - xf[(std::size_t)neg[(std::size_t)c]];
            if (swap_bits) std::swap(b1, b2);
            h[(std::size_t)c] = four_index(b1, b2);
        }
        return {bounded ? "4" : "4-", Hom::make(a, four, std::move(h))};
    }

    // Pre-bilattice: quotient by ker x and classify the two-element image.
    Congruence ker = Congruence::make(a, xf);
    auto [q, proj] = quotient(a, ker);
    for (std::string_view name : bounded ? std::vector<std::string_view>{"2+", "2-"}
                                         : std::vector<std::string_view>{"2+-", "2--"}) {
        AlgPtr gen = make_alg(canonical(name));
        if (auto iso = find_isomorphism(proj.target, gen)) {
            return {std::string(name), compose(*iso, proj)};
        }
    }
    throw theorem_violation("two-element quotient is not a canonical generator");
}

} // namespace bilat
