#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bilat/birkhoff.hpp"
#include "bilat/corpus.hpp"
#include "bilat/duality.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/prodrep.hpp"
#include "bilat/varieties.hpp"

using namespace bilat;

TEST_CASE("bowtie of 2 is 4 via ij -> (i, 1-j)") {
    auto bt = bowtie(canonical("2"));
    CHECK(bt.algebra.size() == 4);
    auto iso = find_isomorphism(make_alg(canonical("4")), make_alg(bt.algebra));
    REQUIRE(iso);
    // Universe of 4 is 00,11,01,10; pairs are row-major (0,0),(0,1),(1,0),(1,1).
    // ij -> (i,1-j): 00->(0,1)=1, 11->(1,0)=2, 01->(0,0)=0, 10->(1,1)=3.
    CHECK(iso->map == std::vector<int>{1, 2, 0, 3});
}

TEST_CASE("bowtie size and trivial case") {
    CHECK(bowtie(trivial_algebra(Variety::D)).algebra.size() == 1);
    for (const auto& l : small_lattices(4, true))
        CHECK(bowtie(l).algebra.size() == l.size() * l.size());
}

TEST_CASE("truth interval of 4 is {01, 11}") {
    FinAlgebra v = truth_interval(canonical("4"));
    REQUIRE(v.size() == 2);
    CHECK(v.elems() == std::vector<std::string>{"11", "01"});
    CHECK(find_isomorphism(make_alg(v), make_alg(canonical("2"))));
}

TEST_CASE("truth interval recovers the bowtie factor for |L| <= 5") {
    for (const auto& l : small_lattices(5, true)) {
        auto bt = bowtie(l);
        FinAlgebra v = truth_interval(bt.algebra);
        CHECK(find_isomorphism(make_alg(v), make_alg(l)).has_value());
    }
}

TEST_CASE("theta on 4-: the two two-element classes") {
    AlgPtr fu = make_alg(canonical("4-"));
    Congruence theta = theta_congruence(fu);
    CHECK(theta.block_count == 2);
    CHECK(theta.related(fu->index_of("00"), fu->index_of("01")));
    CHECK(theta.related(fu->index_of("11"), fu->index_of("10")));
    CHECK(!theta.related(fu->index_of("00"), fu->index_of("11")));

    FinAlgebra q = theta_quotient(fu);
    CHECK(q.size() == 2);
    CHECK(find_isomorphism(make_alg(q), make_alg(canonical("2lat-"))));

    CHECK(theta_quotient(make_alg(trivial_algebra(Variety::DBu))).size() == 1);
}

TEST_CASE("theta on an unbounded bowtie is the first-coordinate kernel") {
    for (const auto& l : small_lattices(4, false)) {
        auto bt = bowtie(l);
        AlgPtr a = make_alg(bt.algebra);
        Congruence theta = theta_congruence(a);
        const int n = l.size();
        for (int x = 0; x < a->size(); ++x)
            for (int y = 0; y < a->size(); ++y)
                CHECK(theta.related(x, y) == (x / n == y / n));
        FinAlgebra q = theta_quotient(a);
        CHECK(find_isomorphism(make_alg(q), make_alg(l)).has_value());
    }
}

TEST_CASE("product representation for the canonical algebras") {
    {
        auto rep = verify_product_representation(make_alg(canonical("4")));
        CHECK(rep.factor.size() == 2);
        CHECK(rep.iso.is_bijective());
    }
    {
        auto rep = verify_product_representation(
            make_alg(product(canonical("4"), canonical("4"))));
        CHECK(rep.factor.size() == 4);
        CHECK(rep.iso.is_bijective());
    }
    {
        auto rep = verify_product_representation(make_alg(canonical("4-")));
        CHECK(rep.factor.size() == 2);
        CHECK(rep.iso.is_bijective());
    }
}

TEST_CASE("lattice reduct shape: A_t = L x L^d and A_k = L x L") {
    for (const char* name : {"4", "4-"}) {
        AlgPtr a = make_alg(canonical(name));
        auto rep = verify_product_representation(a);
        AlgPtr l = make_alg(rep.factor);
        const bool bounded = variety_of(*a) == Variety::DB;

        FinAlgebra t = t_reduct(*a);
        FinAlgebra k = k_reduct(*a);

        // L^d with bounds swapped.
        const FinAlgebra& lf = rep.factor;
        std::vector<std::vector<int>> dual_tables = {lf.table("and"), lf.table("or")};
        if (bounded) {
            dual_tables.push_back(lf.table("1"));
            dual_tables.push_back(lf.table("0"));
        }
        FinAlgebra ldual(lf.sig(), lf.elems(), std::move(dual_tables));

        CHECK(find_isomorphism(make_alg(t), make_alg(product(lf, ldual))).has_value());
        CHECK(find_isomorphism(make_alg(k), make_alg(product(lf, lf))).has_value());
    }
}

TEST_CASE("V agrees with KD at the object level, with sampled naturality") {
    AlterEgo ego = standard_alter_ego(Variety::DB);
    std::vector<AlgPtr> corpus = {make_alg(canonical("4")),
                                  make_alg(bowtie(chain_lattice(3, true)).algebra),
                                  make_alg(product(canonical("4"), canonical("4")))};
    for (const auto& a : corpus) {
        NaturalDual d = natural_dual(a, ego);
        FinAlgebra kd = upset_algebra(d.space.as_poset());
        FinAlgebra v = truth_interval(*a);
        CHECK(find_isomorphism(make_alg(v), make_alg(kd)).has_value());
    }

    // Naturality: psi(a) = {x : alpha(x(a)) = 1} commutes with restriction.
    AlgPtr a = corpus[0], b = corpus[1];
    NaturalDual da = natural_dual(a, ego), db = natural_dual(b, ego);
    AlgPtr fourp = ego.sorts[0];
    const int i10 = fourp->index_of("10"), i11 = fourp->index_of("11");
    auto psi = [&](const NaturalDual& d, const FinAlgebra& alg, int elem) {
        std::vector<int> upset;
        for (std::size_t x = 0; x < d.homs[0].size(); ++x) {
            int val = d.homs[0][x].map[(std::size_t)elem];
            if (val == i10 || val == i11) upset.push_back(static_cast<int>(x));
        }
        (void)alg;
        return upset;
    };
    for (const auto& h : enumerate_homs(a, b)) {
        // V(h) = restriction of h to [0k, 1t].
        FinAlgebra va = truth_interval(*a);
        for (int i = 0; i < va.size(); ++i) {
            int elem_a = a->index_of(va.name_of(i));
            int elem_b = h.map[(std::size_t)elem_a];
            // KD(h) sends the up-set psi_B(h(e)) back to psi_A(e) under
            // composition with D(h); check pointwise.
            auto ua = psi(da, *a, elem_a);
            auto ub = psi(db, *b, elem_b);
            // x in psi_A(e) iff x o h ... wrong direction; instead check:
            // for every y in D(B): y in psi_B(h(e)) iff y o h ... also needs
            // the dual map.  Use: alpha(y(h(e))) = alpha((y o h)(e)).
            for (std::size_t y = 0; y < db.homs[0].size(); ++y) {
                std::vector<int> composed((std::size_t)a->size());
                for (int e = 0; e < a->size(); ++e)
                    composed[(std::size_t)e] = db.homs[0][y].map[(std::size_t)h.map[(std::size_t)e]];
                int xa = -1;
                for (std::size_t x = 0; x < da.homs[0].size(); ++x)
                    if (da.homs[0][x].map == composed) xa = static_cast<int>(x);
                REQUIRE(xa >= 0);
                bool in_b = std::find(ub.begin(), ub.end(), static_cast<int>(y)) != ub.end();
                bool in_a = std::find(ua.begin(), ua.end(), xa) != ua.end();
                CHECK(in_b == in_a);
            }
        }
    }
}

TEST_CASE("theta quotient agrees with the unbounded dual construction") {
    // V-(A) and the proper-upset algebra of D-(A) are isomorphic.
    AlterEgo ego = standard_alter_ego(Variety::DBu);
    for (const auto& l : small_lattices(3, false)) {
        AlgPtr a = make_alg(bowtie(l).algebra);
        NaturalDual d = natural_dual(a, ego);
        Poset p = d.space.as_poset();
        DoublyPointedSpace dp{p, d.space.nullary_points[0], d.space.nullary_points[1]};
        FinAlgebra kd = upset_algebra(dp);
        CHECK(find_isomorphism(make_alg(theta_quotient(a)), make_alg(kd)).has_value());
    }
}

TEST_CASE("W is functorial on sampled homs") {
    AlgPtr l1 = make_alg(chain_lattice(2, true));
    AlgPtr l2 = make_alg(chain_lattice(3, true));
    auto homs12 = enumerate_homs(l1, l2);
    auto homs21 = enumerate_homs(l2, l1);
    AlgPtr w1 = make_alg(bowtie(*l1).algebra);
    AlgPtr w2 = make_alg(bowtie(*l2).algebra);
    auto lift = [&](const Hom& g, AlgPtr src, AlgPtr tgt, int nsrc, int ntgt) {
        std::vector<int> m((std::size_t)(nsrc * nsrc));
        for (int x = 0; x < nsrc; ++x)
            for (int y = 0; y < nsrc; ++y)
                m[(std::size_t)(x * nsrc + y)] =
                    g.map[(std::size_t)x] * ntgt + g.map[(std::size_t)y];
        return Hom::make(src, tgt, std::move(m)); // throws if not a hom
    };
    for (const auto& g : homs12)
        for (const auto& h : homs21) {
            Hom wg = lift(g, w1, w2, l1->size(), l2->size());
            Hom wh = lift(h, w2, w1, l2->size(), l1->size());
            Hom both = lift(compose(h, g), w1, w1, l1->size(), l1->size());
            CHECK(compose(wh, wg).map == both.map);
        }
    Hom id = identity_hom(l1);
    CHECK(lift(id, w1, w1, l1->size(), l1->size()).map == identity_hom(w1).map);
}

TEST_CASE("the MPSV interval accessor gives an isomorphic factor") {
    for (const char* name : {"4"}) {
        FinAlgebra a = canonical(name);
        CHECK(find_isomorphism(make_alg(truth_interval(a)), make_alg(truth_interval_mpsv(a)))
                  .has_value());
    }
}

TEST_CASE("the truth interval is the quotient by meet-with-1k") {
    // a ~ b iff a and_t 1k = b and_t 1k defines a t-lattice congruence
    // whose quotient is the representing lattice.
    for (const auto& l : small_lattices(4, true)) {
        AlgPtr a = make_alg(bowtie(l).algebra);
        const int k1 = a->apply("1k");
        std::vector<int> labels((std::size_t)a->size());
        for (int x = 0; x < a->size(); ++x)
            labels[(std::size_t)x] = a->apply("and_t", x, k1);
        AlgPtr t = make_alg(t_reduct(*a));
        auto [q, proj] = quotient(t, Congruence::make(t, labels));
        (void)proj;
        CHECK(find_isomorphism(make_alg(q), make_alg(truth_interval(*a))).has_value());
    }
}
