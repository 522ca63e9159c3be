#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bilat/birkhoff.hpp"
#include "bilat/corpus.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/varieties.hpp"

using namespace bilat;

TEST_CASE("dual of the 2x2 diamond is a two-element antichain") {
    FinAlgebra diamond = product(canonical("2"), canonical("2"));
    auto dual = priestley_dual(diamond);
    REQUIRE(dual.bounded);
    REQUIRE(dual.poset.size() == 2);
    CHECK(!dual.poset.le(0, 1));
    CHECK(!dual.poset.le(1, 0));
}

TEST_CASE("dual of 2 is a single point") {
    auto dual = priestley_dual(canonical("2"));
    CHECK(dual.poset.size() == 1);
}

TEST_CASE("unbounded dual of the diamond is the four-element bounded diamond") {
    FinAlgebra l = t_reduct(canonical("4-")); // 2x2 diamond without bounds
    auto dual = priestley_dual(l);
    REQUIRE(!dual.bounded);
    REQUIRE(dual.poset.size() == 4);
    REQUIRE(dual.bottom >= 0);
    REQUIRE(dual.top >= 0);
    // bottom < two incomparable points < top
    int mids = 0;
    for (int p = 0; p < 4; ++p) {
        CHECK(dual.poset.le(dual.bottom, p));
        CHECK(dual.poset.le(p, dual.top));
        if (p != dual.bottom && p != dual.top) ++mids;
    }
    CHECK(mids == 2);
}

TEST_CASE("invalid lattices are rejected") {
    // A two-element 'lattice' with a broken join table.
    FinAlgebra bogus(signature_of(Variety::Du), {"a", "b"}, {{1, 0, 0, 1}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(priestley_dual(bogus), validation_error);
    CHECK_THROWS_AS(priestley_dual(canonical("4")), precondition_error);
}

TEST_CASE("up-set algebra of small spaces") {
    // Two-element antichain -> 2x2 diamond with bounds.
    Poset anti = Poset::discrete({"x", "y"});
    FinAlgebra l = upset_algebra(anti);
    CHECK(l.size() == 4);
    CHECK(find_isomorphism(make_alg(l), make_alg(product(canonical("2"), canonical("2")))));

    // Empty space -> the one-element bounded lattice.
    Poset empty;
    FinAlgebra one = upset_algebra(empty);
    CHECK(one.size() == 1);

    // Four-element bounded diamond -> 4 up-sets containing top, not bottom.
    auto dual = priestley_dual(t_reduct(canonical("4-")));
    FinAlgebra back = upset_algebra(dual.doubly_pointed());
    CHECK(back.size() == 4);
    CHECK(find_isomorphism(make_alg(back), make_alg(t_reduct(canonical("4-")))));
}

TEST_CASE("coproducts of spaces") {
    Poset pt = Poset::discrete({"p"});
    Poset two = coproduct_spaces(pt, pt);
    CHECK(two.size() == 2);
    CHECK(!two.le(0, 1));

    // P01: two 3-chains with endpoints merge into the bounded diamond.
    DoublyPointedSpace chain3{Poset::chain(3), 0, 2};
    auto diamond = coproduct_spaces(chain3, chain3);
    CHECK(diamond.poset.size() == 4);
    CHECK(poset_bottom(diamond.poset).value() == diamond.bottom);
    CHECK(poset_top(diamond.poset).value() == diamond.top);
    auto dual = priestley_dual(t_reduct(canonical("4-")));
    CHECK(find_poset_isomorphism(diamond.poset, dual.poset));

    // Size law: |X| + |Y| - 2.
    CHECK(diamond.poset.size() == 3 + 3 - 2);
}

TEST_CASE("order dual of an antichain is itself") {
    Poset anti = Poset::discrete({"x", "y"});
    CHECK(find_poset_isomorphism(anti, order_dual(anti)));
    // And of a chain, the reversed chain.
    Poset c = Poset::chain(3);
    CHECK(order_dual(c).le(2, 0));
}

TEST_CASE("order dual of a doubly-pointed space swaps the endpoints") {
    auto dual = priestley_dual(t_reduct(canonical("4-")));
    auto flipped = order_dual(dual.doubly_pointed());
    CHECK(flipped.bottom == dual.top);
    CHECK(flipped.top == dual.bottom);
    CHECK(poset_bottom(flipped.poset).value() == flipped.bottom);
    CHECK(poset_top(flipped.poset).value() == flipped.top);
}

TEST_CASE("round trip through the dual for every lattice of size <= 7") {
    for (bool bounded : {true, false}) {
        auto lattices = small_lattices(7, bounded);
        // All isomorphism classes up to size 7 appear: 1,1,1,2,3,5,8.
        int counts[8] = {0};
        for (const auto& l : lattices) ++counts[l.size()];
        CHECK(counts[1] == 1);
        CHECK(counts[2] == 1);
        CHECK(counts[3] == 1);
        CHECK(counts[4] == 2);
        CHECK(counts[5] == 3);
        CHECK(counts[6] == 5);
        CHECK(counts[7] == 8);

        for (const auto& l : lattices) {
            auto dual = priestley_dual(l);
            FinAlgebra back = dual.bounded ? upset_algebra(dual.poset)
                                           : upset_algebra(dual.doubly_pointed());
            INFO((bounded ? "bounded size " : "unbounded size ") << l.size());
            CHECK(find_isomorphism(make_alg(l), make_alg(back)).has_value());
        }
    }
}

TEST_CASE("dual size equals the number of join-irreducibles (bounded case)") {
    for (const auto& l : small_lattices(7, true)) {
        auto dual = priestley_dual(l);
        CHECK(dual.poset.size() == static_cast<int>(join_irreducibles(l).size()));
    }
}

TEST_CASE("coproduct size laws") {
    auto duals = [](const FinAlgebra& a, const FinAlgebra& b) {
        return std::make_pair(priestley_dual(a), priestley_dual(b));
    };
    auto [da, db] = duals(chain_lattice(3, true), product(canonical("2"), canonical("2")));
    CHECK(coproduct_spaces(da.poset, db.poset).size() == da.poset.size() + db.poset.size());

    auto [ua, ub] =
        duals(chain_lattice(3, false), t_reduct(canonical("4-")));
    auto cp = coproduct_spaces(ua.doubly_pointed(), ub.doubly_pointed());
    CHECK(cp.poset.size() == ua.poset.size() + ub.poset.size() - 2);
}
