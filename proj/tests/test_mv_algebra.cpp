#include <doctest.h>

#include <algorithm>

#include "mv_algebra.hpp"

using namespace glr;

namespace {

std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("chains") {
    MVTable l3 = make_chain(3);
    CHECK(l3.op(1, 1) == 2);
    CHECK(l3.od(1, 1) == 0);
    CHECK(l3.neg_minus[1] == 1);
    CHECK(l3.neg_tilde[0] == 2);
    CHECK(l3.zero == 0);
    CHECK(l3.one == 2);

    MVTable l2 = make_chain(2); // the Boolean algebra {0,1}
    CHECK(l2.op(1, 1) == 1);
    CHECK(l2.od(1, 1) == 1);

    MVTable l1 = make_chain(1);
    CHECK(l1.zero == l1.one);
    CHECK(check_axioms(l1).all_pass);

    CHECK_THROWS_AS(make_chain(0), Error);
}

TEST_CASE("chains pass every axiom") {
    for (std::uint32_t n = 1; n <= 16; ++n) {
        MVTable t = make_chain(n);
        MVAxiomReport rep = check_axioms(t);
        INFO("chain ", n);
        CHECK(rep.all_pass);
    }
}

TEST_CASE("a patched chain cell is caught with a witness") {
    MVTable t = make_chain(3);
    t.oplus[1 * 3 + 1] = 1; // should be 2
    derive_mv(t);
    MVAxiomReport rep = check_axioms(t);
    CHECK(!rep.all_pass);
    const AxiomCheck* a6 = rep.find("A6-join-expressions");
    REQUIRE(a6);
    CHECK(!a6->ok);
    CHECK(a6->a == 1);
    CHECK(a6->b == 2);
    const AxiomCheck* a7 = rep.find("A7-meet-expressions");
    REQUIRE(a7);
    CHECK(!a7->ok);
    CHECK(a7->a == 0);
    CHECK(a7->b == 1);
    const AxiomCheck* refl = rep.find("order-reflexive");
    REQUIRE(refl);
    CHECK(!refl->ok);
}

TEST_CASE("products") {
    MVTable b4 = product_mv(std::vector<MVTable>{make_chain(2), make_chain(2)});
    CHECK(b4.n == 4);
    CHECK(check_axioms(b4).all_pass);
    CHECK(atoms(b4) == std::vector<std::uint16_t>{1, 2});

    MVTable m6 = product_mv(std::vector<MVTable>{make_chain(3), make_chain(2)});
    CHECK(m6.n == 6);
    CHECK(check_axioms(m6).all_pass);
    CHECK(atoms(m6).size() == 2);

    MVTable single = product_mv(std::vector<MVTable>{make_chain(3)});
    CHECK(single.same_tables(make_chain(3)));

    RunConfig tiny;
    tiny.max_elements = 4;
    CHECK_THROWS_AS(product_mv(std::vector<MVTable>{make_chain(3), make_chain(2)}, tiny), Error);
}

TEST_CASE("commutativity report") {
    CHECK(is_commutative(make_chain(5)).oplus_commutative);
    CHECK(is_commutative(product_mv(std::vector<MVTable>{make_chain(2), make_chain(3)}))
              .oplus_commutative);

    // detector mechanics on a raw asymmetric table
    MVTable t;
    t.n = 2;
    t.oplus = {0, 1, 0, 1};
    t.neg_minus = {1, 0};
    t.neg_tilde = {1, 0};
    t.zero = 0;
    t.one = 1;
    derive_mv(t);
    MVCommutativityReport rep = is_commutative(t);
    CHECK(!rep.oplus_commutative);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->first == 0);
    CHECK(rep.witness->second == 1);
}

TEST_CASE("atoms") {
    CHECK(atoms(make_chain(5)) == std::vector<std::uint16_t>{1});
    CHECK(atoms(make_chain(1)).empty());
}

TEST_CASE("canonical chain-product form") {
    auto iso7 = iso_to_chain_product(make_chain(7));
    REQUIRE(iso7.has_value());
    CHECK(iso7->chain_lengths == std::vector<std::uint32_t>{7});
    for (std::uint32_t i = 0; i < 7; ++i) CHECK(iso7->coords[i][0] == i);

    auto iso_b4 =
        iso_to_chain_product(product_mv(std::vector<MVTable>{make_chain(2), make_chain(2)}));
    REQUIRE(iso_b4.has_value());
    CHECK(sorted(iso_b4->chain_lengths) == std::vector<std::uint32_t>{2, 2});

    auto iso32 =
        iso_to_chain_product(product_mv(std::vector<MVTable>{make_chain(3), make_chain(2)}));
    REQUIRE(iso32.has_value());
    CHECK(sorted(iso32->chain_lengths) == std::vector<std::uint32_t>{2, 3});

    auto iso1 = iso_to_chain_product(make_chain(1));
    REQUIRE(iso1.has_value());
    CHECK(iso1->chain_lengths.empty());
}

TEST_CASE("chain-product form round-trips arbitrary chain multisets") {
    std::vector<std::vector<std::uint32_t>> cases = {
        {2}, {3}, {2, 2}, {3, 2}, {4, 3, 2}, {5, 5}, {2, 2, 2, 2}};
    for (const auto& lengths : cases) {
        std::vector<MVTable> chains;
        for (auto n : lengths) chains.push_back(make_chain(n));
        MVTable prod = product_mv(chains);
        CHECK(check_axioms(prod).all_pass);
        auto iso = iso_to_chain_product(prod);
        REQUIRE(iso.has_value());
        std::vector<std::uint32_t> expect = lengths;
        std::sort(expect.begin(), expect.end());
        CHECK(sorted(iso->chain_lengths) == expect);
    }
}

TEST_CASE("derived identities on valid tables") {
    for (const auto& t : {make_chain(6), product_mv(std::vector<MVTable>{make_chain(4), make_chain(3)})}) {
        for (std::uint32_t x = 0; x < t.n; ++x) {
            CHECK(t.neg_tilde[t.neg_minus[x]] == x);
            CHECK(t.neg_minus[t.neg_tilde[x]] == x);
            for (std::uint32_t y = 0; y < t.n; ++y) {
                // x (+) y = (y~ (.) x~)- = (y- (.) x-)~
                std::uint16_t via_tilde =
                    t.neg_minus[t.od(t.neg_tilde[y], t.neg_tilde[x])];
                std::uint16_t via_minus =
                    t.neg_tilde[t.od(t.neg_minus[y], t.neg_minus[x])];
                CHECK(t.op(std::uint16_t(x), std::uint16_t(y)) == via_tilde);
                CHECK(t.op(std::uint16_t(x), std::uint16_t(y)) == via_minus);
            }
        }
    }
}
