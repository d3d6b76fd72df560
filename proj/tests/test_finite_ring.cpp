#include <doctest.h>

#include "corpus.hpp"
#include "finite_ring.hpp"
#include "oracles.hpp"

using namespace glr;

namespace {

RingSpec cyclic(std::uint32_t n) { return RingSpec{CyclicSpec{n}}; }

RingSpec xpow(std::uint32_t p, std::uint32_t d) {
    std::vector<std::uint32_t> m(d + 1, 0);
    m[d] = 1;
    return RingSpec{PolyQuotientSpec{p, std::move(m)}};
}

// 2Z/4Z: the two-element rng {0, 2} with zero multiplication
RingSpec two_z_four_z() {
    TableSpec t;
    t.n = 2;
    t.add = {{0, 1}, {1, 0}};
    t.mul = {{0, 0}, {0, 0}};
    return RingSpec{std::move(t)};
}

} // namespace

TEST_CASE("cyclic rings") {
    FiniteRing z4 = build_ring(cyclic(4));
    CHECK(z4.size() == 4);
    CHECK(z4.zero() == 0);
    REQUIRE(z4.unity().has_value());
    CHECK(*z4.unity() == 1);
    CHECK(z4.add(3, 3) == 2);
    CHECK(z4.mul(2, 2) == 0);
    CHECK(!validate_ring(z4));

    FiniteRing z1 = build_ring(cyclic(1));
    CHECK(z1.size() == 1);
    REQUIRE(z1.unity().has_value());
    CHECK(*z1.unity() == 0); // 0 = 1 in the trivial ring

    CHECK_THROWS_AS(build_ring(cyclic(0)), Error);
}

TEST_CASE("polynomial quotient rings") {
    // GF(2)[x]/(x^2): x encoded as 2, 1+x as 3
    FiniteRing r = build_ring(xpow(2, 2));
    CHECK(r.size() == 4);
    CHECK(r.mul(2, 2) == 0);  // x * x = 0
    CHECK(r.mul(3, 3) == 1);  // (1+x)^2 = 1
    CHECK(r.add(2, 3) == 1);
    REQUIRE(r.unity().has_value());
    CHECK(*r.unity() == 1);
    CHECK(!validate_ring(r));

    // GF(4) = GF(2)[x]/(x^2+x+1): x^2 = x+1, x(x+1) = 1
    FiniteRing gf4 = build_ring(RingSpec{PolyQuotientSpec{2, {1, 1, 1}}});
    CHECK(gf4.size() == 4);
    CHECK(gf4.mul(2, 2) == 3);
    CHECK(gf4.mul(2, 3) == 1);
    CHECK(!validate_ring(gf4));

    // GF(3)[x]/(x^2): (1+x)(1+2x) = 1 + 3x + 2x^2 = 1
    FiniteRing r9 = build_ring(xpow(3, 2));
    CHECK(r9.size() == 9);
    std::uint32_t one_x = 1 + 3 * 1, one_2x = 1 + 3 * 2;
    CHECK(r9.mul(ElementId(one_x), ElementId(one_2x)) == 1);
    CHECK(!validate_ring(r9));

    CHECK_THROWS_AS(build_ring(RingSpec{PolyQuotientSpec{4, {0, 1}}}), Error); // p not prime
    CHECK_THROWS_AS(build_ring(RingSpec{PolyQuotientSpec{2, {1}}}), Error);    // degree 0
    CHECK_THROWS_AS(build_ring(RingSpec{PolyQuotientSpec{2, {0}}}), Error);    // zero modulus
}

TEST_CASE("matrix rings") {
    RingSpec m2gf2x2{MatrixSpec{2, std::make_shared<RingSpec>(xpow(2, 2))}};
    FiniteRing r = build_ring(m2gf2x2);
    CHECK(r.size() == 256);
    CHECK(r.unity().has_value());
    CHECK(!validate_ring(r));

    // matrix units in M2(GF(2)): cell (r,c) at digit r*2+c, E11*E12 = E12
    RingSpec m2{MatrixSpec{2, std::make_shared<RingSpec>(xpow(2, 1))}};
    FiniteRing m = build_ring(m2);
    CHECK(m.size() == 16);
    ElementId e11 = 1, e12 = 2, e21 = 4, e22 = 8;
    CHECK(m.mul(e11, e12) == e12);
    CHECK(m.mul(e12, e21) == e11);
    CHECK(m.mul(e21, e12) == e22);
    CHECK(m.mul(e11, e21) == m.zero());
    REQUIRE(m.unity().has_value());
    CHECK(*m.unity() == e11 + e22);
    CHECK(!validate_ring(m));

    CHECK_THROWS_AS(build_ring(RingSpec{MatrixSpec{2, std::make_shared<RingSpec>(cyclic(16))}}),
                    Error); // 16^4 elements over the cap
}

TEST_CASE("product rings use least-significant-first mixed radix") {
    FiniteRing r = build_ring(RingSpec{ProductSpec{{cyclic(2), cyclic(3)}}});
    CHECK(r.size() == 6);
    // (1,0) is index 1, (0,1) is index 2, unity (1,1) is index 3
    REQUIRE(r.unity().has_value());
    CHECK(*r.unity() == 3);
    CHECK(r.add(1, 1) == 0);
    CHECK(r.mul(3, 3) == 3);
    CHECK(!validate_ring(r));
}

TEST_CASE("table ring validation") {
    // mul := add on Z3 breaks distributivity
    TableSpec t;
    t.n = 3;
    t.add = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    t.mul = t.add;
    try {
        build_ring(RingSpec{std::move(t)});
        FAIL("expected TableNotARing");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TableNotARing);
        CHECK(std::string(e.what()).find("distributivity") != std::string::npos);
    }

    TableSpec bad_entry;
    bad_entry.n = 2;
    bad_entry.add = {{0, 1}, {1, 5}};
    bad_entry.mul = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(build_ring(RingSpec{std::move(bad_entry)}), Error);

    FiniteRing rng = build_ring(two_z_four_z());
    CHECK(rng.size() == 2);
    CHECK(!rng.unity().has_value());
}

TEST_CASE("find_unity") {
    CHECK(*find_unity(build_ring(cyclic(6))) == 1);
    CHECK(*find_unity(build_ring(cyclic(1))) == 0);
    CHECK(!find_unity(build_ring(two_z_four_z())).has_value());
}

TEST_CASE("central idempotent generation") {
    FiniteRing z6 = build_ring(cyclic(6));
    CentralIdempotentReport rep = is_central_idempotent_generated(z6);
    REQUIRE(rep.holds);
    REQUIRE(rep.witness_map.size() == 6);
    for (std::uint32_t x = 0; x < 6; ++x) {
        ElementId e = rep.witness_map[x];
        CHECK(z6.mul(e, e) == e);
        CHECK(z6.mul(e, ElementId(x)) == x);
    }

    CentralIdempotentReport bad = is_central_idempotent_generated(build_ring(two_z_four_z()));
    CHECK(!bad.holds);
    REQUIRE(bad.failing.has_value());
    CHECK(*bad.failing == 1); // the element 2 of 2Z/4Z

    FiniteRing prod = build_ring(RingSpec{ProductSpec{{cyclic(2), cyclic(3)}}});
    CentralIdempotentReport prep = is_central_idempotent_generated(prod);
    CHECK(prep.holds);
}

TEST_CASE("central idempotent generation holds whenever a unity exists") {
    for (const auto& entry : corpus_base()) {
        if (spec_size(entry.spec) > 64) continue;
        FiniteRing r = build_ring(entry.spec);
        if (find_unity(r)) {
            INFO(entry.name);
            CHECK(is_central_idempotent_generated(r).holds);
        }
    }
}

TEST_CASE("quotient rings") {
    FiniteRing z8 = build_ring(cyclic(8));
    QuotientResult q = quotient_ring(z8, oracle::mask_of(z8, {0, 4}));
    CHECK(q.ring.size() == 4);
    FiniteRing z4 = build_ring(cyclic(4));
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            CHECK(q.ring.add(ElementId(a), ElementId(b)) == z4.add(ElementId(a), ElementId(b)));
            CHECK(q.ring.mul(ElementId(a), ElementId(b)) == z4.mul(ElementId(a), ElementId(b)));
        }
    // projection is a homomorphism with kernel {0,4}
    for (std::uint32_t a = 0; a < 8; ++a) {
        for (std::uint32_t b = 0; b < 8; ++b) {
            CHECK(q.projection[z8.add(ElementId(a), ElementId(b))] ==
                  q.ring.add(q.projection[a], q.projection[b]));
            CHECK(q.projection[z8.mul(ElementId(a), ElementId(b))] ==
                  q.ring.mul(q.projection[a], q.projection[b]));
        }
        CHECK((q.projection[a] == q.ring.zero()) == (a == 0 || a == 4));
    }

    Bitset zero_only(8);
    zero_only.set(0);
    QuotientResult same = quotient_ring(z8, zero_only);
    CHECK(same.ring.size() == 8);
    for (std::uint32_t a = 0; a < 8; ++a) CHECK(same.projection[a] == a);

    Bitset all(8);
    for (std::uint32_t i = 0; i < 8; ++i) all.set(i);
    CHECK(quotient_ring(z8, all).ring.size() == 1);

    CHECK_THROWS_AS(quotient_ring(z8, oracle::mask_of(z8, {0, 1})), Error);
}

TEST_CASE("quotient spec delegates to quotient_ring") {
    RingSpec spec{QuotientSpec{std::make_shared<RingSpec>(cyclic(8)), {4}}};
    FiniteRing r = build_ring(spec);
    CHECK(r.size() == 4);
    CHECK(*find_unity(r) == 1);
}

TEST_CASE("subring restriction of an ideal") {
    FiniteRing z6 = build_ring(cyclic(6));
    FiniteRing sub = subring(z6, oracle::mask_of(z6, {0, 3}));
    CHECK(sub.size() == 2);
    REQUIRE(sub.unity().has_value());
    CHECK(*sub.unity() == 1); // 3 acts as the unity of {0,3}
    CHECK(sub.mul(1, 1) == 1);
    CHECK_THROWS_AS(subring(z6, oracle::mask_of(z6, {0, 1})), Error);
}

TEST_CASE("size caps") {
    CHECK_THROWS_AS(build_ring(cyclic(5000)), Error);
    RunConfig small;
    small.max_elements = 8;
    CHECK_THROWS_AS(build_ring(cyclic(9), small), Error);
    CHECK(build_ring(cyclic(8), small).size() == 8);
}

TEST_CASE("every corpus ring up to 256 elements satisfies all ring axioms exhaustively") {
    for (const auto& entry : corpus_full()) {
        if (spec_size(entry.spec) > 256) continue;
        INFO(entry.name);
        FiniteRing r = build_ring(entry.spec);
        auto witness = validate_ring(r);
        if (witness) { FAIL(entry.name << " fails " << witness->law); }
    }
}

TEST_CASE("the 625-element truncated polynomial ring satisfies all ring axioms") {
    FiniteRing r = build_ring(xpow(5, 4));
    CHECK(r.size() == 625);
    CHECK(!validate_ring(r));
}
