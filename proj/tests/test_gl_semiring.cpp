#include <doctest.h>

#include <memory>

#include "corpus.hpp"
#include "gl_semiring.hpp"
#include "oracles.hpp"

using namespace glr;

namespace {

IdealLattice lattice_of(const RingSpec& spec) {
    return enumerate_ideals(std::make_shared<FiniteRing>(build_ring(spec)));
}

RingSpec cyclic(std::uint32_t n) { return RingSpec{CyclicSpec{n}}; }

} // namespace

TEST_CASE("semiring of ideals") {
    IdealLattice z4 = lattice_of(cyclic(4));
    GLSemiring s = semiring_of_ideals(z4);
    CHECK(s.n == 3);
    CHECK(s.zero == 0);
    CHECK(s.one == 2);
    CHECK(s.tm(1, 1) == 0); // (2)(2) = {0} in Z4
    CHECK(check_gl_axioms(s).all_pass);

    IdealLattice z6 = lattice_of(cyclic(6));
    GLSemiring s6 = semiring_of_ideals(z6);
    CHECK(s6.n == 4);
    for (std::uint16_t i = 0; i < 4; ++i)
        for (std::uint16_t j = 0; j < 4; ++j)
            CHECK(s6.tm(i, j) == z6.intersection(i, j)); // times = meet mod 6

    GLSemiring m2 = semiring_of_ideals(lattice_of(RingSpec{
        MatrixSpec{2, std::make_shared<RingSpec>(RingSpec{PolyQuotientSpec{2, {0, 1}}})}}));
    CHECK(m2.n == 2);
    CHECK(check_gl_axioms(m2).all_pass);
}

TEST_CASE("gl axioms on the counterexample ring") {
    GLSemiring s = semiring_of_ideals(lattice_of(f2xy_spec()));
    GLAxiomReport rep = check_gl_axioms(s);
    CHECK(!rep.all_pass);
    const AxiomCheck* dneg = rep.find("double-negation");
    REQUIRE(dneg);
    CHECK(!dneg->ok);
    CHECK(dneg->a == 1); // the ideal (x)
    const AxiomCheck* cl2 = rep.find("clause-ii-sum-from-negations");
    REQUIRE(cl2);
    CHECK(!cl2->ok);
    CHECK_THROWS_AS(mv_from_semiring(s), Error);
}

TEST_CASE("trivial semiring passes vacuously") {
    GLSemiring s = semiring_of_ideals(lattice_of(cyclic(1)));
    CHECK(s.n == 1);
    CHECK(check_gl_axioms(s).all_pass);
}

TEST_CASE("mv_from_semiring recovers chains") {
    GLSemiring s4 = semiring_of_ideals(lattice_of(cyclic(4)));
    CHECK(mv_from_semiring(s4).same_tables(make_chain(3)));

    GLSemiring s8 = semiring_of_ideals(lattice_of(cyclic(8)));
    CHECK(mv_from_semiring(s8).same_tables(make_chain(4)));

    GLSemiring s2 = semiring_of_ideals(lattice_of(cyclic(2)));
    CHECK(mv_from_semiring(s2).same_tables(make_chain(2)));
}

TEST_CASE("semiring_from_mv") {
    GLSemiring s3 = semiring_from_mv(make_chain(3));
    CHECK(s3.tm(1, 1) == 0); // 1 (.) 1 = 0 in the three-element chain
    CHECK(check_gl_axioms(s3).all_pass);

    MVTable b4 = product_mv(std::vector<MVTable>{make_chain(2), make_chain(2)});
    GLSemiring sb = semiring_from_mv(b4);
    for (std::uint16_t x = 0; x < 4; ++x)
        for (std::uint16_t y = 0; y < 4; ++y) CHECK(sb.tm(x, y) == b4.mt(x, y)); // times = meet
    CHECK(check_gl_axioms(sb).all_pass);
}

TEST_CASE("the semiring of Z6 yields the 2x2 Boolean MV-algebra") {
    GLSemiring s6 = semiring_of_ideals(lattice_of(cyclic(6)));
    MVTable mv = mv_from_semiring(s6);
    CHECK(check_axioms(mv).all_pass);
    auto iso = iso_to_chain_product(mv);
    REQUIRE(iso.has_value());
    CHECK(iso->chain_lengths == std::vector<std::uint32_t>{2, 2});
}

TEST_CASE("duality round trips exactly") {
    for (std::uint32_t n : {1u, 2u, 5u, 8u})
        CHECK(check_duality(make_chain(n), semiring_from_mv(make_chain(n))).exact());

    MVTable prod = product_mv(std::vector<MVTable>{make_chain(3), make_chain(4)});
    CHECK(check_duality(prod, semiring_from_mv(prod)).exact());

    for (std::uint32_t n : {2u, 4u, 6u, 8u, 9u, 12u, 30u}) {
        GLSemiring s = semiring_of_ideals(lattice_of(cyclic(n)));
        CHECK(check_duality(mv_from_semiring(s), s).exact());
    }
}

TEST_CASE("the correspondence between ring ideals and semiring ideals") {
    IdealLattice z4 = lattice_of(cyclic(4));
    Bitset two = z4.ideal(1);
    SemiringIdeal s = semiring_ideal_S(z4, two);
    CHECK(s.count() == 2);
    CHECK(s.test(0));
    CHECK(s.test(1));
    CHECK(semiring_ideal_Sinv(z4, s) == two);

    SemiringIdeal szero = semiring_ideal_S(z4, z4.ideal(0));
    CHECK(szero.count() == 1);
    CHECK(szero.test(0));

    Bitset not_ideal(4);
    not_ideal.set(0);
    not_ideal.set(1);
    CHECK_THROWS_AS(semiring_ideal_S(z4, not_ideal), Error);
}

TEST_CASE("semiring ideal enumeration matches the brute-force subset scan") {
    for (const auto& spec : {cyclic(6), cyclic(12), cyclic(60),
                             RingSpec{ProductSpec{{cyclic(2), cyclic(2), cyclic(2)}}}}) {
        IdealLattice L = lattice_of(spec);
        std::vector<SemiringIdeal> fast = enumerate_semiring_ideals(L);
        std::vector<Bitset> brute = oracle::brute_force_semiring_ideals(L);
        REQUIRE(fast.size() == brute.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == brute[i]);
    }
    // Z6 has exactly as many semiring ideals as ring ideals
    CHECK(enumerate_semiring_ideals(lattice_of(cyclic(6))).size() == 4);
}

TEST_CASE("galois correspondence") {
    for (const auto& spec : {cyclic(4), cyclic(6), cyclic(8), cyclic(12), cyclic(60),
                             RingSpec{ProductSpec{{cyclic(2), cyclic(2), cyclic(2)}}}}) {
        GaloisReport rep = check_galois(lattice_of(spec));
        CHECK(rep.all_pass());
    }
}

TEST_CASE("semiring ideal cap") {
    RunConfig cfg;
    cfg.max_semiring_ideals = 2;
    CHECK_THROWS_AS(enumerate_semiring_ideals(lattice_of(cyclic(12)), cfg), Error);
}

TEST_CASE("S(I) equals the generator-sum definition on small lattices") {
    // Every ideal is the sum of the principal ideals of its own elements, so
    // "J contained in a finite sum of principal ideals of elements of I"
    // collapses to "J <= I" -- which is exactly the down-set form S uses.
    for (const auto& spec : {cyclic(12), cyclic(6), RingSpec{f2xy_spec()}}) {
        IdealLattice L = lattice_of(spec);
        for (IdealId i = 0; i < IdealId(L.count()); ++i) {
            IdealId gen_sum = L.bottom();
            L.ideal(i).for_each(
                [&](std::size_t x) { gen_sum = L.sum(gen_sum, L.principal(ElementId(x))); });
            CHECK(gen_sum == i);

            SemiringIdeal down = semiring_ideal_S(L, L.ideal(i));
            for (IdealId j = 0; j < IdealId(L.count()); ++j)
                CHECK(down.test(std::size_t(j)) == L.leq(j, i));
        }
    }
}
