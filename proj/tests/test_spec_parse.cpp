#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "corpus.hpp"
#include "spec_parse.hpp"

using namespace glr;

TEST_CASE("parsing the documented forms") {
    RingSpec z8 = parse_spec("Z8");
    REQUIRE(std::holds_alternative<CyclicSpec>(z8.node));
    CHECK(std::get<CyclicSpec>(z8.node).modulus == 8);

    RingSpec m = parse_spec("M2(GF(2)[x]/(x^2))");
    REQUIRE(std::holds_alternative<MatrixSpec>(m.node));
    const auto& ms = std::get<MatrixSpec>(m.node);
    CHECK(ms.dim == 2);
    REQUIRE(std::holds_alternative<PolyQuotientSpec>(ms.base->node));
    const auto& ps = std::get<PolyQuotientSpec>(ms.base->node);
    CHECK(ps.p == 2);
    CHECK(ps.modulus == std::vector<std::uint32_t>{0, 0, 1});

    RingSpec prod = parse_spec("Z4 x Z9");
    REQUIRE(std::holds_alternative<ProductSpec>(prod.node));
    CHECK(std::get<ProductSpec>(prod.node).factors.size() == 2);

    RingSpec q = parse_spec("Z8/(4)");
    REQUIRE(std::holds_alternative<QuotientSpec>(q.node));
    CHECK(std::get<QuotientSpec>(q.node).generators == std::vector<std::uint32_t>{4});
    CHECK(build_ring(q).size() == 4);
}

TEST_CASE("quotient binds tighter than product") {
    RingSpec s = parse_spec("Z4 x Z9/(3)");
    REQUIRE(std::holds_alternative<ProductSpec>(s.node));
    const auto& factors = std::get<ProductSpec>(s.node).factors;
    REQUIRE(factors.size() == 2);
    CHECK(std::holds_alternative<CyclicSpec>(factors[0].node));
    CHECK(std::holds_alternative<QuotientSpec>(factors[1].node));

    RingSpec t = parse_spec("(Z4 x Z9)/(3)");
    REQUIRE(std::holds_alternative<QuotientSpec>(t.node));
}

TEST_CASE("polynomial syntax variants") {
    RingSpec gf4 = parse_spec("GF(2)[x]/(x^2+x+1)");
    CHECK(std::get<PolyQuotientSpec>(gf4.node).modulus == std::vector<std::uint32_t>{1, 1, 1});

    RingSpec r = parse_spec("GF(3)[x]/(2x^2+1)");
    CHECK(std::get<PolyQuotientSpec>(r.node).modulus == std::vector<std::uint32_t>{1, 0, 2});

    RingSpec lin = parse_spec("GF(5)[x]/(x)");
    CHECK(std::get<PolyQuotientSpec>(lin.node).modulus == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("parse errors carry byte offsets") {
    auto offset_of = [](const std::string& text) -> std::size_t {
        try {
            parse_spec(text);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
            return e.offset();
        }
        return Error::npos;
    };
    CHECK(offset_of("Q4") == 0);
    CHECK(offset_of("Z") == 1);
    CHECK(offset_of("M2(Z4") == 5);
    CHECK(offset_of("Z4 x") == 4);
    CHECK(offset_of("Z4 )") == 3);
}

TEST_CASE("file references") {
    std::string path = "test_spec_ref.json";
    {
        std::ofstream out(path);
        out << spec_to_json(f2xy_spec()).dump();
    }
    RingSpec loaded = parse_spec("@" + path);
    CHECK(spec_equal(loaded, f2xy_spec()));
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_spec("@missing_file.json"), Error);

    RingSpec inlined = parse_spec("@inline:" + spec_to_json(f2xy_spec()).dump());
    CHECK(spec_equal(inlined, f2xy_spec()));
}

TEST_CASE("render round-trips the whole corpus") {
    for (const auto& entry : corpus_full()) {
        INFO(entry.name);
        std::string text = render_spec(entry.spec);
        CHECK(spec_equal(parse_spec(text), entry.spec));
    }
    // nested products keep their grouping
    RingSpec nested{ProductSpec{
        {RingSpec{ProductSpec{{RingSpec{CyclicSpec{2}}, RingSpec{CyclicSpec{3}}}}},
         RingSpec{CyclicSpec{5}}}}};
    CHECK(spec_equal(parse_spec(render_spec(nested)), nested));

    RingSpec quot{QuotientSpec{
        std::make_shared<RingSpec>(RingSpec{ProductSpec{
            {RingSpec{CyclicSpec{4}}, RingSpec{CyclicSpec{9}}}}}),
        {3}}};
    CHECK(spec_equal(parse_spec(render_spec(quot)), quot));
}

TEST_CASE("JSON round-trips the whole corpus") {
    for (const auto& entry : corpus_full()) {
        INFO(entry.name);
        CHECK(spec_equal(spec_from_json(spec_to_json(entry.spec)), entry.spec));
    }
}

TEST_CASE("malformed JSON specs are rejected") {
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"kind", "nonsense"}}), Error);
    CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"kind", "cyclic"}}), Error);
}
