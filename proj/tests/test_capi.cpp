#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "glr/glr.h"

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { glr_string_free(s); }
};

struct Ring {
    glr_ring* r = nullptr;
    ~Ring() { glr_ring_free(r); }
};

struct Opts {
    glr_options* o = glr_options_new();
    ~Opts() { glr_options_free(o); }
};

// F2[x,y]/(x^2,xy,y^2) as a table spec document, built independently here
std::string f2xy_json() {
    nlohmann::json add = nlohmann::json::array(), mul = nlohmann::json::array();
    for (unsigned u = 0; u < 8; ++u) {
        nlohmann::json arow = nlohmann::json::array(), mrow = nlohmann::json::array();
        for (unsigned v = 0; v < 8; ++v) {
            arow.push_back(u ^ v);
            unsigned a = (u & v) & 1u;
            unsigned b = ((u & 1) * ((v >> 1) & 1)) ^ (((u >> 1) & 1) * (v & 1));
            unsigned c = ((u & 1) * ((v >> 2) & 1)) ^ (((u >> 2) & 1) * (v & 1));
            mrow.push_back(a | (b << 1) | (c << 2));
        }
        add.push_back(arow);
        mul.push_back(mrow);
    }
    nlohmann::json doc;
    doc["kind"] = "table";
    doc["n"] = 8;
    doc["add"] = add;
    doc["mul"] = mul;
    return doc.dump();
}

std::string chain3_json(bool patched) {
    nlohmann::json doc;
    doc["size"] = 3;
    doc["oplus"] = {{0, 1, 2}, {1, patched ? 1 : 2, 2}, {2, 2, 2}};
    doc["neg_minus"] = {2, 1, 0};
    doc["neg_tilde"] = {2, 1, 0};
    doc["zero"] = 0;
    doc["one"] = 2;
    return doc.dump();
}

} // namespace

TEST_CASE("version string") {
    REQUIRE(glr_version() != nullptr);
    CHECK(std::string(glr_version()) == "0.1.0");
}

TEST_CASE("parse, size and summary") {
    Ring ring;
    REQUIRE(glr_ring_parse("Z12", nullptr, &ring.r) == GLR_OK);
    CHECK(glr_ring_size(ring.r) == 12);

    Str summary;
    REQUIRE(glr_ring_summary_json(ring.r, &summary.s) == GLR_OK);
    CHECK(std::string(summary.s).find("\"size\": 12") != std::string::npos);

    Str rendered;
    REQUIRE(glr_ring_render_spec(ring.r, &rendered.s) == GLR_OK);
    CHECK(std::string(rendered.s) == "Z12");
}

TEST_CASE("render round trip for composite specs") {
    Ring ring;
    REQUIRE(glr_ring_parse("Z4 x Z9", nullptr, &ring.r) == GLR_OK);
    Str rendered;
    REQUIRE(glr_ring_render_spec(ring.r, &rendered.s) == GLR_OK);
    CHECK(std::string(rendered.s) == "Z4 x Z9");
}

TEST_CASE("parse errors carry offsets and messages") {
    glr_ring* out = nullptr;
    CHECK(glr_ring_parse("Zx", nullptr, &out) == GLR_E_PARSE);
    CHECK(out == nullptr);
    CHECK(glr_last_error_offset() == 1);
    CHECK(std::string(glr_last_error()).find("integer") != std::string::npos);
}

TEST_CASE("caps are honored") {
    Opts opts;
    REQUIRE(glr_options_set_max_elements(opts.o, 8) == GLR_OK);
    glr_ring* out = nullptr;
    CHECK(glr_ring_parse("Z100", opts.o, &out) == GLR_E_CAP_EXCEEDED);
    CHECK(glr_ring_parse("Z8", opts.o, &out) == GLR_OK);
    glr_ring_free(out);

    CHECK(glr_options_set_max_elements(nullptr, 8) == GLR_E_INVALID_ARGUMENT);
    CHECK(glr_options_set_jobs(opts.o, 0) == GLR_E_INVALID_ARGUMENT);
}

TEST_CASE("glr verdicts through the C surface") {
    Ring good;
    REQUIRE(glr_ring_parse("Z12", nullptr, &good.r) == GLR_OK);
    Str report;
    int ok = 0;
    REQUIRE(glr_report_check(good.r, "glr", nullptr, GLR_FORMAT_JSON, &report.s, &ok) == GLR_OK);
    CHECK(ok == 1);
    CHECK(std::string(report.s).find("\"is_glr\": true") != std::string::npos);

    Ring bad;
    REQUIRE(glr_ring_from_json(f2xy_json().c_str(), nullptr, &bad.r) == GLR_OK);
    Str report2;
    int ok2 = 1;
    REQUIRE(glr_report_check(bad.r, "glr", nullptr, GLR_FORMAT_JSON, &report2.s, &ok2) == GLR_OK);
    CHECK(ok2 == 0);
    CHECK(std::string(report2.s).find("\"is_glr\": false") != std::string::npos);
}

TEST_CASE("decompose through the C surface") {
    Ring ring;
    REQUIRE(glr_ring_parse("Z6", nullptr, &ring.r) == GLR_OK);
    Str report;
    int ok = 0;
    REQUIRE(glr_report_decompose(ring.r, nullptr, GLR_FORMAT_JSON, &report.s, &ok) == GLR_OK);
    CHECK(ok == 1);
    CHECK(std::string(report.s).find("\"certified\": true") != std::string::npos);
}

TEST_CASE("ideal reports and DOT") {
    Ring ring;
    REQUIRE(glr_ring_parse("Z12", nullptr, &ring.r) == GLR_OK);
    Str dot;
    REQUIRE(glr_report_ideals(ring.r, nullptr, GLR_FORMAT_DOT, &dot.s) == GLR_OK);
    CHECK(std::string(dot.s).rfind("digraph", 0) == 0);

    Str json;
    REQUIRE(glr_report_ideals(ring.r, nullptr, GLR_FORMAT_JSON, &json.s) == GLR_OK);
    CHECK(std::string(json.s).find("\"count\": 6") != std::string::npos);

    Str report;
    int ok = 0;
    CHECK(glr_report_check(ring.r, "glr", nullptr, GLR_FORMAT_DOT, &report.s, &ok) ==
          GLR_E_INVALID_ARGUMENT);
}

TEST_CASE("MV tables through the C surface") {
    Str good;
    int ok = 0;
    REQUIRE(glr_report_mv_table(chain3_json(false).c_str(), nullptr, GLR_FORMAT_JSON, &good.s,
                                &ok) == GLR_OK);
    CHECK(ok == 1);

    Str bad;
    int ok2 = 1;
    REQUIRE(glr_report_mv_table(chain3_json(true).c_str(), nullptr, GLR_FORMAT_JSON, &bad.s,
                                &ok2) == GLR_OK);
    CHECK(ok2 == 0);

    Str err;
    CHECK(glr_report_mv_table("{not json", nullptr, GLR_FORMAT_JSON, &err.s, &ok) == GLR_E_PARSE);
}

TEST_CASE("null arguments are rejected") {
    CHECK(glr_ring_parse(nullptr, nullptr, nullptr) == GLR_E_INVALID_ARGUMENT);
    Str s;
    CHECK(glr_ring_summary_json(nullptr, &s.s) == GLR_E_INVALID_ARGUMENT);
    CHECK(glr_ring_size(nullptr) == 0);
}

TEST_CASE("identical runs produce identical bytes") {
    Ring a, b;
    REQUIRE(glr_ring_parse("Z12", nullptr, &a.r) == GLR_OK);
    REQUIRE(glr_ring_parse("Z12", nullptr, &b.r) == GLR_OK);
    Str ra, rb;
    int ok = 0;
    REQUIRE(glr_report_check(a.r, "all", nullptr, GLR_FORMAT_JSON, &ra.s, &ok) == GLR_OK);
    REQUIRE(glr_report_check(b.r, "all", nullptr, GLR_FORMAT_JSON, &rb.s, &ok) == GLR_OK);
    CHECK(std::string(ra.s) == std::string(rb.s));
}
