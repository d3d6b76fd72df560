#include "spec_parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace glr {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    RingSpec parse() {
        RingSpec spec = parse_product();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input");
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        throw Error(ErrorCode::ParseError,
                    "expected " + expected + " at offset " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("'") + c + "'");
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    std::uint32_t parse_int() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("an integer");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 0xffffffffull) fail("a smaller integer");
            ++pos_;
        }
        return std::uint32_t(v);
    }

    RingSpec parse_product() {
        std::vector<RingSpec> factors;
        factors.push_back(parse_postfix());
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == 'x') {
                ++pos_;
                factors.push_back(parse_postfix());
            } else {
                break;
            }
        }
        if (factors.size() == 1) return std::move(factors[0]);
        return RingSpec{ProductSpec{std::move(factors)}};
    }

    RingSpec parse_postfix() {
        RingSpec spec = parse_primary();
        while (peek_is('/')) {
            ++pos_;
            expect('(');
            std::vector<std::uint32_t> gens;
            gens.push_back(parse_int());
            while (eat(',')) gens.push_back(parse_int());
            expect(')');
            spec = RingSpec{
                QuotientSpec{std::make_shared<RingSpec>(std::move(spec)), std::move(gens)}};
        }
        return spec;
    }

    RingSpec parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("'Z<n>', 'GF(', 'M<k>(', '(' or '@'");
        char c = text_[pos_];
        if (c == 'Z') {
            ++pos_;
            return RingSpec{CyclicSpec{parse_int()}};
        }
        if (c == 'G') {
            if (text_.compare(pos_, 2, "GF") != 0) fail("'GF('");
            pos_ += 2;
            expect('(');
            std::uint32_t p = parse_int();
            expect(')');
            expect('[');
            expect('x');
            expect(']');
            expect('/');
            expect('(');
            std::vector<std::uint32_t> modulus = parse_poly(p);
            expect(')');
            return RingSpec{PolyQuotientSpec{p, std::move(modulus)}};
        }
        if (c == 'M') {
            ++pos_;
            std::uint32_t dim = parse_int();
            expect('(');
            RingSpec base = parse_product();
            expect(')');
            return RingSpec{MatrixSpec{dim, std::make_shared<RingSpec>(std::move(base))}};
        }
        if (c == '(') {
            ++pos_;
            RingSpec inner = parse_product();
            expect(')');
            return inner;
        }
        if (c == '@') {
            ++pos_;
            return parse_file_ref();
        }
        fail("'Z<n>', 'GF(', 'M<k>(', '(' or '@'");
    }

    std::vector<std::uint32_t> parse_poly(std::uint32_t p) {
        std::vector<std::uint32_t> coeffs;
        auto put = [&](std::uint32_t deg, std::uint32_t coeff) {
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
            coeffs[deg] = (coeffs[deg] + coeff) % std::max<std::uint32_t>(p, 1);
        };
        while (true) {
            skip_ws();
            std::uint32_t coeff = 1;
            bool saw_coeff = false;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                coeff = parse_int();
                saw_coeff = true;
            }
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == 'x') {
                ++pos_;
                std::uint32_t deg = 1;
                if (peek_is('^')) {
                    ++pos_;
                    deg = parse_int();
                }
                put(deg, coeff);
            } else if (saw_coeff) {
                put(0, coeff);
            } else {
                fail("a monomial");
            }
            if (!eat('+')) break;
        }
        return coeffs;
    }

    RingSpec parse_file_ref() {
        static const std::string inline_tag = "inline:";
        if (text_.compare(pos_, inline_tag.size(), inline_tag) == 0) {
            pos_ += inline_tag.size();
            std::size_t start = pos_;
            nlohmann::json j = nlohmann::json::parse(text_.substr(start), nullptr, false);
            if (j.is_discarded())
                throw Error(ErrorCode::ParseError, "invalid inline JSON at offset " +
                                                       std::to_string(start), start);
            pos_ = text_.size();
            return spec_from_json(j);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != ')' && text_[pos_] != ',')
            ++pos_;
        std::string path = text_.substr(start, pos_ - start);
        if (path.empty()) fail("a file path after '@'");
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::IoError, "cannot open spec file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        nlohmann::json j = nlohmann::json::parse(buf.str(), nullptr, false);
        if (j.is_discarded())
            throw Error(ErrorCode::ParseError, "invalid JSON in file: " + path, start);
        return spec_from_json(j);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

std::string render_poly(const std::vector<std::uint32_t>& coeffs) {
    std::string out;
    for (std::size_t deg = 0; deg < coeffs.size(); ++deg) {
        if (coeffs[deg] == 0) continue;
        if (!out.empty()) out += "+";
        if (deg == 0) {
            out += std::to_string(coeffs[deg]);
        } else {
            if (coeffs[deg] != 1) out += std::to_string(coeffs[deg]);
            out += "x";
            if (deg > 1) out += "^" + std::to_string(deg);
        }
    }
    return out.empty() ? "0" : out;
}

std::string render_rec(const RingSpec& spec, bool parenthesize_product);

std::string render_quotient_base(const RingSpec& base) {
    // a product base needs parentheses: the quotient postfix binds tighter
    return render_rec(base, true);
}

std::string render_rec(const RingSpec& spec, bool parenthesize_product) {
    return std::visit(
        [&](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CyclicSpec>) {
                return "Z" + std::to_string(s.modulus);
            } else if constexpr (std::is_same_v<T, PolyQuotientSpec>) {
                return "GF(" + std::to_string(s.p) + ")[x]/(" + render_poly(s.modulus) + ")";
            } else if constexpr (std::is_same_v<T, MatrixSpec>) {
                return "M" + std::to_string(s.dim) + "(" + render_rec(*s.base, false) + ")";
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                std::string out;
                for (std::size_t i = 0; i < s.factors.size(); ++i) {
                    if (i) out += " x ";
                    out += render_rec(s.factors[i], true);
                }
                if (parenthesize_product && s.factors.size() > 1) return "(" + out + ")";
                return out;
            } else if constexpr (std::is_same_v<T, QuotientSpec>) {
                std::string out = render_quotient_base(*s.base) + "/(";
                for (std::size_t i = 0; i < s.generators.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(s.generators[i]);
                }
                return out + ")";
            } else {
                return "@inline:" + spec_to_json(spec).dump();
            }
        },
        spec.node);
}

} // namespace

RingSpec parse_spec(const std::string& text) { return Parser(text).parse(); }

std::string render_spec(const RingSpec& spec) { return render_rec(spec, false); }

nlohmann::json spec_to_json(const RingSpec& spec) {
    return std::visit(
        [&](const auto& s) -> nlohmann::json {
            using T = std::decay_t<decltype(s)>;
            nlohmann::json j;
            if constexpr (std::is_same_v<T, CyclicSpec>) {
                j["kind"] = "cyclic";
                j["n"] = s.modulus;
            } else if constexpr (std::is_same_v<T, PolyQuotientSpec>) {
                j["kind"] = "poly_quotient";
                j["p"] = s.p;
                j["modulus"] = s.modulus;
            } else if constexpr (std::is_same_v<T, MatrixSpec>) {
                j["kind"] = "matrix";
                j["dim"] = s.dim;
                j["base"] = spec_to_json(*s.base);
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                j["kind"] = "product";
                j["factors"] = nlohmann::json::array();
                for (const auto& f : s.factors) j["factors"].push_back(spec_to_json(f));
            } else if constexpr (std::is_same_v<T, QuotientSpec>) {
                j["kind"] = "quotient";
                j["base"] = spec_to_json(*s.base);
                j["generators"] = s.generators;
            } else {
                j["kind"] = "table";
                j["n"] = s.n;
                j["add"] = s.add;
                j["mul"] = s.mul;
            }
            return j;
        },
        spec.node);
}

RingSpec spec_from_json(const nlohmann::json& j) {
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "cyclic") {
            return RingSpec{CyclicSpec{j.at("n").get<std::uint32_t>()}};
        }
        if (kind == "poly_quotient") {
            return RingSpec{PolyQuotientSpec{j.at("p").get<std::uint32_t>(),
                                             j.at("modulus").get<std::vector<std::uint32_t>>()}};
        }
        if (kind == "matrix") {
            return RingSpec{MatrixSpec{j.at("dim").get<std::uint32_t>(),
                                       std::make_shared<RingSpec>(spec_from_json(j.at("base")))}};
        }
        if (kind == "product") {
            ProductSpec p;
            for (const auto& f : j.at("factors")) p.factors.push_back(spec_from_json(f));
            return RingSpec{std::move(p)};
        }
        if (kind == "quotient") {
            return RingSpec{
                QuotientSpec{std::make_shared<RingSpec>(spec_from_json(j.at("base"))),
                             j.at("generators").get<std::vector<std::uint32_t>>()}};
        }
        if (kind == "table") {
            TableSpec t;
            t.n = j.at("n").get<std::uint32_t>();
            t.add = j.at("add").get<std::vector<std::vector<std::uint32_t>>>();
            t.mul = j.at("mul").get<std::vector<std::vector<std::uint32_t>>>();
            return RingSpec{std::move(t)};
        }
        throw Error(ErrorCode::InvalidSpec, "unknown ring spec kind: " + kind);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidSpec, std::string("malformed ring spec JSON: ") + e.what());
    }
}

} // namespace glr
