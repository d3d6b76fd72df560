#include "corpus.hpp"

#include <atomic>
#include <thread>

namespace glr {

namespace {

RingSpec cyclic(std::uint32_t n) { return RingSpec{CyclicSpec{n}}; }

RingSpec poly(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    return RingSpec{PolyQuotientSpec{p, std::move(modulus)}};
}

RingSpec xpow(std::uint32_t p, std::uint32_t d) {
    std::vector<std::uint32_t> m(d + 1, 0);
    m[d] = 1;
    return poly(p, std::move(m));
}

RingSpec matrix2(RingSpec base) {
    return RingSpec{MatrixSpec{2, std::make_shared<RingSpec>(std::move(base))}};
}

RingSpec product(std::vector<RingSpec> factors) {
    return RingSpec{ProductSpec{std::move(factors)}};
}

} // namespace

RingSpec f2xy_spec() {
    // elements a + b x + c y encoded as a | b<<1 | c<<2; x^2 = xy = yx = y^2 = 0
    TableSpec t;
    t.n = 8;
    t.add.assign(8, std::vector<std::uint32_t>(8));
    t.mul.assign(8, std::vector<std::uint32_t>(8));
    for (std::uint32_t u = 0; u < 8; ++u)
        for (std::uint32_t v = 0; v < 8; ++v) {
            t.add[u][v] = u ^ v;
            std::uint32_t a1 = u & 1, b1 = (u >> 1) & 1, c1 = (u >> 2) & 1;
            std::uint32_t a2 = v & 1, b2 = (v >> 1) & 1, c2 = (v >> 2) & 1;
            std::uint32_t a = a1 & a2;
            std::uint32_t b = (a1 & b2) ^ (b1 & a2);
            std::uint32_t c = (a1 & c2) ^ (c1 & a2);
            t.mul[u][v] = a | (b << 1) | (c << 2);
        }
    return RingSpec{std::move(t)};
}

std::vector<CorpusEntry> corpus_base() {
    std::vector<CorpusEntry> out;
    for (std::uint32_t n = 1; n <= 64; ++n)
        out.push_back({"Z" + std::to_string(n), cyclic(n)});
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t d = 1; d <= 4; ++d)
            out.push_back({"GF(" + std::to_string(p) + ")[x]/(x^" + std::to_string(d) + ")",
                           xpow(p, d)});
    out.push_back({"GF(2)[x]/(x^2+x+1)", poly(2, {1, 1, 1})});
    out.push_back({"M2(GF(2))", matrix2(xpow(2, 1))});
    out.push_back({"M2(GF(3))", matrix2(xpow(3, 1))});
    out.push_back({"M2(Z4)", matrix2(cyclic(4))});
    out.push_back({"M2(GF(2)[x]/(x^2))", matrix2(xpow(2, 2))});
    out.push_back({"F2[x,y]/(x2,xy,y2)", f2xy_spec()});
    return out;
}

std::vector<CorpusEntry> corpus_products() {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, std::vector<RingSpec> fs) {
        out.push_back({std::move(name), product(std::move(fs))});
    };
    add("Z4 x Z9", {cyclic(4), cyclic(9)});
    add("Z2 x Z2", {cyclic(2), cyclic(2)});
    add("Z2 x Z3 x Z5", {cyclic(2), cyclic(3), cyclic(5)});
    add("Z8 x Z27", {cyclic(8), cyclic(27)});
    add("Z4 x Z4", {cyclic(4), cyclic(4)});
    add("Z2^4", {cyclic(2), cyclic(2), cyclic(2), cyclic(2)});
    add("GF(2)[x]/(x^2) x GF(3)[x]/(x^2)", {xpow(2, 2), xpow(3, 2)});
    add("M2(GF(2)) x Z2", {matrix2(xpow(2, 1)), cyclic(2)});
    add("Z64 x Z63", {cyclic(64), cyclic(63)});
    return out;
}

std::vector<CorpusEntry> corpus_full() {
    std::vector<CorpusEntry> out = corpus_base();
    for (auto& e : corpus_products()) out.push_back(std::move(e));
    return out;
}

std::vector<CorpusEntry> corpus_small() {
    std::vector<CorpusEntry> out;
    out.push_back({"Z4", cyclic(4)});
    out.push_back({"Z6", cyclic(6)});
    out.push_back({"Z8", cyclic(8)});
    out.push_back({"Z9", cyclic(9)});
    out.push_back({"Z27", cyclic(27)});
    out.push_back({"GF(2)[x]/(x^2)", xpow(2, 2)});
    out.push_back({"GF(2)[x]/(x^2+x+1)", poly(2, {1, 1, 1})});
    out.push_back({"M2(GF(2))", matrix2(xpow(2, 1))});
    return out;
}

namespace {

template <class F>
void parallel_for(std::size_t count, std::uint32_t jobs, F&& body) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::uint32_t workers = std::min<std::uint32_t>(jobs, std::uint32_t(count));
    for (std::uint32_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace

SuiteReport run_property_suite(const RunConfig& cfg) {
    SuiteReport rep;
    std::vector<CorpusEntry> corpus = corpus_full();
    std::vector<std::vector<SuiteItem>> per_ring(corpus.size());

    parallel_for(corpus.size(), cfg.jobs, [&](std::size_t idx) {
        const CorpusEntry& entry = corpus[idx];
        auto& items = per_ring[idx];
        auto push = [&](const std::string& check, bool pass, std::string detail = "") {
            items.push_back({entry.name, check, pass, std::move(detail)});
        };
        try {
            AnalyzedRing ar = analyze(entry.spec, cfg);
            GLRReport glr = check_glr(ar);
            push("glr-route-agreement", glr.is_glr == glr.is_glr_by_definition);

            auto spir = is_spir(ar);
            if (spir) {
                push("spir-annihilator-law", check_spir_annihilator_law(*spir, ar.lattice));
                if (spir->unitary) push("unitary-spir-is-glr", glr.is_glr);
            }
            push("artinian-chain-criterion", check_artinian_chain_criterion(ar, cfg).ok);

            if (!glr.is_glr) {
                bool witnessed = !glr.central_idempotent_generated || glr.an_witness ||
                                 glr.co_witness || glr.lr_witness || glr.glr1_witness ||
                                 glr.glr2_witness;
                push("non-glr-has-witness", witnessed);
                return;
            }
            push("glr-implies-double-annihilator", glr.double_annihilator_holds);

            PMVReport pmv = check_pmv_of_ring(ar, glr);
            push("ideal-algebra-is-commutative-mv", pmv.all_pass);
            if (pmv.gl.all_pass) {
                GLSemiring S = semiring_of_ideals(ar.lattice);
                push("duality-round-trips", check_duality(pmv.mv, S).exact());
                auto iso = iso_to_chain_product(pmv.mv);
                push("mv-is-chain-product", iso.has_value());
            }
            push("galois-correspondence", check_galois(ar.lattice, cfg).all_pass());
            DistributivityReport dist = check_distributivity(ar.lattice, cfg);
            push("distributivity", dist.binary_holds && dist.family_holds);
            push("primes-are-maximal", check_prime_maximal(ar.lattice, glr).primes_are_maximal);
            FinitenessUnitarityReport fin = check_finiteness_and_unitarity(ar, glr);
            push("chain-implies-unitary", fin.chain_implies_unitary);
            push("atom-maximal-bijection", fin.atom_maximal_bijection);

            Decomposition dec = decompose(ar, cfg);
            push("decomposition-certified", dec.certified);
        } catch (const Error& e) {
            push("analysis", false, std::string(error_code_name(e.code())) + ": " + e.what());
        }
    });

    for (auto& items : per_ring)
        for (auto& item : items) {
            if (!item.pass) rep.all_pass = false;
            rep.items.push_back(std::move(item));
        }

    std::vector<AnalyzedRing> small;
    for (const auto& e : corpus_small()) small.push_back(analyze(e.spec, cfg));
    ClosureSuiteReport closure = check_closure_suite(small, cfg);
    rep.items.push_back({"closure-corpus", "products-and-quotients-stay-glr", closure.all_glr, ""});
    if (!closure.all_glr) rep.all_pass = false;

    InfiniteProductWitnessReport inf = check_infinite_product_witness(cfg);
    rep.items.push_back(
        {"F2^k truncations", "sum-law-holds-on-finite-truncations", inf.finite_part_holds, ""});
    if (!inf.finite_part_holds) rep.all_pass = false;

    return rep;
}

} // namespace glr
