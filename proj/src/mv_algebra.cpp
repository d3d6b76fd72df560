#include "mv_algebra.hpp"

#include <algorithm>

namespace glr {

void derive_mv(MVTable& t) {
    const std::uint32_t n = t.n;
    t.odot.assign(std::size_t(n) * n, 0);
    t.leq.assign(std::size_t(n) * n, 0);
    t.join.assign(std::size_t(n) * n, 0);
    t.meet.assign(std::size_t(n) * n, 0);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            t.odot[std::size_t(x) * n + y] =
                t.neg_tilde[t.oplus[std::size_t(t.neg_minus[y]) * n + t.neg_minus[x]]];
            t.leq[std::size_t(x) * n + y] =
                t.oplus[std::size_t(t.neg_minus[x]) * n + y] == t.one ? 1 : 0;
        }
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            t.join[std::size_t(x) * n + y] =
                t.op(std::uint16_t(x), t.od(t.neg_tilde[x], std::uint16_t(y)));
            t.meet[std::size_t(x) * n + y] =
                t.od(std::uint16_t(x), t.op(t.neg_minus[x], std::uint16_t(y)));
        }
}

MVTable make_chain(std::uint32_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "chain needs at least one element");
    MVTable t;
    t.n = n;
    t.oplus.assign(std::size_t(n) * n, 0);
    t.neg_minus.resize(n);
    t.neg_tilde.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        t.neg_minus[x] = std::uint16_t(n - 1 - x);
        t.neg_tilde[x] = std::uint16_t(n - 1 - x);
        for (std::uint32_t y = 0; y < n; ++y)
            t.oplus[std::size_t(x) * n + y] = std::uint16_t(std::min(x + y, n - 1));
    }
    t.zero = 0;
    t.one = std::uint16_t(n - 1);
    derive_mv(t);
    return t;
}

MVTable product_mv(std::span<const MVTable> factors, const RunConfig& cfg) {
    std::uint64_t n64 = 1;
    for (const auto& f : factors) {
        n64 *= f.n;
        if (n64 > cfg.max_elements)
            throw Error(ErrorCode::SizeCapExceeded,
                        "product MV-algebra would have " + std::to_string(n64) +
                            " elements, cap is " + std::to_string(cfg.max_elements));
    }
    const std::uint32_t n = std::uint32_t(n64);
    const std::size_t k = factors.size();
    auto decode = [&](std::uint32_t idx, std::vector<std::uint16_t>& d) {
        for (std::size_t i = 0; i < k; ++i) {
            d[i] = std::uint16_t(idx % factors[i].n);
            idx /= factors[i].n;
        }
    };
    auto encode = [&](const std::vector<std::uint16_t>& d) {
        std::uint64_t idx = 0;
        for (std::size_t i = k; i-- > 0;) idx = idx * factors[i].n + d[i];
        return std::uint16_t(idx);
    };
    MVTable t;
    t.n = n;
    t.oplus.assign(std::size_t(n) * n, 0);
    t.neg_minus.resize(n);
    t.neg_tilde.resize(n);
    std::vector<std::uint16_t> da(k), db(k), dc(k);
    for (std::uint32_t a = 0; a < n; ++a) {
        decode(a, da);
        for (std::size_t i = 0; i < k; ++i) dc[i] = factors[i].neg_minus[da[i]];
        t.neg_minus[a] = encode(dc);
        for (std::size_t i = 0; i < k; ++i) dc[i] = factors[i].neg_tilde[da[i]];
        t.neg_tilde[a] = encode(dc);
        for (std::uint32_t b = 0; b < n; ++b) {
            decode(b, db);
            for (std::size_t i = 0; i < k; ++i) dc[i] = factors[i].op(da[i], db[i]);
            t.oplus[std::size_t(a) * n + b] = encode(dc);
        }
    }
    std::vector<std::uint16_t> dz(k), d1(k);
    for (std::size_t i = 0; i < k; ++i) {
        dz[i] = factors[i].zero;
        d1[i] = factors[i].one;
    }
    t.zero = encode(dz);
    t.one = encode(d1);
    derive_mv(t);
    return t;
}

namespace {

void record(MVAxiomReport& rep, AxiomCheck check) {
    if (!check.ok) rep.all_pass = false;
    rep.checks.push_back(std::move(check));
}

} // namespace

MVAxiomReport check_axioms(const MVTable& t) {
    const std::uint32_t n = t.n;
    MVAxiomReport rep;

    AxiomCheck a1{"A1-associativity"};
    for (std::uint32_t x = 0; x < n && a1.ok; ++x)
        for (std::uint32_t y = 0; y < n && a1.ok; ++y) {
            std::uint16_t xy = t.op(std::uint16_t(x), std::uint16_t(y));
            for (std::uint32_t z = 0; z < n; ++z)
                if (t.op(xy, std::uint16_t(z)) !=
                    t.op(std::uint16_t(x), t.op(std::uint16_t(y), std::uint16_t(z)))) {
                    a1 = {"A1-associativity", false, int(x), int(y), int(z)};
                    break;
                }
        }
    record(rep, a1);

    AxiomCheck a2{"A2-zero-identity"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (t.op(std::uint16_t(x), t.zero) != x || t.op(t.zero, std::uint16_t(x)) != x) {
            a2 = {"A2-zero-identity", false, int(x)};
            break;
        }
    record(rep, a2);

    AxiomCheck a3{"A3-one-absorbing"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (t.op(std::uint16_t(x), t.one) != t.one || t.op(t.one, std::uint16_t(x)) != t.one) {
            a3 = {"A3-one-absorbing", false, int(x)};
            break;
        }
    record(rep, a3);

    AxiomCheck a4{"A4-negations-of-one"};
    if (t.neg_tilde[t.one] != t.zero || t.neg_minus[t.one] != t.zero)
        a4 = {"A4-negations-of-one", false, int(t.one)};
    record(rep, a4);

    AxiomCheck a5{"A5-negation-swap"};
    for (std::uint32_t x = 0; x < n && a5.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            std::uint16_t lhs = t.neg_tilde[t.op(t.neg_minus[x], t.neg_minus[y])];
            std::uint16_t rhs = t.neg_minus[t.op(t.neg_tilde[x], t.neg_tilde[y])];
            if (lhs != rhs) {
                a5 = {"A5-negation-swap", false, int(x), int(y)};
                break;
            }
        }
    record(rep, a5);

    AxiomCheck a6{"A6-join-expressions"};
    for (std::uint32_t x = 0; x < n && a6.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            std::uint16_t e1 = t.op(std::uint16_t(x), t.od(t.neg_tilde[x], std::uint16_t(y)));
            std::uint16_t e2 = t.op(std::uint16_t(y), t.od(t.neg_tilde[y], std::uint16_t(x)));
            std::uint16_t e3 = t.op(t.od(std::uint16_t(x), t.neg_minus[y]), std::uint16_t(y));
            std::uint16_t e4 = t.op(t.od(std::uint16_t(y), t.neg_minus[x]), std::uint16_t(x));
            if (e1 != e2 || e1 != e3 || e1 != e4) {
                a6 = {"A6-join-expressions", false, int(x), int(y)};
                break;
            }
        }
    record(rep, a6);

    AxiomCheck a7{"A7-meet-expressions"};
    for (std::uint32_t x = 0; x < n && a7.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            std::uint16_t lhs = t.od(std::uint16_t(x), t.op(t.neg_minus[x], std::uint16_t(y)));
            std::uint16_t rhs = t.od(t.op(std::uint16_t(x), t.neg_tilde[y]), std::uint16_t(y));
            if (lhs != rhs) {
                a7 = {"A7-meet-expressions", false, int(x), int(y)};
                break;
            }
        }
    record(rep, a7);

    AxiomCheck a8{"A8-double-negation"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (t.neg_tilde[t.neg_minus[x]] != x) {
            a8 = {"A8-double-negation", false, int(x)};
            break;
        }
    record(rep, a8);

    AxiomCheck dn{"double-negation-reverse"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (t.neg_minus[t.neg_tilde[x]] != x) {
            dn = {"double-negation-reverse", false, int(x)};
            break;
        }
    record(rep, dn);

    AxiomCheck refl{"order-reflexive"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (!t.le(std::uint16_t(x), std::uint16_t(x))) {
            refl = {"order-reflexive", false, int(x)};
            break;
        }
    record(rep, refl);

    AxiomCheck antisym{"order-antisymmetric"};
    for (std::uint32_t x = 0; x < n && antisym.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            if (x != y && t.le(std::uint16_t(x), std::uint16_t(y)) &&
                t.le(std::uint16_t(y), std::uint16_t(x))) {
                antisym = {"order-antisymmetric", false, int(x), int(y)};
                break;
            }
    record(rep, antisym);

    AxiomCheck trans{"order-transitive"};
    for (std::uint32_t x = 0; x < n && trans.ok; ++x)
        for (std::uint32_t y = 0; y < n && trans.ok; ++y) {
            if (!t.le(std::uint16_t(x), std::uint16_t(y))) continue;
            for (std::uint32_t z = 0; z < n; ++z)
                if (t.le(std::uint16_t(y), std::uint16_t(z)) &&
                    !t.le(std::uint16_t(x), std::uint16_t(z))) {
                    trans = {"order-transitive", false, int(x), int(y), int(z)};
                    break;
                }
        }
    record(rep, trans);

    AxiomCheck joinsup{"join-is-supremum"};
    for (std::uint32_t x = 0; x < n && joinsup.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            std::uint16_t v = t.jn(std::uint16_t(x), std::uint16_t(y));
            bool ok = t.le(std::uint16_t(x), v) && t.le(std::uint16_t(y), v);
            for (std::uint32_t z = 0; z < n && ok; ++z)
                if (t.le(std::uint16_t(x), std::uint16_t(z)) &&
                    t.le(std::uint16_t(y), std::uint16_t(z)) && !t.le(v, std::uint16_t(z)))
                    ok = false;
            if (!ok) {
                joinsup = {"join-is-supremum", false, int(x), int(y)};
                break;
            }
        }
    record(rep, joinsup);

    AxiomCheck meetinf{"meet-is-infimum"};
    for (std::uint32_t x = 0; x < n && meetinf.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            std::uint16_t v = t.mt(std::uint16_t(x), std::uint16_t(y));
            bool ok = t.le(v, std::uint16_t(x)) && t.le(v, std::uint16_t(y));
            for (std::uint32_t z = 0; z < n && ok; ++z)
                if (t.le(std::uint16_t(z), std::uint16_t(x)) &&
                    t.le(std::uint16_t(z), std::uint16_t(y)) && !t.le(std::uint16_t(z), v))
                    ok = false;
            if (!ok) {
                meetinf = {"meet-is-infimum", false, int(x), int(y)};
                break;
            }
        }
    record(rep, meetinf);

    AxiomCheck meet4{"meet-expressions-agree"};
    for (std::uint32_t x = 0; x < n && meet4.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            std::uint16_t e1 = t.od(std::uint16_t(x), t.op(t.neg_minus[x], std::uint16_t(y)));
            std::uint16_t e2 = t.od(std::uint16_t(y), t.op(t.neg_minus[y], std::uint16_t(x)));
            std::uint16_t e3 = t.od(t.op(std::uint16_t(x), t.neg_tilde[y]), std::uint16_t(y));
            std::uint16_t e4 = t.od(t.op(std::uint16_t(y), t.neg_tilde[x]), std::uint16_t(x));
            if (e1 != e2 || e1 != e3 || e1 != e4) {
                meet4 = {"meet-expressions-agree", false, int(x), int(y)};
                break;
            }
        }
    record(rep, meet4);

    return rep;
}

MVCommutativityReport is_commutative(const MVTable& t) {
    MVCommutativityReport rep;
    for (std::uint32_t x = 0; x < t.n && rep.oplus_commutative; ++x)
        for (std::uint32_t y = 0; y < t.n; ++y)
            if (t.op(std::uint16_t(x), std::uint16_t(y)) !=
                t.op(std::uint16_t(y), std::uint16_t(x))) {
                rep.oplus_commutative = false;
                rep.witness = {std::uint16_t(x), std::uint16_t(y)};
                break;
            }
    for (std::uint32_t x = 0; x < t.n; ++x)
        if (t.neg_minus[x] != t.neg_tilde[x]) {
            rep.negations_coincide = false;
            rep.negation_witness = std::uint16_t(x);
            break;
        }
    return rep;
}

std::vector<std::uint16_t> atoms(const MVTable& t) {
    std::vector<std::uint16_t> out;
    for (std::uint32_t a = 0; a < t.n; ++a) {
        if (a == t.zero) continue;
        bool minimal = true;
        for (std::uint32_t b = 0; b < t.n && minimal; ++b)
            if (b != t.zero && b != a && t.le(std::uint16_t(b), std::uint16_t(a))) minimal = false;
        if (minimal) out.push_back(std::uint16_t(a));
    }
    return out;
}

std::optional<ChainProductIso> iso_to_chain_product(const MVTable& t) {
    std::vector<std::uint16_t> ats = atoms(t);
    const std::size_t k = ats.size();

    // multiples of each atom up to its idempotent hull
    std::vector<std::vector<std::uint16_t>> multiples(k);
    std::vector<std::uint16_t> hull(k);
    std::uint64_t expected_size = 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::uint16_t a = ats[i];
        std::uint16_t cur = a;
        multiples[i].push_back(t.zero);
        multiples[i].push_back(cur);
        while (true) {
            std::uint16_t next = t.op(cur, a);
            if (next == cur) break;
            cur = next;
            multiples[i].push_back(cur);
            if (multiples[i].size() > t.n) return std::nullopt;
        }
        hull[i] = cur;
        expected_size *= multiples[i].size();
    }
    if (expected_size != t.n) return std::nullopt;

    ChainProductIso iso;
    for (std::size_t i = 0; i < k; ++i)
        iso.chain_lengths.push_back(std::uint32_t(multiples[i].size()));

    iso.coords.assign(t.n, std::vector<std::uint16_t>(k, 0));
    for (std::uint32_t b = 0; b < t.n; ++b)
        for (std::size_t i = 0; i < k; ++i) {
            std::uint16_t v = t.mt(std::uint16_t(b), hull[i]);
            auto it = std::find(multiples[i].begin(), multiples[i].end(), v);
            if (it == multiples[i].end()) return std::nullopt;
            iso.coords[b][i] = std::uint16_t(it - multiples[i].begin());
        }

    // target product of chains, in the same mixed-radix encoding
    std::vector<MVTable> chains;
    chains.reserve(k);
    for (auto len : iso.chain_lengths) chains.push_back(make_chain(len));
    RunConfig cfg;
    cfg.max_elements = t.n;
    MVTable target = product_mv(chains, cfg);
    auto encode = [&](const std::vector<std::uint16_t>& d) {
        std::uint64_t idx = 0;
        for (std::size_t i = k; i-- > 0;) idx = idx * iso.chain_lengths[i] + d[i];
        return std::uint16_t(idx);
    };

    std::vector<std::uint16_t> phi(t.n);
    std::vector<bool> hit(t.n, false);
    for (std::uint32_t b = 0; b < t.n; ++b) {
        phi[b] = encode(iso.coords[b]);
        if (hit[phi[b]]) return std::nullopt;
        hit[phi[b]] = true;
    }
    if (phi[t.zero] != target.zero || phi[t.one] != target.one) return std::nullopt;
    for (std::uint32_t x = 0; x < t.n; ++x) {
        if (target.neg_minus[phi[x]] != phi[t.neg_minus[x]] ||
            target.neg_tilde[phi[x]] != phi[t.neg_tilde[x]])
            return std::nullopt;
        for (std::uint32_t y = 0; y < t.n; ++y)
            if (target.op(phi[x], phi[y]) != phi[t.op(std::uint16_t(x), std::uint16_t(y))])
                return std::nullopt;
    }
    return iso;
}

} // namespace glr
