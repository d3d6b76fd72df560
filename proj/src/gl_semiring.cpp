#include "gl_semiring.hpp"

#include <algorithm>

namespace glr {

GLSemiring semiring_of_ideals(const IdealLattice& L) {
    const std::uint32_t n = std::uint32_t(L.count());
    GLSemiring S;
    S.n = n;
    S.plus.resize(std::size_t(n) * n);
    S.times.resize(std::size_t(n) * n);
    S.neg_minus.resize(n);
    S.neg_tilde.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        S.neg_minus[i] = std::uint16_t(L.right_ann(IdealId(i)));
        S.neg_tilde[i] = std::uint16_t(L.left_ann(IdealId(i)));
        for (std::uint32_t j = 0; j < n; ++j) {
            S.plus[std::size_t(i) * n + j] = std::uint16_t(L.sum(IdealId(i), IdealId(j)));
            S.times[std::size_t(i) * n + j] = std::uint16_t(L.product(IdealId(i), IdealId(j)));
        }
    }
    S.zero = std::uint16_t(L.bottom());
    S.one = std::uint16_t(L.top());
    return S;
}

namespace {

void record(GLAxiomReport& rep, AxiomCheck check) {
    if (!check.ok) rep.all_pass = false;
    rep.checks.push_back(std::move(check));
}

} // namespace

GLAxiomReport check_gl_axioms(const GLSemiring& S) {
    const std::uint32_t n = S.n;
    GLAxiomReport rep;

    AxiomCheck idem{"plus-idempotent"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (S.pl(std::uint16_t(x), std::uint16_t(x)) != x) {
            idem = {"plus-idempotent", false, int(x)};
            break;
        }
    record(rep, idem);

    AxiomCheck comm{"plus-commutative"};
    for (std::uint32_t x = 0; x < n && comm.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            if (S.pl(std::uint16_t(x), std::uint16_t(y)) != S.pl(std::uint16_t(y), std::uint16_t(x))) {
                comm = {"plus-commutative", false, int(x), int(y)};
                break;
            }
    record(rep, comm);

    AxiomCheck passoc{"plus-associative"};
    for (std::uint32_t x = 0; x < n && passoc.ok; ++x)
        for (std::uint32_t y = 0; y < n && passoc.ok; ++y) {
            std::uint16_t xy = S.pl(std::uint16_t(x), std::uint16_t(y));
            for (std::uint32_t z = 0; z < n; ++z)
                if (S.pl(xy, std::uint16_t(z)) !=
                    S.pl(std::uint16_t(x), S.pl(std::uint16_t(y), std::uint16_t(z)))) {
                    passoc = {"plus-associative", false, int(x), int(y), int(z)};
                    break;
                }
        }
    record(rep, passoc);

    AxiomCheck pzero{"plus-zero-identity"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (S.pl(std::uint16_t(x), S.zero) != x || S.pl(S.zero, std::uint16_t(x)) != x) {
            pzero = {"plus-zero-identity", false, int(x)};
            break;
        }
    record(rep, pzero);

    AxiomCheck tassoc{"times-associative"};
    for (std::uint32_t x = 0; x < n && tassoc.ok; ++x)
        for (std::uint32_t y = 0; y < n && tassoc.ok; ++y) {
            std::uint16_t xy = S.tm(std::uint16_t(x), std::uint16_t(y));
            for (std::uint32_t z = 0; z < n; ++z)
                if (S.tm(xy, std::uint16_t(z)) !=
                    S.tm(std::uint16_t(x), S.tm(std::uint16_t(y), std::uint16_t(z)))) {
                    tassoc = {"times-associative", false, int(x), int(y), int(z)};
                    break;
                }
        }
    record(rep, tassoc);

    AxiomCheck tone{"times-one-identity"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (S.tm(std::uint16_t(x), S.one) != x || S.tm(S.one, std::uint16_t(x)) != x) {
            tone = {"times-one-identity", false, int(x)};
            break;
        }
    record(rep, tone);

    AxiomCheck tzero{"times-zero-annihilates"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (S.tm(std::uint16_t(x), S.zero) != S.zero || S.tm(S.zero, std::uint16_t(x)) != S.zero) {
            tzero = {"times-zero-annihilates", false, int(x)};
            break;
        }
    record(rep, tzero);

    AxiomCheck distl{"times-distributes-left"};
    for (std::uint32_t x = 0; x < n && distl.ok; ++x)
        for (std::uint32_t y = 0; y < n && distl.ok; ++y)
            for (std::uint32_t z = 0; z < n; ++z)
                if (S.tm(std::uint16_t(x), S.pl(std::uint16_t(y), std::uint16_t(z))) !=
                    S.pl(S.tm(std::uint16_t(x), std::uint16_t(y)),
                         S.tm(std::uint16_t(x), std::uint16_t(z)))) {
                    distl = {"times-distributes-left", false, int(x), int(y), int(z)};
                    break;
                }
    record(rep, distl);

    AxiomCheck distr{"times-distributes-right"};
    for (std::uint32_t x = 0; x < n && distr.ok; ++x)
        for (std::uint32_t y = 0; y < n && distr.ok; ++y)
            for (std::uint32_t z = 0; z < n; ++z)
                if (S.tm(S.pl(std::uint16_t(x), std::uint16_t(y)), std::uint16_t(z)) !=
                    S.pl(S.tm(std::uint16_t(x), std::uint16_t(z)),
                         S.tm(std::uint16_t(y), std::uint16_t(z)))) {
                    distr = {"times-distributes-right", false, int(x), int(y), int(z)};
                    break;
                }
    record(rep, distr);

    AxiomCheck cl1{"clause-i-zero-divisors"};
    for (std::uint32_t x = 0; x < n && cl1.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            bool prod_zero = S.tm(std::uint16_t(x), std::uint16_t(y)) == S.zero;
            bool le1 = S.le(std::uint16_t(y), S.neg_minus[x]);
            bool le2 = S.le(std::uint16_t(x), S.neg_tilde[y]);
            if (prod_zero != le1 || prod_zero != le2) {
                cl1 = {"clause-i-zero-divisors", false, int(x), int(y)};
                break;
            }
        }
    record(rep, cl1);

    AxiomCheck cl2{"clause-ii-sum-from-negations"};
    for (std::uint32_t x = 0; x < n && cl2.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            std::uint16_t s = S.pl(std::uint16_t(x), std::uint16_t(y));
            std::uint16_t e1 =
                S.neg_minus[S.tm(S.neg_tilde[S.tm(S.neg_tilde[x], std::uint16_t(y))], S.neg_tilde[x])];
            std::uint16_t e2 =
                S.neg_minus[S.tm(S.neg_tilde[x], S.neg_tilde[S.tm(std::uint16_t(y), S.neg_minus[x])])];
            if (s != e1 || s != e2) {
                cl2 = {"clause-ii-sum-from-negations", false, int(x), int(y)};
                break;
            }
        }
    record(rep, cl2);

    AxiomCheck cl3{"clause-iii-negation-swap"};
    for (std::uint32_t x = 0; x < n && cl3.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            if (S.neg_minus[S.tm(S.neg_tilde[y], S.neg_tilde[x])] !=
                S.neg_tilde[S.tm(S.neg_minus[y], S.neg_minus[x])]) {
                cl3 = {"clause-iii-negation-swap", false, int(x), int(y)};
                break;
            }
    record(rep, cl3);

    AxiomCheck cancel{"negation-cancellation"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (S.tm(S.neg_tilde[x], std::uint16_t(x)) != S.zero ||
            S.tm(std::uint16_t(x), S.neg_minus[x]) != S.zero) {
            cancel = {"negation-cancellation", false, int(x)};
            break;
        }
    record(rep, cancel);

    AxiomCheck consts{"negations-of-constants"};
    if (S.neg_tilde[S.zero] != S.one || S.neg_minus[S.zero] != S.one ||
        S.neg_tilde[S.one] != S.zero || S.neg_minus[S.one] != S.zero)
        consts = {"negations-of-constants", false, 0};
    record(rep, consts);

    AxiomCheck dneg{"double-negation"};
    for (std::uint32_t x = 0; x < n; ++x)
        if (S.neg_tilde[S.neg_minus[x]] != x || S.neg_minus[S.neg_tilde[x]] != x) {
            dneg = {"double-negation", false, int(x)};
            break;
        }
    record(rep, dneg);

    AxiomCheck lat{"lattice-meet-forms"};
    for (std::uint32_t x = 0; x < n && lat.ok; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            std::uint16_t m1 = S.neg_tilde[S.pl(S.neg_minus[x], S.neg_minus[y])];
            std::uint16_t m2 = S.neg_minus[S.pl(S.neg_tilde[x], S.neg_tilde[y])];
            bool ok = m1 == m2 && S.le(m1, std::uint16_t(x)) && S.le(m1, std::uint16_t(y));
            for (std::uint32_t z = 0; z < n && ok; ++z)
                if (S.le(std::uint16_t(z), std::uint16_t(x)) &&
                    S.le(std::uint16_t(z), std::uint16_t(y)) && !S.le(std::uint16_t(z), m1))
                    ok = false;
            if (!ok) {
                lat = {"lattice-meet-forms", false, int(x), int(y)};
                break;
            }
        }
    record(rep, lat);

    return rep;
}

MVTable mv_from_semiring(const GLSemiring& S, const GLAxiomReport* precomputed) {
    GLAxiomReport local;
    const GLAxiomReport* rep = precomputed;
    if (!rep) {
        local = check_gl_axioms(S);
        rep = &local;
    }
    if (!rep->all_pass) {
        std::string bad;
        for (const auto& c : rep->checks)
            if (!c.ok) {
                bad = c.name;
                break;
            }
        throw Error(ErrorCode::GLAxiomsFailed, "semiring fails " + bad);
    }
    MVTable t;
    t.n = S.n;
    t.oplus.resize(std::size_t(S.n) * S.n);
    for (std::uint32_t x = 0; x < S.n; ++x)
        for (std::uint32_t y = 0; y < S.n; ++y)
            t.oplus[std::size_t(x) * S.n + y] = S.neg_minus[S.tm(S.neg_tilde[y], S.neg_tilde[x])];
    t.neg_minus = S.neg_minus;
    t.neg_tilde = S.neg_tilde;
    t.zero = S.zero;
    t.one = S.one;
    derive_mv(t);
    return t;
}

GLSemiring semiring_from_mv(const MVTable& A) {
    GLSemiring S;
    S.n = A.n;
    S.plus = A.join;
    S.times = A.odot;
    S.neg_minus = A.neg_minus;
    S.neg_tilde = A.neg_tilde;
    S.zero = A.zero;
    S.one = A.one;
    return S;
}

DualityReport check_duality(const MVTable& A, const GLSemiring& S) {
    DualityReport rep;
    rep.mv_round_trip = mv_from_semiring(semiring_from_mv(A)).same_tables(A);
    rep.semiring_round_trip = semiring_from_mv(mv_from_semiring(S)).same_tables(S);
    return rep;
}

SemiringIdeal semiring_ideal_S(const IdealLattice& L, const Bitset& I) {
    IdealId id = L.id_of(I);
    if (id < 0) throw Error(ErrorCode::NotAnIdeal, "mask is not an ideal of the ring");
    SemiringIdeal out(L.count());
    for (IdealId j = 0; j < IdealId(L.count()); ++j)
        if (L.leq(j, id)) out.set(std::size_t(j));
    return out;
}

Bitset semiring_ideal_Sinv(const IdealLattice& L, const SemiringIdeal& bigI) {
    Bitset out(L.ring().size());
    for (std::uint32_t x = 0; x < L.ring().size(); ++x)
        if (bigI.test(std::size_t(L.principal(ElementId(x))))) out.set(x);
    return out;
}

std::vector<SemiringIdeal> enumerate_semiring_ideals(const IdealLattice& L, const RunConfig& cfg) {
    // In a finite lattice every +-closed down-set has a maximum (the join of
    // its members), so the semiring ideals are exactly the principal
    // down-sets.  The brute-force subset oracle in the tests confirms this.
    if (L.count() > cfg.max_semiring_ideals)
        throw Error(ErrorCode::SemiringIdealCountCapExceeded,
                    "semiring ideal count exceeds cap " +
                        std::to_string(cfg.max_semiring_ideals));
    std::vector<SemiringIdeal> out;
    out.reserve(L.count());
    for (IdealId t = 0; t < IdealId(L.count()); ++t) {
        SemiringIdeal s(L.count());
        for (IdealId j = 0; j < IdealId(L.count()); ++j)
            if (L.leq(j, t)) s.set(std::size_t(j));
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), Bitset::canonical_less);
    return out;
}

GaloisReport check_galois(const IdealLattice& L, const RunConfig& cfg) {
    GaloisReport rep;
    std::vector<SemiringIdeal> sem = enumerate_semiring_ideals(L, cfg);
    rep.semiring_ideal_count = sem.size();

    for (const auto& bigI : sem) {
        Bitset inv = semiring_ideal_Sinv(L, bigI);
        IdealId invId = L.id_of(inv);
        if (invId < 0) {
            rep.sinv_always_ideal = false;
            continue;
        }
        if (semiring_ideal_S(L, inv) != bigI) rep.s_of_sinv_identity = false;
    }
    for (IdealId i = 0; i < IdealId(L.count()); ++i) {
        const Bitset& I = L.ideal(i);
        SemiringIdeal s = semiring_ideal_S(L, I);
        if (semiring_ideal_Sinv(L, s) != I) rep.sinv_of_s_identity = false;
        if (i != L.top() && s.test(std::size_t(L.top()))) rep.properness_preserved = false;
    }
    for (std::size_t a = 0; a < sem.size(); ++a)
        for (std::size_t b = 0; b < sem.size(); ++b)
            if (sem[a].is_subset_of(sem[b]) &&
                !semiring_ideal_Sinv(L, sem[a]).is_subset_of(semiring_ideal_Sinv(L, sem[b])))
                rep.monotone = false;
    return rep;
}

} // namespace glr
