#include "analysis.hpp"

#include <algorithm>
#include <random>

namespace glr {

AnalyzedRing analyze(const RingSpec& spec, const RunConfig& cfg) {
    return analyze(std::make_shared<FiniteRing>(build_ring(spec, cfg)), cfg);
}

AnalyzedRing analyze(std::shared_ptr<const FiniteRing> ring, const RunConfig& cfg) {
    IdealLattice lattice = enumerate_ideals(ring, cfg);
    return AnalyzedRing{std::move(ring), std::move(lattice)};
}

IdealId mv_oplus(const IdealLattice& L, IdealId i, IdealId j) {
    return L.right_ann(L.product(L.left_ann(j), L.left_ann(i)));
}

std::vector<IdealId> lattice_atoms(const IdealLattice& L) {
    std::vector<IdealId> out;
    const IdealId m = IdealId(L.count());
    for (IdealId a = 1; a < m; ++a) {
        bool minimal = true;
        for (IdealId b = 1; b < m && minimal; ++b)
            if (b != a && L.leq(b, a)) minimal = false;
        if (minimal) out.push_back(a);
    }
    return out;
}

GLRReport check_glr(const AnalyzedRing& ar) {
    const IdealLattice& L = ar.lattice;
    const IdealId m = IdealId(L.count());
    GLRReport rep;

    CentralIdempotentReport central = is_central_idempotent_generated(*ar.ring);
    rep.central_idempotent_generated = central.holds;
    rep.central_failing = central.failing;

    rep.an_holds = true;
    for (IdealId i = 0; i < m; ++i)
        if (L.left_ann(i) != L.right_ann(i)) {
            rep.an_holds = false;
            rep.an_witness = i;
            break;
        }

    rep.co_holds = true;
    for (IdealId i = 0; i < m && rep.co_holds; ++i)
        for (IdealId j = 0; j < m; ++j)
            if (L.product(i, j) != L.product(j, i)) {
                rep.co_holds = false;
                rep.co_witness = {i, j};
                break;
            }

    rep.glr1_holds = true;
    for (IdealId i = 0; i < m && rep.glr1_holds; ++i)
        for (IdealId j = 0; j < m; ++j) {
            IdealId s = L.sum(i, j);
            IdealId lhs1 = L.right_ann(L.product(L.left_ann(L.product(L.left_ann(i), j)), L.left_ann(i)));
            IdealId lhs2 = L.right_ann(L.product(L.left_ann(i), L.left_ann(L.product(j, L.right_ann(i)))));
            if (lhs1 != s || lhs2 != s) {
                rep.glr1_holds = false;
                rep.glr1_witness = {i, j};
                break;
            }
        }

    rep.glr2_holds = true;
    for (IdealId i = 0; i < m && rep.glr2_holds; ++i)
        for (IdealId j = 0; j < m; ++j)
            if (L.right_ann(L.product(L.left_ann(j), L.left_ann(i))) !=
                L.left_ann(L.product(L.right_ann(j), L.right_ann(i)))) {
                rep.glr2_holds = false;
                rep.glr2_witness = {i, j};
                break;
            }

    if (rep.an_holds) {
        rep.lr_holds = true;
        for (IdealId i = 0; i < m && rep.lr_holds; ++i)
            for (IdealId j = 0; j < m; ++j) {
                IdealId star_i = L.right_ann(i);
                IdealId rhs = L.right_ann(L.product(star_i, L.right_ann(L.product(star_i, j))));
                if (rhs != L.sum(i, j)) {
                    rep.lr_holds = false;
                    rep.lr_witness = {i, j};
                    break;
                }
            }
    } else {
        rep.lr_holds = rep.glr1_holds && rep.glr2_holds;
        rep.lr_witness = rep.glr1_holds ? rep.glr2_witness : rep.glr1_witness;
    }

    rep.double_annihilator_holds = true;
    for (IdealId i = 0; i < m; ++i)
        if (L.left_ann(L.right_ann(i)) != i || L.right_ann(L.left_ann(i)) != i) {
            rep.double_annihilator_holds = false;
            rep.double_ann_witness = i;
            break;
        }

    rep.is_glr = rep.central_idempotent_generated && rep.an_holds && rep.co_holds && rep.lr_holds;
    rep.is_glr_by_definition =
        rep.central_idempotent_generated && rep.glr1_holds && rep.glr2_holds;
    return rep;
}

PMVReport check_pmv_of_ring(const AnalyzedRing& ar, const GLRReport& glr) {
    if (!glr.is_glr)
        throw Error(ErrorCode::GLRCheckFailed, "A(R) is only a pseudo MV-algebra for GLRs");
    PMVReport rep;
    GLSemiring S = semiring_of_ideals(ar.lattice);
    rep.gl = check_gl_axioms(S);
    rep.mv = MVTable{};
    if (rep.gl.all_pass) {
        rep.mv = mv_from_semiring(S, &rep.gl);
        rep.mv_axioms = check_axioms(rep.mv);
        rep.commutativity = is_commutative(rep.mv);
    }
    rep.all_pass = rep.gl.all_pass && rep.mv_axioms.all_pass &&
                   rep.commutativity.oplus_commutative && rep.commutativity.negations_coincide;
    return rep;
}

std::optional<SPIRCertificate> is_spir(const AnalyzedRing& ar) {
    const IdealLattice& L = ar.lattice;
    SPIRCertificate cert;
    cert.unitary = find_unity(*ar.ring).has_value();
    if (L.count() == 1) {
        cert.maximal_ideal = L.top();
        cert.nilpotency = 0;
        cert.powers = {L.top()};
        return cert;
    }
    std::vector<IdealId> maxs = maximal_ideals(L);
    if (maxs.size() != 1) return std::nullopt;
    IdealId M = maxs[0];
    cert.maximal_ideal = M;
    cert.powers = {L.top()};
    IdealId cur = L.top();
    while (cur != L.bottom()) {
        IdealId next = cur == L.top() ? M : L.product(cur, M);
        if (next == cur) return std::nullopt; // stabilized above {0}: M not nilpotent
        cert.powers.push_back(next);
        cur = next;
        if (cert.powers.size() > L.count() + 1) return std::nullopt;
    }
    cert.nilpotency = std::uint32_t(cert.powers.size()) - 1;
    if (cert.powers.size() != L.count()) return std::nullopt; // some ideal is not a power
    return cert;
}

bool check_spir_annihilator_law(const SPIRCertificate& cert, const IdealLattice& L) {
    const std::uint32_t n = cert.nilpotency;
    for (std::uint32_t k = 1; k < n; ++k) {
        IdealId mk = cert.powers[k];
        if (L.left_ann(mk) != cert.powers[n - k] || L.right_ann(mk) != cert.powers[n - k])
            return false;
    }
    return true;
}

ClosureSuiteReport check_closure_suite(std::span<const AnalyzedRing> rings, const RunConfig& cfg) {
    ClosureSuiteReport rep;
    std::vector<const AnalyzedRing*> glrs;
    for (const auto& ar : rings)
        if (check_glr(ar).is_glr) glrs.push_back(&ar);

    auto record_product = [&](std::span<const FiniteRing> factors, std::string desc) {
        FiniteRing prod = product_of_rings(factors, cfg);
        AnalyzedRing ar = analyze(std::make_shared<FiniteRing>(std::move(prod)), cfg);
        bool ok = check_glr(ar).is_glr;
        rep.products.push_back({std::move(desc), ok});
        if (!ok) rep.all_glr = false;
    };

    for (std::size_t i = 0; i < glrs.size(); ++i)
        for (std::size_t j = i; j < glrs.size(); ++j) {
            std::uint64_t sz = std::uint64_t(glrs[i]->ring->size()) * glrs[j]->ring->size();
            if (sz > cfg.max_elements) continue;
            FiniteRing fs[2] = {*glrs[i]->ring, *glrs[j]->ring};
            record_product(fs, std::to_string(glrs[i]->ring->size()) + "x" +
                                   std::to_string(glrs[j]->ring->size()) + " product (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
        }

    // one all-factor product while it stays under the cap
    {
        std::vector<FiniteRing> factors;
        std::uint64_t sz = 1;
        for (const auto* ar : glrs) {
            if (sz * ar->ring->size() > cfg.max_elements) break;
            sz *= ar->ring->size();
            factors.push_back(*ar->ring);
        }
        if (factors.size() > 2) record_product(factors, "k-fold product of the first factors");
    }

    for (std::size_t i = 0; i < glrs.size(); ++i) {
        const AnalyzedRing& ar = *glrs[i];
        for (IdealId id = 0; id < IdealId(ar.lattice.count()); ++id) {
            QuotientResult q = quotient_ring(*ar.ring, ar.lattice.ideal(id));
            AnalyzedRing qar = analyze(std::make_shared<FiniteRing>(std::move(q.ring)), cfg);
            bool ok = check_glr(qar).is_glr;
            rep.quotients.push_back(
                {"ring " + std::to_string(i) + " / ideal " + std::to_string(id), ok});
            if (!ok) rep.all_glr = false;
        }
    }
    return rep;
}

InfiniteProductWitnessReport check_infinite_product_witness(const RunConfig& cfg) {
    InfiniteProductWitnessReport rep;
    rep.infinite_case_note =
        "For R the countably infinite power of a field F with I the ideal vanishing on even "
        "positions, J the direct-sum ideal and K the ideal vanishing on odd positions, the sum "
        "law fails: (I+J)* = 0 while ((I*.J)*.I*) = K. The witness needs infinitely many "
        "coordinates, so it is recorded here and deliberately not computed; every finite "
        "truncation below satisfies the law.";
    for (std::uint32_t k : {1u, 2u, 4u, 8u}) {
        ProductSpec ps;
        for (std::uint32_t i = 0; i < k; ++i) ps.factors.push_back(RingSpec{CyclicSpec{2}});
        AnalyzedRing ar = analyze(RingSpec{std::move(ps)}, cfg);
        const IdealLattice& L = ar.lattice;
        const FiniteRing& R = *ar.ring;

        // coordinate i of element e is bit i of its index (all factors are size 2)
        Bitset I(R.size()), K(R.size());
        for (std::uint32_t e = 0; e < R.size(); ++e) {
            bool even_clear = true, odd_clear = true;
            for (std::uint32_t i = 0; i < k; ++i) {
                bool set = (e >> i) & 1u;
                if (set && (i + 1) % 2 == 0) even_clear = false; // positions are 1-based
                if (set && (i + 1) % 2 == 1) odd_clear = false;
            }
            if (even_clear) I.set(e);
            if (odd_clear) K.set(e);
        }
        IdealId iI = L.id_of(I), iK = L.id_of(K), iJ = L.top();

        InfiniteProductWitnessReport::Truncation tr;
        tr.k = k;
        tr.annihilator_is_complement = k < 2 || L.right_ann(iI) == iK;
        IdealId star_i = L.right_ann(iI);
        IdealId rhs = L.right_ann(L.product(star_i, L.right_ann(L.product(star_i, iJ))));
        tr.lr_holds_on_triple = rhs == L.sum(iI, iJ);
        tr.ring_is_glr = check_glr(ar).is_glr;
        if (!tr.lr_holds_on_triple || !tr.ring_is_glr) rep.finite_part_holds = false;
        rep.truncations.push_back(tr);
    }
    return rep;
}

DistributivityReport check_distributivity(const IdealLattice& L, const RunConfig& cfg) {
    DistributivityReport rep;
    const IdealId m = IdealId(L.count());
    for (IdealId i = 0; i < m && rep.binary_holds; ++i)
        for (IdealId j = 0; j < m && rep.binary_holds; ++j)
            for (IdealId k = 0; k < m; ++k)
                if (L.intersection(i, L.sum(j, k)) !=
                    L.sum(L.intersection(i, j), L.intersection(i, k))) {
                    rep.binary_holds = false;
                    rep.binary_witness = {{i, j, k}};
                    break;
                }

    auto check_family = [&](const std::vector<IdealId>& family) {
        for (IdealId i = 0; i < m && rep.family_holds; ++i) {
            IdealId inner = family[0];
            for (std::size_t t = 1; t < family.size(); ++t)
                inner = L.intersection(inner, family[t]);
            IdealId lhs = L.sum(i, inner);
            IdealId rhs = L.sum(i, family[0]);
            for (std::size_t t = 1; t < family.size(); ++t)
                rhs = L.intersection(rhs, L.sum(i, family[t]));
            if (lhs != rhs) rep.family_holds = false;
        }
        ++rep.families_checked;
    };

    if (std::uint32_t(m) <= cfg.exhaustive_family_limit) {
        rep.exhaustive = true;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
            std::vector<IdealId> family;
            for (IdealId t = 0; t < m; ++t)
                if ((mask >> t) & 1u) family.push_back(t);
            check_family(family);
            if (!rep.family_holds) break;
        }
    } else {
        std::mt19937_64 rng(cfg.seed);
        for (std::uint32_t s = 0; s < cfg.sampled_families && rep.family_holds; ++s) {
            std::vector<IdealId> family;
            for (IdealId t = 0; t < m; ++t)
                if (rng() & 1u) family.push_back(t);
            if (family.empty()) family.push_back(IdealId(rng() % m));
            check_family(family);
        }
    }
    return rep;
}

PrimeMaximalReport check_prime_maximal(const IdealLattice& L, const GLRReport& glr) {
    PrimeMaximalReport rep;
    rep.primes = prime_ideals(L);
    rep.maximals = maximal_ideals(L);
    rep.asserted = glr.is_glr;
    if (rep.asserted) {
        for (IdealId p : rep.primes)
            if (std::find(rep.maximals.begin(), rep.maximals.end(), p) == rep.maximals.end())
                rep.primes_are_maximal = false;
    }
    return rep;
}

IdealSummandReport check_ideal_summand(const AnalyzedRing& ar, IdealId M, const RunConfig& cfg) {
    const IdealLattice& L = ar.lattice;
    if (L.intersection(M, L.right_ann(M)) != L.bottom() ||
        L.intersection(M, L.left_ann(M)) != L.bottom())
        throw Error(ErrorCode::PreconditionFailed,
                    "ideal meets one of its annihilators nontrivially");
    IdealSummandReport rep;
    rep.summand = M;
    rep.complement_sum_is_ring = L.sum(M, L.right_ann(M)) == L.top();
    FiniteRing sub = subring(*ar.ring, L.ideal(M));
    AnalyzedRing sar = analyze(std::make_shared<FiniteRing>(std::move(sub)), cfg);
    rep.summand_report = check_glr(sar);
    rep.summand_is_glr = rep.summand_report.is_glr;
    return rep;
}

FinitenessUnitarityReport check_finiteness_and_unitarity(const AnalyzedRing& ar,
                                                         const GLRReport& glr) {
    const IdealLattice& L = ar.lattice;
    FinitenessUnitarityReport rep;
    rep.ideal_count = L.count();
    rep.mv_is_chain = true;
    for (IdealId i = 0; i < IdealId(L.count()) && rep.mv_is_chain; ++i)
        for (IdealId j = 0; j < IdealId(L.count()); ++j)
            if (!L.leq(i, j) && !L.leq(j, i)) {
                rep.mv_is_chain = false;
                break;
            }
    rep.unity_present = find_unity(*ar.ring).has_value();
    rep.chain_implies_unitary = !(glr.is_glr && rep.mv_is_chain) || rep.unity_present;

    std::vector<IdealId> atoms_ = lattice_atoms(L);
    std::vector<IdealId> maxs = maximal_ideals(L);
    rep.atom_count = atoms_.size();
    rep.maximal_count = maxs.size();
    if (glr.is_glr) {
        rep.atom_maximal_bijection = atoms_.size() == maxs.size();
        std::vector<IdealId> images;
        for (IdealId M : maxs) {
            IdealId star = L.right_ann(M);
            if (std::find(atoms_.begin(), atoms_.end(), star) == atoms_.end())
                rep.atom_maximal_bijection = false;
            images.push_back(star);
        }
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
            rep.atom_maximal_bijection = false;
    }
    return rep;
}

Decomposition decompose(const AnalyzedRing& ar, const RunConfig& cfg) {
    GLRReport glr = check_glr(ar);
    if (!glr.is_glr)
        throw Error(ErrorCode::GLRCheckFailed, "decomposition only exists for GLRs");
    const IdealLattice& L = ar.lattice;
    const FiniteRing& R = *ar.ring;

    Decomposition dec;
    std::vector<IdealId> atoms_ = lattice_atoms(L);

    dec.facts_hold = true;
    std::vector<std::vector<ElementId>> projections;
    for (IdealId a : atoms_) {
        DecompositionFactor f;
        f.atom = a;
        IdealId hull = a;
        while (true) {
            IdealId next = mv_oplus(L, hull, a);
            if (next == hull) break;
            hull = next;
        }
        f.summand = hull;
        f.complement = L.right_ann(hull);

        if (L.sum(f.summand, f.complement) != L.top()) dec.facts_hold = false;         // Fact 1
        if (L.intersection(f.summand, f.complement) != L.bottom()) dec.facts_hold = false; // Fact 2
        if (L.product(f.summand, f.summand) != f.summand) dec.facts_hold = false;      // Fact 4

        QuotientResult q = quotient_ring(R, L.ideal(f.complement));
        projections.push_back(std::move(q.projection));
        auto factor = std::make_shared<FiniteRing>(std::move(q.ring));
        AnalyzedRing far = analyze(factor, cfg);
        auto cert = is_spir(far);
        if (!cert || !cert->unitary)
            throw Error(ErrorCode::CertificationFailed,
                        "decomposition factor is not a unitary special primary ring");
        f.certificate = *cert;
        f.chain_length = std::uint32_t(far.lattice.count());
        if (f.chain_length != f.certificate.nilpotency + 1)
            throw Error(ErrorCode::CertificationFailed,
                        "factor ideal count differs from nilpotency + 1");
        f.factor_ring = factor;
        dec.factors.push_back(std::move(f));
    }
    for (std::size_t x = 0; x < dec.factors.size(); ++x) // Fact 3
        for (std::size_t y = x + 1; y < dec.factors.size(); ++y)
            if (L.intersection(dec.factors[x].summand, dec.factors[y].summand) != L.bottom())
                dec.facts_hold = false;

    // canonical map r -> (r + R*_x)_x into the product of the factors
    std::vector<FiniteRing> factor_rings;
    for (const auto& f : dec.factors) factor_rings.push_back(*f.factor_ring);
    FiniteRing prod = product_of_rings(factor_rings, cfg);

    dec.canonical_map.assign(R.size(), std::vector<ElementId>(dec.factors.size(), 0));
    std::vector<std::uint32_t> image(R.size(), 0);
    std::vector<bool> hit(prod.size(), false);
    dec.map_is_isomorphism = prod.size() == R.size();
    for (std::uint32_t r = 0; r < R.size() && dec.map_is_isomorphism; ++r) {
        std::uint64_t idx = 0;
        for (std::size_t x = dec.factors.size(); x-- > 0;)
            idx = idx * dec.factors[x].factor_ring->size() + projections[x][r];
        for (std::size_t x = 0; x < dec.factors.size(); ++x)
            dec.canonical_map[r][x] = projections[x][r];
        image[r] = std::uint32_t(idx);
        if (hit[idx]) dec.map_is_isomorphism = false;
        hit[idx] = true;
    }
    if (dec.map_is_isomorphism) {
        for (std::uint32_t a = 0; a < R.size() && dec.map_is_isomorphism; ++a)
            for (std::uint32_t b = 0; b < R.size(); ++b) {
                if (image[R.add(ElementId(a), ElementId(b))] !=
                        prod.add(ElementId(image[a]), ElementId(image[b])) ||
                    image[R.mul(ElementId(a), ElementId(b))] !=
                        prod.mul(ElementId(image[a]), ElementId(image[b]))) {
                    dec.map_is_isomorphism = false;
                    break;
                }
            }
    }

    // chain lengths must agree with the canonical chain-product form of A(R)
    PMVReport pmv = check_pmv_of_ring(ar, glr);
    auto iso = pmv.gl.all_pass ? iso_to_chain_product(pmv.mv) : std::nullopt;
    std::vector<std::uint32_t> from_factors, from_mv;
    for (const auto& f : dec.factors) from_factors.push_back(f.chain_length);
    if (iso) from_mv = iso->chain_lengths;
    std::sort(from_factors.begin(), from_factors.end());
    std::sort(from_mv.begin(), from_mv.end());
    dec.chain_lengths_match_mv = iso.has_value() && from_factors == from_mv;

    dec.certified = dec.facts_hold && dec.map_is_isomorphism && dec.chain_lengths_match_mv;
    if (!dec.certified)
        throw Error(ErrorCode::CertificationFailed,
                    std::string("decomposition verification failed: ") +
                        (!dec.facts_hold ? "facts"
                         : !dec.map_is_isomorphism ? "canonical map"
                                                   : "chain lengths"));
    return dec;
}

ArtinianChainReport check_artinian_chain_criterion(const AnalyzedRing& ar, const RunConfig& cfg) {
    ArtinianChainReport rep;
    rep.unitary = find_unity(*ar.ring).has_value();
    rep.left_chain = is_left_chain_ring(*ar.ring, cfg);
    rep.applicable = rep.unitary && rep.left_chain;
    if (rep.applicable) {
        rep.spir_present = is_spir(ar).has_value();
        rep.glr_holds = check_glr(ar).is_glr;
        rep.ok = rep.spir_present && rep.glr_holds;
    }
    return rep;
}

} // namespace glr
