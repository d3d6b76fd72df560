#include "report.hpp"

#include <functional>
#include <sstream>

#include "spec_parse.hpp"

namespace glr {

namespace {

nlohmann::json envelope(const RunConfig& cfg) {
    nlohmann::json j;
    j["version"] = workbench_version();
    j["config"] = config_to_json(cfg);
    return j;
}

nlohmann::json ideal_ref(const IdealLattice& L, IdealId id) {
    nlohmann::json j;
    j["id"] = id;
    j["mask"] = L.ideal(id).to_hex();
    j["size"] = L.ideal(id).count();
    return j;
}

nlohmann::json opt_ideal(const IdealLattice& L, const std::optional<IdealId>& id) {
    if (!id) return nullptr;
    return ideal_ref(L, *id);
}

nlohmann::json opt_pair(const IdealLattice& L,
                        const std::optional<std::pair<IdealId, IdealId>>& w) {
    if (!w) return nullptr;
    nlohmann::json j;
    j["first"] = ideal_ref(L, w->first);
    j["second"] = ideal_ref(L, w->second);
    return j;
}

nlohmann::json axiom_checks_json(const std::vector<AxiomCheck>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j;
        j["name"] = c.name;
        j["ok"] = c.ok;
        if (!c.ok) {
            nlohmann::json w = nlohmann::json::array();
            if (c.a >= 0) w.push_back(c.a);
            if (c.b >= 0) w.push_back(c.b);
            if (c.c >= 0) w.push_back(c.c);
            j["witness"] = w;
        }
        arr.push_back(j);
    }
    return arr;
}

nlohmann::json glr_report_json(const IdealLattice& L, const GLRReport& r) {
    nlohmann::json j;
    j["central_idempotent_generated"] = r.central_idempotent_generated;
    j["central_failing_element"] =
        r.central_failing ? nlohmann::json(*r.central_failing) : nlohmann::json(nullptr);
    j["AN_holds"] = r.an_holds;
    j["AN_witness"] = opt_ideal(L, r.an_witness);
    j["CO_holds"] = r.co_holds;
    j["CO_witness"] = opt_pair(L, r.co_witness);
    j["LR_holds"] = r.lr_holds;
    j["LR_witness"] = opt_pair(L, r.lr_witness);
    j["GLR1_holds"] = r.glr1_holds;
    j["GLR1_witness"] = opt_pair(L, r.glr1_witness);
    j["GLR2_holds"] = r.glr2_holds;
    j["GLR2_witness"] = opt_pair(L, r.glr2_witness);
    j["is_glr"] = r.is_glr;
    j["is_glr_by_definition"] = r.is_glr_by_definition;
    j["double_annihilator_holds"] = r.double_annihilator_holds;
    j["double_annihilator_witness"] = opt_ideal(L, r.double_ann_witness);
    if (r.double_ann_witness) {
        IdealId i = *r.double_ann_witness;
        j["double_annihilator_image"] = ideal_ref(L, L.right_ann(L.left_ann(i)));
    }
    return j;
}

nlohmann::json spir_json(const IdealLattice& L, const std::optional<SPIRCertificate>& cert) {
    if (!cert) return nullptr;
    nlohmann::json j;
    j["maximal_ideal"] = ideal_ref(L, cert->maximal_ideal);
    j["nilpotency"] = cert->nilpotency;
    nlohmann::json powers = nlohmann::json::array();
    for (IdealId p : cert->powers) powers.push_back(ideal_ref(L, p));
    j["powers"] = powers;
    j["unitary"] = cert->unitary;
    return j;
}

nlohmann::json decomposition_json(const AnalyzedRing& ar, const Decomposition& dec) {
    const IdealLattice& L = ar.lattice;
    nlohmann::json j;
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : dec.factors) {
        nlohmann::json fj;
        fj["atom"] = ideal_ref(L, f.atom);
        fj["summand"] = ideal_ref(L, f.summand);
        fj["complement"] = ideal_ref(L, f.complement);
        fj["chain_length"] = f.chain_length;
        fj["factor_size"] = f.factor_ring->size();
        fj["certificate"]["nilpotency"] = f.certificate.nilpotency;
        fj["certificate"]["unitary"] = f.certificate.unitary;
        factors.push_back(fj);
    }
    j["factors"] = factors;
    j["canonical_map"] = dec.canonical_map;
    j["facts_hold"] = dec.facts_hold;
    j["map_is_isomorphism"] = dec.map_is_isomorphism;
    j["chain_lengths_match_mv"] = dec.chain_lengths_match_mv;
    j["certified"] = dec.certified;
    return j;
}

std::string table_text(const std::string& title, std::uint32_t n,
                       const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& cell) {
    std::ostringstream os;
    os << title << "\n";
    int w = n > 100 ? 4 : n > 10 ? 3 : 2;
    os << std::string(w + 1, ' ') << "|";
    for (std::uint32_t c = 0; c < n; ++c) {
        std::string s = std::to_string(c);
        os << std::string(w + 1 - s.size(), ' ') << s;
    }
    os << "\n" << std::string(w + 2, '-') << std::string((w + 1) * n, '-') << "\n";
    for (std::uint32_t r = 0; r < n; ++r) {
        std::string s = std::to_string(r);
        os << std::string(w - s.size(), ' ') << s << " |";
        for (std::uint32_t c = 0; c < n; ++c) {
            std::string v = std::to_string(cell(r, c));
            os << std::string(w + 1 - v.size(), ' ') << v;
        }
        os << "\n";
    }
    return os.str();
}

/// Generic JSON-to-text mirror: same content, indentation instead of braces.
void render_text(const nlohmann::json& j, std::ostream& os, int depth) {
    std::string pad(std::size_t(depth) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                           (it.value()[0].is_object() || it.value()[0].is_array()))) {
                os << pad << it.key() << ":\n";
                render_text(it.value(), os, depth + 1);
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (item.is_object() || item.is_array()) {
                os << pad << "-\n";
                render_text(item, os, depth + 1);
            } else {
                os << pad << "- " << item.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

CheckOutcome finish(nlohmann::json doc, bool ok, ReportFormat format) {
    doc["ok"] = ok;
    if (format == ReportFormat::Json) return {doc.dump(2) + "\n", ok};
    std::ostringstream os;
    render_text(doc, os, 0);
    return {os.str(), ok};
}

} // namespace

nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["max_elements"] = cfg.max_elements;
    j["max_ideals"] = cfg.max_ideals;
    j["max_semiring_ideals"] = cfg.max_semiring_ideals;
    j["exhaustive_family_limit"] = cfg.exhaustive_family_limit;
    j["sampled_families"] = cfg.sampled_families;
    j["seed"] = cfg.seed;
    j["jobs"] = cfg.jobs;
    return j;
}

nlohmann::json ring_summary_json(const FiniteRing& ring) {
    nlohmann::json j;
    j["size"] = ring.size();
    j["zero"] = ring.zero();
    j["unity"] = ring.unity() ? nlohmann::json(*ring.unity()) : nlohmann::json(nullptr);
    j["spec"] = spec_to_json(ring.provenance());
    j["spec_text"] = render_spec(ring.provenance());
    return j;
}

nlohmann::json lattice_to_json(const IdealLattice& L) {
    nlohmann::json j;
    j["count"] = L.count();
    nlohmann::json ideals = nlohmann::json::array();
    for (std::size_t i = 0; i < L.count(); ++i) {
        nlohmann::json ij;
        ij["id"] = i;
        ij["mask"] = L.ideal(IdealId(i)).to_hex();
        ij["size"] = L.ideal(IdealId(i)).count();
        ideals.push_back(ij);
    }
    j["ideals"] = ideals;
    const std::size_t m = L.count();
    auto table = [&](auto&& f) {
        nlohmann::json t = nlohmann::json::array();
        for (std::size_t a = 0; a < m; ++a) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t b = 0; b < m; ++b) row.push_back(f(IdealId(a), IdealId(b)));
            t.push_back(row);
        }
        return t;
    };
    j["sum"] = table([&](IdealId a, IdealId b) { return L.sum(a, b); });
    j["product"] = table([&](IdealId a, IdealId b) { return L.product(a, b); });
    j["intersection"] = table([&](IdealId a, IdealId b) { return L.intersection(a, b); });
    nlohmann::json lann = nlohmann::json::array(), rann = nlohmann::json::array();
    for (std::size_t i = 0; i < m; ++i) {
        lann.push_back(L.left_ann(IdealId(i)));
        rann.push_back(L.right_ann(IdealId(i)));
    }
    j["left_ann"] = lann;
    j["right_ann"] = rann;
    j["maximal"] = maximal_ideals(L);
    j["prime"] = prime_ideals(L);
    return j;
}

std::string lattice_to_dot(const IdealLattice& L) {
    std::ostringstream os;
    os << "digraph ideal_lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < L.count(); ++i)
        os << "  i" << i << " [label=\"I" << i << " #" << L.ideal(IdealId(i)).count() << " "
           << L.ideal(IdealId(i)).to_hex() << "\"];\n";
    for (auto [lo, hi] : covering_relation(L)) os << "  i" << lo << " -> i" << hi << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json mv_to_json(const MVTable& t) {
    nlohmann::json j;
    j["size"] = t.n;
    nlohmann::json oplus = nlohmann::json::array();
    nlohmann::json odot = nlohmann::json::array();
    for (std::uint32_t x = 0; x < t.n; ++x) {
        nlohmann::json row = nlohmann::json::array(), orow = nlohmann::json::array();
        for (std::uint32_t y = 0; y < t.n; ++y) {
            row.push_back(t.op(std::uint16_t(x), std::uint16_t(y)));
            orow.push_back(t.od(std::uint16_t(x), std::uint16_t(y)));
        }
        oplus.push_back(row);
        odot.push_back(orow);
    }
    j["oplus"] = oplus;
    j["odot"] = odot;
    j["neg_minus"] = t.neg_minus;
    j["neg_tilde"] = t.neg_tilde;
    j["zero"] = t.zero;
    j["one"] = t.one;
    return j;
}

MVTable mv_table_from_json(const nlohmann::json& j) {
    try {
        MVTable t;
        t.n = j.at("size").get<std::uint32_t>();
        if (t.n == 0) throw Error(ErrorCode::InvalidArgument, "MV table needs size >= 1");
        auto rows = j.at("oplus").get<std::vector<std::vector<std::uint16_t>>>();
        if (rows.size() != t.n) throw Error(ErrorCode::InvalidArgument, "oplus must be n x n");
        for (const auto& r : rows) {
            if (r.size() != t.n) throw Error(ErrorCode::InvalidArgument, "oplus must be n x n");
            for (auto v : r)
                if (v >= t.n) throw Error(ErrorCode::InvalidArgument, "oplus entry out of range");
            t.oplus.insert(t.oplus.end(), r.begin(), r.end());
        }
        t.neg_minus = j.at("neg_minus").get<std::vector<std::uint16_t>>();
        t.neg_tilde = j.at("neg_tilde").get<std::vector<std::uint16_t>>();
        if (t.neg_minus.size() != t.n || t.neg_tilde.size() != t.n)
            throw Error(ErrorCode::InvalidArgument, "negation vectors must have length n");
        for (std::uint32_t x = 0; x < t.n; ++x)
            if (t.neg_minus[x] >= t.n || t.neg_tilde[x] >= t.n)
                throw Error(ErrorCode::InvalidArgument, "negation entry out of range");
        t.zero = j.at("zero").get<std::uint16_t>();
        t.one = j.at("one").get<std::uint16_t>();
        if (t.zero >= t.n || t.one >= t.n)
            throw Error(ErrorCode::InvalidArgument, "constant out of range");
        derive_mv(t);
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed MV table JSON: ") + e.what());
    }
}

nlohmann::json semiring_to_json(const GLSemiring& S) {
    nlohmann::json j;
    j["size"] = S.n;
    nlohmann::json plus = nlohmann::json::array(), times = nlohmann::json::array();
    for (std::uint32_t x = 0; x < S.n; ++x) {
        nlohmann::json prow = nlohmann::json::array(), trow = nlohmann::json::array();
        for (std::uint32_t y = 0; y < S.n; ++y) {
            prow.push_back(S.pl(std::uint16_t(x), std::uint16_t(y)));
            trow.push_back(S.tm(std::uint16_t(x), std::uint16_t(y)));
        }
        plus.push_back(prow);
        times.push_back(trow);
    }
    j["plus"] = plus;
    j["times"] = times;
    j["neg_minus"] = S.neg_minus;
    j["neg_tilde"] = S.neg_tilde;
    j["zero"] = S.zero;
    j["one"] = S.one;
    return j;
}

CheckOutcome report_ideals(const AnalyzedRing& ar, const RunConfig& cfg, ReportFormat format) {
    if (format == ReportFormat::Dot) return {lattice_to_dot(ar.lattice), true};
    nlohmann::json doc = envelope(cfg);
    doc["ring"] = ring_summary_json(*ar.ring);
    doc["lattice"] = lattice_to_json(ar.lattice);
    return finish(std::move(doc), true, format);
}

CheckOutcome report_check(const AnalyzedRing& ar, const std::string& which, const RunConfig& cfg,
                          ReportFormat format) {
    if (format == ReportFormat::Dot)
        throw Error(ErrorCode::InvalidArgument, "DOT output only applies to the ideals command");
    nlohmann::json doc = envelope(cfg);
    doc["ring"] = ring_summary_json(*ar.ring);
    doc["which"] = which;
    const IdealLattice& L = ar.lattice;

    GLRReport glr = check_glr(ar);
    bool ok = true;

    if (which == "glr" || which == "all") {
        doc["glr"] = glr_report_json(L, glr);
        ok = ok && glr.is_glr && glr.is_glr == glr.is_glr_by_definition;
    }
    if (which == "spir" || which == "all") {
        auto cert = is_spir(ar);
        doc["spir"] = spir_json(L, cert);
        bool law = cert && check_spir_annihilator_law(*cert, L);
        doc["spir_annihilator_law"] = cert ? nlohmann::json(law) : nlohmann::json(nullptr);
        if (which == "spir") ok = ok && cert.has_value() && law;
    }
    if (which == "axioms" || which == "duality" || which == "all") {
        GLSemiring S = semiring_of_ideals(L);
        GLAxiomReport gl = check_gl_axioms(S);
        doc["gl_axioms"] = axiom_checks_json(gl.checks);
        doc["gl_axioms_pass"] = gl.all_pass;
        if (gl.all_pass) {
            MVTable mv = mv_from_semiring(S, &gl);
            if (which != "duality") {
                MVAxiomReport mvrep = check_axioms(mv);
                doc["mv_axioms"] = axiom_checks_json(mvrep.checks);
                doc["mv_axioms_pass"] = mvrep.all_pass;
                MVCommutativityReport comm = is_commutative(mv);
                doc["mv_commutative"] = comm.oplus_commutative;
                doc["mv_negations_coincide"] = comm.negations_coincide;
                ok = ok && mvrep.all_pass && comm.oplus_commutative && comm.negations_coincide;
            }
            if (which != "axioms") {
                DualityReport dual = check_duality(mv, S);
                doc["duality"]["semiring_round_trip"] = dual.semiring_round_trip;
                doc["duality"]["mv_round_trip"] = dual.mv_round_trip;
                ok = ok && dual.exact();
            }
        } else {
            ok = false;
        }
    }
    if (which == "all") {
        PrimeMaximalReport pm = check_prime_maximal(L, glr);
        doc["prime_ideals"] = pm.primes;
        doc["maximal_ideals"] = pm.maximals;
        doc["primes_are_maximal"] = pm.primes_are_maximal;
        DistributivityReport dist = check_distributivity(L, cfg);
        doc["distributivity_binary"] = dist.binary_holds;
        doc["distributivity_families"] = dist.family_holds;
        doc["distributivity_families_checked"] = dist.families_checked;
        FinitenessUnitarityReport fin = check_finiteness_and_unitarity(ar, glr);
        doc["ideal_count"] = fin.ideal_count;
        doc["mv_is_chain"] = fin.mv_is_chain;
        doc["chain_implies_unitary"] = fin.chain_implies_unitary;
        doc["atom_maximal_bijection"] = fin.atom_maximal_bijection;
        ok = ok && pm.primes_are_maximal && dist.binary_holds && dist.family_holds &&
             fin.chain_implies_unitary && fin.atom_maximal_bijection;
        if (glr.is_glr) {
            GaloisReport gal = check_galois(L, cfg);
            doc["galois_all_pass"] = gal.all_pass();
            doc["semiring_ideal_count"] = gal.semiring_ideal_count;
            ok = ok && gal.all_pass();
            try {
                Decomposition dec = decompose(ar, cfg);
                doc["decomposition"] = decomposition_json(ar, dec);
                ok = ok && dec.certified;
            } catch (const Error& e) {
                doc["decomposition"] = nullptr;
                doc["decomposition_error"] = e.what();
                ok = false;
            }
        }
    }
    if (which != "glr" && which != "spir" && which != "axioms" && which != "duality" &&
        which != "all")
        throw Error(ErrorCode::InvalidArgument, "unknown check: " + which);
    return finish(std::move(doc), ok, format);
}

CheckOutcome report_decompose(const AnalyzedRing& ar, const RunConfig& cfg, ReportFormat format) {
    if (format == ReportFormat::Dot)
        throw Error(ErrorCode::InvalidArgument, "DOT output only applies to the ideals command");
    nlohmann::json doc = envelope(cfg);
    doc["ring"] = ring_summary_json(*ar.ring);
    GLRReport glr = check_glr(ar);
    doc["glr"] = glr_report_json(ar.lattice, glr);
    if (!glr.is_glr) {
        doc["decomposition"] = nullptr;
        return finish(std::move(doc), false, format);
    }
    try {
        Decomposition dec = decompose(ar, cfg);
        doc["decomposition"] = decomposition_json(ar, dec);
        return finish(std::move(doc), dec.certified, format);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CertificationFailed) throw;
        doc["decomposition"] = nullptr;
        doc["decomposition_error"] = e.what();
        return finish(std::move(doc), false, format);
    }
}

CheckOutcome report_mv_of_ring(const AnalyzedRing& ar, const RunConfig& cfg, ReportFormat format) {
    if (format == ReportFormat::Dot)
        throw Error(ErrorCode::InvalidArgument, "DOT output only applies to the ideals command");
    nlohmann::json doc = envelope(cfg);
    doc["ring"] = ring_summary_json(*ar.ring);
    GLSemiring S = semiring_of_ideals(ar.lattice);
    GLAxiomReport gl = check_gl_axioms(S);
    doc["gl_axioms_pass"] = gl.all_pass;
    if (!gl.all_pass) {
        doc["gl_axioms"] = axiom_checks_json(gl.checks);
        doc["mv"] = nullptr;
        return finish(std::move(doc), false, format);
    }
    MVTable mv = mv_from_semiring(S, &gl);
    if (format == ReportFormat::Text) {
        std::ostringstream os;
        os << table_text("oplus", mv.n, [&](std::uint32_t a, std::uint32_t b) {
            return std::uint32_t(mv.op(std::uint16_t(a), std::uint16_t(b)));
        });
        os << table_text("odot", mv.n, [&](std::uint32_t a, std::uint32_t b) {
            return std::uint32_t(mv.od(std::uint16_t(a), std::uint16_t(b)));
        });
        doc["cayley_tables"] = os.str();
    }
    return [&] {
        doc["mv"] = mv_to_json(mv);
        MVAxiomReport mvrep = check_axioms(mv);
        doc["mv_axioms"] = axiom_checks_json(mvrep.checks);
        doc["mv_axioms_pass"] = mvrep.all_pass;
        MVCommutativityReport comm = is_commutative(mv);
        doc["commutative"] = comm.oplus_commutative;
        doc["atoms"] = atoms(mv);
        auto iso = iso_to_chain_product(mv);
        doc["chain_lengths"] = iso ? nlohmann::json(iso->chain_lengths) : nlohmann::json(nullptr);
        bool ok = mvrep.all_pass && comm.oplus_commutative;
        return finish(std::move(doc), ok, format);
    }();
}

CheckOutcome report_mv_table(const MVTable& t, const RunConfig& cfg, ReportFormat format) {
    if (format == ReportFormat::Dot)
        throw Error(ErrorCode::InvalidArgument, "DOT output only applies to the ideals command");
    nlohmann::json doc = envelope(cfg);
    doc["mv"] = mv_to_json(t);
    MVAxiomReport mvrep = check_axioms(t);
    doc["mv_axioms"] = axiom_checks_json(mvrep.checks);
    doc["mv_axioms_pass"] = mvrep.all_pass;
    MVCommutativityReport comm = is_commutative(t);
    doc["commutative"] = comm.oplus_commutative;
    doc["negations_coincide"] = comm.negations_coincide;
    if (comm.witness) doc["commutativity_witness"] = {comm.witness->first, comm.witness->second};
    if (mvrep.all_pass) {
        doc["atoms"] = atoms(t);
        auto iso = iso_to_chain_product(t);
        doc["chain_lengths"] = iso ? nlohmann::json(iso->chain_lengths) : nlohmann::json(nullptr);
    }
    return finish(std::move(doc), mvrep.all_pass, format);
}

CheckOutcome report_semiring(const AnalyzedRing& ar, const RunConfig& cfg, ReportFormat format) {
    if (format == ReportFormat::Dot)
        throw Error(ErrorCode::InvalidArgument, "DOT output only applies to the ideals command");
    nlohmann::json doc = envelope(cfg);
    doc["ring"] = ring_summary_json(*ar.ring);
    GLSemiring S = semiring_of_ideals(ar.lattice);
    doc["semiring"] = semiring_to_json(S);
    GLAxiomReport gl = check_gl_axioms(S);
    doc["gl_axioms"] = axiom_checks_json(gl.checks);
    doc["gl_axioms_pass"] = gl.all_pass;
    return finish(std::move(doc), gl.all_pass, format);
}

CheckOutcome report_corpus(const RunConfig& cfg, ReportFormat format) {
    if (format == ReportFormat::Dot)
        throw Error(ErrorCode::InvalidArgument, "DOT output only applies to the ideals command");
    nlohmann::json doc = envelope(cfg);
    SuiteReport suite = run_property_suite(cfg);
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : suite.items) {
        nlohmann::json ij;
        ij["ring"] = item.ring;
        ij["check"] = item.check;
        ij["pass"] = item.pass;
        if (!item.detail.empty()) ij["detail"] = item.detail;
        items.push_back(ij);
    }
    doc["items"] = items;
    doc["all_pass"] = suite.all_pass;
    return finish(std::move(doc), suite.all_pass, format);
}

} // namespace glr
