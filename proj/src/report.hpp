#pragma once

#include <string>

#include <json.hpp>

#include "analysis.hpp"
#include "config.hpp"
#include "corpus.hpp"

namespace glr {

enum class ReportFormat { Json, Text, Dot };

/// Rendered report plus the aggregate verdict of every asserted property in
/// it.  Classification-only reports (ideals) are always ok.
struct CheckOutcome {
    std::string rendered;
    bool ok = true;
};

nlohmann::json config_to_json(const RunConfig& cfg);
nlohmann::json ring_summary_json(const FiniteRing& ring);

nlohmann::json lattice_to_json(const IdealLattice& L);
std::string lattice_to_dot(const IdealLattice& L);

nlohmann::json mv_to_json(const MVTable& t);
MVTable mv_table_from_json(const nlohmann::json& j);
nlohmann::json semiring_to_json(const GLSemiring& S);

/// `which` is one of: glr, spir, axioms, duality, all.
CheckOutcome report_check(const AnalyzedRing& ar, const std::string& which, const RunConfig& cfg,
                          ReportFormat format);
CheckOutcome report_ideals(const AnalyzedRing& ar, const RunConfig& cfg, ReportFormat format);
CheckOutcome report_decompose(const AnalyzedRing& ar, const RunConfig& cfg, ReportFormat format);
CheckOutcome report_mv_of_ring(const AnalyzedRing& ar, const RunConfig& cfg, ReportFormat format);
CheckOutcome report_mv_table(const MVTable& t, const RunConfig& cfg, ReportFormat format);
CheckOutcome report_semiring(const AnalyzedRing& ar, const RunConfig& cfg, ReportFormat format);
CheckOutcome report_corpus(const RunConfig& cfg, ReportFormat format);

} // namespace glr
