#include "glr/glr.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "analysis.hpp"
#include "config.hpp"
#include "report.hpp"
#include "spec_parse.hpp"

struct glr_options {
    glr::RunConfig cfg;
};

struct glr_ring {
    glr::AnalyzedRing ar;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_error_offset = -1;

glr_status status_of(const glr::Error& e) {
    using glr::ErrorCode;
    switch (e.code()) {
    case ErrorCode::ParseError: return GLR_E_PARSE;
    case ErrorCode::InvalidSpec: return GLR_E_INVALID_SPEC;
    case ErrorCode::TableNotARing: return GLR_E_NOT_A_RING;
    case ErrorCode::SizeCapExceeded:
    case ErrorCode::IdealCountCapExceeded:
    case ErrorCode::SemiringIdealCountCapExceeded: return GLR_E_CAP_EXCEEDED;
    case ErrorCode::NotAnIdeal: return GLR_E_NOT_AN_IDEAL;
    case ErrorCode::GLAxiomsFailed:
    case ErrorCode::GLRCheckFailed:
    case ErrorCode::PreconditionFailed: return GLR_E_CHECK_FAILED;
    case ErrorCode::InvalidArgument: return GLR_E_INVALID_ARGUMENT;
    case ErrorCode::IoError: return GLR_E_IO;
    case ErrorCode::CertificationFailed: return GLR_E_INTERNAL;
    }
    return GLR_E_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
glr_status guarded(F&& f) {
    g_last_error.clear();
    g_last_error_offset = -1;
    try {
        return std::forward<F>(f)();
    } catch (const glr::Error& e) {
        g_last_error = e.what();
        if (e.offset() != glr::Error::npos) g_last_error_offset = long(e.offset());
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GLR_E_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return GLR_E_INTERNAL;
    }
}

glr::RunConfig config_of(const glr_options* opts) {
    return opts ? opts->cfg : glr::RunConfig{};
}

glr::ReportFormat format_of(glr_format f) {
    switch (f) {
    case GLR_FORMAT_JSON: return glr::ReportFormat::Json;
    case GLR_FORMAT_TEXT: return glr::ReportFormat::Text;
    case GLR_FORMAT_DOT: return glr::ReportFormat::Dot;
    }
    throw glr::Error(glr::ErrorCode::InvalidArgument, "unknown report format");
}

glr_status deliver(const glr::CheckOutcome& outcome, char** out_report, int* out_ok) {
    if (!out_report) throw glr::Error(glr::ErrorCode::InvalidArgument, "out_report is null");
    *out_report = dup_string(outcome.rendered);
    if (out_ok) *out_ok = outcome.ok ? 1 : 0;
    return GLR_OK;
}

const glr_ring* require(const glr_ring* ring) {
    if (!ring) throw glr::Error(glr::ErrorCode::InvalidArgument, "ring handle is null");
    return ring;
}

} // namespace

extern "C" {

const char* glr_version(void) { return glr::workbench_version(); }

const char* glr_last_error(void) { return g_last_error.c_str(); }

long glr_last_error_offset(void) { return g_last_error_offset; }

glr_options* glr_options_new(void) { return new (std::nothrow) glr_options{}; }

void glr_options_free(glr_options* opts) { delete opts; }

glr_status glr_options_set_max_elements(glr_options* opts, uint32_t cap) {
    return guarded([&]() -> glr_status {
        if (!opts || cap == 0)
            throw glr::Error(glr::ErrorCode::InvalidArgument, "options handle or cap invalid");
        opts->cfg.max_elements = cap;
        return GLR_OK;
    });
}

glr_status glr_options_set_max_ideals(glr_options* opts, uint32_t cap) {
    return guarded([&]() -> glr_status {
        if (!opts || cap == 0)
            throw glr::Error(glr::ErrorCode::InvalidArgument, "options handle or cap invalid");
        opts->cfg.max_ideals = cap;
        return GLR_OK;
    });
}

glr_status glr_options_set_max_semiring_ideals(glr_options* opts, uint32_t cap) {
    return guarded([&]() -> glr_status {
        if (!opts || cap == 0)
            throw glr::Error(glr::ErrorCode::InvalidArgument, "options handle or cap invalid");
        opts->cfg.max_semiring_ideals = cap;
        return GLR_OK;
    });
}

glr_status glr_options_set_jobs(glr_options* opts, uint32_t jobs) {
    return guarded([&]() -> glr_status {
        if (!opts || jobs == 0)
            throw glr::Error(glr::ErrorCode::InvalidArgument, "options handle or jobs invalid");
        opts->cfg.jobs = jobs;
        return GLR_OK;
    });
}

glr_status glr_options_set_seed(glr_options* opts, uint64_t seed) {
    return guarded([&]() -> glr_status {
        if (!opts) throw glr::Error(glr::ErrorCode::InvalidArgument, "options handle is null");
        opts->cfg.seed = seed;
        return GLR_OK;
    });
}

glr_status glr_ring_parse(const char* spec_text, const glr_options* opts, glr_ring** out_ring) {
    return guarded([&]() -> glr_status {
        if (!spec_text || !out_ring)
            throw glr::Error(glr::ErrorCode::InvalidArgument, "spec text or out pointer is null");
        glr::RingSpec spec = glr::parse_spec(spec_text);
        *out_ring = new glr_ring{glr::analyze(spec, config_of(opts))};
        return GLR_OK;
    });
}

glr_status glr_ring_from_json(const char* json_text, const glr_options* opts,
                              glr_ring** out_ring) {
    return guarded([&]() -> glr_status {
        if (!json_text || !out_ring)
            throw glr::Error(glr::ErrorCode::InvalidArgument, "json text or out pointer is null");
        nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
        if (j.is_discarded())
            throw glr::Error(glr::ErrorCode::ParseError, "invalid JSON document", 0);
        glr::RingSpec spec = glr::spec_from_json(j);
        *out_ring = new glr_ring{glr::analyze(spec, config_of(opts))};
        return GLR_OK;
    });
}

void glr_ring_free(glr_ring* ring) { delete ring; }

uint32_t glr_ring_size(const glr_ring* ring) { return ring ? ring->ar.ring->size() : 0; }

glr_status glr_ring_render_spec(const glr_ring* ring, char** out_text) {
    return guarded([&]() -> glr_status {
        require(ring);
        if (!out_text) throw glr::Error(glr::ErrorCode::InvalidArgument, "out pointer is null");
        *out_text = dup_string(glr::render_spec(ring->ar.ring->provenance()));
        return GLR_OK;
    });
}

glr_status glr_ring_summary_json(const glr_ring* ring, char** out_json) {
    return guarded([&]() -> glr_status {
        require(ring);
        if (!out_json) throw glr::Error(glr::ErrorCode::InvalidArgument, "out pointer is null");
        *out_json = dup_string(glr::ring_summary_json(*ring->ar.ring).dump(2) + "\n");
        return GLR_OK;
    });
}

glr_status glr_report_ideals(const glr_ring* ring, const glr_options* opts, glr_format format,
                             char** out_report) {
    return guarded([&]() -> glr_status {
        require(ring);
        return deliver(glr::report_ideals(ring->ar, config_of(opts), format_of(format)),
                       out_report, nullptr);
    });
}

glr_status glr_report_check(const glr_ring* ring, const char* which, const glr_options* opts,
                            glr_format format, char** out_report, int* out_ok) {
    return guarded([&]() -> glr_status {
        require(ring);
        if (!which) throw glr::Error(glr::ErrorCode::InvalidArgument, "which is null");
        return deliver(glr::report_check(ring->ar, which, config_of(opts), format_of(format)),
                       out_report, out_ok);
    });
}

glr_status glr_report_decompose(const glr_ring* ring, const glr_options* opts, glr_format format,
                                char** out_report, int* out_ok) {
    return guarded([&]() -> glr_status {
        require(ring);
        return deliver(glr::report_decompose(ring->ar, config_of(opts), format_of(format)),
                       out_report, out_ok);
    });
}

glr_status glr_report_mv(const glr_ring* ring, const glr_options* opts, glr_format format,
                         char** out_report, int* out_ok) {
    return guarded([&]() -> glr_status {
        require(ring);
        return deliver(glr::report_mv_of_ring(ring->ar, config_of(opts), format_of(format)),
                       out_report, out_ok);
    });
}

glr_status glr_report_mv_table(const char* mv_json, const glr_options* opts, glr_format format,
                               char** out_report, int* out_ok) {
    return guarded([&]() -> glr_status {
        if (!mv_json) throw glr::Error(glr::ErrorCode::InvalidArgument, "mv_json is null");
        nlohmann::json j = nlohmann::json::parse(mv_json, nullptr, false);
        if (j.is_discarded())
            throw glr::Error(glr::ErrorCode::ParseError, "invalid MV table JSON", 0);
        glr::MVTable t = glr::mv_table_from_json(j);
        return deliver(glr::report_mv_table(t, config_of(opts), format_of(format)), out_report,
                       out_ok);
    });
}

glr_status glr_report_semiring(const glr_ring* ring, const glr_options* opts, glr_format format,
                               char** out_report, int* out_ok) {
    return guarded([&]() -> glr_status {
        require(ring);
        return deliver(glr::report_semiring(ring->ar, config_of(opts), format_of(format)),
                       out_report, out_ok);
    });
}

glr_status glr_report_corpus(const glr_options* opts, glr_format format, char** out_report,
                             int* out_ok) {
    return guarded([&]() -> glr_status {
        return deliver(glr::report_corpus(config_of(opts), format_of(format)), out_report,
                       out_ok);
    });
}

void glr_string_free(char* s) { std::free(s); }

} // extern "C"
