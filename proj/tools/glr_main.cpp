// Command-line front end for the ring workbench.  Talks to the shared
// library exclusively through the C API in glr/glr.h.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "glr/glr.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitError = 2;

struct CommonArgs {
    std::string format = "json";
    std::string out;
    std::string config_file;
    std::uint32_t max_elements = 4096;
    std::uint32_t max_ideals = 1u << 16;
    std::uint32_t max_semiring_ideals = 1u << 16;
    std::uint32_t jobs = 1;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "Report format: json, text or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    cmd->add_option("--out", args.out, "Write the report to this file instead of stdout");
    cmd->add_option("--config", args.config_file, "JSON config file with cap defaults");
    cmd->add_option("--max-elements", args.max_elements, "Element cap for ring construction");
    cmd->add_option("--max-ideals", args.max_ideals, "Ideal enumeration cap");
    cmd->add_option("--max-semiring-ideals", args.max_semiring_ideals,
                    "Semiring ideal enumeration cap");
    cmd->add_option("--jobs", args.jobs, "Worker threads for corpus runs");
    cmd->add_option("--seed", args.seed, "Seed for sampled distributivity families");
}

// Precedence for each cap: explicit flag, then (for the element cap) the
// GLR_MAX_ELEMENTS environment variable, then the config file, then the
// built-in default.
glr_options* resolve_options(const CLI::App* cmd, const CommonArgs& args) {
    glr_options* opts = glr_options_new();
    std::optional<std::uint32_t> cfg_max_elements, cfg_max_ideals, cfg_max_semiring;
    std::optional<std::uint32_t> cfg_jobs;
    std::optional<std::uint64_t> cfg_seed;
    if (!args.config_file.empty()) {
        std::ifstream in(args.config_file);
        if (!in) {
            glr_options_free(opts);
            throw std::runtime_error("cannot open config file: " + args.config_file);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        nlohmann::json j = nlohmann::json::parse(buf.str(), nullptr, false);
        if (j.is_discarded()) {
            glr_options_free(opts);
            throw std::runtime_error("invalid JSON in config file: " + args.config_file);
        }
        if (j.contains("max_elements")) cfg_max_elements = j["max_elements"].get<std::uint32_t>();
        if (j.contains("max_ideals")) cfg_max_ideals = j["max_ideals"].get<std::uint32_t>();
        if (j.contains("max_semiring_ideals"))
            cfg_max_semiring = j["max_semiring_ideals"].get<std::uint32_t>();
        if (j.contains("jobs")) cfg_jobs = j["jobs"].get<std::uint32_t>();
        if (j.contains("seed")) cfg_seed = j["seed"].get<std::uint64_t>();
    }

    std::uint32_t max_elements = args.max_elements;
    if (cmd->count("--max-elements") == 0) {
        if (const char* env = std::getenv("GLR_MAX_ELEMENTS")) {
            max_elements = std::uint32_t(std::strtoul(env, nullptr, 10));
        } else if (cfg_max_elements) {
            max_elements = *cfg_max_elements;
        }
    }
    std::uint32_t max_ideals = args.max_ideals;
    if (cmd->count("--max-ideals") == 0 && cfg_max_ideals) max_ideals = *cfg_max_ideals;
    std::uint32_t max_semiring = args.max_semiring_ideals;
    if (cmd->count("--max-semiring-ideals") == 0 && cfg_max_semiring)
        max_semiring = *cfg_max_semiring;
    std::uint32_t jobs = args.jobs;
    if (cmd->count("--jobs") == 0 && cfg_jobs) jobs = *cfg_jobs;
    std::uint64_t seed = args.seed;
    if (cmd->count("--seed") == 0 && cfg_seed) seed = *cfg_seed;

    glr_options_set_max_elements(opts, max_elements);
    glr_options_set_max_ideals(opts, max_ideals);
    glr_options_set_max_semiring_ideals(opts, max_semiring);
    glr_options_set_jobs(opts, jobs);
    glr_options_set_seed(opts, seed);
    return opts;
}

glr_format format_of(const std::string& f) {
    if (f == "text") return GLR_FORMAT_TEXT;
    if (f == "dot") return GLR_FORMAT_DOT;
    return GLR_FORMAT_JSON;
}

int emit(const CommonArgs& args, const char* report) {
    if (args.out.empty()) {
        std::cout << report;
        return kExitOk;
    }
    std::ofstream out(args.out, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << args.out << "\n";
        return kExitError;
    }
    out << report;
    return kExitOk;
}

int fail_with_status(glr_status status) {
    std::cerr << "error: " << glr_last_error();
    if (glr_last_error_offset() >= 0) std::cerr << " (offset " << glr_last_error_offset() << ")";
    std::cerr << "\n";
    return status == GLR_E_CHECK_FAILED ? kExitPropertyFailed : kExitError;
}

struct RingHandle {
    glr_ring* ring = nullptr;
    ~RingHandle() { glr_ring_free(ring); }
};

struct OptionsHandle {
    glr_options* opts = nullptr;
    ~OptionsHandle() { glr_options_free(opts); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { glr_string_free(s); }
};

int run_ring_report(const CLI::App* cmd, const CommonArgs& args, const std::string& spec,
                    const std::string& which) {
    OptionsHandle opts{resolve_options(cmd, args)};
    RingHandle ring;
    glr_status status = glr_ring_parse(spec.c_str(), opts.opts, &ring.ring);
    if (status != GLR_OK) return fail_with_status(status);

    StringHandle report;
    int ok = 1;
    if (which == "ideals") {
        status = glr_report_ideals(ring.ring, opts.opts, format_of(args.format), &report.s);
    } else if (which == "decompose") {
        status = glr_report_decompose(ring.ring, opts.opts, format_of(args.format), &report.s, &ok);
    } else if (which == "mv") {
        status = glr_report_mv(ring.ring, opts.opts, format_of(args.format), &report.s, &ok);
    } else if (which == "semiring") {
        status = glr_report_semiring(ring.ring, opts.opts, format_of(args.format), &report.s, &ok);
    } else {
        status = glr_report_check(ring.ring, which.c_str(), opts.opts, format_of(args.format),
                                  &report.s, &ok);
    }
    if (status != GLR_OK) return fail_with_status(status);
    int emit_rc = emit(args, report.s);
    if (emit_rc != kExitOk) return emit_rc;
    return ok ? kExitOk : kExitPropertyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring ideal workbench (version " + std::string(glr_version()) + ")"};
    app.require_subcommand(1);

    std::string spec, which = "all", mv_table_file;

    CommonArgs ideals_args, check_args, dec_args, mv_args, semi_args, corpus_args;

    CLI::App* cmd_ideals = app.add_subcommand("ideals", "Enumerate the two-sided ideal lattice");
    cmd_ideals->add_option("spec", spec, "Ring spec, e.g. \"Z12\" or \"M2(GF(2)[x]/(x^2))\"")
        ->required();
    add_common(cmd_ideals, ideals_args);

    CLI::App* cmd_check = app.add_subcommand("check", "Run classification checks");
    cmd_check->add_option("spec", spec, "Ring spec")->required();
    cmd_check->add_option("--which", which, "glr, spir, axioms, duality or all")
        ->check(CLI::IsMember({"glr", "spir", "axioms", "duality", "all"}));
    add_common(cmd_check, check_args);

    CLI::App* cmd_dec = app.add_subcommand("decompose", "Decompose into unitary special primary rings");
    cmd_dec->add_option("spec", spec, "Ring spec")->required();
    add_common(cmd_dec, dec_args);

    CLI::App* cmd_mv = app.add_subcommand("mv", "The MV-algebra of ideals, or a user-supplied table");
    cmd_mv->add_option("spec", spec, "Ring spec");
    cmd_mv->add_option("--table", mv_table_file, "Check an MV table loaded from a JSON file");
    add_common(cmd_mv, mv_args);

    CLI::App* cmd_semi = app.add_subcommand("semiring", "The ideal semiring with its axiom report");
    cmd_semi->add_option("spec", spec, "Ring spec")->required();
    add_common(cmd_semi, semi_args);

    CLI::App* cmd_corpus = app.add_subcommand("corpus", "Run the full corpus property suite");
    add_common(cmd_corpus, corpus_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    }

    try {
        if (cmd_ideals->parsed()) return run_ring_report(cmd_ideals, ideals_args, spec, "ideals");
        if (cmd_check->parsed()) return run_ring_report(cmd_check, check_args, spec, which);
        if (cmd_dec->parsed()) return run_ring_report(cmd_dec, dec_args, spec, "decompose");
        if (cmd_semi->parsed()) return run_ring_report(cmd_semi, semi_args, spec, "semiring");
        if (cmd_mv->parsed()) {
            if (!mv_table_file.empty()) {
                std::ifstream in(mv_table_file);
                if (!in) {
                    std::cerr << "error: cannot open " << mv_table_file << "\n";
                    return kExitError;
                }
                std::stringstream buf;
                buf << in.rdbuf();
                OptionsHandle opts{resolve_options(cmd_mv, mv_args)};
                StringHandle report;
                int ok = 1;
                glr_status status = glr_report_mv_table(buf.str().c_str(), opts.opts,
                                                        format_of(mv_args.format), &report.s, &ok);
                if (status != GLR_OK) return fail_with_status(status);
                int rc = emit(mv_args, report.s);
                if (rc != kExitOk) return rc;
                return ok ? kExitOk : kExitPropertyFailed;
            }
            if (spec.empty()) {
                std::cerr << "error: mv needs a ring spec or --table\n";
                return kExitError;
            }
            return run_ring_report(cmd_mv, mv_args, spec, "mv");
        }
        if (cmd_corpus->parsed()) {
            OptionsHandle opts{resolve_options(cmd_corpus, corpus_args)};
            StringHandle report;
            int ok = 1;
            glr_status status =
                glr_report_corpus(opts.opts, format_of(corpus_args.format), &report.s, &ok);
            if (status != GLR_OK) return fail_with_status(status);
            int rc = emit(corpus_args, report.s);
            if (rc != kExitOk) return rc;
            return ok ? kExitOk : kExitPropertyFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
