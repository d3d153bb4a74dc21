#pragma once

// Command-line driver. Every command writes to caller-supplied streams and
// returns its exit code, so the whole surface is testable in-process.
//
// Exit codes: 0 success, 1 unexpected failure, 2 domain or usage error,
// 3 verification mismatch, 4 counting budget exceeded.

#include "ehrkit/combinatorics.hpp"
#include "ehrkit/ehrhart.hpp"
#include "ehrkit/io.hpp"
#include "ehrkit/lattice.hpp"
#include "ehrkit/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace ehrkit {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int domain = 2;
inline constexpr int mismatch = 3;
inline constexpr int budget = 4;
} // namespace exit_code

struct RunConfig {
    unsigned max_n = 6;
    std::uint64_t budget = 1'000'000'000;
    unsigned jobs = 1;
    OutputFormat format = OutputFormat::json;

    CountOptions counting() const { return {budget, jobs}; }
};

inline int cmd_ehrhart(Family family, unsigned k, unsigned n, bool verify, const std::vector<unsigned>& evaluations,
                       const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        MemoTable memo;
        OutputRecord record = make_record(family, k, n, memo);
        const Polynomial closed(record.coefficients);
        if (!evaluations.empty()) {
            record.evaluations.emplace();
            for (unsigned t : evaluations) {
                const Rational value = closed(t);
                // closed forms are integer-valued; anything else is a bug worth surfacing
                if (!is_integer(value)) {
                    err << "error: non-integral value " << to_string(value) << " at t=" << t << '\n';
                    return exit_code::failure;
                }
                record.evaluations->push_back({t, numerator(value)});
            }
        }
        if (verify) {
            const Polynomial oracle = oracle_ehrhart(build_polytope(family, k, n), record.dim, config.counting());
            record.verified = oracle == closed;
            if (!*record.verified) {
                err << "mismatch: brute-force interpolation gives " << to_string(oracle) << '\n';
            }
        }
        switch (config.format) {
        case OutputFormat::json: out << to_json(record).dump(2) << '\n'; break;
        case OutputFormat::csv: write_csv_header(out); write_csv_rows(out, record); break;
        case OutputFormat::plain: write_plain(out, record); break;
        }
        return record.verified.value_or(true) ? exit_code::ok : exit_code::mismatch;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::domain;
    } catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_code::budget;
    }
}

inline int cmd_lah(long l, unsigned n, unsigned m, std::ostream& out) {
    out << weighted_lah(l, n, m).str() << '\n';
    return exit_code::ok;
}

inline int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    VerifyConfig verify_config;
    verify_config.max_n = config.max_n;
    verify_config.counting = config.counting();
    Verifier verifier(verify_config);
    out << "verify: max_n=" << config.max_n << " budget=" << config.budget << '\n';
    try {
        std::size_t failed = 0;
        const auto results = verifier.run_all([&](const CheckOutcome& c) {
            print_outcome(out, c);
            if (!c.passed) ++failed;
        });
        if (failed == 0) {
            out << "all " << results.size() << " checks passed\n";
            return exit_code::ok;
        }
        out << failed << " of " << results.size() << " checks FAILED\n";
        return exit_code::mismatch;
    } catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exit_code::budget;
    } catch (const scale_guard_error& e) {
        err << "scale guard: " << e.what() << '\n';
        return exit_code::failure;
    }
}

/// Smallest n admitting some valid k for the family.
inline unsigned min_n(Family family) { return family == Family::independence ? 1 : 2; }

inline int cmd_table(Family family, unsigned n_max, const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        MemoTable memo;
        std::vector<OutputRecord> records;
        for (unsigned n = min_n(family); n <= n_max; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                if (is_valid(family, k, n)) records.push_back(make_record(family, k, n, memo));
            }
        }
        write_records(out, records, config.format);
        return exit_code::ok;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::domain;
    }
}

/// Parses argv and dispatches. Flags fall back to EHRKIT_BUDGET,
/// EHRKIT_MAX_N and EHRKIT_JOBS.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Ehrhart polynomials of hypersimplices, half-open hypersimplices and "
                 "independence polytopes of uniform matroids"};
    app.require_subcommand(1);

    RunConfig config;
    config.jobs = std::max(1U, std::thread::hardware_concurrency());
    std::string family_text;
    std::string format_text = "json";
    unsigned k = 0;
    unsigned n = 0;
    unsigned n_max = 0;
    unsigned m = 0;
    long l = 0;
    bool verify = false;
    std::vector<unsigned> evaluations;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", config.budget, "candidate-point cap for brute-force counting")
            ->envname("EHRKIT_BUDGET")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", config.jobs, "worker threads for brute-force counting")
            ->envname("EHRKIT_JOBS")
            ->check(CLI::PositiveNumber);
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_text, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    };

    auto* ehrhart = app.add_subcommand("ehrhart", "closed-form Ehrhart polynomial of one polytope");
    ehrhart->add_option("family", family_text, "hypersimplex | half-open | independence")->required();
    ehrhart->add_option("k", k)->required();
    ehrhart->add_option("n", n)->required();
    ehrhart->add_flag("--verify", verify, "check against brute-force counting and interpolation");
    ehrhart->add_option("--eval", evaluations, "evaluate at t (repeatable)")->allow_extra_args(false);
    add_format(ehrhart);
    add_budget(ehrhart);

    auto* lah = app.add_subcommand("lah", "weighted Lah number W(l, n, m)");
    lah->add_option("l", l)->required();
    lah->add_option("n", n)->required();
    lah->add_option("m", m)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run every invariant check");
    verify_cmd->add_option("--max-n", config.max_n, "largest n exercised")->envname("EHRKIT_MAX_N");
    add_budget(verify_cmd);

    auto* table = app.add_subcommand("table", "closed forms for every valid (k, n) with n <= n_max");
    table->add_option("family", family_text, "hypersimplex | half-open | independence")->required();
    table->add_option("n_max", n_max)->required();
    add_format(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::domain;
    }

    try {
        config.format = parse_output_format(format_text);
        if (*ehrhart) {
            return cmd_ehrhart(parse_family(family_text), k, n, verify, evaluations, config, out, err);
        }
        if (*lah) {
            return cmd_lah(l, n, m, out);
        }
        if (*verify_cmd) {
            return cmd_verify(config, out, err);
        }
        if (*table) {
            return cmd_table(parse_family(family_text), n_max, config, out, err);
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::failure;
    }
    return exit_code::failure;
}

} // namespace ehrkit
