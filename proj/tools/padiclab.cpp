#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "padic/counting.hpp"
#include "padic/lifting.hpp"
#include "padic/montecarlo.hpp"
#include "padic/poly.hpp"
#include "padic/reports.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;  // mathematical negative: not coprime
constexpr int kExitBudget = 3;

// Relative output paths resolve against PADICLAB_OUTDIR when it is set.
std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("PADICLAB_OUTDIR")) {
            return std::filesystem::path(dir) / p;
        }
    }
    return p;
}

void emit(const std::string& body, const std::string& output) {
    if (output.empty()) {
        std::cout << body;
        return;
    }
    const auto path = resolve_output(output);
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open output file " + path.string());
    file << body;
}

padic::ResiduePoly parse_or_die(const std::string& text, std::uint64_t p, unsigned k,
                                const char* name) {
    try {
        return padic::parse_poly(text, p, k);
    } catch (const padic::PolyParseError& e) {
        std::cerr << "error: " << name << ": " << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

std::uint64_t seed_or_generate(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    std::random_device rd;
    std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "note: no --seed given, generated seed " << s << "\n";
    return s;
}

struct CommonOpts {
    std::uint64_t p = 3;
    unsigned k = 1;
    std::string format = "csv";
    std::string output;
    unsigned workers = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_workers) {
    cmd->add_option("-p,--prime", opts.p, "prime p")->required();
    cmd->add_option("-k,--precision", opts.k, "working precision k")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", opts.output, "output file (default stdout)");
    if (with_workers) {
        cmd->add_option("--workers", opts.workers, "worker threads (never changes the numbers)")
            ->check(CLI::PositiveNumber);
    }
}

std::string count_body(const std::vector<padic::CountReport>& rows, const std::string& format) {
    if (format == "json") return padic::count_json_report(rows).dump(2) + "\n";
    std::string body = padic::count_csv_header() + "\n";
    for (const auto& r : rows) body += padic::count_csv_row(r) + "\n";
    return body;
}

std::string estimate_body(const padic::EstimateReport& row, const std::string& format) {
    if (format == "json") return padic::estimate_json_report({row}).dump(2) + "\n";
    return padic::estimate_csv_header() + "\n" + padic::estimate_csv_row(row) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial algebra over truncated p-adic integers: Bezout lifting, "
                 "separability and coprimality predicates, exact counts, Monte Carlo estimates"};
    app.set_config("--config", "", "config file with key=value lines mirroring the flags");
    app.require_subcommand(1);

    // ---- lift ----------------------------------------------------------
    std::string lift_f, lift_g;
    CommonOpts lift_opts;
    bool lift_trace = false;
    auto* lift = app.add_subcommand("lift", "compute a Bezout certificate r*f + s*g = 1 mod p^k");
    lift->add_option("f", lift_f, "first monic polynomial, e.g. \"17 + 23*x + x^2\"")->required();
    lift->add_option("g", lift_g, "second monic polynomial")->required();
    add_common(lift, lift_opts, false);
    lift->add_flag("--trace", lift_trace, "print the full lifting trace");

    // ---- count ---------------------------------------------------------
    std::string count_property;
    CommonOpts count_opts;
    unsigned count_d = 2, count_e = 1, count_m = 1;
    std::uint64_t count_budget = 100000000ULL;
    auto* count = app.add_subcommand("count", "exact exhaustive counts over (Z/p^kZ)[x]");
    count->add_option("property", count_property, "separable | strongly-coprime | relatively-prime")
        ->required()
        ->check(CLI::IsMember({"separable", "strongly-coprime", "relatively-prime"}));
    add_common(count, count_opts, true);
    count->add_option("-d,--degree", count_d, "degree of f");
    count->add_option("-e,--degree2", count_e, "degree of g (strongly-coprime)");
    count->add_option("-m,--degree-m", count_m, "degree of f (relatively-prime; g has degree 2)");
    count->add_option("--budget", count_budget, "max enumeration tests");

    // ---- estimate ------------------------------------------------------
    std::string est_property;
    CommonOpts est_opts;
    unsigned est_d = 2, est_e = 1, est_m = 1;
    std::uint64_t est_n = 10000;
    std::optional<std::uint64_t> est_seed;
    std::uint64_t est_budget = 100000000ULL;
    auto* estimate = app.add_subcommand("estimate", "seeded Monte Carlo probability estimates");
    estimate
        ->add_option("property", est_property, "separable | strongly-coprime | relatively-prime")
        ->required()
        ->check(CLI::IsMember({"separable", "strongly-coprime", "relatively-prime"}));
    add_common(estimate, est_opts, true);
    estimate->add_option("-d,--degree", est_d, "degree of f");
    estimate->add_option("-e,--degree2", est_e, "degree of g (strongly-coprime)");
    estimate->add_option("-m,--degree-m", est_m, "degree of f (relatively-prime)");
    estimate->add_option("-N,--samples", est_n, "sample count")->check(CLI::PositiveNumber);
    estimate->add_option("--seed", est_seed, "RNG seed (generated and printed when omitted)");
    estimate->add_option("--budget", est_budget, "max enumeration tests (relatively-prime)");

    // ---- check ---------------------------------------------------------
    std::string check_property, check_f, check_g;
    CommonOpts check_opts;
    std::string check_method = "discriminant";
    auto* check = app.add_subcommand("check", "separability / strong-coprimality verdicts");
    check->add_option("property", check_property, "separable | strongly-coprime")
        ->required()
        ->check(CLI::IsMember({"separable", "strongly-coprime"}));
    check->add_option("f", check_f, "monic polynomial")->required();
    check->add_option("g", check_g, "second monic polynomial (strongly-coprime only)");
    add_common(check, check_opts, false);
    check->add_option("--method", check_method, "separable: bezout | discriminant")
        ->check(CLI::IsMember({"bezout", "discriminant"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (lift->parsed()) {
            const auto f = parse_or_die(lift_f, lift_opts.p, lift_opts.k, "f");
            const auto g = parse_or_die(lift_g, lift_opts.p, lift_opts.k, "g");
            padic::BezoutOutcome outcome = padic::bezout_certificate(f, g, lift_opts.k);
            if (!outcome.coprime()) {
                std::cerr << "not strongly coprime: gcd(f mod " << lift_opts.p << ", g mod "
                          << lift_opts.p << ") = " << padic::to_string(*outcome.common_factor)
                          << "\n";
                return kExitNegative;
            }
            std::string body;
            body += "r = " + padic::to_string(outcome.certificate->r) + "\n";
            body += "s = " + padic::to_string(outcome.certificate->s) + "\n";
            if (lift_trace) body += padic::trace_json(outcome.trace).dump(2) + "\n";
            emit(body, lift_opts.output);
            return kExitOk;
        }

        if (count->parsed()) {
            padic::EnumerationBudget budget;
            budget.limit = count_budget;
            std::string body;
            if (count_property == "separable") {
                auto r = padic::count_separable(count_opts.p, count_opts.k, count_d, budget,
                                                count_opts.workers);
                body = count_body({r}, count_opts.format);
            } else if (count_property == "strongly-coprime") {
                auto r = padic::count_strongly_coprime_pairs(count_opts.p, count_opts.k, count_d,
                                                             count_e, budget, count_opts.workers);
                body = count_body({r}, count_opts.format);
            } else {
                auto r = padic::hh_defect(count_opts.p, count_opts.k, count_m, budget,
                                          count_opts.workers);
                if (count_opts.format == "json") {
                    auto doc = padic::count_json_report({r.count});
                    doc["defect"] = padic::defect_json(r);
                    body = doc.dump(2) + "\n";
                } else {
                    body = count_body({r.count}, count_opts.format);
                    body += padic::defect_text(r) + "\n";
                }
            }
            emit(body, count_opts.output);
            return kExitOk;
        }

        if (estimate->parsed()) {
            const std::uint64_t seed = seed_or_generate(est_seed);
            padic::EstimateReport report;
            if (est_property == "separable") {
                report = padic::estimate_separable_probability(est_opts.p, est_d, est_n, seed,
                                                               est_opts.workers);
            } else if (est_property == "strongly-coprime") {
                report = padic::estimate_strongly_coprime_probability(
                    est_opts.p, est_d, est_e, est_n, seed, est_opts.workers);
            } else {
                padic::EnumerationBudget budget;
                budget.limit = est_budget;
                report = padic::estimate_relatively_prime_probability(
                    est_opts.p, est_m, est_opts.k, est_n, seed, budget, est_opts.workers);
            }
            emit(estimate_body(report, est_opts.format), est_opts.output);
            return kExitOk;
        }

        if (check->parsed()) {
            const auto f = parse_or_die(check_f, check_opts.p, check_opts.k, "f");
            std::string body;
            if (check_property == "separable") {
                const auto method = check_method == "bezout"
                                        ? padic::SeparabilityMethod::bezout
                                        : padic::SeparabilityMethod::discriminant;
                const bool verdict = padic::is_separable_monic(f, method);
                body += std::string("separable: ") + (verdict ? "true" : "false") + "\n";
                const auto f1 = f.reduce_precision(1);
                if (check_method == "discriminant" || f1.degree() < 2) {
                    const auto disc = f1.degree() >= 2
                                          ? padic::discriminant_prime_field(f1)
                                          : padic::PadicInt::one(check_opts.p, 1);
                    body += "disc mod " + std::to_string(check_opts.p) + " = " + disc.str() + "\n";
                } else {
                    auto outcome = padic::bezout_base(f1, padic::derivative(f1));
                    if (outcome.coprime()) {
                        body += "certificate: r = " + padic::to_string(outcome.certificate->r) +
                                ", s = " + padic::to_string(outcome.certificate->s) + "\n";
                    } else {
                        body += "gcd(f, f') = " + padic::to_string(*outcome.common_factor) + "\n";
                    }
                }
            } else {
                if (check_g.empty()) {
                    std::cerr << "error: strongly-coprime check needs two polynomials\n";
                    return kExitUsage;
                }
                const auto g = parse_or_die(check_g, check_opts.p, check_opts.k, "g");
                auto outcome = padic::bezout_certificate(f, g, check_opts.k);
                body += std::string("strongly_coprime: ") +
                        (outcome.coprime() ? "true" : "false") + "\n";
                if (outcome.coprime()) {
                    body += "certificate: r = " + padic::to_string(outcome.certificate->r) +
                            ", s = " + padic::to_string(outcome.certificate->s) + "\n";
                } else {
                    body += "common factor mod " + std::to_string(check_opts.p) + ": " +
                            padic::to_string(*outcome.common_factor) + "\n";
                }
            }
            emit(body, check_opts.output);
            return kExitOk;
        }
    } catch (const padic::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --budget to at least "
                  << e.required.get_str() << ")\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
