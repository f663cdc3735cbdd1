// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "padic/counting.hpp"
#include "padic/lifting.hpp"
#include "padic/montecarlo.hpp"
#include "padic/poly.hpp"

using padic::EnumerationBudget;
using padic::ResiduePoly;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << detail
              << "\n";
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ResiduePoly rp(std::uint64_t p, unsigned k, std::vector<long> coeffs) {
    return ResiduePoly::from_ints(p, k, coeffs);
}

ResiduePoly random_monic(std::uint64_t p, unsigned k, unsigned deg, std::mt19937_64& gen) {
    const unsigned long mod = padic::prime_power(p, k).get_ui();
    std::uniform_int_distribution<unsigned long> dist(0, mod - 1);
    std::vector<mpz_class> coeffs(deg + 1);
    for (unsigned i = 0; i < deg; ++i) coeffs[i] = dist(gen);
    coeffs[deg] = 1;
    return ResiduePoly(p, k, std::move(coeffs));
}

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PADICLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// --- criteria ----------------------------------------------------------

void criterion_1_worked_example() {
    const ResiduePoly f = rp(5, 2, {17, 23, 1});
    const ResiduePoly g = rp(5, 2, {14, 1});
    const auto start = std::chrono::steady_clock::now();
    auto out = padic::bezout_certificate(f, g, 2);
    const double elapsed = seconds_since(start);

    bool pass = out.coprime();
    pass = pass && out.certificate->r == rp(5, 2, {11});
    pass = pass && out.certificate->s == rp(5, 2, {1, 14});
    pass = pass && out.trace.steps.size() == 2;
    if (pass) {
        const auto& step = out.trace.steps[1];
        // Q_0 is determined mod 5; the displayed digits x^2 + 6x + 21 reduce
        // to the recorded polynomial.
        pass = pass && step.q_correction == rp(5, 1, {21, 6, 1});
        pass = pass && step.alpha == rp(5, 2, {21, 20, 20});
        pass = pass && step.beta == rp(5, 2, {21, 4, 0, 5});
    }
    pass = pass && elapsed < 0.010;
    std::ostringstream d;
    d << "worked-example golden lift (r=11, s=14x+1, trace intermediates), "
      << std::fixed << elapsed * 1000 << " ms";
    report(1, pass, d.str());
}

void criterion_2_separable_counts() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream bad;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (unsigned k = 1; k <= 2; ++k) {
            for (unsigned d = 2; d <= 3; ++d) {
                if (padic::monic_family_size(p, k, d) > 1000000) continue;
                EnumerationBudget budget;
                auto r = padic::count_separable(p, k, d, budget, 4);
                if (!r.matches_prediction()) {
                    pass = false;
                    bad << " (p=" << p << ",k=" << k << ",d=" << d << ")";
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 60.0;
    std::ostringstream d;
    d << "separable counts equal p^{dk}-p^{dk-1} on the full grid, " << std::fixed << elapsed
      << " s" << bad.str();
    report(2, pass, d.str());
}

void criterion_3_strongly_coprime_counts() {
    bool pass = true;
    std::ostringstream bad;
    const std::array<std::pair<unsigned, unsigned>, 3> degree_pairs{{{1, 1}, {2, 1}, {2, 2}}};
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (unsigned k = 1; k <= 2; ++k) {
            for (auto [d, e] : degree_pairs) {
                if (padic::prime_power(p, k * (d + e)) > 1000000) continue;
                EnumerationBudget budget;
                auto r = padic::count_strongly_coprime_pairs(p, k, d, e, budget, 4);
                if (!r.matches_prediction()) {
                    pass = false;
                    bad << " (p=" << p << ",k=" << k << ",d=" << d << ",e=" << e << ")";
                }
            }
        }
    }
    report(3, pass, "strongly coprime pair counts equal p^{k(d+e)}(1-1/p) on the grid" + bad.str());
}

void criterion_4_bezout_soundness_at_scale() {
    std::mt19937_64 gen(20240817);
    int runs = 0;
    bool pass = true;
    while (runs < 1000) {
        ResiduePoly f = random_monic(7, 5, 4, gen);
        ResiduePoly g = random_monic(7, 5, 3, gen);
        if (!padic::is_strongly_coprime(f, g)) continue;
        ++runs;
        auto out = padic::bezout_certificate(f, g, 5);
        if (!out.coprime() || !padic::certificate_is_valid(*out.certificate, f, g) ||
            out.trace.steps.size() != 4) {  // base + ceil(log2 5) = 3 lift steps
            pass = false;
        }
    }
    report(4, pass,
           "1000 random coprime pairs (p=7, deg 4/3, k=5): certificates re-multiply to 1, "
           "degree bounds hold, 3 lift steps");
}

void criterion_5_method_agreement() {
    using padic::SeparabilityMethod;
    bool pass = true;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (unsigned d = 2; d <= 3; ++d) {
            const unsigned long total = padic::prime_power(p, d).get_ui();
            for (unsigned long idx = 0; idx < total; ++idx) {
                ResiduePoly f = padic::monic_from_index(p, 1, d, mpz_class(idx));
                if (padic::is_separable_monic(f, SeparabilityMethod::bezout) !=
                    padic::is_separable_monic(f, SeparabilityMethod::discriminant)) {
                    pass = false;
                }
            }
        }
    }
    std::mt19937_64 gen(99);
    for (int i = 0; i < 10000; ++i) {
        ResiduePoly f = random_monic(7, 1, 5, gen);
        if (padic::is_separable_monic(f, SeparabilityMethod::bezout) !=
            padic::is_separable_monic(f, SeparabilityMethod::discriminant)) {
            pass = false;
        }
    }
    report(5, pass, "discriminant and Bezout separability agree on all exhaustive and random inputs");
}

void criterion_6_montecarlo_separable() {
    const auto start = std::chrono::steady_clock::now();
    auto r = padic::estimate_separable_probability(5, 3, 100000, 20240817, 4);
    const double elapsed = seconds_since(start);
    const double err = std::abs(r.estimate() - 0.8);
    bool pass = err < 0.01 && elapsed < 30.0;
    std::ostringstream d;
    d << "MC separable p=5 d=3 N=1e5: |" << r.estimate() << " - 0.8| = " << err << ", "
      << std::fixed << elapsed << " s";
    report(6, pass, d.str());
}

void criterion_7_montecarlo_strongly_coprime() {
    auto r = padic::estimate_strongly_coprime_probability(3, 2, 2, 100000, 20240817, 4);
    const double err = std::abs(r.estimate() - 2.0 / 3.0);
    std::ostringstream d;
    d << "MC strongly coprime p=3 d=e=2 N=1e5: |" << r.estimate() << " - 2/3| = " << err;
    report(7, err < 0.012, d.str());
}

void criterion_8_convergence_and_containment() {
    bool pass = true;
    mpq_class prev(0);
    mpq_class last(0);
    std::ostringstream ratios;
    for (unsigned k = 1; k <= 3; ++k) {
        const unsigned long nf = padic::prime_power(3, k).get_ui();       // deg-1 family
        const unsigned long ng = padic::prime_power(3, 2 * k).get_ui();   // deg-2 family
        mpz_class favorable = 0;
        for (unsigned long i = 0; i < nf; ++i) {
            ResiduePoly f = padic::monic_from_index(3, k, 1, mpz_class(i));
            for (unsigned long j = 0; j < ng; ++j) {
                ResiduePoly g = padic::monic_from_index(3, k, 2, mpz_class(j));
                EnumerationBudget budget;
                const bool rel = padic::is_relatively_prime_residue(f, g, budget);
                if (rel) ++favorable;
                if (padic::is_strongly_coprime(f, g) && !rel) pass = false;  // containment
            }
        }
        mpq_class ratio(favorable, mpz_class(nf) * ng);
        ratio.canonicalize();
        if (ratio < prev || ratio < mpq_class(2, 3)) pass = false;
        prev = ratio;
        last = ratio;
        ratios << " k=" << k << ":" << ratio.get_d();
    }
    if (last < mpq_class(95, 100)) pass = false;
    report(8, pass,
           "p=3 m=1 relative-primality proportions nondecreasing, >= 2/3, k=3 >= 0.95, "
           "containment holds:" + ratios.str());
}

void criterion_9_defect_bound() {
    bool pass = true;
    std::ostringstream detail;
    for (std::uint64_t p : {3ull, 5ull}) {
        for (unsigned k = 1; k <= 2; ++k) {
            mpq_class first;
            for (unsigned m = 1; m <= 2; ++m) {
                EnumerationBudget budget;
                auto d = padic::hh_defect(p, k, m, budget, 4);
                if (!d.within_bound) pass = false;
                if (m == 1) {
                    first = d.defect;
                } else if (d.defect != first) {
                    pass = false;  // must not depend on m
                }
                if (k == 1 && d.defect != mpq_class(static_cast<unsigned long>(p * p))) {
                    pass = false;  // field case: exactly p^2
                }
            }
            detail << " (p=" << p << ",k=" << k << "):" << first.get_num().get_str();
            if (first.get_den() != 1) detail << "/" << first.get_den().get_str();
        }
    }
    report(9, pass, "defect in the coefficient-bound interval, m-independent, p^2 at k=1:" +
                        detail.str());
}

void criterion_10_cli_determinism() {
    bool pass = true;
    const std::array<std::string, 3> invocations{
        "count separable -p 3 -k 2 -d 2 --format csv",
        "estimate separable -p 3 -d 2 -N 2000 --seed 7 --format json",
        "count relatively-prime -p 3 -k 2 -m 1 --format json",
    };
    for (const auto& args : invocations) {
        auto a = run_cli(args + " --workers 1");
        auto b = run_cli(args + " --workers 1");
        auto c = run_cli(args + " --workers 3");
        if (a.exit_code != 0 || a.output != b.output || a.output != c.output ||
            a.output.empty()) {
            pass = false;
        }
    }
    report(10, pass, "CLI output bodies byte-identical across reruns and --workers variation");
}

}  // namespace

int main() {
    criterion_1_worked_example();
    criterion_2_separable_counts();
    criterion_3_strongly_coprime_counts();
    criterion_4_bezout_soundness_at_scale();
    criterion_5_method_agreement();
    criterion_6_montecarlo_separable();
    criterion_7_montecarlo_strongly_coprime();
    criterion_8_convergence_and_containment();
    criterion_9_defect_bound();
    criterion_10_cli_determinism();
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 criteria passed\n";
    return 0;
}
