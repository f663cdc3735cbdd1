#include "padic/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "padic/lifting.hpp"

namespace padic {

namespace {

// Per-sample streams make the tally independent of the partitioning.
std::uint64_t parallel_hits(std::uint64_t n, unsigned workers,
                            const std::function<bool(std::uint64_t)>& sample_hit) {
    workers = std::max(1u, workers);
    auto run = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            if (sample_hit(i)) ++hits;
        }
        return hits;
    };
    if (workers == 1 || n < 2 * workers) return run(0, n);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&partial, &run, w, begin, end] { partial[w] = run(begin, end); });
    }
    for (auto& t : threads) t.join();
    std::uint64_t sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

void require_samples(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("sample count N must be >= 1");
}

}  // namespace

double EstimateReport::standard_error() const {
    const double est = estimate();
    return std::sqrt(est * (1.0 - est) / static_cast<double>(sample_count));
}

double EstimateReport::ci_low() const {
    return std::max(0.0, estimate() - 1.96 * standard_error());
}

double EstimateReport::ci_high() const {
    return std::min(1.0, estimate() + 1.96 * standard_error());
}

ResiduePoly sample_monic(std::uint64_t p, unsigned d, unsigned k, SampleRng& rng) {
    if (d < 1 || k < 1) throw std::invalid_argument("sample_monic requires d >= 1 and k >= 1");
    std::vector<mpz_class> coeffs(d + 1);
    for (unsigned j = 0; j < d; ++j) {
        // independent uniform digits, least significant first
        mpz_class c = 0;
        mpz_class power = 1;
        for (unsigned i = 0; i < k; ++i) {
            c += power * static_cast<unsigned long>(rng.next_below(p));
            power *= static_cast<unsigned long>(p);
        }
        coeffs[j] = std::move(c);
    }
    coeffs[d] = 1;
    return ResiduePoly(p, k, std::move(coeffs));
}

EstimateReport estimate_separable_probability(std::uint64_t p, unsigned d, std::uint64_t n,
                                              std::uint64_t seed, unsigned workers) {
    if (d < 2) throw std::invalid_argument("separability estimates require d >= 2");
    require_samples(n);
    EstimateReport report;
    report.property_name = "separable";
    report.p = p;
    report.k = 1;
    report.degrees = {d};
    report.sample_count = n;
    report.seed = seed;
    report.theoretical = mpq_class(static_cast<unsigned long>(p - 1), static_cast<unsigned long>(p));
    report.hits = parallel_hits(n, workers, [&](std::uint64_t i) {
        SampleRng rng(seed, i);
        return is_separable_monic(sample_monic(p, d, 1, rng), SeparabilityMethod::bezout);
    });
    return report;
}

EstimateReport estimate_strongly_coprime_probability(std::uint64_t p, unsigned d, unsigned e,
                                                     std::uint64_t n, std::uint64_t seed,
                                                     unsigned workers) {
    if (d < 1 || e < 1) throw std::invalid_argument("degrees must be >= 1");
    require_samples(n);
    EstimateReport report;
    report.property_name = "strongly_coprime";
    report.p = p;
    report.k = 1;
    report.degrees = {d, e};
    report.sample_count = n;
    report.seed = seed;
    report.theoretical = mpq_class(static_cast<unsigned long>(p - 1), static_cast<unsigned long>(p));
    report.hits = parallel_hits(n, workers, [&](std::uint64_t i) {
        SampleRng rng(seed, i);
        ResiduePoly f = sample_monic(p, d, 1, rng);
        ResiduePoly g = sample_monic(p, e, 1, rng);
        return is_strongly_coprime(f, g);
    });
    return report;
}

EstimateReport estimate_relatively_prime_probability(std::uint64_t p, unsigned m, unsigned k,
                                                     std::uint64_t n, std::uint64_t seed,
                                                     EnumerationBudget& budget, unsigned workers) {
    if (p % 2 == 0) throw std::invalid_argument("p must be odd");
    if (m < 1 || k < 1) throw std::invalid_argument("m and k must be >= 1");
    require_samples(n);

    // Charge the whole run's coprimality tests up front; the per-sample
    // tests then draw on a private, already-approved budget.
    const mpz_class per_sample(static_cast<unsigned long>(std::min(m, 2u)));
    budget.charge(per_sample * static_cast<unsigned long>(n));

    EstimateReport report;
    report.property_name = "relatively_prime";
    report.p = p;
    report.k = k;
    report.degrees = {m, 2};
    report.sample_count = n;
    report.seed = seed;
    report.theoretical = mpq_class(1);
    report.lower_bound = true;
    report.hits = parallel_hits(n, workers, [&](std::uint64_t i) {
        SampleRng rng(seed, i);
        ResiduePoly f = sample_monic(p, m, k, rng);
        ResiduePoly g = sample_monic(p, 2, k, rng);
        EnumerationBudget local;  // charged globally above
        return is_relatively_prime_residue(f, g, local);
    });
    return report;
}

}  // namespace padic
