#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padic/counting.hpp"
#include "padic/poly.hpp"
#include "padic/rng.hpp"

namespace padic {

class SampleRng;

struct EstimateReport {
    std::string property_name;
    std::uint64_t p = 0;
    unsigned k = 0;
    std::vector<unsigned> degrees;
    std::uint64_t sample_count = 0;
    std::uint64_t hits = 0;
    std::uint64_t seed = 0;
    std::optional<mpq_class> theoretical;
    bool lower_bound = false;  // set for the relative-primality estimator

    double estimate() const {
        return static_cast<double>(hits) / static_cast<double>(sample_count);
    }
    double standard_error() const;
    double ci_low() const;   // est - 1.96*se, clamped to [0, 1]
    double ci_high() const;  // est + 1.96*se, clamped to [0, 1]
};

/// Monic degree-d polynomial with independent uniform digits per coefficient;
/// the pushforward of Haar measure to Z/p^kZ.
ResiduePoly sample_monic(std::uint64_t p, unsigned d, unsigned k, SampleRng& rng);

/// Sampled at k = 1: separability only depends on the mod-p reduction.
EstimateReport estimate_separable_probability(std::uint64_t p, unsigned d, std::uint64_t n,
                                              std::uint64_t seed, unsigned workers = 1);

/// Sampled at k = 1 for the same reason.
EstimateReport estimate_strongly_coprime_probability(std::uint64_t p, unsigned d, unsigned e,
                                                     std::uint64_t n, std::uint64_t seed,
                                                     unsigned workers = 1);

/// Works at the requested finite precision k and is a LOWER BOUND on the
/// p-adic probability: a pair that fails mod p^k may still be relatively
/// prime over the full ring. Requires odd p.
EstimateReport estimate_relatively_prime_probability(std::uint64_t p, unsigned m, unsigned k,
                                                     std::uint64_t n, std::uint64_t seed,
                                                     EnumerationBudget& budget,
                                                     unsigned workers = 1);

}  // namespace padic
