#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "padic/poly.hpp"

namespace padic {

/// Raised when an enumeration would exceed the configured budget; carries the
/// number of per-element tests the run would need.
struct BudgetExceeded : std::runtime_error {
    mpz_class required;
    explicit BudgetExceeded(mpz_class req)
        : std::runtime_error("enumeration budget exceeded; required " + req.get_str() +
                             " tests"),
          required(std::move(req)) {}
};

/// Counts per-element tests across one invocation. Charged up front, so a
/// refused run does no partial work.
struct EnumerationBudget {
    mpz_class limit = 100000000;  // 10^8 tests, the default desk-scale cap
    mpz_class used = 0;

    void charge(const mpz_class& amount) {
        if (used + amount > limit) throw BudgetExceeded(amount);
        used += amount;
    }
};

struct CountReport {
    std::string property_name;  // separable | strongly_coprime | relatively_prime
    std::uint64_t p = 0;
    unsigned k = 0;
    std::vector<unsigned> degrees;
    mpz_class favorable;
    mpz_class total;
    std::optional<mpz_class> predicted;

    bool matches_prediction() const { return predicted && favorable == *predicted; }
};

/// Number of monic polynomials of degree d over Z/p^kZ, i.e. p^{kd}.
mpz_class monic_family_size(std::uint64_t p, unsigned k, unsigned d);

/// The index-th monic polynomial of degree d, counting lexicographically in
/// the coefficient tuple (a_0, ..., a_{d-1}) with a_0 most significant.
ResiduePoly monic_from_index(std::uint64_t p, unsigned k, unsigned d, const mpz_class& index);

/// Visits all p^{kd} monic polynomials of degree d in index order. Charges
/// the family size against the budget before any work.
void for_each_monic(std::uint64_t p, unsigned k, unsigned d, EnumerationBudget& budget,
                    const std::function<void(const ResiduePoly&)>& fn);

CountReport count_separable(std::uint64_t p, unsigned k, unsigned d, EnumerationBudget& budget,
                            unsigned workers = 1);

CountReport count_strongly_coprime_pairs(std::uint64_t p, unsigned k, unsigned d, unsigned e,
                                         EnumerationBudget& budget, unsigned workers = 1);

/// True iff the ideal (f, g) contains a nonzero constant, i.e. some
/// combination u*f + v*g is a nonzero element of Z/p^kZ. Over a field (k = 1)
/// this is ordinary coprimality; at higher precision it is strictly weaker
/// than strong coprimality and strictly stronger than having no common monic
/// divisor of positive degree. Decided by a kernel computation over Z/p^kZ
/// in the quotient by the lower-degree input.
bool is_relatively_prime_residue(const ResiduePoly& f, const ResiduePoly& g,
                                 EnumerationBudget& budget);

/// Pairs of monic polynomials of degrees (m, 2); no closed-form prediction.
CountReport count_relatively_prime_pairs(std::uint64_t p, unsigned k, unsigned m,
                                         EnumerationBudget& budget, unsigned workers = 1);

/// The defect (1 - favorable/total) * p^{3k} as an exact rational, together
/// with the interval implied by "monic of degree 2k, coefficients bounded by
/// 2 in absolute value".
struct DefectReport {
    std::uint64_t p = 0;
    unsigned k = 0;
    unsigned m = 0;
    mpq_class defect;
    mpq_class lower;
    mpq_class upper;
    bool within_bound = false;
    CountReport count;
};

DefectReport hh_defect(std::uint64_t p, unsigned k, unsigned m, EnumerationBudget& budget,
                       unsigned workers = 1);

}  // namespace padic
