#include <doctest.h>

#include <random>
#include <set>

#include "padic/counting.hpp"
#include "padic/lifting.hpp"

using padic::CountReport;
using padic::EnumerationBudget;
using padic::ResiduePoly;

namespace {

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

}  // namespace

TEST_CASE("enumerate_monic yields every monic exactly once") {
    EnumerationBudget budget;
    std::set<std::string> seen;
    padic::for_each_monic(2, 1, 2, budget,
                          [&](const ResiduePoly& f) { seen.insert(padic::to_string(f)); });
    CHECK(seen == std::set<std::string>{"x^2", "1 + x^2", "x + x^2", "1 + x + x^2"});

    std::size_t n = 0;
    padic::for_each_monic(3, 2, 2, budget, [&](const ResiduePoly&) { ++n; });
    CHECK(n == 81);

    n = 0;
    padic::for_each_monic(5, 2, 0, budget, [&](const ResiduePoly& f) {
        ++n;
        CHECK(padic::to_string(f) == "1");
    });
    CHECK(n == 1);
}

TEST_CASE("budget guard refuses oversized enumerations") {
    EnumerationBudget tiny;
    tiny.limit = 10;
    CHECK_THROWS_AS(padic::count_separable(3, 2, 2, tiny), padic::BudgetExceeded);
    try {
        EnumerationBudget t2;
        t2.limit = 10;
        padic::count_separable(3, 2, 2, t2);
    } catch (const padic::BudgetExceeded& e) {
        CHECK(e.required == 81);
    }
}

TEST_CASE("separable counts match the closed formula") {
    EnumerationBudget budget;
    auto r1 = padic::count_separable(3, 2, 2, budget);
    CHECK(r1.favorable == 54);
    CHECK(r1.total == 81);
    CHECK(r1.matches_prediction());

    auto r2 = padic::count_separable(2, 1, 2, budget);
    CHECK(r2.favorable == 2);
    CHECK(*r2.predicted == 2);

    auto r3 = padic::count_separable(5, 1, 3, budget);
    CHECK(r3.favorable == 100);
    CHECK(r3.total == 125);
    CHECK(r3.matches_prediction());
}

TEST_CASE("the two separable monic quadratics over Z/2Z") {
    EnumerationBudget budget;
    std::set<std::string> separable;
    padic::for_each_monic(2, 1, 2, budget, [&](const ResiduePoly& f) {
        if (padic::is_separable_monic(f, padic::SeparabilityMethod::bezout)) {
            separable.insert(padic::to_string(f));
        }
    });
    CHECK(separable == std::set<std::string>{"x + x^2", "1 + x + x^2"});
}

TEST_CASE("strongly coprime pair counts match the closed formula") {
    EnumerationBudget budget;
    auto r1 = padic::count_strongly_coprime_pairs(3, 1, 1, 1, budget);
    CHECK(r1.favorable == 6);
    CHECK(r1.total == 9);
    CHECK(r1.matches_prediction());

    auto r2 = padic::count_strongly_coprime_pairs(3, 2, 1, 1, budget);
    CHECK(r2.favorable == 54);
    CHECK(r2.total == 81);
    CHECK(r2.matches_prediction());

    auto r3 = padic::count_strongly_coprime_pairs(2, 1, 2, 1, budget);
    CHECK(r3.favorable == 4);
    CHECK(r3.total == 8);
    CHECK(r3.matches_prediction());
}

namespace {

// Test-local oracle: search every v with deg v < deg a for a combination
// u*a + v*b equal to a nonzero constant (any constant in the ideal can be
// written this way after reducing v mod a). Independent of the library's
// kernel-based implementation.
bool oracle_relatively_prime(const ResiduePoly& a, const ResiduePoly& b) {
    if (a.degree() > b.degree()) return oracle_relatively_prime(b, a);
    const std::uint64_t p = a.prime();
    const unsigned k = a.precision();
    const unsigned m = static_cast<unsigned>(a.degree());
    const unsigned long q = padic::prime_power(p, k).get_ui();
    unsigned long count = 1;
    for (unsigned j = 0; j < m; ++j) count *= q;
    for (unsigned long idx = 0; idx < count; ++idx) {
        std::vector<mpz_class> vc(m);
        unsigned long rest = idx;
        for (unsigned j = 0; j < m; ++j) {
            vc[j] = rest % q;
            rest /= q;
        }
        ResiduePoly v(p, k, std::move(vc));
        ResiduePoly prod = padic::poly_mul(v, b);
        ResiduePoly rem =
            (prod.degree() >= a.degree()) ? padic::divmod_unit_lc(prod, a).remainder : prod;
        if (rem.degree() == 0) return true;  // nonzero constant reached
    }
    return false;
}

}  // namespace

TEST_CASE("relative primality: constant Bezout combinations") {
    EnumerationBudget budget;
    // (x+1)(x+2) = x^2 + 3x + 2 shares the factor x+1 with g
    CHECK_FALSE(padic::is_relatively_prime_residue(rp(3, 2, {2, 3, 1}), rp(3, 2, {1, 1}), budget));
    // the worked example's pair is strongly coprime, hence relatively prime
    CHECK(padic::is_relatively_prime_residue(rp(5, 2, {17, 23, 1}), rp(5, 2, {14, 1}), budget));
    // x^2 + 3 and x^2 + 6 differ by the constant 6, a nonzero element of Z/9
    CHECK(padic::is_relatively_prime_residue(rp(3, 2, {3, 0, 1}), rp(3, 2, {6, 0, 1}), budget));
    // a polynomial is never relatively prime to itself
    CHECK_FALSE(padic::is_relatively_prime_residue(rp(3, 2, {3, 0, 1}), rp(3, 2, {3, 0, 1}), budget));
    CHECK_THROWS_AS(
        padic::is_relatively_prime_residue(rp(3, 2, {2, 3, 2}), rp(3, 2, {1, 1}), budget),
        padic::NonMonic);
}

TEST_CASE("predicate agrees with the exhaustive combination oracle") {
    EnumerationBudget budget;
    std::mt19937_64 gen(71);
    for (int i = 0; i < 300; ++i) {
        ResiduePoly a = random_monic(3, 2, 2, gen);
        ResiduePoly b = random_monic(3, 2, (i % 2 == 0) ? 1u : 2u, gen);
        CHECK(padic::is_relatively_prime_residue(a, b, budget) == oracle_relatively_prime(a, b));
    }
    // and at a different prime / higher precision
    for (int i = 0; i < 100; ++i) {
        ResiduePoly a = random_monic(5, 2, 2, gen);
        ResiduePoly b = random_monic(5, 2, 2, gen);
        CHECK(padic::is_relatively_prime_residue(a, b, budget) == oracle_relatively_prime(a, b));
    }
    for (int i = 0; i < 50; ++i) {
        ResiduePoly a = random_monic(3, 3, 2, gen);
        ResiduePoly b = random_monic(3, 3, 3, gen);
        CHECK(padic::is_relatively_prime_residue(a, b, budget) == oracle_relatively_prime(a, b));
    }
}

TEST_CASE("relatively prime pairs have no common monic divisor") {
    // the Bezout-constant notion is stronger than divisor-freeness: sweep all
    // monic h of degree 1..2 and check none divides both
    EnumerationBudget budget;
    std::mt19937_64 gen(79);
    for (int i = 0; i < 200; ++i) {
        ResiduePoly f = random_monic(3, 2, 2, gen);
        ResiduePoly g = random_monic(3, 2, 2, gen);
        if (!padic::is_relatively_prime_residue(f, g, budget)) continue;
        for (unsigned d = 1; d <= 2; ++d) {
            const unsigned long n = padic::monic_family_size(3, 2, d).get_ui();
            for (unsigned long j = 0; j < n; ++j) {
                ResiduePoly h = padic::monic_from_index(3, 2, d, mpz_class(j));
                const bool divides_both = padic::divmod_unit_lc(f, h).remainder.is_zero() &&
                                          padic::divmod_unit_lc(g, h).remainder.is_zero();
                CHECK_FALSE(divides_both);
            }
        }
    }
}

TEST_CASE("relatively prime pair counts, field case") {
    EnumerationBudget budget;
    auto r1 = padic::count_relatively_prime_pairs(3, 1, 1, budget);
    CHECK(r1.favorable == 18);
    CHECK(r1.total == 27);

    auto r2 = padic::count_relatively_prime_pairs(3, 1, 2, budget);
    CHECK(r2.favorable == 54);
    CHECK(r2.total == 81);

    // over a field, relatively prime = strongly coprime
    auto sc = padic::count_strongly_coprime_pairs(3, 1, 2, 2, budget);
    auto rl = padic::count_relatively_prime_pairs(3, 1, 2, budget);
    CHECK(sc.favorable == rl.favorable);
}

TEST_CASE("relatively prime pair counts, k = 2 exceeds the strong count") {
    EnumerationBudget budget;
    auto r = padic::count_relatively_prime_pairs(3, 2, 1, budget);
    CHECK(r.total == 729);
    CHECK(r.favorable > 486);  // strictly more than the strongly coprime count
    mpq_class ratio(r.favorable, r.total);
    CHECK(ratio > mpq_class(2, 3));
}

TEST_CASE("pair counter agrees with the exhaustive combination oracle") {
    for (unsigned k = 1; k <= 2; ++k) {
        for (unsigned m = 1; m <= 2; ++m) {
            EnumerationBudget budget;
            auto fast = padic::count_relatively_prime_pairs(3, k, m, budget);
            const unsigned long nf = padic::prime_power(3, k * m).get_ui();
            const unsigned long ng = padic::prime_power(3, k * 2).get_ui();
            mpz_class naive = 0;
            for (unsigned long i = 0; i < nf; ++i) {
                ResiduePoly f = padic::monic_from_index(3, k, m, mpz_class(i));
                for (unsigned long j = 0; j < ng; ++j) {
                    ResiduePoly g = padic::monic_from_index(3, k, 2, mpz_class(j));
                    if (oracle_relatively_prime(f, g)) ++naive;
                }
            }
            CHECK(fast.favorable == naive);
        }
    }
}

TEST_CASE("strongly coprime pairs are relatively prime (containment)") {
    EnumerationBudget budget;
    const unsigned long nf = padic::prime_power(3, 2 * 2).get_ui();
    const unsigned long ng = padic::prime_power(3, 2 * 2).get_ui();
    for (unsigned long i = 0; i < nf; ++i) {
        ResiduePoly f = padic::monic_from_index(3, 2, 2, mpz_class(i));
        for (unsigned long j = 0; j < ng; ++j) {
            ResiduePoly g = padic::monic_from_index(3, 2, 2, mpz_class(j));
            if (padic::is_strongly_coprime(f, g)) {
                EnumerationBudget b2;
                CHECK(padic::is_relatively_prime_residue(f, g, b2));
            }
        }
    }
}

TEST_CASE("relative primality is preserved under lifting the precision") {
    std::mt19937_64 gen(73);
    std::uniform_int_distribution<unsigned long> digit(0, 2);
    int checked = 0;
    while (checked < 100) {
        ResiduePoly f1 = random_monic(3, 1, 2, gen);
        ResiduePoly g1 = random_monic(3, 1, 2, gen);
        EnumerationBudget b;
        if (!padic::is_relatively_prime_residue(f1, g1, b)) continue;
        ++checked;
        // random lift to precision 2
        auto lift = [&](const ResiduePoly& h) {
            std::vector<mpz_class> cs = h.coeffs();
            cs.resize(h.degree() + 1);
            for (int i = 0; i < h.degree(); ++i) cs[i] += 3 * static_cast<long>(digit(gen));
            return ResiduePoly(3, 2, std::move(cs));
        };
        EnumerationBudget b2;
        CHECK(padic::is_relatively_prime_residue(lift(f1), lift(g1), b2));
    }
}

TEST_CASE("monotone convergence in k at p = 3, m = 1") {
    EnumerationBudget budget;
    mpq_class prev(0);
    for (unsigned k = 1; k <= 2; ++k) {
        auto r = padic::count_relatively_prime_pairs(3, k, 1, budget);
        mpq_class ratio(r.favorable, r.total);
        ratio.canonicalize();
        CHECK(ratio >= prev);
        CHECK(ratio >= mpq_class(2, 3));
        prev = ratio;
    }
}

TEST_CASE("defect lies in the coefficient-bound interval") {
    EnumerationBudget budget;
    auto d1 = padic::hh_defect(3, 1, 1, budget);
    CHECK(d1.defect == mpq_class(9));
    CHECK(d1.lower == mpq_class(1));
    CHECK(d1.upper == mpq_class(17));
    CHECK(d1.within_bound);

    auto d2 = padic::hh_defect(5, 1, 2, budget);
    CHECK(d2.defect == mpq_class(25));
    CHECK(d2.within_bound);
}

TEST_CASE("defect is independent of m") {
    EnumerationBudget budget;
    auto a = padic::hh_defect(3, 2, 1, budget);
    auto b = padic::hh_defect(3, 2, 2, budget);
    CHECK(a.defect == b.defect);
    CHECK(a.within_bound);
}

TEST_CASE("worker count never changes a count") {
    EnumerationBudget b1, b2, b3;
    auto r1 = padic::count_separable(5, 1, 3, b1, 1);
    auto r3 = padic::count_separable(5, 1, 3, b3, 3);
    CHECK(r1.favorable == r3.favorable);
    auto s1 = padic::count_relatively_prime_pairs(3, 2, 1, b1, 1);
    auto s4 = padic::count_relatively_prime_pairs(3, 2, 1, b2, 4);
    CHECK(s1.favorable == s4.favorable);
}
