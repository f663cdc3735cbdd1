#include "padic/counting.hpp"

#include <algorithm>
#include <thread>

#include "padic/lifting.hpp"

namespace padic {

namespace {

// Splits [0, total) into `workers` contiguous ranges, runs `body(begin, end,
// slot)` on each, and returns the per-slot tallies summed. Deterministic for
// any worker count because per-index work is independent.
std::uint64_t parallel_tally(
    std::uint64_t total, unsigned workers,
    const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& body) {
    workers = std::max(1u, workers);
    if (workers == 1 || total < 2 * workers) return body(0, total);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&partial, &body, w, begin, end] { partial[w] = body(begin, end); });
    }
    for (auto& t : threads) t.join();
    std::uint64_t sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

std::uint64_t to_u64(const mpz_class& v) {
    if (!v.fits_ulong_p()) throw BudgetExceeded(v);
    return v.get_ui();
}

// p-adic valuation of a residue, capped at k (the valuation of zero).
unsigned valuation_of(const mpz_class& a, std::uint64_t p, unsigned k) {
    if (a == 0) return k;
    unsigned v = 0;
    mpz_class t = a;
    while (v < k && t % static_cast<unsigned long>(p) == 0) {
        t /= static_cast<unsigned long>(p);
        ++v;
    }
    return v;
}

// Decides whether the ideal (a, b) of (Z/p^kZ)[x] contains a nonzero
// constant, for monic a with deg a = m <= deg b. Any constant u*a + v*b can
// be written with deg v < m, so it suffices to ask whether multiplication by
// b on the rank-m free module A = (Z/p^kZ)[x]/(a) hits a vector of the form
// (c, 0, ..., 0) with c != 0. That is a kernel computation over Z/p^kZ,
// done by diagonalizing with unimodular row/column operations (pivots of
// minimal p-valuation).
bool ideal_has_nonzero_constant(const ResiduePoly& a, const ResiduePoly& b) {
    const std::uint64_t p = a.prime();
    const unsigned k = a.precision();
    const mpz_class modulus = prime_power(p, k);
    const unsigned m = static_cast<unsigned>(a.degree());

    // b reduced mod a, as a length-m coefficient vector
    ResiduePoly r = (b.degree() >= a.degree()) ? divmod_unit_lc(b, a).remainder : b;
    std::vector<std::vector<mpz_class>> col(m, std::vector<mpz_class>(m, 0));
    for (int i = 0; i <= r.degree(); ++i) col[0][static_cast<unsigned>(i)] = r.coeff(i).residue();
    for (unsigned j = 1; j < m; ++j) {
        // col_j = x * col_{j-1} mod a
        const mpz_class top = col[j - 1][m - 1];
        for (unsigned i = 0; i < m; ++i) {
            mpz_class v = (i > 0) ? col[j - 1][i - 1] : mpz_class(0);
            v -= top * a.coeff(static_cast<int>(i)).residue();
            mpz_class red;
            mpz_mod(red.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
            col[j][i] = std::move(red);
        }
    }
    auto reduce = [&](mpz_class& v) {
        mpz_class red;
        mpz_mod(red.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
        v = std::move(red);
    };

    // row 0 of the multiplication matrix is the constant-term functional
    std::vector<mpz_class> row0(m);
    for (unsigned j = 0; j < m; ++j) row0[j] = col[j][0];
    if (m == 1) return row0[0] != 0;

    // N = rows 1..m-1; diagonalize N*C with column transform C tracked
    const unsigned rows = m - 1, cols = m;
    std::vector<std::vector<mpz_class>> N(rows, std::vector<mpz_class>(cols));
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < cols; ++j) N[i][j] = col[j][i + 1];
    }
    std::vector<std::vector<mpz_class>> C(cols, std::vector<mpz_class>(cols, 0));
    for (unsigned j = 0; j < cols; ++j) C[j][j] = 1;
    std::vector<unsigned> pivot_val(cols, k);  // valuation of the diagonal pivot, k = none

    unsigned t = 0;
    while (t < rows && t < cols) {
        unsigned best_v = k, bi = t, bj = t;
        for (unsigned i = t; i < rows; ++i) {
            for (unsigned j = t; j < cols; ++j) {
                const unsigned v = valuation_of(N[i][j], p, k);
                if (v < best_v) { best_v = v; bi = i; bj = j; }
            }
        }
        if (best_v == k) break;  // remaining submatrix is zero
        std::swap(N[bi], N[t]);
        for (unsigned i = 0; i < rows; ++i) std::swap(N[i][bj], N[i][t]);
        for (unsigned i = 0; i < cols; ++i) std::swap(C[i][bj], C[i][t]);

        // scale column t so the pivot becomes exactly p^best_v
        const mpz_class pv = prime_power(p, best_v);
        mpz_class unit = N[t][t] / pv, uinv;
        if (mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t()) == 0) {
            throw std::logic_error("pivot unit not invertible");  // unreachable
        }
        for (unsigned i = 0; i < rows; ++i) { N[i][t] *= uinv; reduce(N[i][t]); }
        for (unsigned i = 0; i < cols; ++i) { C[i][t] *= uinv; reduce(C[i][t]); }

        // clear row t (column operations), then column t (row operations)
        for (unsigned j = 0; j < cols; ++j) {
            if (j == t || N[t][j] == 0) continue;
            const mpz_class q = N[t][j] / pv;  // exact: every entry has valuation >= best_v
            for (unsigned i = 0; i < rows; ++i) { N[i][j] -= q * N[i][t]; reduce(N[i][j]); }
            for (unsigned i = 0; i < cols; ++i) { C[i][j] -= q * C[i][t]; reduce(C[i][j]); }
        }
        for (unsigned i = 0; i < rows; ++i) {
            if (i == t || N[i][t] == 0) continue;
            const mpz_class q = N[i][t] / pv;
            for (unsigned j = 0; j < cols; ++j) { N[i][j] -= q * N[t][j]; reduce(N[i][j]); }
        }
        pivot_val[t] = best_v;
        ++t;
    }

    // kernel generators of N are p^{k - v_j} * (column j of C); the pair is
    // relatively prime iff the constant-term functional is nonzero on one.
    for (unsigned j = 0; j < cols; ++j) {
        if (pivot_val[j] == 0) continue;  // unit pivot contributes nothing
        const mpz_class scale = prime_power(p, k - pivot_val[j]);
        mpz_class c = 0;
        for (unsigned i = 0; i < cols; ++i) c += row0[i] * C[i][j];
        c *= scale;
        reduce(c);
        if (c != 0) return true;
    }
    return false;
}

}  // namespace

mpz_class monic_family_size(std::uint64_t p, unsigned k, unsigned d) {
    return prime_power(p, k * d);
}

ResiduePoly monic_from_index(std::uint64_t p, unsigned k, unsigned d, const mpz_class& index) {
    const mpz_class q = prime_power(p, k);
    std::vector<mpz_class> coeffs(d + 1);
    mpz_class rest = index;
    // a_{d-1} varies fastest so that (a_0, ..., a_{d-1}) is lexicographic.
    for (unsigned j = d; j-- > 0;) {
        coeffs[j] = rest % q;
        rest /= q;
    }
    coeffs[d] = 1;
    return ResiduePoly(p, k, std::move(coeffs));
}

void for_each_monic(std::uint64_t p, unsigned k, unsigned d, EnumerationBudget& budget,
                    const std::function<void(const ResiduePoly&)>& fn) {
    budget.charge(monic_family_size(p, k, d));
    const std::uint64_t total = to_u64(monic_family_size(p, k, d));
    for (std::uint64_t i = 0; i < total; ++i) {
        fn(monic_from_index(p, k, d, mpz_class(static_cast<unsigned long>(i))));
    }
}

CountReport count_separable(std::uint64_t p, unsigned k, unsigned d, EnumerationBudget& budget,
                            unsigned workers) {
    if (d < 1) throw std::invalid_argument("count_separable requires d >= 1");
    const mpz_class total = monic_family_size(p, k, d);
    budget.charge(total);
    const std::uint64_t n = to_u64(total);

    const std::uint64_t favorable =
        parallel_tally(n, workers, [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t hits = 0;
            for (std::uint64_t i = begin; i < end; ++i) {
                ResiduePoly f = monic_from_index(p, k, d, mpz_class(static_cast<unsigned long>(i)));
                if (is_separable_monic(f, SeparabilityMethod::bezout)) ++hits;
            }
            return hits;
        });

    CountReport report;
    report.property_name = "separable";
    report.p = p;
    report.k = k;
    report.degrees = {d};
    report.favorable = favorable;
    report.total = total;
    // p^{dk}(1 - 1/p); for d = 1 every monic polynomial is separable.
    report.predicted = (d >= 2) ? total - total / static_cast<unsigned long>(p) : total;
    return report;
}

CountReport count_strongly_coprime_pairs(std::uint64_t p, unsigned k, unsigned d, unsigned e,
                                         EnumerationBudget& budget, unsigned workers) {
    if (d < 1 || e < 1) throw std::invalid_argument("degrees must be >= 1");
    const mpz_class nf = monic_family_size(p, k, d);
    const mpz_class ng = monic_family_size(p, k, e);
    const mpz_class total = nf * ng;
    budget.charge(total);
    const std::uint64_t fn = to_u64(nf), gn = to_u64(ng);

    // Materialize the smaller family once; iterate over the larger.
    std::vector<ResiduePoly> gs;
    gs.reserve(gn);
    for (std::uint64_t j = 0; j < gn; ++j) {
        gs.push_back(monic_from_index(p, k, e, mpz_class(static_cast<unsigned long>(j))));
    }

    const std::uint64_t favorable =
        parallel_tally(fn, workers, [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t hits = 0;
            for (std::uint64_t i = begin; i < end; ++i) {
                ResiduePoly f = monic_from_index(p, k, d, mpz_class(static_cast<unsigned long>(i)));
                for (const ResiduePoly& g : gs) {
                    if (is_strongly_coprime(f, g)) ++hits;
                }
            }
            return hits;
        });

    CountReport report;
    report.property_name = "strongly_coprime";
    report.p = p;
    report.k = k;
    report.degrees = {d, e};
    report.favorable = favorable;
    report.total = total;
    report.predicted = total - total / static_cast<unsigned long>(p);
    return report;
}

bool is_relatively_prime_residue(const ResiduePoly& f, const ResiduePoly& g,
                                 EnumerationBudget& budget) {
    if (!f.is_monic() || !g.is_monic()) throw NonMonic("relative primality requires monic inputs");
    if (f.degree() < 1 || g.degree() < 1) {
        throw std::invalid_argument("relative primality requires degrees >= 1");
    }
    if (f.prime() != g.prime() || f.precision() != g.precision()) {
        throw std::invalid_argument("f and g live in different rings");
    }
    // one test per call, sized by the linear-algebra dimension
    budget.charge(mpz_class(static_cast<unsigned long>(std::min(f.degree(), g.degree()))));
    if (f.degree() <= g.degree()) return ideal_has_nonzero_constant(f, g);
    return ideal_has_nonzero_constant(g, f);
}

CountReport count_relatively_prime_pairs(std::uint64_t p, unsigned k, unsigned m,
                                         EnumerationBudget& budget, unsigned workers) {
    if (p % 2 == 0) throw std::invalid_argument("relative-primality counts require an odd prime");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const mpz_class nf = monic_family_size(p, k, m);
    const mpz_class ng = monic_family_size(p, k, 2);
    const mpz_class total = nf * ng;
    budget.charge(total);  // one constant-certificate test per pair

    const std::uint64_t fn = to_u64(nf), gn = to_u64(ng);

    std::vector<ResiduePoly> gs;
    gs.reserve(gn);
    for (std::uint64_t j = 0; j < gn; ++j) {
        gs.push_back(monic_from_index(p, k, 2, mpz_class(static_cast<unsigned long>(j))));
    }

    const std::uint64_t favorable =
        parallel_tally(fn, workers, [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t hits = 0;
            for (std::uint64_t i = begin; i < end; ++i) {
                ResiduePoly f = monic_from_index(p, k, m, mpz_class(static_cast<unsigned long>(i)));
                for (const ResiduePoly& g : gs) {
                    const bool coprime = (f.degree() <= g.degree())
                                             ? ideal_has_nonzero_constant(f, g)
                                             : ideal_has_nonzero_constant(g, f);
                    if (coprime) ++hits;
                }
            }
            return hits;
        });

    CountReport report;
    report.property_name = "relatively_prime";
    report.p = p;
    report.k = k;
    report.degrees = {m, 2};
    report.favorable = favorable;
    report.total = total;
    return report;
}

DefectReport hh_defect(std::uint64_t p, unsigned k, unsigned m, EnumerationBudget& budget,
                       unsigned workers) {
    DefectReport out;
    out.p = p;
    out.k = k;
    out.m = m;
    out.count = count_relatively_prime_pairs(p, k, m, budget, workers);

    // (1 - favorable/total) * p^{3k}
    mpq_class miss(out.count.total - out.count.favorable, out.count.total);
    miss.canonicalize();
    out.defect = miss * mpq_class(prime_power(p, 3 * k));
    out.defect.canonicalize();

    // Interval from "monic of degree 2k, coefficients of absolute value at
    // most 2": p^{2k} +- 2(p^{2k} - 1)/(p - 1).
    const mpz_class lead = prime_power(p, 2 * k);
    mpq_class slack(2 * (lead - 1), mpz_class(static_cast<unsigned long>(p - 1)));
    slack.canonicalize();
    out.lower = mpq_class(lead) - slack;
    out.upper = mpq_class(lead) + slack;
    out.within_bound = out.defect >= out.lower && out.defect <= out.upper;
    return out;
}

}  // namespace padic
