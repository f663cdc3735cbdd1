#include "padic/lifting.hpp"

namespace padic {

namespace {

void require_monic_positive_degree(const ResiduePoly& f, const char* name) {
    if (f.degree() < 1) {
        throw std::invalid_argument(std::string(name) + " must have degree >= 1");
    }
    if (!f.is_monic()) throw NonMonic(std::string(name) + " must be monic");
}

ResiduePoly one_poly(std::uint64_t p, unsigned k) {
    return ResiduePoly::from_ints(p, k, {1});
}

unsigned next_power_of_two_at_least(unsigned k) {
    unsigned m = 1;
    while (m < k) m *= 2;
    return m;
}

}  // namespace

bool certificate_is_valid(const BezoutCertificate& cert, const ResiduePoly& f,
                          const ResiduePoly& g) {
    const ResiduePoly fk = f.reduce_precision(cert.k);
    const ResiduePoly gk = g.reduce_precision(cert.k);
    if (!cert.r.is_zero() && cert.r.degree() >= g.degree()) return false;
    if (!cert.s.is_zero() && cert.s.degree() >= f.degree()) return false;
    ResiduePoly lhs = poly_add(poly_mul(cert.r, fk), poly_mul(cert.s, gk));
    return lhs == one_poly(cert.p, cert.k);
}

BezoutOutcome bezout_base(const ResiduePoly& f, const ResiduePoly& g) {
    require_monic_positive_degree(f, "f");
    require_monic_positive_degree(g, "g");
    if (f.prime() != g.prime() || f.precision() != g.precision()) {
        throw std::invalid_argument("f and g live in different rings");
    }
    const std::uint64_t p = f.prime();
    const ResiduePoly f1 = f.reduce_precision(1);
    const ResiduePoly g1 = g.reduce_precision(1);

    ExtendedGcdResult eg = extended_gcd_prime_field(f1, g1);
    BezoutOutcome out;
    if (eg.d.degree() != 0) {
        out.common_factor = eg.d;
        return out;
    }
    // Reduce a's degree below deg g: a = q*g1 + r0, then s0 = q*f1 + b.
    DivisionResult dv = divmod_unit_lc(eg.a, g1);
    ResiduePoly r0 = dv.remainder;
    ResiduePoly s0 = poly_add(poly_mul(dv.quotient, f1), eg.b);
    BezoutCertificate cert{r0, s0, p, 1};
    out.trace.steps.push_back(LiftStep{1, r0, s0, ResiduePoly::zero(p, 1), r0, s0});
    out.certificate = std::move(cert);
    return out;
}

BezoutCertificate lift_step(const BezoutCertificate& cert, const ResiduePoly& f,
                            const ResiduePoly& g, LiftStep* record) {
    require_monic_positive_degree(f, "f");
    require_monic_positive_degree(g, "g");
    const unsigned m = cert.k;
    const unsigned m2 = 2 * m;
    if (f.precision() < m2 || g.precision() < m2) {
        throw std::invalid_argument("lift_step: f and g must be known to precision >= 2m");
    }
    if (!certificate_is_valid(cert, f.reduce_precision(m), g.reduce_precision(m))) {
        throw InvalidCertificate("lift_step: input certificate fails its Bezout identity");
    }

    const std::uint64_t p = f.prime();
    const ResiduePoly f2 = f.reduce_precision(m2);
    const ResiduePoly g2 = g.reduce_precision(m2);
    const ResiduePoly r_hat = cert.r.extend_precision(m2);
    const ResiduePoly s_hat = cert.s.extend_precision(m2);

    // r_hat*f + s_hat*g = 1 + p^m * Q  mod p^{2m}; Q is determined mod p^m.
    ResiduePoly excess =
        poly_sub(poly_add(poly_mul(r_hat, f2), poly_mul(s_hat, g2)), one_poly(p, m2));
    const mpz_class pm = prime_power(p, m);
    std::vector<mpz_class> q_coeffs;
    q_coeffs.reserve(excess.coeffs().size());
    for (const auto& c : excess.coeffs()) {
        // exactly divisible because the certificate holds mod p^m
        q_coeffs.push_back(c / pm);
    }
    const ResiduePoly q_small(p, m, q_coeffs);
    const ResiduePoly q_lift(p, m2, std::move(q_coeffs));

    // multiplier 1 - p^m * Q
    ResiduePoly multiplier = poly_sub(one_poly(p, m2),
                                      poly_scale(PadicInt(p, m2, pm), q_lift));
    ResiduePoly alpha = poly_mul(multiplier, r_hat);
    ResiduePoly beta = poly_mul(multiplier, s_hat);

    // Restore the degree bounds exactly as in the base case.
    DivisionResult dv = divmod_unit_lc(alpha, g2);
    ResiduePoly r_next = dv.remainder;
    ResiduePoly s_next = poly_add(poly_mul(dv.quotient, f2), beta);

    BezoutCertificate next{r_next, s_next, p, m2};
    if (record != nullptr) *record = LiftStep{m2, r_next, s_next, q_small, alpha, beta};
    return next;
}

BezoutOutcome bezout_certificate(const ResiduePoly& f, const ResiduePoly& g, unsigned k_target) {
    if (k_target < 1) throw std::invalid_argument("k_target must be >= 1");
    if (f.precision() < k_target || g.precision() < k_target) {
        throw std::invalid_argument("input precision below k_target");
    }
    BezoutOutcome out = bezout_base(f, g);
    if (!out.coprime()) return out;

    const unsigned k_top = next_power_of_two_at_least(k_target);
    // Canonical zero-extension lifts carry f, g up to the schedule's top
    // precision; the result reduced to k_target is independent of the lift.
    const ResiduePoly f_top = f.reduce_precision(k_target).extend_precision(k_top);
    const ResiduePoly g_top = g.reduce_precision(k_target).extend_precision(k_top);

    BezoutCertificate cert = *out.certificate;
    while (cert.k < k_top) {
        const ResiduePoly z = ResiduePoly::zero(f.prime(), 1);
        LiftStep step{0, z, z, z, z, z};
        cert = lift_step(cert, f_top, g_top, &step);
        out.trace.steps.push_back(std::move(step));
    }
    out.certificate = cert.reduce_precision(k_target);
    return out;
}

bool is_strongly_coprime(const ResiduePoly& f, const ResiduePoly& g) {
    require_monic_positive_degree(f, "f");
    require_monic_positive_degree(g, "g");
    ResiduePoly d = gcd_prime_field(f.reduce_precision(1), g.reduce_precision(1));
    return d.degree() == 0;
}

bool is_separable_monic(const ResiduePoly& f, SeparabilityMethod method) {
    if (f.degree() < 1) throw std::invalid_argument("f must have degree >= 1");
    if (!f.is_monic()) throw NonMonic("f must be monic");
    const ResiduePoly f1 = f.reduce_precision(1);
    if (method == SeparabilityMethod::discriminant) {
        if (f1.degree() == 1) return true;
        return discriminant_prime_field(f1).is_unit();
    }
    ResiduePoly fp = derivative(f1);
    if (fp.is_zero()) return f1.degree() == 0;
    return gcd_prime_field(f1, fp).degree() == 0;
}

}  // namespace padic
