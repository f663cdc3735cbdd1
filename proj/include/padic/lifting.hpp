#pragma once

#include <optional>
#include <vector>

#include "padic/poly.hpp"

namespace padic {

/// Thrown by lift_step when the incoming certificate fails its own identity.
struct InvalidCertificate : std::logic_error {
    using std::logic_error::logic_error;
};

/// Witness (r, s) with r*f + s*g = 1 in (Z/p^kZ)[x], deg r < deg g and
/// deg s < deg f.
struct BezoutCertificate {
    ResiduePoly r;
    ResiduePoly s;
    std::uint64_t p;
    unsigned k;

    BezoutCertificate reduce_precision(unsigned k_new) const {
        return BezoutCertificate{r.reduce_precision(k_new), s.reduce_precision(k_new), p, k_new};
    }
};

/// One record per precision reached along the doubling schedule. The
/// correction Q lives at the previous precision (it is only determined there);
/// alpha/beta are the pre-division intermediates. The base record stores
/// Q = 0 and alpha = r, beta = s.
struct LiftStep {
    unsigned precision;
    ResiduePoly r;
    ResiduePoly s;
    ResiduePoly q_correction;
    ResiduePoly alpha;
    ResiduePoly beta;
};

struct LiftTrace {
    std::vector<LiftStep> steps;
};

/// Result of a lifting run. On CoprimeFailure `certificate` is empty and
/// `common_factor` holds the monic gcd of the mod-p reductions.
struct BezoutOutcome {
    std::optional<BezoutCertificate> certificate;
    std::optional<ResiduePoly> common_factor;
    LiftTrace trace;

    bool coprime() const { return certificate.has_value(); }
};

/// Exact check that r*f + s*g = 1 at the certificate's precision and that
/// both degree bounds hold.
bool certificate_is_valid(const BezoutCertificate& cert, const ResiduePoly& f,
                          const ResiduePoly& g);

/// Precision-1 certificate from the extended Euclidean identity followed by
/// the degree-reduction division. Requires f, g monic of degree >= 1.
BezoutOutcome bezout_base(const ResiduePoly& f, const ResiduePoly& g);

/// One precision-doubling step: from a certificate mod p^m to one mod p^{2m}.
/// f and g must be known to precision >= 2m. Records the step in `record`
/// when given.
BezoutCertificate lift_step(const BezoutCertificate& cert, const ResiduePoly& f,
                            const ResiduePoly& g, LiftStep* record = nullptr);

/// Full run: base case, then doubling steps up to the first power of two
/// >= k_target, then reduction to exactly k_target.
BezoutOutcome bezout_certificate(const ResiduePoly& f, const ResiduePoly& g, unsigned k_target);

/// True iff (f, g) generate the whole ring, i.e. their mod-p reductions are
/// coprime. f, g monic of degree >= 1.
bool is_strongly_coprime(const ResiduePoly& f, const ResiduePoly& g);

enum class SeparabilityMethod { bezout, discriminant };

/// Separability of a monic polynomial of degree >= 1; decided entirely from
/// the mod-p reduction by either route.
bool is_separable_monic(const ResiduePoly& f, SeparabilityMethod method);

}  // namespace padic
