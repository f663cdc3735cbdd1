#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "padic/padic_int.hpp"

namespace padic {

struct NonUnitLeadingCoefficient : std::domain_error {
    using std::domain_error::domain_error;
};
struct DivisionByZeroPolynomial : std::domain_error {
    using std::domain_error::domain_error;
};
struct BothZero : std::domain_error {
    using std::domain_error::domain_error;
};
struct ZeroPolynomial : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonMonic : std::domain_error {
    using std::domain_error::domain_error;
};

/// Parse failure with a 1-based column position into the input text.
struct PolyParseError : std::runtime_error {
    std::size_t column;
    PolyParseError(const std::string& msg, std::size_t col)
        : std::runtime_error(msg + " (column " + std::to_string(col) + ")"), column(col) {}
};

/// A polynomial over Z/p^kZ, coefficients lowest degree first, always trimmed:
/// the zero polynomial is the empty coefficient sequence. Immutable in use.
class ResiduePoly {
  public:
    /// Degree sentinel for the zero polynomial.
    static constexpr int kDegreeNegInf = -1;

    /// Canonicalizes every coefficient mod p^k and trims trailing zeros.
    ResiduePoly(std::uint64_t p, unsigned k, std::vector<mpz_class> coeffs);

    static ResiduePoly zero(std::uint64_t p, unsigned k) { return ResiduePoly(p, k, {}); }
    static ResiduePoly constant(const PadicInt& c);
    /// Convenience: coefficients given as machine integers, lowest degree first.
    static ResiduePoly from_ints(std::uint64_t p, unsigned k, const std::vector<long>& coeffs);

    std::uint64_t prime() const { return p_; }
    unsigned precision() const { return k_; }
    const mpz_class& modulus() const { return modulus_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i (zero beyond the stored length).
    PadicInt coeff(std::size_t i) const;
    /// Leading coefficient; throws ZeroPolynomial on the zero polynomial.
    PadicInt leading_coeff() const;
    bool is_monic() const;

    ResiduePoly reduce_precision(unsigned k_new) const;
    /// Zero-digit-extension lift of every coefficient.
    ResiduePoly extend_precision(unsigned k_new) const;

    friend bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const ResiduePoly& a, const ResiduePoly& b) { return !(a == b); }

  private:
    std::uint64_t p_;
    unsigned k_;
    mpz_class modulus_;
    std::vector<mpz_class> coeffs_;
};

struct DivisionResult {
    ResiduePoly quotient;
    ResiduePoly remainder;
};

ResiduePoly poly_add(const ResiduePoly& f, const ResiduePoly& g);
ResiduePoly poly_sub(const ResiduePoly& f, const ResiduePoly& g);
ResiduePoly poly_mul(const ResiduePoly& f, const ResiduePoly& g);
ResiduePoly poly_neg(const ResiduePoly& f);
ResiduePoly poly_scale(const PadicInt& c, const ResiduePoly& f);

/// Euclidean division f = q*g + r where the leading coefficient of g is a
/// unit; repeatedly subtracts lc(f)/lc(g) * x^(deg f - deg g) * g until the
/// degree drops below deg g.
DivisionResult divmod_unit_lc(const ResiduePoly& f, const ResiduePoly& g);

/// Formal derivative; the multiplier i is reduced mod p^k first.
ResiduePoly derivative(const ResiduePoly& f);

/// Monic gcd over the prime field (requires k = 1, not both zero).
ResiduePoly gcd_prime_field(const ResiduePoly& f, const ResiduePoly& g);

struct ExtendedGcdResult {
    ResiduePoly d;  // monic gcd
    ResiduePoly a;  // a*f + b*g = d
    ResiduePoly b;
};
ExtendedGcdResult extended_gcd_prime_field(const ResiduePoly& f, const ResiduePoly& g);

/// Determinant of the Sylvester matrix over Z/pZ (k = 1, f and g nonzero).
PadicInt resultant_prime_field(const ResiduePoly& f, const ResiduePoly& g);

/// (-1)^(d(d-1)/2) * Res(f, f') for monic f of degree d >= 1 over Z/pZ.
/// Returns 0 when f' vanishes identically.
PadicInt discriminant_prime_field(const ResiduePoly& f);

/// Canonical text form "c0 + c1*x + c2*x^2 + ...", zero terms omitted,
/// unit coefficients on positive-degree terms printed bare. Zero prints "0".
std::string to_string(const ResiduePoly& f);

/// Parser for the canonical form; also accepts arbitrary whitespace, terms in
/// any order, '-' signs, and repeated powers (which are summed).
ResiduePoly parse_poly(const std::string& text, std::uint64_t p, unsigned k);

}  // namespace padic
