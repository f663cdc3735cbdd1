#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace padic {

/// Thrown when invert_unit is called on a non-unit (constant digit zero).
struct NonUnitError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Deterministic trial-division primality test. Experiment-scale p is small,
/// so nothing fancier is needed.
bool is_prime(std::uint64_t n);

/// p^k as an exact integer.
mpz_class prime_power(std::uint64_t p, unsigned k);

/// An element of Z/p^kZ viewed as a p-adic integer known to k digits.
/// The canonical representative is the least nonnegative residue; the digit
/// expansion residue = sum c_i p^i with c_i in [0, p-1] has exactly k entries.
/// Immutable after construction.
class PadicInt {
  public:
    /// Canonicalizes residue into [0, p^k). Rejects non-prime p and k = 0.
    PadicInt(std::uint64_t p, unsigned k, mpz_class residue);

    /// Builds the element with the given digit expansion; k = digits.size().
    static PadicInt from_digits(std::uint64_t p, const std::vector<std::uint64_t>& digits);

    static PadicInt zero(std::uint64_t p, unsigned k) { return PadicInt(p, k, 0); }
    static PadicInt one(std::uint64_t p, unsigned k) { return PadicInt(p, k, 1); }

    std::uint64_t prime() const { return p_; }
    unsigned precision() const { return k_; }
    const mpz_class& residue() const { return residue_; }
    const mpz_class& modulus() const { return modulus_; }

    /// The k digits c_0, ..., c_{k-1}, least significant first.
    std::vector<std::uint64_t> digits() const;

    bool is_zero() const { return residue_ == 0; }

    /// True iff the constant digit c_0 is nonzero, i.e. x is invertible mod p^k.
    bool is_unit() const;

    /// Index of the first nonzero digit; k for the zero element.
    unsigned valuation() const;

    /// Multiplicative inverse mod p^k. Throws NonUnitError if c_0 = 0.
    PadicInt invert_unit() const;

    /// Projection Z/p^kZ -> Z/p^k'Z, 1 <= k' <= k.
    PadicInt reduce_precision(unsigned k_new) const;

    /// Zero-digit extension to a higher precision (a canonical lift).
    PadicInt extend_precision(unsigned k_new) const;

    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a);

    friend bool operator==(const PadicInt& a, const PadicInt& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.residue_ == b.residue_;
    }
    friend bool operator!=(const PadicInt& a, const PadicInt& b) { return !(a == b); }

    std::string str() const { return residue_.get_str(); }

  private:
    std::uint64_t p_;
    unsigned k_;
    mpz_class modulus_;  // p^k, cached
    mpz_class residue_;  // canonical, in [0, p^k)

    static void require_same_ring(const PadicInt& a, const PadicInt& b);
};

}  // namespace padic
