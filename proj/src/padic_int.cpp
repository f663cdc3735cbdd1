#include "padic/padic_int.hpp"

namespace padic {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

mpz_class prime_power(std::uint64_t p, unsigned k) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, k);
    return m;
}

PadicInt::PadicInt(std::uint64_t p, unsigned k, mpz_class residue)
    : p_(p), k_(k), modulus_(prime_power(p, k)), residue_(std::move(residue)) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("precision k must be >= 1");
    mpz_mod(residue_.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
}

PadicInt PadicInt::from_digits(std::uint64_t p, const std::vector<std::uint64_t>& digits) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (digits.empty()) throw std::invalid_argument("digit sequence must be nonempty");
    mpz_class value = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it >= p) {
            throw std::invalid_argument("digit " + std::to_string(*it) + " out of range [0, " +
                                        std::to_string(p - 1) + "]");
        }
        value = value * static_cast<unsigned long>(p) + static_cast<unsigned long>(*it);
    }
    return PadicInt(p, static_cast<unsigned>(digits.size()), std::move(value));
}

std::vector<std::uint64_t> PadicInt::digits() const {
    std::vector<std::uint64_t> out;
    out.reserve(k_);
    mpz_class rest = residue_;
    for (unsigned i = 0; i < k_; ++i) {
        out.push_back(mpz_fdiv_ui(rest.get_mpz_t(), static_cast<unsigned long>(p_)));
        mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p_));
    }
    return out;
}

bool PadicInt::is_unit() const {
    return mpz_fdiv_ui(residue_.get_mpz_t(), static_cast<unsigned long>(p_)) != 0;
}

unsigned PadicInt::valuation() const {
    if (residue_ == 0) return k_;
    mpz_class rest = residue_;
    unsigned v = 0;
    while (mpz_fdiv_ui(rest.get_mpz_t(), static_cast<unsigned long>(p_)) == 0) {
        mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p_));
        ++v;
    }
    return v;
}

PadicInt PadicInt::invert_unit() const {
    if (!is_unit()) throw NonUnitError("cannot invert: element is divisible by p");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
    return PadicInt(p_, k_, std::move(inv));
}

PadicInt PadicInt::reduce_precision(unsigned k_new) const {
    if (k_new < 1 || k_new > k_) {
        throw std::invalid_argument("reduce_precision: target precision out of range");
    }
    return PadicInt(p_, k_new, residue_);
}

PadicInt PadicInt::extend_precision(unsigned k_new) const {
    if (k_new < k_) throw std::invalid_argument("extend_precision: target below current precision");
    return PadicInt(p_, k_new, residue_);
}

void PadicInt::require_same_ring(const PadicInt& a, const PadicInt& b) {
    if (a.p_ != b.p_ || a.k_ != b.k_) {
        throw std::invalid_argument("operands live in different rings Z/p^kZ");
    }
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    PadicInt::require_same_ring(a, b);
    return PadicInt(a.p_, a.k_, a.residue_ + b.residue_);
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    PadicInt::require_same_ring(a, b);
    return PadicInt(a.p_, a.k_, a.residue_ - b.residue_);
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    PadicInt::require_same_ring(a, b);
    return PadicInt(a.p_, a.k_, a.residue_ * b.residue_);
}

PadicInt operator-(const PadicInt& a) { return PadicInt(a.p_, a.k_, -a.residue_); }

}  // namespace padic
