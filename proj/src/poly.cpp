#include "padic/poly.hpp"

#include <cctype>
#include <sstream>

namespace padic {

namespace {

void require_same_ring(const ResiduePoly& a, const ResiduePoly& b) {
    if (a.prime() != b.prime() || a.precision() != b.precision()) {
        throw std::invalid_argument("polynomials live in different rings (Z/p^kZ)[x]");
    }
}

void require_prime_field(const ResiduePoly& f, const char* who) {
    if (f.precision() != 1) {
        throw std::invalid_argument(std::string(who) + " requires precision k = 1");
    }
}

}  // namespace

ResiduePoly::ResiduePoly(std::uint64_t p, unsigned k, std::vector<mpz_class> coeffs)
    : p_(p), k_(k), modulus_(prime_power(p, k)), coeffs_(std::move(coeffs)) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("precision k must be >= 1");
    for (auto& c : coeffs_) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), modulus_.get_mpz_t());
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ResiduePoly ResiduePoly::constant(const PadicInt& c) {
    return ResiduePoly(c.prime(), c.precision(), {c.residue()});
}

ResiduePoly ResiduePoly::from_ints(std::uint64_t p, unsigned k, const std::vector<long>& coeffs) {
    std::vector<mpz_class> cs(coeffs.begin(), coeffs.end());
    return ResiduePoly(p, k, std::move(cs));
}

PadicInt ResiduePoly::coeff(std::size_t i) const {
    if (i >= coeffs_.size()) return PadicInt::zero(p_, k_);
    return PadicInt(p_, k_, coeffs_[i]);
}

PadicInt ResiduePoly::leading_coeff() const {
    if (is_zero()) throw ZeroPolynomial("zero polynomial has no leading coefficient");
    return PadicInt(p_, k_, coeffs_.back());
}

bool ResiduePoly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

ResiduePoly ResiduePoly::reduce_precision(unsigned k_new) const {
    if (k_new < 1 || k_new > k_) {
        throw std::invalid_argument("reduce_precision: target precision out of range");
    }
    return ResiduePoly(p_, k_new, coeffs_);
}

ResiduePoly ResiduePoly::extend_precision(unsigned k_new) const {
    if (k_new < k_) throw std::invalid_argument("extend_precision: target below current precision");
    return ResiduePoly(p_, k_new, coeffs_);
}

ResiduePoly poly_add(const ResiduePoly& f, const ResiduePoly& g) {
    require_same_ring(f, g);
    std::vector<mpz_class> out(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < f.coeffs().size()) out[i] += f.coeffs()[i];
        if (i < g.coeffs().size()) out[i] += g.coeffs()[i];
    }
    return ResiduePoly(f.prime(), f.precision(), std::move(out));
}

ResiduePoly poly_sub(const ResiduePoly& f, const ResiduePoly& g) {
    return poly_add(f, poly_neg(g));
}

ResiduePoly poly_neg(const ResiduePoly& f) {
    std::vector<mpz_class> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(-c);
    return ResiduePoly(f.prime(), f.precision(), std::move(out));
}

ResiduePoly poly_mul(const ResiduePoly& f, const ResiduePoly& g) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return ResiduePoly::zero(f.prime(), f.precision());
    std::vector<mpz_class> out(f.coeffs().size() + g.coeffs().size() - 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            out[i + j] += f.coeffs()[i] * g.coeffs()[j];
        }
    }
    return ResiduePoly(f.prime(), f.precision(), std::move(out));
}

ResiduePoly poly_scale(const PadicInt& c, const ResiduePoly& f) {
    if (c.prime() != f.prime() || c.precision() != f.precision()) {
        throw std::invalid_argument("scalar and polynomial live in different rings");
    }
    std::vector<mpz_class> out;
    out.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) out.push_back(c.residue() * a);
    return ResiduePoly(f.prime(), f.precision(), std::move(out));
}

DivisionResult divmod_unit_lc(const ResiduePoly& f, const ResiduePoly& g) {
    require_same_ring(f, g);
    if (g.is_zero()) throw DivisionByZeroPolynomial("division by the zero polynomial");
    if (!g.leading_coeff().is_unit()) {
        throw NonUnitLeadingCoefficient("leading coefficient of divisor is not a unit");
    }
    const mpz_class lc_inv = g.leading_coeff().invert_unit().residue();
    const mpz_class& mod = f.modulus();
    const int dg = g.degree();

    std::vector<mpz_class> rem = f.coeffs();
    auto rem_degree = [&rem]() {
        int d = static_cast<int>(rem.size()) - 1;
        while (d >= 0 && rem[static_cast<std::size_t>(d)] == 0) --d;
        return d;
    };

    int dr = rem_degree();
    std::vector<mpz_class> quot;
    if (dr >= dg) quot.assign(static_cast<std::size_t>(dr - dg + 1), mpz_class(0));

    while (dr >= dg) {
        mpz_class factor = rem[static_cast<std::size_t>(dr)] * lc_inv;
        mpz_mod(factor.get_mpz_t(), factor.get_mpz_t(), mod.get_mpz_t());
        const int shift = dr - dg;
        quot[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= dg; ++i) {
            mpz_class& r = rem[static_cast<std::size_t>(i + shift)];
            r -= factor * g.coeffs()[static_cast<std::size_t>(i)];
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
        }
        dr = rem_degree();
    }
    return DivisionResult{ResiduePoly(f.prime(), f.precision(), std::move(quot)),
                          ResiduePoly(f.prime(), f.precision(), std::move(rem))};
}

ResiduePoly derivative(const ResiduePoly& f) {
    if (f.degree() < 1) return ResiduePoly::zero(f.prime(), f.precision());
    std::vector<mpz_class> out(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        mpz_class mult = mpz_class(static_cast<unsigned long>(i)) % f.modulus();
        out[i - 1] = mult * f.coeffs()[i];
    }
    return ResiduePoly(f.prime(), f.precision(), std::move(out));
}

ResiduePoly gcd_prime_field(const ResiduePoly& f, const ResiduePoly& g) {
    require_prime_field(f, "gcd_prime_field");
    require_same_ring(f, g);
    if (f.is_zero() && g.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    ResiduePoly a = f, b = g;
    while (!b.is_zero()) {
        ResiduePoly r = divmod_unit_lc(a, b).remainder;
        a = b;
        b = r;
    }
    return poly_scale(a.leading_coeff().invert_unit(), a);
}

ExtendedGcdResult extended_gcd_prime_field(const ResiduePoly& f, const ResiduePoly& g) {
    require_prime_field(f, "extended_gcd_prime_field");
    require_same_ring(f, g);
    if (f.is_zero() && g.is_zero()) throw BothZero("gcd(0, 0) is undefined");

    const ResiduePoly zero = ResiduePoly::zero(f.prime(), 1);
    const ResiduePoly one = ResiduePoly::from_ints(f.prime(), 1, {1});
    ResiduePoly r0 = f, r1 = g;
    ResiduePoly a0 = one, a1 = zero;  // a_i * f + b_i * g = r_i
    ResiduePoly b0 = zero, b1 = one;
    while (!r1.is_zero()) {
        DivisionResult dv = divmod_unit_lc(r0, r1);
        ResiduePoly r2 = dv.remainder;
        ResiduePoly a2 = poly_sub(a0, poly_mul(dv.quotient, a1));
        ResiduePoly b2 = poly_sub(b0, poly_mul(dv.quotient, b1));
        r0 = r1; r1 = r2;
        a0 = a1; a1 = a2;
        b0 = b1; b1 = b2;
    }
    PadicInt lc_inv = r0.leading_coeff().invert_unit();
    return ExtendedGcdResult{poly_scale(lc_inv, r0), poly_scale(lc_inv, a0),
                             poly_scale(lc_inv, b0)};
}

PadicInt resultant_prime_field(const ResiduePoly& f, const ResiduePoly& g) {
    require_prime_field(f, "resultant_prime_field");
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant of the zero polynomial");

    const std::uint64_t p = f.prime();
    const int df = f.degree(), dg = g.degree();
    if (df == 0 && dg == 0) return PadicInt::one(p, 1);
    if (dg == 0) {
        mpz_class r;
        mpz_powm_ui(r.get_mpz_t(), g.coeffs()[0].get_mpz_t(), static_cast<unsigned long>(df),
                    f.modulus().get_mpz_t());
        return PadicInt(p, 1, std::move(r));
    }
    if (df == 0) {
        mpz_class r;
        mpz_powm_ui(r.get_mpz_t(), f.coeffs()[0].get_mpz_t(), static_cast<unsigned long>(dg),
                    g.modulus().get_mpz_t());
        return PadicInt(p, 1, std::move(r));
    }

    // Sylvester matrix, (df+dg) x (df+dg): dg rows of f's coefficients then
    // df rows of g's, highest degree first, each shifted one column right.
    const int n = df + dg;
    std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(n),
                                          std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
    for (int row = 0; row < dg; ++row) {
        for (int j = 0; j <= df; ++j) {
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                f.coeffs()[static_cast<std::size_t>(df - j)];
        }
    }
    for (int row = 0; row < df; ++row) {
        for (int j = 0; j <= dg; ++j) {
            m[static_cast<std::size_t>(dg + row)][static_cast<std::size_t>(row + j)] =
                g.coeffs()[static_cast<std::size_t>(dg - j)];
        }
    }

    // Gaussian elimination over Z/pZ.
    const mpz_class mod = f.modulus();
    mpz_class det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return PadicInt::zero(p, 1);
        if (pivot != col) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            det = -det;
        }
        const mpz_class& pv = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det = (det * pv) % mod;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), pv.get_mpz_t(), mod.get_mpz_t());
        for (int row = col + 1; row < n; ++row) {
            mpz_class factor =
                (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] * inv) % mod;
            if (factor == 0) continue;
            for (int j = col; j < n; ++j) {
                mpz_class& e = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                e -= factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                mpz_mod(e.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
            }
        }
    }
    return PadicInt(p, 1, std::move(det));
}

PadicInt discriminant_prime_field(const ResiduePoly& f) {
    require_prime_field(f, "discriminant_prime_field");
    if (!f.is_monic()) throw NonMonic("discriminant requires a monic polynomial");
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant requires degree >= 1");
    ResiduePoly fp = derivative(f);
    if (fp.is_zero()) return PadicInt::zero(f.prime(), 1);
    PadicInt res = resultant_prime_field(f, fp);
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) res = -res;
    return res;
}

std::string to_string(const ResiduePoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const mpz_class& c = f.coeffs()[i];
        if (c == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

// Hand-rolled term scanner so that errors carry a column position.
class PolyParser {
  public:
    PolyParser(const std::string& text, std::uint64_t p, unsigned k)
        : text_(text), p_(p), k_(k), modulus_(prime_power(p, k)) {}

    ResiduePoly parse() {
        std::vector<mpz_class> coeffs;
        skip_ws();
        if (at_end()) throw PolyParseError("empty polynomial", column());
        bool negate = consume_sign(false);
        parse_term(coeffs, negate);
        skip_ws();
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-') {
                throw PolyParseError(std::string("expected '+' or '-', got '") + c + "'", column());
            }
            ++pos_;
            skip_ws();
            parse_term(coeffs, c == '-');
            skip_ws();
        }
        return ResiduePoly(p_, k_, std::move(coeffs));
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    std::size_t column() const { return pos_ + 1; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool consume_sign(bool current) {
        while (!at_end() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') current = !current;
            ++pos_;
            skip_ws();
        }
        return current;
    }

    mpz_class parse_integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw PolyParseError("expected an integer", column());
        return mpz_class(text_.substr(start, pos_ - start), 10);
    }

    unsigned long parse_exponent() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw PolyParseError("expected an exponent after '^'", column());
        }
        mpz_class e = parse_integer();
        if (!e.fits_ulong_p()) throw PolyParseError("exponent too large", column());
        return e.get_ui();
    }

    void parse_term(std::vector<mpz_class>& coeffs, bool negate) {
        mpz_class coeff = 1;
        bool have_coeff = false;
        unsigned long exponent = 0;
        bool have_x = false;

        if (at_end()) throw PolyParseError("expected a term", column());
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_integer();
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        if (!at_end() && (peek() == 'x' || peek() == 'X')) {
            ++pos_;
            have_x = true;
            exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                exponent = parse_exponent();
            }
        }
        if (!have_coeff && !have_x) {
            throw PolyParseError(std::string("unexpected character '") + peek() + "'", column());
        }
        if (negate) coeff = -coeff;
        if (exponent > 4096) throw PolyParseError("exponent too large", column());
        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
        coeffs[exponent] += coeff;
        mpz_mod(coeffs[exponent].get_mpz_t(), coeffs[exponent].get_mpz_t(), modulus_.get_mpz_t());
    }

    const std::string& text_;
    std::uint64_t p_;
    unsigned k_;
    mpz_class modulus_;
    std::size_t pos_ = 0;
};

}  // namespace

ResiduePoly parse_poly(const std::string& text, std::uint64_t p, unsigned k) {
    return PolyParser(text, p, k).parse();
}

}  // namespace padic
