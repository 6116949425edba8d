#ifndef DISCSOS_RATIONAL_HPP
#define DISCSOS_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace discsos {

// Exact rational scalar on top of GMP's canonical mpq representation.
// Canonical form is maintained by GMP: gcd(|num|, den) = 1, den >= 1,
// zero is stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& num, const mpz_class& den = 1) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p" and "p/q" in base 10 (no floating point anywhere).
    static Rational parse(const std::string& s) {
        mpq_class v;
        try {
            v = mpq_class(s, 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
        }
        if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator in \"" + s + "\"");
        v.canonicalize();
        return Rational(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    // Canonical "p" / "p/q" form, as emitted into certificates.
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(unsigned e) const {
        if (e == 0) return Rational(1);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        return Rational(n, d);
    }

    // Exact square root of a non-negative rational; nullopt when the value
    // is not a perfect square in Q.
    std::optional<Rational> exact_sqrt() const {
        if (sign() < 0) return std::nullopt;
        mpz_class num = v_.get_num(), den = v_.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Rational(rn, rd);
    }

private:
    mpq_class v_;
};

// Exact division hook used by the fraction-free elimination kernels.
inline Rational div_exact(const Rational& a, const Rational& b) { return a / b; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace discsos

#endif
