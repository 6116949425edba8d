#ifndef DISCSOS_GAUSS_HPP
#define DISCSOS_GAUSS_HPP

#include <ostream>
#include <stdexcept>

#include "discsos/rational.hpp"

namespace discsos {

// Element of S(i): pair (re, im) with i^2 = -1. With S = Rational this is
// the field Q(i) of Gaussian rationals.
template <class S>
struct Gauss {
    S re{};
    S im{};

    Gauss() = default;
    Gauss(long n) : re(n), im() {}
    Gauss(S r) : re(std::move(r)), im() {}
    Gauss(S r, S i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    Gauss conj() const { return Gauss(re, -im); }
    S norm_sq() const { return re * re + im * im; }

    Gauss operator-() const { return Gauss(-re, -im); }
    Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
    Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
    Gauss& operator*=(const Gauss& o) {
        S nre = re * o.re - im * o.im;
        S nim = re * o.im + im * o.re;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }
    Gauss& operator/=(const Gauss& o) {
        S n = o.norm_sq();
        if (n.is_zero()) throw std::domain_error("Gauss: division by zero");
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
};

using GaussQ = Gauss<Rational>;

template <class S>
Gauss<S> div_exact(const Gauss<S>& a, const Gauss<S>& b) { return a / b; }

template <class S>
std::ostream& operator<<(std::ostream& os, const Gauss<S>& z) {
    return os << "(" << z.re << "+" << z.im << "i)";
}

} // namespace discsos

#endif
