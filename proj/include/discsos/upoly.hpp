#ifndef DISCSOS_UPOLY_HPP
#define DISCSOS_UPOLY_HPP

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "discsos/rational.hpp"

namespace discsos {

// Dense univariate polynomial with coefficients in S, stored by ascending
// degree with trailing zeros trimmed. The zero polynomial has an empty
// coefficient list and degree() == -1.
template <class S>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(S v) { return UPoly(std::vector<S>{std::move(v)}); }
    static UPoly monomial(int deg, S coeff) {
        std::vector<S> c(static_cast<size_t>(deg) + 1);
        c[static_cast<size_t>(deg)] = std::move(coeff);
        return UPoly(std::move(c));
    }
    // t - root
    static UPoly linear_factor(const S& root) { return UPoly(std::vector<S>{-root, S(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of t^i; 0 beyond the stored range.
    S coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return S();
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<S>& coeffs() const { return c_; }
    S leading() const {
        if (is_zero()) throw std::domain_error("UPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == S(1); }

    UPoly operator-() const {
        std::vector<S> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return UPoly(std::move(c));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<S> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const S& s, const UPoly& p) {
        std::vector<S> c(p.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
        return UPoly(std::move(c));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    // Multiply by t^k.
    UPoly shift(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<S> c(c_.size() + static_cast<size_t>(k));
        for (size_t i = 0; i < c_.size(); ++i) c[i + static_cast<size_t>(k)] = c_[i];
        return UPoly(std::move(c));
    }

    S eval(const S& x) const {
        S acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<S> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = S(static_cast<long>(i)) * c_[i];
        return UPoly(std::move(c));
    }

    // Euclidean division over a field scalar: *this = q*d + r with deg r < deg d.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
        UPoly r = *this;
        std::vector<S> q;
        int dd = d.degree();
        if (r.degree() >= dd) q.assign(static_cast<size_t>(r.degree() - dd) + 1, S());
        while (!r.is_zero() && r.degree() >= dd) {
            int k = r.degree() - dd;
            S f = r.leading() / d.leading();
            q[static_cast<size_t>(k)] = f;
            for (int i = 0; i <= dd; ++i)
                r.c_[static_cast<size_t>(i + k)] -= f * d.c_[static_cast<size_t>(i)];
            r.trim();
        }
        return {UPoly(std::move(q)), r};
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const S& c = c_[static_cast<size_t>(i)];
            if (c == S()) continue;
            std::ostringstream cs;
            cs << c;
            std::string cstr = cs.str();
            if (!first) {
                if (!cstr.empty() && cstr[0] == '-') {
                    out << " - ";
                    cstr = cstr.substr(1);
                } else {
                    out << " + ";
                }
            }
            first = false;
            if (i == 0) {
                out << cstr;
            } else {
                if (cstr != "1") out << cstr << "*";
                out << var;
                if (i > 1) out << "^" << i;
            }
        }
        return out.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == S()) c_.pop_back();
    }

    std::vector<S> c_;
};

using UPolyQ = UPoly<Rational>;

// Exact Lagrange interpolation through distinct nodes.
template <class S>
UPoly<S> interpolate(const std::vector<std::pair<S, S>>& points) {
    UPoly<S> acc;
    for (size_t k = 0; k < points.size(); ++k) {
        UPoly<S> lk = UPoly<S>::constant(S(1));
        S denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == k) continue;
            lk = lk * UPoly<S>::linear_factor(points[j].first);
            denom = denom * (points[k].first - points[j].first);
        }
        acc = acc + (points[k].second / denom) * lk;
    }
    return acc;
}

template <class S>
std::ostream& operator<<(std::ostream& os, const UPoly<S>& p) { return os << p.str(); }

} // namespace discsos

#endif
