#ifndef DISCSOS_MPOLY_HPP
#define DISCSOS_MPOLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "discsos/rational.hpp"

namespace discsos {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Terms map exponent vectors to nonzero coefficients; the map's ascending
// lexicographic order doubles as the (deterministic) serialization order,
// and its largest key is the lex leading term used for exact division.
//
// Constants are arity-agnostic: a constant polynomial combines with any
// arity, so default-constructed zeros work inside generic matrix kernels.
class MPoly {
public:
    using Exp = std::vector<int>;

    MPoly() : arity_(0) {}
    explicit MPoly(int arity) : arity_(arity) {
        if (arity < 0) throw std::invalid_argument("MPoly: negative arity");
    }

    static MPoly constant(int arity, const Rational& c) {
        MPoly p(arity);
        p.add_term(Exp(static_cast<size_t>(arity), 0), c);
        return p;
    }
    static MPoly variable(int arity, int i) {
        if (i < 0 || i >= arity) throw std::invalid_argument("MPoly: variable index out of range");
        MPoly p(arity);
        Exp e(static_cast<size_t>(arity), 0);
        e[static_cast<size_t>(i)] = 1;
        p.add_term(e, Rational(1));
        return p;
    }
    static MPoly monomial(int arity, Exp e, const Rational& c) {
        MPoly p(arity);
        if (static_cast<int>(e.size()) != arity) throw std::invalid_argument("MPoly: exponent arity mismatch");
        p.add_term(std::move(e), c);
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Exp& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    const std::map<Exp, Rational>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    Rational coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational() : it->second;
    }

    void add_term(Exp e, const Rational& c) {
        if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("MPoly: exponent arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly p(arity_);
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
        return p;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        auto [x, y] = align(a, b);
        MPoly out(x.arity_);
        out.terms_ = x.terms_;
        for (const auto& [e, c] : y.terms_) out.add_term(e, c);
        return out;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        auto [x, y] = align(a, b);
        MPoly out(x.arity_);
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) {
                Exp e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    friend MPoly operator*(const Rational& s, const MPoly& p) {
        MPoly out(p.arity_);
        if (s.is_zero()) return out;
        for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
        return out;
    }
    friend MPoly operator/(const MPoly& p, const Rational& s) {
        if (s.is_zero()) throw std::domain_error("MPoly: division by zero scalar");
        return (Rational(1) / s) * p;
    }

    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        auto [x, y] = align(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned e) const {
        MPoly acc = constant(arity_, Rational(1));
        for (unsigned i = 0; i < e; ++i) acc *= *this;
        return acc;
    }

    MPoly partial(int i) const {
        if (i < 0 || i >= arity_) throw std::invalid_argument("MPoly: variable index out of range");
        MPoly out(arity_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<size_t>(i)];
            if (k == 0) continue;
            Exp ne(e);
            ne[static_cast<size_t>(i)] = k - 1;
            out.add_term(std::move(ne), Rational(k) * c);
        }
        return out;
    }

    Rational eval(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("MPoly: evaluation arity mismatch");
        Rational acc;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t *= point[i].pow(static_cast<unsigned>(e[i]));
            acc += t;
        }
        return acc;
    }

    // Lex leading term (largest exponent vector).
    std::pair<Exp, Rational> leading() const {
        if (terms_.empty()) throw std::domain_error("MPoly: zero polynomial has no leading term");
        return *terms_.rbegin();
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string cstr = it->second.str();
            if (!first) {
                if (cstr[0] == '-') {
                    out << " - ";
                    cstr = cstr.substr(1);
                } else {
                    out << " + ";
                }
            }
            first = false;
            bool has_var = false;
            std::ostringstream mono;
            for (size_t i = 0; i < it->first.size(); ++i) {
                int e = it->first[i];
                if (e == 0) continue;
                if (has_var) mono << "*";
                has_var = true;
                if (i < names.size()) mono << names[i];
                else mono << "x" << (i + 1);
                if (e > 1) mono << "^" << e;
            }
            if (!has_var) {
                out << cstr;
            } else {
                if (cstr != "1") out << cstr << "*";
                out << mono.str();
            }
        }
        return out.str();
    }

private:
    // Promote arity-compatible operands (constants mix with any arity).
    static std::pair<MPoly, MPoly> align(const MPoly& a, const MPoly& b) {
        if (a.arity_ == b.arity_) return {a, b};
        if (a.is_constant()) return {a.with_arity(b.arity_), b};
        if (b.is_constant()) return {a, b.with_arity(a.arity_)};
        throw std::invalid_argument("MPoly: arity mismatch");
    }
    MPoly with_arity(int arity) const {
        MPoly p(arity);
        for (const auto& [e, c] : terms_)
            p.add_term(Exp(static_cast<size_t>(arity), 0), c);
        return p;
    }

    int arity_;
    std::map<Exp, Rational> terms_;
};

// Exact polynomial division (throws if the division is not exact). Used by
// the fraction-free determinant over MPoly entries, where the Bareiss
// recurrence guarantees divisibility.
inline MPoly div_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("MPoly: division by zero polynomial");
    MPoly rem = a;
    MPoly q(std::max(a.arity(), b.arity()));
    auto [eb, cb] = b.leading();
    while (!rem.is_zero()) {
        auto [er, cr] = rem.leading();
        MPoly::Exp qe(er.size(), 0);
        bool divisible = er.size() == eb.size();
        if (divisible)
            for (size_t i = 0; i < er.size(); ++i) {
                if (er[i] < eb[i]) { divisible = false; break; }
                qe[i] = er[i] - eb[i];
            }
        if (!divisible) throw std::domain_error("MPoly: inexact polynomial division");
        MPoly mono = MPoly::monomial(static_cast<int>(qe.size()), qe, cr / cb);
        q += mono;
        rem -= mono * b;
    }
    return q;
}

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

} // namespace discsos

#endif
