#ifndef DISCSOS_RESULTANT_HPP
#define DISCSOS_RESULTANT_HPP

#include <stdexcept>

#include "discsos/matrix.hpp"
#include "discsos/upoly.hpp"

namespace discsos {

template <class S>
S pow_scalar(const S& base, int e) {
    S acc(1);
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

// Sylvester-matrix resultant, evaluated with the fraction-free determinant.
template <class S>
S resultant_sylvester(const UPoly<S>& p, const UPoly<S>& q) {
    if (p.is_zero() || q.is_zero()) return S();
    int m = p.degree(), n = q.degree();
    if (m == 0) return pow_scalar(p.coeff(0), n);
    if (n == 0) return pow_scalar(q.coeff(0), m);
    Mat<S> syl(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            syl(i, i + j) = p.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            syl(n + i, i + j) = q.coeff(n - j);
    return det_bareiss(std::move(syl));
}

// Independent route: Euclidean remainder sequence over the coefficient
// field, using Res(p,q) = (-1)^{mn} lc(q)^{m - deg r} Res(q, r) with
// r = p mod q. Serves as the cross-check oracle for the Sylvester route.
template <class S>
S resultant_euclid(UPoly<S> p, UPoly<S> q) {
    if (p.is_zero() || q.is_zero()) return S();
    int m = p.degree(), n = q.degree();
    if (m == 0) return pow_scalar(p.coeff(0), n);
    if (n == 0) return pow_scalar(q.coeff(0), m);
    if (m < n) {
        S r = resultant_euclid(std::move(q), std::move(p));
        return (m % 2 == 1 && n % 2 == 1) ? -r : r;
    }
    UPoly<S> rem = p.divmod(q).second;
    if (rem.is_zero()) return S();
    S tail = resultant_euclid(q, rem);
    S scale = pow_scalar(q.leading(), m - rem.degree());
    S res = scale * tail;
    return (m % 2 == 1 && n % 2 == 1) ? -res : res;
}

// Discriminant of a monic polynomial, sign-normalized so that the result is
// prod_{i<j} (lambda_i - lambda_j)^2 — non-negative whenever all roots are
// real. disc(p) = (-1)^{n(n-1)/2} Res(p, p').
template <class S>
S poly_discriminant(const UPoly<S>& p, bool sylvester_route = true) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("poly_discriminant: need a monic polynomial of degree >= 1");
    if (!p.is_monic())
        throw std::domain_error("poly_discriminant: polynomial is not monic (normalize first)");
    int n = p.degree();
    if (n == 1) return S(1);
    UPoly<S> dp = p.derivative();
    S res = sylvester_route ? resultant_sylvester(p, dp) : resultant_euclid(p, dp);
    return (n * (n - 1) / 2) % 2 == 1 ? -res : res;
}

} // namespace discsos

#endif
