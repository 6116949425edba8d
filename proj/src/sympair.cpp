#include "discsos/sympair.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace discsos {

namespace {

Mat<GaussQ> unit_matrix(int n, int i, int j, GaussQ v) {
    Mat<GaussQ> m(n, n);
    m(i, j) = std::move(v);
    return m;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<int> root_form(int l, int i, int ci, int j = -1, int cj = 0) {
    std::vector<int> f(static_cast<size_t>(l), 0);
    f[static_cast<size_t>(i)] = ci;
    if (j >= 0) f[static_cast<size_t>(j)] = cj;
    return f;
}

void validate_root_datum(const PairData& pd) {
    long long mult_sum = 0;
    for (const auto& root : pd.roots.positive_roots) {
        if (static_cast<int>(root.coeffs.size()) != pd.l)
            throw std::logic_error("root datum: form arity != rank");
        mult_sum += root.multiplicity;
    }
    if (mult_sum != pd.r - pd.l)
        throw std::logic_error("root datum: sum of multiplicities != r - l");
    if (pd.roots.centralizer_dim + mult_sum != pd.s)
        throw std::logic_error("root datum: s != dim m + sum of multiplicities");
    long long expo_sum = 0;
    for (int e : pd.roots.exponents) expo_sum += e;
    if (expo_sum != static_cast<long long>(pd.roots.positive_roots.size()))
        throw std::logic_error("root datum: sum of exponents != number of positive roots");
}

void build_glnr(PairData& pd) {
    int n = pd.id.p;
    pd.ambient = n;
    pd.r = n * (n + 1) / 2;
    pd.s = n * (n - 1) / 2;
    pd.l = n;
    pd.ip_scale = Rational(1);
    for (int i = 0; i < n; ++i) {
        pd.p_basis.push_back(unit_matrix(n, i, i, GaussQ(1)));
        pd.p_weights.push_back(Rational(1));
        pd.cartan_indices.push_back(i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat<GaussQ> m(n, n);
            m(i, j) = GaussQ(1);
            m(j, i) = GaussQ(1);
            pd.p_basis.push_back(std::move(m));
            pd.p_weights.push_back(Rational(2));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat<GaussQ> m(n, n);
            m(i, j) = GaussQ(1);
            m(j, i) = GaussQ(-1);
            pd.k_basis.push_back(std::move(m));
            pd.k_weights.push_back(Rational(2));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pd.roots.positive_roots.push_back({root_form(n, i, 1, j, -1), 1});
    pd.roots.centralizer_dim = 0;
    for (int i = 0; i < n; ++i) pd.roots.exponents.push_back(i);
    pd.roots.weyl_order = factorial(n);
}

void build_glnc(PairData& pd) {
    int n = pd.id.p;
    pd.ambient = n;
    pd.complex_entries = true;
    pd.r = n * n;
    pd.s = n * n;
    pd.l = n;
    pd.ip_scale = Rational(1);
    const GaussQ one(1);
    const GaussQ iu(Rational(0), Rational(1));
    // p = hermitian matrices: E_ii, then E_ij + E_ji and i(E_ij - E_ji).
    for (int i = 0; i < n; ++i) {
        pd.p_basis.push_back(unit_matrix(n, i, i, one));
        pd.p_weights.push_back(Rational(1));
        pd.cartan_indices.push_back(i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat<GaussQ> h(n, n);
            h(i, j) = one;
            h(j, i) = one;
            pd.p_basis.push_back(std::move(h));
            pd.p_weights.push_back(Rational(2));
            Mat<GaussQ> s(n, n);
            s(i, j) = iu;
            s(j, i) = -iu;
            pd.p_basis.push_back(std::move(s));
            pd.p_weights.push_back(Rational(2));
        }
    // k = anti-hermitian matrices: i E_ii, then E_ij - E_ji and i(E_ij + E_ji).
    for (int i = 0; i < n; ++i) {
        pd.k_basis.push_back(unit_matrix(n, i, i, iu));
        pd.k_weights.push_back(Rational(1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat<GaussQ> a(n, n);
            a(i, j) = one;
            a(j, i) = -one;
            pd.k_basis.push_back(std::move(a));
            pd.k_weights.push_back(Rational(2));
            Mat<GaussQ> b(n, n);
            b(i, j) = iu;
            b(j, i) = iu;
            pd.k_basis.push_back(std::move(b));
            pd.k_weights.push_back(Rational(2));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pd.roots.positive_roots.push_back({root_form(n, i, 1, j, -1), 2});
    pd.roots.centralizer_dim = n; // diagonal anti-hermitian matrices
    for (int i = 0; i < n; ++i) pd.roots.exponents.push_back(i);
    pd.roots.weyl_order = factorial(n);
}

void build_sopq(PairData& pd) {
    int p = pd.id.p, q = pd.id.q;
    int n = p + q;
    pd.ambient = n;
    pd.r = p * q;
    pd.s = p * (p - 1) / 2 + q * (q - 1) / 2;
    pd.l = q;
    pd.ip_scale = Rational(1, 2);
    // p: blocks [[0, B], [B^T, 0]], basis indexed by the entry (a, b) of B
    // in row-major order; the Cartan subspace is the diagonal a = b.
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b) {
            Mat<GaussQ> m(n, n);
            m(a, p + b) = GaussQ(1);
            m(p + b, a) = GaussQ(1);
            pd.p_basis.push_back(std::move(m));
            pd.p_weights.push_back(Rational(1));
            if (a == b) pd.cartan_indices.push_back(a * q + b);
        }
    // k = so(p) x so(q), block diagonal.
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            Mat<GaussQ> m(n, n);
            m(i, j) = GaussQ(1);
            m(j, i) = GaussQ(-1);
            pd.k_basis.push_back(std::move(m));
            pd.k_weights.push_back(Rational(1));
        }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            Mat<GaussQ> m(n, n);
            m(p + i, p + j) = GaussQ(1);
            m(p + j, p + i) = GaussQ(-1);
            pd.k_basis.push_back(std::move(m));
            pd.k_weights.push_back(Rational(1));
        }

    if (q == 1) {
        // Single positive root xi with multiplicity p - 1.
        pd.roots.positive_roots.push_back({root_form(1, 0, 1), p - 1});
        pd.roots.centralizer_dim = (p - 1) * (p - 2) / 2; // dim so(p-1)
        pd.roots.exponents = {1};
        pd.roots.weyl_order = 2;
    } else if (q == p) {
        // D_p: x_i - x_j and x_i + x_j, all with multiplicity 1.
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) {
                pd.roots.positive_roots.push_back({root_form(q, i, 1, j, -1), 1});
                pd.roots.positive_roots.push_back({root_form(q, i, 1, j, 1), 1});
            }
        pd.roots.centralizer_dim = 0;
        // Generator degrees 2, 4, ..., 2(p-1) and p (the determinant).
        std::vector<int> degs;
        for (int j = 1; j < p; ++j) degs.push_back(2 * j);
        degs.push_back(p);
        std::stable_sort(degs.begin(), degs.end());
        long long order = 1;
        for (int d : degs) {
            pd.roots.exponents.push_back(d - 1);
            order *= d;
        }
        std::stable_sort(pd.roots.exponents.begin(), pd.roots.exponents.end());
        pd.roots.weyl_order = order;
    } else {
        // 1 < q < p: B_q system, x_i +- x_j with multiplicity 1 and x_i with
        // multiplicity p - q. Unlike the q = 1 and q = p data this is not a
        // tabulated special case, so it is flagged derived and
        // cross-validated against the computed characteristic polynomial at
        // a regular point below.
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) {
                pd.roots.positive_roots.push_back({root_form(q, i, 1, j, -1), 1});
                pd.roots.positive_roots.push_back({root_form(q, i, 1, j, 1), 1});
            }
        for (int i = 0; i < q; ++i)
            pd.roots.positive_roots.push_back({root_form(q, i, 1), p - q});
        pd.roots.centralizer_dim = (p - q) * (p - q - 1) / 2; // dim so(p-q)
        long long order = 1;
        for (int j = 1; j <= q; ++j) {
            pd.roots.exponents.push_back(2 * j - 1);
            order *= 2 * j;
        }
        pd.roots.weyl_order = order;
        pd.roots.derived = true;
    }
}

} // namespace

PairId PairId::glnr(int n) {
    if (n < 2) throw std::invalid_argument("glnr: need n >= 2");
    return PairId{PairFamily::GLnR, n, 0};
}

PairId PairId::glnc(int n) {
    if (n < 2) throw std::invalid_argument("glnc: need n >= 2");
    return PairId{PairFamily::GLnC, n, 0};
}

PairId PairId::sopq(int p, int q) {
    if (q < 1 || p < q || p < 2) throw std::invalid_argument("sopq: need p >= q >= 1 and p >= 2");
    return PairId{PairFamily::SOpq, p, q};
}

PairId PairId::parse(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("pair spec: expected \"<family>:<params>\", got \"" + spec + "\"");
    std::string fam = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);
    auto parse_int = [&](const std::string& s) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("pair spec: bad integer in \"" + spec + "\"");
        }
        if (pos != s.size()) throw std::invalid_argument("pair spec: bad integer in \"" + spec + "\"");
        return v;
    };
    if (fam == "glnr") return glnr(parse_int(params));
    if (fam == "glnc") return glnc(parse_int(params));
    if (fam == "sopq") {
        auto comma = params.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("pair spec: sopq needs \"p,q\", got \"" + spec + "\"");
        return sopq(parse_int(params.substr(0, comma)), parse_int(params.substr(comma + 1)));
    }
    throw std::invalid_argument("pair spec: unknown family \"" + fam + "\"");
}

std::string PairId::str() const {
    std::ostringstream out;
    switch (family) {
    case PairFamily::GLnR: out << "glnr:" << p; break;
    case PairFamily::GLnC: out << "glnc:" << p; break;
    case PairFamily::SOpq: out << "sopq:" << p << "," << q; break;
    }
    return out.str();
}

Rational re_trace_pairing(const Mat<GaussQ>& a, const Mat<GaussQ>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("re_trace_pairing: dimension mismatch");
    Rational acc;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const GaussQ& x = a(i, j);
            const GaussQ& y = b(i, j);
            if (x.is_zero() || y.is_zero()) continue;
            acc += x.re * y.re + x.im * y.im; // Re(x * conj(y))
        }
    return acc;
}

Rational pair_inner(const PairData& pd, const Mat<GaussQ>& a, const Mat<GaussQ>& b) {
    return pd.ip_scale * re_trace_pairing(a, b);
}

Mat<GaussQ> commutator(const Mat<GaussQ>& a, const Mat<GaussQ>& b) {
    return a * b - b * a;
}

Mat<GaussQ> pelement_matrix(const PairData& pd, const std::vector<Rational>& coords) {
    if (static_cast<int>(coords.size()) != pd.r)
        throw std::invalid_argument("pelement: expected " + std::to_string(pd.r) + " coordinates");
    Mat<GaussQ> m(pd.ambient, pd.ambient);
    for (int i = 0; i < pd.r; ++i) {
        if (coords[static_cast<size_t>(i)].is_zero()) continue;
        m = m + GaussQ(coords[static_cast<size_t>(i)]) * pd.p_basis[static_cast<size_t>(i)];
    }
    return m;
}

Mat<Rational> real_part(const Mat<GaussQ>& m) {
    Mat<Rational> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).im.is_zero())
                throw std::domain_error("real_part: matrix has a nonzero imaginary entry");
            out(i, j) = m(i, j).re;
        }
    return out;
}

Mat<Rational> pelement_matrix_real(const PairData& pd, const std::vector<Rational>& coords) {
    return real_part(pelement_matrix(pd, coords));
}

std::vector<Rational> coordinates_in_basis(const PairData& pd, const Mat<GaussQ>& m,
                                           const std::vector<Mat<GaussQ>>& basis,
                                           const std::vector<Rational>& weights) {
    std::vector<Rational> coords(basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
        coords[i] = pair_inner(pd, m, basis[i]) / weights[i];
    return coords;
}

OpMatrices op_matrices(const PairData& pd, const std::vector<Rational>& coords) {
    Mat<GaussQ> x = pelement_matrix(pd, coords);
    OpMatrices out;
    out.A = Mat<Rational>(pd.s, pd.r);
    out.B = Mat<Rational>(pd.r, pd.s);
    for (int j = 0; j < pd.r; ++j) {
        auto col = coordinates_in_basis(pd, commutator(x, pd.p_basis[static_cast<size_t>(j)]),
                                        pd.k_basis, pd.k_weights);
        for (int i = 0; i < pd.s; ++i) out.A(i, j) = std::move(col[static_cast<size_t>(i)]);
    }
    for (int j = 0; j < pd.s; ++j) {
        auto col = coordinates_in_basis(pd, commutator(x, pd.k_basis[static_cast<size_t>(j)]),
                                        pd.p_basis, pd.p_weights);
        for (int i = 0; i < pd.r; ++i) out.B(i, j) = std::move(col[static_cast<size_t>(i)]);
    }
    out.f = out.B * out.A;
    out.g = out.A * out.B;
    return out;
}

Mat<Rational> ad_matrix(const PairData& pd, const std::vector<Rational>& coords) {
    OpMatrices om = op_matrices(pd, coords);
    Mat<Rational> ad(pd.r + pd.s, pd.r + pd.s);
    for (int i = 0; i < pd.r; ++i)
        for (int j = 0; j < pd.s; ++j)
            ad(i, pd.r + j) = om.B(i, j);
    for (int i = 0; i < pd.s; ++i)
        for (int j = 0; j < pd.r; ++j)
            ad(pd.r + i, j) = om.A(i, j);
    return ad;
}

CharPolys charpolys(const PairData& pd, const std::vector<Rational>& coords) {
    OpMatrices om = op_matrices(pd, coords);
    return {charpoly(om.f), charpoly(om.g)};
}

Rational signed_coeff(const UPolyQ& cp, int k) {
    Rational c = cp.coeff(cp.degree() - k);
    return (k % 2 == 1) ? -c : c;
}

bool charpoly_bridge_holds(const PairData& pd, const CharPolys& cp) {
    return cp.cf.shift(pd.s) == cp.cg.shift(pd.r);
}

bool on_cartan(const PairData& pd, const std::vector<Rational>& coords) {
    std::vector<bool> is_cartan(static_cast<size_t>(pd.r), false);
    for (int idx : pd.cartan_indices) is_cartan[static_cast<size_t>(idx)] = true;
    for (int i = 0; i < pd.r; ++i)
        if (!is_cartan[static_cast<size_t>(i)] && !coords[static_cast<size_t>(i)].is_zero())
            return false;
    return true;
}

std::vector<Rational> cartan_coords_of(const PairData& pd, const std::vector<Rational>& coords) {
    std::vector<Rational> a(static_cast<size_t>(pd.l));
    for (int j = 0; j < pd.l; ++j)
        a[static_cast<size_t>(j)] = coords[static_cast<size_t>(pd.cartan_indices[static_cast<size_t>(j)])];
    return a;
}

std::vector<Rational> cartan_to_full(const PairData& pd, const std::vector<Rational>& a) {
    if (static_cast<int>(a.size()) != pd.l)
        throw std::invalid_argument("cartan_to_full: expected " + std::to_string(pd.l) + " coordinates");
    std::vector<Rational> coords(static_cast<size_t>(pd.r));
    for (int j = 0; j < pd.l; ++j)
        coords[static_cast<size_t>(pd.cartan_indices[static_cast<size_t>(j)])] = a[static_cast<size_t>(j)];
    return coords;
}

std::vector<Rational> regular_cartan_point(const PairData& pd) {
    std::vector<Rational> a(static_cast<size_t>(pd.l));
    for (int j = 0; j < pd.l; ++j) a[static_cast<size_t>(j)] = Rational(j + 1);
    return a;
}

Rational eval_root(const RootEntry& root, const std::vector<Rational>& a) {
    Rational v;
    for (size_t i = 0; i < root.coeffs.size(); ++i)
        if (root.coeffs[i] != 0) v += Rational(root.coeffs[i]) * a[i];
    return v;
}

Rational discriminant(const PairData& pd, const std::vector<Rational>& coords, DiscRoute route) {
    switch (route) {
    case DiscRoute::CoeffF: {
        CharPolys cp = charpolys(pd, coords);
        return signed_coeff(cp.cf, pd.r - pd.l);
    }
    case DiscRoute::CoeffG: {
        CharPolys cp = charpolys(pd, coords);
        return signed_coeff(cp.cg, pd.r - pd.l);
    }
    case DiscRoute::DetG: {
        if (!pd.rank_maximal)
            throw std::domain_error("discriminant: DetG route unavailable on a pair that is not rank-maximal");
        return det_bareiss(op_matrices(pd, coords).g);
    }
    case DiscRoute::RootProduct: {
        if (!on_cartan(pd, coords))
            throw std::domain_error("discriminant: RootProduct route needs x in the Cartan subspace");
        std::vector<Rational> a = cartan_coords_of(pd, coords);
        Rational prod(1);
        for (const auto& root : pd.roots.positive_roots)
            prod *= eval_root(root, a).pow(static_cast<unsigned>(2 * root.multiplicity));
        return prod;
    }
    }
    throw std::logic_error("discriminant: unknown route");
}

int orbit_dim(const PairData& pd, const std::vector<Rational>& coords) {
    return rank_gauss(op_matrices(pd, coords).A);
}

bool is_rank_maximal(const PairData& pd) { return pd.rank_maximal; }

RootCharPolys root_factored_charpoly(const PairData& pd, const std::vector<Rational>& a) {
    if (static_cast<int>(a.size()) != pd.l)
        throw std::invalid_argument("root_factored_charpoly: expected " + std::to_string(pd.l) + " coordinates");
    UPolyQ core = UPolyQ::constant(Rational(1));
    UPolyQ ad_core = UPolyQ::constant(Rational(1));
    for (const auto& root : pd.roots.positive_roots) {
        Rational lam = eval_root(root, a);
        for (int m = 0; m < root.multiplicity; ++m) {
            core = core * UPolyQ::linear_factor(lam * lam);
            ad_core = ad_core * UPolyQ::linear_factor(lam) * UPolyQ::linear_factor(-lam);
        }
    }
    RootCharPolys out;
    out.cf = core.shift(pd.l);
    out.cg = core.shift(pd.roots.centralizer_dim);
    out.cad = ad_core.shift(pd.roots.centralizer_dim + pd.l);
    return out;
}

PairData build_pair(const PairId& id) {
    PairData pd;
    pd.id = id;
    switch (id.family) {
    case PairFamily::GLnR: build_glnr(pd); break;
    case PairFamily::GLnC: build_glnc(pd); break;
    case PairFamily::SOpq: build_sopq(pd); break;
    }
    if (static_cast<int>(pd.p_basis.size()) != pd.r || static_cast<int>(pd.k_basis.size()) != pd.s ||
        static_cast<int>(pd.cartan_indices.size()) != pd.l)
        throw std::logic_error("build_pair: realization dimensions out of step");
    validate_root_datum(pd);

    // Rank-maximality: det g at a stored regular rational point of a.
    std::vector<Rational> reg = cartan_to_full(pd, regular_cartan_point(pd));
    CharPolys cp = charpolys(pd, reg);
    pd.rank_maximal = !det_bareiss(op_matrices(pd, reg).g).is_zero();

    // A derived root datum must reproduce the computed characteristic
    // polynomial at the regular point exactly.
    if (pd.roots.derived) {
        RootCharPolys rf = root_factored_charpoly(pd, regular_cartan_point(pd));
        if (rf.cf != cp.cf || rf.cg != cp.cg)
            throw std::logic_error("build_pair: derived root datum fails the factored charpoly check");
    }
    return pd;
}

} // namespace discsos
