#include "discsos/sos.hpp"

#include <stdexcept>

#include "discsos/exterior.hpp"
#include "discsos/resultant.hpp"

namespace discsos {

namespace {

using nlohmann::json;

unsigned long long mpz_to_ull(const mpz_class& v) {
    if (!v.fits_ulong_p()) throw std::overflow_error("count does not fit a machine word");
    return v.get_ui();
}

mpz_class factorial_z(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

bool matrix_is_real(const Mat<GaussQ>& z) {
    for (int i = 0; i < z.rows(); ++i)
        for (int j = 0; j < z.cols(); ++j)
            if (!z(i, j).im.is_zero()) return false;
    return true;
}

bool matrix_is_symmetric(const Mat<GaussQ>& z) {
    for (int i = 0; i < z.rows(); ++i)
        for (int j = i + 1; j < z.cols(); ++j)
            if (z(i, j) != z(j, i)) return false;
    return true;
}

Mat<GaussQ> conj_transpose(const Mat<GaussQ>& z) {
    Mat<GaussQ> out(z.cols(), z.rows());
    for (int i = 0; i < z.rows(); ++i)
        for (int j = 0; j < z.cols(); ++j)
            out(j, i) = z(i, j).conj();
    return out;
}

json rational_to_json(const Rational& r) { return r.str(); }

json mpoly_to_json(const MPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term = json::array();
        term.push_back(json(e));
        term.push_back(c.str());
        terms.push_back(std::move(term));
    }
    return terms;
}

json value_to_json(const std::variant<Rational, MPoly>& v) {
    if (std::holds_alternative<Rational>(v)) return rational_to_json(std::get<Rational>(v));
    return mpoly_to_json(std::get<MPoly>(v));
}

Rational rational_from_json(const json& j) {
    if (!j.is_string())
        throw std::invalid_argument("certificate: rationals must be strings \"p/q\", got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

MPoly mpoly_from_json(const json& j, int fallback_arity) {
    if (!j.is_array()) throw std::invalid_argument("certificate: polynomial must be an array of terms");
    int arity = fallback_arity;
    if (!j.empty()) {
        const json& first = j.at(0);
        if (!first.is_array() || first.size() != 2 || !first.at(0).is_array())
            throw std::invalid_argument("certificate: polynomial term must be [[exponents], \"p/q\"]");
        arity = static_cast<int>(first.at(0).size());
    }
    MPoly p(arity);
    for (const json& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw std::invalid_argument("certificate: polynomial term must be [[exponents], \"p/q\"]");
        std::vector<int> e = term.at(0).get<std::vector<int>>();
        p.add_term(std::move(e), rational_from_json(term.at(1)));
    }
    return p;
}

std::variant<Rational, MPoly> value_from_json(const json& j, int fallback_arity) {
    if (j.is_string()) return rational_from_json(j);
    if (j.is_array()) return mpoly_from_json(j, fallback_arity);
    throw std::invalid_argument("certificate: value must be a rational string or a term array");
}

// Target of the Ilyushechkin certificate: D for real symmetric input,
// |D| otherwise. |D| is recovered as the exact square root of D * conj(D);
// the supported input classes make it rational.
Rational ilyushechkin_target(const Mat<GaussQ>& z, bool real_symmetric) {
    GaussQ d = poly_discriminant(charpoly(z));
    if (real_symmetric) {
        if (!d.im.is_zero()) throw std::logic_error("discriminant of a real matrix came out complex");
        return d.re;
    }
    auto mod = d.norm_sq().exact_sqrt();
    if (!mod)
        throw std::domain_error(
            "ilyushechkin: |D| is not rational for this input; exact support covers real "
            "symmetric, hermitian and diagonal normal matrices");
    return *mod;
}

} // namespace

VerifyResult verify_certificate(const SosCertificate& cert) {
    for (size_t i = 0; i < cert.terms.size(); ++i)
        if (!(cert.terms[i].weight > Rational(0)))
            return {false, "term " + std::to_string(i) + ": weight is not positive"};
    if (std::holds_alternative<Rational>(cert.target)) {
        Rational sum;
        for (const SosTerm& t : cert.terms) {
            if (!std::holds_alternative<Rational>(t.witness))
                return {false, "rational target but polynomial witness"};
            const Rational& w = std::get<Rational>(t.witness);
            sum += t.weight * w * w;
        }
        if (sum != std::get<Rational>(cert.target))
            return {false, "sum of weighted squares " + sum.str() + " != target " +
                               std::get<Rational>(cert.target).str()};
        return {true, ""};
    }
    const MPoly& target = std::get<MPoly>(cert.target);
    MPoly sum(target.arity());
    for (const SosTerm& t : cert.terms) {
        if (!std::holds_alternative<MPoly>(t.witness))
            return {false, "polynomial target but rational witness"};
        const MPoly& w = std::get<MPoly>(t.witness);
        sum += t.weight * (w * w);
    }
    if (sum != target) return {false, "sum of weighted squares does not match the target polynomial"};
    return {true, ""};
}

Mat<GaussQ> zstar(const Mat<GaussQ>& z) {
    if (!z.is_square() || z.rows() < 2) throw std::invalid_argument("zstar: need a square matrix of size >= 2");
    int n = z.rows();
    Mat<GaussQ> out(n * n, n);
    Mat<GaussQ> power = Mat<GaussQ>::identity(n);
    for (int k = 0; k < n; ++k) {
        if (k > 0) power = power * z;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i * n + j, k) = power(i, j);
    }
    return out;
}

Mat<Rational> zstar_real(const Mat<Rational>& z) {
    if (!z.is_square() || z.rows() < 2) throw std::invalid_argument("zstar: need a square matrix of size >= 2");
    int n = z.rows();
    Mat<Rational> out(n * n, n);
    Mat<Rational> power = Mat<Rational>::identity(n);
    for (int k = 0; k < n; ++k) {
        if (k > 0) power = power * z;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i * n + j, k) = power(i, j);
    }
    return out;
}

bool is_normal(const Mat<GaussQ>& z) {
    Mat<GaussQ> zc = conj_transpose(z);
    return z * zc == zc * z;
}

SosCertificate ilyushechkin_certificate(const Mat<GaussQ>& z, int threads) {
    if (!z.is_square() || z.rows() < 2) throw std::invalid_argument("ilyushechkin: need a square matrix of size >= 2");
    if (!is_normal(z)) throw std::domain_error("ilyushechkin: input matrix is not normal");
    int n = z.rows();
    bool real_symmetric = matrix_is_real(z) && matrix_is_symmetric(z);

    SosCertificate cert;
    cert.kind = "ilyushechkin";
    cert.target = ilyushechkin_target(z, real_symmetric);

    Mat<GaussQ> zs = zstar(z);
    std::vector<int> all_cols(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) all_cols[static_cast<size_t>(j)] = j;

    auto parts = map_combination_partitions<std::vector<SosTerm>>(
        n * n, n, threads, [&](int first) {
            std::vector<SosTerm> out;
            for_each_combination_with_first(n * n, n, first, [&](const WedgeIndex& rows) {
                GaussQ minor = det_bareiss(zs.submatrix(rows, all_cols));
                if (real_symmetric) {
                    SosTerm t;
                    t.weight = Rational(1);
                    t.witness = minor.re;
                    t.index = rows;
                    out.push_back(std::move(t));
                } else {
                    SosTerm re, im;
                    re.weight = Rational(1);
                    re.witness = minor.re;
                    re.index = rows;
                    re.index.push_back(0);
                    im.weight = Rational(1);
                    im.witness = minor.im;
                    im.index = rows;
                    im.index.push_back(1);
                    out.push_back(std::move(re));
                    out.push_back(std::move(im));
                }
            });
            return out;
        });
    for (auto& part : parts)
        for (auto& t : part) cert.terms.push_back(std::move(t));

    cert.params["n"] = n;
    cert.params["entries"] = real_symmetric ? "real-symmetric" : "complex-normal";
    cert.params["matrix"] = matrix_to_json(z);
    cert.convention["rows"] = "entry pairs (i,j) of the input, row-major";
    cert.convention["columns"] = "matrix powers k = 0..n-1";
    cert.convention["order"] = "row subsets ascending lexicographic";
    cert.convention["index"] = real_symmetric
                                   ? "selected rows of z_*"
                                   : "selected rows of z_*, then component (0 = re, 1 = im)";
    cert.convention["target"] = real_symmetric ? "D" : "|D|";
    return cert;
}

SosCertificate ilyushechkin_certificate(const Mat<Rational>& z, int threads) {
    Mat<GaussQ> zc(z.rows(), z.cols());
    for (int i = 0; i < z.rows(); ++i)
        for (int j = 0; j < z.cols(); ++j)
            zc(i, j) = GaussQ(z(i, j));
    return ilyushechkin_certificate(zc, threads);
}

unsigned long long symmetric_minor_count(int n) {
    if (n < 1) throw std::invalid_argument("symmetric_minor_count: need n >= 1");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n) * (n + 1) / 2, static_cast<unsigned long>(n));
    return mpz_to_ull(b);
}

SosCertificate symmetric_basis_certificate(const Mat<Rational>& x, int threads) {
    if (!x.is_square() || x.rows() < 2)
        throw std::invalid_argument("symmetric-basis: need a square matrix of size >= 2");
    if (x != x.transpose()) throw std::domain_error("symmetric-basis: input matrix is not symmetric");
    int n = x.rows();
    int bigN = n * (n + 1) / 2;

    // Rows of the coordinate matrix: x^k written in {E_ii (weight 1),
    // E_ij + E_ji (weight 2)}; the (i,j) coordinate of a symmetric m on
    // E_ij + E_ji is m_ij.
    std::vector<std::pair<int, int>> basis;
    std::vector<Rational> weights;
    for (int i = 0; i < n; ++i) {
        basis.emplace_back(i, i);
        weights.push_back(Rational(1));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            basis.emplace_back(i, j);
            weights.push_back(Rational(2));
        }

    Mat<Rational> coords(bigN, n);
    Mat<Rational> power = Mat<Rational>::identity(n);
    for (int k = 0; k < n; ++k) {
        if (k > 0) power = power * x;
        for (int b = 0; b < bigN; ++b)
            coords(b, k) = power(basis[static_cast<size_t>(b)].first, basis[static_cast<size_t>(b)].second);
    }

    SosCertificate cert;
    cert.kind = "symmetric-basis";
    cert.target = poly_discriminant(charpoly(x));

    std::vector<int> all_cols(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) all_cols[static_cast<size_t>(j)] = j;
    auto parts = map_combination_partitions<std::vector<SosTerm>>(
        bigN, n, threads, [&](int first) {
            std::vector<SosTerm> out;
            for_each_combination_with_first(bigN, n, first, [&](const WedgeIndex& rows) {
                SosTerm t;
                t.weight = Rational(1);
                for (int r : rows) t.weight *= weights[static_cast<size_t>(r)];
                t.witness = det_bareiss(coords.submatrix(rows, all_cols));
                t.index = rows;
                out.push_back(std::move(t));
            });
            return out;
        });
    for (auto& part : parts)
        for (auto& t : part) cert.terms.push_back(std::move(t));

    Mat<GaussQ> xc(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) xc(i, j) = GaussQ(x(i, j));
    cert.params["n"] = n;
    cert.params["matrix"] = matrix_to_json(xc);
    cert.convention["basis"] = "E_11..E_nn then E_ij+E_ji, i<j, lexicographic";
    cert.convention["weights"] = "products of the squared basis norms (1 for E_ii, 2 for E_ij+E_ji)";
    cert.convention["columns"] = "matrix powers k = 0..n-1 in symmetric-basis coordinates";
    cert.convention["order"] = "row subsets ascending lexicographic";
    cert.convention["index"] = "selected rows";
    return cert;
}

SosCertificate pk_certificate(const PairData& pd, const std::vector<Rational>& coords, int k) {
    if (k < 1 || k > pd.r - pd.l)
        throw std::invalid_argument("pk_certificate: need 1 <= k <= r - l = " + std::to_string(pd.r - pd.l));
    OpMatrices om = op_matrices(pd, coords);

    SosCertificate cert;
    cert.kind = "pk";
    cert.target = signed_coeff(charpoly(om.f), k);

    for_each_combination(pd.s, k, [&](const WedgeIndex& rows) {
        Rational row_w(1);
        for (int j : rows) row_w *= pd.k_weights[static_cast<size_t>(j)];
        for_each_combination(pd.r, k, [&](const WedgeIndex& cols) {
            Rational col_w(1);
            for (int i : cols) col_w *= pd.p_weights[static_cast<size_t>(i)];
            SosTerm t;
            t.weight = row_w / col_w;
            t.witness = det_bareiss(om.A.submatrix(rows, cols));
            t.index = rows;
            t.index.insert(t.index.end(), cols.begin(), cols.end());
            cert.terms.push_back(std::move(t));
        });
    });

    cert.params["pair"] = pd.id.str();
    cert.params["k"] = k;
    cert.params["x"] = coords_to_json(coords);
    cert.convention["matrix"] = "A(x): p -> k in the stored bases";
    cert.convention["index"] = "row k-subset (k_basis) then column k-subset (p_basis)";
    cert.convention["weight"] = "prod selected k-weights / prod selected p-weights";
    cert.convention["order"] = "(row set, column set) ascending lexicographic";
    return cert;
}

SosCertificate rudin_certificate(int k, int n) {
    if (k < 1 || n < 2) throw std::invalid_argument("rudin: need k >= 1 and n >= 2");
    MPoly norm_sq(n);
    for (int i = 0; i < n; ++i) {
        MPoly xi = MPoly::variable(n, i);
        norm_sq += xi * xi;
    }
    SosCertificate cert;
    cert.kind = "rudin";
    cert.target = norm_sq.pow(static_cast<unsigned>(k));

    mpz_class kfac = factorial_z(k);
    // All alpha with |alpha| = k, ascending lex: move one unit of the tail
    // weight leftward at each step, starting from (0, ..., 0, k).
    auto next_composition = [n](std::vector<int>& a) {
        int last = n - 1;
        int tail = 0;
        for (int pos = last; pos >= 1; --pos) {
            tail += a[static_cast<size_t>(pos)];
            if (tail > 0) {
                ++a[static_cast<size_t>(pos - 1)];
                for (int q = pos; q <= last; ++q) a[static_cast<size_t>(q)] = 0;
                a[static_cast<size_t>(last)] = tail - 1;
                return true;
            }
        }
        return false;
    };
    std::vector<int> alpha(static_cast<size_t>(n), 0);
    alpha[static_cast<size_t>(n) - 1] = k;
    do {
        mpz_class denom(1);
        for (int a : alpha) denom *= factorial_z(a);
        SosTerm t;
        t.weight = Rational(kfac, denom);
        t.witness = MPoly::monomial(n, alpha, Rational(1));
        t.index = alpha;
        cert.terms.push_back(std::move(t));
    } while (next_composition(alpha));

    cert.params["k"] = k;
    cert.params["n"] = n;
    cert.convention["index"] = "monomial exponent vector alpha";
    cert.convention["weight"] = "multinomial k!/alpha!";
    cert.convention["order"] = "ascending lexicographic on alpha";
    return cert;
}

unsigned long long dim_P(int k, int n) {
    if (k < 0 || n < 1) throw std::invalid_argument("dim_P: need k >= 0, n >= 1");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k + n - 1), static_cast<unsigned long>(n - 1));
    return mpz_to_ull(b);
}

unsigned long long dim_H(int k, int n) {
    if (k < 1 || n < 2) throw std::invalid_argument("dim_H: need k >= 1, n >= 2");
    mpz_class num = (2 * k + n - 2) * factorial_z(n + k - 3);
    mpz_class den = factorial_z(n - 2) * factorial_z(k);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("dim_H: formula did not divide exactly");
    return mpz_to_ull(q);
}

SosCertificate lift(const SosCertificate& cert) {
    if (!std::holds_alternative<MPoly>(cert.target))
        throw std::domain_error("lift: only polynomial-target certificates can be lifted");
    int n = std::get<MPoly>(cert.target).arity();
    MPoly norm_sq(n);
    for (int i = 0; i < n; ++i) {
        MPoly xi = MPoly::variable(n, i);
        norm_sq += xi * xi;
    }
    SosCertificate out = cert;
    out.target = std::get<MPoly>(cert.target) * norm_sq * norm_sq;
    for (SosTerm& t : out.terms) {
        if (!std::holds_alternative<MPoly>(t.witness))
            throw std::domain_error("lift: certificate mixes rational witnesses with a polynomial target");
        t.witness = std::get<MPoly>(t.witness) * norm_sq;
    }
    int lifted = out.params.contains("lifted") ? out.params["lifted"].get<int>() : 0;
    out.params["lifted"] = lifted + 1;
    return out;
}

nlohmann::json certificate_to_json(const SosCertificate& cert) {
    json j;
    j["schema"] = "sos-cert/1";
    j["kind"] = cert.kind;
    j["params"] = cert.params;
    j["convention"] = cert.convention;
    j["target"] = value_to_json(cert.target);
    json terms = json::array();
    for (const SosTerm& t : cert.terms) {
        json jt;
        jt["weight"] = t.weight.str();
        jt["witness"] = value_to_json(t.witness);
        jt["index"] = t.index;
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j;
}

SosCertificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("schema") || j["schema"] != "sos-cert/1")
        throw std::invalid_argument("certificate: missing or unknown schema (want \"sos-cert/1\")");
    SosCertificate cert;
    cert.kind = j.at("kind").get<std::string>();
    cert.params = j.value("params", json::object());
    cert.convention = j.value("convention", json::object());
    cert.target = value_from_json(j.at("target"), 0);
    int arity = std::holds_alternative<MPoly>(cert.target) ? std::get<MPoly>(cert.target).arity() : 0;
    for (const json& jt : j.at("terms")) {
        SosTerm t;
        t.weight = rational_from_json(jt.at("weight"));
        t.witness = value_from_json(jt.at("witness"), arity);
        if (jt.contains("index")) t.index = jt.at("index").get<std::vector<int>>();
        cert.terms.push_back(std::move(t));
    }
    return cert;
}

nlohmann::json matrix_to_json(const Mat<GaussQ>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            const GaussQ& e = m(i, j);
            if (e.im.is_zero()) row.push_back(e.re.str());
            else row.push_back(json::array({e.re.str(), e.im.str()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<GaussQ> matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected a non-empty array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    Mat<GaussQ> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix: ragged rows");
        for (int c = 0; c < cols; ++c) {
            const json& e = row.at(static_cast<size_t>(c));
            if (e.is_string()) {
                m(i, c) = GaussQ(Rational::parse(e.get<std::string>()));
            } else if (e.is_array() && e.size() == 2 && e.at(0).is_string() && e.at(1).is_string()) {
                m(i, c) = GaussQ(Rational::parse(e.at(0).get<std::string>()),
                                 Rational::parse(e.at(1).get<std::string>()));
            } else {
                throw std::invalid_argument(
                    "matrix: entries must be rational strings or [re, im] string pairs "
                    "(floating-point input is not accepted)");
            }
        }
    }
    return m;
}

std::vector<Rational> coords_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("coords: expected an array of rational strings");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_string())
            throw std::invalid_argument("coords: entries must be rational strings (no floating point)");
        out.push_back(Rational::parse(e.get<std::string>()));
    }
    return out;
}

nlohmann::json coords_to_json(const std::vector<Rational>& coords) {
    json out = json::array();
    for (const Rational& c : coords) out.push_back(c.str());
    return out;
}

} // namespace discsos
