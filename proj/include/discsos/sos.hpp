#ifndef DISCSOS_SOS_HPP
#define DISCSOS_SOS_HPP

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "discsos/gauss.hpp"
#include "discsos/matrix.hpp"
#include "discsos/mpoly.hpp"
#include "discsos/rational.hpp"
#include "discsos/sympair.hpp"

namespace discsos {

// One weighted square: contributes weight * witness^2 to the certified sum.
// index records the term's provenance (selected rows, exponent vector, ...)
// under the certificate's stated convention.
struct SosTerm {
    Rational weight;
    std::variant<Rational, MPoly> witness;
    std::vector<int> index;
};

// Checkable claim: sum_i weight_i * witness_i^2 == target, with all weights
// positive. Verification is a code path separate from construction.
struct SosCertificate {
    std::string kind; // "ilyushechkin" | "symmetric-basis" | "pk" | "rudin"
    std::variant<Rational, MPoly> target;
    std::vector<SosTerm> terms;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json convention = nlohmann::json::object();
};

struct VerifyResult {
    bool ok = false;
    std::string message;
};

// Re-checks the defining claim by direct exact summation.
VerifyResult verify_certificate(const SosCertificate& cert);

// n^2 x n matrix whose column k holds the entries of z^k in row-major
// order; column 0 is the vectorized identity.
Mat<GaussQ> zstar(const Mat<GaussQ>& z);
Mat<Rational> zstar_real(const Mat<Rational>& z);

bool is_normal(const Mat<GaussQ>& z);

// |D(z)| = sum over all maximal minors M of z_* of |M|^2, for normal z.
// Real symmetric input certifies D itself; complex input stores each
// minor's re and im parts as two rational witnesses so the certificate
// stays checkable in ordered-field arithmetic. Throws on non-normal input.
SosCertificate ilyushechkin_certificate(const Mat<GaussQ>& z, int threads = 1);
SosCertificate ilyushechkin_certificate(const Mat<Rational>& z, int threads = 1);

// Number of maximal minors in the symmetric-basis certificate:
// C(n(n+1)/2, n).
unsigned long long symmetric_minor_count(int n);

// Same discriminant, certified over the symmetric-matrix basis
// {E_ii, E_ij + E_ji} with explicit weights (powers of 2), so witnesses
// stay rational.
SosCertificate symmetric_basis_certificate(const Mat<Rational>& x, int threads = 1);

// P_k(x) as the weighted sum of squared k x k minors of the matrix of
// A(x): row weights from k_basis, inverse column weights from p_basis.
SosCertificate pk_certificate(const PairData& pd, const std::vector<Rational>& coords, int k);

// (x_1^2 + ... + x_n^2)^k = sum over |alpha| = k of (k!/alpha!) (x^alpha)^2.
SosCertificate rudin_certificate(int k, int n);

unsigned long long dim_P(int k, int n);
unsigned long long dim_H(int k, int n);

// Multiplies every witness by (x_1^2 + ... + x_n^2), turning a degree-k
// norm-power certificate into one for degree k + 2.
SosCertificate lift(const SosCertificate& cert);

nlohmann::json certificate_to_json(const SosCertificate& cert);
SosCertificate certificate_from_json(const nlohmann::json& j);

// Matrix / coordinate JSON exchange format: every scalar is a rational
// string "p/q" (never a floating-point number); complex entries are
// two-element arrays [re, im].
nlohmann::json matrix_to_json(const Mat<GaussQ>& m);
Mat<GaussQ> matrix_from_json(const nlohmann::json& j);
std::vector<Rational> coords_from_json(const nlohmann::json& j);
nlohmann::json coords_to_json(const std::vector<Rational>& coords);

} // namespace discsos

#endif
