#ifndef DISCSOS_INVARIANTS_HPP
#define DISCSOS_INVARIANTS_HPP

#include <string>
#include <vector>

#include "discsos/mpoly.hpp"
#include "discsos/sympair.hpp"

namespace discsos {

// Fundamental K-invariant generator p_j of R[p]^K, identified by its shape:
//   TracePower(j)       Tr(x^j)/j                 (gl families)
//   BlockTracePower(j)  Tr((B B^T)^j)/(2j)        (so(p,q), B the p x q block)
//   BlockDet            det B                     (so(p,p) only)
// Generators are ordered by ascending degree (trace powers before the
// determinant on ties); the exponents are degree - 1.
struct Generator {
    enum class Kind { TracePower, BlockTracePower, BlockDet };
    Kind kind = Kind::TracePower;
    int power = 0;
    int degree = 0;
};

std::vector<Generator> generators(const PairId& id);

Rational eval_generator(const PairData& pd, const Generator& gen, const std::vector<Rational>& coords);

// Restriction q_j of the generator to the Cartan subspace, as a polynomial
// in the l Cartan coordinates. Computed symbolically through the same
// matrix kernels the numeric path uses, over MPoly entries.
MPoly restrict_to_cartan(const PairData& pd, const Generator& gen);

// Gradient of the generator at x, as coordinates in p_basis. Exact: each
// coordinate is read off the degree-1 coefficient of the univariate
// polynomial p(x + t b_i), reconstructed by interpolation at the rational
// nodes t = 0..deg; one mechanism covers the trace powers and det alike.
std::vector<Rational> gradient(const PairData& pd, const Generator& gen, const std::vector<Rational>& coords);

// det of the l x l Gram matrix of the invariant gradients (Eq. of the
// gradient formulation, D = det Omega on the rank-maximal families).
Rational omega_det(const PairData& pd, const std::vector<Rational>& coords);

// ||grad p_1 ^ ... ^ grad p_l||^2 through the exterior kernel. Equals
// omega_det on every input; the two are kept as separate code paths.
Rational phi(const PairData& pd, const std::vector<Rational>& coords);

// Jacobian determinant J = det(d q_j / d c_i) of the restricted generators,
// a W-semi-invariant with J^2 proportional to prod lambda^2 over the
// positive roots. Sign pinned by the generator and coordinate orders.
MPoly jacobian_on_a(const PairData& pd);

struct WeylArithmetic {
    long long order = 0; // prod d_j
    int reflections = 0; // sum (d_j - 1) = deg J
};
WeylArithmetic weyl_arithmetic(const PairId& id);

// prod lambda^e over the positive roots (each root taken once), as an MPoly
// in the Cartan coordinates; e.g. e = 2 gives the factored form of phi|a.
MPoly root_product_poly(const PairData& pd, int exponent_per_root, bool use_multiplicity);
std::string root_str(const RootEntry& root);

struct CompareSample {
    std::vector<Rational> coords; // full p coordinates
    bool on_cartan = false;
    Rational D;
    Rational phi;
};

struct CompareReport {
    bool rank_maximal = false;
    bool constant_ratio = false;
    Rational ratio;                 // D / phi, meaningful when constant_ratio
    std::vector<CompareSample> samples;
    std::string phi_on_a;           // prod lambda^2 rendered from the root datum
    std::string d_on_a;             // prod lambda^{2 mu}
};

// Evaluates D (coefficient route) and phi at regular Cartan points and at
// random full-p points; never divides by zero (singular samples are
// resampled). Reports a constant ratio exactly when one exists at every
// sample.
CompareReport compare_D_phi(const PairData& pd, int cartan_samples = 5, int full_samples = 5,
                            unsigned seed = 1u);

} // namespace discsos

#endif
