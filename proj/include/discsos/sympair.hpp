#ifndef DISCSOS_SYMPAIR_HPP
#define DISCSOS_SYMPAIR_HPP

#include <string>
#include <vector>

#include "discsos/gauss.hpp"
#include "discsos/matrix.hpp"
#include "discsos/rational.hpp"
#include "discsos/upoly.hpp"

namespace discsos {

// The four classical families: (gl(n,R), so(n)), (gl(n,C), u(n)) and
// (so(p,q), so(p) x so(q)).
enum class PairFamily { GLnR, GLnC, SOpq };

struct PairId {
    PairFamily family = PairFamily::GLnR;
    int p = 0; // n for the gl families
    int q = 0; // SOpq only

    static PairId glnr(int n);
    static PairId glnc(int n);
    static PairId sopq(int p, int q);
    // "glnr:3", "glnc:2", "sopq:3,1"
    static PairId parse(const std::string& spec);
    std::string str() const;

    friend bool operator==(const PairId& a, const PairId& b) {
        return a.family == b.family && a.p == b.p && a.q == b.q;
    }
};

// One positive restricted root: an integer linear form on the Cartan
// subspace coordinates, with its multiplicity mu = dim g_lambda.
struct RootEntry {
    std::vector<int> coeffs;
    int multiplicity = 1;
};

struct RootDatum {
    std::vector<RootEntry> positive_roots;
    int centralizer_dim = 0;        // dim m = dim of the centralizer of a in k
    std::vector<int> exponents;     // d_j - 1, ascending
    long long weyl_order = 0;       // prod d_j
    bool derived = false;           // true when derived here rather than tabulated
};

// A realized symmetric pair: explicit matrix bases of p and k, orthogonal
// under the pair's inner product with rational squared norms (weights).
// The inner product is ip_scale * Re Tr(x * conj(y)^T); the so(p,q) families
// use ip_scale = 1/2 so that p identifies isometrically with M_{p,q}(R)
// carrying the standard entrywise product (the normalization all closed-form
// values below are stated in).
struct PairData {
    PairId id;
    int r = 0;       // dim p
    int s = 0;       // dim k
    int l = 0;       // rank
    int ambient = 0; // size of the realization matrices
    Rational ip_scale{1};
    bool complex_entries = false;

    std::vector<Mat<GaussQ>> p_basis;
    std::vector<Mat<GaussQ>> k_basis;
    std::vector<Rational> p_weights;
    std::vector<Rational> k_weights;
    std::vector<int> cartan_indices; // positions of the Cartan basis inside p_basis

    RootDatum roots;
    bool rank_maximal = false;

    int alpha() const { return s - r + l; }
    const Mat<GaussQ>& cartan_matrix(int j) const { return p_basis[static_cast<size_t>(cartan_indices[static_cast<size_t>(j)])]; }
};

PairData build_pair(const PairId& id);

// Re Tr(a * conj(b)^T) — the unscaled trace pairing.
Rational re_trace_pairing(const Mat<GaussQ>& a, const Mat<GaussQ>& b);
// ip_scale * Re Tr(a * conj(b)^T).
Rational pair_inner(const PairData& pd, const Mat<GaussQ>& a, const Mat<GaussQ>& b);

Mat<GaussQ> commutator(const Mat<GaussQ>& a, const Mat<GaussQ>& b);

// x = sum coords_i * p_basis[i].
Mat<GaussQ> pelement_matrix(const PairData& pd, const std::vector<Rational>& coords);
// Same, for the real families (throws if any entry has an imaginary part).
Mat<Rational> pelement_matrix_real(const PairData& pd, const std::vector<Rational>& coords);
Mat<Rational> real_part(const Mat<GaussQ>& m);

// Exact coordinates of m in an orthogonal-with-weights basis.
std::vector<Rational> coordinates_in_basis(const PairData& pd, const Mat<GaussQ>& m,
                                           const std::vector<Mat<GaussQ>>& basis,
                                           const std::vector<Rational>& weights);

// Matrices of A(x): p -> k, B(x): k -> p (both y -> [x,y]) and of
// f(x) = B(x)A(x), g(x) = A(x)B(x) in the stored bases. B is the
// weight-adjusted transpose of A (ad x is symmetric for the pair product).
struct OpMatrices {
    Mat<Rational> A; // s x r
    Mat<Rational> B; // r x s
    Mat<Rational> f; // r x r
    Mat<Rational> g; // s x s
};
OpMatrices op_matrices(const PairData& pd, const std::vector<Rational>& coords);

// Matrix of ad x on p (+) k, i.e. the block matrix [[0, B], [A, 0]].
Mat<Rational> ad_matrix(const PairData& pd, const std::vector<Rational>& coords);

struct CharPolys {
    UPolyQ cf; // det(tI_p - f(x)), degree r
    UPolyQ cg; // det(tI_k - g(x)), degree s
};
CharPolys charpolys(const PairData& pd, const std::vector<Rational>& coords);

// P_k / Q_k with the alternating-sign convention
// det(tI - f) = sum_k (-1)^k P_k t^{r-k}, so P_k >= 0 on real points.
Rational signed_coeff(const UPolyQ& cp, int k);

// t^s * cf == t^r * cg, the rank-independent bridge between the two
// characteristic polynomials.
bool charpoly_bridge_holds(const PairData& pd, const CharPolys& cp);

enum class DiscRoute { CoeffF, CoeffG, DetG, RootProduct };

// D(x) through the selected formulation. CoeffF reads P_{r-l} off
// det(tI - f); CoeffG reads Q_{r-l}, the top coefficient of det(tI - g) not
// forced to vanish by dimension count; DetG is det g(x) (rank-maximal pairs
// only); RootProduct is prod lambda(x)^{2 mu(lambda)} for x in the Cartan
// subspace.
Rational discriminant(const PairData& pd, const std::vector<Rational>& coords, DiscRoute route);

int orbit_dim(const PairData& pd, const std::vector<Rational>& coords);
bool is_rank_maximal(const PairData& pd);

bool on_cartan(const PairData& pd, const std::vector<Rational>& coords);
std::vector<Rational> cartan_coords_of(const PairData& pd, const std::vector<Rational>& coords);
std::vector<Rational> cartan_to_full(const PairData& pd, const std::vector<Rational>& a);
// The regular point (1, 2, ..., l) on a; every root of the stored datum is
// nonzero there for all supported families.
std::vector<Rational> regular_cartan_point(const PairData& pd);

Rational eval_root(const RootEntry& root, const std::vector<Rational>& a);

struct RootCharPolys {
    UPolyQ cf;  // t^l prod (t - lambda(x)^2)^mu
    UPolyQ cg;  // t^m prod (t - lambda(x)^2)^mu
    UPolyQ cad; // t^{m+l} prod (t - lambda(x))^mu (t + lambda(x))^mu
};
// Builds the factored characteristic polynomials from the root datum;
// the oracle counterpart of charpolys() on Cartan points.
RootCharPolys root_factored_charpoly(const PairData& pd, const std::vector<Rational>& a);

} // namespace discsos

#endif
