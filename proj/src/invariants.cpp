#include "discsos/invariants.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "discsos/exterior.hpp"

namespace discsos {

namespace {

Mat<Rational> upper_right_block(const Mat<Rational>& m, int p, int q) {
    Mat<Rational> b(p, q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            b(i, j) = m(i, p + j);
    return b;
}

template <class S>
S trace_of_power(const Mat<S>& m, int j) {
    Mat<S> acc = m;
    for (int i = 1; i < j; ++i) acc = acc * m;
    return acc.trace();
}

// x(c) = sum_b c_b * cartan_b over MPoly scalars; the Cartan matrices of all
// families are real.
Mat<MPoly> cartan_symbolic_matrix(const PairData& pd) {
    int l = pd.l;
    Mat<MPoly> x(pd.ambient, pd.ambient);
    for (int b = 0; b < l; ++b) {
        Mat<Rational> cb = real_part(pd.cartan_matrix(b));
        MPoly var = MPoly::variable(l, b);
        for (int i = 0; i < pd.ambient; ++i)
            for (int j = 0; j < pd.ambient; ++j)
                if (!cb(i, j).is_zero())
                    x(i, j) += cb(i, j) * var;
    }
    return x;
}

Mat<MPoly> upper_right_block_sym(const Mat<MPoly>& m, int p, int q) {
    Mat<MPoly> b(p, q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            b(i, j) = m(i, p + j);
    return b;
}

} // namespace

std::vector<Generator> generators(const PairId& id) {
    std::vector<Generator> gens;
    switch (id.family) {
    case PairFamily::GLnR:
    case PairFamily::GLnC:
        for (int j = 1; j <= id.p; ++j)
            gens.push_back({Generator::Kind::TracePower, j, j});
        break;
    case PairFamily::SOpq: {
        int top = (id.q == id.p) ? id.p - 1 : id.q;
        for (int j = 1; j <= top; ++j)
            gens.push_back({Generator::Kind::BlockTracePower, j, 2 * j});
        if (id.q == id.p)
            gens.push_back({Generator::Kind::BlockDet, 0, id.p});
        std::stable_sort(gens.begin(), gens.end(),
                         [](const Generator& a, const Generator& b) { return a.degree < b.degree; });
        break;
    }
    }
    return gens;
}

Rational eval_generator(const PairData& pd, const Generator& gen, const std::vector<Rational>& coords) {
    switch (gen.kind) {
    case Generator::Kind::TracePower: {
        if (pd.complex_entries) {
            GaussQ t = trace_of_power(pelement_matrix(pd, coords), gen.power);
            if (!t.im.is_zero())
                throw std::logic_error("eval_generator: trace power of a hermitian element came out complex");
            return t.re / Rational(gen.power);
        }
        return trace_of_power(pelement_matrix_real(pd, coords), gen.power) / Rational(gen.power);
    }
    case Generator::Kind::BlockTracePower: {
        Mat<Rational> b = upper_right_block(pelement_matrix_real(pd, coords), pd.id.p, pd.id.q);
        return trace_of_power(b * b.transpose(), gen.power) / Rational(2 * gen.power);
    }
    case Generator::Kind::BlockDet: {
        Mat<Rational> b = upper_right_block(pelement_matrix_real(pd, coords), pd.id.p, pd.id.q);
        return det_bareiss(std::move(b));
    }
    }
    throw std::logic_error("eval_generator: unknown kind");
}

MPoly restrict_to_cartan(const PairData& pd, const Generator& gen) {
    Mat<MPoly> x = cartan_symbolic_matrix(pd);
    switch (gen.kind) {
    case Generator::Kind::TracePower:
        return trace_of_power(x, gen.power) / Rational(gen.power);
    case Generator::Kind::BlockTracePower: {
        Mat<MPoly> b = upper_right_block_sym(x, pd.id.p, pd.id.q);
        return trace_of_power(b * b.transpose(), gen.power) / Rational(2 * gen.power);
    }
    case Generator::Kind::BlockDet:
        return det_bareiss(upper_right_block_sym(x, pd.id.p, pd.id.q));
    }
    throw std::logic_error("restrict_to_cartan: unknown kind");
}

std::vector<Rational> gradient(const PairData& pd, const Generator& gen, const std::vector<Rational>& coords) {
    if (static_cast<int>(coords.size()) != pd.r)
        throw std::invalid_argument("gradient: expected " + std::to_string(pd.r) + " coordinates");
    std::vector<Rational> grad(static_cast<size_t>(pd.r));
    std::vector<Rational> shifted = coords;
    for (int i = 0; i < pd.r; ++i) {
        std::vector<std::pair<Rational, Rational>> points;
        points.reserve(static_cast<size_t>(gen.degree) + 1);
        for (int t = 0; t <= gen.degree; ++t) {
            shifted[static_cast<size_t>(i)] = coords[static_cast<size_t>(i)] + Rational(t);
            points.emplace_back(Rational(t), eval_generator(pd, gen, shifted));
        }
        shifted[static_cast<size_t>(i)] = coords[static_cast<size_t>(i)];
        // directional derivative <grad p(x) | b_i> is the t-linear coefficient
        grad[static_cast<size_t>(i)] = interpolate(points).coeff(1) / pd.p_weights[static_cast<size_t>(i)];
    }
    return grad;
}

Rational omega_det(const PairData& pd, const std::vector<Rational>& coords) {
    std::vector<Generator> gens = generators(pd.id);
    std::vector<std::vector<Rational>> grads;
    grads.reserve(gens.size());
    for (const Generator& g : gens) grads.push_back(gradient(pd, g, coords));
    int l = pd.l;
    Mat<Rational> omega(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = i; j < l; ++j) {
            Rational v;
            for (int a = 0; a < pd.r; ++a)
                v += pd.p_weights[static_cast<size_t>(a)] * grads[static_cast<size_t>(i)][static_cast<size_t>(a)] *
                     grads[static_cast<size_t>(j)][static_cast<size_t>(a)];
            omega(i, j) = v;
            omega(j, i) = std::move(v);
        }
    return det_bareiss(std::move(omega));
}

Rational phi(const PairData& pd, const std::vector<Rational>& coords) {
    std::vector<Generator> gens = generators(pd.id);
    std::vector<std::vector<Rational>> grads;
    grads.reserve(gens.size());
    for (const Generator& g : gens) grads.push_back(gradient(pd, g, coords));
    return wedge_norm_sq(grads, pd.p_weights);
}

MPoly jacobian_on_a(const PairData& pd) {
    std::vector<Generator> gens = generators(pd.id);
    int l = pd.l;
    Mat<MPoly> jac(l, l);
    for (int j = 0; j < l; ++j) {
        MPoly qj = restrict_to_cartan(pd, gens[static_cast<size_t>(j)]);
        for (int i = 0; i < l; ++i)
            jac(i, j) = qj.partial(i);
    }
    return det_bareiss(std::move(jac));
}

WeylArithmetic weyl_arithmetic(const PairId& id) {
    WeylArithmetic out;
    out.order = 1;
    for (const Generator& g : generators(id)) {
        out.order *= g.degree;
        out.reflections += g.degree - 1;
    }
    return out;
}

MPoly root_product_poly(const PairData& pd, int exponent_per_root, bool use_multiplicity) {
    MPoly prod = MPoly::constant(pd.l, Rational(1));
    for (const auto& root : pd.roots.positive_roots) {
        MPoly form(pd.l);
        for (int i = 0; i < pd.l; ++i)
            if (root.coeffs[static_cast<size_t>(i)] != 0)
                form += Rational(root.coeffs[static_cast<size_t>(i)]) * MPoly::variable(pd.l, i);
        int e = exponent_per_root * (use_multiplicity ? root.multiplicity : 1);
        prod *= form.pow(static_cast<unsigned>(e));
    }
    return prod;
}

std::string root_str(const RootEntry& root) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < root.coeffs.size(); ++i) {
        int c = root.coeffs[i];
        if (c == 0) continue;
        if (c > 0 && !first) out << "+";
        if (c == -1) out << "-";
        else if (c != 1) out << c << "*";
        out << "x" << (i + 1);
        first = false;
    }
    return first ? "0" : out.str();
}

CompareReport compare_D_phi(const PairData& pd, int cartan_samples, int full_samples, unsigned seed) {
    CompareReport rep;
    rep.rank_maximal = pd.rank_maximal;
    {
        std::ostringstream fphi, fd;
        for (const auto& root : pd.roots.positive_roots) {
            fphi << "(" << root_str(root) << ")^2 ";
            fd << "(" << root_str(root) << ")^" << 2 * root.multiplicity << " ";
        }
        rep.phi_on_a = fphi.str();
        rep.d_on_a = fd.str();
        if (!rep.phi_on_a.empty()) rep.phi_on_a.pop_back();
        if (!rep.d_on_a.empty()) rep.d_on_a.pop_back();
    }

    auto take_sample = [&](const std::vector<Rational>& coords, bool cartan) {
        Rational ph = phi(pd, coords);
        if (ph.is_zero()) return false; // singular sample: caller resamples
        CompareSample s;
        s.coords = coords;
        s.on_cartan = cartan;
        s.D = discriminant(pd, coords, DiscRoute::CoeffF);
        s.phi = ph;
        rep.samples.push_back(std::move(s));
        return true;
    };

    // Regular Cartan points (m+1, m+2, ..., m+l): every stored root form has
    // positive value there, so no resampling is expected.
    for (int m = 0, taken = 0; taken < cartan_samples && m < cartan_samples + 16; ++m) {
        std::vector<Rational> a(static_cast<size_t>(pd.l));
        for (int j = 0; j < pd.l; ++j) a[static_cast<size_t>(j)] = Rational(m + j + 1);
        bool regular = true;
        for (const auto& root : pd.roots.positive_roots)
            if (eval_root(root, a).is_zero()) { regular = false; break; }
        if (!regular) continue;
        if (take_sample(cartan_to_full(pd, a), true)) ++taken;
    }

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int taken = 0, tries = 0; taken < full_samples && tries < 64; ++tries) {
        std::vector<Rational> coords(static_cast<size_t>(pd.r));
        for (int i = 0; i < pd.r; ++i) coords[static_cast<size_t>(i)] = Rational(num(rng), den(rng));
        if (take_sample(coords, false)) ++taken;
    }

    rep.constant_ratio = !rep.samples.empty();
    for (size_t i = 0; i < rep.samples.size(); ++i) {
        Rational ratio = rep.samples[i].D / rep.samples[i].phi;
        if (i == 0) rep.ratio = ratio;
        else if (ratio != rep.ratio) { rep.constant_ratio = false; break; }
    }
    if (!rep.constant_ratio) rep.ratio = Rational();
    return rep;
}

} // namespace discsos
