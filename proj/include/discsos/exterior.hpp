#ifndef DISCSOS_EXTERIOR_HPP
#define DISCSOS_EXTERIOR_HPP

#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "discsos/matrix.hpp"
#include "discsos/rational.hpp"

namespace discsos {

// Strictly increasing list of positions; lexicographic order throughout.
using WedgeIndex = std::vector<int>;

inline WedgeIndex first_combination(int k) {
    WedgeIndex c(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
    return c;
}

// Advances c to the next k-subset of {0..n-1} in lex order; false past the end.
inline bool next_combination(WedgeIndex& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) { fn(WedgeIndex{}); return; }
    WedgeIndex c = first_combination(k);
    do { fn(c); } while (next_combination(c, n));
}

// k-subsets of {0..n-1} whose smallest element is `first`, in lex order.
template <class Fn>
void for_each_combination_with_first(int n, int k, int first, Fn&& fn) {
    WedgeIndex c(static_cast<size_t>(k));
    c[0] = first;
    if (k == 1) { fn(c); return; }
    WedgeIndex rest = first_combination(k - 1);
    do {
        for (int i = 0; i < k - 1; ++i) c[static_cast<size_t>(i + 1)] = first + 1 + rest[static_cast<size_t>(i)];
        fn(c);
    } while (next_combination(rest, n - first - 1));
}

// Data-parallel fold over k-subsets, partitioned by the leading index.
// fn(first) must itself iterate deterministically; the caller combines the
// returned slots in index order, so results are identical for any thread
// count.
template <class R, class Fn>
std::vector<R> map_combination_partitions(int n, int k, int threads, Fn&& fn) {
    int parts = n - k + 1;
    if (parts <= 0) return {};
    std::vector<R> out(static_cast<size_t>(parts));
    if (threads <= 1 || parts == 1) {
        for (int f = 0; f < parts; ++f) out[static_cast<size_t>(f)] = fn(f);
        return out;
    }
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int f = next.fetch_add(1);
            if (f >= parts) return;
            out[static_cast<size_t>(f)] = fn(f);
        }
    };
    int nw = std::min(threads, parts);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nw));
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

// Streaming enumeration of all k x k minors of m in lex order on
// (row set, col set). fn(rows, cols, minor).
template <class S, class Fn>
void for_each_k_minor(const Mat<S>& m, int k, Fn&& fn) {
    if (k < 1 || k > m.rows() || k > m.cols())
        throw std::invalid_argument("k_minors: order out of range");
    for_each_combination(m.rows(), k, [&](const WedgeIndex& rows) {
        for_each_combination(m.cols(), k, [&](const WedgeIndex& cols) {
            fn(rows, cols, det_bareiss(m.submatrix(rows, cols)));
        });
    });
}

template <class S>
std::vector<std::tuple<WedgeIndex, WedgeIndex, S>> k_minors(const Mat<S>& m, int k) {
    std::vector<std::tuple<WedgeIndex, WedgeIndex, S>> out;
    for_each_k_minor(m, k, [&](const WedgeIndex& r, const WedgeIndex& c, S v) {
        out.emplace_back(r, c, std::move(v));
    });
    return out;
}

// Squared norm of v_1 ^ ... ^ v_k under the diagonal weighted inner product
// <a,b> = sum_j w_j a_j b_j: the Gram determinant det(<v_a, v_b>).
// Returns 0 when k exceeds the ambient dimension (degenerate wedge).
inline Rational wedge_norm_sq(const std::vector<std::vector<Rational>>& vectors,
                              const std::vector<Rational>& gram_weights) {
    int k = static_cast<int>(vectors.size());
    if (k == 0) return Rational(1);
    size_t d = gram_weights.size();
    for (const auto& v : vectors)
        if (v.size() != d) throw std::invalid_argument("wedge_norm_sq: vector/weight length mismatch");
    if (static_cast<size_t>(k) > d) return Rational();
    Mat<Rational> gram(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            Rational g;
            for (size_t j = 0; j < d; ++j) {
                if (vectors[static_cast<size_t>(a)][j].is_zero() ||
                    vectors[static_cast<size_t>(b)][j].is_zero())
                    continue;
                g += gram_weights[j] * vectors[static_cast<size_t>(a)][j] * vectors[static_cast<size_t>(b)][j];
            }
            gram(a, b) = g;
            gram(b, a) = std::move(g);
        }
    return det_bareiss(std::move(gram));
}

// Sum over all k x k minors of (product of selected row weights) * minor^2.
// By weighted Cauchy-Binet this equals the sum of wedge_norm_sq over column
// k-subsets, the identity the tests pin down. Deterministic for any thread
// count (partitions reduce in leading-row order).
inline Rational weighted_minor_square_sum(const Mat<Rational>& m,
                                          const std::vector<Rational>& row_weights,
                                          int k, int threads = 1) {
    if (k < 1 || k > m.rows() || k > m.cols())
        throw std::invalid_argument("weighted_minor_square_sum: order out of range");
    if (static_cast<int>(row_weights.size()) != m.rows())
        throw std::invalid_argument("weighted_minor_square_sum: row weight count mismatch");
    auto parts = map_combination_partitions<Rational>(m.rows(), k, threads, [&](int f) {
        Rational acc;
        for_each_combination_with_first(m.rows(), k, f, [&](const WedgeIndex& rows) {
            Rational w(1);
            for (int r : rows) w *= row_weights[static_cast<size_t>(r)];
            for_each_combination(m.cols(), k, [&](const WedgeIndex& cols) {
                Rational minor = det_bareiss(m.submatrix(rows, cols));
                if (!minor.is_zero()) acc += w * minor * minor;
            });
        });
        return acc;
    });
    Rational total;
    for (const Rational& p : parts) total += p;
    return total;
}

} // namespace discsos

#endif
