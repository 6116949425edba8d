#ifndef DISCSOS_TEST_SUPPORT_HPP
#define DISCSOS_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "discsos/matrix.hpp"
#include "discsos/rational.hpp"

namespace discsos::test {

// Small random rationals (numerators in [-max_num, max_num], denominators
// in {1, 2, 3}) keep fraction-free intermediates small enough that every
// suite stays well under the runtime budget.
inline Rational random_rational(std::mt19937& rng, int max_num = 5) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

inline std::vector<Rational> random_coords(std::mt19937& rng, int count, int max_num = 5) {
    std::vector<Rational> out(static_cast<size_t>(count));
    for (auto& c : out) c = random_rational(rng, max_num);
    return out;
}

inline Mat<Rational> random_matrix(std::mt19937& rng, int rows, int cols, int max_num = 5) {
    Mat<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = random_rational(rng, max_num);
    return m;
}

inline Mat<Rational> random_symmetric(std::mt19937& rng, int n, int max_num = 5) {
    Mat<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational v = random_rational(rng, max_num);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

inline Mat<Rational> diag(std::vector<Rational> entries) {
    int n = static_cast<int>(entries.size());
    Mat<Rational> m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = entries[static_cast<size_t>(i)];
    return m;
}

} // namespace discsos::test

#endif
