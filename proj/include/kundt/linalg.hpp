#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "kundt/errors.hpp"
#include "kundt/ratfunc.hpp"
#include "kundt/rational.hpp"

namespace kundt {

inline bool scalar_is_zero(const Rational& v) { return is_zero(v); }
inline bool scalar_is_zero(const RatFunc& v) { return v.is_zero(); }

/// Dense row-major matrix over an exact scalar (Rational or RatFunc).
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows = static_cast<int>(init.size());
        cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
        a.reserve(static_cast<std::size_t>(rows) * cols);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols)
                throw InputError("Mat: ragged initializer");
            for (const auto& v : row) a.push_back(v);
        }
    }

    T& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    Mat transpose() const {
        Mat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Mat operator*(const Mat& o) const {
        if (cols != o.rows) throw InputError("Mat: dimension mismatch in product");
        Mat m(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const T& v = at(i, k);
                if (scalar_is_zero(v)) continue;
                for (int j = 0; j < o.cols; ++j) m.at(i, j) += v * o.at(k, j);
            }
        return m;
    }

    Mat operator+(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) throw InputError("Mat: dimension mismatch in sum");
        Mat m(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
        return m;
    }

    Mat operator-(const Mat& o) const {
        if (rows != o.rows || cols != o.cols)
            throw InputError("Mat: dimension mismatch in difference");
        Mat m(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - o.a[i];
        return m;
    }

    Mat operator*(const T& s) const {
        Mat m(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * s;
        return m;
    }

    bool operator==(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == o.a[i])) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : a)
            if (!scalar_is_zero(v)) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows != cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = i + 1; j < cols; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols) throw InputError("Mat: apply dimension mismatch");
        std::vector<T> r(rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!scalar_is_zero(at(i, j))) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    std::vector<T> col(int j) const {
        std::vector<T> r(rows);
        for (int i = 0; i < rows; ++i) r[i] = at(i, j);
        return r;
    }
};

/// Cofactor expansion along the first column. Division-free, so RatFunc
/// denominators never grow beyond products of entry denominators. Fine for
/// the n <= 6 matrices this project touches.
template <class T>
T det(const Mat<T>& m) {
    if (m.rows != m.cols) throw InputError("det: not square");
    const int n = m.rows;
    if (n == 0) return T(1);
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    T acc{};
    for (int i = 0; i < n; ++i) {
        if (scalar_is_zero(m.at(i, 0))) continue;
        Mat<T> sub(n - 1, n - 1);
        for (int r = 0, sr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 1; c < n; ++c) sub.at(sr, c - 1) = m.at(r, c);
            ++sr;
        }
        T term = m.at(i, 0) * det(sub);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Adjugate-based inverse; throws on singular input.
template <class T>
Mat<T> inverse(const Mat<T>& m) {
    if (m.rows != m.cols) throw InputError("inverse: not square");
    const int n = m.rows;
    T d = det(m);
    if (scalar_is_zero(d)) throw InputError("inverse: singular matrix");
    Mat<T> inv(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Mat<T> sub(n - 1, n - 1);
            for (int r = 0, sr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, sc = 0; c < n; ++c) {
                    if (c == j) continue;
                    sub.at(sr, sc++) = m.at(r, c);
                }
                ++sr;
            }
            T cof = det(sub);
            if ((i + j) % 2 != 0) cof = T{} - cof;
            inv.at(j, i) = cof / d;
        }
    }
    return inv;
}

/// Row echelon over a field; returns pivot (row, col) pairs. Mutates m.
template <class T>
std::vector<std::pair<int, int>> row_echelon(Mat<T>& m) {
    std::vector<std::pair<int, int>> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i) {
            if (!scalar_is_zero(m.at(i, c))) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        const T piv = m.at(r, c);
        for (int i = r + 1; i < m.rows; ++i) {
            if (scalar_is_zero(m.at(i, c))) continue;
            T f = m.at(i, c) / piv;
            for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

template <class T>
int rank(Mat<T> m) {
    return static_cast<int>(row_echelon(m).size());
}

/// Basis of the right nullspace of m (solutions of m x = 0) over a field.
template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
    auto pivots = row_echelon(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto [r, c] : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<T> x(m.cols);
        x[fc] = T(1);
        for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
            auto [r, c] = pivots[p];
            T acc{};
            for (int j = c + 1; j < m.cols; ++j)
                if (!scalar_is_zero(x[j])) acc = acc + m.at(r, j) * x[j];
            x[c] = (T{} - acc) / m.at(r, c);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Unique solution of a square invertible system over a field.
template <class T>
std::vector<T> solve_square(Mat<T> m, std::vector<T> b) {
    if (m.rows != m.cols || static_cast<int>(b.size()) != m.rows)
        throw InputError("solve_square: shape mismatch");
    const int n = m.rows;
    Mat<T> aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = b[i];
    }
    auto pivots = row_echelon(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back().second >= n)
        throw InputError("solve_square: singular matrix");
    std::vector<T> x(n);
    for (int p = n - 1; p >= 0; --p) {
        auto [r, c] = pivots[p];
        T acc = aug.at(r, n);
        for (int j = c + 1; j < n; ++j)
            if (!scalar_is_zero(x[j])) acc = acc - aug.at(r, j) * x[j];
        x[c] = acc / aug.at(r, c);
    }
    return x;
}

struct LinearSolution {
    bool solvable = false;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> nullspace;
};

/// Exact solver for A x = b over the rationals: fraction-free (Bareiss)
/// forward elimination, then back substitution for one particular solution
/// and a nullspace basis. solvable=false means no solution exists.
LinearSolution solve_linear(const Mat<Rational>& A, const std::vector<Rational>& b);

struct Inertia {
    int positive = 0, negative = 0, zero = 0;
};

/// Sylvester inertia of a symmetric rational matrix via exact congruence
/// diagonalization.
Inertia inertia(Mat<Rational> m);

/// Positive definiteness decided by leading principal minors (all > 0).
bool positive_definite(const Mat<Rational>& m);

} // namespace kundt
