#include "kundt/linalg.hpp"

namespace kundt {

LinearSolution solve_linear(const Mat<Rational>& A, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw InputError("solve_linear: rhs length does not match row count");
    const int m = A.rows, n = A.cols;
    Mat<Rational> M(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, n) = b[i];
    }
    // One-step Bareiss: each update divides by the previous pivot, keeping
    // every intermediate entry a quotient of minors.
    Rational prev = 1;
    std::vector<std::pair<int, int>> pivots;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int pr = -1;
        for (int i = r; i < m; ++i) {
            if (!is_zero(M.at(i, c))) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j <= n; ++j) std::swap(M.at(pr, j), M.at(r, j));
        for (int i = r + 1; i < m; ++i) {
            for (int j = c + 1; j <= n; ++j)
                M.at(i, j) = (M.at(r, c) * M.at(i, j) - M.at(i, c) * M.at(r, j)) / prev;
            M.at(i, c) = 0;
        }
        prev = M.at(r, c);
        pivots.emplace_back(r, c);
        ++r;
    }
    LinearSolution sol;
    for (int i = r; i < m; ++i) {
        if (!is_zero(M.at(i, n))) return sol; // inconsistent
    }
    sol.solvable = true;
    std::vector<bool> is_piv(n, false);
    for (auto [pr2, pc] : pivots) is_piv[pc] = true;
    sol.particular.assign(n, Rational(0));
    for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
        auto [rr, cc] = pivots[p];
        Rational acc = M.at(rr, n);
        for (int j = cc + 1; j < n; ++j)
            if (!is_zero(sol.particular[j])) acc -= M.at(rr, j) * sol.particular[j];
        sol.particular[cc] = acc / M.at(rr, cc);
    }
    for (int fc = 0; fc < n; ++fc) {
        if (is_piv[fc]) continue;
        std::vector<Rational> x(n, Rational(0));
        x[fc] = 1;
        for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
            auto [rr, cc] = pivots[p];
            Rational acc = 0;
            for (int j = cc + 1; j < n; ++j)
                if (!is_zero(x[j])) acc += M.at(rr, j) * x[j];
            x[cc] = -acc / M.at(rr, cc);
        }
        sol.nullspace.push_back(std::move(x));
    }
    return sol;
}

Inertia inertia(Mat<Rational> m) {
    if (m.rows != m.cols || !m.is_symmetric())
        throw InputError("inertia: matrix is not symmetric");
    const int n = m.rows;
    Inertia res;
    for (int k = 0; k < n; ++k) {
        if (is_zero(m.at(k, k))) {
            int dj = -1;
            for (int j = k + 1; j < n; ++j) {
                if (!is_zero(m.at(j, j))) {
                    dj = j;
                    break;
                }
            }
            if (dj >= 0) {
                for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(dj, j));
                for (int i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, dj));
            } else {
                int oi = -1, oj = -1;
                for (int i = k; i < n && oi < 0; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        if (!is_zero(m.at(i, j))) {
                            oi = i;
                            oj = j;
                            break;
                        }
                    }
                }
                if (oi < 0) {
                    res.zero += n - k;
                    return res;
                }
                // With a zero diagonal, adding row+col oj into oi puts
                // 2*m(oi,oj) != 0 on the diagonal.
                for (int j = 0; j < n; ++j) m.at(oi, j) += m.at(oj, j);
                for (int i = 0; i < n; ++i) m.at(i, oi) += m.at(i, oj);
                if (oi != k) {
                    for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(oi, j));
                    for (int i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, oi));
                }
            }
        }
        const Rational p = m.at(k, k);
        if (sgn(p) > 0)
            ++res.positive;
        else
            ++res.negative;
        for (int i = k + 1; i < n; ++i) {
            if (is_zero(m.at(i, k))) continue;
            Rational f = m.at(i, k) / p;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
            for (int j = k; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
        }
    }
    return res;
}

bool positive_definite(const Mat<Rational>& m) {
    if (m.rows != m.cols || !m.is_symmetric())
        throw InputError("positive_definite: matrix is not symmetric");
    for (int k = 1; k <= m.rows; ++k) {
        Mat<Rational> lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
        if (sgn(det(lead)) <= 0) return false;
    }
    return true;
}

} // namespace kundt
