#include "kundt/gn.hpp"

namespace kundt {

Mat<Rational> MinkowskiSpace::eta() const {
    Mat<Rational> e(n, n);
    e.at(0, 1) = 1;
    e.at(1, 0) = 1;
    for (int i = 2; i < n; ++i) e.at(i, i) = 1;
    return e;
}

namespace {

void check_square(const MinkowskiSpace& M, const Mat<Rational>& f, const char* who) {
    if (f.rows != M.n || f.cols != M.n)
        throw InputError(std::string(who) + ": matrix must be n x n");
}

} // namespace

std::optional<GnViolation> gn_member(const MinkowskiSpace& M, const Mat<Rational>& f) {
    check_square(M, f, "gn_member");
    const int n = M.n;
    // i) the image of the null direction stays on the null line, nontrivially.
    if (is_zero(f.at(0, 0)))
        return GnViolation{"i", "null direction is not scaled by a nonzero factor", {0}};
    for (int i = 1; i < n; ++i) {
        if (!is_zero(f.at(i, 0)))
            return GnViolation{"i", "image of the null direction leaves the null line (component " +
                                        std::to_string(i) + ")",
                               {i, 0}};
    }
    Mat<Rational> eta = M.eta();
    Mat<Rational> G = f.transpose() * eta * f;
    // ii) pairing preserved on the orthogonal hyperplane of the null
    // direction, spanned by basis indices {0, 2, .., n-1}.
    std::vector<int> perp;
    perp.push_back(0);
    for (int i = 2; i < n; ++i) perp.push_back(i);
    for (std::size_t p = 0; p < perp.size(); ++p) {
        for (std::size_t q = p; q < perp.size(); ++q) {
            int i = perp[p], j = perp[q];
            if (G.at(i, j) != eta.at(i, j))
                return GnViolation{"ii",
                                   "pairing on the orthogonal hyperplane changed at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")",
                                   {i, j}};
        }
    }
    // iii) pairings against the null direction preserved for every argument.
    for (int z = 0; z < n; ++z) {
        if (G.at(0, z) != eta.at(0, z))
            return GnViolation{
                "iii", "pairing of the null direction against basis vector " + std::to_string(z) +
                           " changed",
                {0, z}};
    }
    return std::nullopt;
}

Mat<Rational> gn_from_params(const MinkowskiSpace& M, const GnParams& p) {
    const int n = M.n;
    if (is_zero(p.a)) throw InputError("gn_from_params: scale must be nonzero");
    if (static_cast<int>(p.b.size()) != n - 1)
        throw InputError("gn_from_params: b must have length n-1");
    if (static_cast<int>(p.avec.size()) != n - 2)
        throw InputError("gn_from_params: avec must have length n-2");
    if (p.c.rows != n - 2 || p.c.cols != n - 2)
        throw InputError("gn_from_params: c block must be (n-2) x (n-2)");
    if (p.c.transpose() * p.c != Mat<Rational>::identity(n - 2))
        throw InputError("gn_from_params: c block is not exactly orthogonal");
    Mat<Rational> f(n, n);
    f.at(0, 0) = p.a;
    f.at(0, 1) = p.b[0];
    f.at(1, 1) = Rational(1) / p.a;
    for (int j = 0; j < n - 2; ++j) f.at(0, 2 + j) = p.avec[j];
    for (int i = 0; i < n - 2; ++i) {
        f.at(2 + i, 1) = p.b[1 + i];
        for (int j = 0; j < n - 2; ++j) f.at(2 + i, 2 + j) = p.c.at(i, j);
    }
    return f;
}

std::optional<GnViolation> gn_algebra_member(const MinkowskiSpace& M, const Mat<Rational>& A) {
    check_square(M, A, "gn_algebra_member");
    const int n = M.n;
    for (int i = 1; i < n; ++i) {
        if (!is_zero(A.at(i, 0)))
            return GnViolation{"i'", "null direction not preserved infinitesimally (component " +
                                         std::to_string(i) + ")",
                               {i, 0}};
    }
    Mat<Rational> eta = M.eta();
    Mat<Rational> G = A.transpose() * eta + eta * A;
    std::vector<int> perp;
    perp.push_back(0);
    for (int i = 2; i < n; ++i) perp.push_back(i);
    for (std::size_t p = 0; p < perp.size(); ++p) {
        for (std::size_t q = p; q < perp.size(); ++q) {
            int i = perp[p], j = perp[q];
            if (!is_zero(G.at(i, j)))
                return GnViolation{"ii'",
                                   "infinitesimal pairing defect on the orthogonal hyperplane at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")",
                                   {i, j}};
        }
    }
    for (int z = 0; z < n; ++z) {
        if (!is_zero(G.at(0, z)))
            return GnViolation{"iii'",
                               "infinitesimal pairing defect against the null direction at argument " +
                                   std::to_string(z),
                               {0, z}};
    }
    return std::nullopt;
}

Tensor<Rational> pullback_eta_delta(const MinkowskiSpace& M, const Mat<Rational>& f) {
    check_square(M, f, "pullback_eta_delta");
    Mat<Rational> eta = M.eta();
    Mat<Rational> d = f.transpose() * eta * f - eta;
    return mat_to_tensor(d, Variance::Co, Variance::Co);
}

Tensor<Rational> pullback_covariant(const Mat<Rational>& f, const Tensor<Rational>& T) {
    for (Variance v : T.variance())
        if (v != Variance::Co) throw InputError("pullback_covariant: tensor must be all-covariant");
    if (f.rows != T.n() || f.cols != T.n())
        throw InputError("pullback_covariant: dimension mismatch");
    return change_basis(T, f, f); // inverse never consulted for covariant slots
}

Rational full_contraction_paired(const Tensor<Rational>& T, const Mat<Rational>& g,
                                 const std::vector<std::pair<int, int>>& pairing) {
    const int r = T.rank();
    if (r == 0) return T.components()[0];
    if (r % 2 != 0) throw InputError("full_contraction: rank must be even");
    for (Variance v : T.variance())
        if (v != Variance::Co) throw InputError("full_contraction: tensor must be all-covariant");
    std::vector<bool> used(r, false);
    for (auto [p, q] : pairing) {
        if (p < 0 || q < 0 || p >= r || q >= r || p == q || used[p] || used[q])
            throw InputError("full_contraction: pairing is not a perfect matching");
        used[p] = used[q] = true;
    }
    if (static_cast<int>(pairing.size()) * 2 != r)
        throw InputError("full_contraction: pairing is not a perfect matching");
    Mat<Rational> ginv = inverse(g);
    Rational acc = 0;
    std::vector<int> idx(r, 0);
    do {
        const Rational& v = T.at(idx);
        if (is_zero(v)) continue;
        Rational term = v;
        for (auto [p, q] : pairing) {
            term *= ginv.at(idx[p], idx[q]);
            if (is_zero(term)) break;
        }
        acc += term;
    } while (T.next_index(idx));
    return acc;
}

Rational full_contraction(const Tensor<Rational>& T, const Mat<Rational>& g) {
    std::vector<std::pair<int, int>> pairing;
    for (int s = 0; s + 1 < T.rank(); s += 2) pairing.emplace_back(s, s + 1);
    return full_contraction_paired(T, g, pairing);
}

} // namespace kundt
