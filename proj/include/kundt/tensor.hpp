#pragma once

#include <vector>

#include "kundt/linalg.hpp"

namespace kundt {

enum class Variance { Co, Contra };

/// Dense tensor of rank r on an n-dimensional space, components flat in
/// row-major order (first slot slowest). T is Rational for point tensors
/// and RatFunc for tensor fields on a chart.
template <class T>
class Tensor {
public:
    Tensor() = default;
    Tensor(int n, std::vector<Variance> variance)
        : n_(n), variance_(std::move(variance)) {
        std::size_t sz = 1;
        for (std::size_t k = 0; k < variance_.size(); ++k) sz *= static_cast<std::size_t>(n_);
        comp_.assign(sz, T{});
    }

    int n() const { return n_; }
    int rank() const { return static_cast<int>(variance_.size()); }
    const std::vector<Variance>& variance() const { return variance_; }
    const std::vector<T>& components() const { return comp_; }
    std::vector<T>& components() { return comp_; }

    std::size_t flat(const std::vector<int>& idx) const {
        std::size_t f = 0;
        for (int i : idx) f = f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
        return f;
    }

    T& at(const std::vector<int>& idx) { return comp_[flat(idx)]; }
    const T& at(const std::vector<int>& idx) const { return comp_[flat(idx)]; }

    bool next_index(std::vector<int>& idx) const {
        for (int k = rank() - 1; k >= 0; --k) {
            if (++idx[k] < n_) return true;
            idx[k] = 0;
        }
        return false;
    }

    bool is_zero() const {
        for (const auto& v : comp_)
            if (!scalar_is_zero(v)) return false;
        return true;
    }

    Tensor operator+(const Tensor& o) const {
        check_shape(o);
        Tensor r = *this;
        for (std::size_t i = 0; i < comp_.size(); ++i) r.comp_[i] = comp_[i] + o.comp_[i];
        return r;
    }

    Tensor operator-(const Tensor& o) const {
        check_shape(o);
        Tensor r = *this;
        for (std::size_t i = 0; i < comp_.size(); ++i) r.comp_[i] = comp_[i] - o.comp_[i];
        return r;
    }

    Tensor operator*(const T& s) const {
        Tensor r = *this;
        for (auto& v : r.comp_) v = v * s;
        return r;
    }

    bool operator==(const Tensor& o) const {
        if (n_ != o.n_ || variance_ != o.variance_) return false;
        for (std::size_t i = 0; i < comp_.size(); ++i)
            if (!(comp_[i] == o.comp_[i])) return false;
        return true;
    }
    bool operator!=(const Tensor& o) const { return !(*this == o); }

private:
    void check_shape(const Tensor& o) const {
        if (n_ != o.n_ || variance_ != o.variance_)
            throw InputError("Tensor: shape mismatch");
    }

    int n_ = 0;
    std::vector<Variance> variance_;
    std::vector<T> comp_;
};

template <class T>
Tensor<T> tensor_product(const Tensor<T>& a, const Tensor<T>& b) {
    if (a.n() != b.n()) throw InputError("tensor_product: dimension mismatch");
    std::vector<Variance> var = a.variance();
    var.insert(var.end(), b.variance().begin(), b.variance().end());
    Tensor<T> r(a.n(), var);
    const std::size_t bs = b.components().size();
    for (std::size_t i = 0; i < a.components().size(); ++i) {
        if (scalar_is_zero(a.components()[i])) continue;
        for (std::size_t j = 0; j < bs; ++j)
            r.components()[i * bs + j] = a.components()[i] * b.components()[j];
    }
    return r;
}

/// Contracts slots s1 and s2 against the rank-2 pairing matrix M:
/// out[rest] = sum_{p,q} in[.. p .. q ..] * M(p, q). Slots are removed.
template <class T>
Tensor<T> contract_with(const Tensor<T>& t, int s1, int s2, const Mat<T>& M) {
    if (s1 == s2 || s1 < 0 || s2 < 0 || s1 >= t.rank() || s2 >= t.rank())
        throw InputError("contract_with: bad slot pair");
    if (M.rows != t.n() || M.cols != t.n()) throw InputError("contract_with: pairing shape");
    if (s1 > s2) std::swap(s1, s2);
    std::vector<Variance> var;
    for (int k = 0; k < t.rank(); ++k)
        if (k != s1 && k != s2) var.push_back(t.variance()[k]);
    Tensor<T> r(t.n(), var);
    std::vector<int> idx(t.rank(), 0);
    std::vector<int> rest(var.size(), 0);
    do {
        const T& v = t.at(idx);
        if (scalar_is_zero(v)) continue;
        const T& w = M.at(idx[s1], idx[s2]);
        if (scalar_is_zero(w)) continue;
        int k = 0;
        for (int s = 0; s < t.rank(); ++s)
            if (s != s1 && s != s2) rest[k++] = idx[s];
        r.at(rest) = r.at(rest) + v * w;
    } while (t.next_index(idx));
    return r;
}

/// Natural trace of a contra slot against a co slot (no metric involved).
template <class T>
Tensor<T> contract_trace(const Tensor<T>& t, int s1, int s2) {
    if (s1 == s2 || s1 < 0 || s2 < 0 || s1 >= t.rank() || s2 >= t.rank())
        throw InputError("contract_trace: bad slot pair");
    if (t.variance()[s1] == t.variance()[s2])
        throw InputError("contract_trace: slots must have opposite variance");
    if (s1 > s2) std::swap(s1, s2);
    std::vector<Variance> var;
    for (int k = 0; k < t.rank(); ++k)
        if (k != s1 && k != s2) var.push_back(t.variance()[k]);
    Tensor<T> r(t.n(), var);
    std::vector<int> idx(t.rank(), 0);
    std::vector<int> rest(var.size(), 0);
    do {
        if (idx[s1] != idx[s2]) continue;
        const T& v = t.at(idx);
        if (scalar_is_zero(v)) continue;
        int k = 0;
        for (int s = 0; s < t.rank(); ++s)
            if (s != s1 && s != s2) rest[k++] = idx[s];
        r.at(rest) = r.at(rest) + v;
    } while (t.next_index(idx));
    return r;
}

/// Components in the frame whose vectors are the columns of `basis`.
/// Covariant slots pair with the columns, contravariant slots with the rows
/// of the inverse.
template <class T>
Tensor<T> change_basis(const Tensor<T>& t, const Mat<T>& basis, const Mat<T>& basis_inv) {
    Tensor<T> cur = t;
    const int n = t.n();
    for (int s = 0; s < t.rank(); ++s) {
        Tensor<T> next(n, t.variance());
        std::vector<int> idx(t.rank(), 0);
        do {
            const T& v = cur.at(idx);
            if (scalar_is_zero(v)) continue;
            std::vector<int> out = idx;
            const int j = idx[s];
            for (int a = 0; a < n; ++a) {
                const T& f = (t.variance()[s] == Variance::Co) ? basis.at(j, a)
                                                               : basis_inv.at(a, j);
                if (scalar_is_zero(f)) continue;
                out[s] = a;
                next.at(out) = next.at(out) + v * f;
            }
        } while (cur.next_index(idx));
        cur = std::move(next);
    }
    return cur;
}

template <class T>
Tensor<T> mat_to_tensor(const Mat<T>& m, Variance v1, Variance v2) {
    Tensor<T> t(m.rows, {v1, v2});
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at({i, j}) = m.at(i, j);
    return t;
}

template <class T>
Mat<T> tensor_to_mat(const Tensor<T>& t) {
    if (t.rank() != 2) throw InputError("tensor_to_mat: rank must be 2");
    Mat<T> m(t.n(), t.n());
    for (int i = 0; i < t.n(); ++i)
        for (int j = 0; j < t.n(); ++j) m.at(i, j) = t.at({i, j});
    return m;
}

} // namespace kundt
