#pragma once

#include <map>
#include <optional>

#include "kundt/tensor.hpp"

namespace kundt {

/// Null-adapted frame: column 0 spans the preferred null line, column 1 is
/// the transversal null direction, columns 2.. are the screen block. The
/// degenerate hyperplane is spanned by columns {0, 2, ..}.
template <class T>
struct AdaptedFrame {
    Mat<T> basis;
    Mat<T> inv;
};

template <class T>
AdaptedFrame<T> make_adapted_frame(Mat<T> basis) {
    if (basis.rows != basis.cols) throw InputError("adapted frame: basis not square");
    AdaptedFrame<T> f;
    f.inv = inverse(basis); // throws on singular input
    f.basis = std::move(basis);
    return f;
}

/// Weight of one slot index. Contravariant: transversal direction +1, screen
/// 0, null line -1. Covariant: dual pairing flips signs, so the coframe
/// element dual to the null line carries +1 and the one dual to the
/// transversal carries -1 (it is the annihilator of the hyperplane).
inline int slot_weight(Variance v, int index) {
    int w = index == 1 ? 1 : (index == 0 ? -1 : 0);
    return v == Variance::Contra ? w : -w;
}

template <class T>
int component_weight(const std::vector<Variance>& variance, const std::vector<int>& idx) {
    int w = 0;
    for (std::size_t s = 0; s < variance.size(); ++s) w += slot_weight(variance[s], idx[s]);
    return w;
}

/// Largest weight carrying a nonzero frame component; nullopt for the zero
/// tensor. Independent of the choice of frame adapted to the same flag.
template <class T>
std::optional<int> boost_order(const Tensor<T>& t, const AdaptedFrame<T>& frame) {
    Tensor<T> f = change_basis(t, frame.basis, frame.inv);
    std::optional<int> best;
    if (f.rank() == 0) {
        if (!scalar_is_zero(f.components()[0])) best = 0;
        return best;
    }
    std::vector<int> idx(f.rank(), 0);
    do {
        if (scalar_is_zero(f.at(idx))) continue;
        int w = component_weight<T>(f.variance(), idx);
        if (!best || w > *best) best = w;
    } while (f.next_index(idx));
    return best;
}

/// Splits t into homogeneous weight pieces (expressed back in the original
/// basis, so the pieces sum to t exactly). Zero tensor gives an empty map.
template <class T>
std::map<int, Tensor<T>> boost_decompose(const Tensor<T>& t, const AdaptedFrame<T>& frame) {
    Tensor<T> f = change_basis(t, frame.basis, frame.inv);
    std::map<int, Tensor<T>> buckets;
    if (f.rank() == 0) {
        if (!scalar_is_zero(f.components()[0])) buckets.emplace(0, t);
        return buckets;
    }
    std::vector<int> idx(f.rank(), 0);
    do {
        const T& v = f.at(idx);
        if (scalar_is_zero(v)) continue;
        int w = component_weight<T>(f.variance(), idx);
        auto it = buckets.find(w);
        if (it == buckets.end())
            it = buckets.emplace(w, Tensor<T>(t.n(), t.variance())).first;
        it->second.at(idx) = v;
    } while (f.next_index(idx));
    for (auto& [w, piece] : buckets) piece = change_basis(piece, frame.inv, frame.basis);
    return buckets;
}

enum class AlgebraicType { II, III };

/// Type II means boost order <= 0, type III means <= -1. The zero tensor is
/// every type.
template <class T>
bool is_type(const Tensor<T>& t, const AdaptedFrame<T>& frame, AlgebraicType type) {
    auto bo = boost_order(t, frame);
    if (!bo) return true;
    return *bo <= (type == AlgebraicType::II ? 0 : -1);
}

} // namespace kundt
