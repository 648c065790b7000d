#pragma once

#include <optional>
#include <string>

#include "kundt/tensor.hpp"

namespace kundt {

/// n-dimensional flat Lorentzian model space with the null frame
/// (k, l, m_1..m_{n-2}): the pairing has 1s at (0,1),(1,0) and the identity
/// on the screen block.
struct MinkowskiSpace {
    int n;
    explicit MinkowskiSpace(int dim) : n(dim) {
        if (n < 3) throw InputError("MinkowskiSpace: dimension must be >= 3");
    }
    Mat<Rational> eta() const;
};

struct GnViolation {
    std::string condition; // "i", "ii", "iii" (primed for algebra checks)
    std::string detail;
    std::vector<int> witness; // basis indices of the offending pairing
};

/// Membership in the group of invertible maps that scale the null line,
/// preserve the pairing on its orthogonal hyperplane, and preserve pairings
/// against the null direction. Reports the first violated condition.
std::optional<GnViolation> gn_member(const MinkowskiSpace& M, const Mat<Rational>& f);

/// Parameters of the standard form: scale a != 0 on the null direction,
/// couplings b (into the transversal column), avec (screen-to-null), and an
/// exactly orthogonal screen block c.
struct GnParams {
    Rational a;
    std::vector<Rational> b;    // length n-1
    std::vector<Rational> avec; // length n-2
    Mat<Rational> c;            // (n-2) x (n-2), orthogonal
};

Mat<Rational> gn_from_params(const MinkowskiSpace& M, const GnParams& p);

/// Linearized membership: tangent maps at the identity.
std::optional<GnViolation> gn_algebra_member(const MinkowskiSpace& M, const Mat<Rational>& A);

/// f*eta - eta as a covariant 2-tensor.
Tensor<Rational> pullback_eta_delta(const MinkowskiSpace& M, const Mat<Rational>& f);

/// Pullback f*T of an all-covariant tensor.
Tensor<Rational> pullback_covariant(const Mat<Rational>& f, const Tensor<Rational>& T);

/// Raises all indices of an even-ranked all-covariant tensor pairwise with
/// the inverse of g and contracts consecutive slots (0,1),(2,3),...
Rational full_contraction(const Tensor<Rational>& T, const Mat<Rational>& g);

/// Same with an explicit perfect matching of the slots.
Rational full_contraction_paired(const Tensor<Rational>& T, const Mat<Rational>& g,
                                 const std::vector<std::pair<int, int>>& pairing);

} // namespace kundt
