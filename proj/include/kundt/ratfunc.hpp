#pragma once

#include <optional>

#include "kundt/poly.hpp"

namespace kundt {

/// Rational function num/den over a shared variable list. Canonical form:
/// zero is 0/1, the denominator is monic under grlex, common monomial and
/// numeric content is cancelled, and exact polynomial quotients are taken
/// when they exist. No multivariate gcd: equality is decided by
/// cross-multiplication, so unreduced representatives are still compared
/// correctly.
class RatFunc {
public:
    /// Default is an unbound zero (no variable list yet); arithmetic adopts
    /// the other operand's list, mirroring Poly.
    RatFunc() = default;
    /*implicit*/ RatFunc(Poly p)
        : num_(std::move(p)), den_(num_.vars() ? poly_one(num_.vars()) : Poly()) {}
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const VarListPtr& vars, const Rational& c) {
        return RatFunc(Poly::constant(vars, c));
    }
    static RatFunc variable(const VarListPtr& vars, std::size_t i) {
        return RatFunc(Poly::variable(vars, i));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const VarListPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_unbound() const { return !num_.vars(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Pre: is_polynomial(). den is monic, so this is just the numerator.
    const Poly& as_poly() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative(std::size_t var) const;
    /// nullopt when the denominator vanishes at the point.
    std::optional<Rational> eval(const std::vector<Rational>& point) const;
    RatFunc lift(const VarListPtr& bigger) const;

    std::string str() const;

private:
    void normalize();

    Poly num_, den_;
};

inline RatFunc operator*(const Rational& c, const RatFunc& f) {
    if (f.is_unbound()) return f;
    return RatFunc(f.num() * c, f.den());
}

} // namespace kundt
