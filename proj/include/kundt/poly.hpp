#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kundt/rational.hpp"

namespace kundt {

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;
using Exps = std::vector<int>;

inline VarListPtr make_vars(VarList names) {
    return std::make_shared<const VarList>(std::move(names));
}

/// Graded lexicographic order: higher total degree wins, ties broken
/// lexicographically with earlier variables weighing more.
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

Rational rational_pow(const Rational& base, int e);

/// Multivariate polynomial with exact rational coefficients over a fixed,
/// ordered variable list. Zero coefficients are never stored; the zero
/// polynomial has no terms.
class Poly {
public:
    using TermMap = std::map<Exps, Rational, GrlexLess>;

    Poly() = default;
    explicit Poly(VarListPtr vars) : vars_(std::move(vars)) {}

    static Poly constant(VarListPtr vars, const Rational& c);
    static Poly variable(VarListPtr vars, std::size_t index);

    const VarListPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_unbound_zero() const;
    bool is_constant() const;
    /// Constant term (0 if absent). For is_constant() polys this is the value.
    Rational constant_value() const;

    /// -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(std::size_t var) const;

    void add_term(const Exps& e, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rational& c) const;
    friend Poly operator*(const Rational& c, const Poly& p) { return p * c; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(std::size_t var) const;
    Rational eval(const std::vector<Rational>& point) const;
    /// Replaces one variable by a polynomial over the same variable list.
    Poly substitute(std::size_t var, const Poly& replacement) const;
    Poly pow(int e) const;

    /// Exact division: true and sets q iff *this == q * d.
    bool try_divide(const Poly& d, Poly& q) const;

    /// Re-expresses the polynomial over a variable list that contains all of
    /// this one's variables (matched by name).
    Poly lift(const VarListPtr& bigger) const;

    /// Leading term under grlex. Pre: nonzero.
    const std::pair<const Exps, Rational>& leading() const;
    Rational leading_coeff() const { return leading().second; }

    std::string str() const;

private:
    void check_same_vars(const Poly& o) const;

    VarListPtr vars_;
    TermMap terms_;
};

/// Convenience: 1 and single variables over a list.
Poly poly_one(const VarListPtr& vars);

} // namespace kundt
