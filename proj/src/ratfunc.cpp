#include "kundt/ratfunc.hpp"

#include <algorithm>

#include "kundt/errors.hpp"

namespace kundt {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars() && !(num_.vars() && den_.vars() && *num_.vars() == *den_.vars()))
        throw InputError("RatFunc: numerator and denominator variable lists differ");
    if (den_.is_zero()) throw InputError("RatFunc: zero denominator");
    normalize();
}

namespace {

// Elementwise-min exponent over all terms; nullopt for the zero polynomial.
std::optional<Exps> monomial_content(const Poly& p) {
    std::optional<Exps> m;
    for (const auto& [e, c] : p.terms()) {
        if (!m) {
            m = e;
            continue;
        }
        for (std::size_t i = 0; i < e.size(); ++i) (*m)[i] = std::min((*m)[i], e[i]);
    }
    return m;
}

Poly shift_down(const Poly& p, const Exps& by) {
    Poly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exps ne = e;
        for (std::size_t i = 0; i < ne.size(); ++i) ne[i] -= by[i];
        r.add_term(ne, c);
    }
    return r;
}

} // namespace

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = poly_one(num_.vars());
        return;
    }
    auto cn = monomial_content(num_);
    auto cd = monomial_content(den_);
    Exps common(num_.nvars(), 0);
    bool any = false;
    for (std::size_t i = 0; i < common.size(); ++i) {
        common[i] = std::min((*cn)[i], (*cd)[i]);
        any = any || common[i] > 0;
    }
    if (any) {
        num_ = shift_down(num_, common);
        den_ = shift_down(den_, common);
    }
    Poly q(num_.vars());
    if (!den_.is_constant() && num_.try_divide(den_, q)) {
        num_ = q;
        den_ = poly_one(num_.vars());
    } else if (!den_.is_constant() && !num_.is_constant() && den_.try_divide(num_, q)) {
        num_ = poly_one(num_.vars());
        den_ = q;
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

const Poly& RatFunc::as_poly() const {
    if (!is_polynomial()) throw InputError("RatFunc::as_poly: denominator is not constant");
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_unbound()) return o;
    if (o.is_unbound()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (is_unbound()) return -o;
    if (o.is_unbound()) return *this;
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_unbound()) return RatFunc(Poly(o.vars()));
    if (o.is_unbound()) return RatFunc(Poly(vars()));
    Poly a = num_, b = o.num_, c = den_, d = o.den_, q(num_.vars());
    if (!d.is_constant() && !a.is_zero() && a.try_divide(d, q)) {
        a = q;
        d = poly_one(num_.vars());
    }
    if (!c.is_constant() && !b.is_zero() && b.try_divide(c, q)) {
        b = q;
        c = poly_one(num_.vars());
    }
    return RatFunc(a * b, c * d);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw InputError("RatFunc: division by zero");
    if (is_unbound()) return RatFunc(Poly(o.vars()));
    return *this * RatFunc(o.den_, o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    if (is_unbound()) return o.is_zero();
    if (o.is_unbound()) return is_zero();
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::derivative(std::size_t var) const {
    if (is_unbound()) return *this;
    if (is_polynomial()) return RatFunc(num_.derivative(var));
    Poly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatFunc(std::move(n), den_ * den_);
}

std::optional<Rational> RatFunc::eval(const std::vector<Rational>& point) const {
    if (is_unbound()) return Rational(0);
    Rational d = den_.eval(point);
    if (kundt::is_zero(d)) return std::nullopt;
    return num_.eval(point) / d;
}

RatFunc RatFunc::lift(const VarListPtr& bigger) const {
    if (is_unbound()) return RatFunc(Poly(bigger));
    return RatFunc(num_.lift(bigger), den_.lift(bigger));
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace kundt
