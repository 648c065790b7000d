#include "kundt/poly.hpp"

#include <algorithm>
#include <sstream>

#include "kundt/errors.hpp"

namespace kundt {

Rational rational_pow(const Rational& base, int e) {
    if (e < 0) throw InputError("rational_pow: negative exponent");
    Rational acc = 1;
    Rational b = base;
    int k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

Poly Poly::constant(VarListPtr vars, const Rational& c) {
    Poly p(std::move(vars));
    if (!kundt::is_zero(c)) p.terms_.emplace(Exps(p.nvars(), 0), c);
    return p;
}

Poly Poly::variable(VarListPtr vars, std::size_t index) {
    Poly p(std::move(vars));
    if (index >= p.nvars()) throw InputError("Poly::variable: index out of range");
    Exps e(p.nvars(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Poly::constant_value() const {
    Exps zero(nvars(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exps& e = terms_.rbegin()->first;
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int Poly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return terms_.empty() ? -1 : d;
}

void Poly::add_term(const Exps& e, const Rational& c) {
    if (e.size() != nvars()) throw InputError("Poly::add_term: exponent length mismatch");
    for (int x : e)
        if (x < 0) throw InputError("Poly::add_term: negative exponent");
    if (kundt::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (kundt::is_zero(it->second)) terms_.erase(it);
    }
}

void Poly::check_same_vars(const Poly& o) const {
    if (vars_ == o.vars_) return;
    if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
    throw InputError("Poly: operands have different variable lists");
}

// A default-constructed Poly is zero with no variable list; arithmetic
// adopts the other operand's list so generic containers can use T{} as zero.
bool Poly::is_unbound_zero() const { return !vars_ && terms_.empty(); }

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (is_unbound_zero()) return o;
    if (o.is_unbound_zero()) return *this;
    check_same_vars(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (is_unbound_zero()) return -o;
    if (o.is_unbound_zero()) return *this;
    check_same_vars(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_unbound_zero()) return Poly(o.vars());
    if (o.is_unbound_zero()) return Poly(vars_);
    check_same_vars(o);
    Poly r(vars_);
    Exps e(nvars());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(vars_);
    if (kundt::is_zero(c)) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (is_unbound_zero()) return o.is_zero();
    if (o.is_unbound_zero()) return is_zero();
    check_same_vars(o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= nvars()) throw InputError("Poly::derivative: variable index out of range");
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars()) throw InputError("Poly::eval: point dimension mismatch");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) t *= rational_pow(point[i], e[i]);
        }
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(std::size_t var, const Poly& replacement) const {
    check_same_vars(replacement);
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exps rest = e;
        rest[var] = 0;
        Poly t(vars_);
        t.add_term(rest, c);
        r += t * replacement.pow(e[var]);
    }
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw InputError("Poly::pow: negative exponent");
    Poly acc = Poly::constant(vars_, 1);
    Poly b = *this;
    while (e > 0) {
        if (e & 1) acc *= b;
        if ((e >>= 1) != 0) b *= b;
    }
    return acc;
}

bool Poly::try_divide(const Poly& d, Poly& q) const {
    check_same_vars(d);
    if (d.is_zero()) throw InputError("Poly::try_divide: division by zero polynomial");
    Poly r = *this;
    Poly quot(vars_);
    const Exps& de = d.leading().first;
    const Rational& dc = d.leading().second;
    // A true multiple of d always keeps its leading term divisible by LT(d).
    while (!r.is_zero()) {
        const Exps& re = r.leading().first;
        Exps qe(nvars());
        for (std::size_t i = 0; i < qe.size(); ++i) {
            qe[i] = re[i] - de[i];
            if (qe[i] < 0) return false;
        }
        Rational qc = r.leading().second / dc;
        Poly t(vars_);
        t.add_term(qe, qc);
        quot += t;
        r -= t * d;
    }
    q = quot;
    return true;
}

Poly Poly::lift(const VarListPtr& bigger) const {
    if (!bigger) throw InputError("Poly::lift: null variable list");
    if (vars_ && (*vars_ == *bigger)) {
        Poly same = *this;
        return same;
    }
    std::vector<std::size_t> where(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto it = std::find(bigger->begin(), bigger->end(), (*vars_)[i]);
        if (it == bigger->end())
            throw InputError("Poly::lift: variable '" + (*vars_)[i] + "' missing from target list");
        where[i] = static_cast<std::size_t>(it - bigger->begin());
    }
    Poly r(bigger);
    for (const auto& [e, c] : terms_) {
        Exps ne(bigger->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

const std::pair<const Exps, Rational>& Poly::leading() const {
    if (terms_.empty()) throw InputError("Poly::leading: zero polynomial");
    return *terms_.rbegin();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        if (!has_var || c != 1) {
            os << rational_str(c);
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << (*vars_)[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Poly poly_one(const VarListPtr& vars) { return Poly::constant(vars, 1); }

} // namespace kundt
