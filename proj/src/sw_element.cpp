#include "swcalc/sw_element.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace swcalc {

void SWElement::require_same_vars(const SWElement& o, const char* op) const {
    if (vars_ != o.vars_)
        throw SwError(std::string(op) + ": variable lists differ");
}

SWElement SWElement::constant(std::vector<std::string> vars, const Int& c) {
    SWElement e(std::move(vars));
    e.add_term(ExpVec(e.vars_.size(), 0), c);
    return e;
}

SWElement SWElement::monomial(std::vector<std::string> vars, ExpVec exps, const Int& coeff) {
    if (exps.size() != vars.size())
        throw SwError("monomial: exponent length != variable count");
    SWElement e(std::move(vars));
    e.add_term(exps, coeff);
    return e;
}

SWElement SWElement::variable_power(std::vector<std::string> vars, const std::string& var,
                                    long long k) {
    ExpVec e(vars.size(), 0);
    auto it = std::find(vars.begin(), vars.end(), var);
    if (it == vars.end())
        throw SwError("variable '" + var + "' not in the variable list");
    e[static_cast<std::size_t>(it - vars.begin())] = k;
    return monomial(std::move(vars), std::move(e), 1);
}

Int SWElement::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void SWElement::add_term(const ExpVec& e, const Int& c) {
    if (e.size() != vars_.size())
        throw SwError("add_term: exponent length != variable count");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SWElement SWElement::operator+(const SWElement& o) const {
    require_same_vars(o, "add");
    SWElement r(*this);
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

SWElement SWElement::operator-(const SWElement& o) const {
    require_same_vars(o, "sub");
    SWElement r(*this);
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

SWElement SWElement::operator-() const {
    SWElement r(vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

SWElement SWElement::operator*(const SWElement& o) const {
    require_same_vars(o, "mul");
    SWElement r(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(ea);
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

SWElement SWElement::operator*(const Int& s) const {
    SWElement r(vars_);
    if (s == 0)
        return r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, c * s);
    return r;
}

SWElement operator*(const Int& s, const SWElement& e) { return e * s; }

SWElement SWElement::extended_to(std::vector<std::string> new_vars) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end())
            throw SwError("extend: variable '" + vars_[i] + "' missing from new list");
        where[i] = static_cast<std::size_t>(it - new_vars.begin());
    }
    SWElement r(std::move(new_vars));
    for (const auto& [e, c] : terms_) {
        ExpVec ne(r.vars_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            ne[where[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

SWElement SWElement::substitute_power(const std::string& var, long long k) const {
    if (k == 0)
        throw SwError("substitute_power: exponent must be nonzero");
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        throw SwError("substitute_power: variable '" + var + "' not in list");
    const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    SWElement r(vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec ne(e);
        ne[idx] *= k;
        r.add_term(ne, c);
    }
    return r;
}

std::optional<SWElement> SWElement::divided_by(const SWElement& o) const {
    require_same_vars(o, "div");
    if (o.is_zero())
        throw SwError("division by the zero element");
    if (is_zero())
        return zero(vars_);
    // Laurent monomials are units, so exact division reduces to sparse
    // polynomial division by the lex-leading term of the divisor.
    SWElement rem(*this);
    SWElement quot(vars_);
    const auto& dlead = *o.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        if (rlead.second % dlead.second != 0)
            return std::nullopt;
        ExpVec e(rlead.first);
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] -= dlead.first[i];
        SWElement m = monomial(vars_, std::move(e), rlead.second / dlead.second);
        quot = quot + m;
        rem = rem - m * o;
        if (!rem.is_zero() && rem.terms_.rbegin()->first >= rlead.first)
            return std::nullopt;  // no progress: not divisible
    }
    return quot;
}

SWElement SWElement::mirrored() const {
    SWElement r(vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec ne(e);
        for (auto& x : ne)
            x = -x;
        r.add_term(ne, c);
    }
    return r;
}

std::string SWElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out << a.str();
        else if (a == 1)
            out << mono;
        else
            out << a.str() << "*" << mono;
    }
    return out.str();
}

SWFraction::SWFraction(SWElement num, SWElement den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars())
        throw SwError("fraction: numerator and denominator variable lists differ");
    if (den_.is_zero())
        throw SwError("fraction: zero denominator");
}

SWFraction::SWFraction(SWElement num)
    : SWFraction(num, SWElement::constant(num.vars(), 1)) {}

SWFraction SWFraction::operator+(const SWFraction& o) const {
    return SWFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

SWFraction SWFraction::operator-(const SWFraction& o) const {
    return SWFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

SWFraction SWFraction::operator-() const { return SWFraction(-num_, den_); }

SWFraction SWFraction::operator*(const SWFraction& o) const {
    return SWFraction(num_ * o.num_, den_ * o.den_);
}

bool SWFraction::operator==(const SWFraction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::optional<SWElement> SWFraction::reduce_to_element() const {
    return num_.divided_by(den_);
}

std::string SWFraction::to_string() const {
    auto elem = reduce_to_element();
    if (elem)
        return elem->to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

AlexanderPolynomial::AlexanderPolynomial(std::map<long long, Int> coeffs)
    : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
    Int at_one = 0;
    for (const auto& [i, c] : coeffs_) {
        auto mirror = coeffs_.find(-i);
        if (mirror == coeffs_.end() || mirror->second != c)
            throw SwError("Alexander polynomial must be symmetrized (palindromic)");
        at_one += c;
    }
    if (at_one != 1 && at_one != -1)
        throw SwError("Alexander polynomial must satisfy Delta(1) = +-1");
}

AlexanderPolynomial AlexanderPolynomial::unit() {
    return AlexanderPolynomial({{0, 1}});
}

AlexanderPolynomial AlexanderPolynomial::twist_knot(const Int& n) {
    if (n == 0)
        return unit();
    return AlexanderPolynomial({{1, n}, {0, 1 - 2 * n}, {-1, n}});
}

SWElement AlexanderPolynomial::at_square(const std::vector<std::string>& vars,
                                         const std::string& var) const {
    SWElement r(vars);
    for (const auto& [i, c] : coeffs_)
        r = r + SWElement::variable_power(vars, var, 2 * i) * c;
    return r;
}

}  // namespace swcalc
