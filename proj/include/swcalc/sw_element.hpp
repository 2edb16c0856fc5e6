#pragma once

// Integral group ring elements for Seiberg-Witten invariants: finite formal
// sums of Laurent monomials over a fixed variable list, plus a fraction
// variant for formal inverses like (t - t^-1)^-1.  Terms are kept in a
// std::map keyed by exponent vector, so iteration order (and every
// serialization) is canonical lexicographic.

#include "swcalc/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace swcalc {

using ExpVec = std::vector<long long>;

class SWElement {
public:
    SWElement() = default;  // zero over the empty variable list
    explicit SWElement(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static SWElement zero(std::vector<std::string> vars) { return SWElement(std::move(vars)); }
    static SWElement constant(std::vector<std::string> vars, const Int& c);
    static SWElement monomial(std::vector<std::string> vars, ExpVec exps, const Int& coeff);
    // t^k for a single named variable of the list
    static SWElement variable_power(std::vector<std::string> vars, const std::string& var,
                                    long long k);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<ExpVec, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Int coeff(const ExpVec& e) const;

    SWElement operator+(const SWElement& o) const;
    SWElement operator-(const SWElement& o) const;
    SWElement operator-() const;
    SWElement operator*(const SWElement& o) const;
    SWElement operator*(const Int& s) const;
    bool operator==(const SWElement& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const SWElement& o) const { return !(*this == o); }

    // Ring map induced by an injection of variable lists (each old variable
    // must appear in the new list).
    SWElement extended_to(std::vector<std::string> new_vars) const;

    // Substitute var -> var^k (k != 0); used for the Delta(t^2) substitution.
    SWElement substitute_power(const std::string& var, long long k) const;

    // Exact division; nullopt when o does not divide this in the Laurent ring.
    std::optional<SWElement> divided_by(const SWElement& o) const;

    // Mirror t -> t^-1 in every variable; palindromic == fixed by this.
    SWElement mirrored() const;
    bool is_palindromic() const { return *this == mirrored(); }

    std::string to_string() const;  // human form, canonical order

    void add_term(const ExpVec& e, const Int& c);  // accumulating, drops zeros

private:
    void require_same_vars(const SWElement& o, const char* op) const;

    std::vector<std::string> vars_;
    std::map<ExpVec, Int> terms_;
};

SWElement operator*(const Int& s, const SWElement& e);

class SWFraction {
public:
    SWFraction() = default;  // 0 / 1 over the empty list
    SWFraction(SWElement num, SWElement den);
    explicit SWFraction(SWElement num);

    const SWElement& num() const { return num_; }
    const SWElement& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    SWFraction operator+(const SWFraction& o) const;
    SWFraction operator-(const SWFraction& o) const;
    SWFraction operator-() const;
    SWFraction operator*(const SWFraction& o) const;

    // equality by cross-multiplication, exactly (den kept unreduced)
    bool operator==(const SWFraction& o) const;
    bool operator!=(const SWFraction& o) const { return !(*this == o); }

    // exact reduction to a ring element; nullopt when a denominator remains
    std::optional<SWElement> reduce_to_element() const;

    std::string to_string() const;

private:
    SWElement num_;
    SWElement den_;
};

// Symmetrized Alexander polynomial: palindromic Laurent coefficients in one
// variable with Delta(1) = +-1.  Unnormalized input is rejected.
class AlexanderPolynomial {
public:
    explicit AlexanderPolynomial(std::map<long long, Int> coeffs);
    static AlexanderPolynomial unit();  // Delta = 1 (the unknot)
    // twist knot family with n full twists, Delta = n t - (2n-1) + n t^-1
    static AlexanderPolynomial twist_knot(const Int& n);

    const std::map<long long, Int>& coeffs() const { return coeffs_; }

    // Delta(v^2) as an element over the given variable list
    SWElement at_square(const std::vector<std::string>& vars, const std::string& var) const;

private:
    std::map<long long, Int> coeffs_;
};

}  // namespace swcalc
