#include "swcalc/sw_ops.hpp"

#include <algorithm>

namespace swcalc {

Int dimension(const Int& k_square, const Int& sign, const Int& euler) {
    const Int num = k_square - (3 * sign + 2 * euler);
    if (num % 4 != 0)
        throw SwError("dimension: k^2 - (3 sign + 2 e) = " + num.str() +
                      " is not divisible by 4 (non-characteristic input)");
    return num / 4;
}

Int wall_cross(const Int& sw_minus_value, const Int& d) {
    if (d < 0 || d % 2 != 0)
        throw SwError("wall_cross: dimension must be even and nonnegative");
    const Int jump = ((d / 2) % 2 == 0) ? Int(-1) : Int(1);  // (-1)^(1 + d/2)
    return sw_minus_value + jump;
}

SWElement knot_surgery(const SWElement& sw, const AlexanderPolynomial& delta,
                       const std::string& torus_var) {
    return sw * delta.at_square(sw.vars(), torus_var);
}

SWFraction knot_surgery(const SWFraction& sw, const AlexanderPolynomial& delta,
                        const std::string& torus_var) {
    SWElement d = delta.at_square(sw.num().vars(), torus_var);
    return SWFraction(sw.num() * d, sw.den());
}

namespace {
std::vector<std::string> with_fresh(const std::vector<std::string>& vars,
                                    const std::string& fresh) {
    if (std::find(vars.begin(), vars.end(), fresh) != vars.end())
        throw SwError("blowup: variable '" + fresh + "' already in use");
    std::vector<std::string> out(vars);
    out.push_back(fresh);
    return out;
}

SWElement e_plus_e_inverse(const std::vector<std::string>& vars, const std::string& var) {
    return SWElement::variable_power(vars, var, 1) + SWElement::variable_power(vars, var, -1);
}
}  // namespace

SWElement blowup(const SWElement& sw, const std::string& exceptional_var) {
    auto vars = with_fresh(sw.vars(), exceptional_var);
    return sw.extended_to(vars) * e_plus_e_inverse(vars, exceptional_var);
}

SWFraction blowup(const SWFraction& sw, const std::string& exceptional_var) {
    auto vars = with_fresh(sw.num().vars(), exceptional_var);
    return SWFraction(sw.num().extended_to(vars) * e_plus_e_inverse(vars, exceptional_var),
                      sw.den().extended_to(vars));
}

SWElement skein_e1l(const SWElement& sw_unlink, const SWFraction& sw_minus_unknot,
                    const std::string& torus_var) {
    const auto& vars = sw_unlink.vars();
    if (vars.size() != 1 || vars != sw_minus_unknot.num().vars())
        throw SwError("skein: inputs must share one single variable");
    SWElement t = SWElement::variable_power(vars, torus_var, 1);
    SWElement tinv = SWElement::variable_power(vars, torus_var, -1);
    SWElement factor = (t - tinv) * (t - tinv);
    SWFraction result = SWFraction(sw_unlink) - SWFraction(factor) * sw_minus_unknot;
    auto reduced = result.reduce_to_element();
    if (!reduced)
        throw SwError("skein: non-cancelling denominator, inconsistent inputs");
    return *reduced;
}

SWElement collapse_variables(const SWElement& sw, const CollapseMap& collapse,
                             const std::vector<std::string>& out_vars) {
    for (const auto& v : sw.vars())
        if (!collapse.count(v))
            throw SwError("torus_surgery: collapse map does not cover variable '" + v + "'");
    std::vector<int> target(sw.vars().size(), -1);
    for (std::size_t i = 0; i < sw.vars().size(); ++i) {
        const auto& img = collapse.at(sw.vars()[i]);
        if (!img)
            continue;  // erased: the class restricts trivially
        auto it = std::find(out_vars.begin(), out_vars.end(), *img);
        if (it == out_vars.end())
            throw SwError("torus_surgery: collapse target '" + *img + "' not in output ring");
        target[i] = static_cast<int>(it - out_vars.begin());
    }
    SWElement out(out_vars);
    for (const auto& [e, c] : sw.terms()) {
        ExpVec ne(out_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (target[i] >= 0)
                ne[static_cast<std::size_t>(target[i])] += e[i];
        out.add_term(ne, c);
    }
    return out;
}

SWElement torus_surgery(const SWElement& sw_r, const SWElement& sw_q, const Int& n,
                        const CollapseMap& collapse) {
    if (n < 0)
        throw SwError("torus_surgery: n must be nonnegative");
    return sw_r + collapse_variables(sw_q, collapse, sw_r.vars()) * n;
}

SewnUpH1 sewn_up_h1(const Int& n, const Int& linking) {
    Int torsion = n - 2 * linking;
    if (torsion < 0)
        torsion = -torsion;
    return SewnUpH1{1, torsion};
}

bool ManifoldInvariantRecord::sw_is_zero() const {
    if (std::holds_alternative<SWElement>(sw))
        return std::get<SWElement>(sw).is_zero();
    return std::get<SWFraction>(sw).is_zero();
}

void ManifoldInvariantRecord::validate() const {
    if (!vanishing_axiom)
        return;
    if (*vanishing_axiom != "positive-scalar-curvature" && *vanishing_axiom != "positive-sphere")
        throw SwError("record '" + name + "': unknown vanishing axiom '" + *vanishing_axiom + "'");
    if (!sw_is_zero())
        throw SwError("record '" + name + "': vanishing axiom set but SW != 0");
}

}  // namespace swcalc
