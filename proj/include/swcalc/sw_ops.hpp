#pragma once

// The Seiberg-Witten calculus: formal dimension, wall-crossing, knot surgery,
// blowup, the skein relation for E(1)_L, the Morgan-Mrowka-Szabo torus
// surgery formula, and the sewn-up link exterior H_1.

#include "swcalc/sw_element.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace swcalc {

// d(k) = (k^2 - (3 sign + 2 e)) / 4; throws when not divisible by 4
// (a non-integer dimension signals a non-characteristic input).
Int dimension(const Int& k_square, const Int& sign, const Int& euler);

// SW across a wall: returns sw_minus_value + (-1)^(1 + d/2); d even, >= 0.
Int wall_cross(const Int& sw_minus_value, const Int& d);

// SW_{X_K} = SW_X . Delta(t^2)
SWElement knot_surgery(const SWElement& sw, const AlexanderPolynomial& delta,
                       const std::string& torus_var);
SWFraction knot_surgery(const SWFraction& sw, const AlexanderPolynomial& delta,
                        const std::string& torus_var);

// SW_{X # CP^2-bar} = SW_X . (e + e^-1); exceptional_var must be fresh.
SWElement blowup(const SWElement& sw, const std::string& exceptional_var);
SWFraction blowup(const SWFraction& sw, const std::string& exceptional_var);

// SW_{E(1)_L} = SW_{E(1)_U} - (t - t^-1)^2 SW^-_{E(1)_{K0}}, reduced to a
// polynomial element; a non-cancelling denominator signals bad inputs.
SWElement skein_e1l(const SWElement& sw_unlink, const SWFraction& sw_minus_unknot,
                    const std::string& torus_var);

// Variable collapse used by the MMS formula: value = target variable, or
// nullopt to erase (the i-summation over multiples of the nullhomologous
// torus class).  Every variable of the Q-ring must be covered.
using CollapseMap = std::map<std::string, std::optional<std::string>>;

SWElement collapse_variables(const SWElement& sw, const CollapseMap& collapse,
                             const std::vector<std::string>& out_vars);

// SW_{X_n} = SW_R + n . collapse(SW_Q), n >= 0.
SWElement torus_surgery(const SWElement& sw_r, const SWElement& sw_q, const Int& n,
                        const CollapseMap& collapse);

// H_1(s(L;A_n)) = Z + Z_{|n - 2 linking|}; torsion order 0 means a free summand.
struct SewnUpH1 {
    Int free_rank;
    Int torsion_order;
    bool operator==(const SewnUpH1&) const = default;
};
SewnUpH1 sewn_up_h1(const Int& n, const Int& linking);

struct ManifoldInvariantRecord {
    std::string name;
    Int b_plus = 0;
    Int b_minus = 0;
    std::variant<SWElement, SWFraction> sw;
    std::optional<std::string> vanishing_axiom;  // "positive-scalar-curvature" | "positive-sphere"
    std::optional<std::string> chamber;          // "minus" when sw is the SW^- value

    void validate() const;  // a vanishing axiom forces sw = 0
    bool sw_is_zero() const;
};

}  // namespace swcalc
