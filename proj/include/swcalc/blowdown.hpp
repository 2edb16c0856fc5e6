#pragma once

// Rational-blowdown configurations C_p: the linear plumbing Gram, the lens
// space boundary L(p^2, 1-p), the finite set of spin-c restrictions that
// descend, and characteristic lifts with matching formal dimension.
//
// Descent rule: a restriction pairing vector v = (k.u_0, ..., k.u_{p-2})
// descends iff v_i == u_i^2 (mod 2) and v^T G^{-1} v = -(p-1).  The square
// value comes from the dimension equality d_{X_(p)}(k) = d_X(k~) of the
// Rational Blowdown Theorem: removing C_p raises the signature by p-1 and
// drops the Euler number by p-1, so 3 sign + 2 e changes by p-1 and the
// lift's square must shrink by exactly that much.

#include "swcalc/lattice.hpp"

#include <optional>
#include <vector>

namespace swcalc {

// (p-1) x (p-1) chain matrix with diagonal (-(p+2), -2, ..., -2); p >= 2.
IntMat cp_gram(int p);

struct LensBoundary {
    Int p_squared;
    Int twisting;
    bool operator==(const LensBoundary&) const = default;
};
LensBoundary lens_boundary(int p);

struct CpConfig {
    int p = 0;
    std::vector<ClassVector> classes;  // u_0 ... u_{p-2} in the ambient lattice
    IntMat gram;

    // validates the chain invariants against cp_gram(p)
    static CpConfig from_classes(int p, std::vector<ClassVector> classes);
};

// All descent-allowed restriction vectors, sorted lexicographically.
// Exhaustive search; negative definiteness makes the ball finite (a
// Cauchy-Schwarz bound gives |v_i| <= sqrt((p-1)(p+2)) < p+3).
std::vector<IntVec> allowed_restrictions(int p);

bool descends(const IntVec& k_pairings, int p);

struct Lift {
    ClassVector klift;
    IntVec restriction;
};

// Lift search: candidate pairings against the complement generators extend
// across C_p by an allowed restriction; accepted lifts are integral and
// characteristic in the ambient lattice.
class LiftProblem {
public:
    LiftProblem(std::vector<ClassVector> complement_generators, CpConfig config);

    // all integral characteristic lifts, ordered by restriction (lex)
    std::vector<Lift> lift_all(const IntVec& candidate_pairings) const;
    // first of lift_all; nullopt = NotFound (reported, not fatal)
    std::optional<Lift> lift(const IntVec& candidate_pairings) const;

    const CpConfig& config() const { return config_; }
    const std::vector<ClassVector>& generators() const { return gens_; }

private:
    std::vector<ClassVector> gens_;
    CpConfig config_;
    LatticePtr ambient_;
    RatMat inverse_;              // of the combined pairing matrix
    std::vector<IntVec> allowed_;
};

// spec-shaped convenience wrapper
std::optional<Lift> lift(const IntVec& candidate_pairings, const LatticePtr& ambient,
                         const CpConfig& config,
                         const std::vector<ClassVector>& complement_generators);

}  // namespace swcalc
