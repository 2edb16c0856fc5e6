#pragma once

// Small exact linear algebra over Z and Q: just what the lattice bookkeeping
// needs (solves, determinants, adjugates, ranks).  Matrices are dense
// row-major vectors of vectors; every dimension in this project is <= 13.

#include "swcalc/numeric.hpp"

#include <optional>
#include <vector>

namespace swcalc {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

bool is_symmetric(const IntMat& m);
IntMat identity_matrix(std::size_t n);

// Exact solve of A x = b over Q by Gaussian elimination.
// Returns std::nullopt when A is singular.
std::optional<RatVec> rat_solve(const IntMat& a, const IntVec& b);
std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b);

// Exact inverse over Q; nullopt when singular.
std::optional<RatMat> rat_inverse(const IntMat& a);

// Fraction-free (Bareiss) determinant.
Int bareiss_det(IntMat a);

// Adjugate via cofactor minors, adj(A)*A = det(A)*I.  Integer throughout.
IntMat adjugate(const IntMat& a);

std::size_t rational_rank(const IntMat& a);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);

}  // namespace swcalc
