#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

#include "orthoweave/orthocubic.hpp"

namespace orthoweave {

struct OrthoPoint {
  Slope slope;
  InvVec invvec;  // 2-D point
  std::array<QuadExt, 2> cartesian;
};

OrthoPoint orthocubic_point(const Slope& s);

// (S1 R13)^k R12 from the cubic packing matrices, and the same matrix
// written out entry by entry.
QMatrix conway_step_matrix(long k);
QMatrix conway_step_closed_form(long k);

// M(a1)...M(an) applied to the point O_inf. Requires a1 >= 0, ai >= 1 after.
InvVec orthocubic_point_oracle(const std::vector<long>& coeffs);

// Projection to z = 0 of the tangency point on the strand edge at the NE
// corner sphere S4.
std::array<QuadExt, 2> point_from_tangle(const OrthoTangle& t);

struct DiophantineSolution {
  mpz_class p, q;
  mpz_class x, y, z, t;
  bool degenerate = false;  // z = 0
};

// x^4 + y^4 + z^4 = 2 t^2 from coprime 1 <= q < p <= limit, preceded by the
// degenerate (1,1,0,1).
std::vector<DiophantineSolution> diophantine(long limit);
DiophantineSolution diophantine_from(const mpz_class& p, const mpz_class& q);
bool satisfies_identity(const DiophantineSolution& s);
bool is_primitive(const DiophantineSolution& s);

}  // namespace orthoweave
