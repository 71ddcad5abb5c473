#include "orthoweave/numth.hpp"

#include <numeric>
#include <optional>

#include "orthoweave/errors.hpp"

namespace orthoweave {

namespace {

QuadExt z(const mpz_class& v) { return QuadExt(Rat(v, 1)); }

}  // namespace

OrthoPoint orthocubic_point(const Slope& s) {
  // negative slopes: reflect the positive picture through x = 0
  const bool neg = s.p < 0;
  mpz_class p = neg ? mpz_class(-s.p) : s.p, q = s.q;
  QuadExt a = z(p * p), b = z(q * q), c = z((p - q) * (p - q));
  QuadExt d = QuadExt::sqrt2() * z(p * p - p * q + q * q);
  if (neg) a = -a;
  OrthoPoint o;
  o.slope = s;
  o.invvec = InvVec::from_coords(2, VecKind::Point, {a, b, c, d});
  QuadExt w = d - c;
  o.cartesian = {a / w, b / w};
  return o;
}

QMatrix conway_step_matrix(long k) {
  if (k < 0) throw DomainError("twist count must be >= 0");
  QMatrix step = (cubic_element("s1") * cubic_element("r13")).matrix.matrix();
  QMatrix m = QMatrix::identity(4);
  for (long i = 0; i < k; ++i) m = m * step;
  return m * cubic_element("r12").matrix.matrix();
}

QMatrix conway_step_closed_form(long k) {
  QuadExt K(k), r2 = QuadExt::sqrt2();
  return QMatrix::from_rows({
      {0, 1 - K * K, -K * (K + 2), r2 * K * (K + 1)},
      {1, 0, 0, 0},
      {0, -K * (K - 2), 1 - K * K, r2 * K * (K - 1)},
      {0, -r2 * K * (K - 1), -r2 * K * (K + 1), 2 * K * K + 1},
  });
}

InvVec orthocubic_point_oracle(const std::vector<long>& coeffs) {
  if (coeffs.empty()) throw DomainError("empty coefficient list");
  if (coeffs[0] < 0) throw DomainError("a1 must be >= 0");
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    if (coeffs[i] < 1) throw DomainError("a2..an must be >= 1");
  QVector v{1, 0, 1, QuadExt::sqrt2()};
  for (std::size_t i = coeffs.size(); i-- > 0;) v = conway_step_matrix(coeffs[i]) * v;
  return InvVec::from_coords(2, VecKind::Point, v);
}

std::array<QuadExt, 2> point_from_tangle(const OrthoTangle& t) {
  const std::size_t ne = t.corners[NE];
  if (!(t.spheres.at(ne) == base_corner(NE))) throw GeometryError("NE corner is not S4");
  for (const auto& p : t.open_paths) {
    if (p.size() < 2) continue;
    std::optional<std::size_t> other;
    if (p.front() == ne) other = p[1];
    if (p.back() == ne) other = p[p.size() - 2];
    if (!other) continue;
    auto c = cartesian(tangency_point(t.spheres[ne], t.spheres[*other]));
    if (!c) throw GeometryError("corner tangency at infinity");
    return {(*c)[0], (*c)[1]};
  }
  throw GeometryError("no strand ends at the NE corner");
}

DiophantineSolution diophantine_from(const mpz_class& p, const mpz_class& q) {
  DiophantineSolution s;
  s.p = p;
  s.q = q;
  s.x = p;
  s.y = q;
  s.z = p - q;
  s.t = p * p - p * q + q * q;
  s.degenerate = s.z == 0;
  return s;
}

bool satisfies_identity(const DiophantineSolution& s) {
  auto f = [](const mpz_class& v) { return mpz_class(v * v * v * v); };
  return f(s.x) + f(s.y) + f(s.z) == 2 * s.t * s.t;
}

bool is_primitive(const DiophantineSolution& s) {
  mpz_class g = gcd(gcd(s.x, s.y), gcd(s.z, s.t));
  return abs(g) == 1;
}

std::vector<DiophantineSolution> diophantine(long limit) {
  if (limit < 1) throw DomainError("limit must be >= 1");
  std::vector<DiophantineSolution> out{diophantine_from(1, 1)};
  for (long p = 2; p <= limit; ++p)
    for (long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) out.push_back(diophantine_from(p, q));
  return out;
}

}  // namespace orthoweave
