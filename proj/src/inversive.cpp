#include "orthoweave/inversive.hpp"

#include "orthoweave/errors.hpp"

namespace orthoweave {

namespace {

QuadExt form(const QVector& u, const QVector& v) {
  QuadExt s;
  std::size_t n = u.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
  if (!u[n - 1].is_zero() && !v[n - 1].is_zero()) s -= u[n - 1] * v[n - 1];
  return s;
}

void check_dim(int dim) {
  if (dim != 2 && dim != 3) throw DomainError("dimension must be 2 or 3");
}

}  // namespace

InvVec InvVec::from_coords(int dim, VecKind kind, QVector coords) {
  check_dim(dim);
  if (coords.size() != static_cast<std::size_t>(dim + 2)) throw DomainError("inversive vector needs d+2 coordinates");
  QuadExt q = form(coords, coords);
  if (kind == VecKind::Sphere && q != QuadExt(1)) throw DomainError("sphere vector must satisfy <v,v> = 1");
  if (kind == VecKind::Point) {
    if (!q.is_zero()) throw DomainError("point vector must be isotropic");
    bool all_zero = true;
    for (auto& c : coords) all_zero = all_zero && c.is_zero();
    if (all_zero) throw DomainError("point vector must be nonzero");
  }
  return InvVec(dim, kind, std::move(coords));
}

InvVec InvVec::operator-() const {
  QVector c = coords_;
  for (auto& x : c) x = -x;
  return InvVec(dim_, kind_, std::move(c));
}

bool lex_less(const InvVec& u, const InvVec& v) {
  if (u.dim_ != v.dim_) return u.dim_ < v.dim_;
  if (u.kind_ != v.kind_) return u.kind_ < v.kind_;
  for (std::size_t i = 0; i < u.coords_.size(); ++i) {
    if (lex_less(u.coords_[i], v.coords_[i])) return true;
    if (lex_less(v.coords_[i], u.coords_[i])) return false;
  }
  return false;
}

std::string InvVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].to_string();
  return s + ")";
}

QMatrix minkowski_form(int dim) {
  QMatrix q = QMatrix::identity(static_cast<std::size_t>(dim + 2));
  q(dim + 1, dim + 1) = -1;
  return q;
}

MobiusMap::MobiusMap(int dim, QMatrix m) : dim_(dim), m_(std::move(m)) {
  check_dim(dim);
  auto n = static_cast<std::size_t>(dim + 2);
  if (m_.rows() != n || m_.cols() != n) throw DomainError("Mobius matrix must be (d+2)x(d+2)");
  QMatrix q = minkowski_form(dim);
  if (m_.transpose() * q * m_ != q) throw GeometryError("matrix does not preserve the Minkowski form");
}

MobiusMap MobiusMap::identity(int dim) {
  check_dim(dim);
  return MobiusMap(dim, QMatrix::identity(static_cast<std::size_t>(dim + 2)), Unchecked{});
}

InvVec MobiusMap::apply(const InvVec& v) const {
  if (v.dim() != dim_) throw DomainError("dimension mismatch in apply");
  return InvVec(dim_, v.kind(), m_ * v.coords());
}

MobiusMap MobiusMap::inverse() const {
  // Q m^T Q: negate the last row and column of the transpose, corner stays.
  QMatrix t = m_.transpose();
  std::size_t n = t.rows();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    t(i, n - 1) = -t(i, n - 1);
    t(n - 1, i) = -t(n - 1, i);
  }
  return MobiusMap(dim_, std::move(t), Unchecked{});
}

MobiusMap operator*(const MobiusMap& x, const MobiusMap& y) {
  if (x.dim_ != y.dim_) throw DomainError("dimension mismatch in composition");
  return MobiusMap(x.dim_, x.m_ * y.m_, MobiusMap::Unchecked{});
}

std::string to_string(PairRelation r) {
  switch (r) {
    case PairRelation::Coincident: return "coincident";
    case PairRelation::Tangent: return "tangent";
    case PairRelation::Orthogonal: return "orthogonal";
    case PairRelation::Disjoint: return "disjoint";
    case PairRelation::Intersecting: return "intersecting";
    case PairRelation::Nested: return "nested";
  }
  return "?";
}

InvVec sphere_from_bend_center(const QuadExt& bend, const QVector& center) {
  int dim = static_cast<int>(center.size());
  check_dim(dim);
  if (bend.is_zero()) throw DomainError("zero bend: use halfspace()");
  QuadExt c2;
  for (auto& c : center) c2 += c * c;
  QuadExt cobend = bend * c2 - bend.inverse();
  QVector v;
  for (auto& c : center) v.push_back(bend * c);
  v.push_back((cobend - bend) * QuadExt(Rat(1, 2)));
  v.push_back((cobend + bend) * QuadExt(Rat(1, 2)));
  return InvVec::from_coords(dim, VecKind::Sphere, std::move(v));
}

InvVec halfspace(const QVector& normal, const QuadExt& delta) {
  int dim = static_cast<int>(normal.size());
  check_dim(dim);
  QuadExt n2;
  for (auto& c : normal) n2 += c * c;
  if (n2 != QuadExt(1)) throw DomainError("halfspace normal must be a unit vector");
  QVector v = normal;
  v.push_back(delta);
  v.push_back(delta);
  return InvVec::from_coords(dim, VecKind::Sphere, std::move(v));
}

InvVec point(const QVector& p) {
  int dim = static_cast<int>(p.size());
  check_dim(dim);
  QuadExt p2;
  for (auto& c : p) p2 += c * c;
  QVector v = p;
  v.push_back((p2 - 1) * QuadExt(Rat(1, 2)));
  v.push_back((p2 + 1) * QuadExt(Rat(1, 2)));
  return InvVec::from_coords(dim, VecKind::Point, std::move(v));
}

InvVec point_at_infinity(int dim) {
  check_dim(dim);
  QVector v(static_cast<std::size_t>(dim + 2));
  v[dim] = 1;
  v[dim + 1] = 1;
  return InvVec::from_coords(dim, VecKind::Point, std::move(v));
}

QuadExt inv_product(const InvVec& u, const InvVec& v) {
  if (u.dim() != v.dim()) throw DomainError("dimension mismatch in inversive product");
  return form(u.coords(), v.coords());
}

PairRelation classify_pair(const InvVec& u, const InvVec& v) {
  if (!u.is_sphere() || !v.is_sphere()) throw DomainError("classify_pair needs two spheres");
  QuadExt p = inv_product(u, v);
  if (p == QuadExt(1) && u == v) return PairRelation::Coincident;
  if (p == QuadExt(-1)) return PairRelation::Tangent;
  if (p.is_zero()) return PairRelation::Orthogonal;
  if (p < QuadExt(-1)) return PairRelation::Disjoint;
  if (p < QuadExt(1)) return PairRelation::Intersecting;
  return PairRelation::Nested;
}

MobiusMap inversion_matrix(const InvVec& s) {
  if (!s.is_sphere()) throw DomainError("inversion needs a sphere");
  auto n = static_cast<std::size_t>(s.dim() + 2);
  QMatrix m = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QuadExt e = QuadExt(2) * s[i] * s[j];
      if (j + 1 == n) e = -e;
      m(i, j) -= e;
    }
  return MobiusMap(s.dim(), std::move(m));
}

SphereGeometry center_radius(const InvVec& s) {
  if (!s.is_sphere()) throw DomainError("center_radius needs a sphere");
  SphereGeometry g;
  QuadExt b = s.bend();
  auto d = static_cast<std::size_t>(s.dim());
  if (b.is_zero()) {
    g.halfspace = true;
    g.normal.assign(s.coords().begin(), s.coords().begin() + static_cast<long>(d));
    g.delta = s[d];
    return g;
  }
  QuadExt inv = b.inverse();
  for (std::size_t i = 0; i < d; ++i) g.center.push_back(s[i] * inv);
  g.radius = inv;
  return g;
}

bool same_point(const InvVec& p, const InvVec& q) {
  if (p.dim() != q.dim()) return false;
  // p ~ q iff all 2x2 minors vanish.
  const auto& a = p.coords();
  const auto& b = q.coords();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

std::optional<QVector> cartesian(const InvVec& p) {
  QuadExt l = p.bend();
  if (l.is_zero()) return std::nullopt;
  QuadExt inv = l.inverse();
  QVector x;
  for (int i = 0; i < p.dim(); ++i) x.push_back(p[i] * inv);
  return x;
}

InvVec tangency_point(const InvVec& u, const InvVec& v) {
  if (inv_product(u, v) != QuadExt(-1)) throw GeometryError("spheres are not externally tangent");
  QVector c = u.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += v[i];
  return InvVec::from_coords(u.dim(), VecKind::Point, std::move(c));
}

}  // namespace orthoweave
