#pragma once

#include <optional>
#include <string>

#include "orthoweave/linalg.hpp"

namespace orthoweave {

enum class VecKind { Sphere, Point };

// Inversive coordinates of an oriented sphere (or halfspace) or a point, in
// dimension 2 or 3. Spheres satisfy <v,v> = 1, points <v,v> = 0 and are
// homogeneous.
class InvVec {
 public:
  InvVec() = default;
  // Validates the kind invariant; throws DomainError otherwise.
  static InvVec from_coords(int dim, VecKind kind, QVector coords);

  int dim() const { return dim_; }
  VecKind kind() const { return kind_; }
  bool is_sphere() const { return kind_ == VecKind::Sphere; }
  const QVector& coords() const { return coords_; }
  const QuadExt& operator[](std::size_t i) const { return coords_[i]; }

  // last - second-to-last coordinate: bend for spheres, homogeneous scale for points.
  QuadExt bend() const { return coords_[dim_ + 1] - coords_[dim_]; }
  bool is_halfspace() const { return is_sphere() && bend().is_zero(); }

  InvVec operator-() const;
  // Structural equality (for points too; use same_point for projective equality).
  friend bool operator==(const InvVec&, const InvVec&) = default;
  // Deterministic structural order.
  friend bool lex_less(const InvVec& u, const InvVec& v);

  std::string to_string() const;

 private:
  InvVec(int dim, VecKind kind, QVector coords) : dim_(dim), kind_(kind), coords_(std::move(coords)) {}
  friend class MobiusMap;
  int dim_ = 0;
  VecKind kind_ = VecKind::Sphere;
  QVector coords_;
};

class MobiusMap {
 public:
  MobiusMap() = default;
  // Validates m^T Q m = Q; throws GeometryError otherwise.
  MobiusMap(int dim, QMatrix m);
  static MobiusMap identity(int dim);

  int dim() const { return dim_; }
  const QMatrix& matrix() const { return m_; }

  InvVec apply(const InvVec& v) const;
  MobiusMap inverse() const;  // Q m^T Q

  friend MobiusMap operator*(const MobiusMap& x, const MobiusMap& y);
  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

 private:
  struct Unchecked {};
  MobiusMap(int dim, QMatrix m, Unchecked) : dim_(dim), m_(std::move(m)) {}
  int dim_ = 0;
  QMatrix m_;
};

enum class PairRelation { Coincident, Tangent, Orthogonal, Disjoint, Intersecting, Nested };
std::string to_string(PairRelation r);

// Diagonal Minkowski form diag(1,...,1,-1) of size d+2.
QMatrix minkowski_form(int dim);

InvVec sphere_from_bend_center(const QuadExt& bend, const QVector& center);
InvVec halfspace(const QVector& normal, const QuadExt& delta);
InvVec point(const QVector& p);
InvVec point_at_infinity(int dim);

QuadExt inv_product(const InvVec& u, const InvVec& v);
PairRelation classify_pair(const InvVec& u, const InvVec& v);
MobiusMap inversion_matrix(const InvVec& s);
inline InvVec apply(const MobiusMap& m, const InvVec& v) { return m.apply(v); }

struct SphereGeometry {
  bool halfspace = false;
  QVector center;  // empty for halfspaces
  QuadExt radius;  // signed, 1/bend
  QVector normal;  // halfspaces only
  QuadExt delta;   // halfspaces only
};
SphereGeometry center_radius(const InvVec& s);

// Projective equality of points.
bool same_point(const InvVec& p, const InvVec& q);
// Euclidean position of a point; nullopt for the point at infinity.
std::optional<QVector> cartesian(const InvVec& p);
// Common point of two externally tangent spheres (u + v).
InvVec tangency_point(const InvVec& u, const InvVec& v);

}  // namespace orthoweave
