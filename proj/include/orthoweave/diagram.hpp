#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthoweave/orthocubic.hpp"

namespace orthoweave {

using Point2 = std::array<QuadExt, 2>;

// Depth along the viewing direction; detour arcs through bounding planes sit
// at +-infinity.
struct Height {
  int inf = 0;
  QuadExt h;
  friend std::strong_ordering operator<=>(const Height& x, const Height& y);
  friend bool operator==(const Height& x, const Height& y) { return x.inf == y.inf && (x.inf != 0 || x.h == y.h); }
};

struct DiagramVertex {
  std::size_t sphere = 0;
  Point2 pos;
  Height height;
  std::optional<ZColor> color;  // orthocubic frame only
  QuadExt radius;               // projected disk; 0 for detour waypoints
  bool waypoint = false;
};

struct DiagramEdge {
  std::size_t a = 0, b = 0;  // vertex indices
  bool diagonal = false;     // endpoints share a color
};

struct Crossing {
  std::size_t over_comp = 0, under_comp = 0;
  std::size_t over_edge = 0, under_edge = 0;  // indices into edges
  QuadExt over_t, under_t;                    // position along those edges
  Point2 point;
  int sign = 0;
};

struct CubicDiagram {
  Frame frame = Frame::Orthocubic;
  std::vector<DiagramVertex> vertices;
  std::vector<DiagramEdge> edges;
  // per component: its edge indices in traversal order
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> closed;
  std::vector<Crossing> crossings;
};

// Throws GeometryError ("malformed diagram") on any intersection other than
// a proper crossing, and in the orthocubic frame unless it is black diagonal
// over white diagonal.
CubicDiagram project(const Necklace& n);
CubicDiagram project(const OrthoTangle& t);

struct PDCode {
  std::vector<std::array<long, 4>> crossings;
  std::vector<int> signs;
  std::vector<std::array<std::size_t, 2>> comps;  // (under, over) component per crossing
  std::size_t components = 0;
  std::size_t free_loops = 0;  // components without crossings
};

PDCode pd_code(const CubicDiagram& d);

// Single-variable Laurent polynomial with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(long exp, long long coeff);

  const std::map<long, long long>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  long long coeff(long exp) const;
  long min_exp() const { return t_.begin()->first; }
  long max_exp() const { return t_.rbegin()->first; }
  long span() const { return t_.empty() ? 0 : max_exp() - min_exp(); }

  // x -> x^-1
  LaurentPoly reversed() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // e.g. "-t^-4 + t^-3 + t^-1" with exponents scaled by 1/denominator
  std::string to_string(const std::string& var = "A", long denominator = 1) const;

 private:
  void add_term(long e, long long c);
  std::map<long, long long> t_;
};

constexpr std::size_t kMaxBracketCrossings = 24;

// Variable A.
LaurentPoly kauffman_bracket(const PDCode& pd);
// Exponents in quarter powers of t.
LaurentPoly jones(const PDCode& pd);
long linking_number(const PDCode& pd, std::size_t c1, std::size_t c2);

// Circles in the plane given as inversive 2-D vectors (orbit output).
std::string render_svg(const CubicDiagram& d, const std::vector<InvVec>& background = {});
std::string render_circles_svg(const std::vector<InvVec>& circles);

}  // namespace orthoweave
