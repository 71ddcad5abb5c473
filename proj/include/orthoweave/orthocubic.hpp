#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "orthoweave/packing.hpp"
#include "orthoweave/tangle.hpp"

namespace orthoweave {

enum Corner { NE = 0, NW = 1, SW = 2, SE = 3 };
std::string to_string(Corner c);

using Path = std::vector<std::size_t>;

// Spheres in the cubic section with two open strands ending at the four
// corner spheres, plus any closed components. Ids are indices into spheres.
struct OrthoTangle {
  std::vector<InvVec> spheres;
  std::vector<Path> open_paths;
  std::vector<Path> closed_paths;
  std::array<std::size_t, 4> corners{};

  std::size_t size() const { return spheres.size(); }
  ZColor color(std::size_t id) const { return z_color(spheres[id]); }
};

// Which picture a necklace lives in: the cubic section (project to z = 0) or
// the strip packing of the braid grid (project along (1,-1,0)).
enum class Frame { Orthocubic, Strip };

// How a halfspace sphere of a strip necklace is drawn: its arc is replaced
// by a polyline through these screen points, entirely over (or under) the
// rest of the diagram.
struct Detour {
  std::size_t from = 0;  // waypoints run away from this neighbour
  std::vector<std::array<QuadExt, 2>> waypoints;
  bool over = true;
};

struct Necklace {
  Frame frame = Frame::Orthocubic;
  std::vector<InvVec> spheres;
  std::vector<Path> cycles;
  std::map<std::size_t, Detour> detours;

  std::size_t size() const { return spheres.size(); }
};

enum class ElementaryKind { T0, TInf, T1 };

// Base corner spheres: NE = S4, NW = S-1, SW = S3, SE = S-2.
const InvVec& base_corner(Corner c);

OrthoTangle elementary(ElementaryKind k);
OrthoTangle flip(const OrthoTangle& t);
OrthoTangle mirror(const OrthoTangle& t);
OrthoTangle add(const OrthoTangle& l, const OrthoTangle& r);
OrthoTangle half_twist(const OrthoTangle& t, int sign);
OrthoTangle conway(const std::vector<long>& coeffs, bool reduced);

enum class ClosureKind { N, D };
Necklace closure(const OrthoTangle& t, ClosureKind k);

using Built = std::variant<Necklace, OrthoTangle>;
// full: rational pieces always use the unreduced algorithm.
Built build(const ExprPtr& e, bool full = false);
OrthoTangle build_tangle(const ExprPtr& e, bool full = false);

// Braid-grid necklace in the strip packing. Lowercase letters are positive
// generators. With halfspaces (2-strand words only) the last crossing is
// carried by the two bounding planes.
Necklace braid_grid(const std::string& word, bool close_with_halfspaces);

// Resolved join tables, exposed so tests can freeze them. Each entry is
// (sphere label of the transformed end, sphere label it is joined to).
std::vector<std::pair<int, int>> mirror_wiring();
std::vector<std::pair<int, int>> add_wiring();

// Exact packing test: every pair <= -1, path neighbours exactly -1, cycles
// of length >= 3, spheres used at most once. Returns human-readable
// problems; empty means valid.
std::vector<std::string> check_necklace(const Necklace& n);
std::vector<std::string> check_tangle(const OrthoTangle& t);

}  // namespace orthoweave
