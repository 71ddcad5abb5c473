#include "orthoweave/orthocubic.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <set>

#include "orthoweave/errors.hpp"

namespace orthoweave {

namespace {

const InvVec& base(int k) { return orthoplicial_base().sphere({k}); }

// Label k with S_k == s, if s is one of the eight base spheres.
std::optional<int> base_label(const InvVec& s) {
  for (int k : {1, -1, 2, -2, 3, -3, 4, -4})
    if (base(k) == s) return k;
  return std::nullopt;
}

bool tangent(const InvVec& a, const InvVec& b) { return inv_product(a, b) == QuadExt(-1); }

// Joins path ends along extra tangency edges and walks the result. Each join
// consumes one free end slot at each of its two sphere ids. Walks start at
// unjoined ends in path order, then leftover loops become cycles.
struct Stitched {
  std::vector<Path> open, closed;
};

Stitched stitch(const std::vector<Path>& paths, const std::vector<std::pair<std::size_t, std::size_t>>& joins) {
  const std::size_t np = paths.size();
  // slot 2p = head of path p, 2p+1 = tail
  std::vector<long> link(2 * np, -1);
  auto free_slot = [&](std::size_t id) -> std::size_t {
    for (std::size_t p = 0; p < np; ++p) {
      if (paths[p].empty()) continue;
      if (paths[p].front() == id && link[2 * p] < 0) return 2 * p;
      if (paths[p].back() == id && link[2 * p + 1] < 0) return 2 * p + 1;
    }
    throw GeometryError("join at sphere " + std::to_string(id) + " does not meet a free path end");
  };
  for (auto [a, b] : joins) {
    std::size_t sa = free_slot(a);
    link[sa] = -2;  // reserve so b cannot take the same slot
    std::size_t sb = free_slot(b);
    link[sa] = static_cast<long>(sb);
    link[sb] = static_cast<long>(sa);
  }

  std::vector<bool> used(np, false);
  auto walk = [&](std::size_t slot, Path& out) -> std::size_t {
    while (true) {
      std::size_t p = slot / 2;
      if (used[p]) throw GeometryError("stitching revisits a path");
      used[p] = true;
      if (slot % 2 == 0)
        out.insert(out.end(), paths[p].begin(), paths[p].end());
      else
        out.insert(out.end(), paths[p].rbegin(), paths[p].rend());
      std::size_t other = slot ^ 1;
      if (link[other] < 0) return other;
      slot = static_cast<std::size_t>(link[other]);
      if (used[slot / 2]) return slot;
    }
  };

  Stitched s;
  for (std::size_t slot = 0; slot < 2 * np; ++slot) {
    if (paths[slot / 2].empty() || used[slot / 2] || link[slot] >= 0) continue;
    Path out;
    walk(slot, out);
    s.open.push_back(std::move(out));
  }
  for (std::size_t p = 0; p < np; ++p) {
    if (used[p] || paths[p].empty()) continue;
    Path out;
    std::size_t end = walk(2 * p, out);
    if (end != 2 * p) throw GeometryError("stitching left a dangling loop");
    s.closed.push_back(std::move(out));
  }
  return s;
}

OrthoTangle transformed(const OrthoTangle& t, const GroupElement& g) {
  OrthoTangle r = t;
  for (auto& s : r.spheres) s = g.apply(s);
  return r;
}

// Shared wiring resolution: each transformed end label is paired with the
// unique base sphere that is tangent to it among the quoted edges.
std::vector<std::pair<int, int>> resolve(const std::vector<int>& ends, const std::vector<std::pair<int, int>>& quoted) {
  std::vector<std::pair<int, int>> out;
  for (int e : ends) {
    std::optional<int> partner;
    for (auto [a, b] : quoted) {
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (x != e || !tangent(base(x), base(y))) continue;
        if (partner && *partner != y) throw GeometryError("ambiguous wiring for S" + std::to_string(e));
        partner = y;
      }
    }
    if (!partner) throw GeometryError("no tangent wiring partner for S" + std::to_string(e));
    out.emplace_back(e, *partner);
  }
  return out;
}

int corner_label(Corner c) {
  static const int labels[4] = {4, -1, 3, -2};
  return labels[c];
}

}  // namespace

std::string to_string(Corner c) {
  static const char* names[4] = {"NE", "NW", "SW", "SE"};
  return names[c];
}

const InvVec& base_corner(Corner c) { return base(corner_label(c)); }

OrthoTangle elementary(ElementaryKind k) {
  OrthoTangle t;
  t.spheres = {base(4), base(-1), base(3), base(-2)};
  t.corners = {0, 1, 2, 3};
  switch (k) {
    case ElementaryKind::TInf: t.open_paths = {{1, 2}, {0, 3}}; break;
    case ElementaryKind::T0: t.open_paths = {{1, 0}, {2, 3}}; break;
    case ElementaryKind::T1: t.open_paths = {{1, 3}, {2, 0}}; break;
  }
  return t;
}

OrthoTangle flip(const OrthoTangle& t) {
  OrthoTangle r = transformed(t, ortho_element("R12"));
  r.corners[NW] = t.corners[SE];
  r.corners[SE] = t.corners[NW];
  return r;
}

std::vector<std::pair<int, int>> mirror_wiring() {
  GroupElement g = orthocubic_shifts().nu.inverse();
  std::vector<int> ends;
  for (Corner c : {NE, NW, SW, SE}) {
    auto l = base_label(g.apply(base_corner(c)));
    if (!l) throw GeometryError("mirror image of a corner is not a base sphere");
    ends.push_back(*l);
  }
  return resolve(ends, {{1, -2}, {-1, 2}, {3, -4}, {-3, 4}});
}

std::vector<std::pair<int, int>> add_wiring() {
  Shifts sh = orthocubic_shifts();
  auto l_ne = base_label(sh.mu_minus.apply(base_corner(NE)));
  auto l_se = base_label(sh.mu_minus.apply(base_corner(SE)));
  if (!l_ne || !l_se) throw GeometryError("shifted corner is not a base sphere");
  auto w = resolve({*l_ne, *l_se}, {{1, -4}, {2, -3}});
  for (auto [a, b] : w) {
    (void)a;
    auto back = base_label(sh.mu_plus.inverse().apply(base(b)));
    if (!back || (*back != corner_label(NW) && *back != corner_label(SW)))
      throw GeometryError("add wiring does not land on a west corner");
  }
  return w;
}

OrthoTangle mirror(const OrthoTangle& t) {
  static const auto wiring = mirror_wiring();
  OrthoTangle r = transformed(t, orthocubic_shifts().nu.inverse());
  std::vector<Path> paths = r.open_paths;
  std::vector<std::pair<std::size_t, std::size_t>> joins;
  std::array<std::size_t, 4> corners{};
  for (Corner c : {NE, NW, SW, SE}) {
    const InvVec& end = r.spheres[r.corners[c]];
    auto l = base_label(end);
    auto it = std::find_if(wiring.begin(), wiring.end(), [&](auto& w) { return l && w.first == *l; });
    if (it == wiring.end()) throw GeometryError("mirror: corner " + to_string(c) + " displaced from the base");
    const InvVec& partner = base(it->second);
    if (!tangent(end, partner)) throw GeometryError("mirror: wiring edge is not a tangency");
    // the partner is a base corner; figure out which one
    std::optional<Corner> pc;
    for (Corner d : {NE, NW, SW, SE})
      if (base_corner(d) == partner) pc = d;
    if (!pc) throw GeometryError("mirror: wiring partner is not a base corner");
    std::size_t id = r.spheres.size();
    r.spheres.push_back(partner);
    paths.push_back({id});
    joins.emplace_back(r.corners[c], id);
    corners[*pc] = id;
  }
  for (std::size_t i = 0; i < t.spheres.size(); ++i)
    for (std::size_t k = t.spheres.size(); k < r.spheres.size(); ++k)
      if (inv_product(r.spheres[i], r.spheres[k]) > QuadExt(-1))
        throw GeometryError("mirror: new corner overlaps the tangle");
  Stitched s = stitch(paths, joins);
  if (s.open.size() != 2) throw GeometryError("mirror: expected two open strands");
  r.open_paths = std::move(s.open);
  r.closed_paths.insert(r.closed_paths.end(), s.closed.begin(), s.closed.end());
  r.corners = corners;
  return r;
}

OrthoTangle add(const OrthoTangle& l, const OrthoTangle& r) {
  static const auto wiring = add_wiring();
  Shifts sh = orthocubic_shifts();
  OrthoTangle a = transformed(l, sh.mu_minus);
  OrthoTangle b = transformed(r, sh.mu_plus);

  OrthoTangle out;
  out.spheres = a.spheres;
  std::vector<std::size_t> remap(b.spheres.size());
  std::set<std::size_t> shared;
  for (std::size_t i = 0; i < b.spheres.size(); ++i) {
    auto it = std::find(out.spheres.begin(), out.spheres.end(), b.spheres[i]);
    if (it != out.spheres.end()) {
      remap[i] = static_cast<std::size_t>(it - out.spheres.begin());
      shared.insert(remap[i]);
      continue;
    }
    for (std::size_t k = 0; k < a.spheres.size(); ++k)
      if (inv_product(a.spheres[k], b.spheres[i]) > QuadExt(-1))
        throw GeometryError("add: summands overlap");
    remap[i] = out.spheres.size();
    out.spheres.push_back(b.spheres[i]);
  }
  // a coincident sphere can only be kept if it carries no strand; strands
  // visit every sphere, so any coincidence breaks a path
  if (!shared.empty()) throw GeometryError("add: summands share a sphere on a strand");

  auto rb = [&](const Path& p) {
    Path q;
    for (auto id : p) q.push_back(remap[id]);
    return q;
  };
  std::vector<Path> paths = a.open_paths;
  for (auto& p : b.open_paths) paths.push_back(rb(p));
  std::vector<std::pair<std::size_t, std::size_t>> joins;
  for (auto [le, rw] : wiring) {
    std::optional<std::size_t> li, ri;
    for (Corner c : {NE, SE})
      if (base_label(a.spheres[a.corners[c]]) == le) li = a.corners[c];
    for (Corner c : {NW, SW})
      if (base_label(b.spheres[b.corners[c]]) == rw) ri = remap[b.corners[c]];
    if (!li || !ri) throw GeometryError("add: corners displaced from the base");
    if (!tangent(out.spheres[*li], out.spheres[*ri])) throw GeometryError("add: wiring edge is not a tangency");
    joins.emplace_back(*li, *ri);
  }
  Stitched s = stitch(paths, joins);
  if (s.open.size() != 2) throw GeometryError("add: expected two open strands");
  out.open_paths = std::move(s.open);
  out.closed_paths = a.closed_paths;
  for (auto& p : b.closed_paths) out.closed_paths.push_back(rb(p));
  out.closed_paths.insert(out.closed_paths.end(), s.closed.begin(), s.closed.end());
  out.corners[NW] = a.corners[NW];
  out.corners[SW] = a.corners[SW];
  out.corners[NE] = remap[b.corners[NE]];
  out.corners[SE] = remap[b.corners[SE]];
  return out;
}

OrthoTangle half_twist(const OrthoTangle& t, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("half_twist sign must be +1 or -1");
  static const OrthoTangle pos = elementary(ElementaryKind::T1);
  static const OrthoTangle neg = mirror(pos);
  return add(sign > 0 ? pos : neg, t);
}

OrthoTangle conway(const std::vector<long>& coeffs, bool reduced) {
  if (coeffs.empty()) throw DomainError("conway: empty coefficient list");
  const std::size_t n = coeffs.size();
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (coeffs[i] == 0) throw DomainError("conway: interior coefficient is zero");
  auto twists = [](OrthoTangle t, long a) {
    for (long k = 0; k < std::labs(a); ++k) t = half_twist(t, a > 0 ? 1 : -1);
    return t;
  };
  if (!reduced) {
    OrthoTangle t = elementary(ElementaryKind::TInf);
    for (std::size_t i = n; i-- > 0;) t = twists(flip(t), coeffs[i]);
    return t;
  }
  if (coeffs[0] < 0) throw DomainError("conway: reduced form needs a1 >= 0");
  for (std::size_t i = 1; i < n; ++i)
    if (coeffs[i] <= 0) throw DomainError("conway: reduced form needs a2..an > 0");
  if (coeffs[n - 1] < 1) throw DomainError("conway: reduced form needs an >= 1");
  OrthoTangle t = twists(elementary(ElementaryKind::T1), coeffs[n - 1] - 1);
  for (std::size_t i = n - 1; i-- > 0;) t = twists(flip(t), coeffs[i]);
  return t;
}

Necklace closure(const OrthoTangle& t, ClosureKind k) {
  for (Corner c : {NE, NW, SW, SE})
    if (!(t.spheres.at(t.corners[c]) == base_corner(c)))
      throw GeometryError("closure: corner " + to_string(c) + " displaced from the base");
  std::vector<std::pair<std::size_t, std::size_t>> joins;
  if (k == ClosureKind::N)
    joins = {{t.corners[NW], t.corners[NE]}, {t.corners[SW], t.corners[SE]}};
  else
    joins = {{t.corners[NW], t.corners[SW]}, {t.corners[NE], t.corners[SE]}};
  Stitched s = stitch(t.open_paths, joins);
  if (!s.open.empty()) throw GeometryError("closure left an open strand");
  Necklace n;
  n.frame = Frame::Orthocubic;
  n.spheres = t.spheres;
  n.cycles = std::move(s.closed);
  n.cycles.insert(n.cycles.end(), t.closed_paths.begin(), t.closed_paths.end());
  return n;
}

namespace {

OrthoTangle rational_tangle(std::vector<long> c, bool full) {
  if (full) return conway(c, false);
  auto reduced_ok = [](const std::vector<long>& v) {
    if (v[0] < 0) return false;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] <= 0) return false;
    return v.back() >= 1;
  };
  if (reduced_ok(c)) return conway(c, true);
  std::vector<long> neg = c;
  for (auto& a : neg) a = -a;
  if (reduced_ok(neg)) return mirror(conway(neg, true));
  return conway(c, false);
}

}  // namespace

OrthoTangle build_tangle(const ExprPtr& e, bool full) {
  using K = TangleExpr::Kind;
  switch (e->kind) {
    case K::Elementary:
      switch (e->elementary) {
        case Elementary::T0: return elementary(ElementaryKind::T0);
        case Elementary::TInf: return elementary(ElementaryKind::TInf);
        case Elementary::T1: return elementary(ElementaryKind::T1);
        case Elementary::TMinus1: return mirror(elementary(ElementaryKind::T1));
      }
      break;
    case K::Rational: return rational_tangle(e->coeffs, full);
    case K::Fraction: {
      Slope s(e->p, e->q);
      if (s.p < 0) return mirror(rational_tangle(cf_expand(s.negated(), true), full));
      return rational_tangle(cf_expand(s, true), full);
    }
    case K::Sum: return add(build_tangle(e->left, full), build_tangle(e->right, full));
    case K::Neg: return mirror(build_tangle(e->left, full));
    case K::Flip: return flip(build_tangle(e->left, full));
    default: break;
  }
  throw DomainError("expression is a link, not a tangle");
}

Built build(const ExprPtr& e, bool full) {
  using K = TangleExpr::Kind;
  switch (e->kind) {
    case K::ClosureN: return closure(build_tangle(e->left, full), ClosureKind::N);
    case K::ClosureD: return closure(build_tangle(e->left, full), ClosureKind::D);
    case K::Pretzel: {
      ExprPtr sum;
      for (long q : e->coeffs) {
        ExprPtr f = make_fraction(1, q);
        sum = sum ? make_sum(sum, f) : f;
      }
      return closure(build_tangle(sum, full), ClosureKind::N);
    }
    case K::Braid: return braid_grid(e->word, false);
    default: return build_tangle(e, full);
  }
}

// ---------------------------------------------------------------------------
// Braid grid in the strip packing.

namespace {

struct StripGrid {
  GroupElement tu, tz, tu_inv, tz_inv;
  MobiusMap j;  // inversion carrying the packing to the strip

  StripGrid()
      : tu(ortho_element("R34") * ortho_element("R44b") * ortho_element("s1234") * ortho_element("R44b")),
        tz(ortho_element("s1234") * ortho_element("R44b") * ortho_element("R34") * ortho_element("R44b")),
        tu_inv(tu.inverse()),
        tz_inv(tz.inverse()) {
    // contact point of S1 and S2 is (0, 0, sqrt2 - 1)
    QVector c{QuadExt(0), QuadExt(0), QuadExt(Rat(-1), Rat(1))};
    j = inversion_matrix(sphere_from_bend_center(QuadExt(1), c));
  }

  // Translate seed by column c and row r; columns step right on screen.
  InvVec at(const InvVec& seed, long c, long r) const {
    InvVec v = seed;
    for (long k = 0; k < std::labs(c); ++k) v = (c > 0 ? tu_inv : tu).apply(v);
    for (long k = 0; k < std::labs(r); ++k) v = (r > 0 ? tz : tz_inv).apply(v);
    return j.apply(v);
  }
};

const StripGrid& strip_grid() {
  static const StripGrid g;
  return g;
}

class GridBuilder {
 public:
  explicit GridBuilder(Necklace& n) : n_(n) {}

  std::size_t vertex(long c, long r) { return get({0, c, r}, base(-3)); }
  std::size_t over(long c, long r) { return get({1, c, r}, base(-1)); }
  std::size_t under(long c, long r) { return get({2, c, r}, base(-2)); }

  std::size_t add(const InvVec& s) {
    n_.spheres.push_back(s);
    return n_.spheres.size() - 1;
  }

 private:
  std::size_t get(std::array<long, 3> key, const InvVec& seed) {
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    std::size_t id = add(strip_grid().at(seed, key[1], key[2]));
    ids_[key] = id;
    return id;
  }
  Necklace& n_;
  std::map<std::array<long, 3>, std::size_t> ids_;
};

// Screen position of grid vertex (c, r): projection (-(x+y), z).
std::array<QuadExt, 2> screen(long c, long r) {
  const InvVec s = strip_grid().at(base(-3), c, r);
  SphereGeometry g = center_radius(s);
  return {-(g.center[0] + g.center[1]), g.center[2]};
}

std::array<QuadExt, 2> waypoint(long c, long r) {
  // the lattice is affine on screen
  auto o = screen(0, 0), dx = screen(1, 0), dy = screen(0, 1);
  QuadExt fc(c), fr(r);
  return {o[0] + fc * (dx[0] - o[0]) + fr * (dy[0] - o[0]), o[1] + fc * (dx[1] - o[1]) + fr * (dy[1] - o[1])};
}

}  // namespace

Necklace braid_grid(const std::string& word, bool close_with_halfspaces) {
  if (word.empty()) throw DomainError("braid word is empty");
  for (char ch : word)
    if (!std::isalpha(static_cast<unsigned char>(ch))) throw DomainError(std::string("bad braid letter '") + ch + "'");
  const int m = braid_strands(word);
  if (close_with_halfspaces && m != 2) throw DomainError("half-space closure needs a 2-strand word");
  const long n = static_cast<long>(word.size());

  Necklace out;
  out.frame = Frame::Strip;
  GridBuilder g(out);

  // strand segments through the braid rows; perm[c] = strand currently at column c
  const long rows = close_with_halfspaces ? n - 1 : n;
  std::vector<Path> segs;
  std::vector<long> at(m);
  for (int c = 0; c < m; ++c) {
    at[c] = c;
    segs.push_back({g.vertex(c, 0)});
  }
  for (long r = 0; r < rows; ++r) {
    char ch = word[r];
    int k = std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1;
    bool positive = std::islower(static_cast<unsigned char>(ch));
    // strand at column k-1 goes up-right, strand at column k up-left
    std::vector<long> next = at;
    for (int c = 0; c < m; ++c) {
      Path& p = segs[at[c]];
      if (c == k - 1) {
        p.push_back(positive ? g.over(c, r) : g.under(c, r));
        p.push_back(g.vertex(c + 1, r + 1));
        next[c + 1] = at[c];
      } else if (c == k) {
        p.push_back(positive ? g.under(c - 1, r) : g.over(c - 1, r));
        p.push_back(g.vertex(c - 1, r + 1));
        next[c - 1] = at[c];
      } else {
        p.push_back(g.vertex(c, r + 1));
      }
    }
    at = next;
  }

  std::vector<std::pair<std::size_t, std::size_t>> joins;
  if (close_with_halfspaces) {
    // The bounding planes carry the last crossing: the over plane joins
    // bottom-left to top-right, the under plane bottom-right to top-left.
    bool positive = std::islower(static_cast<unsigned char>(word.back()));
    const long top = rows;
    const InvVec h_over = strip_grid().j.apply(base(2));
    const InvVec h_under = strip_grid().j.apply(base(1));
    std::size_t ho = g.add(h_over), hu = g.add(h_under);
    // positive letter: the vertical return arc passes over the horizontal one
    std::size_t arc_a = positive ? hu : ho, arc_b = positive ? ho : hu;
    segs.push_back({arc_a});
    segs.push_back({arc_b});
    joins = {{g.vertex(0, 0), arc_a}, {arc_a, g.vertex(1, top)}, {g.vertex(1, 0), arc_b}, {arc_b, g.vertex(0, top)}};
    out.detours[arc_a] = Detour{g.vertex(0, 0), {waypoint(-1, -1), waypoint(-1, top + 1), waypoint(1, top + 1)}, arc_a == ho};
    out.detours[arc_b] = Detour{g.vertex(1, 0), {waypoint(2, -1), waypoint(2, top + 2), waypoint(0, top + 2)}, arc_b == ho};
  } else if (m == 2) {
    // left strand returns along column -1, right along column 2
    Path left{g.vertex(0, n)}, right{g.vertex(1, n)};
    for (long r = n; r >= 0; --r) left.push_back(g.vertex(-1, r));
    left.push_back(g.vertex(0, 0));
    for (long r = n; r >= 0; --r) right.push_back(g.vertex(2, r));
    right.push_back(g.vertex(1, 0));
    for (Path* p : {&left, &right}) {
      Path inner(p->begin() + 1, p->end() - 1);
      segs.push_back(inner);
      joins.emplace_back(p->front(), inner.front());
      joins.emplace_back(inner.back(), p->back());
    }
  } else {
    // nested arcs on the right: column c climbs m-c rows, crosses over to
    // column 2m-1-c, descends to row c-m and comes back
    for (int c = 0; c < m; ++c) {
      const long h = m - c, right_col = 2L * m - 1 - c;
      Path arc;
      for (long r = n + 1; r <= n + h; ++r) arc.push_back(g.vertex(c, r));
      for (long cc = c + 1; cc <= right_col; ++cc) arc.push_back(g.vertex(cc, n + h));
      for (long r = n + h - 1; r >= -h; --r) arc.push_back(g.vertex(right_col, r));
      for (long cc = right_col - 1; cc >= c; --cc) arc.push_back(g.vertex(cc, -h));
      for (long r = -h + 1; r <= -1; ++r) arc.push_back(g.vertex(c, r));
      segs.push_back(arc);
      joins.emplace_back(g.vertex(c, n), arc.front());
      joins.emplace_back(arc.back(), g.vertex(c, 0));
    }
  }
  Stitched s = stitch(segs, joins);
  if (!s.open.empty()) throw GeometryError("braid closure left an open strand");
  out.cycles = std::move(s.closed);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_packing(const std::vector<InvVec>& spheres, std::vector<std::string>& problems) {
  for (std::size_t i = 0; i < spheres.size(); ++i)
    for (std::size_t k = i + 1; k < spheres.size(); ++k)
      if (inv_product(spheres[i], spheres[k]) > QuadExt(-1))
        problems.push_back("spheres " + std::to_string(i) + " and " + std::to_string(k) + " overlap");
}

void check_path(const std::vector<InvVec>& spheres, const Path& p, bool cyclic, std::vector<std::size_t>& uses,
                std::vector<std::string>& problems) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= spheres.size()) {
      problems.push_back("path references missing sphere " + std::to_string(p[i]));
      return;
    }
    ++uses[p[i]];
  }
  std::size_t edges = cyclic ? p.size() : p.size() - 1;
  for (std::size_t i = 0; i < edges; ++i) {
    std::size_t a = p[i], b = p[(i + 1) % p.size()];
    if (!tangent(spheres[a], spheres[b]))
      problems.push_back("consecutive spheres " + std::to_string(a) + ", " + std::to_string(b) + " are not tangent");
  }
}

}  // namespace

std::vector<std::string> check_necklace(const Necklace& n) {
  std::vector<std::string> problems;
  check_packing(n.spheres, problems);
  std::vector<std::size_t> uses(n.spheres.size(), 0);
  if (n.cycles.empty()) problems.push_back("necklace has no cycles");
  for (const auto& c : n.cycles) {
    if (c.size() < 3) problems.push_back("cycle of length " + std::to_string(c.size()) + " (degenerate)");
    check_path(n.spheres, c, true, uses, problems);
  }
  for (std::size_t i = 0; i < uses.size(); ++i)
    if (uses[i] != 1) problems.push_back("sphere " + std::to_string(i) + " used " + std::to_string(uses[i]) + " times");
  return problems;
}

std::vector<std::string> check_tangle(const OrthoTangle& t) {
  std::vector<std::string> problems;
  check_packing(t.spheres, problems);
  std::vector<std::size_t> uses(t.spheres.size(), 0);
  if (t.open_paths.size() != 2) problems.push_back("tangle needs exactly two open strands");
  std::set<std::size_t> ends;
  for (const auto& p : t.open_paths) {
    if (p.size() < 2) {
      problems.push_back("open strand too short");
      continue;
    }
    check_path(t.spheres, p, false, uses, problems);
    ends.insert(p.front());
    ends.insert(p.back());
  }
  for (const auto& c : t.closed_paths) {
    if (c.size() < 3) problems.push_back("closed component of length " + std::to_string(c.size()));
    check_path(t.spheres, c, true, uses, problems);
  }
  std::set<std::size_t> corners(t.corners.begin(), t.corners.end());
  if (corners.size() != 4) problems.push_back("corners are not distinct");
  if (corners != ends) problems.push_back("open strands do not end at the corners");
  for (std::size_t i = 0; i < uses.size(); ++i)
    if (uses[i] != 1) problems.push_back("sphere " + std::to_string(i) + " used " + std::to_string(uses[i]) + " times");
  return problems;
}

}  // namespace orthoweave
