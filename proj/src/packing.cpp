#include "orthoweave/packing.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>

#include "orthoweave/errors.hpp"

namespace orthoweave {

std::string label_string(const Label& l) {
  std::string s;
  for (int v : l) s += (v < 0 ? "-" : "") + std::to_string(std::abs(v));
  return s;
}

Label make_label(std::vector<int> v) {
  std::sort(v.begin(), v.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
  return v;
}

Label parse_label(const std::string& s) {
  Label l;
  bool neg = false;
  for (char ch : s) {
    if (ch == '-' && !neg) {
      neg = true;
    } else if (ch >= '1' && ch <= '9') {
      l.push_back(neg ? -(ch - '0') : ch - '0');
      neg = false;
    } else {
      throw DomainError("bad label '" + s + "'");
    }
  }
  if (neg || l.empty()) throw DomainError("bad label '" + s + "'");
  return make_label(std::move(l));
}

const InvVec& LabeledPacking::sphere(const Label& l) const {
  auto it = spheres.find(l);
  if (it == spheres.end()) throw DomainError("no sphere labelled " + label_string(l));
  return it->second;
}

const InvVec& LabeledPacking::dual(const Label& l) const {
  auto it = duals.find(l);
  if (it == duals.end()) throw DomainError("no dual labelled " + label_string(l));
  return it->second;
}

namespace {

const QuadExt kS2 = QuadExt::sqrt2();

std::size_t rank_of(const std::vector<QVector>& vs) {
  if (vs.empty()) return 0;
  return vs.size() - nullspace(QMatrix::from_columns(vs)).size();
}

bool contains(const Label& l, int v) { return std::find(l.begin(), l.end(), v) != l.end(); }

}  // namespace

InvVec dual_sphere(const LabeledPacking& p, const std::vector<Label>& incident) {
  for (std::size_t i = 0; i < incident.size(); ++i)
    for (std::size_t j = i + 1; j < incident.size(); ++j)
      if (incident[i].size() == 1 && incident[j].size() == 1 && incident[i][0] == -incident[j][0])
        throw DomainError("facet contains an antipodal pair");
  std::vector<QVector> rows;
  for (auto& l : incident) {
    // Rows of Q-weighted coordinates, so row . x = <S, x>.
    QVector r = p.sphere(l).coords();
    r.back() = -r.back();
    rows.push_back(std::move(r));
  }
  auto ns = nullspace(QMatrix::from_rows(rows));
  if (ns.size() != 1) throw DomainError("degenerate facet: dual sphere is not unique");
  QVector w = ns[0];
  QuadExt n2;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) n2 += w[i] * w[i];
  n2 -= w.back() * w.back();
  if (n2.sign() <= 0) throw DomainError("facet has no real orthogonal sphere");
  auto root = n2.sqrt();
  if (!root) throw DomainError("dual sphere normalization leaves Q(sqrt2)");
  QuadExt inv = root->inverse();
  for (auto& x : w) x *= inv;
  InvVec d = InvVec::from_coords(p.dim, VecKind::Sphere, std::move(w));
  for (auto& [l, s] : p.spheres) {
    if (std::find(incident.begin(), incident.end(), l) != incident.end()) continue;
    int sg = inv_product(d, s).sign();
    if (sg > 0) return -d;
    if (sg < 0) return d;
  }
  return d;
}

MobiusMap signed_perm_symmetry(const LabeledPacking& p, const SignedPerm& sigma) {
  auto map_value = [&](int v) {
    auto it = sigma.find(std::abs(v));
    int img = it == sigma.end() ? std::abs(v) : it->second;
    return v < 0 ? -img : img;
  };
  auto map_label = [&](const Label& l) {
    Label out;
    for (int v : l) out.push_back(map_value(v));
    return make_label(std::move(out));
  };
  std::vector<QVector> src, dst;
  auto n = static_cast<std::size_t>(p.dim + 2);
  for (auto& [l, s] : p.spheres) {
    if (src.size() == n) break;
    src.push_back(s.coords());
    if (rank_of(src) < src.size()) {
      src.pop_back();
      continue;
    }
    auto it = p.spheres.find(map_label(l));
    if (it == p.spheres.end()) throw DomainError("signed permutation leaves the label set");
    dst.push_back(it->second.coords());
  }
  if (src.size() != n) throw DomainError("base spheres do not span");
  auto binv = inverse(QMatrix::from_columns(src));
  QMatrix m = QMatrix::from_columns(dst) * *binv;
  for (auto& [l, s] : p.spheres) {
    auto it = p.spheres.find(map_label(l));
    if (it == p.spheres.end() || m * s.coords() != it->second.coords())
      throw DomainError("signed permutation is not a symmetry of the packing");
  }
  try {
    return MobiusMap(p.dim, std::move(m));
  } catch (const GeometryError&) {
    throw DomainError("signed permutation is not a symmetry of the packing");
  }
}

const LabeledPacking& cubic_base() {
  static const LabeledPacking base = [] {
    LabeledPacking p;
    p.dim = 2;
    const QuadExt big = QuadExt(1) + kS2, small = kS2 - QuadExt(1);
    for (int e1 : {1, -1})
      for (int e2 : {1, -1})
        for (int e3 : {1, -1}) {
          QuadExt r = e3 > 0 ? big : small;
          QVector c{QuadExt(e1) * r, QuadExt(e2) * r};
          p.spheres.emplace(make_label({e1, 2 * e2, 3 * e3}), sphere_from_bend_center(r.inverse(), c));
        }
    for (int k : {1, -1, 2, -2, 3, -3}) {
      std::vector<Label> inc;
      for (auto& [l, s] : p.spheres)
        if (contains(l, k)) inc.push_back(l);
      p.duals.emplace(Label{k}, dual_sphere(p, inc));
    }
    return p;
  }();
  return base;
}

const LabeledPacking& orthoplicial_base() {
  static const LabeledPacking base = [] {
    LabeledPacking p;
    p.dim = 3;
    // Inversive coordinates of the base spheres, all scaled by 1/sqrt2.
    const std::map<int, std::array<int, 4>> rows = {
        {1, {1, -1, 1, -1}},  {2, {-1, 1, 1, -1}},  {3, {-1, -1, 1, 1}},  {4, {1, 1, 1, 1}},
        {-1, {-1, 1, -1, 1}}, {-2, {1, -1, -1, 1}}, {-3, {1, 1, -1, -1}}, {-4, {-1, -1, -1, -1}},
    };
    const QuadExt h = kS2 * QuadExt(Rat(1, 2));
    for (auto& [k, r] : rows) {
      QVector c;
      for (int x : r) c.push_back(QuadExt(x) * h);
      c.push_back(QuadExt(1));
      p.spheres.emplace(Label{k}, InvVec::from_coords(3, VecKind::Sphere, std::move(c)));
    }
    for (int e1 : {1, -1})
      for (int e2 : {1, -1})
        for (int e3 : {1, -1})
          for (int e4 : {1, -1}) {
            std::vector<Label> inc{{e1}, {2 * e2}, {3 * e3}, {4 * e4}};
            p.duals.emplace(make_label({e1, 2 * e2, 3 * e3, 4 * e4}), dual_sphere(p, inc));
          }
    return p;
  }();
  return base;
}

GroupElement GroupElement::inverse() const {
  std::vector<std::string> w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w.push_back(*it + "^-1");
  return {std::move(w), matrix.inverse()};
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  std::vector<std::string> w = x.word;
  w.insert(w.end(), y.word.begin(), y.word.end());
  return {std::move(w), x.matrix * y.matrix};
}

namespace {

const std::map<std::string, std::vector<std::string>>& rewrite_table() {
  static const std::map<std::string, std::vector<std::string>> t = [] {
    std::map<std::string, std::vector<std::string>> m;
    auto cat = [](std::initializer_list<std::vector<std::string>> parts) {
      std::vector<std::string> out;
      for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
      return out;
    };
    m["r13"] = {"r12", "r23", "r12"};
    m["r11b"] = cat({m["r13"], {"r33b"}, m["r13"]});
    m["s1b"] = cat({m["r11b"], {"s1"}, m["r11b"]});
    m["r1b3"] = cat({m["r11b"], m["r13"], m["r11b"]});
    m["s3"] = cat({m["r13"], {"s1"}, m["r13"]});
    return m;
  }();
  return t;
}

bool is_cubic_generator(const std::string& g) { return g == "r12" || g == "r23" || g == "r33b" || g == "s1"; }

GroupElement cubic_generator(const std::string& g) {
  const auto& p = cubic_base();
  static const std::map<std::string, GroupElement> gens = [&] {
    std::map<std::string, GroupElement> m;
    m.emplace("r12", GroupElement{{"r12"}, signed_perm_symmetry(p, {{1, 2}, {2, 1}})});
    m.emplace("r23", GroupElement{{"r23"}, signed_perm_symmetry(p, {{2, 3}, {3, 2}})});
    m.emplace("r33b", GroupElement{{"r33b"}, signed_perm_symmetry(p, {{3, -3}})});
    m.emplace("s1", GroupElement{{"s1"}, inversion_matrix(p.dual({1}))});
    return m;
  }();
  auto it = gens.find(g);
  if (it == gens.end()) throw DomainError("unknown cubic generator '" + g + "'");
  return it->second;
}

}  // namespace

std::vector<std::string> expand_cubic_word(const std::vector<std::string>& word) {
  std::vector<std::string> out;
  for (auto& g : word) {
    if (is_cubic_generator(g)) {
      out.push_back(g);
      continue;
    }
    auto it = rewrite_table().find(g);
    if (it == rewrite_table().end()) throw DomainError("unknown cubic generator '" + g + "'");
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

GroupElement cubic_word(const std::vector<std::string>& word) {
  GroupElement e{{}, MobiusMap::identity(2)};
  for (auto& g : expand_cubic_word(word)) e = e * cubic_generator(g);
  return e;
}

GroupElement cubic_element(const std::string& name) {
  GroupElement e = cubic_word({name});
  e.word = {name};
  return e;
}

GroupElement ortho_element(const std::string& name) {
  const auto& p = orthoplicial_base();
  static const std::map<std::string, GroupElement> gens = [&] {
    std::map<std::string, GroupElement> m;
    auto perm = [&](const std::string& n, const SignedPerm& s) {
      m.emplace(n, GroupElement{{n}, signed_perm_symmetry(p, s)});
    };
    perm("R12", {{1, 2}, {2, 1}});
    perm("R23", {{2, 3}, {3, 2}});
    perm("R34", {{3, 4}, {4, 3}});
    perm("R44b", {{4, -4}});
    perm("R1-2", {{1, -2}, {2, -1}});
    perm("R3-4", {{3, -4}, {4, -3}});
    m.emplace("s1234", GroupElement{{"s1234"}, inversion_matrix(p.dual(make_label({1, 2, 3, 4})))});
    m.emplace("s1-2-34", GroupElement{{"s1-2-34"}, inversion_matrix(p.dual(make_label({1, -2, -3, 4})))});
    return m;
  }();
  auto it = gens.find(name);
  if (it == gens.end()) throw DomainError("unknown orthoplicial generator '" + name + "'");
  return it->second;
}

GroupElement phi(const std::vector<std::string>& word) {
  GroupElement e{{}, MobiusMap::identity(3)};
  for (auto& g : word) {
    if (g == "r12") e = e * ortho_element("R12");
    else if (g == "r23") e = e * ortho_element("R23");
    else if (g == "r33b") e = e * ortho_element("R1-2") * ortho_element("R3-4");
    else if (g == "s1") e = e * ortho_element("s1-2-34");
    else throw DomainError("phi: unknown generator '" + g + "'");
  }
  return e;
}

namespace {

const std::vector<std::string> kMuPlus = {"s1", "r13"};
const std::vector<std::string> kMuMinus = {"s1b", "r1b3"};
const std::vector<std::string> kNu = {"s3", "r33b"};

}  // namespace

Shifts cubic_shifts() {
  return {cubic_word(kMuPlus), cubic_word(kMuMinus), cubic_word(kNu)};
}

Shifts orthocubic_shifts() {
  static const Shifts s = {phi(expand_cubic_word(kMuPlus)), phi(expand_cubic_word(kMuMinus)),
                           phi(expand_cubic_word(kNu))};
  return s;
}

std::string to_string(ZColor c) { return c == ZColor::Black ? "black" : "white"; }

ZColor z_color(const InvVec& s) {
  if (!s.is_sphere() || s.dim() != 3) throw DomainError("z_color needs a 3-D sphere");
  int sz = s[2].sign();
  int sg = s.is_halfspace() ? sz : sz * s.bend().sign();
  if (sg == 0) throw GeometryError("sphere is centered on the cutting plane");
  return sg > 0 ? ZColor::Black : ZColor::White;
}

InvVec sigma_plane() { return halfspace({QuadExt(0), QuadExt(0), QuadExt(1)}, QuadExt(0)); }

std::vector<InvVec> orbit(const std::vector<GroupElement>& generators, const std::vector<InvVec>& seeds, int depth) {
  if (depth < 0) throw DomainError("orbit depth must be >= 0");
  auto less = [](const InvVec& a, const InvVec& b) { return lex_less(a, b); };
  std::set<InvVec, decltype(less)> seen(less);
  std::vector<InvVec> frontier;
  for (auto& s : seeds)
    if (seen.insert(s).second) frontier.push_back(s);
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<InvVec> next;
    for (auto& v : frontier)
      for (auto& g : generators) {
        InvVec w = g.apply(v);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<InvVec> orbit(const LabeledPacking& p, const std::vector<GroupElement>& generators,
                          const std::vector<Label>& seeds, int depth) {
  std::vector<InvVec> s;
  for (auto& l : seeds) s.push_back(p.sphere(l));
  return orbit(generators, s, depth);
}

std::vector<std::pair<std::size_t, std::size_t>> tangency_edges(const std::vector<InvVec>& spheres) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < spheres.size(); ++i)
    for (std::size_t j = i + 1; j < spheres.size(); ++j)
      if (inv_product(spheres[i], spheres[j]) == QuadExt(-1)) out.emplace_back(i, j);
  return out;
}

}  // namespace orthoweave

namespace orthoweave {

InvVec section_circle(const InvVec& s) {
  if (!s.is_sphere() || s.dim() != 3) throw DomainError("section_circle needs a 3-D sphere");
  QuadExt k2 = QuadExt(1) - s[2] * s[2];
  if (k2.sign() <= 0) throw GeometryError("sphere does not cross the cutting plane");
  auto k = k2.sqrt();
  if (!k) throw GeometryError("section circle leaves Q(sqrt2)");
  QuadExt inv = k->inverse();
  return InvVec::from_coords(2, VecKind::Sphere, {s[0] * inv, s[1] * inv, s[3] * inv, s[4] * inv});
}

}  // namespace orthoweave
