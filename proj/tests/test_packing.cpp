#include <random>

#include "doctest.h"
#include "orthoweave/errors.hpp"
#include "orthoweave/packing.hpp"
#include "test_helpers.hpp"

using namespace orthoweave;
using testutil::q;
using testutil::r;

namespace {

const QuadExt s2 = QuadExt::sqrt2();

InvVec S(int k) { return orthoplicial_base().sphere({k}); }

// Bend and center columns of the z-alternating orthoplicial table, scale * (x, y, z).
struct Row {
  int label;
  QuadExt bend, scale;
  int x, y, z;
};
std::vector<Row> table_rows() {
  QuadExt h = QuadExt(1) / s2;
  QuadExt bp = QuadExt(1) + h, bm = QuadExt(1) - h;
  QuadExt sm = s2 - QuadExt(1), sp = s2 + QuadExt(1);
  return {
      {1, bp, sm, 1, -1, 1},   {2, bp, sm, -1, 1, 1},    {3, bm, sp, -1, -1, 1},   {4, bm, sp, 1, 1, 1},
      {-1, bm, sp, -1, 1, -1}, {-2, bm, sp, 1, -1, -1},  {-3, bp, sm, 1, 1, -1},   {-4, bp, sm, -1, -1, -1},
  };
}

void check_pair_table(const LabeledPacking& p) {
  for (auto& [a, u] : p.spheres)
    for (auto& [b, v] : p.spheres) {
      QuadExt prod = inv_product(u, v);
      long flips = 0;
      for (std::size_t i = 0; i < a.size(); ++i) flips += a[i] == -b[i];
      if (p.dim == 3) {
        CHECK(prod == QuadExt(a == b ? 1 : (flips == 1 ? -3 : -1)));
      } else {
        // cube: edge -1, face diagonal -3, antipode -5
        CHECK(prod == QuadExt(1 - 2 * flips));
      }
    }
}

GroupElement random_cubic_word(std::mt19937_64& rng, std::vector<std::string>& word, int len) {
  static const std::vector<std::string> gens = {"r12", "r23", "r33b", "s1"};
  word.clear();
  for (int i = 0; i < len; ++i) word.push_back(gens[rng() % gens.size()]);
  return cubic_word(word);
}

}  // namespace

TEST_CASE("labels") {
  CHECK(label_string(make_label({3, -1, 2})) == "-123");
  CHECK(parse_label("1-2-34") == Label{1, -2, -3, 4});
  CHECK_THROWS_AS(parse_label("1-"), DomainError);
  CHECK_THROWS_AS(parse_label(""), DomainError);
}

TEST_CASE("cubic base") {
  const auto& p = cubic_base();
  CHECK(p.spheres.size() == 8);
  auto g = center_radius(p.sphere({1, 2, 3}));
  CHECK(g.center == QVector{q(1, 1), q(1, 1)});
  CHECK(g.radius == q(1, 1));
  auto gs = center_radius(p.sphere({1, -2, -3}));
  CHECK(gs.center == QVector{q(-1, 1), q(1, -1)});
  CHECK(gs.radius == q(-1, 1));
  CHECK(inv_product(p.sphere({1, 2, 3}), p.sphere({-1, 2, 3})) == QuadExt(-1));
  check_pair_table(p);

  // Explicit dual circles, compared up to orientation.
  auto check_dual = [&](int k, QVector c, QuadExt rad) {
    auto gd = center_radius(p.dual({k}));
    CHECK(gd.center == c);
    CHECK((gd.radius == rad || gd.radius == -rad));
    for (auto& [l, s] : p.spheres) {
      bool inc = std::find(l.begin(), l.end(), k) != l.end();
      if (inc) CHECK(inv_product(p.dual({k}), s).is_zero());
      else CHECK(inv_product(p.dual({k}), s).sign() <= 0);
    }
  };
  check_dual(1, {s2, 0}, 1);
  check_dual(-1, {-s2, 0}, 1);
  check_dual(2, {0, s2}, 1);
  check_dual(-2, {0, -s2}, 1);
  check_dual(3, {0, 0}, q(1, 1));
  check_dual(-3, {0, 0}, q(-1, 1));
  CHECK(inv_product(p.dual({1}), p.sphere({1, 2, 3})).is_zero());
}

TEST_CASE("orthoplicial base matches the table") {
  const auto& p = orthoplicial_base();
  for (auto& row : table_rows()) {
    QVector c{row.scale * QuadExt(row.x), row.scale * QuadExt(row.y), row.scale * QuadExt(row.z)};
    CHECK(sphere_from_bend_center(row.bend, c) == S(row.label));
  }
  QuadExt h = QuadExt(1) / s2;
  CHECK(S(4).coords() == QVector{h, h, h, h, 1});
  check_pair_table(p);
  CHECK(p.duals.size() == 16);
  for (auto& [f, d] : p.duals) {
    CHECK(inv_product(d, d) == QuadExt(1));
    for (auto& [l, s] : p.spheres) {
      bool inc = std::find(f.begin(), f.end(), l[0]) != f.end();
      if (inc) CHECK(inv_product(d, s).is_zero());
      else CHECK(inv_product(d, s).sign() < 0);
    }
  }
  auto gd = center_radius(p.dual(make_label({1, -2, -3, 4})));
  CHECK(gd.center == QVector{s2, 0, 0});
  CHECK(gd.radius == QuadExt(1));
}

TEST_CASE("dual_sphere rejects degenerate facets") {
  const auto& p = orthoplicial_base();
  CHECK_THROWS_AS(dual_sphere(p, {{1}, {2}}), DomainError);
  CHECK_THROWS_AS(dual_sphere(p, {{1}, {-1}, {2}, {3}}), DomainError);
}

TEST_CASE("signed permutation symmetries") {
  const auto& c = cubic_base();
  auto swap = [](std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m = QMatrix::identity(n);
    m(i, i) = 0;
    m(j, j) = 0;
    m(i, j) = 1;
    m(j, i) = 1;
    return m;
  };
  CHECK(signed_perm_symmetry(c, {{1, 2}, {2, 1}}).matrix() == swap(4, 0, 1));
  CHECK(signed_perm_symmetry(c, {{1, 3}, {3, 1}}).matrix() == swap(4, 0, 2));
  CHECK(signed_perm_symmetry(orthoplicial_base(), {{1, 2}, {2, 1}}).matrix() == swap(5, 0, 1));
  // quarter turn
  auto rot = signed_perm_symmetry(c, {{1, 2}, {2, -1}});
  CHECK(rot.apply(c.sphere({1, 2, 3})) == c.sphere({-1, 2, 3}));
  CHECK_THROWS_AS(signed_perm_symmetry(c, {{1, 4}, {4, 1}}), DomainError);
}

TEST_CASE("rewrite table agrees with directly built cubic maps") {
  const auto& c = cubic_base();
  CHECK(cubic_element("r13").matrix == signed_perm_symmetry(c, {{1, 3}, {3, 1}}));
  CHECK(cubic_element("r11b").matrix == signed_perm_symmetry(c, {{1, -1}}));
  CHECK(cubic_element("r1b3").matrix == signed_perm_symmetry(c, {{1, -3}, {3, -1}}));
  CHECK(cubic_element("s1b").matrix == inversion_matrix(c.dual({-1})));
  CHECK(cubic_element("s3").matrix == inversion_matrix(c.dual({3})));
  CHECK(cubic_element("r33b").matrix == inversion_matrix(sphere_from_bend_center(1, {0, 0})));
  CHECK_THROWS_AS(cubic_element("r99"), DomainError);
}

TEST_CASE("cubic shifts") {
  auto sh = cubic_shifts();
  const auto& c = cubic_base();
  // M(1) = S1 R13 R12 in closed form
  QMatrix m1 = QMatrix::from_rows({{0, 0, -3, s2 * QuadExt(2)}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -s2 * QuadExt(2), 3}});
  CHECK(sh.mu_plus.matrix == MobiusMap(2, m1) * cubic_element("r12").matrix.inverse());
  CHECK(sh.mu_plus.apply(c.sphere({1, 2, 3})) == c.sphere({1, 2, 3}));
  for (auto* g : {&sh.mu_plus, &sh.mu_minus, &sh.nu}) CHECK_NOTHROW(MobiusMap(2, g->matrix.matrix()));
}

TEST_CASE("section circles realize the cubic packing") {
  const auto& c = cubic_base();
  std::map<int, Label> circle_of = {{4, {1, 2, 3}},   {-1, {-1, 2, 3}}, {3, {-1, -2, 3}},  {-2, {1, -2, 3}},
                                    {1, {1, -2, -3}}, {2, {-1, 2, -3}}, {-3, {1, 2, -3}}, {-4, {-1, -2, -3}}};
  for (auto& [k, l] : circle_of) CHECK(section_circle(S(k)) == c.sphere(l));
}

TEST_CASE("phi") {
  const auto& p = orthoplicial_base();
  CHECK(phi({"s1"}).matrix == inversion_matrix(p.dual(make_label({1, -2, -3, 4}))));
  CHECK(phi(expand_cubic_word({"r13"})) == ortho_element("R12") * ortho_element("R23") * ortho_element("R12"));
  CHECK(phi({}).matrix == MobiusMap::identity(3));
  CHECK_THROWS_AS(phi({"r13"}), DomainError);

  // Equivariance with the section: phi(w) acts on section circles as w does.
  std::mt19937_64 rng(1);
  std::vector<std::string> w1, w2;
  for (int i = 0; i < 30; ++i) {
    GroupElement g1 = random_cubic_word(rng, w1, 1 + i % 5);
    GroupElement g2 = random_cubic_word(rng, w2, 1 + i % 3);
    std::vector<std::string> w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    CHECK(phi(w12) == phi(w1) * phi(w2));
    CHECK_NOTHROW(MobiusMap(3, phi(w12).matrix.matrix()));
    for (int k : {4, -2, 1}) CHECK(section_circle(phi(w1).apply(S(k))) == g1.apply(section_circle(S(k))));
  }
}

TEST_CASE("orthocubic shifts") {
  auto sh = orthocubic_shifts();
  CHECK(sh.mu_plus.apply(S(4)) == S(4));
  InvVec sig = sigma_plane();
  CHECK(sh.mu_plus.apply(sig) == sig);
  CHECK(sh.mu_minus.apply(sig) == sig);
  CHECK(sh.nu.apply(sig) == -sig);

  // Frozen action on the base (found by exact search).
  CHECK(sh.mu_plus.apply(S(-2)) == S(-2));
  CHECK(sh.mu_plus.apply(S(3)) == S(1));
  CHECK(sh.mu_plus.apply(S(-1)) == S(-3));
  CHECK(sh.mu_minus.apply(S(3)) == S(3));
  CHECK(sh.mu_minus.apply(S(-1)) == S(-1));
  CHECK(sh.mu_minus.apply(S(4)) == S(2));
  CHECK(sh.mu_minus.apply(S(-2)) == S(-4));
  CHECK(sh.nu.apply(S(-3)) == S(4));
  CHECK(sh.nu.apply(S(-4)) == S(3));
  CHECK(sh.nu.apply(S(1)) == S(-2));
  CHECK(sh.nu.apply(S(2)) == S(-1));

  CHECK(z_color(S(4)) == ZColor::Black);
  CHECK(z_color(S(-2)) == ZColor::White);
  CHECK(z_color(sh.nu.apply(S(4))) == ZColor::White);
  CHECK_THROWS_AS(z_color(halfspace({1, 0, 0}, 0)), GeometryError);

  std::vector<Label> seeds;
  for (auto& [l, s] : orthoplicial_base().spheres) seeds.push_back(l);
  auto orb = orbit(orthoplicial_base(), {sh.mu_plus, sh.mu_minus, sh.mu_plus.inverse(), sh.mu_minus.inverse()},
                   seeds, 2);
  CHECK(orb.size() > 8);
  for (auto& v : orb) {
    CHECK(z_color(sh.mu_plus.apply(v)) == z_color(v));
    CHECK(z_color(sh.mu_minus.apply(v)) == z_color(v));
    CHECK(z_color(sh.nu.apply(v)) != z_color(v));
  }
}

TEST_CASE("orbit") {
  const auto& c = cubic_base();
  std::vector<Label> seeds;
  for (auto& [l, s] : c.spheres) seeds.push_back(l);
  CHECK(orbit(c, {}, seeds, 0).size() == 8);
  CHECK_THROWS_AS(orbit(c, {}, seeds, -1), DomainError);
  std::vector<GroupElement> inv;
  for (auto& [l, d] : c.duals) inv.push_back({{"s" + label_string(l)}, inversion_matrix(d)});
  auto orb = orbit(c, inv, seeds, 1);
  CHECK(orb.size() == 8 + 6 * 4);
  for (std::size_t i = 0; i < orb.size(); ++i) {
    CHECK(inv_product(orb[i], orb[i]) == QuadExt(1));
    if (i + 1 < orb.size()) CHECK(lex_less(orb[i], orb[i + 1]));
    for (std::size_t j = i + 1; j < orb.size(); ++j) CHECK(inv_product(orb[i], orb[j]) <= QuadExt(-1));
  }
  auto edges = tangency_edges(orb);
  CHECK(!edges.empty());
  for (auto [i, j] : edges) CHECK(inv_product(orb[i], orb[j]) == QuadExt(-1));
}
