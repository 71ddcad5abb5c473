// Runs the acceptance criteria and prints one PASS/FAIL line each.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "orthoweave/diagram.hpp"
#include "orthoweave/errors.hpp"
#include "orthoweave/numth.hpp"

using namespace orthoweave;

namespace {

// Wall-clock limits in seconds.
constexpr double kTableLimit = 1.0;
constexpr double kRecursionLimit = 5.0;
constexpr double kIsotopyLimit = 1.0;

const QuadExt r2 = QuadExt::sqrt2();

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Clock {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

Necklace necklace(const std::string& e) { return std::get<Necklace>(build(parse(e))); }

bool positive_multiple(const QVector& v, const QVector& w) {
  std::size_t i = 0;
  while (i < w.size() && w[i].is_zero()) ++i;
  if (i == w.size() || v.size() != w.size()) return false;
  QuadExt lambda = v[i] / w[i];
  if (lambda.sign() <= 0) return false;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != lambda * w[k]) return false;
  return true;
}

std::vector<long> continued_fraction(long p, long q) {
  std::vector<long> a;
  while (q != 0) {
    a.push_back(p / q);
    long r = p % q;
    p = q;
    q = r;
  }
  return a;
}

void compositions(long budget, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (long a = 1; a <= budget; ++a) {
    cur.push_back(a);
    compositions(budget - a, cur, out);
    cur.pop_back();
  }
}

Slope slope_of(const std::vector<long>& a) {
  mpz_class p = 1, q = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    mpz_class np = *it * p + q;
    q = p;
    p = np;
  }
  return Slope(p, q);
}

Outcome sphere_table() {
  Clock c;
  // rows: label, bend = 1 + sb/sqrt2, center = (sc + sqrt2)(x, y, z), printed vector / (1/sqrt2)
  struct Row {
    int label, sb, sc, x, y, z;
    std::array<int, 4> v;
  };
  const std::vector<Row> rows = {
      {1, 1, -1, 1, -1, 1, {1, -1, 1, -1}},     {2, 1, -1, -1, 1, 1, {-1, 1, 1, -1}},
      {3, -1, 1, -1, -1, 1, {-1, -1, 1, 1}},    {4, -1, 1, 1, 1, 1, {1, 1, 1, 1}},
      {-1, -1, 1, -1, 1, -1, {-1, 1, -1, 1}},   {-2, -1, 1, 1, -1, -1, {1, -1, -1, 1}},
      {-3, 1, -1, 1, 1, -1, {1, 1, -1, -1}},    {-4, 1, -1, -1, -1, -1, {-1, -1, -1, -1}},
  };
  const QuadExt h = QuadExt(1) / r2;
  std::vector<InvVec> built;
  for (const auto& r : rows) {
    QuadExt bend = QuadExt(1) + QuadExt(r.sb) * h;
    QuadExt s = QuadExt(r.sc) + r2;
    InvVec b = sphere_from_bend_center(bend, {s * QuadExt(r.x), s * QuadExt(r.y), s * QuadExt(r.z)});
    QVector printed{h * QuadExt(r.v[0]), h * QuadExt(r.v[1]), h * QuadExt(r.v[2]), h * QuadExt(r.v[3]), h * r2};
    if (b.coords() != printed) return {false, "S" + std::to_string(r.label) + " differs from the printed vector"};
    if (!(orthoplicial_base().sphere({r.label}) == b)) return {false, "library base sphere differs for S" + std::to_string(r.label)};
    built.push_back(b);
  }
  int tangent = 0, antipodal = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i == j) continue;
      QuadExt p = inv_product(built[i], built[j]);
      bool anti = rows[i].label == -rows[j].label;
      if (p != QuadExt(anti ? -3 : -1)) return {false, "bad product in the pair table"};
      (anti ? antipodal : tangent)++;
    }
  double t = c.seconds();
  return {t < kTableLimit, std::to_string(tangent / 2) + " tangent and " + std::to_string(antipodal / 2) +
                               " antipodal unordered pairs, " + fmt(t)};
}

Outcome s1_matrix() {
  MobiusMap m = inversion_matrix(sphere_from_bend_center(1, {r2, 0}));
  QuadExt t = QuadExt(2) * r2;
  QMatrix printed = QMatrix::from_rows({{-3, 0, 0, t}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-t, 0, 0, 3}});
  return {m.matrix() == printed, "4x4 exact"};
}

Outcome recursion() {
  Clock c;
  int pairs = 0;
  for (long p = 1; p < 100; ++p)
    for (long q = 1; p + q <= 100; ++q) {
      if (std::gcd(p, q) != 1) continue;
      QVector expect{QuadExt(p * p), QuadExt(q * q), QuadExt((p - q) * (p - q)), r2 * QuadExt(p * p - p * q + q * q)};
      if (!positive_multiple(orthocubic_point_oracle(continued_fraction(p, q)).coords(), expect))
        return {false, "mismatch at " + std::to_string(p) + "/" + std::to_string(q)};
      ++pairs;
    }
  double t = c.seconds();
  return {t < kRecursionLimit, std::to_string(pairs) + " coprime pairs, " + fmt(t)};
}

Outcome diophantine_check() {
  auto sols = diophantine(200);
  for (const auto& s : sols)
    if (!satisfies_identity(s) || !is_primitive(s)) return {false, "bad tuple for p=" + s.p.get_str() + ", q=" + s.q.get_str()};
  return {true, std::to_string(sols.size()) + " tuples"};
}

Outcome sphere_counts() {
  std::ostringstream d;
  bool ok = true;
  auto expect = [&](const std::string& what, std::size_t got, std::size_t want) {
    d << what << "=" << got << " ";
    ok = ok && got == want;
  };
  expect("N(t[2])", closure(conway({2}, true), ClosureKind::N).size(), 8);
  expect("N(t[3])", closure(conway({3}, true), ClosureKind::N).size(), 12);
  expect("N(t[2,2])", closure(conway({2, 2}, true), ClosureKind::N).size(), 16);
  expect("P(3,2,3)", necklace("N(t(1/3)+t(1/2)+t(1/3))").size(), 32);

  // every positive list a1..an with sum <= 12, grown from its suffix:
  // t[a1,...,an] = H^a1 F t[a2,...,an]
  std::size_t lists = 0, bad = 0;
  std::function<void(const OrthoTangle&, long)> grow = [&](const OrthoTangle& suffix, long sum) {
    OrthoTangle t = flip(suffix);
    for (long a = 1; sum + a <= 12; ++a) {
      t = half_twist(t, 1);
      ++lists;
      bad += t.size() != static_cast<std::size_t>(4 * (sum + a));
      grow(t, sum + a);
    }
  };
  OrthoTangle last = elementary(ElementaryKind::T1);
  for (long an = 1; an <= 12; ++an) {
    if (an > 1) last = half_twist(last, 1);
    ++lists;
    bad += last.size() != static_cast<std::size_t>(4 * an);
    grow(last, an);
  }
  d << "exhaustive " << lists << " lists, " << bad << " off";
  return {ok && bad == 0 && lists == 4095, d.str()};
}

Outcome braid_counts() {
  std::size_t plain = braid_grid("aaaa", false).size();
  std::size_t half = braid_grid("aaaa", true).size();
  return {plain == 18 && half == 16,
          "plain " + std::to_string(plain) + " (want 18), half-space " + std::to_string(half) + " (want 16)"};
}

Outcome validity() {
  std::vector<std::pair<std::string, Necklace>> all;
  for (const char* e : {"N(t(2))", "N(t(3))", "N(t(2,2))", "D(t(2,3))", "N(t(1/3)+t(1/2)+t(1/3))",
                        "N(t(1/3)+t(-1/2)+t(1/3))", "N(t(1/2)+t(1/2)+t(1/2))", "N(-t(3))", "N(t(11/7))"})
    all.emplace_back(e, necklace(e));
  all.emplace_back("conway [2,-2,-3]", closure(conway({2, -2, -3}, false), ClosureKind::N));
  all.emplace_back("braid abAb", braid_grid("abAb", false));
  all.emplace_back("braid aaa", braid_grid("aaa", false));
  all.emplace_back("braid aaaa half-space", braid_grid("aaaa", true));
  for (const auto& [name, n] : all) {
    auto problems = check_necklace(n);
    if (!problems.empty()) return {false, name + ": " + problems.front()};
  }

  // mutate every sphere of the trefoil, both ways a coordinate can move
  Necklace base = necklace("N(t(3))");
  const Rat eps(mpz_class(1), mpz_class("1000000000", 10));
  std::size_t rejected = 0, tried = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    // a raw coordinate change leaves the unit quadric
    ++tried;
    QVector v = base.spheres[i].coords();
    v[0] += QuadExt(eps);
    try {
      InvVec::from_coords(3, VecKind::Sphere, v);
    } catch (const DomainError&) {
      ++rejected;
    }
    // a moved center stays a sphere but breaks a tangency
    ++tried;
    Necklace n = base;
    SphereGeometry g = center_radius(n.spheres[i]);
    g.center[i % 3] += QuadExt(eps);
    n.spheres[i] = sphere_from_bend_center(g.radius.inverse(), g.center);
    rejected += !check_necklace(n).empty();
  }
  return {rejected == tried,
          std::to_string(all.size()) + " necklaces valid, " + std::to_string(rejected) + "/" + std::to_string(tried) + " mutants rejected"};
}

LaurentPoly golden_jones(const std::string& name, PDCode* pd = nullptr) {
  std::ifstream f(std::string(GOLDEN_DIR) + "/" + name + ".json");
  if (!f) throw std::runtime_error("missing golden " + name);
  auto j = nlohmann::json::parse(f);
  LaurentPoly p;
  for (const auto& [k, v] : j["jones_quarter"].items()) p += LaurentPoly::monomial(std::stol(k), v.get<long long>());
  if (pd) {
    for (const auto& x : j["crossings"]) pd->crossings.push_back(x.get<std::array<long, 4>>());
    pd->signs = j["signs"].get<std::vector<int>>();
    pd->components = j["components"].get<std::size_t>();
  }
  return p;
}

Outcome isotopy() {
  std::ostringstream d;
  bool ok = true;
  auto timed = [&](const std::string& what, const std::function<bool()>& f) {
    Clock c;
    bool r = f();
    double t = c.seconds();
    d << (d.tellp() > 0 ? "; " : "") << what << (r ? " ok " : " FAILED ") << fmt(t);
    ok = ok && r && t < kIsotopyLimit;
  };
  timed("trefoil", [] {
    PDCode ref;
    LaurentPoly g = golden_jones("trefoil", &ref);
    LaurentPoly j = jones(pd_code(project(necklace("N(t(3))"))));
    return jones(ref) == g && (j == g || j == g.reversed());
  });
  timed("figure-eight", [] {
    return jones(pd_code(project(necklace("N(t(2,2))")))) == golden_jones("figure_eight");
  });
  timed("hopf", [] { return std::labs(linking_number(pd_code(project(necklace("N(t(2))"))), 0, 1)) == 1; });
  timed("11/7", [] {
    return jones(pd_code(project(closure(conway({2, -2, -3}, false), ClosureKind::N)))) ==
           jones(pd_code(project(closure(conway({1, 1, 1, 3}, false), ClosureKind::N))));
  });
  return {ok, d.str()};
}

Outcome coherence() {
  std::vector<std::vector<long>> lists;
  std::vector<long> cur;
  compositions(8, cur, lists);
  for (const auto& a : lists) {
    if (point_from_tangle(conway(a, false)) != orthocubic_point(slope_of(a)).cartesian) {
      std::string s;
      for (long x : a) s += std::to_string(x) + " ";
      return {false, "mismatch for [ " + s + "]"};
    }
  }
  return {true, std::to_string(lists.size()) + " slopes"};
}

Outcome eight_nineteen() {
  Necklace n = necklace("N(t(1/3)+t(-1/2)+t(1/3))");
  std::size_t cr = project(n).crossings.size();
  return {n.size() == 32 && check_necklace(n).empty(),
          "generic build has " + std::to_string(n.size()) + " spheres (want 32), " + std::to_string(cr) + " crossings"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"orthoplicial sphere table", sphere_table},
      {"inversion matrix S1", s1_matrix},
      {"matrix recursion vs closed form", recursion},
      {"diophantine identity", diophantine_check},
      {"rational tangle sphere counts", sphere_counts},
      {"braid grid sphere counts", braid_counts},
      {"geometric validity and mutation", validity},
      {"isotopy oracle", isotopy},
      {"orthocubic point coherence", coherence},
      {"8_19 generic build", eight_nineteen},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
