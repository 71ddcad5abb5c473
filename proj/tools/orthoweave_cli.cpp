#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orthoweave/diagram.hpp"
#include "orthoweave/errors.hpp"
#include "orthoweave/serialize.hpp"

using namespace orthoweave;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kGeometry = 3 };

int report_error(const char* kind, const std::string& msg, int code, const ParseError* pe = nullptr) {
  json e{{"kind", kind}, {"message", msg}};
  if (pe) {
    e["line"] = pe->line();
    e["column"] = pe->column();
  }
  std::cerr << json{{"error", e}}.dump() << "\n";
  return code;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write " + path);
  f << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<InvVec> cubic_background() {
  std::vector<InvVec> out;
  for (const auto& [l, c] : cubic_base().spheres) out.push_back(c);
  return out;
}

struct Outputs {
  std::string json_path, svg_path, obj_path;
};

void describe_diagram(const CubicDiagram& d) {
  PDCode pd = pd_code(d);
  std::cout << "components: " << pd.components << "\n";
  if (pd.crossings.size() <= kMaxBracketCrossings) std::cout << "jones: " << jones(pd).to_string("t", 4) << "\n";
  if (pd.components == 2) std::cout << "linking number: " << linking_number(pd, 0, 1) << "\n";
}

int emit_necklace(const Necklace& n, const Outputs& out) {
  auto problems = check_necklace(n);
  CubicDiagram d = project(n);
  std::cout << "spheres: " << n.size() << ", crossings: " << d.crossings.size() << "\n";
  describe_diagram(d);
  if (!out.json_path.empty()) write_file(out.json_path, dump(necklace_json(n, d.crossings.size())));
  if (!out.svg_path.empty())
    write_file(out.svg_path, render_svg(d, n.frame == Frame::Orthocubic ? cubic_background() : std::vector<InvVec>{}));
  if (!out.obj_path.empty()) write_file(out.obj_path, to_obj(n.spheres));
  if (!problems.empty()) {
    std::cout << "valid: no\n";
    for (const auto& p : problems) std::cout << "  " << p << "\n";
    return report_error("geometry", problems.front(), kGeometry);
  }
  std::cout << "valid: yes\n";
  return kOk;
}

int emit_tangle(const OrthoTangle& t, const Outputs& out) {
  auto problems = check_tangle(t);
  CubicDiagram d = project(t);
  std::cout << "spheres: " << t.size() << ", crossings: " << d.crossings.size() << "\n";
  if (!out.json_path.empty()) write_file(out.json_path, dump(tangle_json(t, d.crossings.size())));
  if (!out.svg_path.empty()) write_file(out.svg_path, render_svg(d, cubic_background()));
  if (!out.obj_path.empty()) write_file(out.obj_path, to_obj(t.spheres));
  if (!problems.empty()) {
    std::cout << "valid: no\n";
    return report_error("geometry", problems.front(), kGeometry);
  }
  std::cout << "valid: yes\n";
  return kOk;
}

Slope parse_slope(const std::string& text) {
  if (text == "inf") return Slope::infinity();
  auto slash = text.find('/');
  mpz_class p, q = 1;
  try {
    p = mpz_class(text.substr(0, slash), 10);
    if (slash != std::string::npos) q = mpz_class(text.substr(slash + 1), 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("slope must look like p/q, p or inf", 1, 1);
  }
  return Slope(p, q);
}

int run(int argc, char** argv) {
  CLI::App app{"Sphere necklaces for algebraic links in the orthoplicial packing"};
  app.require_subcommand(1);

  Outputs out;
  std::string expr, word, slope_text, packing = "cubic", file;
  bool full = false, halfspace = false;
  long max = 0;
  int depth = 2;
  std::string csv_path;

  auto* tangle = app.add_subcommand("tangle", "build a necklace or tangle from a tangle expression");
  tangle->add_option("expr", expr, "e.g. N(t(2,2))")->required();
  tangle->add_flag("--full", full, "use the unreduced Conway algorithm for rational pieces");
  tangle->add_option("--json", out.json_path);
  tangle->add_option("--svg", out.svg_path);
  tangle->add_option("--obj", out.obj_path);

  auto* braid = app.add_subcommand("braid", "braid-grid necklace of a braid closure");
  braid->add_option("word", word, "letters a,b,... (uppercase inverse)")->required();
  braid->add_flag("--halfspace-closure", halfspace, "close a 2-strand word with the two bounding planes");
  braid->add_option("--json", out.json_path);
  braid->add_option("--svg", out.svg_path);
  braid->add_option("--obj", out.obj_path);

  auto* point = app.add_subcommand("point", "orthocubic point of a slope");
  point->add_option("slope", slope_text, "p/q")->required();
  point->add_option("--json", out.json_path);

  auto* solve = app.add_subcommand("solve", "solutions of x^4+y^4+z^4=2t^2 from the slope parametrization");
  solve->add_option("--max", max, "largest p")->required()->check(CLI::PositiveNumber);
  solve->add_option("--csv", csv_path);
  solve->add_option("--json", out.json_path);

  auto* orbit_cmd = app.add_subcommand("orbit", "enumerate a packing orbit");
  orbit_cmd->add_option("--packing", packing)->check(CLI::IsMember({"cubic", "ortho"}));
  orbit_cmd->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  orbit_cmd->add_option("--svg", out.svg_path);
  orbit_cmd->add_option("--json", out.json_path);

  auto* verify = app.add_subcommand("verify", "check a stored necklace JSON file");
  verify->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), kUsage);
  }

  if (*tangle) {
    Built b = build(parse(expr), full);
    std::cout << "expression: " << print(parse(expr)) << "\n";
    if (auto* n = std::get_if<Necklace>(&b)) return emit_necklace(*n, out);
    return emit_tangle(std::get<OrthoTangle>(b), out);
  }
  if (*braid) {
    std::cout << "word: " << word << "\n";
    return emit_necklace(braid_grid(word, halfspace), out);
  }
  if (*point) {
    Slope s = parse_slope(slope_text);
    OrthoPoint p = orthocubic_point(s);
    std::cout << "slope: " << s.to_string() << "\n";
    std::cout << "invvec: " << p.invvec.to_string() << "\n";
    std::cout << "cartesian: (" << p.cartesian[0].approx(output_precision()) << ", "
              << p.cartesian[1].approx(output_precision()) << ")\n";
    if (!s.is_infinite()) {
      mpz_class a = abs(s.p);
      DiophantineSolution d = diophantine_from(a, s.q);
      std::cout << "x^4+y^4+z^4=2t^2: " << d.x << "," << d.y << "," << abs(d.z) << "," << d.t
                << (d.degenerate ? " (degenerate)" : "") << "\n";
    }
    if (!out.json_path.empty()) write_file(out.json_path, dump(to_json(p)));
    return kOk;
  }
  if (*solve) {
    auto sols = diophantine(max);
    std::string csv = solutions_csv(sols);
    if (!csv_path.empty())
      write_file(csv_path, csv);
    if (!out.json_path.empty()) {
      json arr = json::array();
      for (const auto& s : sols) arr.push_back(to_json(s));
      write_file(out.json_path,
                 dump({{"family", "x=p, y=q, z=p-q, t=p^2-pq+q^2; not claimed to be all solutions"}, {"solutions", arr}}));
    }
    if (csv_path.empty() && out.json_path.empty()) std::cout << csv;
    std::cout << "# " << sols.size() << " tuples from the (p,q) parametrization; completeness is not claimed\n";
    return kOk;
  }
  if (*orbit_cmd) {
    std::vector<InvVec> circles;
    if (packing == "cubic") {
      std::vector<GroupElement> gens;
      for (auto n : {"r12", "r23", "r33b", "s1"}) gens.push_back(cubic_element(n));
      std::vector<Label> seeds;
      for (const auto& [l, c] : cubic_base().spheres) seeds.push_back(l);
      circles = orbit(cubic_base(), gens, seeds, depth);
    } else {
      std::vector<GroupElement> gens;
      for (auto n : {"R12", "R23", "R34", "R44b", "s1234"}) gens.push_back(ortho_element(n));
      std::vector<Label> seeds;
      for (const auto& [l, c] : orthoplicial_base().spheres) seeds.push_back(l);
      circles = orbit(orthoplicial_base(), gens, seeds, depth);
    }
    std::cout << "packing: " << packing << ", depth: " << depth << ", spheres: " << circles.size() << "\n";
    if (!out.json_path.empty()) write_file(out.json_path, dump({{"packing", packing}, {"spheres", spheres_json(circles)}}));
    if (!out.svg_path.empty()) {
      std::vector<InvVec> flat;
      if (packing == "cubic") {
        flat = circles;
      } else {
        // draw where the spheres meet z = 0
        for (const auto& s : circles) {
          try {
            flat.push_back(section_circle(s));
          } catch (const GeometryError&) {
          }
        }
      }
      write_file(out.svg_path, render_circles_svg(flat));
    }
    return kOk;
  }
  if (*verify) {
    std::ifstream f(file);
    if (!f) return report_error("usage", "cannot read " + file, kUsage);
    json j;
    try {
      j = json::parse(f);
    } catch (const json::parse_error& e) {
      return report_error("parse", e.what(), kParse);
    }
    Necklace n;
    try {
      n = necklace_from_json(j);
    } catch (const DomainError& e) {
      // a coordinate vector off the sphere/point quadric
      return report_error("geometry", e.what(), kGeometry);
    }
    auto problems = check_necklace(n);
    if (!problems.empty()) {
      std::cout << "valid: no\n";
      for (const auto& p : problems) std::cout << "  " << p << "\n";
      return report_error("geometry", problems.front(), kGeometry);
    }
    CubicDiagram d = project(n);
    if (j.contains("counts")) {
      const json& c = j["counts"];
      if (c.value("spheres", n.size()) != n.size() || c.value("crossings", d.crossings.size()) != d.crossings.size())
        return report_error("geometry", "stored counts disagree with the spheres", kGeometry);
    }
    std::cout << "spheres: " << n.size() << ", crossings: " << d.crossings.size() << "\n";
    describe_diagram(d);
    std::cout << "valid: yes\n";
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    return report_error("parse", e.what(), kParse, &e);
  } catch (const GeometryError& e) {
    return report_error("geometry", e.what(), kGeometry);
  } catch (const DomainError& e) {
    return report_error("domain", e.what(), kUsage);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), kUsage);
  }
}
