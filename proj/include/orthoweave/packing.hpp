#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orthoweave/inversive.hpp"

namespace orthoweave {

// A label set of signed vertex labels, sorted by absolute value; -i is the
// antipode of i. Orthoplex spheres use singletons, cubic circles triples.
using Label = std::vector<int>;

// "1-23" means {1, -2, 3}.
std::string label_string(const Label& l);
Label parse_label(const std::string& s);
Label make_label(std::vector<int> v);

struct LabeledPacking {
  int dim = 0;
  std::map<Label, InvVec> spheres;
  std::map<Label, InvVec> duals;

  const InvVec& sphere(const Label& l) const;
  const InvVec& dual(const Label& l) const;
};

// Circle packing of the cube, antipodal labelling; duals keyed {+-1},{+-2},{+-3}.
const LabeledPacking& cubic_base();
// z-alternating orthoplicial sphere packing; spheres keyed {+-i}, duals by
// their 4 incident labels.
const LabeledPacking& orthoplicial_base();

// Unit vector orthogonal to the listed base spheres; oriented so the other
// base spheres have nonpositive product with it.
InvVec dual_sphere(const LabeledPacking& p, const std::vector<Label>& incident);

// Signed permutation of the vertex labels, given on 1..k (sigma(-i) = -sigma(i)).
using SignedPerm = std::map<int, int>;
MobiusMap signed_perm_symmetry(const LabeledPacking& p, const SignedPerm& sigma);

struct GroupElement {
  std::vector<std::string> word;
  MobiusMap matrix;

  InvVec apply(const InvVec& v) const { return matrix.apply(v); }
  GroupElement inverse() const;
  // Equality is matrix equality; words are not canonical.
  friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.matrix == y.matrix; }
};
GroupElement operator*(const GroupElement& x, const GroupElement& y);

// Cubic generators r12, r23, r33b, s1 plus the rewrite-table names
// r13, r11b, s1b, r1b3, s3 (built from their generator words).
GroupElement cubic_element(const std::string& name);
// Rewrite table names expanded to generator words; generators pass through.
std::vector<std::string> expand_cubic_word(const std::vector<std::string>& word);
GroupElement cubic_word(const std::vector<std::string>& word);

// Orthoplicial generators R12, R23, R34, R44b, s1234 and the morphism images
// R1-2, R3-4 (hat reflections) and s1-2-34.
GroupElement ortho_element(const std::string& name);

// Section morphism on a word over {r12, r23, r33b, s1}.
GroupElement phi(const std::vector<std::string>& word);

struct Shifts {
  GroupElement mu_plus, mu_minus, nu;
};
Shifts cubic_shifts();
Shifts orthocubic_shifts();

enum class ZColor { Black, White };
std::string to_string(ZColor c);
ZColor z_color(const InvVec& s);

// Cutting plane z = 0.
InvVec sigma_plane();

// Breadth-first closure of seeds under the generators up to word length
// depth; exact dedup, sorted lexicographically by coordinates.
std::vector<InvVec> orbit(const std::vector<GroupElement>& generators, const std::vector<InvVec>& seeds, int depth);
std::vector<InvVec> orbit(const LabeledPacking& p, const std::vector<GroupElement>& generators,
                          const std::vector<Label>& seeds, int depth);

// Index pairs with product exactly -1.
std::vector<std::pair<std::size_t, std::size_t>> tangency_edges(const std::vector<InvVec>& spheres);

}  // namespace orthoweave

namespace orthoweave {

// Circle cut out of a 3-D sphere by the plane z = 0; throws if they miss.
InvVec section_circle(const InvVec& s);

}  // namespace orthoweave
