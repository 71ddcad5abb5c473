#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "orthoweave/diagram.hpp"
#include "orthoweave/numth.hpp"

namespace orthoweave {

using json = nlohmann::ordered_json;

// {"a": "p/q", "b": "p/q", "approx": "..."}; approx uses output_precision().
json to_json(const QuadExt& x);
json to_json(const InvVec& v);
json to_json(const Slope& s);
json to_json(const LaurentPoly& p);  // {"<exponent>": coeff}
json to_json(const PDCode& pd);
json to_json(const OrthoPoint& p);
json to_json(const DiophantineSolution& s);

json necklace_json(const Necklace& n, std::size_t crossings);
json tangle_json(const OrthoTangle& t, std::size_t crossings);
json spheres_json(const std::vector<InvVec>& spheres);

// Read back only the exact fields. Structural problems throw ParseError.
QuadExt quad_from_json(const json& j);
InvVec invvec_from_json(const json& j);
Necklace necklace_from_json(const json& j);

// Triangle meshes of the spheres (float centers/radii in comments).
std::string to_obj(const std::vector<InvVec>& spheres);

std::string solutions_csv(const std::vector<DiophantineSolution>& sols);

}  // namespace orthoweave
