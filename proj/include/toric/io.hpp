// JSON input and output for polytopes, triangulations, vectors, PL functions
// and weight polytopes. Rationals travel as "p/q" strings.
#pragma once

#include "toric/functionals.hpp"
#include "toric/lattice_polytope.hpp"
#include "toric/triangulation.hpp"
#include "toric/weight_polytope.hpp"

#include <json.hpp>

#include <filesystem>
#include <istream>
#include <stdexcept>

namespace toric {

using Json = nlohmann::ordered_json;

/// Malformed or unusable input; the message names the location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads {"vertices": [[int, ...], ...]}. Throws InputError.
LatticePolytope read_polytope(std::istream& in, const std::string& source = "<input>");
LatticePolytope read_polytope(const std::filesystem::path& path);

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const Triangulation& t);
Json to_json(const Lifting& lambda);
Json to_json(const PLFunction& g);
Json to_json(const WeightPolytope& p);

Triangulation triangulation_from_json(const Json& j, const PointConfiguration& a);
/// Inverse of to_json(PLFunction) for functions carried on a triangulation.
PLFunction pl_function_from_json(const Json& j, const PointConfiguration& a);

}  // namespace toric
