#include "toric/io.hpp"

#include <fstream>

namespace toric {

LatticePolytope read_polytope(std::istream& in, const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": parse error at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices"))
    throw InputError(source + ": expected an object with a \"vertices\" array");
  const Json& verts = doc["vertices"];
  if (!verts.is_array() || verts.empty())
    throw InputError(source + ": \"vertices\" must be a non-empty array");

  std::vector<Point> points;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Json& v = verts[i];
    if (!v.is_array() || v.empty())
      throw InputError(source + ": vertices[" + std::to_string(i) +
                       "] must be a non-empty array of integers");
    Point p;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!v[c].is_number_integer())
        throw InputError(source + ": vertices[" + std::to_string(i) + "][" + std::to_string(c) +
                         "] is not an integer");
      p.push_back(v[c].get<std::int64_t>());
    }
    if (!points.empty() && p.size() != points.front().size())
      throw InputError(source + ": vertices[" + std::to_string(i) + "] has dimension " +
                       std::to_string(p.size()) + ", expected " +
                       std::to_string(points.front().size()));
    points.push_back(std::move(p));
  }
  try {
    return LatticePolytope::from_vertices(points);
  } catch (const std::invalid_argument& e) {
    throw InputError(source + ": " + e.what());
  }
}

LatticePolytope read_polytope(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  return read_polytope(in, path.string());
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const Triangulation& t) {
  Json out = Json::array();
  for (const auto& s : t.simplices()) out.push_back(s.vertices);
  return out;
}

Json to_json(const Lifting& lambda) {
  Json out = Json::array();
  for (const auto& h : lambda.heights) out.push_back(to_json(h));
  return out;
}

Json to_json(const PLFunction& g) {
  Json values = Json::array();
  for (const auto& v : g.values) values.push_back(to_json(v));
  Json cells = Json::array();
  for (const auto& c : g.cells) cells.push_back(c);
  return Json{{"triangulation", cells}, {"values", values}};
}

Json to_json(const WeightPolytope& p) {
  Json gens = Json::array();
  for (const auto& g : p.generators)
    gens.push_back(Json{{"vector", g.vector}, {"triangulations", g.triangulations}});
  return Json{{"kind", std::string(to_string(p.kind))},
              {"vertices", p.vertices},
              {"generators", gens},
              {"affine_dim", p.affine_dim}};
}

Triangulation triangulation_from_json(const Json& j, const PointConfiguration& a) {
  if (!j.is_array()) throw InputError("triangulation must be an array of index arrays");
  std::vector<Cell> cells;
  for (const auto& c : j) cells.push_back(c.get<Cell>());
  try {
    return make_triangulation(cells, a);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("triangulation: ") + e.what());
  }
}

PLFunction pl_function_from_json(const Json& j, const PointConfiguration& a) {
  if (!j.is_object() || !j.contains("triangulation") || !j.contains("values"))
    throw InputError("PL function needs \"triangulation\" and \"values\"");
  const Triangulation t = triangulation_from_json(j["triangulation"], a);
  RationalVector values;
  for (const auto& v : j["values"]) {
    if (!v.is_string()) throw InputError("PL values must be \"p/q\" strings");
    try {
      values.push_back(parse_rational(v.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return pl_on_triangulation(t, a, std::move(values));
}

}  // namespace toric
