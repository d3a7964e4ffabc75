#include "toric/cli.hpp"

#include "toric/char_vectors.hpp"
#include "toric/io.hpp"
#include "toric/weight_polytope.hpp"

#include <sstream>

namespace toric::cli {

namespace {

std::string point_str(std::span<const std::int64_t> p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

std::string cells_str(const Triangulation& t) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < t.simplices().size(); ++i) {
    os << (i ? " " : "") << '[';
    const auto& v = t.simplices()[i].vertices;
    for (std::size_t j = 0; j < v.size(); ++j) os << (j ? "," : "") << v[j];
    os << ']';
  }
  os << '}';
  return os.str();
}

std::string lifting_str(const Lifting& l) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < l.heights.size(); ++i) os << (i ? "," : "") << l.heights[i].get_str();
  os << ')';
  return os.str();
}

struct Session {
  const RunConfig& config;
  std::ostream& out;
  LatticePolytope polytope;
  std::vector<std::string> warnings;
  std::optional<DelzantReport> delzant;

  Json header() const {
    Json cfg{{"seed", config.seed},
             {"trials", config.trials},
             {"max_triangulations", config.max_triangulations},
             {"time_budget", config.time_budget_seconds ? Json(*config.time_budget_seconds)
                                                        : Json(nullptr)},
             {"skip_delzant_check", config.skip_delzant_check}};
    if (!config.kind.empty()) cfg["kind"] = config.kind;
    return Json{{"command", config.command}, {"input", config.input}, {"config", cfg}};
  }

  void human_header() const {
    out << "command: " << config.command << "\ninput: " << config.input << "\nseed: " << config.seed
        << "  trials: " << config.trials << "  max-triangulations: " << config.max_triangulations
        << "  time-budget: "
        << (config.time_budget_seconds ? std::to_string(*config.time_budget_seconds) : "none")
        << "\n";
    for (const auto& w : warnings) out << "warning: " << w << "\n";
  }

  void emit(Json report) const {
    report["warnings"] = warnings;
    out << report.dump(2) << "\n";
  }

  EnumerationOptions enumeration_options() const {
    EnumerationOptions opt;
    opt.max_triangulations = config.max_triangulations;
    if (config.time_budget_seconds)
      opt.time_budget = std::chrono::duration<double>(*config.time_budget_seconds);
    return opt;
  }
};

int cmd_check(Session& s) {
  const auto& q = s.polytope;
  const auto a = lattice_points(q);
  const Degrees deg = degrees(q);
  const auto bvol = boundary_volume(q);
  if (s.config.format == Format::machine) {
    Json r = s.header();
    r["dimension"] = q.dim();
    r["vertices"] = q.vertices();
    Json facets = Json::array();
    for (const auto& f : q.facets()) facets.push_back(Json{{"normal", f.normal}, {"offset", f.offset}});
    r["facets"] = facets;
    if (s.delzant) {
      r["delzant"] = s.delzant->delzant;
      Json cones = Json::array();
      for (const auto& c : s.delzant->vertices)
        cones.push_back(Json{{"vertex", c.vertex},
                             {"edge_directions", c.edge_directions},
                             {"determinant", c.determinant},
                             {"smooth", c.smooth}});
      r["delzant_report"] = cones;
    } else {
      r["delzant"] = nullptr;
    }
    r["volume"] = deg.chow;
    r["boundary_volume"] = bvol;
    r["degrees"] = Json{{"chow", deg.chow}, {"hurwitz", deg.hurwitz}};
    r["points"] = a.size();
    s.emit(std::move(r));
  } else {
    s.human_header();
    s.out << "dimension: " << q.dim() << "\nvertices:";
    for (const auto& v : q.vertices()) s.out << ' ' << point_str(v);
    s.out << "\nfacets:";
    for (const auto& f : q.facets()) s.out << "  <x," << point_str(f.normal) << "> + " << f.offset << " >= 0";
    s.out << "\ndelzant: " << (s.delzant ? (s.delzant->delzant ? "true" : "false") : "skipped")
          << "\nvolume: " << deg.chow << "\nboundary volume: " << bvol
          << "\ndegrees: chow " << deg.chow << ", hurwitz " << deg.hurwitz
          << "\nlattice points: " << a.size() << "\n";
  }
  return ok;
}

int cmd_triangulations(Session& s) {
  const auto a = lattice_points(s.polytope);
  const auto regular = enumerate_regular(s.polytope, a, s.enumeration_options());
  if (s.config.format == Format::machine) {
    Json r = s.header();
    r["points"] = a.points();
    Json list = Json::array();
    for (std::size_t id = 0; id < regular.size(); ++id)
      list.push_back(Json{{"id", id},
                          {"simplices", to_json(regular[id].triangulation)},
                          {"witness", to_json(regular[id].witness)}});
    r["count"] = regular.size();
    r["triangulations"] = list;
    s.emit(std::move(r));
  } else {
    s.human_header();
    s.out << "regular triangulations: " << regular.size() << "\n";
    for (std::size_t id = 0; id < regular.size(); ++id)
      s.out << "T" << id << " " << cells_str(regular[id].triangulation)
            << "  witness " << lifting_str(regular[id].witness) << "\n";
  }
  return ok;
}

int cmd_vectors(Session& s) {
  const std::string kind = s.config.kind.empty() ? "all" : s.config.kind;
  if (kind != "all" && kind != "gkz" && kind != "boundary" && kind != "hurwitz") {
    throw InputError("unknown vector kind '" + kind + "' (gkz, boundary, hurwitz, all)");
  }
  const auto a = lattice_points(s.polytope);
  const auto regular = enumerate_regular(s.polytope, a, s.enumeration_options());
  std::vector<CharKind> kinds;
  if (kind == "all" || kind == "gkz") kinds.push_back(CharKind::gkz);
  if (kind == "all" || kind == "boundary") kinds.push_back(CharKind::boundary);
  if (kind == "all" || kind == "hurwitz") kinds.push_back(CharKind::hurwitz);
  auto compute = [&](CharKind k, const Triangulation& t) {
    switch (k) {
      case CharKind::gkz:
        return gkz_vector(t);
      case CharKind::boundary:
        return boundary_vector(t, s.polytope, a);
      case CharKind::hurwitz:
        break;
    }
    return hurwitz_vector(t, s.polytope, a);
  };

  if (s.config.format == Format::machine) {
    Json r = s.header();
    r["points"] = a.points();
    Json rows = Json::array();
    for (std::size_t id = 0; id < regular.size(); ++id) {
      Json row{{"id", id}, {"simplices", to_json(regular[id].triangulation)}};
      for (auto k : kinds) row[std::string(to_string(k))] = compute(k, regular[id].triangulation).entries;
      rows.push_back(std::move(row));
    }
    r["vectors"] = rows;
    s.emit(std::move(r));
  } else {
    s.human_header();
    s.out << "points:";
    for (const auto& p : a.points()) s.out << ' ' << point_str(p);
    s.out << "\n";
    for (std::size_t id = 0; id < regular.size(); ++id) {
      s.out << "T" << id << " " << cells_str(regular[id].triangulation) << "\n";
      for (auto k : kinds)
        s.out << "  " << to_string(k) << " " << point_str(compute(k, regular[id].triangulation).entries)
              << "\n";
    }
  }
  return ok;
}

int cmd_polytope(Session& s) {
  const std::string kind = s.config.kind.empty() ? "all" : s.config.kind;
  if (kind != "chow" && kind != "hurwitz" && kind != "all")
    throw InputError("unknown polytope kind '" + kind + "' (chow, hurwitz, all)");
  const ToricData data = ToricData::compute(s.polytope, s.enumeration_options());
  std::vector<const WeightPolytope*> polys;
  if (kind != "hurwitz") polys.push_back(&data.chow);
  if (kind != "chow") polys.push_back(&data.hurwitz);
  if (s.config.format == Format::machine) {
    Json r = s.header();
    r["points"] = data.points.points();
    Json ps = Json::array();
    for (const auto* p : polys) ps.push_back(to_json(*p));
    r["polytopes"] = ps;
    s.emit(std::move(r));
  } else {
    s.human_header();
    for (const auto* p : polys) {
      s.out << to_string(p->kind) << " polytope: " << p->vertices.size() << " vertices, "
            << p->generators.size() << " distinct generators, affine dimension " << p->affine_dim
            << "\n";
      for (const auto& v : p->vertices) s.out << "  vertex " << point_str(v) << "\n";
    }
  }
  return ok;
}

int cmd_verify(Session& s) {
  const ToricData data = ToricData::compute(s.polytope, s.enumeration_options());
  const VerificationReport identities = verify_identities(data, s.config.trials, s.config.seed);

  // Witness liftings: each lies in the open cone of its triangulation, so
  // the support minimum must be attained exactly at that triangulation's vector.
  VerificationReport witness;
  for (std::size_t id = 0; id < data.regular.size(); ++id) {
    const auto& rt = data.regular[id];
    const auto chow = verify_chow_support(data, rt.witness);
    const auto hu = verify_hurwitz_support(data, rt.witness);
    const auto eta = gkz_vector(rt.triangulation).entries;
    witness.checks += 3;
    if (chow.status != CheckStatus::pass)
      witness.failures.push_back("T" + std::to_string(id) + " witness: " + chow.detail);
    if (hu.status != CheckStatus::pass)
      witness.failures.push_back("T" + std::to_string(id) + " witness: " + hu.detail);
    if (chow.argmin != std::vector<IntVector>{eta})
      witness.failures.push_back("T" + std::to_string(id) +
                                 " witness: chow argmin is not the GKZ vector alone");
  }
  const SupportSweep sweep = verify_support_random(data, s.config.trials, s.config.seed);

  const bool passed = identities.passed() && witness.passed() && sweep.report.passed();
  if (s.config.format == Format::machine) {
    Json r = s.header();
    r["points"] = data.points.points();
    r["triangulations"] = data.regular.size();
    r["degrees"] = Json{{"chow", data.degrees.chow}, {"hurwitz", data.degrees.hurwitz}};
    r["chow_vertices"] = data.chow.vertices;
    r["hurwitz_vertices"] = data.hurwitz.vertices;
    auto section = [](const VerificationReport& v) {
      return Json{{"checks", v.checks}, {"failures", v.failures}, {"passed", v.passed()}};
    };
    r["identities"] = section(identities);
    r["witness_support"] = section(witness);
    Json sw = section(sweep.report);
    sw["attempts"] = sweep.attempts;
    sw["applicable"] = sweep.applicable;
    r["random_support"] = sw;
    r["passed"] = passed;
    s.emit(std::move(r));
  } else {
    s.human_header();
    s.out << "regular triangulations: " << data.regular.size() << "\n"
          << "degrees: chow " << data.degrees.chow << ", hurwitz " << data.degrees.hurwitz << "\n";
    for (std::size_t id = 0; id < data.regular.size(); ++id)
      s.out << "T" << id << " " << cells_str(data.regular[id].triangulation) << "  witness "
            << lifting_str(data.regular[id].witness) << "\n";
    s.out << "chow vertices:";
    for (const auto& v : data.chow.vertices) s.out << ' ' << point_str(v);
    s.out << "\nhurwitz vertices:";
    for (const auto& v : data.hurwitz.vertices) s.out << ' ' << point_str(v);
    s.out << "\n";
    auto line = [&](const char* name, const VerificationReport& v) {
      s.out << name << ": " << (v.passed() ? "pass" : "FAIL") << " (" << v.checks << " checks)\n";
      for (const auto& f : v.failures) s.out << "  " << f << "\n";
    };
    line("pairing identities", identities);
    line("witness support", witness);
    line("random support", sweep.report);
    s.out << (passed ? "all checks passed" : "verification FAILED") << "\n";
  }
  return passed ? ok : failure;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Session s{config, out, read_polytope(config.input), {}, {}};
    if (!config.skip_delzant_check) {
      s.delzant = is_delzant(s.polytope);
      for (const auto& c : s.delzant->vertices)
        if (!c.smooth)
          s.warnings.push_back("not Delzant: vertex " + point_str(c.vertex) + " has " +
                               std::to_string(c.edge_directions.size()) +
                               " edges with determinant " + std::to_string(c.determinant));
    }
    const auto vol = volume(s.polytope);
    if (vol < 2)
      s.warnings.push_back("degree " + std::to_string(vol) +
                           " violates the hypothesis deg >= 2");

    if (config.command == "check") return cmd_check(s);
    if (config.command == "triangulations") return cmd_triangulations(s);
    if (config.command == "vectors") return cmd_vectors(s);
    if (config.command == "polytope") return cmd_polytope(s);
    if (config.command == "verify") return cmd_verify(s);
    err << "unknown command '" << config.command << "'\n";
    return input_error;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const IncompleteEnumeration& e) {
    err << e.what() << " (found " << e.found() << ")\n";
    return cap_exceeded;
  }
}

}  // namespace toric::cli
