#include "morsenov/io.hpp"

#include <string>

#include "morsenov/error.hpp"

namespace morsenov::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kInvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

double as_double(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

argmap::cplx as_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {as_double(j[0], "re"), as_double(j[1], "im")};
  bad("coefficient must be a number or an [re, im] pair");
}

json complex_to_json(argmap::cplx c) { return json::array({c.real() + 0.0, c.imag() + 0.0}); }

json location_to_json(const argmap::Location& loc) {
  if (const auto* s = std::get_if<argmap::SpherePoint>(&loc)) {
    if (s->at_infinity) return json{{"infinity", true}};
    return json{{"z", complex_to_json(s->z)}};
  }
  const auto& p = std::get<argmap::C2Point>(loc);
  return json{{"z", complex_to_json(p.z)}, {"w", complex_to_json(p.w)}};
}

json morse_to_json(const argmap::MorseClass& m) {
  json j;
  j["degenerate"] = m.degenerate;
  j["index"] = m.index ? json(*m.index) : json(nullptr);
  j["hessian_eigenvalues"] = m.eigenvalues;
  return j;
}

std::vector<argmap::Monomial> monomials_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be an array of monomials");
  std::vector<argmap::Monomial> out;
  for (const auto& t : j) {
    argmap::Monomial m;
    m.zexp = as_int(field(t, "zexp"), "zexp");
    m.wexp = as_int(field(t, "wexp"), "wexp");
    const double re = t.contains("re") ? as_double(t.at("re"), "re") : 0.0;
    const double im = t.contains("im") ? as_double(t.at("im"), "im") : 0.0;
    m.coef = {re, im};
    out.push_back(m);
  }
  return out;
}

json monomials_to_json(const argmap::BivariatePoly& p) {
  json out = json::array();
  for (const auto& t : p.terms())
    out.push_back({{"zexp", t.zexp}, {"wexp", t.wexp}, {"re", t.coef.real()}, {"im", t.coef.imag()}});
  return out;
}

}  // namespace

json braidword_to_json(const Braidword& word) {
  return json{{"strands", word.strands()}, {"word", word.to_signed()}};
}

Braidword braidword_from_json(const json& j) {
  const int strands = as_int(field(j, "strands"), "strands");
  const auto& w = field(j, "word");
  if (!w.is_array()) bad("'word' must be an array of signed integers");
  std::vector<int> letters;
  for (const auto& x : w) letters.push_back(as_int(x, "braid letter"));
  return Braidword::from_signed(strands, letters);
}

json laurent_to_json(const LaurentPoly& p) {
  json terms = json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = c;
  return json{{"poly", terms}};
}

LaurentPoly laurent_from_json(const json& j) {
  const auto& terms = field(j, "poly");
  if (!terms.is_object()) bad("'poly' must be an object of exponent -> coefficient");
  std::map<int, std::int64_t> m;
  for (const auto& [k, v] : terms.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(k, &used);
    } catch (const std::exception&) {
      bad("bad exponent key '" + k + "'");
    }
    if (used != k.size()) bad("bad exponent key '" + k + "'");
    if (!v.is_number_integer()) bad("Laurent coefficients must be integers");
    m[e] += v.get<std::int64_t>();
  }
  return LaurentPoly::from_terms(m);
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    out.push_back(row);
  }
  return out;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  if (j.empty()) return IntMatrix(0, 0);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_number_integer()) bad("matrix entries must be integers");
      m(i, c) = j[i][c].get<std::int64_t>();
    }
  }
  return m;
}

json seifert_to_json(const SeifertMatrix& m) {
  return json{{"matrix", matrix_to_json(m.entries)},
              {"chi", m.chi},
              {"h1", m.h1},
              {"boundary_components", m.boundary_components},
              {"connected", m.connected}};
}

SurfaceExpr surface_expr_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) bad("surface expression must be a single-key object");
  const auto& [kind, body] = *j.items().begin();
  if (kind == "braid") return SurfaceExpr::braid(braidword_from_json(body));
  if (kind == "disk") return SurfaceExpr::disk();
  if (kind == "annulus") {
    std::optional<IntMatrix> companion;
    if (body.contains("companion")) companion = matrix_from_json(body.at("companion"));
    return SurfaceExpr::annulus(as_int(field(body, "n"), "n"), std::move(companion));
  }
  if (kind == "plumb") {
    const int gon = body.contains("gon") ? as_int(body.at("gon"), "gon") : 4;
    return SurfaceExpr::plumb(surface_expr_from_json(field(body, "left")),
                              surface_expr_from_json(field(body, "right")), gon,
                              matrix_from_json(field(body, "B")));
  }
  if (kind == "twist") {
    return SurfaceExpr::twist(surface_expr_from_json(field(body, "child")),
                              as_int(field(body, "index"), "index"), as_int(field(body, "turns"), "turns"));
  }
  bad("unknown surface expression kind '" + kind + "'");
}

json surface_expr_to_json(const SurfaceExpr& e) {
  return std::visit(
      [](const auto& node) -> json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LeafBraid>) {
          return json{{"braid", braidword_to_json(node.word)}};
        } else if constexpr (std::is_same_v<T, LeafAnnulus>) {
          json body{{"n", node.n}};
          if (node.companion) body["companion"] = matrix_to_json(*node.companion);
          return json{{"annulus", body}};
        } else if constexpr (std::is_same_v<T, LeafDisk>) {
          return json{{"disk", json::object()}};
        } else if constexpr (std::is_same_v<T, Plumb>) {
          return json{{"plumb",
                       {{"gon", node.gon},
                        {"B", matrix_to_json(node.interaction)},
                        {"left", surface_expr_to_json(node.left)},
                        {"right", surface_expr_to_json(node.right)}}}};
        } else {
          return json{{"twist",
                       {{"child", surface_expr_to_json(node.child)},
                        {"index", node.generator_index},
                        {"turns", node.turns}}}};
        }
      },
      e.node());
}

json bundle_to_json(const SeifertMatrixBundle& b) {
  json j;
  j["matrix"] = matrix_to_json(b.matrix);
  j["chi"] = b.chi;
  j["h1"] = b.h1;
  j["boundary_components"] = b.boundary_components ? json(*b.boundary_components) : json(nullptr);
  j["free"] = to_string(b.free);
  j["fibered"] = to_string(b.fibered);
  j["mn_upper"] = b.mn_upper;
  j["mn_upper_certified"] = b.mn_upper_certified;
  if (b.mn_exact) {
    j["mn_exact"] = {{"value", *b.mn_exact}, {"source", b.mn_exact_source}};
  } else {
    j["mn_exact"] = nullptr;
  }
  j["alexander"] = laurent_to_json(alexander_from_seifert(b.matrix));
  j["alexander_text"] = alexander_from_seifert(b.matrix).to_string();
  j["provenance"] = b.provenance;
  return j;
}

json deplumb_to_json(const DeplumbResult& d) {
  json steps = json::array();
  for (const auto& s : d.steps) steps.push_back({{"column", s.column}, {"position", s.position}});
  return json{{"removed", d.removed}, {"residual", d.residual}, {"steps", steps}};
}

argmap::BivariateMero bivariate_from_json(const json& j) {
  argmap::BivariateMero f;
  f.numerator = argmap::BivariatePoly(monomials_from_json(field(j, "P")));
  if (j.contains("Q")) f.denominator = argmap::BivariatePoly(monomials_from_json(j.at("Q")));
  if (f.numerator.is_zero()) bad("P must not be identically zero");
  if (f.denominator.is_zero()) bad("Q must not be identically zero");
  return f;
}

json bivariate_to_json(const argmap::BivariateMero& f) {
  return json{{"P", monomials_to_json(f.numerator)}, {"Q", monomials_to_json(f.denominator)}};
}

argmap::Poly poly_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be an array of ascending coefficients");
  std::vector<argmap::cplx> c;
  for (const auto& x : j) c.push_back(as_complex(x));
  return argmap::Poly(std::move(c));
}

argmap::RationalMap rational_from_json(const json& j) {
  return argmap::RationalMap(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
}

json crit_point_to_json(const argmap::CritPoint& p) {
  json j;
  j["location"] = location_to_json(p.location);
  j["value"] = complex_to_json(p.value);
  j["morse"] = morse_to_json(p.morse);
  // Sphere points are classified from the local germ, not a sampled Hessian.
  if (p.local_degree) j["morse"].erase("hessian_eigenvalues");
  j["local_degree"] = p.local_degree ? json(*p.local_degree) : json(nullptr);
  j["residual"] = p.residual;
  return j;
}

json milnor_result_to_json(const argmap::MilnorResult& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back(crit_point_to_json(p));
  json curves = json::array();
  for (const auto& c : r.degeneracy.curves) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(location_to_json(m));
    curves.push_back({{"member_count", c.members.size()},
                      {"diameter", c.diameter},
                      {"max_gap", c.max_gap},
                      {"members", members}});
  }
  json degenerate = json::array();
  for (const auto& p : r.degeneracy.degenerate_points) degenerate.push_back(crit_point_to_json(p));
  return json{{"critical_points", points},
              {"degeneracy_report",
               {{"curves", curves}, {"degenerate_points", degenerate}, {"notes", r.degeneracy.notes}}},
              {"pairing",
               {{"index0", r.pairing.index0},
                {"index1", r.pairing.index1},
                {"index2", r.pairing.index2},
                {"index3", r.pairing.index3},
                {"degenerate", r.pairing.degenerate},
                {"consistent", r.pairing.consistent}}},
              {"min_residual", r.min_residual},
              {"converged_seeds", r.converged_seeds}};
}

json link_radius_to_json(const argmap::LinkRadiusResult& r) {
  return json{{"verdict", argmap::to_string(r.verdict)},
              {"components", r.components},
              {"zero_components", r.zero_components},
              {"pole_components", r.pole_components},
              {"points_checked", r.points_checked},
              {"min_singular_value", r.min_singular_value},
              {"notes", r.notes}};
}

}  // namespace morsenov::io
