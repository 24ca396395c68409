#include "morsenov_cli/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "morsenov/io.hpp"
#include "morsenov/morsenov.hpp"

namespace morsenov::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json payload = json::object();
  std::vector<std::string> provenance;
  // Set when the computation finished but a cross-check failed.
  std::optional<std::string> inconsistency;
};

using Action = std::function<Outcome()>;

std::string slurp(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot read file '" + arg.substr(1) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_arg(const std::string& arg) {
  try {
    return json::parse(slurp(arg));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorCode::kInvalidInput, "empty coefficient in '" + text + "'");
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw Error(ErrorCode::kInvalidInput, "bad coefficient '" + token + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidInput, "empty coefficient list");
  return out;
}

argmap::Poly poly_from_list(const std::string& text) {
  const auto values = parse_number_list(text);
  return argmap::Poly(std::vector<argmap::cplx>(values.begin(), values.end()));
}

struct BraidInput {
  std::string word;
  int strands = 0;
  std::string json_text;
  CLI::Option* word_opt = nullptr;

  void attach(CLI::App* cmd) {
    word_opt = cmd->add_option("--word,--braid", word, "braidword text, e.g. \"s1 -s2 s1\"");
    cmd->add_option("--strands,-n", strands, "strand count for --word");
    cmd->add_option("--json", json_text, "braidword JSON (inline or @file)");
  }

  Braidword resolve() const {
    if (!json_text.empty()) return io::braidword_from_json(parse_json_arg(json_text));
    if (word_opt == nullptr || word_opt->count() == 0) throw UsageError("a braid is required: --word/--strands or --json");
    if (strands <= 0) throw UsageError("--strands is required with --word");
    return parse_braidword(word, strands);
  }
};

struct MeroInput {
  std::string poly;
  std::vector<int> brieskorn;

  void attach(CLI::App* cmd) {
    cmd->add_option("--poly", poly, "bivariate JSON {\"P\": [...], \"Q\": [...]} (inline or @file)");
    cmd->add_option("--brieskorn", brieskorn, "m,n for F = m z^m + n w^n")->delimiter(',')->expected(2);
  }

  argmap::BivariateMero resolve() const {
    if (!brieskorn.empty()) return argmap::BivariateMero::brieskorn(brieskorn[0], brieskorn[1]);
    if (poly.empty()) throw UsageError("a function is required: --poly or --brieskorn");
    return io::bivariate_from_json(parse_json_arg(poly));
  }
};

json laurent_entry(const LaurentPoly& p) {
  json j = io::laurent_to_json(p);
  j["text"] = p.to_string();
  return j;
}

void append_bundle_provenance(const SeifertMatrixBundle& b, std::vector<std::string>& out) {
  out.insert(out.end(), b.provenance.begin(), b.provenance.end());
  if (b.mn_exact) out.push_back("mn_exact=" + std::to_string(*b.mn_exact) + ": " + b.mn_exact_source);
}

Outcome braid_analyze(const Braidword& word) {
  Outcome o;
  json& p = o.payload;
  p["braid"] = io::braidword_to_json(word);
  p["text"] = to_string(word);
  p["length"] = word.length();
  const ExponentTable table(word);
  json counts = json::array();
  for (int i = 1; i < word.strands(); ++i)
    counts.push_back({{"index", i}, {"positive", table.count(i, +1)}, {"negative", table.count(i, -1)}});
  p["exponents"] = counts;
  const auto hd = seifert_from_braid(word);
  p["components"] = boundary_components(hd);
  p["chi"] = hd.euler_characteristic();
  p["strict"] = is_strict(word);
  if (!is_strict(word)) {
    p["inhomogeneity"] = nullptr;
    p["mn_upper"] = nullptr;
    p["notes"] = {"word is not strict: the closure is split, inhomogeneity is undefined"};
    return o;
  }
  const int inh = inhomogeneity(word);
  const auto bundle = eval(SurfaceExpr::braid(word));
  p["inhomogeneity"] = inh;
  p["homogeneous"] = inh == 0;
  p["mn_upper"] = bundle.mn_upper;
  p["fibered"] = to_string(bundle.fibered);
  p["mn_exact"] = bundle.mn_exact ? json(*bundle.mn_exact) : json(nullptr);
  p["h1"] = bundle.h1;
  p["alexander"] = laurent_entry(alexander_from_seifert(bundle.matrix));
  append_bundle_provenance(bundle, o.provenance);
  return o;
}

Outcome braid_minimize(const Braidword& word, std::size_t budget) {
  const auto result = minimize_inhomogeneity(word, budget);
  Outcome o;
  o.payload = {{"input", io::braidword_to_json(word)},
               {"input_inhomogeneity", inhomogeneity(word)},
               {"braid", io::braidword_to_json(result.word)},
               {"text", to_string(result.word)},
               {"inhomogeneity", result.inhomogeneity},
               {"mn_upper", 2 * result.inhomogeneity},
               {"visited", result.visited},
               {"budget", budget}};
  o.provenance.push_back("moves: free reduction, cyclic rotation, distant commutation, braid relation");
  o.provenance.push_back("MN <= 2 I(b) for every strict representative b");
  return o;
}

Outcome seifert_matrix(const Braidword& word) {
  const auto hd = seifert_from_braid(word);
  json bands = json::array();
  for (const auto& b : hd.bands) bands.push_back({{"column", b.index}, {"sign", b.sign}});
  Outcome o;
  o.payload["handles"] = {{"disks", hd.disks}, {"bands", bands}, {"chi", hd.euler_characteristic()}};
  o.payload["seifert"] = io::seifert_to_json(seifert_matrix_from_braid(word));
  return o;
}

Outcome alexander(const std::optional<Braidword>& word, const std::optional<IntMatrix>& matrix,
                  const std::string& method) {
  Outcome o;
  if (matrix) {
    if (method != "seifert") throw UsageError("--matrix supports only --method seifert");
    o.payload["seifert"] = laurent_entry(alexander_from_seifert(*matrix));
    return o;
  }
  std::optional<LaurentPoly> via_seifert;
  std::optional<LaurentPoly> via_burau;
  if (method == "seifert" || method == "both") {
    via_seifert = alexander_from_seifert(seifert_matrix_from_braid(*word)).normalized();
    o.payload["seifert"] = laurent_entry(*via_seifert);
  }
  if (method == "burau" || method == "both") {
    via_burau = alexander_via_burau(*word).normalized();
    o.payload["burau"] = laurent_entry(*via_burau);
  }
  if (via_seifert && via_burau) {
    const bool agree = *via_seifert == *via_burau;
    o.payload["agree"] = agree;
    if (!agree) o.inconsistency = "Seifert and Burau routes disagree";
  }
  return o;
}

Outcome deplumb(const Braidword& word) {
  Outcome o;
  o.payload = io::deplumb_to_json(deplumb_braid_surface(word));
  o.payload["inhomogeneity"] = inhomogeneity(word);
  o.provenance.push_back("one A(O,0) plumbing split off per cancelled cyclic (+,-) pair");
  return o;
}

Outcome expr_eval(const SurfaceExpr& expr) {
  const auto bundle = eval(expr);
  Outcome o;
  o.payload = {{"expr", io::surface_expr_to_json(expr)}, {"bundle", io::bundle_to_json(bundle)}};
  append_bundle_provenance(bundle, o.provenance);
  return o;
}

Outcome named(const NamedSurface& s) {
  Outcome o;
  o.payload = {{"expr", io::surface_expr_to_json(s.expr)}, {"bundle", io::bundle_to_json(s.bundle)}};
  append_bundle_provenance(s.bundle, o.provenance);
  return o;
}

Outcome argmap_rational(const argmap::RationalMap& r) {
  json points = json::array();
  for (const auto& p : argmap::crit_points_arg_rational(r)) points.push_back(io::crit_point_to_json(p));
  Outcome o;
  o.payload = {{"critical_points", points}, {"count", points.size()}};
  o.provenance.push_back("critical points of arg R are the zeros of R' in both charts, off zeros and poles");
  return o;
}

Outcome argmap_milnor(const argmap::BivariateMero& f, double r, const argmap::SolverConfig& cfg,
                      bool with_members) {
  const auto result = argmap::crit_points_milnor(f, r, cfg);
  Outcome o;
  o.payload = io::milnor_result_to_json(result);
  if (!with_members) {
    for (auto& c : o.payload["degeneracy_report"]["curves"]) c.erase("members");
  }
  o.payload["radius"] = r;
  o.payload["function"] = io::bivariate_to_json(f);
  o.payload["config"] = {{"seed_count", cfg.seed_count},     {"newton_max_iters", cfg.newton_max_iters},
                         {"tol_residual", cfg.tol_residual}, {"tol_dedupe", cfg.tol_dedupe},
                         {"tol_hessian", cfg.tol_hessian},   {"rng_seed", cfg.rng_seed}};
  o.provenance.push_back("critical iff (conj z, conj w) and grad F/(iF) are real-linearly dependent");
  return o;
}

Outcome argmap_radius(const argmap::BivariateMero& f, double r, int samples, std::uint64_t seed) {
  Outcome o;
  o.payload = io::link_radius_to_json(argmap::check_link_radius(f, r, samples, seed));
  o.payload["radius"] = r;
  return o;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::kInternalInconsistency ? kInconsistency : kInput;
}

CommandResult error_result(int exit_code, std::string_view code, const std::string& message,
                           json payload = nullptr) {
  CommandResult r;
  r.exit_code = exit_code;
  r.envelope = {{"status", "error"},
                {"error", {{"code", std::string(code)}, {"message", message}}},
                {"payload", std::move(payload)},
                {"provenance", json::array()}};
  return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
  CLI::App app{"Morse-Novikov bounds, Seifert matrices and argument-map critical points", "morsenov"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indented JSON output");
  Action action;

  // braid analyze | minimize
  auto* braid = app.add_subcommand("braid", "braidword analysis");
  braid->require_subcommand(1);
  braid->fallthrough();
  BraidInput analyze_in;
  auto* analyze = braid->add_subcommand("analyze", "strictness, inhomogeneity and MN upper bound");
  analyze_in.attach(analyze);
  analyze->callback([&] { action = [&] { return braid_analyze(analyze_in.resolve()); }; });

  BraidInput minimize_in;
  std::size_t budget = 1000;
  auto* minimize = braid->add_subcommand("minimize", "bounded search for a less inhomogeneous word");
  minimize_in.attach(minimize);
  minimize->add_option("--budget", budget, "maximum number of distinct words visited")->check(CLI::PositiveNumber);
  minimize->callback([&] { action = [&] { return braid_minimize(minimize_in.resolve(), budget); }; });

  // seifert matrix
  auto* seifert = app.add_subcommand("seifert", "Seifert surfaces of closed braids");
  seifert->require_subcommand(1);
  seifert->fallthrough();
  BraidInput seifert_in;
  auto* matrix = seifert->add_subcommand("matrix", "handle decomposition and Seifert matrix");
  seifert_in.attach(matrix);
  matrix->callback([&] { action = [&] { return seifert_matrix(seifert_in.resolve()); }; });

  // alexander
  BraidInput alex_in;
  std::string alex_matrix;
  std::string method = "seifert";
  auto* alex = app.add_subcommand("alexander", "normalized Alexander polynomial");
  alex_in.attach(alex);
  alex->add_option("--matrix", alex_matrix, "Seifert matrix JSON [[...], ...] instead of a braid");
  alex->add_option("--method", method, "seifert, burau or both")
      ->check(CLI::IsMember({"seifert", "burau", "both"}));
  alex->callback([&] {
    action = [&] {
      if (!alex_matrix.empty()) return alexander(std::nullopt, io::matrix_from_json(parse_json_arg(alex_matrix)), method);
      return alexander(alex_in.resolve(), std::nullopt, method);
    };
  });

  // deplumb
  BraidInput deplumb_in;
  auto* dep = app.add_subcommand("deplumb", "split A(O,0) annuli off a braid surface");
  deplumb_in.attach(dep);
  dep->callback([&] { action = [&] { return deplumb(deplumb_in.resolve()); }; });

  // expr eval
  auto* expr = app.add_subcommand("expr", "Murasugi-sum expressions");
  expr->require_subcommand(1);
  expr->fallthrough();
  std::string expr_text;
  std::optional<int> twist_n;
  std::optional<int> doubled_n;
  std::string companion;
  int hopf_sign = -1;
  auto* ev = expr->add_subcommand("eval", "evaluate an expression to a Seifert matrix bundle");
  auto* expr_opt = ev->add_option("--expr", expr_text, "expression JSON (inline or @file)");
  auto* twist_opt = ev->add_option("--twist-knot", twist_n, "evaluate the twist knot A(O,n) * A(O,hopf)");
  auto* doubled_opt = ev->add_option("--doubled", doubled_n, "evaluate the doubled knot D(K,n,hopf)");
  ev->add_option("--companion", companion, "companion Seifert matrix JSON for --doubled");
  ev->add_option("--hopf-sign", hopf_sign, "sign of the Hopf band, +1 or -1")->check(CLI::IsMember({-1, 1}));
  expr_opt->excludes(twist_opt)->excludes(doubled_opt);
  twist_opt->excludes(doubled_opt);
  ev->callback([&] {
    action = [&] {
      if (twist_n) return named(twist_knot(*twist_n, hopf_sign));
      if (doubled_n) {
        const IntMatrix k = companion.empty() ? IntMatrix(0, 0) : io::matrix_from_json(parse_json_arg(companion));
        return named(doubled_knot(k, *doubled_n, hopf_sign));
      }
      if (expr_text.empty()) throw UsageError("one of --expr, --twist-knot or --doubled is required");
      return expr_eval(io::surface_expr_from_json(parse_json_arg(expr_text)));
    };
  });

  // argmap rational | milnor | radius
  auto* am = app.add_subcommand("argmap", "critical points of argument maps");
  am->require_subcommand(1);
  am->fallthrough();
  std::string num;
  std::string den;
  std::string rational_json;
  auto* rational = am->add_subcommand("rational", "arg of a rational map on the Riemann sphere");
  rational->add_option("--num", num, "numerator coefficients, ascending, comma separated");
  rational->add_option("--den", den, "denominator coefficients, ascending, comma separated");
  rational->add_option("--json", rational_json, "{\"num\": [...], \"den\": [...]} (inline or @file)");
  rational->callback([&] {
    action = [&] {
      if (!rational_json.empty()) return argmap_rational(io::rational_from_json(parse_json_arg(rational_json)));
      if (num.empty()) throw UsageError("--num is required");
      const argmap::Poly d = den.empty() ? argmap::Poly({1.0}) : poly_from_list(den);
      return argmap_rational(argmap::RationalMap(poly_from_list(num), d));
    };
  });

  argmap::SolverConfig cfg;
  double radius = 1.0;
  bool with_members = false;
  MeroInput milnor_in;
  auto* milnor = am->add_subcommand("milnor", "critical points of the Milnor map arg F on the sphere of radius r");
  milnor_in.attach(milnor);
  milnor->add_option("--radius,-r", radius, "sphere radius")->check(CLI::PositiveNumber);
  milnor->add_option("--seeds", cfg.seed_count, "number of random seeds");
  milnor->add_option("--max-iters", cfg.newton_max_iters, "Gauss-Newton iteration cap per seed");
  milnor->add_option("--tol-residual", cfg.tol_residual, "convergence threshold on the residual");
  milnor->add_option("--tol-dedupe", cfg.tol_dedupe, "distance below which points are merged");
  milnor->add_option("--tol-hessian", cfg.tol_hessian, "eigenvalue threshold for degeneracy");
  milnor->add_option("--rng-seed", cfg.rng_seed, "seed of the random seed generator");
  milnor->add_option("--threads", cfg.threads, "worker threads (0 = hardware, capped by MORSENOV_THREADS)");
  milnor->add_flag("--with-members", with_members, "list every converged point of each critical curve");
  milnor->callback([&] {
    action = [&] {
      cfg.validate();
      return argmap_milnor(milnor_in.resolve(), radius, cfg, with_members);
    };
  });

  MeroInput radius_in;
  double link_radius = 1.0;
  int samples = 2000;
  std::uint64_t link_seed = 0;
  auto* rad = am->add_subcommand("radius", "transversality of the link D(F) on the sphere of radius r");
  radius_in.attach(rad);
  rad->add_option("--radius,-r", link_radius, "sphere radius")->check(CLI::PositiveNumber);
  rad->add_option("--samples", samples, "random seeds used to find link components")->check(CLI::PositiveNumber);
  rad->add_option("--rng-seed", link_seed, "seed of the random seed generator");
  rad->callback([&] { action = [&] { return argmap_radius(radius_in.resolve(), link_radius, samples, link_seed); }; });

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  if (raw.empty()) raw.push_back("morsenov");

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    r.help = app.help();
    return r;
  } catch (const CLI::ParseError& e) {
    auto r = error_result(kUsage, "usage", e.what());
    r.pretty = pretty;
    return r;
  }

  CommandResult result;
  try {
    if (!action) throw UsageError("no command given");
    Outcome o = action();
    if (o.inconsistency) {
      result = error_result(kInconsistency, to_string(ErrorCode::kInternalInconsistency), *o.inconsistency,
                            std::move(o.payload));
      result.envelope["provenance"] = o.provenance;
    } else {
      result.envelope = {{"status", "ok"}, {"payload", std::move(o.payload)}, {"provenance", o.provenance}};
    }
  } catch (const UsageError& e) {
    result = error_result(kUsage, "usage", e.what());
  } catch (const Error& e) {
    result = error_result(exit_code_for(e.code()), to_string(e.code()), e.what());
  } catch (const json::exception& e) {
    result = error_result(kInput, to_string(ErrorCode::kInvalidInput), e.what());
  }
  result.pretty = pretty;
  return result;
}

std::string render(const CommandResult& result) {
  if (!result.help.empty()) return result.help;
  return result.envelope.dump(result.pretty ? 2 : -1);
}

}  // namespace morsenov::cli
