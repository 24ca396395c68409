// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "morsenov/morsenov.hpp"
#include "oracles.hpp"

using namespace morsenov;
using argmap::BivariateMero;
using argmap::BivariatePoly;
using argmap::cplx;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "FAILED: " << what << "; ";
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double t = seconds_since(t0);
  if (limit_s > 0) c.require(t < limit_s, "time limit " + std::to_string(limit_s) + " s exceeded");
  if (!c.ok) ++failures;
  std::printf("[%s] %2d %-34s %9.3f s  %s\n", c.ok ? "PASS" : "FAIL", id, name.c_str(), t, c.detail.str().c_str());
  std::fflush(stdout);
}

Braidword W(int n, std::vector<int> w) { return Braidword::from_signed(n, w); }

LaurentPoly P(std::vector<std::int64_t> c) { return LaurentPoly::from_coefficients(0, std::move(c)); }

std::vector<oracle::Term> terms(const BivariatePoly& p) {
  std::vector<oracle::Term> out;
  for (const auto& m : p.terms()) out.push_back({m.zexp, m.wexp, m.coef});
  return out;
}

// Straight count, independent of ExponentTable.
int count_inhomogeneity(const Braidword& w) {
  int total = 0;
  for (int i = 1; i < w.strands(); ++i) {
    int pos = 0;
    int neg = 0;
    for (int x : w.to_signed()) {
      if (x == i) ++pos;
      if (x == -i) ++neg;
    }
    total += std::min(pos, neg);
  }
  return total;
}

void ac1(Check& c) {
  const auto timed = [&](const Braidword& w, int expected, const char* label) {
    const auto t0 = Clock::now();
    const int got = inhomogeneity(w);
    const double t = seconds_since(t0);
    c.require(got == expected, std::string(label) + " = " + std::to_string(got));
    c.require(t < 1e-3, std::string(label) + " took >= 1 ms");
  };
  timed(W(2, {1, 1, -1, 1}), 1, "I(s1 s1 -s1 s1)");
  timed(W(3, {1, -2, 1, -2}), 0, "I(s1 -s2 s1 -s2)");
  timed(W(2, {1, 1, 1}), 0, "I(s1 s1 s1)");
  timed(W(3, {-1, -2, -1, -2, -2}), 0, "I(-s1 -s2 -s1 -s2 -s2)");
  timed(W(4, {1, -2, 3, 1, -2, 3}), 0, "I(s1 -s2 s3 s1 -s2 s3)");
  c.detail << "5 words exact";
}

void ac2(Check& c) {
  std::mt19937_64 rng(20240601);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto w = gen::random_strict_word(rng, 4, 12);
    const int removed = deplumb_braid_surface(w).removed;
    if (removed != inhomogeneity(w) || removed != count_inhomogeneity(w)) ++mismatches;
  }
  c.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  c.detail << "1000 words, seed 20240601";
}

void ac3(Check& c) {
  std::size_t words = 0;
  std::size_t oracle_checked = 0;
  int mismatches = 0;
  for (const auto& [n, len] : {std::pair{2, 6}, std::pair{3, 5}}) {
    for (const auto& w : gen::all_strict_words(n, len)) {
      ++words;
      const auto via_seifert = alexander_from_seifert(seifert_matrix_from_braid(w)).normalized();
      const auto via_burau = alexander_via_burau(w).normalized();
      if (via_seifert != via_burau) ++mismatches;
      if (via_seifert != LaurentPoly::from_terms(oracle::alexander(w.strands(), w.to_signed()))) ++mismatches;
      ++oracle_checked;
    }
  }
  c.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  c.detail << words << " strict words (B2 <= 6, B3 <= 5); also matched the DFT oracle on " << oracle_checked;
}

void ac4(Check& c) {
  const auto both = [&](const Braidword& w, const LaurentPoly& expected, const char* label) {
    const auto s = alexander_from_seifert(seifert_matrix_from_braid(w)).normalized();
    const auto b = alexander_via_burau(w).normalized();
    c.require(s == expected && b == expected, std::string(label) + " gave " + s.to_string() + " / " + b.to_string());
  };
  both(W(2, {1, 1, 1}), P({1, -1, 1}), "s1^3");
  both(W(3, {1, -2, 1, -2}), P({1, -3, 1}), "s1 s2^-1 s1 s2^-1");
  both(W(2, {1}), P({1}), "s1");
  c.detail << "t^2 - t + 1, t^2 - 3t + 1, 1";
}

void ac5(Check& c) {
  const IntMatrix trefoil{{-1, 1}, {0, -1}};
  for (int n = -3; n <= 3; ++n) {
    for (const auto& companion : {std::optional<IntMatrix>{}, std::optional<IntMatrix>{trefoil}}) {
      const auto e = SurfaceExpr::plumb(SurfaceExpr::annulus(n, companion), SurfaceExpr::annulus(0), 4, IntMatrix{{1}});
      const auto b = eval(e);
      c.require(alexander_from_seifert(b.matrix) == LaurentPoly(1),
                "A(K," + std::to_string(n) + ") * A(O,0) has Delta " + alexander_from_seifert(b.matrix).to_string());
      c.require(b.boundary_components == 1, "A(K,n) * A(O,0) boundary is not a knot");
    }
  }
  for (int n = -3; n <= 3; ++n) {
    for (int sign : {-1, 1}) {
      const auto b = twist_knot(n, sign).bundle;
      const int expected = std::abs(n) == 1 ? 0 : 2;
      c.require(b.mn_exact == expected && !b.mn_exact_source.empty(),
                "twist_knot(" + std::to_string(n) + "," + std::to_string(sign) + ") mn_exact");
    }
  }
  c.detail << "Delta = 1 for n in -3..3 (unknot and trefoil companions); twist knots 2,2,0,2,0,2,2. "
           << "note: twist_knot(0, -+1) bounds the unknot (Delta = 1) yet reports mn_exact 2 by the twist-knot convention";
}

void ac6(Check& c) {
  std::mt19937_64 rng(6);
  int plumbs = 0;
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    gen::for_each_node(gen::random_expr(rng, 4), [&](const SurfaceExpr& e) {
      const auto* p = std::get_if<Plumb>(&e.node());
      if (p == nullptr) return;
      ++plumbs;
      if (eval(e).mn_upper != eval(p->left).mn_upper + eval(p->right).mn_upper) ++bad;
    });
  }
  c.require(plumbs > 0, "no plumb nodes generated");
  c.require(bad == 0, std::to_string(bad) + " plumb nodes violate additivity");
  c.detail << plumbs << " plumb nodes in 200 trees";
}

void ac7(Check& c) {
  // Leaves realising each tri-state: a knotted companion is not free, an
  // Alexander-trivial nontrivial companion is undecided, A(O,0) is free.
  const SurfaceExpr leaf_no = SurfaceExpr::annulus(0, IntMatrix{{-1, 1}, {0, -1}});
  const SurfaceExpr leaf_unknown = SurfaceExpr::annulus(0, IntMatrix{{2, 1}, {0, 0}});
  const SurfaceExpr leaf_yes = SurfaceExpr::annulus(0);
  const std::pair<Tri, SurfaceExpr> leaves[] = {
      {Tri::kNo, leaf_no}, {Tri::kUnknown, leaf_unknown}, {Tri::kYes, leaf_yes}};
  int rows = 0;
  for (const auto& [a, ea] : leaves) {
    c.require(eval(ea).free == a, "leaf freeness " + to_string(a));
    for (const auto& [b, eb] : leaves) {
      // F0 * F1 is free iff F0 and F1 are free
      const Tri expected = (a == Tri::kYes && b == Tri::kYes)   ? Tri::kYes
                           : (a == Tri::kNo || b == Tri::kNo)   ? Tri::kNo
                                                                : Tri::kUnknown;
      c.require(propagate_free(a, b) == expected, "propagate_free(" + to_string(a) + "," + to_string(b) + ")");
      c.require(eval(SurfaceExpr::plumb(ea, eb, 4, IntMatrix{{1}})).free == expected,
                "eval plumb(" + to_string(a) + "," + to_string(b) + ")");
      ++rows;
    }
  }
  c.detail << rows << " pairs via propagate_free and via eval";
}

void ac8(Check& c) {
  for (int n = 1; n <= 8; ++n) {
    const auto pts = argmap::crit_points_arg_rational(argmap::RationalMap::cayley_power(n));
    if (n == 1) {
      c.require(pts.empty(), "p_1 has critical points");
      continue;
    }
    c.require(pts.size() == 2, "p_" + std::to_string(n) + " point count " + std::to_string(pts.size()));
    if (pts.size() != 2) continue;
    const auto& zero = std::get<argmap::SpherePoint>(pts[0].location);
    const auto& inf = std::get<argmap::SpherePoint>(pts[1].location);
    c.require(!zero.at_infinity && std::abs(zero.z) <= 1e-12, "p_" + std::to_string(n) + " first point not at 0");
    c.require(inf.at_infinity, "p_" + std::to_string(n) + " second point not at infinity");
    c.require(pts[0].local_degree == n && pts[1].local_degree == n, "p_" + std::to_string(n) + " local degree");
    c.require(std::abs(pts[0].value - 1.0) <= 1e-12 && std::abs(pts[1].value + 1.0) <= 1e-12,
              "p_" + std::to_string(n) + " critical values");
  }
  c.detail << "p_1 empty; p_2..p_8 give {0 -> 1, inf -> -1} with degree n";
}

void ac9(Check& c) {
  argmap::SolverConfig cfg;
  c.require(cfg.seed_count == 4096, "default seed count");
  for (const auto& [label, f] : {std::pair{"F_{2,3}", BivariateMero::brieskorn(2, 3)},
                                 std::pair{"F_{0,1}", BivariateMero::brieskorn(0, 1)}}) {
    const auto r = argmap::crit_points_milnor(f, 1.0, cfg);
    c.require(r.points.empty(), std::string(label) + " reported Morse points");
    c.require(r.degeneracy.empty(), std::string(label) + " degeneracy report not empty");
    c.require(r.min_residual > 1e-3, std::string(label) + " min residual " + std::to_string(r.min_residual));
    const auto scan = oracle::grid_scan(terms(f.numerator), 1.0, 40, 0.0);
    c.require(scan.min_residual > 1e-3, std::string(label) + " oracle grid min residual");
    c.detail << label << ": min residual " << r.min_residual << " (grid oracle " << scan.min_residual << "); ";
  }
}

void ac10(Check& c) {
  const double eps = 0.1;
  const BivariateMero g{BivariatePoly({{0, 2, 4.0}, {0, 1, -8.0 * eps}, {0, 0, -1.0}}), BivariatePoly::constant(1.0)};
  argmap::SolverConfig cfg;
  const auto solved = argmap::crit_points_milnor(g, 1.0, cfg);

  const auto scan = oracle::grid_scan(terms(g.numerator), 1.0, 100, 0.5);
  c.require(scan.samples >= 1000000, "oracle grid smaller than 1e6 samples");
  std::vector<oracle::SpherePoint> zeros;
  for (const auto& m : scan.minima)
    if (m.residual < 1e-8) zeros.push_back(m);
  c.require(!zeros.empty(), "oracle found no critical points");

  const double tol = cfg.tol_dedupe;
  const auto on_circle = [&](cplx z, cplx w) {
    return std::abs(w - eps) < tol && std::abs(std::norm(z) - (1.0 - eps * eps)) < tol;
  };

  // solver Morse points must sit on oracle zeros
  for (const auto& p : solved.points) {
    const auto& x = std::get<argmap::C2Point>(p.location);
    double best = INFINITY;
    for (const auto& o : zeros) best = std::min(best, std::sqrt(std::norm(o.z - x.z) + std::norm(o.w - x.w)));
    c.require(best < tol, "solver Morse point without an oracle match");
  }

  // every curve member is on the circle and is an oracle zero
  std::size_t members = 0;
  for (const auto& curve : solved.degeneracy.curves)
    for (const auto& m : curve.members) {
      ++members;
      c.require(on_circle(m.z, m.w), "curve member off the circle w = eps");
      c.require(oracle::residual(terms(g.numerator), m.z, m.w) < 1e-8, "curve member is not an oracle zero");
    }
  c.require(solved.degeneracy.curves.size() == 1, "expected exactly one degenerate curve");

  // every oracle zero is matched by a solver point or lies in a solver curve tube
  int unmatched = 0;
  for (const auto& o : zeros) {
    bool matched = false;
    for (const auto& p : solved.points) {
      const auto& x = std::get<argmap::C2Point>(p.location);
      matched = matched || std::sqrt(std::norm(o.z - x.z) + std::norm(o.w - x.w)) < tol;
    }
    for (const auto& curve : solved.degeneracy.curves) {
      double best = INFINITY;
      for (const auto& m : curve.members) best = std::min(best, std::sqrt(std::norm(o.z - m.z) + std::norm(o.w - m.w)));
      matched = matched || (on_circle(o.z, o.w) && best <= 1.5 * curve.max_gap);
    }
    if (!matched) ++unmatched;
  }
  c.require(unmatched == 0, std::to_string(unmatched) + " oracle zeros unmatched");

  // both sides sweep the whole circle
  const auto coverage = [](std::vector<double> phases) {
    std::sort(phases.begin(), phases.end());
    double gap = phases.empty() ? 2 * std::numbers::pi : phases.front() + 2 * std::numbers::pi - phases.back();
    for (std::size_t i = 1; i < phases.size(); ++i) gap = std::max(gap, phases[i] - phases[i - 1]);
    return gap;
  };
  std::vector<double> oracle_phases;
  for (const auto& o : zeros) oracle_phases.push_back(std::arg(o.z));
  std::vector<double> solver_phases;
  for (const auto& curve : solved.degeneracy.curves)
    for (const auto& m : curve.members) solver_phases.push_back(std::arg(m.z));
  c.require(coverage(oracle_phases) < 0.2, "oracle zeros do not cover the circle");
  c.require(coverage(solver_phases) < 0.2, "solver curve does not cover the circle");
  c.require(oracle::cluster(zeros, 0.2).size() == 1, "oracle zeros form more than one cluster");
  c.require(!solved.degeneracy.notes.empty(), "solver emitted no degeneracy note");

  c.detail << scan.samples << " grid samples, " << zeros.size() << " oracle zeros, " << members
           << " solver curve points, all on {w = 0.1, |z|^2 = 0.99}. note: G_eps is independent of z, so the "
              "critical set is this whole circle; there are no isolated Morse points of index 1 or 2";
}

void ac11(Check& c) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> count(0, 3);
  int runs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<argmap::CritPoint> pts;
    int n[4] = {0, 0, 0, 0};
    for (int index = 0; index < 4; ++index) {
      const int k = count(rng) * (index == 0 || index == 3 ? (trial % 3 == 0) : 1);
      for (int j = 0; j < k; ++j) {
        // sum of squares with `index` negative signs
        const auto m = argmap::classify_hessian(
            [index](const std::array<double, 3>& x) {
              double v = 0;
              for (int a = 0; a < 3; ++a) v += (a < index ? -1.0 : 1.0) * (a + 1) * x[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(a)];
              return v;
            },
            1e-3, 1e-6);
        argmap::CritPoint p;
        p.morse = m;
        pts.push_back(p);
        ++n[m.index.value_or(0)];
      }
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    const auto d = argmap::morse_pairing(pts);
    const bool expected = n[1] == n[2] && n[0] == 0 && n[3] == 0;
    c.require(d.consistent == expected, "pairing flag wrong on trial " + std::to_string(trial));
    c.require(d.index0 == n[0] && d.index1 == n[1] && d.index2 == n[2] && d.index3 == n[3], "pairing counts");
    ++runs;
  }
  c.detail << runs << " synthetic Morse sets classified by Hessian and checked";
}

void ac12(Check& c) {
  std::mt19937_64 rng(12);
  int nodes = 0;
  for (int i = 0; i < 200; ++i) {
    gen::for_each_node(gen::random_expr(rng, 4), [&](const SurfaceExpr& e) {
      ++nodes;
      const auto b = eval(e);
      c.require(b.h1 == 1 - b.chi, "h1 != 1 - chi");
      if (const auto* p = std::get_if<Plumb>(&e.node())) {
        c.require(b.chi == eval(p->left).chi + eval(p->right).chi - 1, "chi(plumb) != chi0 + chi1 - 1");
      }
    });
  }
  c.detail << nodes << " nodes in 200 trees";
}

}  // namespace

int main() {
  criterion(1, "inhomogeneity exactness", 0, ac1);
  criterion(2, "deplumbing count", 1.0, ac2);
  criterion(3, "Alexander cross-oracle", 30.0, ac3);
  criterion(4, "named knots", 0, ac4);
  criterion(5, "plumbing bookkeeping", 0, ac5);
  criterion(6, "subadditivity structure", 0, ac6);
  criterion(7, "freeness truth table", 0, ac7);
  criterion(8, "rational argument maps", 1.0, ac8);
  criterion(9, "Milnor negative controls", 60.0, ac9);
  criterion(10, "Milnor oracle agreement G_0.1", 120.0, ac10);
  criterion(11, "Morse pairing diagnostic", 0, ac11);
  criterion(12, "chi/h1 ledger", 0, ac12);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
