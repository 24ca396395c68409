#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "morsenov/argmap.hpp"
#include "morsenov/error.hpp"

namespace morsenov::argmap {

namespace {

using Vec4 = Eigen::Vector4d;
using Frame = Eigen::Matrix<double, 4, 3>;

constexpr double kDivisorGuard = 1e-12;

// Sum of |term| at (z, w), used to decide whether a value is negligible.
double term_size(const BivariatePoly& p, cplx z, cplx w) {
  double s = 0.0;
  for (const auto& t : p.terms())
    s += std::abs(t.coef) * std::pow(std::abs(z), t.zexp) * std::pow(std::abs(w), t.wexp);
  return s;
}

Vec4 to_vec(const C2Point& p) { return {p.z.real(), p.z.imag(), p.w.real(), p.w.imag()}; }
C2Point to_point(const Vec4& v) { return {{v[0], v[1]}, {v[2], v[3]}}; }

Frame tangent_frame(const Vec4& x) {
  Eigen::HouseholderQR<Eigen::Matrix<double, 4, 1>> qr(x);
  Eigen::Matrix4d q = qr.householderQ();
  return q.rightCols<3>();
}

Vec4 retract(const Vec4& x, const Vec4& v, double r) {
  Vec4 y = x + v;
  return y * (r / y.norm());
}

struct SeedOutcome {
  Vec4 x = Vec4::Zero();
  double residual = std::numeric_limits<double>::infinity();
  bool valid = false;
};

Vec4 residual_at(const BivariateMero& f, const Vec4& x) {
  const auto p = to_point(x);
  const auto rv = dependence_residual_vector(f, p.z, p.w);
  return {rv[0], rv[1], rv[2], rv[3]};
}

double distance(const C2Point& a, const C2Point& b) { return (to_vec(a) - to_vec(b)).norm(); }

}  // namespace

BivariateMero BivariateMero::brieskorn(int m, int n) {
  if (m < 0 || n < 0) throw Error(ErrorCode::kInvalidInput, "Brieskorn exponents must be nonnegative");
  return {BivariatePoly({{m, 0, cplx(m)}, {0, n, cplx(n)}}), BivariatePoly::constant(1.0)};
}

void SolverConfig::validate() const {
  if (seed_count <= 0 || newton_max_iters <= 0) {
    throw Error(ErrorCode::kInvalidInput, "seed_count and newton_max_iters must be positive");
  }
  if (!(tol_residual > 0) || !(tol_dedupe > 0) || !(tol_hessian > 0) || !(curve_linkage > 0)) {
    throw Error(ErrorCode::kInvalidInput, "solver tolerances must be positive");
  }
}

std::array<double, 4> dependence_residual_vector(const BivariateMero& f, cplx z, cplx w) {
  const cplx p = f.numerator(z, w);
  const cplx q = f.denominator(z, w);
  if (std::abs(p) <= kDivisorGuard * std::max(1.0, term_size(f.numerator, z, w)) ||
      std::abs(q) <= kDivisorGuard * std::max(1.0, term_size(f.denominator, z, w))) {
    throw Error(ErrorCode::kOnDivisor, "point lies on (or too close to) the zero/pole divisor");
  }
  // grad F / F = grad P / P - grad Q / Q
  const cplx gz = f.numerator.dz(z, w) / p - f.denominator.dz(z, w) / q;
  const cplx gw = f.numerator.dw(z, w) / p - f.denominator.dw(z, w) / q;
  const cplx i(0.0, 1.0);
  const cplx b1 = gz / i;
  const cplx b2 = gw / i;
  // a = conj(z, w); <b, a> = b1 conj(a1) + b2 conj(a2) = b1 z + b2 w
  const double a_norm2 = std::norm(z) + std::norm(w);
  if (a_norm2 == 0.0) throw Error(ErrorCode::kInvalidInput, "the origin is not on a sphere");
  const double lambda = (b1 * z + b2 * w).real() / a_norm2;
  const cplx r1 = b1 - lambda * std::conj(z);
  const cplx r2 = b2 - lambda * std::conj(w);
  return {r1.real(), r1.imag(), r2.real(), r2.imag()};
}

double dependence_residual(const BivariateMero& f, cplx z, cplx w) {
  const auto v = dependence_residual_vector(f, z, w);
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

std::pair<C2Point, double> refine_on_sphere(const BivariateMero& f, double r, C2Point start,
                                            const SolverConfig& cfg) {
  Vec4 x = to_vec(start);
  x *= r / x.norm();
  Vec4 rho;
  try {
    rho = residual_at(f, x);
  } catch (const Error&) {
    return {to_point(x), std::numeric_limits<double>::infinity()};
  }
  double norm = rho.norm();
  double damping = 1e-8;
  const double h = 1e-7 * r;

  for (int it = 0; it < cfg.newton_max_iters && norm >= cfg.tol_residual; ++it) {
    const Frame t = tangent_frame(x);
    Eigen::Matrix<double, 4, 3> jac;
    try {
      for (int k = 0; k < 3; ++k) {
        const Vec4 dir = t.col(k) * h;
        jac.col(k) = (residual_at(f, retract(x, dir, r)) - residual_at(f, retract(x, -dir, r))) / (2 * h);
      }
    } catch (const Error&) {
      break;
    }
    const Eigen::Matrix3d jtj = jac.transpose() * jac;
    const Eigen::Vector3d grad = jac.transpose() * rho;
    const double diag_scale = std::max(jtj.diagonal().maxCoeff(), 1e-300);

    Eigen::Vector3d step = -(jtj + damping * diag_scale * Eigen::Matrix3d::Identity()).ldlt().solve(grad);
    if (!step.allFinite()) break;
    if (step.norm() > 0.5 * r) step *= 0.5 * r / step.norm();

    const Vec4 trial = retract(x, t * step, r);
    double trial_norm = std::numeric_limits<double>::infinity();
    Vec4 trial_rho;
    try {
      trial_rho = residual_at(f, trial);
      trial_norm = trial_rho.norm();
    } catch (const Error&) {
    }
    if (trial_norm < norm) {
      x = trial;
      rho = trial_rho;
      norm = trial_norm;
      damping = std::max(damping * 0.1, 1e-14);
    } else {
      damping *= 10.0;
      if (damping > 1e8) break;
    }
  }
  return {to_point(x), norm};
}

MorseClass classify_hessian(const std::function<double(const std::array<double, 3>&)>& g,
                            double step, double tol_hessian) {
  auto at = [&](double a, double b, double c) { return g({a, b, c}); };
  auto shift = [&](int i, double si, int j, double sj) {
    std::array<double, 3> s{0.0, 0.0, 0.0};
    s[static_cast<std::size_t>(i)] += si;
    s[static_cast<std::size_t>(j)] += sj;
    return g(s);
  };
  const double centre = at(0, 0, 0);
  Eigen::Matrix3d hess;
  for (int i = 0; i < 3; ++i) {
    hess(i, i) = (shift(i, step, i, 0) - 2 * centre + shift(i, -step, i, 0)) / (step * step);
    for (int j = i + 1; j < 3; ++j) {
      const double v = (shift(i, step, j, step) - shift(i, step, j, -step) - shift(i, -step, j, step) +
                        shift(i, -step, j, -step)) /
                       (4 * step * step);
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(hess);
  MorseClass out;
  int negative = 0;
  for (int k = 0; k < 3; ++k) {
    const double ev = es.eigenvalues()[k];
    out.eigenvalues[static_cast<std::size_t>(k)] = ev;
    if (std::abs(ev) <= tol_hessian) out.degenerate = true;
    if (ev < -tol_hessian) ++negative;
  }
  if (!out.degenerate) out.index = negative;
  return out;
}

MorseClass morse_index(const BivariateMero& f, double r, const C2Point& point, const SolverConfig& cfg) {
  const double res = dependence_residual(f, point.z, point.w);
  if (res > cfg.tol_residual) {
    throw Error(ErrorCode::kInvalidInput,
                "morse_index: point is not critical (residual " + std::to_string(res) + ")");
  }
  Vec4 x = to_vec(point);
  x *= r / x.norm();
  const Frame t = tangent_frame(x);
  const cplx base = f(point.z, point.w);
  auto lift = [&](const std::array<double, 3>& s) {
    const Vec4 y = retract(x, t * Eigen::Vector3d(s[0], s[1], s[2]), r);
    const auto p = to_point(y);
    // branch chosen relative to the centre value
    return std::arg(f(p.z, p.w) / base);
  };
  return classify_hessian(lift, 1e-4 * r, cfg.tol_hessian);
}

PairingDiagnostic morse_pairing(const std::vector<CritPoint>& points) {
  PairingDiagnostic d;
  for (const auto& p : points) {
    if (p.morse.degenerate || !p.morse.index) {
      ++d.degenerate;
      continue;
    }
    switch (*p.morse.index) {
      case 0: ++d.index0; break;
      case 1: ++d.index1; break;
      case 2: ++d.index2; break;
      default: ++d.index3; break;
    }
  }
  d.consistent = d.index1 == d.index2 && d.index0 == 0 && d.index3 == 0 && d.degenerate == 0;
  return d;
}

MilnorResult crit_points_milnor(const BivariateMero& f, double r, const SolverConfig& cfg) {
  cfg.validate();
  if (!(r > 0)) throw Error(ErrorCode::kInvalidInput, "radius must be positive");
  if (f.numerator.is_zero() || f.denominator.is_zero()) {
    throw Error(ErrorCode::kInvalidInput, "P and Q must be nonzero");
  }

  const auto n = static_cast<std::size_t>(cfg.seed_count);
  std::vector<Vec4> seeds(n);
  std::mt19937_64 rng(cfg.rng_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& s : seeds) {
    do {
      s = Vec4(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    } while (s.norm() < 1e-6);
    s *= r / s.norm();
  }

  std::vector<SeedOutcome> outcomes(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      auto [p, res] = refine_on_sphere(f, r, to_point(seeds[i]), cfg);
      outcomes[i] = {to_vec(p), res, std::isfinite(res)};
    }
  };
  const int threads = std::min<int>(effective_threads(cfg.threads), static_cast<int>(n));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  MilnorResult result;
  result.min_residual = std::numeric_limits<double>::infinity();
  std::vector<C2Point> unique;
  for (const auto& o : outcomes) {
    if (!o.valid) continue;
    result.min_residual = std::min(result.min_residual, o.residual);
    if (o.residual >= cfg.tol_residual) continue;
    ++result.converged_seeds;
    const auto p = to_point(o.x);
    const bool seen = std::any_of(unique.begin(), unique.end(),
                                  [&](const C2Point& u) { return distance(u, p) < cfg.tol_dedupe; });
    if (!seen) unique.push_back(p);
  }

  // single-linkage clustering
  const double linkage = cfg.curve_linkage * r;
  std::vector<std::size_t> parent(unique.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < unique.size(); ++a)
    for (std::size_t b = a + 1; b < unique.size(); ++b)
      if (distance(unique[a], unique[b]) <= linkage) parent[find(a)] = find(b);

  std::vector<std::vector<std::size_t>> clusters;
  std::vector<std::ptrdiff_t> slot(unique.size(), -1);
  for (std::size_t a = 0; a < unique.size(); ++a) {
    const auto root = find(a);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(clusters.size());
      clusters.emplace_back();
    }
    clusters[static_cast<std::size_t>(slot[root])].push_back(a);
  }

  for (const auto& members : clusters) {
    double diameter = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        diameter = std::max(diameter, distance(unique[members[i]], unique[members[j]]));

    if (members.size() >= 8 && diameter > 10 * cfg.tol_dedupe) {
      CriticalCurve curve;
      curve.diameter = diameter;
      for (auto m : members) curve.members.push_back(unique[m]);
      for (std::size_t i = 0; i < curve.members.size(); ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < curve.members.size(); ++j)
          if (i != j) nearest = std::min(nearest, distance(curve.members[i], curve.members[j]));
        curve.max_gap = std::max(curve.max_gap, nearest);
      }
      result.degeneracy.curves.push_back(std::move(curve));
      continue;
    }
    for (auto m : members) {
      CritPoint cp;
      cp.location = unique[m];
      const cplx v = f(unique[m].z, unique[m].w);
      cp.value = v / std::abs(v);
      cp.residual = dependence_residual(f, unique[m].z, unique[m].w);
      cp.morse = morse_index(f, r, unique[m], cfg);
      if (cp.morse.degenerate) {
        result.degeneracy.degenerate_points.push_back(cp);
      } else {
        result.points.push_back(cp);
      }
    }
  }

  result.pairing = morse_pairing(result.points);
  if (!result.degeneracy.curves.empty()) {
    result.degeneracy.notes.push_back(
        "positive-dimensional critical set: the Milnor map is not Morse at this radius, so a claim of "
        "finitely many Morse critical points (such as one each of index 1 and 2) is not confirmed");
  }
  if (!result.degeneracy.degenerate_points.empty()) {
    result.degeneracy.notes.push_back("isolated critical points with singular Hessian found");
  }
  if (!result.points.empty() && !result.pairing.consistent) {
    result.degeneracy.notes.push_back(
        "Morse pairing violated: expected equal numbers of index-1 and index-2 points and none of index 0 or 3");
  }
  return result;
}

}  // namespace morsenov::argmap
