#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "morsenov/argmap.hpp"
#include "morsenov/error.hpp"

namespace morsenov::argmap {

namespace {

using Vec4 = Eigen::Vector4d;
using Jac = Eigen::Matrix<double, 3, 4>;

constexpr double kTransversalTol = 1e-6;

struct System {
  const BivariatePoly& p;
  double r;

  Eigen::Vector3d value(const Vec4& x) const {
    const cplx z(x[0], x[1]);
    const cplx w(x[2], x[3]);
    const cplx v = p(z, w);
    return {v.real(), v.imag(), x.squaredNorm() - r * r};
  }

  Jac jacobian(const Vec4& x) const {
    const cplx z(x[0], x[1]);
    const cplx w(x[2], x[3]);
    const cplx pz = p.dz(z, w);
    const cplx pw = p.dw(z, w);
    Jac j;
    // Cauchy-Riemann: d/dx = P', d/dy = i P'
    j << pz.real(), -pz.imag(), pw.real(), -pw.imag(),
         pz.imag(), pz.real(), pw.imag(), pw.real(),
         2 * x[0], 2 * x[1], 2 * x[2], 2 * x[3];
    return j;
  }

  double scale(const Vec4& x) const {
    const cplx z(x[0], x[1]);
    const cplx w(x[2], x[3]);
    double s = 0.0;
    for (const auto& t : p.terms())
      s += std::abs(t.coef) * std::pow(std::abs(z), t.zexp) * std::pow(std::abs(w), t.wexp);
    return std::max(s, 1.0);
  }

  // Gauss-Newton with minimum-norm steps onto {P = 0, |x| = r}.
  bool project(Vec4& x) const {
    for (int it = 0; it < 60; ++it) {
      const Eigen::Vector3d g = value(x);
      if (std::hypot(g[0], g[1]) <= 1e-13 * scale(x) && std::abs(g[2]) <= 1e-13 * r * r) return true;
      const Jac j = jacobian(x);
      const Eigen::Matrix3d jjt = j * j.transpose();
      const Eigen::Vector3d y = jjt.ldlt().solve(g);
      Vec4 step = j.transpose() * y;
      if (!step.allFinite()) return false;
      if (step.norm() > 0.25 * r) step *= 0.25 * r / step.norm();
      x -= step;
    }
    const Eigen::Vector3d g = value(x);
    return std::hypot(g[0], g[1]) <= 1e-10 * scale(x) && std::abs(g[2]) <= 1e-10 * r * r;
  }

  // Smallest singular value with unit-normalised rows, and the null direction.
  std::pair<double, Vec4> regularity(const Vec4& x) const {
    Jac j = jacobian(x);
    for (int k = 0; k < 3; ++k) {
      const double n = j.row(k).norm();
      if (n == 0.0) return {0.0, Vec4::Zero()};
      j.row(k) /= n;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(j), Eigen::ComputeFullV);
    return {svd.singularValues()[2], svd.matrixV().col(3)};
  }
};

struct TraceStats {
  int components = 0;
  std::size_t points = 0;
  double min_sv = std::numeric_limits<double>::infinity();
  bool failed = false;
};

TraceStats trace_set(const BivariatePoly& p, double r, int samples, std::mt19937_64& rng) {
  TraceStats stats;
  if (p.is_constant()) return stats;
  const System sys{p, r};
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec4> traced;
  const double step = 0.02 * r;

  for (int s = 0; s < samples; ++s) {
    Vec4 x(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    if (x.norm() < 1e-9) continue;
    x *= r / x.norm();
    if (!sys.project(x)) continue;
    const bool known = std::any_of(traced.begin(), traced.end(),
                                   [&](const Vec4& y) { return (y - x).norm() < 3 * step; });
    if (known) continue;

    ++stats.components;
    const Vec4 start = x;
    auto [sv, tangent] = sys.regularity(x);
    stats.min_sv = std::min(stats.min_sv, sv);
    traced.push_back(x);
    ++stats.points;
    if (sv <= kTransversalTol) {
      stats.failed = true;
      continue;
    }

    double h = step;
    bool closed = false;
    for (int k = 0; k < 20000 && !closed; ++k) {
      Vec4 next = x + h * tangent;
      if (!sys.project(next) || (next - x).norm() > 2 * h) {
        h *= 0.5;
        if (h < 1e-6 * r) {
          stats.failed = true;
          break;
        }
        continue;
      }
      auto [nsv, ntan] = sys.regularity(next);
      stats.min_sv = std::min(stats.min_sv, nsv);
      if (nsv <= kTransversalTol) {
        stats.failed = true;
        break;
      }
      if (ntan.dot(tangent) < 0) ntan = -ntan;
      x = next;
      tangent = ntan;
      traced.push_back(x);
      ++stats.points;
      h = std::min(step, h * 2);
      if (k > 3 && (x - start).norm() < 1.5 * step) closed = true;
    }
    if (!closed) stats.failed = true;
  }
  return stats;
}

}  // namespace

std::string to_string(LinkVerdict v) {
  switch (v) {
    case LinkVerdict::kTransversal:
      return "transversal";
    case LinkVerdict::kSuspect:
      return "suspect";
    case LinkVerdict::kEmptyLink:
      return "empty link";
  }
  return "suspect";
}

LinkRadiusResult check_link_radius(const BivariateMero& f, double r, int samples, std::uint64_t rng_seed) {
  if (!(r > 0)) throw Error(ErrorCode::kInvalidInput, "radius must be positive");
  if (samples <= 0) throw Error(ErrorCode::kInvalidInput, "sample count must be positive");
  std::mt19937_64 rng(rng_seed);
  const auto zeros = trace_set(f.numerator, r, samples, rng);
  const auto poles = trace_set(f.denominator, r, samples, rng);

  LinkRadiusResult out;
  out.zero_components = zeros.components;
  out.pole_components = poles.components;
  out.components = zeros.components + poles.components;
  out.points_checked = zeros.points + poles.points;
  out.min_singular_value = std::min(zeros.min_sv, poles.min_sv);
  if (out.components == 0) {
    out.verdict = LinkVerdict::kEmptyLink;
    out.min_singular_value = 0.0;
    out.notes.push_back("D(F) does not meet the sphere at this radius (no seed converged)");
  } else if (zeros.failed || poles.failed) {
    out.verdict = LinkVerdict::kSuspect;
    out.notes.push_back("rank drop or unclosed trace: the radius may be exceptional");
  } else {
    out.verdict = LinkVerdict::kTransversal;
  }
  return out;
}

}  // namespace morsenov::argmap
