#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "morsenov/polynomial.hpp"

namespace morsenov::argmap {

/// N/D on the Riemann sphere. Construction rejects a zero denominator and a
/// numerically shared root of N and D.
class RationalMap {
 public:
  RationalMap(Poly numerator, Poly denominator);

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }

  /// (1 + z^n) / (1 - z^n).
  static RationalMap cayley_power(int n);

 private:
  Poly num_;
  Poly den_;
};

/// F = P / Q on C^2; Q defaults to 1.
struct BivariateMero {
  BivariatePoly numerator;
  BivariatePoly denominator = BivariatePoly::constant(1.0);

  cplx operator()(cplx z, cplx w) const { return numerator(z, w) / denominator(z, w); }

  /// m z^m + n w^n.
  static BivariateMero brieskorn(int m, int n);
};

struct SpherePoint {
  bool at_infinity = false;
  cplx z;
};

struct C2Point {
  cplx z;
  cplx w;
};

using Location = std::variant<SpherePoint, C2Point>;

/// Morse index 0..3, or degenerate when the Hessian has a near-zero eigenvalue.
struct MorseClass {
  std::optional<int> index;
  bool degenerate = false;
  std::array<double, 3> eigenvalues{};
};

struct CritPoint {
  Location location;
  cplx value;  // critical value of arg F, on the unit circle
  MorseClass morse;
  std::optional<int> local_degree;
  double residual = 0.0;
};

struct SolverConfig {
  int seed_count = 4096;
  int newton_max_iters = 50;
  double tol_residual = 1e-10;
  double tol_dedupe = 1e-6;
  double tol_hessian = 1e-6;
  std::uint64_t rng_seed = 0;
  /// Single-linkage radius (relative to r) used to chain converged points into curves.
  double curve_linkage = 0.2;
  /// 0 means hardware concurrency; MORSENOV_THREADS caps either way.
  int threads = 0;

  void validate() const;
};

/// Critical points of arg R off its zeros and poles, in both charts.
std::vector<CritPoint> crit_points_arg_rational(const RationalMap& r);

/// Distance from b = (1/(iF)) grad F to the real span of a = conj(z, w).
/// Throws Error(kOnDivisor) when |P| or |Q| is negligible at the point.
double dependence_residual(const BivariateMero& f, cplx z, cplx w);

/// The residual as a real 4-vector (Re, Im of each component).
std::array<double, 4> dependence_residual_vector(const BivariateMero& f, cplx z, cplx w);

struct CriticalCurve {
  std::vector<C2Point> members;
  double diameter = 0.0;
  /// Largest nearest-neighbour gap among members.
  double max_gap = 0.0;
};

struct DegeneracyReport {
  std::vector<CriticalCurve> curves;
  /// Isolated converged points whose Hessian is singular.
  std::vector<CritPoint> degenerate_points;
  std::vector<std::string> notes;

  bool empty() const { return curves.empty() && degenerate_points.empty(); }
};

struct PairingDiagnostic {
  int index0 = 0;
  int index1 = 0;
  int index2 = 0;
  int index3 = 0;
  int degenerate = 0;
  /// True when #index-1 == #index-2 and no index-0 or index-3 points occur.
  bool consistent = true;
};

struct MilnorResult {
  std::vector<CritPoint> points;  // Morse points only
  DegeneracyReport degeneracy;
  PairingDiagnostic pairing;
  double min_residual = 0.0;  // smallest residual reached by any seed
  int converged_seeds = 0;
};

MilnorResult crit_points_milnor(const BivariateMero& f, double r, const SolverConfig& cfg = {});

/// Damped Gauss-Newton on the sphere from a single start point. Returns the
/// final point and its residual.
std::pair<C2Point, double> refine_on_sphere(const BivariateMero& f, double r, C2Point start,
                                            const SolverConfig& cfg = {});

/// Classifies a critical point by the Hessian of a continuous lift of arg F
/// in an orthonormal tangent frame. Throws Error(kInvalidInput) when the
/// residual at the point is above cfg.tol_residual.
MorseClass morse_index(const BivariateMero& f, double r, const C2Point& point,
                       const SolverConfig& cfg = {});

/// Hessian classification of a smooth function of three real variables at 0.
MorseClass classify_hessian(const std::function<double(const std::array<double, 3>&)>& g,
                            double step, double tol_hessian);

PairingDiagnostic morse_pairing(const std::vector<CritPoint>& points);

enum class LinkVerdict { kTransversal, kSuspect, kEmptyLink };

std::string to_string(LinkVerdict v);

struct LinkRadiusResult {
  LinkVerdict verdict = LinkVerdict::kEmptyLink;
  int components = 0;
  int zero_components = 0;
  int pole_components = 0;
  std::size_t points_checked = 0;
  /// Smallest normalised singular value of d(Re F, Im F, |x|^2) seen.
  double min_singular_value = 0.0;
  std::vector<std::string> notes;
};

/// Traces D(F) ∩ rS^3 from `samples` random seeds and checks transversality
/// along every traced circle.
LinkRadiusResult check_link_radius(const BivariateMero& f, double r, int samples,
                                   std::uint64_t rng_seed = 0);

/// Worker count after applying cfg.threads and MORSENOV_THREADS.
int effective_threads(int requested);

}  // namespace morsenov::argmap
