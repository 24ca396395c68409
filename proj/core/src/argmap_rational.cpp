#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "morsenov/argmap.hpp"
#include "morsenov/error.hpp"

namespace morsenov::argmap {

namespace {

// |p(z)| relative to the size of its terms at z.
double relative_value(const Poly& p, cplx z) {
  double size = 0.0;
  double power = 1.0;
  for (const auto& c : p.coefficients()) {
    size += std::abs(c) * power;
    power *= std::abs(z);
  }
  return size == 0.0 ? 0.0 : std::abs(p(z)) / size;
}

constexpr double kDivisorTol = 1e-9;

}  // namespace

RationalMap::RationalMap(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorCode::kInvalidInput, "denominator is identically zero");
  if (num_.is_zero()) throw Error(ErrorCode::kInvalidInput, "numerator is identically zero");
  for (const auto& root : find_roots(num_)) {
    if (relative_value(den_, root.value) <= kDivisorTol) {
      throw Error(ErrorCode::kInvalidInput, "numerator and denominator share a root; reduce the map");
    }
  }
}

RationalMap RationalMap::cayley_power(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidInput, "power must be positive");
  std::vector<cplx> num(static_cast<std::size_t>(n) + 1, cplx{});
  std::vector<cplx> den(static_cast<std::size_t>(n) + 1, cplx{});
  num.front() = 1.0;
  num.back() = 1.0;
  den.front() = 1.0;
  den.back() = -1.0;
  return RationalMap(Poly(num), Poly(den));
}

namespace {

// The argument lift near a point of local degree k is the germ Im(z^k):
// a nondegenerate saddle for k = 2, degenerate beyond.
MorseClass germ_class(int local_degree) {
  MorseClass m;
  m.degenerate = local_degree > 2;
  if (!m.degenerate) m.index = 1;
  return m;
}

}  // namespace

std::vector<CritPoint> crit_points_arg_rational(const RationalMap& r) {
  const Poly& n = r.numerator();
  const Poly& d = r.denominator();
  const Poly wronskian = n.derivative() * d - n * d.derivative();
  const double scale = std::max(n.max_abs_coefficient(), 1.0) * std::max(d.max_abs_coefficient(), 1.0);
  if (wronskian.max_abs_coefficient() <= 1e-13 * scale) {
    throw Error(ErrorCode::kInvalidInput, "rational map is constant; its argument has no critical structure");
  }

  std::vector<CritPoint> out;
  for (const auto& root : find_roots(wronskian)) {
    const cplx z = root.value;
    if (relative_value(n, z) <= kDivisorTol || relative_value(d, z) <= kDivisorTol) continue;
    const cplx value = n(z) / d(z);
    CritPoint cp;
    cp.location = SpherePoint{false, z};
    cp.value = value / std::abs(value);
    cp.local_degree = root.multiplicity + 1;
    cp.morse = germ_class(*cp.local_degree);
    cp.residual = std::abs(wronskian(z)) / (std::abs(d(z)) * std::abs(d(z)));
    out.push_back(cp);
  }
  std::sort(out.begin(), out.end(), [](const CritPoint& a, const CritPoint& b) {
    const auto za = std::get<SpherePoint>(a.location).z;
    const auto zb = std::get<SpherePoint>(b.location).z;
    return std::make_pair(za.real(), za.imag()) < std::make_pair(zb.real(), zb.imag());
  });

  // Chart u = 1/z around infinity.
  const int deg = std::max(n.degree(), d.degree());
  const Poly nu = n.reversed(deg);
  const Poly du = d.reversed(deg);
  const cplx n0 = nu(0.0);
  const cplx d0 = du(0.0);
  const double tol = 1e-13 * scale;
  if (std::abs(n0) > tol && std::abs(d0) > tol) {
    const Poly wu = nu.derivative() * du - nu * du.derivative();
    int order = 0;
    const auto& c = wu.coefficients();
    const double wscale = wu.max_abs_coefficient();
    while (static_cast<std::size_t>(order) < c.size() && std::abs(c[static_cast<std::size_t>(order)]) <= 1e-13 * wscale)
      ++order;
    if (order > 0) {
      CritPoint cp;
      cp.location = SpherePoint{true, cplx{}};
      const cplx value = n0 / d0;
      cp.value = value / std::abs(value);
      cp.local_degree = order + 1;
      cp.morse = germ_class(*cp.local_degree);
      cp.residual = 0.0;
      out.push_back(cp);
    }
  }
  return out;
}

int effective_threads(int requested) {
  int threads = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;
  if (const char* cap = std::getenv("MORSENOV_THREADS")) {
    const int limit = std::atoi(cap);
    if (limit > 0) threads = std::min(threads, limit);
  }
  return threads;
}

}  // namespace morsenov::argmap
