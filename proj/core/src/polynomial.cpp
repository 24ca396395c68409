#include "morsenov/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "morsenov/error.hpp"

namespace morsenov::argmap {

Poly::Poly(std::vector<cplx> coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty() && c_.back() == cplx{}) c_.pop_back();
}

cplx Poly::operator()(cplx z) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<cplx> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
  return Poly(std::move(d));
}

Poly Poly::reversed(int pad_degree) const {
  const int d = std::max(degree(), pad_degree);
  if (d < 0) return {};
  std::vector<cplx> r(static_cast<std::size_t>(d) + 1, cplx{});
  for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(d) - i] = c_[i];
  return Poly(std::move(r));
}

double Poly::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> out(a.c_.size() + b.c_.size() - 1, cplx{});
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<cplx> out(std::max(a.c_.size(), b.c_.size()), cplx{});
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return Poly(std::move(out));
}

std::vector<Root> find_roots(const Poly& p, double zero_tol) {
  std::vector<Root> roots;
  if (p.degree() <= 0) return roots;
  const double scale = p.max_abs_coefficient();
  auto negligible = [&](cplx c) { return std::abs(c) <= zero_tol * scale; };

  std::vector<cplx> c = p.coefficients();
  while (!c.empty() && negligible(c.back())) c.pop_back();
  std::size_t zeros = 0;
  while (zeros < c.size() && negligible(c[zeros])) ++zeros;
  if (zeros > 0) roots.push_back({cplx{}, static_cast<int>(zeros)});
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  const int degree = static_cast<int>(c.size()) - 1;
  if (degree <= 0) return roots;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kInternalInconsistency, "companion eigenvalue solve failed");
  }
  std::vector<cplx> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + degree);

  // A root of multiplicity m is perturbed by about eps^(1/m); cluster with a
  // generous radius and confirm each cluster by the vanishing of p^(j), j < m.
  const Poly reduced(c);
  std::vector<bool> used(eig.size(), false);
  for (std::size_t i = 0; i < eig.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<cplx> cluster{eig[i]};
    const double radius = 1e-4 * std::max(1.0, std::abs(eig[i]));
    for (std::size_t j = i + 1; j < eig.size(); ++j) {
      if (!used[j] && std::abs(eig[j] - eig[i]) <= radius) {
        used[j] = true;
        cluster.push_back(eig[j]);
      }
    }
    cplx centre{};
    for (const auto& x : cluster) centre += x;
    centre /= static_cast<double>(cluster.size());

    // Polish on the (m-1)-th derivative, where the root is simple.
    Poly g = reduced;
    for (std::size_t k = 1; k < cluster.size(); ++k) g = g.derivative();
    const Poly dg = g.derivative();
    for (int it = 0; it < 8; ++it) {
      const cplx d = dg(centre);
      if (std::abs(d) == 0.0) break;
      const cplx step = g(centre) / d;
      centre -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(centre))) break;
    }
    roots.push_back({centre, static_cast<int>(cluster.size())});
  }
  return roots;
}

BivariatePoly::BivariatePoly(std::vector<Monomial> terms) {
  std::map<std::pair<int, int>, cplx> merged;
  for (const auto& t : terms) {
    if (t.zexp < 0 || t.wexp < 0) {
      throw Error(ErrorCode::kInvalidInput, "monomial exponents must be nonnegative");
    }
    merged[{t.zexp, t.wexp}] += t.coef;
  }
  for (const auto& [e, c] : merged)
    if (c != cplx{}) terms_.push_back({e.first, e.second, c});
}

bool BivariatePoly::is_constant() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Monomial& m) { return m.zexp == 0 && m.wexp == 0; });
}

namespace {
cplx ipow(cplx x, int n) {
  cplx r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}
}  // namespace

cplx BivariatePoly::operator()(cplx z, cplx w) const {
  cplx acc{};
  for (const auto& t : terms_) acc += t.coef * ipow(z, t.zexp) * ipow(w, t.wexp);
  return acc;
}

cplx BivariatePoly::dz(cplx z, cplx w) const {
  cplx acc{};
  for (const auto& t : terms_)
    if (t.zexp > 0) acc += t.coef * static_cast<double>(t.zexp) * ipow(z, t.zexp - 1) * ipow(w, t.wexp);
  return acc;
}

cplx BivariatePoly::dw(cplx z, cplx w) const {
  cplx acc{};
  for (const auto& t : terms_)
    if (t.wexp > 0) acc += t.coef * static_cast<double>(t.wexp) * ipow(z, t.zexp) * ipow(w, t.wexp - 1);
  return acc;
}

}  // namespace morsenov::argmap
