#pragma once

#include <complex>
#include <vector>

namespace morsenov::argmap {

using cplx = std::complex<double>;

/// Univariate complex polynomial, ascending coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> coefficients);

  const std::vector<cplx>& coefficients() const noexcept { return c_; }
  /// Degree after dropping exactly-zero top coefficients; -1 for zero.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }

  cplx operator()(cplx z) const;
  Poly derivative() const;
  /// z^d p(1/z) for d = max(degree, pad_degree).
  Poly reversed(int pad_degree) const;
  double max_abs_coefficient() const;

  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);

 private:
  std::vector<cplx> c_;
};

/// Roots of a polynomial grouped by multiplicity.
struct Root {
  cplx value;
  int multiplicity = 1;
};

/// Companion-matrix eigenvalues, clustered into multiple roots. Roots at 0
/// are split off exactly by counting vanishing low-order coefficients
/// (|c| <= zero_tol * max|c|).
std::vector<Root> find_roots(const Poly& p, double zero_tol = 1e-13);

struct Monomial {
  int zexp = 0;
  int wexp = 0;
  cplx coef;
};

/// Polynomial in two complex variables z, w.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(std::vector<Monomial> terms);

  static BivariatePoly constant(cplx c) { return BivariatePoly({{0, 0, c}}); }

  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  cplx operator()(cplx z, cplx w) const;
  cplx dz(cplx z, cplx w) const;
  cplx dw(cplx z, cplx w) const;

 private:
  std::vector<Monomial> terms_;
};

}  // namespace morsenov::argmap
