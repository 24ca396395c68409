#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morsenov/matrix.hpp"

namespace morsenov {

/// Integer Laurent polynomial in one variable t.
///
/// Stored densely from the lowest nonzero exponent; the zero polynomial has
/// no coefficients. All arithmetic is overflow-checked and throws
/// Error(kInternalInconsistency) rather than wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(std::int64_t coefficient, int exponent);
  static LaurentPoly from_terms(const std::map<int, std::int64_t>& terms);
  /// 1 - t, t^n - 1 and friends read better as from_coefficients(0, {1, -1}).
  static LaurentPoly from_coefficients(int low_exponent, std::vector<std::int64_t> coefficients);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int exponent) const;
  std::map<int, std::int64_t> terms() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplies by t^k.
  LaurentPoly shifted(int k) const;

  /// p(1/t).
  LaurentPoly inverted_variable() const;

  /// Quotient q with q * divisor == *this, or nullopt if none exists in Z[t, 1/t].
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// Representative of the class up to units +-t^k: lowest exponent 0 and
  /// positive constant term. Zero normalizes to zero.
  LaurentPoly normalized() const;
  bool equal_up_to_units(const LaurentPoly& other) const {
    return normalized() == other.normalized();
  }

  std::complex<double> evaluate(std::complex<double> t) const;

  /// "t^-1 - 3 + 2*t^2" with ascending exponents; zero renders as "0".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

/// Determinant by fraction-free (Bareiss) elimination over Z[t, 1/t].
LaurentPoly determinant(LaurentMatrix m);

}  // namespace morsenov
