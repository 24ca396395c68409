#include "morsenov/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "morsenov/error.hpp"

namespace morsenov {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kInternalInconsistency, "Laurent coefficient overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kInternalInconsistency, "Laurent coefficient overflow");
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(std::int64_t coefficient, int exponent) {
  LaurentPoly p(coefficient);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, std::int64_t>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(int low_exponent,
                                           std::vector<std::int64_t> coefficients) {
  LaurentPoly p;
  p.low_ = low_exponent;
  p.coeffs_ = std::move(coefficients);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, std::int64_t> LaurentPoly::terms() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out[low_ + static_cast<int>(i)] = coeffs_[i];
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = checked_mul(c, -1);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(max_exponent(), rhs.max_exponent());
  std::vector<std::int64_t> sum(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    auto& slot = sum[static_cast<std::size_t>(rhs.low_ - lo) + i];
    slot = checked_add(slot, rhs.coeffs_[i]);
  }
  low_ = lo;
  coeffs_ = std::move(sum);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = LaurentPoly{};
  std::vector<std::int64_t> prod(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  low_ += rhs.low_;
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  if (is_zero()) return {};
  LaurentPoly p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -max_exponent();
  return p;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly{};
  // Long division from the top on the exponent-0-based representatives; the
  // quotient is unique in Z[t, 1/t] because t is a unit.
  std::vector<std::int64_t> rem = coeffs_;
  const auto& d = divisor.coeffs_;
  if (rem.size() < d.size()) return std::nullopt;
  std::vector<std::int64_t> quot(rem.size() - d.size() + 1, 0);
  for (std::size_t q = quot.size(); q-- > 0;) {
    const std::int64_t top = rem[q + d.size() - 1];
    if (top == 0) continue;
    if (top % d.back() != 0) return std::nullopt;
    const std::int64_t factor = top / d.back();
    quot[q] = factor;
    for (std::size_t j = 0; j < d.size(); ++j) {
      rem[q + j] = checked_add(rem[q + j], -checked_mul(factor, d[j]));
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](auto c) { return c != 0; })) return std::nullopt;
  return from_coefficients(low_ - divisor.low_, std::move(quot));
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly p = shifted(-low_);
  if (p.coeffs_.front() < 0) p = -p;
  return p;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + static_cast<double>(coeffs_[i]);
  return acc * std::pow(t, low_);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : terms()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&]() -> LaurentPoly {
    throw Error(ErrorCode::kInvalidInput, "malformed Laurent polynomial '" + std::string(text) + "'");
  };
  if (s.empty()) return fail();

  auto read_int = [&](std::size_t& pos, std::int64_t& value) {
    const char* first = s.data() + pos;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) return false;
    pos = static_cast<std::size_t>(ptr - s.data());
    return true;
  };

  LaurentPoly result;
  std::size_t pos = 0;
  bool first_term = true;
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first_term) {
      return fail();
    }
    first_term = false;

    std::int64_t coef = 1;
    bool have_coef = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (!read_int(pos, coef)) return fail();
      have_coef = true;
    }
    int exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!have_coef) return fail();
      ++pos;
      if (pos >= s.size() || s[pos] != 't') return fail();
    }
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::int64_t e = 0;
        if (!read_int(pos, e)) return fail();
        exponent = static_cast<int>(e);
      }
    } else if (!have_coef) {
      return fail();
    }
    result += monomial(sign * coef, exponent);
  }
  return result;
}

LaurentPoly determinant(LaurentMatrix m) {
  if (!m.square()) throw Error(ErrorCode::kDimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly previous(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto numer = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = numer.divide_exact(previous);
        if (!q) throw Error(ErrorCode::kInternalInconsistency, "Bareiss step was not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = LaurentPoly{};
    }
    previous = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

}  // namespace morsenov
