#include "morsenov/surface.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "morsenov/error.hpp"

namespace morsenov {

namespace {

struct BasisLoop {
  int column;
  std::size_t first;   // word position of the upward band
  std::size_t second;  // word position of the downward band
};

std::vector<BasisLoop> basis_loops(const Braidword& word) {
  std::vector<BasisLoop> loops;
  for (int column = 1; column < word.strands(); ++column) {
    std::size_t previous = word.length();
    for (std::size_t p = 0; p < word.length(); ++p) {
      if (word[p].index != column) continue;
      if (previous != word.length()) loops.push_back({column, previous, p});
      previous = p;
    }
  }
  return loops;
}

}  // namespace

HandleDecomposition seifert_from_braid(const Braidword& word) {
  return {word.strands(), word.letters()};
}

int boundary_components(const HandleDecomposition& hd) {
  std::vector<int> perm(static_cast<std::size_t>(hd.disks));
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& band : hd.bands) {
    std::swap(perm[static_cast<std::size_t>(band.index - 1)], perm[static_cast<std::size_t>(band.index)]);
  }
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) seen[x] = true;
  }
  return cycles;
}

SeifertMatrix seifert_matrix_from_braid(const Braidword& word) {
  if (!is_strict(word)) {
    throw Error(ErrorCode::kSplitClosure, "Seifert matrix needs a strict braidword");
  }
  const auto loops = basis_loops(word);
  const std::size_t h = loops.size();
  IntMatrix v(h, h, 0);
  auto sign_at = [&](std::size_t p) { return word[p].sign; };

  for (std::size_t x = 0; x < h; ++x) {
    const auto& a = loops[x];
    v(x, x) = -(sign_at(a.first) + sign_at(a.second)) / 2;
    for (std::size_t y = 0; y < h; ++y) {
      if (x == y) continue;
      const auto& b = loops[y];
      if (a.column == b.column && a.second == b.first) {
        // consecutive loops sharing one band
        if (sign_at(a.second) > 0) {
          v(x, y) = 1;
        } else {
          v(y, x) = -1;
        }
      } else if (b.column == a.column + 1) {
        // loops in neighbouring columns meet in the shared disk iff their
        // band positions interleave
        if (a.first < b.first && b.first < a.second && a.second < b.second) {
          v(x, y) = -1;
        } else if (b.first < a.first && a.first < b.second && b.second < a.second) {
          v(x, y) = 1;
        }
      }
    }
  }

  const auto hd = seifert_from_braid(word);
  SeifertMatrix out;
  out.entries = std::move(v);
  out.chi = hd.euler_characteristic();
  out.h1 = static_cast<int>(h);
  out.boundary_components = boundary_components(hd);
  out.connected = true;
  return out;
}

LaurentPoly alexander_from_seifert(const IntMatrix& v) {
  if (!v.square()) throw Error(ErrorCode::kDimensionMismatch, "Seifert matrix must be square");
  const std::size_t n = v.rows();
  LaurentMatrix m(n, n);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = LaurentPoly(v(j, i)) - t * LaurentPoly(v(i, j));
  return determinant(std::move(m)).normalized();
}

LaurentMatrix reduced_burau(const Braidword& word) {
  const std::size_t m = static_cast<std::size_t>(word.strands() - 1);
  LaurentMatrix acc = LaurentMatrix::identity(m);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  for (const auto& letter : word.letters()) {
    LaurentMatrix g = LaurentMatrix::identity(m);
    // 3x3 block centred on row/column index-1 (0-based), clipped at the edges
    struct Entry {
      int dr, dc;
      LaurentPoly value;
    };
    const std::vector<Entry> block =
        letter.sign > 0
            ? std::vector<Entry>{{-1, -1, 1}, {-1, 0, t}, {0, 0, -t}, {1, 0, 1}, {1, 1, 1}}
            : std::vector<Entry>{{-1, -1, 1}, {-1, 0, 1}, {0, 0, -tinv}, {1, 0, tinv}, {1, 1, 1}};
    const int centre = letter.index - 1;
    for (const auto& e : block) {
      const int r = centre + e.dr;
      const int c = centre + e.dc;
      if (r >= 0 && c >= 0 && r < static_cast<int>(m) && c < static_cast<int>(m)) {
        g(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e.value;
      }
    }
    acc = acc * g;
  }
  return acc;
}

LaurentPoly alexander_via_burau(const Braidword& word) {
  if (!is_strict(word)) {
    throw Error(ErrorCode::kSplitClosure, "Burau route needs a strict braidword");
  }
  const int n = word.strands();
  if (n == 1) return LaurentPoly(1);
  LaurentMatrix m = reduced_burau(word);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = LaurentPoly(1) - m(i, i);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) m(i, j) = -m(i, j);
  const LaurentPoly numer = determinant(std::move(m)) * LaurentPoly::from_coefficients(0, {1, -1});
  std::vector<std::int64_t> denom(static_cast<std::size_t>(n) + 1, 0);
  denom.front() = 1;
  denom.back() = -1;
  auto q = numer.divide_exact(LaurentPoly::from_coefficients(0, std::move(denom)));
  if (!q) {
    throw Error(ErrorCode::kInternalInconsistency,
                "Burau determinant is not divisible by (1 - t^n)/(1 - t)");
  }
  return q->normalized();
}

namespace {
__extension__ typedef __int128 Wide;
}  // namespace

std::size_t rational_rank(const IntMatrix& input) {
  std::vector<std::vector<Wide>> m(input.rows(), std::vector<Wide>(input.cols()));
  for (std::size_t i = 0; i < input.rows(); ++i)
    for (std::size_t j = 0; j < input.cols(); ++j) m[i][j] = input(i, j);
  auto gcd128 = [](Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) a = std::exchange(b, a % b);
    return a;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < input.cols() && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const Wide a = m[rank][col];
      const Wide b = m[i][col];
      Wide g = 0;
      for (std::size_t j = 0; j < input.cols(); ++j) {
        m[i][j] = m[i][j] * a - m[rank][j] * b;
        g = gcd128(g, m[i][j]);
      }
      if (g > 1)
        for (auto& x : m[i]) x /= g;
    }
    ++rank;
  }
  return rank;
}

int boundary_components_from_matrix(const IntMatrix& v) {
  if (!v.square()) throw Error(ErrorCode::kDimensionMismatch, "Seifert matrix must be square");
  IntMatrix form(v.rows(), v.cols());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) form(i, j) = v(i, j) - v(j, i);
  return static_cast<int>(v.rows() - rational_rank(form)) + 1;
}

}  // namespace morsenov
