#include "generators.hpp"

#include "morsenov/matrix.hpp"

namespace gen {

using morsenov::Braidword;
using morsenov::IntMatrix;
using morsenov::SurfaceExpr;

morsenov::Braidword random_strict_word(std::mt19937_64& rng, int max_strands, int max_len) {
  std::uniform_int_distribution<int> strands_dist(2, max_strands);
  for (;;) {
    const int n = strands_dist(rng);
    std::uniform_int_distribution<int> len_dist(n - 1, max_len);
    std::uniform_int_distribution<int> index_dist(1, n - 1);
    std::bernoulli_distribution positive(0.5);
    const int k = len_dist(rng);
    std::vector<int> w;
    for (int i = 0; i < k; ++i) w.push_back(positive(rng) ? index_dist(rng) : -index_dist(rng));
    Braidword word = Braidword::from_signed(n, w);
    if (morsenov::is_strict(word)) return word;
  }
}

std::vector<morsenov::Braidword> all_strict_words(int strands, int max_len) {
  std::vector<int> alphabet;
  for (int i = 1; i < strands; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<Braidword> out;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      Braidword word = Braidword::from_signed(strands, w);
      if (morsenov::is_strict(word)) out.push_back(word);
      if (len == max_len) continue;
      for (int a : alphabet) {
        auto v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  return out;
}

namespace {

IntMatrix random_block(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-1, 1);
  IntMatrix b(rows, cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = entry(rng);
  return b;
}

SurfaceExpr random_leaf(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<int> twist(-3, 3);
  switch (kind(rng)) {
    case 0:
      return SurfaceExpr::disk();
    case 1:
    case 2:
      return SurfaceExpr::annulus(twist(rng));
    default:
      return SurfaceExpr::braid(random_strict_word(rng, 3, 6));
  }
}

}  // namespace

morsenov::SurfaceExpr random_expr(std::mt19937_64& rng, int depth) {
  if (depth <= 0) return random_leaf(rng);
  std::uniform_int_distribution<int> kind(0, 5);
  const int k = kind(rng);
  if (k == 0) return random_leaf(rng);
  if (k == 1) {
    SurfaceExpr child = random_expr(rng, depth - 1);
    const int h1 = morsenov::eval(child).h1;
    if (h1 == 0) return child;
    std::uniform_int_distribution<int> index(0, h1 - 1);
    std::uniform_int_distribution<int> turns(-2, 2);
    return SurfaceExpr::twist(child, index(rng), turns(rng));
  }
  SurfaceExpr left = random_expr(rng, depth - 1);
  SurfaceExpr right = random_expr(rng, depth - 1);
  const auto a = static_cast<std::size_t>(morsenov::eval(left).h1);
  const auto b = static_cast<std::size_t>(morsenov::eval(right).h1);
  std::bernoulli_distribution connected_sum(0.25);
  if (connected_sum(rng)) return SurfaceExpr::plumb(left, right, 2, IntMatrix(a, b, 0));
  std::uniform_int_distribution<int> half_gon(2, 4);
  return SurfaceExpr::plumb(left, right, 2 * half_gon(rng), random_block(rng, a, b));
}

}  // namespace gen
