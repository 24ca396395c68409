#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "morsenov/error.hpp"
#include "morsenov/io.hpp"

using namespace morsenov;
using nlohmann::json;

TEST(Io, Braidword) {
  const auto j = json::parse(R"({"strands": 3, "word": [1, -2, 1, -2]})");
  const auto w = io::braidword_from_json(j);
  EXPECT_EQ(w, parse_braidword("s1 -s2 s1 -s2", 3));
  EXPECT_EQ(io::braidword_to_json(w), j);
  EXPECT_THROW(io::braidword_from_json(json::parse(R"({"strands": 3, "word": [4]})")), Error);
  EXPECT_THROW(io::braidword_from_json(json::parse(R"({"word": [1]})")), Error);
  EXPECT_THROW(io::braidword_from_json(json::parse(R"({"strands": 2, "word": ["s1"]})")), Error);
}

TEST(Io, Laurent) {
  const auto j = json::parse(R"({"poly": {"-1": 1, "0": -3, "2": 2}})");
  const auto p = io::laurent_from_json(j);
  EXPECT_EQ(p.to_string(), "t^-1 - 3 + 2*t^2");
  EXPECT_EQ(io::laurent_to_json(p), j);
  EXPECT_THROW(io::laurent_from_json(json::parse(R"({"poly": {"x": 1}})")), Error);
  EXPECT_THROW(io::laurent_from_json(json::parse(R"({"poly": {"1": 0.5}})")), Error);
}

TEST(Io, SurfaceExprRoundTrip) {
  const auto j = json::parse(
      R"({"plumb": {"gon": 4, "B": [[1, 0]], "left": {"annulus": {"n": 0}},
          "right": {"braid": {"strands": 2, "word": [1, 1, 1]}}}})");
  const auto e = io::surface_expr_from_json(j);
  EXPECT_EQ(io::surface_expr_to_json(e), j);
  const auto b = eval(e);
  EXPECT_EQ(b.h1, 3);

  const auto t = json::parse(R"({"twist": {"child": {"annulus": {"n": 0}}, "index": 0, "turns": 3}})");
  EXPECT_EQ(eval(io::surface_expr_from_json(t)).matrix, (IntMatrix{{3}}));

  std::mt19937_64 rng(79);
  for (int i = 0; i < 50; ++i) {
    const auto r = gen::random_expr(rng, 3);
    const auto again = io::surface_expr_from_json(io::surface_expr_to_json(r));
    EXPECT_EQ(eval(again).matrix, eval(r).matrix);
  }
  EXPECT_THROW(io::surface_expr_from_json(json::parse(R"({"cube": {}})")), Error);
  EXPECT_THROW(io::surface_expr_from_json(json::parse(R"({"disk": {}, "annulus": {"n": 1}})")), Error);
}

TEST(Io, Bivariate) {
  const auto j = json::parse(R"({"P": [{"zexp": 2, "wexp": 0, "re": 2.0, "im": 0.0},
                                      {"zexp": 0, "wexp": 3, "re": 3.0, "im": 0.0}], "Q": []})");
  EXPECT_THROW(io::bivariate_from_json(j), Error);
  auto ok = j;
  ok.erase("Q");
  const auto f = io::bivariate_from_json(ok);
  const auto g = argmap::BivariateMero::brieskorn(2, 3);
  EXPECT_EQ(f(0.3, 0.2), g(0.3, 0.2));
  EXPECT_THROW(io::bivariate_from_json(json::parse(R"({"P": [{"zexp": -1, "wexp": 0, "re": 1}]})")), Error);
}

TEST(Io, Rational) {
  const auto r = io::rational_from_json(json::parse(R"({"num": [1, 0, 0, 1], "den": [1, 0, 0, -1]})"));
  EXPECT_EQ(argmap::crit_points_arg_rational(r).size(), 2u);
  const auto c = io::rational_from_json(json::parse(R"({"num": [[0, 1], 1], "den": [1]})"));
  EXPECT_EQ(c.numerator()(0.0), argmap::cplx(0, 1));
  EXPECT_THROW(io::rational_from_json(json::parse(R"({"num": ["a"], "den": [1]})")), Error);
}
