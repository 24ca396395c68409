#include "morsenov/murasugi.hpp"

#include <algorithm>
#include <cstdlib>

#include "morsenov/error.hpp"

namespace morsenov {

namespace tags {
constexpr const char* kDisk = "disk: boundary is the unknot, a fiber surface";
constexpr const char* kHopfBand = "A(O,+-1) is a Hopf band, a fiber surface";
constexpr const char* kUnlink = "MN(U)=2: A(O,0) bounds the non-fibered unlink U, realised by a 2-point Morse map";
constexpr const char* kAnnulus = "MN(Bd A(O,n))=2 for n != +-1";
constexpr const char* kAnnulusFree = "A(O,n) is unknotted; its complement is a solid torus (free)";
constexpr const char* kCompanionKnotted = "A(K,n) with nontrivial Alexander polynomial of K is not free";
constexpr const char* kCompanionAssumed =
    "assumed: A(K,n) is the small surface of a 2-point Morse map (K on a genus-1 fiber surface)";
constexpr const char* kHomogeneous = "Stallings: the closure of a homogeneous braid is fibered";
constexpr const char* kInhomogeneity = "MN <= 2 I(b): deplumb one A(O,0) per cancelled sign pair";
constexpr const char* kBraidFree =
    "braid surface is a Murasugi sum of fiber surfaces and A(O,0) annuli, hence free";
constexpr const char* kSubadditive = "MN(L0 * L1) <= MN(L0) + MN(L1) over Murasugi sums";
constexpr const char* kFreeness = "a Murasugi sum is free iff both summands are free";
constexpr const char* kFiberedSum = "assumed (Gabai): a Murasugi sum of fiber surfaces is a fiber surface";
constexpr const char* kTwistFree = "twisting a band keeps the regular neighbourhood, so freeness is unchanged";
constexpr const char* kFreeBound = "MN <= 2 h_f for free Seifert surfaces";
constexpr const char* kFreeBoundUnchecked = "unverified: 2 h1 bound applied to a surface not known to be free";
constexpr const char* kTwistAnnulus = "A(K,n) = T^n(A(K,0))";
constexpr const char* kTwistKnot = "twist knots: MN = 2 unless fibered";
constexpr const char* kTwistKnotFibered = "genus-1 fibered twist knot (trefoil or figure-8)";
constexpr const char* kTwistKnotUnknot =
    "note: for n = 0 the boundary is unknotted (Delta = 1); value follows the twist-knot rule";
constexpr const char* kDoubled = "doubled knots D(K,n,+-1) have MN = 2";
}  // namespace tags

namespace {

void add_tag(SeifertMatrixBundle& b, const std::string& tag) {
  if (std::find(b.provenance.begin(), b.provenance.end(), tag) == b.provenance.end()) {
    b.provenance.push_back(tag);
  }
}

void merge_tags(SeifertMatrixBundle& into, const SeifertMatrixBundle& from) {
  for (const auto& t : from.provenance) add_tag(into, t);
}

void set_exact(SeifertMatrixBundle& b, int value, const std::string& source) {
  b.mn_exact = value;
  b.mn_exact_source = source;
  add_tag(b, source);
}

bool is_trivial_companion(const std::optional<IntMatrix>& companion) {
  return !companion || companion->rows() == 0;
}

SeifertMatrixBundle eval_annulus(const LeafAnnulus& leaf) {
  SeifertMatrixBundle b;
  b.matrix = IntMatrix{{leaf.n}};
  b.chi = 0;
  b.h1 = 1;
  b.boundary_components = 2;

  if (!is_trivial_companion(leaf.companion)) {
    if (!leaf.companion->square()) {
      throw Error(ErrorCode::kDimensionMismatch, "companion Seifert matrix must be square");
    }
    const bool knotted = alexander_from_seifert(*leaf.companion) != LaurentPoly(1);
    b.free = knotted ? Tri::kNo : Tri::kUnknown;
    if (knotted) add_tag(b, tags::kCompanionKnotted);
    b.fibered = Tri::kUnknown;
    b.mn_upper = 2;
    b.mn_upper_certified = false;
    add_tag(b, tags::kCompanionAssumed);
    return b;
  }

  b.free = Tri::kYes;
  add_tag(b, tags::kAnnulusFree);
  if (std::abs(leaf.n) == 1) {
    b.fibered = Tri::kYes;
    b.mn_upper = 0;
    set_exact(b, 0, tags::kHopfBand);
  } else {
    b.fibered = Tri::kNo;
    b.mn_upper = 2;
    set_exact(b, 2, leaf.n == 0 ? tags::kUnlink : tags::kAnnulus);
  }
  return b;
}

SeifertMatrixBundle eval_braid(const LeafBraid& leaf) {
  const auto sm = seifert_matrix_from_braid(leaf.word);
  SeifertMatrixBundle b;
  b.matrix = sm.entries;
  b.chi = sm.chi;
  b.h1 = sm.h1;
  b.boundary_components = sm.boundary_components;
  b.free = Tri::kYes;
  add_tag(b, tags::kBraidFree);
  const int inh = inhomogeneity(leaf.word);
  if (inh == 0) {
    b.fibered = Tri::kYes;
    b.mn_upper = 0;
    set_exact(b, 0, tags::kHomogeneous);
  } else {
    b.fibered = Tri::kUnknown;
    b.mn_upper = 2 * inh;
    add_tag(b, tags::kInhomogeneity);
  }
  return b;
}

SeifertMatrixBundle eval_disk() {
  SeifertMatrixBundle b;
  b.matrix = IntMatrix(0, 0);
  b.chi = 1;
  b.h1 = 0;
  b.boundary_components = 1;
  b.free = Tri::kYes;
  b.fibered = Tri::kYes;
  b.mn_upper = 0;
  set_exact(b, 0, tags::kDisk);
  return b;
}

SeifertMatrixBundle eval_plumb(const Plumb& node) {
  if (node.gon < 2 || node.gon % 2 != 0) {
    throw Error(ErrorCode::kInvalidInput, "Murasugi sum needs an even gon >= 2");
  }
  const auto left = eval(node.left);
  const auto right = eval(node.right);
  if (node.gon == 2) {
    for (std::size_t i = 0; i < node.interaction.rows(); ++i)
      for (std::size_t j = 0; j < node.interaction.cols(); ++j)
        if (node.interaction(i, j) != 0) {
          throw Error(ErrorCode::kInvalidInput, "a 2-gonal sum (connected sum) has zero interaction");
        }
  }

  SeifertMatrixBundle b;
  b.matrix = plumb_matrices(left.matrix, right.matrix, node.interaction);
  b.chi = left.chi + right.chi - 1;
  b.h1 = left.h1 + right.h1;
  b.boundary_components = boundary_components_from_matrix(b.matrix);
  merge_tags(b, left);
  merge_tags(b, right);

  b.free = propagate_free(left.free, right.free);
  if (b.free != Tri::kUnknown) add_tag(b, tags::kFreeness);
  b.fibered = left.fibered == Tri::kYes && right.fibered == Tri::kYes ? Tri::kYes : Tri::kUnknown;

  const auto mn = propagate_mn(left, right);
  b.mn_upper = mn.mn_upper;
  b.mn_upper_certified = left.mn_upper_certified && right.mn_upper_certified;
  add_tag(b, tags::kSubadditive);
  if (mn.mn_exact) set_exact(b, *mn.mn_exact, tags::kFiberedSum);
  return b;
}

SeifertMatrixBundle eval_twist(const Twist& node) {
  if (const auto* annulus = std::get_if<LeafAnnulus>(&node.child.node())) {
    if (node.generator_index != 0) {
      throw Error(ErrorCode::kDimensionMismatch, "twist index out of range for an annulus");
    }
    auto b = eval_annulus({annulus->n + node.turns, annulus->companion});
    add_tag(b, tags::kTwistAnnulus);
    return b;
  }

  const auto child = eval(node.child);
  if (node.turns == 0) {
    // range check still applies
    (void)twist_matrix(child.matrix, node.generator_index, 0);
    return child;
  }
  SeifertMatrixBundle b;
  b.matrix = twist_matrix(child.matrix, node.generator_index, node.turns);
  b.chi = child.chi;
  b.h1 = child.h1;
  b.boundary_components = boundary_components_from_matrix(b.matrix);
  merge_tags(b, child);
  b.free = child.free;
  add_tag(b, tags::kTwistFree);
  b.fibered = Tri::kUnknown;
  b.mn_upper = 2 * b.h1;
  if (b.free == Tri::kYes) {
    b.mn_upper_certified = child.mn_upper_certified;
    add_tag(b, tags::kFreeBound);
  } else {
    b.mn_upper_certified = false;
    add_tag(b, tags::kFreeBoundUnchecked);
  }
  return b;
}

}  // namespace

std::string to_string(Tri value) {
  switch (value) {
    case Tri::kNo:
      return "no";
    case Tri::kUnknown:
      return "unknown";
    case Tri::kYes:
      return "yes";
  }
  return "unknown";
}

SurfaceExpr SurfaceExpr::braid(Braidword word) {
  return SurfaceExpr(std::make_shared<const Node>(LeafBraid{std::move(word)}));
}

SurfaceExpr SurfaceExpr::annulus(int n, std::optional<IntMatrix> companion) {
  return SurfaceExpr(std::make_shared<const Node>(LeafAnnulus{n, std::move(companion)}));
}

SurfaceExpr SurfaceExpr::disk() { return SurfaceExpr(std::make_shared<const Node>(LeafDisk{})); }

SurfaceExpr SurfaceExpr::plumb(SurfaceExpr left, SurfaceExpr right, int gon, IntMatrix interaction) {
  return SurfaceExpr(std::make_shared<const Node>(
      Plumb{std::move(left), std::move(right), gon, std::move(interaction)}));
}

SurfaceExpr SurfaceExpr::twist(SurfaceExpr child, int generator_index, int turns) {
  return SurfaceExpr(std::make_shared<const Node>(Twist{std::move(child), generator_index, turns}));
}

SeifertMatrixBundle eval(const SurfaceExpr& expr) {
  return std::visit(
      [](const auto& node) -> SeifertMatrixBundle {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LeafBraid>) {
          return eval_braid(node);
        } else if constexpr (std::is_same_v<T, LeafAnnulus>) {
          return eval_annulus(node);
        } else if constexpr (std::is_same_v<T, LeafDisk>) {
          return eval_disk();
        } else if constexpr (std::is_same_v<T, Plumb>) {
          return eval_plumb(node);
        } else {
          return eval_twist(node);
        }
      },
      expr.node());
}

IntMatrix plumb_matrices(const IntMatrix& v0, const IntMatrix& v1, const IntMatrix& interaction) {
  if (!v0.square() || !v1.square()) {
    throw Error(ErrorCode::kDimensionMismatch, "Seifert matrices must be square");
  }
  const std::size_t a = v0.rows();
  const std::size_t b = v1.rows();
  // an empty block may come in as 0x0 when either side is a disk
  const bool empty_ok = (a == 0 || b == 0) && interaction.rows() * interaction.cols() == 0;
  if (!empty_ok && (interaction.rows() != a || interaction.cols() != b)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "interaction block must be " + std::to_string(a) + "x" + std::to_string(b) + ", got " +
                    std::to_string(interaction.rows()) + "x" + std::to_string(interaction.cols()));
  }
  IntMatrix out(a + b, a + b, 0);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) out(i, j) = v0(i, j);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) out(a + i, a + j) = v1(i, j);
  if (!empty_ok) {
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) out(i, a + j) = interaction(i, j);
  }
  return out;
}

IntMatrix twist_matrix(const IntMatrix& v, int index, int turns) {
  if (index < 0 || static_cast<std::size_t>(index) >= v.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "twist generator index out of range");
  }
  IntMatrix out = v;
  const auto s = static_cast<std::size_t>(index);
  out(s, s) += turns;
  return out;
}

Tri propagate_free(Tri left, Tri right) {
  if (left == Tri::kNo || right == Tri::kNo) return Tri::kNo;
  if (left == Tri::kYes && right == Tri::kYes) return Tri::kYes;
  return Tri::kUnknown;
}

MnBound propagate_mn(const SeifertMatrixBundle& left, const SeifertMatrixBundle& right) {
  MnBound out;
  out.mn_upper = left.mn_upper + right.mn_upper;
  if (left.fibered == Tri::kYes && right.fibered == Tri::kYes) out.mn_exact = 0;
  return out;
}

NamedSurface twist_knot(int n, int hopf_sign) {
  if (hopf_sign != 1 && hopf_sign != -1) {
    throw Error(ErrorCode::kInvalidInput, "Hopf band sign must be +1 or -1");
  }
  auto expr = SurfaceExpr::plumb(SurfaceExpr::annulus(n), SurfaceExpr::annulus(hopf_sign), 4,
                                 IntMatrix{{1}});
  auto bundle = eval(expr);
  if (std::abs(n) == 1) {
    bundle.fibered = Tri::kYes;
    set_exact(bundle, 0, tags::kTwistKnotFibered);
  } else {
    if (n != 0) bundle.fibered = Tri::kNo;
    set_exact(bundle, 2, tags::kTwistKnot);
    if (n == 0) add_tag(bundle, tags::kTwistKnotUnknot);
  }
  return {std::move(expr), std::move(bundle)};
}

NamedSurface doubled_knot(const IntMatrix& companion, int n, int hopf_sign) {
  if (companion.rows() == 0) return twist_knot(n, hopf_sign);
  if (hopf_sign != 1 && hopf_sign != -1) {
    throw Error(ErrorCode::kInvalidInput, "Hopf band sign must be +1 or -1");
  }
  auto expr = SurfaceExpr::plumb(SurfaceExpr::annulus(n, companion),
                                 SurfaceExpr::annulus(hopf_sign), 4, IntMatrix{{1}});
  auto bundle = eval(expr);
  set_exact(bundle, 2, tags::kDoubled);
  bundle.mn_upper_certified = true;
  return {std::move(expr), std::move(bundle)};
}

DeplumbResult deplumb_braid_surface(const Braidword& word) {
  if (!is_strict(word)) {
    throw Error(ErrorCode::kSplitClosure, "deplumbing needs a strict braidword");
  }
  DeplumbResult out;
  for (int column = 1; column < word.strands(); ++column) {
    std::vector<int> signs;
    for (const auto& l : word.letters())
      if (l.index == column) signs.push_back(l.sign);

    for (;;) {
      const std::size_t m = signs.size();
      std::size_t p = 0;
      while (p < m && !(m >= 2 && signs[p] > 0 && signs[(p + 1) % m] < 0)) ++p;
      if (p == m) break;
      out.steps.push_back({column, p});
      ++out.removed;
      const std::size_t q = (p + 1) % m;
      signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(std::max(p, q)));
      signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(std::min(p, q)));
    }
    out.residual.push_back(std::move(signs));
  }
  return out;
}

}  // namespace morsenov
