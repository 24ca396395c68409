#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "morsenov/braid.hpp"
#include "morsenov/matrix.hpp"
#include "morsenov/surface.hpp"

namespace morsenov {

enum class Tri { kNo, kUnknown, kYes };

std::string to_string(Tri value);

class SurfaceExpr;

struct LeafBraid {
  Braidword word;
};

/// Annulus A(K, n) with Seifert matrix [n]. Without a companion matrix the
/// core K is the unknot O.
struct LeafAnnulus {
  int n = 0;
  std::optional<IntMatrix> companion;
};

struct LeafDisk {};

struct Plumb;
struct Twist;

/// Immutable expression tree of Seifert surfaces; children are shared.
class SurfaceExpr {
 public:
  using Node = std::variant<LeafBraid, LeafAnnulus, LeafDisk, Plumb, Twist>;

  static SurfaceExpr braid(Braidword word);
  static SurfaceExpr annulus(int n, std::optional<IntMatrix> companion = std::nullopt);
  static SurfaceExpr disk();
  /// Murasugi sum along a `gon`-gon (even, >= 2); `interaction` is the
  /// upper-right block of the resulting Seifert matrix.
  static SurfaceExpr plumb(SurfaceExpr left, SurfaceExpr right, int gon, IntMatrix interaction);
  static SurfaceExpr twist(SurfaceExpr child, int generator_index, int turns);

  const Node& node() const;

 private:
  explicit SurfaceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Plumb {
  SurfaceExpr left;
  SurfaceExpr right;
  int gon = 4;
  IntMatrix interaction;
};

struct Twist {
  SurfaceExpr child;
  int generator_index = 0;
  int turns = 0;
};

inline const SurfaceExpr::Node& SurfaceExpr::node() const { return *node_; }

/// Seifert matrix plus the bookkeeping carried through Murasugi sums.
struct SeifertMatrixBundle {
  IntMatrix matrix;
  int chi = 1;
  int h1 = 0;
  std::optional<int> boundary_components;
  Tri free = Tri::kUnknown;
  Tri fibered = Tri::kUnknown;
  int mn_upper = 0;
  /// False when mn_upper rests on an assumption that could not be checked.
  bool mn_upper_certified = true;
  std::optional<int> mn_exact;
  /// Source of mn_exact; never empty when mn_exact is set.
  std::string mn_exact_source;
  /// Citation or assumption tags for every claim in the bundle.
  std::vector<std::string> provenance;
};

/// Bottom-up evaluation. Throws Error(kDimensionMismatch) on a badly shaped
/// interaction block or twist index, Error(kSplitClosure) for non-strict
/// braid leaves.
SeifertMatrixBundle eval(const SurfaceExpr& expr);

/// [[V0, B], [0, V1]].
IntMatrix plumb_matrices(const IntMatrix& v0, const IntMatrix& v1, const IntMatrix& interaction);

/// V + turns * E_ss.
IntMatrix twist_matrix(const IntMatrix& v, int index, int turns);

Tri propagate_free(Tri left, Tri right);

struct MnBound {
  int mn_upper = 0;
  std::optional<int> mn_exact;
};

MnBound propagate_mn(const SeifertMatrixBundle& left, const SeifertMatrixBundle& right);

struct NamedSurface {
  SurfaceExpr expr;
  SeifertMatrixBundle bundle;
};

/// A(O, n) plumbed with the Hopf band A(O, hopf_sign).
NamedSurface twist_knot(int n, int hopf_sign);

/// D(K, n, hopf_sign) = boundary of A(K, n) plumbed with A(O, hopf_sign).
NamedSurface doubled_knot(const IntMatrix& companion, int n, int hopf_sign);

struct DeplumbStep {
  int column = 0;
  std::size_t position = 0;  // index into the column word at the time of removal
};

struct DeplumbResult {
  /// Per column (1..n-1), the remaining homogeneous cyclic sign word.
  std::vector<std::vector<int>> residual;
  int removed = 0;
  std::vector<DeplumbStep> steps;
};

/// Splits off one A(O, 0) per cancelled (+, -) pair in each column's cyclic
/// sign word, always cancelling the first such pair in word order.
DeplumbResult deplumb_braid_surface(const Braidword& word);

}  // namespace morsenov
