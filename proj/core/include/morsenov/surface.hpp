#pragma once

#include <vector>

#include "morsenov/braid.hpp"
#include "morsenov/laurent.hpp"
#include "morsenov/matrix.hpp"

namespace morsenov {

/// Disk-band surface from Seifert's algorithm on a closed braid diagram:
/// one 0-handle per strand, one half-twisted band per letter.
struct HandleDecomposition {
  int disks = 0;
  std::vector<Letter> bands;  // column = Letter::index, half-twist sign = Letter::sign

  int euler_characteristic() const { return disks - static_cast<int>(bands.size()); }
};

struct SeifertMatrix {
  IntMatrix entries;
  int chi = 1;
  int h1 = 0;
  int boundary_components = 1;
  bool connected = true;
};

HandleDecomposition seifert_from_braid(const Braidword& word);

/// Number of boundary circles, i.e. cycles of the braid permutation.
int boundary_components(const HandleDecomposition& hd);

/// Seifert matrix in the basis of loops through consecutive same-column bands.
///
/// Basis element (i, j) runs up the j-th band of column i and back down the
/// (j+1)-th, ordered by column then position. Positive half-twists give -1 on
/// the diagonal, so the positive Hopf band sigma_1^2 has matrix [-1].
/// Throws Error(kSplitClosure) for non-strict words.
SeifertMatrix seifert_matrix_from_braid(const Braidword& word);

/// det(V^T - t V), normalized. The empty matrix gives 1.
LaurentPoly alexander_from_seifert(const IntMatrix& v);
inline LaurentPoly alexander_from_seifert(const SeifertMatrix& v) {
  return alexander_from_seifert(v.entries);
}

/// Reduced Burau matrix of the braid, in the convention
/// sigma_i -> I + (block [[1, t, 0], [0, -t, 0], [0, 1, 1]] at rows i-1..i+1).
LaurentMatrix reduced_burau(const Braidword& word);

/// det(I - Burau_red) * (1 - t) / (1 - t^n), normalized. Independent of the
/// Seifert-matrix route; throws Error(kInternalInconsistency) if the division
/// is not exact.
LaurentPoly alexander_via_burau(const Braidword& word);

/// Boundary count of a connected surface from its Seifert matrix:
/// h1 - rank(V - V^T) + 1.
int boundary_components_from_matrix(const IntMatrix& v);

}  // namespace morsenov
