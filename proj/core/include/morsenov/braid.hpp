#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morsenov {

/// One Artin generator sigma_index^sign.
struct Letter {
  int index = 1;
  int sign = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in the standard generators of the n-string braid group.
///
/// Letter indices are validated against the strand count on construction,
/// so every Braidword in circulation satisfies 1 <= index <= strands - 1.
class Braidword {
 public:
  Braidword(int strands, std::vector<Letter> letters);

  /// Builds a word from signed integers: +i is sigma_i, -i its inverse.
  static Braidword from_signed(int strands, std::span<const int> word);

  int strands() const noexcept { return strands_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  std::vector<int> to_signed() const;

  /// Same word with every letter sign flipped (the mirror image closure).
  Braidword mirrored() const;

  friend auto operator<=>(const Braidword&, const Braidword&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Parses "s1 -s2 s1" / "1,-2,1" style text.
Braidword parse_braidword(std::string_view text, int strands);

/// Renders as "s1 -s2 s1"; the empty word renders as "".
std::string to_string(const Braidword& word);

/// Occurrence counts v(i, sign) of each signed generator.
class ExponentTable {
 public:
  explicit ExponentTable(const Braidword& word);

  int strands() const noexcept { return strands_; }
  int count(int index, int sign) const;
  std::size_t total() const noexcept { return total_; }

 private:
  int strands_;
  std::vector<int> positive_;
  std::vector<int> negative_;
  std::size_t total_ = 0;
};

/// True iff every generator index 1..n-1 occurs in the word.
bool is_strict(const Braidword& word);

/// Sum over columns of min(#positive, #negative) letters.
/// Throws Error(kSplitClosure) for a non-strict word.
int inhomogeneity(const Braidword& word);

/// All words one rewriting move away: free reduction, cyclic rotation by one
/// position in either direction, distant commutation, and the positive or
/// negative braid relation. Sorted, without duplicates, never containing the
/// input itself.
std::vector<Braidword> rewrite_neighbors(const Braidword& word);

struct MinimizeResult {
  Braidword word;
  int inhomogeneity = 0;
  std::size_t visited = 0;
};

/// Breadth-first search over rewrite_neighbors visiting at most `budget`
/// distinct words; returns the best strict word seen, ordered by
/// (inhomogeneity, length, letters).
MinimizeResult minimize_inhomogeneity(const Braidword& word, std::size_t budget);

}  // namespace morsenov
