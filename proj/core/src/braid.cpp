#include "morsenov/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <set>
#include <tuple>

#include "morsenov/error.hpp"

namespace morsenov {

namespace {

void check_letter(int strands, const Letter& letter) {
  if (letter.sign != 1 && letter.sign != -1) {
    throw Error(ErrorCode::kInvalidInput, "letter sign must be +1 or -1");
  }
  if (letter.index < 1 || letter.index > strands - 1) {
    throw Error(ErrorCode::kInvalidInput,
                "generator index " + std::to_string(letter.index) + " out of range [1, " +
                    std::to_string(strands - 1) + "]");
  }
}

Letter parse_token(std::string_view token) {
  int sign = 1;
  std::size_t pos = 0;
  if (pos < token.size() && (token[pos] == '-' || token[pos] == '+')) {
    sign = token[pos] == '-' ? -1 : 1;
    ++pos;
  }
  if (pos < token.size() && (token[pos] == 's' || token[pos] == 'S')) ++pos;
  int index = 0;
  const char* first = token.data() + pos;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last || first == last || index <= 0) {
    throw Error(ErrorCode::kInvalidInput, "malformed braid token '" + std::string(token) + "'");
  }
  return {index, sign};
}

}  // namespace

Braidword::Braidword(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw Error(ErrorCode::kInvalidInput, "strand count must be >= 1");
  for (const auto& l : letters_) check_letter(strands_, l);
}

Braidword Braidword::from_signed(int strands, std::span<const int> word) {
  std::vector<Letter> letters;
  letters.reserve(word.size());
  for (int x : word) {
    if (x == 0) throw Error(ErrorCode::kInvalidInput, "zero is not a braid generator");
    letters.push_back({x < 0 ? -x : x, x < 0 ? -1 : 1});
  }
  return Braidword(strands, std::move(letters));
}

std::vector<int> Braidword::to_signed() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.sign * l.index);
  return out;
}

Braidword Braidword::mirrored() const {
  auto letters = letters_;
  for (auto& l : letters) l.sign = -l.sign;
  return Braidword(strands_, std::move(letters));
}

Braidword parse_braidword(std::string_view text, int strands) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) letters.push_back(parse_token(text.substr(i, j - i)));
    i = j;
  }
  return Braidword(strands, std::move(letters));
}

std::string to_string(const Braidword& word) {
  std::string out;
  for (const auto& l : word.letters()) {
    if (!out.empty()) out += ' ';
    if (l.sign < 0) out += '-';
    out += 's';
    out += std::to_string(l.index);
  }
  return out;
}

ExponentTable::ExponentTable(const Braidword& word)
    : strands_(word.strands()),
      positive_(static_cast<std::size_t>(word.strands()), 0),
      negative_(static_cast<std::size_t>(word.strands()), 0),
      total_(word.length()) {
  for (const auto& l : word.letters()) {
    auto& bucket = l.sign > 0 ? positive_ : negative_;
    ++bucket[static_cast<std::size_t>(l.index)];
  }
}

int ExponentTable::count(int index, int sign) const {
  if (index < 1 || index > strands_ - 1) return 0;
  const auto& bucket = sign > 0 ? positive_ : negative_;
  return bucket[static_cast<std::size_t>(index)];
}

bool is_strict(const Braidword& word) {
  const ExponentTable table(word);
  for (int i = 1; i < word.strands(); ++i) {
    if (table.count(i, 1) + table.count(i, -1) == 0) return false;
  }
  return true;
}

int inhomogeneity(const Braidword& word) {
  if (!is_strict(word)) {
    throw Error(ErrorCode::kSplitClosure,
                "braidword is not strict; its closure is a split link");
  }
  const ExponentTable table(word);
  int total = 0;
  for (int i = 1; i < word.strands(); ++i) total += std::min(table.count(i, 1), table.count(i, -1));
  return total;
}

std::vector<Braidword> rewrite_neighbors(const Braidword& word) {
  const auto& w = word.letters();
  const std::size_t k = w.size();
  std::set<std::vector<Letter>> out;

  for (std::size_t p = 0; p + 1 < k; ++p) {
    // free reduction
    if (w[p].index == w[p + 1].index && w[p].sign == -w[p + 1].sign) {
      std::vector<Letter> next;
      next.reserve(k - 2);
      next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
      out.insert(std::move(next));
    }
    // distant commutation
    if (std::abs(w[p].index - w[p + 1].index) >= 2) {
      auto next = w;
      std::swap(next[p], next[p + 1]);
      out.insert(std::move(next));
    }
  }

  // braid relation, same sign throughout
  for (std::size_t p = 0; p + 2 < k; ++p) {
    const auto& a = w[p];
    const auto& b = w[p + 1];
    const auto& c = w[p + 2];
    if (a.index == c.index && std::abs(a.index - b.index) == 1 && a.sign == b.sign &&
        b.sign == c.sign) {
      auto next = w;
      next[p] = b;
      next[p + 1] = a;
      next[p + 2] = b;
      out.insert(std::move(next));
    }
  }

  if (k >= 2) {
    auto left = w;
    std::rotate(left.begin(), left.begin() + 1, left.end());
    out.insert(std::move(left));
    auto right = w;
    std::rotate(right.rbegin(), right.rbegin() + 1, right.rend());
    out.insert(std::move(right));
  }

  out.erase(w);
  std::vector<Braidword> result;
  result.reserve(out.size());
  for (auto& letters : out) result.emplace_back(word.strands(), letters);
  return result;
}

MinimizeResult minimize_inhomogeneity(const Braidword& word, std::size_t budget) {
  if (budget == 0) throw Error(ErrorCode::kInvalidInput, "search budget must be positive");
  if (!is_strict(word)) {
    throw Error(ErrorCode::kSplitClosure, "minimize_inhomogeneity needs a strict braidword");
  }

  auto key = [](const Braidword& b, int value) {
    return std::make_tuple(value, b.length(), std::cref(b.letters()));
  };

  MinimizeResult best{word, inhomogeneity(word), 1};
  std::set<std::vector<Letter>> visited{word.letters()};
  std::deque<Braidword> frontier{word};

  while (!frontier.empty() && visited.size() < budget) {
    Braidword current = std::move(frontier.front());
    frontier.pop_front();
    for (auto& next : rewrite_neighbors(current)) {
      if (visited.size() >= budget) break;
      if (!visited.insert(next.letters()).second) continue;
      if (is_strict(next)) {
        const int value = inhomogeneity(next);
        if (key(next, value) < key(best.word, best.inhomogeneity)) {
          best.word = next;
          best.inhomogeneity = value;
        }
      }
      frontier.push_back(std::move(next));
    }
  }
  best.visited = visited.size();
  return best;
}

}  // namespace morsenov
