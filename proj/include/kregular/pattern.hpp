#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kregular/word.hpp"

namespace kregular {

// A (multi-)pattern with an adjacency mask.
//
// adjacency()[i] == true means pattern positions i and i+1 must land on
// adjacent positions of the host word. All-false is a classical pattern,
// all-true a consecutive ("fully vincular") one. Symbols must use each of
// 1..m at least once for some m >= 1.
class Pattern {
 public:
  Pattern(Word symbols, std::vector<bool> adjacency);

  static Pattern classical(Word symbols);
  static Pattern consecutive(Word symbols);

  // "121" is classical, "v:121" is consecutive.
  static Pattern parse(std::string_view text);

  const Word& symbols() const noexcept { return symbols_; }
  const std::vector<bool>& adjacency() const noexcept { return adjacency_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  // Number of distinct values m.
  Symbol distinct() const noexcept { return symbols_.max_symbol(); }

  bool is_classical() const noexcept;
  bool is_consecutive() const noexcept;

  // Inverse of parse() for the two surfaced regimes; mixed masks print as
  // "m:<symbols>:<mask>" with mask digits 0/1.
  std::string str() const;

  // Relative order of pattern positions i and j: -1, 0 or +1.
  std::int8_t relation(std::size_t i, std::size_t j) const noexcept {
    return relations_[i * size() + j];
  }

  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b);
  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.symbols_ == b.symbols_ && a.adjacency_ == b.adjacency_;
  }

 private:
  Word symbols_;
  std::vector<bool> adjacency_;
  std::vector<std::int8_t> relations_;
};

// Sorted, duplicate-free collection of patterns.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Pattern> patterns);
  PatternSet(std::initializer_list<Pattern> patterns)
      : PatternSet(std::vector<Pattern>(patterns)) {}

  // Comma-separated list, e.g. "v:121,123,132,213". A leading "v:" applies to
  // that entry only.
  static PatternSet parse(std::string_view text);

  std::string str() const;

  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  auto begin() const noexcept { return patterns_.begin(); }
  auto end() const noexcept { return patterns_.end(); }
  const Pattern& operator[](std::size_t i) const { return patterns_[i]; }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<Pattern> patterns_;
};

enum class Symmetry { identity, reverse, complement, reverse_complement };

inline constexpr Symmetry kSquareSymmetries[] = {
    Symmetry::identity, Symmetry::reverse, Symmetry::complement,
    Symmetry::reverse_complement};

std::string_view to_string(Symmetry s);

// Order isomorphism that also preserves equalities in both directions.
// Throws DomainError on length mismatch.
bool matches(std::span<const Symbol> subword, std::span<const Symbol> pattern);
bool matches(const Word& subword, const Word& pattern);

bool contains(std::span<const Symbol> w, const Pattern& p);
bool contains(const Word& w, const Pattern& p);

// True iff w has an occurrence of p whose last pattern position is the last
// symbol of w. Used for incremental pruning: if every proper prefix avoids p,
// then w avoids p exactly when this returns false.
bool contains_ending_at_last(std::span<const Symbol> w, const Pattern& p);

bool avoids_all(std::span<const Symbol> w, const PatternSet& ps);
bool avoids_all(const Word& w, const PatternSet& ps);

Pattern transform(const Pattern& p, Symmetry s);
PatternSet transform(const PatternSet& ps, Symmetry s);

// Applies the same symmetry to a word over [n].
Word transform(const Word& w, unsigned n, Symmetry s);

// The six classical patterns of length three, in lexicographic order.
std::vector<Pattern> classical_length_three();
// Length-three multi-patterns with exactly two distinct values
// (112, 121, 122, 211, 212, 221).
std::vector<Pattern> two_value_length_three();

}  // namespace kregular
