#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kregular {

using Symbol = std::uint32_t;

// Default bound on k*n for anything that walks the space of regular words.
inline constexpr std::size_t kDefaultMaxSymbols = 24;

// A finite sequence of positive symbols. The empty word is valid.
class Word {
 public:
  using const_iterator = std::vector<Symbol>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Symbol> symbols);
  Word(std::initializer_list<Symbol> symbols);

  // Accepts a digit string ("233211"), a comma-separated list
  // ("10,10,9,9"), or "", "e" and "ε" for the empty word.
  static Word parse(std::string_view text);

  // Digit string when every symbol is at most 9, otherwise comma-separated.
  std::string str() const;

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const_iterator begin() const noexcept { return symbols_.begin(); }
  const_iterator end() const noexcept { return symbols_.end(); }
  std::span<const Symbol> span() const noexcept { return symbols_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  // Largest symbol, 0 for the empty word.
  Symbol max_symbol() const noexcept;

  Word operator+(const Word& tail) const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// Alphabet size n and frequency k of a k-regular word over [n].
struct RegularityProfile {
  unsigned n = 0;
  unsigned k = 1;

  std::size_t length() const noexcept { return std::size_t{n} * k; }
  friend bool operator==(const RegularityProfile&,
                         const RegularityProfile&) = default;
};

// Throws DomainError when k == 0.
void validate(RegularityProfile profile);

// True iff w holds exactly k copies of each of 1..n and nothing else.
bool is_regular(const Word& w, RegularityProfile profile);

Word reverse(const Word& w);

// Maps x to n+1-x. Throws DomainError for symbols outside 1..n.
Word complement(const Word& w, unsigned n);

// Word repeated-symbol helper: x^count.
Word power(Symbol x, std::size_t count);

// Lexicographic stream over every multiset permutation of {1^k, ..., n^k}.
//
// Iteration is single-pass; the range itself is cheap to copy and each
// begin() restarts from the smallest word.
class RegularWords {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = const Word&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    friend class RegularWords;
    explicit iterator(Word first) : current_(std::move(first)), done_(false) {}
    Word current_;
    bool done_ = true;
  };

  // Throws ResourceError when k*n exceeds max_symbols.
  explicit RegularWords(RegularityProfile profile,
                        std::size_t max_symbols = kDefaultMaxSymbols);

  iterator begin() const;
  iterator end() const { return iterator{}; }

 private:
  RegularityProfile profile_;
};

inline RegularWords all_regular_words(
    RegularityProfile profile, std::size_t max_symbols = kDefaultMaxSymbols) {
  return RegularWords(profile, max_symbols);
}

}  // namespace kregular
