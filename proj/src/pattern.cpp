#include "kregular/pattern.hpp"

#include <algorithm>

#include "kregular/error.hpp"

namespace kregular {

namespace {

std::int8_t compare(Symbol a, Symbol b) noexcept {
  return static_cast<std::int8_t>((a > b) - (a < b));
}

// Backtracking matcher. Pattern position j is placed at a word position after
// the one chosen for j-1; every placement is checked against all earlier
// placements, and against the anchored last symbol when `anchored` is set.
class Matcher {
 public:
  Matcher(std::span<const Symbol> w, const Pattern& p, bool anchored)
      : w_(w), p_(p), anchored_(anchored), pos_(p.size()) {}

  bool run() {
    const std::size_t len = p_.size();
    if (len == 0 || w_.size() < len) return false;
    if (!anchored_) return place(0, 0);

    const std::size_t last = w_.size() - 1;
    if (len == 1) return true;
    pos_[len - 1] = last;
    return place(0, 0);
  }

 private:
  bool consistent(std::size_t j, std::size_t i) const {
    for (std::size_t t = 0; t < j; ++t)
      if (compare(w_[pos_[t]], w_[i]) != p_.relation(t, j)) return false;
    if (anchored_) {
      const std::size_t l = p_.size() - 1;
      if (compare(w_[i], w_[pos_[l]]) != p_.relation(j, l)) return false;
    }
    return true;
  }

  bool place(std::size_t j, std::size_t start) {
    const std::size_t len = p_.size();
    const std::size_t free_end = anchored_ ? len - 1 : len;
    if (j == free_end) {
      if (!anchored_) return true;
      // The anchored position still has to honour its adjacency link.
      if (j > 0 && p_.adjacency()[j - 1] && pos_[j - 1] + 1 != pos_[j])
        return false;
      return true;
    }

    // Leave room for the remaining pattern positions.
    const std::size_t hi = w_.size() - (len - j);
    std::size_t lo = start;
    std::size_t top = hi;
    if (j > 0 && p_.adjacency()[j - 1]) {
      lo = pos_[j - 1] + 1;
      top = std::min(top, lo);
    }
    if (anchored_ && j + 2 == len && p_.adjacency()[j]) {
      // Must sit right before the anchored last position.
      const std::size_t forced = w_.size() - 2;
      if (forced < lo || forced > top) return false;
      lo = top = forced;
    }
    for (std::size_t i = lo; i <= top && i <= hi; ++i) {
      if (!consistent(j, i)) continue;
      pos_[j] = i;
      if (place(j + 1, i + 1)) return true;
    }
    return false;
  }

  std::span<const Symbol> w_;
  const Pattern& p_;
  bool anchored_;
  std::vector<std::size_t> pos_;
};

}  // namespace

Pattern::Pattern(Word symbols, std::vector<bool> adjacency)
    : symbols_(std::move(symbols)), adjacency_(std::move(adjacency)) {
  if (symbols_.empty()) throw DomainError("pattern must be non-empty");
  if (adjacency_.size() != symbols_.size() - 1)
    throw DomainError("adjacency mask must have length len(pattern) - 1");
  const Symbol m = symbols_.max_symbol();
  std::vector<bool> used(std::size_t{m} + 1, false);
  for (Symbol s : symbols_) used[s] = true;
  for (Symbol v = 1; v <= m; ++v)
    if (!used[v])
      throw DomainError("pattern '" + symbols_.str() +
                        "' skips value " + std::to_string(v));

  const std::size_t len = symbols_.size();
  relations_.resize(len * len);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j)
      relations_[i * len + j] = compare(symbols_[i], symbols_[j]);
}

Pattern Pattern::classical(Word symbols) {
  const std::size_t gaps = symbols.empty() ? 0 : symbols.size() - 1;
  return Pattern(std::move(symbols), std::vector<bool>(gaps, false));
}

Pattern Pattern::consecutive(Word symbols) {
  const std::size_t gaps = symbols.empty() ? 0 : symbols.size() - 1;
  return Pattern(std::move(symbols), std::vector<bool>(gaps, true));
}

Pattern Pattern::parse(std::string_view text) {
  auto fail = [&] {
    return ParseError("invalid pattern '" + std::string(text) + "'");
  };
  try {
    if (text.starts_with("v:")) {
      Word w = Word::parse(text.substr(2));
      if (w.empty()) throw fail();
      return consecutive(std::move(w));
    }
    if (text.starts_with("m:")) {
      auto rest = text.substr(2);
      auto colon = rest.find(':');
      if (colon == std::string_view::npos) throw fail();
      Word w = Word::parse(rest.substr(0, colon));
      std::vector<bool> mask;
      for (char c : rest.substr(colon + 1)) {
        if (c != '0' && c != '1') throw fail();
        mask.push_back(c == '1');
      }
      return Pattern(std::move(w), std::move(mask));
    }
    Word w = Word::parse(text);
    if (w.empty()) throw fail();
    return classical(std::move(w));
  } catch (const DomainError& e) {
    throw ParseError("invalid pattern '" + std::string(text) + "': " +
                     e.what());
  }
}

bool Pattern::is_classical() const noexcept {
  return std::none_of(adjacency_.begin(), adjacency_.end(),
                      [](bool b) { return b; });
}

bool Pattern::is_consecutive() const noexcept {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](bool b) { return b; });
}

std::string Pattern::str() const {
  if (is_classical()) return symbols_.str();
  if (is_consecutive()) return "v:" + symbols_.str();
  std::string mask;
  for (bool b : adjacency_) mask.push_back(b ? '1' : '0');
  return "m:" + symbols_.str() + ":" + mask;
}

std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
  if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.adjacency_.begin(), a.adjacency_.end(), b.adjacency_.begin(),
      b.adjacency_.end());
}

PatternSet::PatternSet(std::vector<Pattern> patterns)
    : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Pattern> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(start, comma - start);
    if (token.empty())
      throw ParseError("empty entry in pattern set '" + std::string(text) +
                       "'");
    out.push_back(Pattern::parse(token));
    start = comma + 1;
  }
  return PatternSet(std::move(out));
}

std::string PatternSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += patterns_[i].str();
  }
  return out;
}

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::identity: return "identity";
    case Symmetry::reverse: return "reverse";
    case Symmetry::complement: return "complement";
    case Symmetry::reverse_complement: return "reverse-complement";
  }
  return "?";
}

bool matches(std::span<const Symbol> subword, std::span<const Symbol> pattern) {
  if (subword.size() != pattern.size())
    throw DomainError("subword and pattern lengths differ");
  for (std::size_t i = 0; i < subword.size(); ++i)
    for (std::size_t j = i + 1; j < subword.size(); ++j)
      if (compare(subword[i], subword[j]) != compare(pattern[i], pattern[j]))
        return false;
  return true;
}

bool matches(const Word& subword, const Word& pattern) {
  return matches(subword.span(), pattern.span());
}

bool contains(std::span<const Symbol> w, const Pattern& p) {
  return Matcher(w, p, false).run();
}

bool contains(const Word& w, const Pattern& p) { return contains(w.span(), p); }

bool contains_ending_at_last(std::span<const Symbol> w, const Pattern& p) {
  return Matcher(w, p, true).run();
}

bool avoids_all(std::span<const Symbol> w, const PatternSet& ps) {
  return std::none_of(ps.begin(), ps.end(),
                      [&](const Pattern& p) { return contains(w, p); });
}

bool avoids_all(const Word& w, const PatternSet& ps) {
  return avoids_all(w.span(), ps);
}

Pattern transform(const Pattern& p, Symmetry s) {
  const unsigned m = p.distinct();
  switch (s) {
    case Symmetry::identity:
      return p;
    case Symmetry::reverse: {
      std::vector<bool> mask(p.adjacency().rbegin(), p.adjacency().rend());
      return Pattern(reverse(p.symbols()), std::move(mask));
    }
    case Symmetry::complement:
      return Pattern(complement(p.symbols(), m), p.adjacency());
    case Symmetry::reverse_complement: {
      std::vector<bool> mask(p.adjacency().rbegin(), p.adjacency().rend());
      return Pattern(reverse(complement(p.symbols(), m)), std::move(mask));
    }
  }
  return p;
}

PatternSet transform(const PatternSet& ps, Symmetry s) {
  std::vector<Pattern> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(transform(p, s));
  return PatternSet(std::move(out));
}

Word transform(const Word& w, unsigned n, Symmetry s) {
  switch (s) {
    case Symmetry::identity: return w;
    case Symmetry::reverse: return reverse(w);
    case Symmetry::complement: return complement(w, n);
    case Symmetry::reverse_complement: return reverse(complement(w, n));
  }
  return w;
}

std::vector<Pattern> classical_length_three() {
  std::vector<Pattern> out;
  for (const char* s : {"123", "132", "213", "231", "312", "321"})
    out.push_back(Pattern::parse(s));
  return out;
}

std::vector<Pattern> two_value_length_three() {
  std::vector<Pattern> out;
  for (const char* s : {"112", "121", "122", "211", "212", "221"})
    out.push_back(Pattern::parse(s));
  return out;
}

}  // namespace kregular
