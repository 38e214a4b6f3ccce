#include "kregular/word.hpp"

#include <algorithm>
#include <charconv>

#include "kregular/error.hpp"

namespace kregular {

namespace {

void require_positive(const std::vector<Symbol>& symbols) {
  if (std::find(symbols.begin(), symbols.end(), Symbol{0}) != symbols.end())
    throw DomainError("word symbols must be >= 1");
}

Symbol parse_symbol(std::string_view token, std::string_view whole) {
  Symbol value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last || value == 0)
    throw ParseError("invalid word '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Word::Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  require_positive(symbols_);
}

Word::Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {
  require_positive(symbols_);
}

Word Word::parse(std::string_view text) {
  if (text.empty() || text == "e" || text == "\xCE\xB5") return Word{};

  std::vector<Symbol> out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      out.push_back(parse_symbol(text.substr(start, comma - start), text));
      start = comma + 1;
    }
  } else {
    out.reserve(text.size());
    for (char c : text) {
      if (c < '1' || c > '9')
        throw ParseError("invalid word '" + std::string(text) + "'");
      out.push_back(static_cast<Symbol>(c - '0'));
    }
  }
  Word w;
  w.symbols_ = std::move(out);
  return w;
}

std::string Word::str() const {
  std::string out;
  if (max_symbol() <= 9) {
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(symbols_[i]);
  }
  return out;
}

Symbol Word::max_symbol() const noexcept {
  return symbols_.empty() ? 0
                          : *std::max_element(symbols_.begin(), symbols_.end());
}

Word Word::operator+(const Word& tail) const {
  Word out = *this;
  out.symbols_.insert(out.symbols_.end(), tail.symbols_.begin(),
                      tail.symbols_.end());
  return out;
}

void validate(RegularityProfile profile) {
  if (profile.k == 0) throw DomainError("frequency k must be >= 1");
}

bool is_regular(const Word& w, RegularityProfile profile) {
  if (profile.k == 0 || w.size() != profile.length()) return false;
  std::vector<std::size_t> seen(std::size_t{profile.n} + 1, 0);
  for (Symbol s : w) {
    if (s > profile.n) return false;
    if (++seen[s] > profile.k) return false;
  }
  // Length matches and nothing exceeds k, so every symbol has exactly k.
  return true;
}

Word reverse(const Word& w) {
  return Word(std::vector<Symbol>(w.symbols().rbegin(), w.symbols().rend()));
}

Word complement(const Word& w, unsigned n) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (s > n)
      throw DomainError("symbol " + std::to_string(s) +
                        " outside alphabet [" + std::to_string(n) + "]");
    out.push_back(n + 1 - s);
  }
  return Word(std::move(out));
}

Word power(Symbol x, std::size_t count) {
  return Word(std::vector<Symbol>(count, x));
}

RegularWords::RegularWords(RegularityProfile profile, std::size_t max_symbols)
    : profile_(profile) {
  validate(profile);
  if (profile.length() > max_symbols)
    throw ResourceError("k*n = " + std::to_string(profile.length()) +
                        " exceeds the symbol limit of " +
                        std::to_string(max_symbols));
}

RegularWords::iterator RegularWords::begin() const {
  std::vector<Symbol> first;
  first.reserve(profile_.length());
  for (Symbol s = 1; s <= profile_.n; ++s)
    first.insert(first.end(), profile_.k, s);
  return iterator(Word(std::move(first)));
}

RegularWords::iterator& RegularWords::iterator::operator++() {
  // next_permutation visits each distinct multiset permutation once, in order.
  std::vector<Symbol> next = current_.symbols();
  if (std::next_permutation(next.begin(), next.end())) {
    current_ = Word(std::move(next));
  } else {
    done_ = true;
    current_ = Word{};
  }
  return *this;
}

}  // namespace kregular
