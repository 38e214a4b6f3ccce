#include "kregular/construct.hpp"

#include <algorithm>
#include <sstream>

#include "kregular/error.hpp"

namespace kregular {

namespace {

void append(std::vector<Symbol>& out, Symbol x, std::size_t count) {
  out.insert(out.end(), count, x);
}

Word concat(std::vector<Symbol> head, const Word& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return Word(std::move(head));
}

// Shared driver for the two-level recurrences: level m is built from the
// already computed levels m-1 and m-2, starting from {eps} and {1^k}.
template <typename Step>
std::vector<Word> build_levels(unsigned n, unsigned k, Step step) {
  std::vector<std::vector<Word>> levels;
  levels.push_back({Word{}});
  if (n == 0) return levels[0];
  levels.push_back({power(1, k)});
  for (unsigned m = 2; m <= n; ++m)
    levels.push_back(step(static_cast<Symbol>(m), levels[m - 1], levels[m - 2]));
  return levels[n];
}

// Root prefix (n-1) n n  or  n (n-1) n, then the primary path down to depth d,
// then the leaf (n-d)(n-d)(n-d+1).
Word tree_annex(Symbol n, unsigned depth, bool starts_with_n) {
  std::vector<Symbol> out;
  if (starts_with_n)
    out = {n, n - 1, n};
  else
    out = {n - 1, n, n};
  for (unsigned t = 2; t < depth; ++t) {
    out.push_back(n - t);
    out.push_back(n - t + 1);
  }
  out.push_back(n - depth);
  out.push_back(n - depth);
  out.push_back(n - depth + 1);
  return Word(std::move(out));
}

}  // namespace

Word insert(const Word& w, Symbol x, std::size_t i) {
  if (i < 1 || i > w.size() + 1)
    throw DomainError("insert position " + std::to_string(i) +
                      " outside 1.." + std::to_string(w.size() + 1));
  std::vector<Symbol> out = w.symbols();
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i - 1), x);
  return Word(std::move(out));
}

std::vector<Word> generate_fib_k(unsigned n, unsigned k) {
  validate({n, k});
  return build_levels(n, k, [k](Symbol m, const std::vector<Word>& prev,
                                const std::vector<Word>& prev2) {
    std::vector<Word> out;
    out.reserve(prev.size() + k * prev2.size());
    for (const Word& gamma : prev) {
      std::vector<Symbol> head;
      append(head, m, k);
      out.push_back(concat(std::move(head), gamma));
    }
    for (unsigned b = 0; b < k; ++b) {
      for (const Word& gamma : prev2) {
        std::vector<Symbol> head;
        append(head, m, b);
        append(head, m - 1, k);
        append(head, m, k - b);
        out.push_back(concat(std::move(head), gamma));
      }
    }
    return out;
  });
}

std::vector<Word> generate_k_fib(unsigned n, unsigned k) {
  if (k < 2) throw DomainError("k-Fibonacci words need k >= 2");
  return build_levels(n, k, [k](Symbol m, const std::vector<Word>& prev,
                                const std::vector<Word>& prev2) {
    std::vector<Word> out;
    out.reserve(k * prev.size() + prev2.size());
    for (const Word& alpha : prev) {
      for (unsigned i = 0; i < k; ++i) {
        std::vector<Symbol> head;
        append(head, m, k - 1);
        out.push_back(concat(std::move(head), insert(alpha, m, i + 1)));
      }
    }
    for (const Word& gamma : prev2) {
      std::vector<Symbol> head;
      append(head, m, k - 1);
      append(head, m - 1, k);
      head.push_back(m);
      out.push_back(concat(std::move(head), gamma));
    }
    return out;
  });
}

StandardPartition standard_partition(const Word& w, RegularityProfile profile) {
  if (w.empty()) throw DomainError("standard partition of the empty word");
  if (!is_regular(w, profile))
    throw DomainError("'" + w.str() + "' is not " +
                      std::to_string(profile.k) + "-regular over [" +
                      std::to_string(profile.n) + "]");

  const std::size_t len = w.size();
  std::vector<Symbol> suffix_max(len + 1, 0);
  for (std::size_t i = len; i-- > 0;)
    suffix_max[i] = std::max(suffix_max[i + 1], w[i]);

  // A suffix of a k-regular word has at most k copies of each symbol, so it
  // is k-regular over [m] exactly when it has length k*m and nothing above m.
  for (std::size_t start = 1; start <= len; ++start) {
    const std::size_t rest = len - start;
    if (rest % profile.k != 0) continue;
    const std::size_t m = rest / profile.k;
    if (m < profile.n && suffix_max[start] <= m) {
      auto cut = w.begin() + static_cast<std::ptrdiff_t>(start);
      return {Word(std::vector<Symbol>(w.begin(), cut)),
              Word(std::vector<Symbol>(cut, w.end()))};
    }
  }
  throw ConsistencyError("no base found");  // unreachable: eps always fits
}

std::vector<Word> prefix_tree_annexes(unsigned n) {
  if (n < 2) throw DomainError("annex catalog needs n >= 2");
  const Symbol top = n;
  std::vector<Word> out = {
      Word{top, top},
      Word{top - 1, top - 1, top, top},
      Word{top - 1, top, top, top - 1},
      Word{top, top - 1, top - 1, top},
  };
  for (unsigned depth = 2; depth + 1 <= n; ++depth) {
    out.push_back(tree_annex(top, depth, false));
    out.push_back(tree_annex(top, depth, true));
  }
  return out;
}

std::vector<Word> generate_fib_squared(unsigned n) {
  std::vector<std::vector<Word>> levels;
  levels.push_back({Word{}});
  if (n >= 1) levels.push_back({Word{1, 1}});
  for (unsigned m = 2; m <= n; ++m) {
    std::vector<Word> level;
    for (const Word& annex : prefix_tree_annexes(m)) {
      const std::size_t used = annex.size() / 2;
      for (const Word& base : levels[m - used]) level.push_back(annex + base);
    }
    levels.push_back(std::move(level));
  }
  return levels[n];
}

PrefixTree::PrefixTree(unsigned n) : n_(n) {
  if (n < 3) throw DomainError("prefix tree needs n >= 3");
  const Symbol top = n;
  const std::size_t root_top = add(top);
  const std::size_t root_second = add(top - 1);
  const std::size_t below_top = add(top - 1);
  const std::size_t below_second = add(top);
  link(root_top, below_top);
  link(root_second, below_second);

  const std::size_t start = add(top);
  link(below_top, start);
  link(below_second, start);
  primary_.push_back(start);

  // Two steps forward, one step back; the first node of each pair (and the
  // final 1) carries a leaf branch i -> i -> i+1.
  auto extend = [&](Symbol label) {
    const std::size_t v = add(label);
    link(primary_.back(), v);
    primary_.push_back(v);
    return v;
  };
  auto branch = [&](std::size_t v) {
    const std::size_t a = add(labels_[v]);
    const std::size_t b = add(labels_[v] + 1);
    link(v, a);
    link(a, b);
  };

  std::vector<std::size_t> branch_points;
  for (Symbol j = top - 2; j >= 2; --j) {
    branch_points.push_back(extend(j));
    extend(j + 1);
  }
  branch_points.push_back(extend(1));
  for (std::size_t v : branch_points) branch(v);
}

std::size_t PrefixTree::add(Symbol label) {
  labels_.push_back(label);
  return labels_.size() - 1;
}

std::vector<Symbol> PrefixTree::primary_path_labels() const {
  std::vector<Symbol> out;
  for (std::size_t v : primary_) out.push_back(labels_[v]);
  return out;
}

std::size_t PrefixTree::leaf_count() const {
  std::vector<bool> has_child(labels_.size(), false);
  for (const auto& e : edges_) has_child[e.from] = true;
  return static_cast<std::size_t>(
      std::count(has_child.begin(), has_child.end(), false));
}

std::vector<Word> PrefixTree::root_to_leaf_words() const {
  std::vector<std::vector<std::size_t>> children(labels_.size());
  for (const auto& e : edges_) children[e.from].push_back(e.to);

  std::vector<Word> out;
  std::vector<Symbol> path;
  auto walk = [&](auto&& self, std::size_t v) -> void {
    path.push_back(labels_[v]);
    if (children[v].empty()) out.emplace_back(path);
    for (std::size_t c : children[v]) self(self, c);
    path.pop_back();
  };
  walk(walk, root_n_minus_1());
  walk(walk, root_n());
  return out;
}

std::string PrefixTree::to_dot() const {
  std::ostringstream os;
  os << "digraph prefix_tree_" << n_ << " {\n";
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    os << "  v" << v << " [label=\"" << labels_[v] << "\"";
    if (v == root_n() || v == root_n_minus_1()) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& e : edges_) os << "  v" << e.from << " -> v" << e.to << ";\n";
  os << "}\n";
  return os.str();
}

std::optional<ConstructFamily> identify_family(const PatternSet& ps,
                                               unsigned k) {
  static const PatternSet fib_k = PatternSet::parse("121,123,132,213");
  static const PatternSet k_fib = PatternSet::parse("122,213");
  static const PatternSet fib_squared = PatternSet::parse("v:121,123,132,213");
  if (ps == fib_k) return ConstructFamily::fib_k;
  if (ps == k_fib && k >= 2) return ConstructFamily::k_fib;
  if (ps == fib_squared && k == 2) return ConstructFamily::fib_squared;
  return std::nullopt;
}

std::vector<Word> construct_sorted(ConstructFamily family, unsigned n,
                                   unsigned k) {
  std::vector<Word> out;
  switch (family) {
    case ConstructFamily::fib_k: out = generate_fib_k(n, k); break;
    case ConstructFamily::k_fib: out = generate_k_fib(n, k); break;
    case ConstructFamily::fib_squared:
      if (k != 2) throw DomainError("Fibonacci-squared words are 2-regular");
      out = generate_fib_squared(n);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kregular
