#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kregular/pattern.hpp"
#include "kregular/word.hpp"

namespace kregular {

// Places x at 1-based position i (1 <= i <= |w|+1), shifting the rest right.
Word insert(const Word& w, Symbol x, std::size_t i);

// Av_n^k{121,123,132,213}, built from the n-1 and n-2 levels:
//   n^k . gamma                    for gamma over [n-1]
//   n^b (n-1)^k n^(k-b) . gamma    for gamma over [n-2], 0 <= b < k
// Words come out in construction order, not sorted.
std::vector<Word> generate_fib_k(unsigned n, unsigned k);

// Av_n^k{122,213} for k >= 2 (DomainError otherwise):
//   n^(k-1) . insert(alpha, n, i+1)   for alpha over [n-1], 0 <= i <= k-1
//   n^(k-1) (n-1)^k n . gamma         for gamma over [n-2]
std::vector<Word> generate_k_fib(unsigned n, unsigned k);

struct StandardPartition {
  Word annex;
  Word base;
};

// Splits a non-empty k-regular word into its annex and base, the base being
// the longest strict suffix that is k-regular over [m] for some m < n.
// Throws DomainError for empty or non-regular input.
StandardPartition standard_partition(const Word& w, RegularityProfile profile);

// Every annex of a 2-regular word over [n] avoiding {v:121,123,132,213}:
// the four short ones (nn, (n-1)(n-1)nn, (n-1)nn(n-1), n(n-1)(n-1)n), then
// for each depth 2 <= d <= n-1 the two root-to-leaf paths of the prefix tree.
// Requires n >= 2.
std::vector<Word> prefix_tree_annexes(unsigned n);

// Av_n^2{v:121,123,132,213}: each annex over the top j symbols followed by
// every word of the same family over the remaining n-j symbols.
std::vector<Word> generate_fib_squared(unsigned n);

// Explicit bi-rooted prefix tree, for inspection and export only; the
// generators above never build it. Requires n >= 3.
class PrefixTree {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
  };

  explicit PrefixTree(unsigned n);

  unsigned n() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  Symbol label(std::size_t v) const { return labels_[v]; }
  // Edges point away from the roots. The start of the primary path is the
  // only vertex with two incoming edges.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // The roots, labelled n and n-1.
  std::size_t root_n() const noexcept { return 0; }
  std::size_t root_n_minus_1() const noexcept { return 1; }
  // Labels along the primary path: n, n-2, n-1, n-3, n-2, ..., 2, 3, 1.
  std::vector<Symbol> primary_path_labels() const;
  std::size_t leaf_count() const;
  // Label sequences of every root-to-leaf path.
  std::vector<Word> root_to_leaf_words() const;

  // Graphviz text; roots are drawn as double circles.
  std::string to_dot() const;

 private:
  std::size_t add(Symbol label);
  void link(std::size_t from, std::size_t to) { edges_.push_back({from, to}); }

  unsigned n_;
  std::vector<Symbol> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> primary_;
};

enum class ConstructFamily { fib_k, k_fib, fib_squared };

// Which constructive generator, if any, produces Av_n^k(ps).
std::optional<ConstructFamily> identify_family(const PatternSet& ps,
                                               unsigned k);

// Dispatches to the matching generator and sorts the result.
std::vector<Word> construct_sorted(ConstructFamily family, unsigned n,
                                   unsigned k);

}  // namespace kregular
