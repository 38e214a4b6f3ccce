#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kregular/bigint.hpp"
#include "kregular/pattern.hpp"
#include "kregular/word.hpp"

namespace kregular {

struct EnumerationOptions {
  // Upper bound on k*n; larger queries throw ResourceError.
  std::size_t max_symbols = kDefaultMaxSymbols;
  // Worker threads for the first branching level. Output does not depend on
  // this value.
  unsigned threads = 1;
};

// Av_n^k(P): the query plus its count and, when materialized, its words in
// lexicographic order.
struct AvoidanceClass {
  RegularityProfile profile;
  PatternSet patterns;
  std::optional<std::vector<Word>> words;
  BigInt count;
};

// All k-regular words over [n] avoiding every pattern of ps, lexicographic.
//
// Depth-first extension of prefixes with per-symbol remaining counts. A
// prefix is cut as soon as an occurrence ends at its newest position; this is
// sound because containment is preserved under appending symbols.
AvoidanceClass enumerate_avoiders(RegularityProfile profile,
                                  const PatternSet& ps,
                                  const EnumerationOptions& options = {});

// Same search, counting only.
BigInt count_avoiders(RegularityProfile profile, const PatternSet& ps,
                      const EnumerationOptions& options = {});

// Reference implementation: filters all_regular_words with avoids_all.
// Exponentially slower; kept for cross-checking the pruned search.
std::vector<Word> filter_avoiders(RegularityProfile profile,
                                  const PatternSet& ps,
                                  std::size_t max_symbols = kDefaultMaxSymbols);

}  // namespace kregular
