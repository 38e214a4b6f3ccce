#include "kregular/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>

#include "kregular/error.hpp"

namespace kregular {

namespace {

void check_limits(RegularityProfile profile, std::size_t max_symbols) {
  validate(profile);
  if (profile.length() > max_symbols)
    throw ResourceError("k*n = " + std::to_string(profile.length()) +
                        " exceeds the symbol limit of " +
                        std::to_string(max_symbols));
}

// One subtree of the search: all words whose first symbol is `first`.
class Search {
 public:
  Search(RegularityProfile profile, const PatternSet& ps, bool collect)
      : profile_(profile),
        patterns_(ps),
        collect_(collect),
        prefix_(profile.length()),
        remaining_(std::size_t{profile.n} + 1, profile.k) {
    remaining_[0] = 0;
    for (const auto& p : ps) {
      const auto& adj = p.adjacency();
      unsigned free = 0;
      while (free < adj.size() && !adj[adj.size() - 1 - free]) ++free;
      free_tail_.push_back(free);
    }
  }

  void run_from(Symbol first) {
    if (profile_.length() == 0) {
      emit();
      return;
    }
    extend_with(0, first);
  }

  std::uint64_t count() const noexcept { return count_; }
  std::vector<Word>& words() noexcept { return words_; }

 private:
  bool pruned(std::size_t depth) const {
    std::span<const Symbol> w(prefix_.data(), depth + 1);
    for (const auto& p : patterns_)
      if (contains_ending_at_last(w, p)) return true;
    return false;
  }

  // Every remaining letter still has to be placed. If appending one or two
  // copies of some remaining y completes an occurrence whose trailing gaps
  // are free, that occurrence survives wherever the copies land, so no
  // completion of the prefix avoids the set. The slots past the prefix are
  // used as scratch space.
  bool doomed(std::size_t depth) {
    const std::size_t end = depth + 1;
    for (Symbol y = 1; y <= profile_.n; ++y) {
      const unsigned left = remaining_[y];
      for (unsigned c = 1; c <= std::min(left, 2u); ++c) {
        prefix_[end + c - 1] = y;
        std::span<const Symbol> w(prefix_.data(), end + c);
        for (std::size_t i = 0; i < patterns_.size(); ++i)
          if (free_tail_[i] >= c && contains_ending_at_last(w, patterns_[i]))
            return true;
      }
    }
    return false;
  }

  void extend_with(std::size_t depth, Symbol s) {
    prefix_[depth] = s;
    --remaining_[s];
    if (!pruned(depth) && !doomed(depth)) descend(depth + 1);
    ++remaining_[s];
  }

  void descend(std::size_t depth) {
    if (depth == prefix_.size()) {
      emit();
      return;
    }
    for (Symbol s = 1; s <= profile_.n; ++s)
      if (remaining_[s] != 0) extend_with(depth, s);
  }

  void emit() {
    ++count_;
    if (collect_) words_.emplace_back(prefix_);
  }

  RegularityProfile profile_;
  const PatternSet& patterns_;
  bool collect_;
  std::vector<Symbol> prefix_;
  std::vector<unsigned> remaining_;
  std::vector<unsigned> free_tail_;  // trailing unconstrained gaps per pattern
  std::uint64_t count_ = 0;
  std::vector<Word> words_;
};

struct BranchResult {
  std::uint64_t count = 0;
  std::vector<Word> words;
};

// Runs one Search per first symbol, on up to `threads` workers, and returns
// the per-branch results indexed by first symbol so the merge order is fixed.
std::vector<BranchResult> run_branches(RegularityProfile profile,
                                       const PatternSet& ps, bool collect,
                                       unsigned threads) {
  if (profile.n == 0) {
    Search search(profile, ps, collect);
    search.run_from(0);
    return {BranchResult{search.count(), std::move(search.words())}};
  }

  std::vector<BranchResult> results(profile.n);
  auto work = [&](std::size_t branch) {
    Search search(profile, ps, collect);
    search.run_from(static_cast<Symbol>(branch + 1));
    results[branch] = BranchResult{search.count(), std::move(search.words())};
  };

  const unsigned workers =
      std::min<unsigned>(std::max(threads, 1u), profile.n);
  if (workers <= 1) {
    for (std::size_t b = 0; b < profile.n; ++b) work(b);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t b = next++; b < profile.n; b = next++) work(b);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace

AvoidanceClass enumerate_avoiders(RegularityProfile profile,
                                  const PatternSet& ps,
                                  const EnumerationOptions& options) {
  check_limits(profile, options.max_symbols);
  auto branches = run_branches(profile, ps, true, options.threads);

  AvoidanceClass out{profile, ps, std::vector<Word>{}, 0};
  std::uint64_t total = 0;
  for (auto& b : branches) {
    total += b.count;
    std::move(b.words.begin(), b.words.end(), std::back_inserter(*out.words));
  }
  out.count = total;
  return out;
}

BigInt count_avoiders(RegularityProfile profile, const PatternSet& ps,
                      const EnumerationOptions& options) {
  check_limits(profile, options.max_symbols);
  std::uint64_t total = 0;
  for (const auto& b : run_branches(profile, ps, false, options.threads))
    total += b.count;
  return BigInt(total);
}

std::vector<Word> filter_avoiders(RegularityProfile profile,
                                  const PatternSet& ps,
                                  std::size_t max_symbols) {
  std::vector<Word> out;
  for (const Word& w : all_regular_words(profile, max_symbols))
    if (avoids_all(w, ps)) out.push_back(w);
  return out;
}

}  // namespace kregular
