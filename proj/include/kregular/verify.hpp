#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kregular/enumerate.hpp"

namespace kregular {

// Result of a cross-check run: one row per (n, k) cell or case. Field order
// is part of the output contract and stays fixed.
struct ReportField {
  std::string name;
  std::string value;
};

struct ReportRow {
  std::string label;
  std::vector<ReportField> fields;
  bool pass = true;

  const std::string* field(std::string_view name) const;
};

struct Report {
  std::string title;
  std::vector<ReportRow> rows;
  std::string summary;

  bool passed() const;
};

enum class Theorem {
  a,          // Av^k{121,123,132,213} vs a_k(n), plus constructive words
  b,          // Av^k{122,213} vs b_k(n), k >= 2
  c,          // Av^2{v:121,123,132,213} vs c, c', c''
  ss,         // Av^1{123,132,213} vs F(n+1)
  catalan,    // Av{123}, Av{213} vs Catalan; the three k-Catalan pairs
  stirling,   // Av^2{212} vs (2n-1)!!
  symmetry,   // randomized invariance under the square symmetries
  table5,     // the nine (alpha, beta) classes and their formulas
  all,
};

std::optional<Theorem> parse_theorem(std::string_view name);
std::string_view to_string(Theorem t);

// Cells with k*n above options.max_symbols are skipped and counted in the
// summary.
Report verify(Theorem theorem, unsigned n_max, unsigned k_max,
              const EnumerationOptions& options = {});

// Formula value next to brute-force counts of Av_n^r{123,121} and
// Av_n^r{132,212} for n = 0..n_max. Throws ResourceError if r*n_max exceeds
// the symbol limit.
Report verify_conjecture(unsigned r, unsigned n_max,
                         const EnumerationOptions& options = {});

// Rows of the Fibonacci-k (id 2), k-Fibonacci (id 3) or k-Fibonacci-k (id 6)
// tables for k in [k_min, k_max] and n = 0..n_count-1. With check set, cells
// with k*n <= check_symbols are recounted by brute force.
Report sequence_table(int id, unsigned k_min, unsigned k_max,
                      unsigned n_count, bool check,
                      std::size_t check_symbols = 18,
                      const EnumerationOptions& options = {});

// The 9 orbits of (alpha, beta) in S_3 x M_3^2 under the square symmetries,
// each sorted, in order of their smallest member.
std::vector<std::vector<PatternSet>> pair_classes();

}  // namespace kregular
