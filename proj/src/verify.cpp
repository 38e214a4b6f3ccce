#include "kregular/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "kregular/construct.hpp"
#include "kregular/error.hpp"
#include "kregular/sequences.hpp"

namespace kregular {

namespace {

std::string num(const BigInt& v) { return v.str(); }
std::string num(unsigned v) { return std::to_string(v); }

std::string cell_label(std::string_view prefix, unsigned n, unsigned k) {
  return std::string(prefix) + " n=" + num(n) + " k=" + num(k);
}

const PatternSet& fib_k_patterns() {
  static const PatternSet ps = PatternSet::parse("121,123,132,213");
  return ps;
}
const PatternSet& k_fib_patterns() {
  static const PatternSet ps = PatternSet::parse("122,213");
  return ps;
}
const PatternSet& fib_squared_patterns() {
  static const PatternSet ps = PatternSet::parse("v:121,123,132,213");
  return ps;
}

// Accumulates rows and the skipped-cell tally for one suite.
class Suite {
 public:
  Suite(std::string title, const EnumerationOptions& options)
      : options_(options) {
    report_.title = std::move(title);
  }

  const EnumerationOptions& options() const { return options_; }

  bool fits(unsigned n, unsigned k) {
    if (std::size_t{n} * k <= options_.max_symbols) return true;
    ++skipped_;
    return false;
  }

  void add(ReportRow row) { report_.rows.push_back(std::move(row)); }

  Report finish() {
    const auto failed = std::count_if(report_.rows.begin(), report_.rows.end(),
                                      [](const ReportRow& r) { return !r.pass; });
    if (failed == 0)
      report_.summary = "PASS: " + std::to_string(report_.rows.size()) + " checks";
    else
      report_.summary = "FAIL: " + std::to_string(failed) + " of " +
                        std::to_string(report_.rows.size()) + " checks";
    if (skipped_ != 0)
      report_.summary += "; skipped " + std::to_string(skipped_) +
                         " cells above the symbol limit";
    return std::move(report_);
  }

 private:
  EnumerationOptions options_;
  Report report_;
  std::size_t skipped_ = 0;
};

// Brute force vs formula vs constructive generator, including word-set
// equality between the two enumeration routes.
void constructive_cell(Suite& suite, std::string_view prefix, unsigned n,
                       unsigned k, const PatternSet& ps, ConstructFamily family,
                       const BigInt& formula) {
  auto brute = enumerate_avoiders({n, k}, ps, suite.options());
  auto built = construct_sorted(family, n, k);
  const bool same_words = built == *brute.words;
  ReportRow row{cell_label(prefix, n, k),
                {{"n", num(n)},
                 {"k", num(k)},
                 {"formula", num(formula)},
                 {"brute", num(brute.count)},
                 {"construct", std::to_string(built.size())},
                 {"same_words", same_words ? "yes" : "no"}},
                brute.count == formula && BigInt(built.size()) == formula &&
                    same_words};
  suite.add(std::move(row));
}

Report theorem_a(unsigned n_max, unsigned k_max, const EnumerationOptions& o) {
  Suite suite("a: Av^k{121,123,132,213} = a_k(n)", o);
  for (unsigned k = 1; k <= k_max; ++k)
    for (unsigned n = 0; n <= n_max; ++n)
      if (suite.fits(n, k))
        constructive_cell(suite, "a", n, k, fib_k_patterns(),
                          ConstructFamily::fib_k, a_k(k, n));
  return suite.finish();
}

Report theorem_b(unsigned n_max, unsigned k_max, const EnumerationOptions& o) {
  Suite suite("b: Av^k{122,213} = b_k(n), k >= 2", o);
  for (unsigned k = 2; k <= k_max; ++k)
    for (unsigned n = 0; n <= n_max; ++n)
      if (suite.fits(n, k))
        constructive_cell(suite, "b", n, k, k_fib_patterns(),
                          ConstructFamily::k_fib, b_k(k, n));
  return suite.finish();
}

Report theorem_c(unsigned n_max, const EnumerationOptions& o) {
  Suite suite("c: Av^2{v:121,123,132,213} = a_1(n)^2", o);
  const auto primes = c_prime_prefix(n_max + 1);
  const auto double_primes = c_double_prime_prefix(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    if (!suite.fits(n, 2)) continue;
    const BigInt c = fib_squared_c(n);
    auto brute = enumerate_avoiders({n, 2}, fib_squared_patterns(), o);
    auto built = construct_sorted(ConstructFamily::fib_squared, n, 2);
    const bool same_words = built == *brute.words;
    suite.add({cell_label("c", n, 2),
               {{"n", num(n)},
                {"k", "2"},
                {"formula", num(c)},
                {"c_prime", num(primes[n])},
                {"c_double_prime", num(double_primes[n])},
                {"brute", num(brute.count)},
                {"construct", std::to_string(built.size())},
                {"same_words", same_words ? "yes" : "no"}},
               c == primes[n] && c == double_primes[n] && brute.count == c &&
                   BigInt(built.size()) == c && same_words});
  }
  return suite.finish();
}

Report theorem_ss(unsigned n_max, const EnumerationOptions& o) {
  Suite suite("ss: Av{123,132,213} = F(n+1)", o);
  const auto patterns = PatternSet::parse("123,132,213");
  for (unsigned n = 0; n <= n_max; ++n) {
    if (!suite.fits(n, 1)) continue;
    const BigInt fib = eval_general({0, 1, 1, 1}, n + 1);
    const BigInt brute = count_avoiders({n, 1}, patterns, o);
    suite.add({cell_label("ss", n, 1),
               {{"n", num(n)}, {"k", "1"}, {"formula", num(fib)},
                {"brute", num(brute)}},
               fib == brute});
  }
  return suite.finish();
}

Report theorem_catalan(unsigned n_max, unsigned k_max,
                       const EnumerationOptions& o) {
  Suite suite("catalan: Av{123} = Av{213} = Cat(n); k-Catalan pairs", o);
  const auto p123 = PatternSet::parse("123");
  const auto p213 = PatternSet::parse("213");
  for (unsigned n = 0; n <= n_max; ++n) {
    if (!suite.fits(n, 1)) continue;
    const BigInt cat = catalan_k(2, n);
    const BigInt c123 = count_avoiders({n, 1}, p123, o);
    const BigInt c213 = count_avoiders({n, 1}, p213, o);
    suite.add({cell_label("catalan", n, 1),
               {{"n", num(n)}, {"k", "1"}, {"formula", num(cat)},
                {"avoid_123", num(c123)}, {"avoid_213", num(c213)}},
               cat == c123 && cat == c213});
  }

  const auto p212_312 = PatternSet::parse("212,312");
  const auto p221_231 = PatternSet::parse("221,231");
  const auto p112_123 = PatternSet::parse("112,123");
  for (unsigned kat = 2; kat <= std::max(k_max, 2u); ++kat) {
    const unsigned k = kat - 1;
    for (unsigned n = 0; n <= n_max; ++n) {
      if (!suite.fits(n, k)) continue;
      const BigInt formula = catalan_k(kat, n);
      const BigInt x = count_avoiders({n, k}, p212_312, o);
      const BigInt y = count_avoiders({n, k}, p221_231, o);
      const BigInt z = count_avoiders({n, k}, p112_123, o);
      suite.add({"kat" + num(kat) + " n=" + num(n) + " k=" + num(k),
                 {{"n", num(n)}, {"k", num(k)}, {"formula", num(formula)},
                  {"avoid_212_312", num(x)}, {"avoid_221_231", num(y)},
                  {"avoid_112_123", num(z)}},
                 formula == x && formula == y && formula == z});
    }
  }
  return suite.finish();
}

Report theorem_stirling(unsigned n_max, const EnumerationOptions& o) {
  Suite suite("stirling: Av^2{212} = (2n-1)!!", o);
  const auto p212 = PatternSet::parse("212");
  for (unsigned n = 0; n <= n_max; ++n) {
    if (!suite.fits(n, 2)) continue;
    const BigInt formula = double_factorial_odd(n);
    const BigInt brute = count_avoiders({n, 2}, p212, o);
    suite.add({cell_label("stirling", n, 2),
               {{"n", num(n)}, {"k", "2"}, {"formula", num(formula)},
                {"brute", num(brute)}},
               formula == brute});
  }
  return suite.finish();
}

std::vector<Pattern> length_three_pool() {
  auto pool = classical_length_three();
  auto multi = two_value_length_three();
  pool.insert(pool.end(), multi.begin(), multi.end());
  return pool;
}

Report theorem_symmetry(unsigned n_max, unsigned k_max,
                        const EnumerationOptions& o) {
  Suite suite("symmetry: counts invariant under reverse/complement", o);
  constexpr int kCases = 200;
  const auto pool = length_three_pool();
  std::mt19937_64 rng(0x6b726567u);
  std::uniform_int_distribution<unsigned> pick_n(1, std::max(n_max, 1u));
  std::uniform_int_distribution<unsigned> pick_k(1, std::max(k_max, 1u));
  std::uniform_int_distribution<std::size_t> pick_size(1, 3);
  std::uniform_int_distribution<std::size_t> pick_pattern(0, pool.size() - 1);

  for (int c = 0; c < kCases; ++c) {
    unsigned n = pick_n(rng);
    unsigned k = pick_k(rng);
    while (std::size_t{n} * k > o.max_symbols) n = pick_n(rng), k = pick_k(rng);
    std::vector<Pattern> chosen;
    const std::size_t size = pick_size(rng);
    for (std::size_t i = 0; i < size; ++i) chosen.push_back(pool[pick_pattern(rng)]);
    const PatternSet ps(std::move(chosen));

    ReportRow row{"symmetry case=" + std::to_string(c),
                  {{"n", num(n)}, {"k", num(k)}, {"patterns", ps.str()}},
                  true};
    BigInt reference;
    for (Symmetry s : kSquareSymmetries) {
      const BigInt count = count_avoiders({n, k}, transform(ps, s), o);
      if (s == Symmetry::identity) reference = count;
      row.pass = row.pass && count == reference;
      row.fields.push_back({std::string(to_string(s)), num(count)});
    }
    suite.add(std::move(row));
  }
  return suite.finish();
}

enum class ClassFormula { catalan, r_fibonacci, pell, linear, degenerate, conjecture };

std::string_view formula_name(ClassFormula f) {
  switch (f) {
    case ClassFormula::catalan: return "(r+1)-Catalan";
    case ClassFormula::r_fibonacci: return "r-Fibonacci";
    case ClassFormula::pell: return "(1,r+1)-based Pell";
    case ClassFormula::linear: return "r(n-1)+1";
    case ClassFormula::degenerate: return "1,r+1,0,0,...";
    case ClassFormula::conjecture: return "conjectured sum";
  }
  return "?";
}

BigInt class_formula(ClassFormula f, unsigned r, unsigned n) {
  switch (f) {
    case ClassFormula::catalan: return catalan_k(r + 1, n);
    case ClassFormula::r_fibonacci: return b_k(r, n);
    case ClassFormula::pell: return table5_formula(Table5Row::pell_1_rplus1, r, n);
    case ClassFormula::linear: return table5_formula(Table5Row::linear, r, n);
    case ClassFormula::degenerate: return table5_formula(Table5Row::degenerate, r, n);
    case ClassFormula::conjecture: return conjecture_formula(r, n);
  }
  throw ConsistencyError("unknown class formula");
}

// Representative pairs as labelled in the published table.
const std::vector<std::pair<PatternSet, ClassFormula>>& class_labels() {
  static const std::vector<std::pair<PatternSet, ClassFormula>> labels = {
      {PatternSet::parse("123,112"), ClassFormula::catalan},
      {PatternSet::parse("132,121"), ClassFormula::catalan},
      {PatternSet::parse("132,122"), ClassFormula::catalan},
      {PatternSet::parse("132,112"), ClassFormula::r_fibonacci},
      {PatternSet::parse("132,221"), ClassFormula::pell},
      {PatternSet::parse("132,211"), ClassFormula::linear},
      {PatternSet::parse("123,211"), ClassFormula::degenerate},
      {PatternSet::parse("123,121"), ClassFormula::conjecture},
      {PatternSet::parse("132,212"), ClassFormula::conjecture},
  };
  return labels;
}

Report theorem_table5(unsigned n_max, unsigned k_max,
                      const EnumerationOptions& o) {
  Suite suite("table5: (alpha, beta) classes", o);
  const auto classes = pair_classes();

  auto class_of = [&](const PatternSet& ps) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (std::find(classes[i].begin(), classes[i].end(), ps) != classes[i].end())
        return i;
    return std::nullopt;
  };

  // Exactly one published label per class.
  std::vector<std::optional<std::pair<PatternSet, ClassFormula>>> labelled(
      classes.size());
  bool labels_ok = classes.size() == 9;
  for (const auto& [ps, f] : class_labels()) {
    auto idx = class_of(ps);
    if (!idx || labelled[*idx]) {
      labels_ok = false;
      continue;
    }
    labelled[*idx] = std::make_pair(ps, f);
  }
  labels_ok = labels_ok && std::all_of(labelled.begin(), labelled.end(),
                                       [](const auto& l) { return l.has_value(); });

  // The k-Catalan pairs proven elsewhere must sit in (r+1)-Catalan classes.
  bool catalan_pairs_ok = true;
  for (const char* text : {"212,312", "221,231", "112,123"}) {
    auto idx = class_of(PatternSet::parse(text));
    catalan_pairs_ok = catalan_pairs_ok && idx && labelled[*idx] &&
                       labelled[*idx]->second == ClassFormula::catalan;
  }
  suite.add({"table5 labels",
             {{"classes", std::to_string(classes.size())},
              {"one_label_per_class", labels_ok ? "yes" : "no"},
              {"catalan_pairs_match", catalan_pairs_ok ? "yes" : "no"}},
             labels_ok && catalan_pairs_ok});
  if (!labels_ok) return suite.finish();

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& [label, formula] = *labelled[i];
    for (unsigned r = 1; r <= k_max; ++r) {
      for (unsigned n = 0; n <= n_max; ++n) {
        if (!suite.fits(n, r)) continue;
        std::vector<BigInt> counts;
        std::string joined;
        for (const auto& member : classes[i]) {
          counts.push_back(count_avoiders({n, r}, member, o));
          if (!joined.empty()) joined += " ";
          joined += num(counts.back());
        }
        const bool equal = std::adjacent_find(counts.begin(), counts.end(),
                                              std::not_equal_to<>()) == counts.end();
        ReportRow row{"table5 " + label.str() + " n=" + num(n) + " r=" + num(r),
                      {{"n", num(n)},
                       {"r", num(r)},
                       {"class", label.str()},
                       {"sequence", std::string(formula_name(formula))},
                       {"member_counts", joined}},
                      equal};
        // The published rows describe r >= 2.
        if (r >= 2) {
          const BigInt expected = class_formula(formula, r, n);
          row.fields.push_back({"formula", num(expected)});
          row.pass = row.pass && expected == counts.front();
        } else {
          row.fields.push_back({"formula", "-"});
        }
        suite.add(std::move(row));
      }
    }
  }
  return suite.finish();
}

}  // namespace

const std::string* ReportRow::field(std::string_view name) const {
  for (const auto& f : fields)
    if (f.name == name) return &f.value;
  return nullptr;
}

bool Report::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReportRow& r) { return r.pass; });
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::a, Theorem::b, Theorem::c, Theorem::ss,
                    Theorem::catalan, Theorem::stirling, Theorem::symmetry,
                    Theorem::table5, Theorem::all})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::a: return "a";
    case Theorem::b: return "b";
    case Theorem::c: return "c";
    case Theorem::ss: return "ss";
    case Theorem::catalan: return "catalan";
    case Theorem::stirling: return "stirling";
    case Theorem::symmetry: return "symmetry";
    case Theorem::table5: return "table5";
    case Theorem::all: return "all";
  }
  return "?";
}

Report verify(Theorem theorem, unsigned n_max, unsigned k_max,
              const EnumerationOptions& options) {
  switch (theorem) {
    case Theorem::a: return theorem_a(n_max, k_max, options);
    case Theorem::b: return theorem_b(n_max, k_max, options);
    case Theorem::c: return theorem_c(n_max, options);
    case Theorem::ss: return theorem_ss(n_max, options);
    case Theorem::catalan: return theorem_catalan(n_max, k_max, options);
    case Theorem::stirling: return theorem_stirling(n_max, options);
    case Theorem::symmetry: return theorem_symmetry(n_max, k_max, options);
    case Theorem::table5: return theorem_table5(n_max, k_max, options);
    case Theorem::all: break;
  }

  Report all{"all", {}, {}};
  std::vector<std::string> summaries;
  for (Theorem t : {Theorem::a, Theorem::b, Theorem::c, Theorem::ss,
                    Theorem::catalan, Theorem::stirling, Theorem::symmetry,
                    Theorem::table5}) {
    Report part = verify(t, n_max, k_max, options);
    summaries.push_back(std::string(to_string(t)) + " " + part.summary);
    std::move(part.rows.begin(), part.rows.end(), std::back_inserter(all.rows));
  }
  all.summary = all.passed() ? "PASS" : "FAIL";
  for (const auto& s : summaries) all.summary += " | " + s;
  return all;
}

Report verify_conjecture(unsigned r, unsigned n_max,
                         const EnumerationOptions& options) {
  if (r == 0) throw DomainError("r must be >= 1");
  if (std::size_t{r} * n_max > options.max_symbols)
    throw ResourceError("r*n_max = " + std::to_string(std::size_t{r} * n_max) +
                        " exceeds the symbol limit of " +
                        std::to_string(options.max_symbols));
  const auto first = PatternSet::parse("123,121");
  const auto second = PatternSet::parse("132,212");
  Report report{"conjecture r=" + num(r), {}, {}};
  std::optional<unsigned> first_mismatch;
  for (unsigned n = 0; n <= n_max; ++n) {
    const BigInt formula = conjecture_formula(r, n);
    const BigInt x = count_avoiders({n, r}, first, options);
    const BigInt y = count_avoiders({n, r}, second, options);
    const bool ok = formula == x && formula == y;
    if (!ok && !first_mismatch) first_mismatch = n;
    report.rows.push_back({"conjecture n=" + num(n) + " r=" + num(r),
                           {{"n", num(n)},
                            {"r", num(r)},
                            {"formula", num(formula)},
                            {"avoid_123_121", num(x)},
                            {"avoid_132_212", num(y)}},
                           ok});
  }
  if (first_mismatch)
    report.summary = "conjecture: mismatch at (r=" + num(r) +
                     ", n=" + num(*first_mismatch) + ")";
  else
    report.summary = "conjecture: consistent up to (r=" + num(r) +
                     ", n=" + num(n_max) + "); not a proof";
  return report;
}

Report sequence_table(int id, unsigned k_min, unsigned k_max, unsigned n_count,
                      bool check, std::size_t check_symbols,
                      const EnumerationOptions& options) {
  if (id != 2 && id != 3 && id != 6)
    throw DomainError("table id must be 2, 3 or 6");
  if (k_min == 0 || k_min > k_max) throw DomainError("need 1 <= k_min <= k_max");

  EnumerationOptions o = options;
  o.max_symbols = std::min(o.max_symbols, check_symbols);

  Report report;
  report.title = "table " + std::to_string(id);
  std::size_t checked = 0;
  for (unsigned k = k_min; k <= k_max; ++k) {
    std::string name;
    std::optional<PatternSet> patterns;
    std::vector<BigInt> values;
    for (unsigned n = 0; n < n_count; ++n) {
      switch (id) {
        case 2:
          values.push_back(a_k(k, n));
          break;
        case 3:
          values.push_back(k == 1 ? catalan_k(2, n) : b_k(k, n));
          break;
        default:
          values.push_back(d_k(k, n));
          break;
      }
    }
    switch (id) {
      case 2:
        name = k == 1 ? "Fibonacci" : "Fibonacci-" + num(k);
        patterns = fib_k_patterns();
        break;
      case 3:
        name = k == 1 ? "Catalan" : num(k) + "-Fibonacci";
        patterns = PatternSet::parse("112,132");
        break;
      default:
        name = num(k) + "-Fibonacci-" + num(k);
        if (k == 1) patterns = PatternSet::parse("123,132,213");
        break;
    }

    std::string joined;
    for (const auto& v : values) {
      if (!joined.empty()) joined += ",";
      joined += num(v);
    }
    ReportRow row{"k=" + num(k),
                  {{"k", num(k)}, {"name", name}, {"values", joined}},
                  true};
    if (check) {
      std::string brute;
      for (unsigned n = 0; n < n_count; ++n) {
        if (!brute.empty()) brute += ",";
        if (!patterns || std::size_t{n} * k > check_symbols) {
          brute += "-";
          continue;
        }
        const BigInt c = count_avoiders({n, k}, *patterns, o);
        ++checked;
        brute += num(c);
        row.pass = row.pass && c == values[n];
      }
      row.fields.push_back({"patterns", patterns ? patterns->str() : "-"});
      row.fields.push_back({"brute", brute});
    }
    report.rows.push_back(std::move(row));
  }
  if (check)
    report.summary = std::string(report.passed() ? "PASS" : "FAIL") + ": " +
                     std::to_string(checked) + " cells checked by brute force";
  else
    report.summary = std::to_string(report.rows.size()) + " rows";
  return report;
}

std::vector<std::vector<PatternSet>> pair_classes() {
  std::vector<std::vector<PatternSet>> classes;
  auto less = [](const PatternSet& a, const PatternSet& b) {
    return a.str() < b.str();
  };
  std::vector<PatternSet> pairs;
  for (const auto& alpha : classical_length_three())
    for (const auto& beta : two_value_length_three())
      pairs.push_back(PatternSet{alpha, beta});
  std::sort(pairs.begin(), pairs.end(), less);

  std::vector<bool> used(pairs.size(), false);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (used[i]) continue;
    std::vector<PatternSet> orbit;
    for (Symmetry s : kSquareSymmetries) {
      PatternSet image = transform(pairs[i], s);
      if (std::find(orbit.begin(), orbit.end(), image) == orbit.end())
        orbit.push_back(image);
    }
    for (const auto& member : orbit) {
      auto it = std::find(pairs.begin(), pairs.end(), member);
      if (it != pairs.end()) used[static_cast<std::size_t>(it - pairs.begin())] = true;
    }
    std::sort(orbit.begin(), orbit.end(), less);
    classes.push_back(std::move(orbit));
  }
  return classes;
}

}  // namespace kregular
