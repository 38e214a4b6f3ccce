// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. argv[1] is the path of the kregular executable (used by
// the determinism check).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kregular/construct.hpp"
#include "kregular/enumerate.hpp"
#include "kregular/sequences.hpp"
#include "kregular/verify.hpp"
#include "oracle.hpp"

using namespace kregular;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;  // keep the first failure
    pass = false;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

PatternSet ps(const char* s) { return PatternSet::parse(s); }

std::set<Word> set_of(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

std::set<Word> words(std::initializer_list<const char*> list) {
  std::set<Word> out;
  for (auto s : list) out.insert(Word::parse(s));
  return out;
}

std::set<Word> brute(unsigned n, unsigned k, const char* p) {
  return set_of(*enumerate_avoiders({n, k}, ps(p)).words);
}

std::string cell(unsigned n, unsigned k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

std::vector<BigInt> row(std::initializer_list<unsigned long long> values) {
  return {values.begin(), values.end()};
}

Outcome golden_sets() {
  Outcome o;
  const char* a = "121,123,132,213";
  o.expect(brute(0, 2, a) == std::set<Word>{Word{}}, "a n=0");
  o.expect(brute(1, 2, a) == words({"11"}), "a n=1");
  o.expect(brute(2, 2, a) == words({"1122", "2112", "2211"}), "a n=2");
  o.expect(brute(3, 2, a) == words({"223311", "322311", "331122", "332112", "332211"}), "a n=3");

  const char* b = "122,213";
  o.expect(brute(0, 2, b).size() == 1, "b n=0");
  o.expect(brute(1, 2, b) == words({"11"}), "b n=1");
  o.expect(brute(2, 2, b) == words({"2112", "2121", "2211"}), "b n=2");
  o.expect(brute(3, 2, b) == words({"322311", "332112", "323112", "332211", "323211", "332121",
                                    "323121"}),
           "b n=3");

  const char* c = "v:121,123,132,213";
  o.expect(brute(0, 2, c).size() == 1, "c n=0");
  o.expect(brute(1, 2, c) == words({"11"}), "c n=1");
  o.expect(brute(2, 2, c) == words({"1122", "1221", "2112", "2211"}), "c n=2");
  o.expect(brute(3, 2, c) == words({"223311", "233112", "233211", "322311", "323112", "331122",
                                    "331221", "332112", "332211"}),
           "c n=3");

  o.expect(brute(3, 2, "212") ==
               words({"112233", "112332", "113322", "122133", "122331", "123321", "133122",
                      "133221", "221133", "221331", "223311", "233211", "331122", "331221",
                      "332211"}),
           "Stirling n=3");
  if (o.pass) o.detail = "13 word sets equal";
  return o;
}

Outcome figure_counts() {
  Outcome o;
  const auto a_brute = brute(4, 3, "121,123,132,213");
  const auto a_built = generate_fib_k(4, 3);
  o.expect(a_brute.size() == 19, "brute |Av_4^3{121,123,132,213}| != 19");
  o.expect(a_built.size() == 19 && set_of(a_built) == a_brute, "fib_k generator differs");

  const auto b_brute = brute(4, 3, "122,213");
  const auto b_built = generate_k_fib(4, 3);
  o.expect(b_brute.size() == 43, "brute |Av_4^3{122,213}| != 43");
  o.expect(b_built.size() == 43 && set_of(b_built) == b_brute, "k_fib generator differs");

  const auto c_brute = brute(4, 2, "v:121,123,132,213");
  const auto c_built = generate_fib_squared(4);
  o.expect(c_brute.size() == 25, "brute |Av_4^2{v:121,...}| != 25");
  o.expect(c_built.size() == 25 && set_of(c_built) == c_brute, "fib_squared generator differs");
  if (o.pass) o.detail = "19, 43, 25 by both methods";
  return o;
}

Outcome theorem_a() {
  Outcome o;
  int cells = 0;
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = 0; n <= 6; ++n) {
      if (n * k > 20) continue;
      ++cells;
      o.expect(count_avoiders({n, k}, ps("121,123,132,213")) == a_k(k, n), cell(n, k));
    }
  if (o.pass) o.detail = std::to_string(cells) + " cells";
  return o;
}

Outcome theorem_b() {
  Outcome o;
  int cells = 0;
  for (unsigned k = 2; k <= 4; ++k)
    for (unsigned n = 0; n <= 6; ++n) {
      if (n * k > 20) continue;
      ++cells;
      o.expect(count_avoiders({n, k}, ps("122,213")) == b_k(k, n), cell(n, k));
    }
  if (o.pass) o.detail = std::to_string(cells) + " cells";
  return o;
}

Outcome theorem_c() {
  Outcome o;
  const auto expect = row({1, 1, 4, 9, 25, 64, 169, 441});
  for (unsigned n = 0; n <= 7; ++n) {
    const BigInt got = count_avoiders({n, 2}, ps("v:121,123,132,213"));
    o.expect(got == expect[n], "n=" + std::to_string(n));
    o.expect(a_k(1, n) * a_k(1, n) == expect[n], "a_1(n)^2 at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "1,1,4,9,25,64,169,441";
  return o;
}

Outcome lemma_19() {
  Outcome o;
  const auto cp = c_prime_prefix(201);
  const auto cpp = c_double_prime_prefix(201);
  for (unsigned n = 0; n <= 200; ++n) {
    const BigInt c = fib_squared_c(n);
    o.expect(cp[n] == c && cpp[n] == c, "n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n = 0..200";
  return o;
}

Outcome tables() {
  Outcome o;
  const std::vector<std::vector<BigInt>> t2{
      row({1, 1, 2, 3, 5, 8, 13, 21}),        row({1, 1, 3, 5, 11, 21, 43, 85}),
      row({1, 1, 4, 7, 19, 40, 97, 217}),     row({1, 1, 5, 9, 29, 65, 181, 441}),
      row({1, 1, 6, 11, 41, 96, 301, 781}),   row({1, 1, 7, 13, 55, 133, 463, 1261}),
      row({1, 1, 8, 15, 71, 176, 673, 1905}), row({1, 1, 9, 17, 89, 225, 937, 2737}),
      row({1, 1, 10, 19, 109, 280, 1261, 3781})};
  const std::vector<std::vector<BigInt>> t3{
      row({1, 1, 2, 5, 14, 42, 132, 429}),
      row({1, 1, 3, 7, 17, 41, 99, 239}),
      row({1, 1, 4, 13, 43, 142, 469, 1549}),
      row({1, 1, 5, 21, 89, 377, 1597, 6765}),
      row({1, 1, 6, 31, 161, 836, 4341, 22541}),
      row({1, 1, 7, 43, 265, 1633, 10063, 62011}),
      row({1, 1, 8, 57, 407, 2906, 20749, 148149}),
      row({1, 1, 9, 73, 593, 4817, 39129, 317849}),
      row({1, 1, 10, 91, 829, 7552, 68797, 626725})};
  const std::vector<std::vector<BigInt>> t6{
      row({1, 1, 2, 3, 5, 8, 13, 21}),
      row({1, 1, 4, 10, 28, 76, 208, 568}),
      row({1, 1, 6, 21, 81, 306, 1161, 4401}),
      row({1, 1, 8, 36, 176, 848, 4096, 19776}),
      row({1, 1, 10, 55, 325, 1900, 11125, 65125}),
      row({1, 1, 12, 78, 540, 3708, 25488, 175176}),
      row({1, 1, 14, 105, 833, 6566, 51793, 408513}),
      row({1, 1, 16, 136, 1216, 10816, 96256, 856576}),
      row({1, 1, 18, 171, 1701, 16848, 166941, 1654101})};

  int printed = 0, brute_cells = 0;
  for (unsigned k = 1; k <= 9; ++k)
    for (unsigned n = 0; n < 8; ++n) {
      const std::string where = cell(n, k);
      o.expect(a_k(k, n) == t2[k - 1][n], "table 2 " + where);
      o.expect((k == 1 ? catalan_k(2, n) : b_k(k, n)) == t3[k - 1][n], "table 3 " + where);
      o.expect(d_k(k, n) == t6[k - 1][n], "table 6 " + where);
      printed += 3;
      if (n * k > 18) continue;
      o.expect(count_avoiders({n, k}, ps("121,123,132,213")) == t2[k - 1][n],
               "table 2 brute " + where);
      o.expect(count_avoiders({n, k}, ps(k == 1 ? "132" : "112,132")) == t3[k - 1][n],
               "table 3 brute " + where);
      brute_cells += 2;
      if (k == 1) {
        o.expect(count_avoiders({n, 1}, ps("123,132,213")) == t6[0][n], "table 6 brute " + where);
        ++brute_cells;
      }
    }
  // the library's own table report must agree as well
  for (int id : {2, 3, 6})
    o.expect(sequence_table(id, 1, 9, 8, true, 18).passed(), "table report " + std::to_string(id));
  if (o.pass)
    o.detail = std::to_string(printed) + " printed cells, " + std::to_string(brute_cells) +
               " recounted";
  return o;
}

Outcome classical() {
  Outcome o;
  for (unsigned n = 0; n <= 9; ++n)
    o.expect(count_avoiders({n, 1}, ps("123,132,213")) == eval_general({0, 1, 1, 1}, n + 1),
             "Fibonacci n=" + std::to_string(n));
  for (unsigned n = 0; n <= 8; ++n) {
    o.expect(count_avoiders({n, 1}, ps("123")) == catalan_k(2, n), "Av{123} n=" + std::to_string(n));
    o.expect(count_avoiders({n, 1}, ps("213")) == catalan_k(2, n), "Av{213} n=" + std::to_string(n));
  }
  for (unsigned n = 0; n <= 6; ++n)
    o.expect(count_avoiders({n, 2}, ps("212")) == double_factorial_odd(n),
             "Stirling n=" + std::to_string(n));
  if (o.pass) o.detail = "F(n+1) to 9, Cat to 8, (2n-1)!! to 6";
  return o;
}

Outcome k_catalan() {
  Outcome o;
  for (unsigned k = 2; k <= 3; ++k)
    for (unsigned n = 0; n <= 4; ++n) {
      const BigInt kat = catalan_k(k, n);
      for (const char* pair : {"212,312", "221,231", "112,123"})
        o.expect(count_avoiders({n, k - 1}, ps(pair)) == kat,
                 std::string(pair) + " " + cell(n, k - 1));
    }
  if (o.pass) o.detail = "3 pairs x k in {2,3} x n <= 4";
  return o;
}

Outcome symmetry() {
  Outcome o;
  std::vector<Pattern> pool = classical_length_three();
  for (auto& p : two_value_length_three()) pool.push_back(p);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<unsigned> nd(0, 5), kd(1, 3), sized(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const unsigned n = nd(rng), k = kd(rng);
    std::vector<Pattern> chosen;
    for (unsigned j = sized(rng); j > 0; --j) chosen.push_back(pool[pick(rng)]);
    const PatternSet set(chosen);
    const BigInt base = count_avoiders({n, k}, set);
    for (auto s : kSquareSymmetries)
      o.expect(count_avoiders({n, k}, transform(set, s)) == base,
               set.str() + " " + cell(n, k) + " " + std::string(to_string(s)));
  }

  const auto classes = pair_classes();
  o.expect(classes.size() == 9, "expected 9 pair classes");
  for (const auto& cls : classes)
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned n = 0; n <= 4; ++n) {
        const BigInt first = count_avoiders({n, r}, cls.front());
        for (const auto& member : cls)
          o.expect(count_avoiders({n, r}, member) == first,
                   "class of " + cls.front().str() + " at " + cell(n, r));
      }
  if (o.pass) o.detail = "200 random cases, 9 classes";
  return o;
}

Outcome conjecture() {
  Outcome o;
  std::vector<std::pair<unsigned, unsigned>> ranges{{2, 5}, {3, 5}};
  if (4u * 4u <= kDefaultMaxSymbols) ranges.emplace_back(4, 4);
  std::string tested;
  for (auto [r, n_max] : ranges) {
    for (unsigned n = 0; n <= n_max; ++n) {
      const BigInt f = conjecture_formula(r, n);
      o.expect(count_avoiders({n, r}, ps("123,121")) == f, "{123,121} " + cell(n, r));
      o.expect(count_avoiders({n, r}, ps("132,212")) == f, "{132,212} " + cell(n, r));
    }
    const auto report = verify_conjecture(r, n_max);
    o.expect(report.passed() && report.summary.find("not a proof") != std::string::npos,
             "report for r=" + std::to_string(r));
    tested += (tested.empty() ? "" : ", ") + std::string("r=") + std::to_string(r) +
              " n<=" + std::to_string(n_max);
  }
  if (o.pass) o.detail = "consistent up to tested range (" + tested + "); not a proof";
  return o;
}

// Compares the pruned search against a classification of every length-3
// subsequence of every regular word. The patterns are all classical and of
// length 3, so a word avoids a set exactly when none of the set's shapes
// occurs among its triples.
Outcome oracle_equivalence() {
  Outcome o;
  std::vector<Pattern> pool = classical_length_three();
  for (auto& p : two_value_length_three()) pool.push_back(p);
  std::vector<unsigned> shape(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& s = pool[i].symbols();
    shape[i] = oracle::shape3(s[0], s[1], s[2]);
  }

  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t i = 0; i < pool.size(); ++i) sets.push_back({i});
  std::mt19937_64 rng(0x0ac1e);
  std::uniform_int_distribution<unsigned> mask_d(1, (1u << pool.size()) - 1);
  std::set<unsigned> used;
  while (used.size() < 100) {
    const unsigned m = mask_d(rng);
    if (__builtin_popcount(m) < 2 || !used.insert(m).second) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (m & (1u << i)) members.push_back(i);
    sets.push_back(members);
  }

  std::size_t checked = 0;
  for (unsigned k = 1; k <= 10; ++k)
    for (unsigned n = 0; n * k <= 10; ++n) {
      // all words of the profile in lexicographic order, with their shapes
      std::vector<unsigned> letters;
      for (unsigned x = 1; x <= n; ++x)
        for (unsigned c = 0; c < k; ++c) letters.push_back(x);
      const std::size_t L = letters.size();
      std::vector<unsigned char> flat;
      std::vector<std::uint32_t> shapes;
      do {
        flat.insert(flat.end(), letters.begin(), letters.end());
        shapes.push_back(oracle::triple_shapes(letters).classical);
      } while (std::next_permutation(letters.begin(), letters.end()));

      for (const auto& members : sets) {
        std::uint32_t forbidden = 0;
        std::vector<Pattern> chosen;
        for (auto i : members) {
          forbidden |= 1u << shape[i];
          chosen.push_back(pool[i]);
        }
        const PatternSet set(chosen);
        const auto got = *enumerate_avoiders({n, k}, set).words;
        std::size_t g = 0;
        bool same = true;
        for (std::size_t w = 0; w < shapes.size() && same; ++w) {
          if (shapes[w] & forbidden) continue;
          if (g >= got.size() || got[g].size() != L) {
            same = false;
            break;
          }
          for (std::size_t j = 0; j < L; ++j)
            if (got[g][j] != flat[w * L + j]) same = false;
          ++g;
        }
        same = same && g == got.size();
        o.expect(same, set.str() + " " + cell(n, k));
        ++checked;
      }
    }
  if (o.pass)
    o.detail = std::to_string(sets.size()) + " sets, " + std::to_string(checked) + " classes";
  return o;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.fail("no executable given");
    return o;
  }
  for (const char* format : {"text", "json"}) {
    const std::string base = "'" + cli + "' verify --theorem all --no-timing --format " + format;
    int s1 = 0, s4 = 0;
    const auto one = capture(base + " --threads 1", s1);
    const auto four = capture(base + " --threads 4", s4);
    o.expect(s1 == 0 && s4 == 0, std::string(format) + ": non-zero exit");
    o.expect(!one.empty() && one == four, std::string(format) + ": outputs differ");
  }
  if (o.pass) o.detail = "verify --theorem all, text and json";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "golden word sets", 1.0, golden_sets},
      {2, "figure-caption counts", 5.0, figure_counts},
      {3, "Fibonacci-k counts", 60.0, theorem_a},
      {4, "k-Fibonacci counts", 0, theorem_b},
      {5, "Fibonacci-squared counts", 0, theorem_c},
      {6, "c = c' = c''", 0.1, lemma_19},
      {7, "sequence tables", 0, tables},
      {8, "classical results", 0, classical},
      {9, "k-Catalan pairs", 0, k_catalan},
      {10, "symmetry", 0, symmetry},
      {11, "conjecture", 120.0, conjecture},
      {12, "oracle equivalence", 0, oracle_equivalence},
      {13, "determinism", 0, [&] { return determinism(cli); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      std::ostringstream msg;
      msg << "over the " << c.limit_s << " s limit";
      o.fail(msg.str());
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2d  %-26s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
