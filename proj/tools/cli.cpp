#include "cli.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kregular/kregular.h"
#include "output.hpp"

namespace kregular::cli {

namespace {

struct ContextDeleter {
  void operator()(kr_context* c) const { kr_context_destroy(c); }
};
struct StringsDeleter {
  void operator()(kr_strings* s) const { kr_strings_destroy(s); }
};
struct ReportDeleter {
  void operator()(kr_report* r) const { kr_report_destroy(r); }
};
using ContextPtr = std::unique_ptr<kr_context, ContextDeleter>;
using StringsPtr = std::unique_ptr<kr_strings, StringsDeleter>;
using ReportPtr = std::unique_ptr<kr_report, ReportDeleter>;

// Carries a library failure up to run() so it can pick the exit code.
struct LibraryFailure : std::runtime_error {
  kr_status status;
  LibraryFailure(kr_status s, const std::string& msg)
      : std::runtime_error(msg), status(s) {}
};

void check(kr_status status, const kr_context* ctx) {
  if (status == KR_OK) return;
  std::string msg = kr_context_last_error(ctx);
  if (msg.empty()) msg = kr_status_string(status);
  throw LibraryFailure(status, msg);
}

Json strings_json(const kr_strings* s) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < kr_strings_size(s); ++i) arr.push_back(kr_strings_at(s, i));
  return arr;
}

Json report_json(const kr_report* r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < kr_report_row_count(r); ++i) {
    Json fields = Json::object();
    for (std::size_t f = 0; f < kr_report_field_count(r, i); ++f)
      fields[kr_report_field_name(r, i, f)] = kr_report_field_value(r, i, f);
    rows.push_back(Json{{"label", kr_report_row_label(r, i)},
                        {"pass", kr_report_row_passed(r, i) != 0},
                        {"fields", std::move(fields)}});
  }
  return Json{{"title", kr_report_title(r)},
              {"passed", kr_report_passed(r) != 0},
              {"summary", kr_report_summary(r)},
              {"rows", std::move(rows)}};
}

struct Globals {
  std::string format = "text";
  std::size_t max_symbols = 24;
  unsigned threads = 1;
  bool no_timing = false;
};

struct Args {
  unsigned n = 0, k = 1;
  std::string patterns;
  std::string method = "brute";
  std::string name;
  long long seq_k = 1, b0 = 0, b1 = 1, k1 = 1, k2 = 1, r = 1;
  unsigned count = 8;
  std::string theorem = "all";
  unsigned n_max = 5, k_max = 3;
  int table_id = 2;
  unsigned k_min = 1, table_k_max = 9, n_count = 8;
  bool check = false;
  std::size_t check_limit = 18;
  std::string word;
};

// One subcommand: builds the query echo and runs the library call.
struct Command {
  std::function<Json()> query;
  std::function<Json(kr_context*, bool& failed)> execute;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern avoidance in k-regular words", "kregular"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  Args a;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-symbols", g.max_symbols, "Upper bound on k*n for enumeration");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", g.no_timing, "Omit elapsed_ms");

  std::map<CLI::App*, Command> commands;

  auto* count = app.add_subcommand("count", "Count avoiders");
  count->add_option("--n", a.n)->required();
  count->add_option("--k", a.k)->required();
  count->add_option("--patterns", a.patterns)->required();
  commands[count] = {
      [&] { return Json{{"command", "count"}, {"n", a.n}, {"k", a.k}, {"patterns", a.patterns}}; },
      [&](kr_context* ctx, bool&) {
        kr_strings* raw = nullptr;
        check(kr_count(ctx, a.n, a.k, a.patterns.c_str(), &raw), ctx);
        StringsPtr s(raw);
        return Json{{"count", kr_strings_at(s.get(), 0)}};
      }};

  auto* list = app.add_subcommand("list", "List avoiders in lexicographic order");
  list->add_option("--n", a.n)->required();
  list->add_option("--k", a.k)->required();
  list->add_option("--patterns", a.patterns)->required();
  list->add_option("--method", a.method)->check(CLI::IsMember({"brute", "construct"}));
  commands[list] = {
      [&] {
        return Json{{"command", "list"}, {"n", a.n}, {"k", a.k},
                    {"patterns", a.patterns}, {"method", a.method}};
      },
      [&](kr_context* ctx, bool&) {
        kr_strings* raw = nullptr;
        const kr_method m = a.method == "construct" ? KR_METHOD_CONSTRUCT : KR_METHOD_BRUTE;
        check(kr_list(ctx, a.n, a.k, a.patterns.c_str(), m, &raw), ctx);
        StringsPtr s(raw);
        Json words = strings_json(s.get());
        const std::size_t size = words.size();
        return Json{{"count", std::to_string(size)}, {"words", std::move(words)}};
      }};

  auto* seq = app.add_subcommand("seq", "Print a sequence prefix");
  seq->add_option("--name", a.name)->required();
  seq->add_option("--k", a.seq_k);
  seq->add_option("--r", a.r);
  seq->add_option("--b0", a.b0);
  seq->add_option("--b1", a.b1);
  seq->add_option("--k1", a.k1);
  seq->add_option("--k2", a.k2);
  seq->add_option("--count", a.count);
  commands[seq] = {
      [&] {
        Json q{{"command", "seq"}, {"name", a.name}, {"count", a.count}};
        if (a.name == "general") {
          q["b0"] = a.b0;
          q["b1"] = a.b1;
          q["k1"] = a.k1;
          q["k2"] = a.k2;
        } else {
          q["k"] = a.seq_k;
          q["r"] = a.r;
        }
        return q;
      },
      [&](kr_context* ctx, bool&) {
        const kr_seq_params p{a.seq_k, a.b0, a.b1, a.k1, a.k2, a.r};
        kr_strings* raw = nullptr;
        check(kr_sequence(ctx, a.name.c_str(), &p, a.count, &raw), ctx);
        StringsPtr s(raw);
        return Json{{"values", strings_json(s.get())}};
      }};

  auto* verify = app.add_subcommand("verify", "Cross-check counts, generators and recurrences");
  verify->add_option("--theorem", a.theorem)
      ->check(CLI::IsMember({"a", "b", "c", "ss", "catalan", "stirling", "symmetry",
                             "table5", "all"}));
  verify->add_option("--n-max", a.n_max);
  verify->add_option("--k-max", a.k_max);
  commands[verify] = {
      [&] {
        return Json{{"command", "verify"}, {"theorem", a.theorem},
                    {"n_max", a.n_max}, {"k_max", a.k_max}};
      },
      [&](kr_context* ctx, bool& failed) {
        kr_report* raw = nullptr;
        check(kr_verify(ctx, a.theorem.c_str(), a.n_max, a.k_max, &raw), ctx);
        ReportPtr r(raw);
        failed = kr_report_passed(r.get()) == 0;
        return report_json(r.get());
      }};

  auto* conj = app.add_subcommand("conjecture", "Test the 123/121 conjecture formula");
  conj->add_option("--r", a.r)->required();
  conj->add_option("--n-max", a.n_max)->required();
  commands[conj] = {
      [&] { return Json{{"command", "conjecture"}, {"r", a.r}, {"n_max", a.n_max}}; },
      [&](kr_context* ctx, bool& failed) {
        if (a.r < 1) throw LibraryFailure(KR_ERROR_INVALID_ARGUMENT, "r must be >= 1");
        kr_report* raw = nullptr;
        check(kr_conjecture(ctx, static_cast<unsigned>(a.r), a.n_max, &raw), ctx);
        ReportPtr r(raw);
        failed = kr_report_passed(r.get()) == 0;
        return report_json(r.get());
      }};

  auto* table = app.add_subcommand("table", "Reproduce a sequence table");
  table->add_option("--id", a.table_id)->required()->check(CLI::IsMember({2, 3, 6}));
  table->add_option("--k-min", a.k_min);
  table->add_option("--k-max", a.table_k_max);
  table->add_option("--n-count", a.n_count);
  table->add_flag("--check", a.check, "Recount small cells by enumeration");
  table->add_option("--check-limit", a.check_limit, "Largest k*n recounted");
  commands[table] = {
      [&] {
        Json q{{"command", "table"}, {"id", a.table_id}, {"k_min", a.k_min},
               {"k_max", a.table_k_max}, {"n_count", a.n_count}, {"check", a.check}};
        if (a.check) q["check_limit"] = a.check_limit;
        return q;
      },
      [&](kr_context* ctx, bool& failed) {
        kr_report* raw = nullptr;
        check(kr_table(ctx, a.table_id, a.k_min, a.table_k_max, a.n_count, a.check ? 1 : 0,
                       a.check_limit, &raw),
              ctx);
        ReportPtr r(raw);
        failed = kr_report_passed(r.get()) == 0;
        return report_json(r.get());
      }};

  auto* part = app.add_subcommand("partition", "Standard partition of a word");
  part->add_option("--word", a.word)->required();
  part->add_option("--n", a.n)->required();
  part->add_option("--k", a.k)->required();
  commands[part] = {
      [&] { return Json{{"command", "partition"}, {"word", a.word}, {"n", a.n}, {"k", a.k}}; },
      [&](kr_context* ctx, bool&) {
        kr_strings* raw = nullptr;
        check(kr_standard_partition(ctx, a.word.c_str(), a.n, a.k, &raw), ctx);
        StringsPtr s(raw);
        return Json{{"annex", kr_strings_at(s.get(), 0)}, {"base", kr_strings_at(s.get(), 1)}};
      }};

  auto* annexes = app.add_subcommand("annexes", "Annex catalog of the prefix tree");
  annexes->add_option("--n", a.n)->required();
  commands[annexes] = {
      [&] { return Json{{"command", "annexes"}, {"n", a.n}}; },
      [&](kr_context* ctx, bool&) {
        kr_strings* raw = nullptr;
        check(kr_annexes(ctx, a.n, &raw), ctx);
        StringsPtr s(raw);
        return Json{{"words", strings_json(s.get())}};
      }};

  auto* tree = app.add_subcommand("tree", "Prefix tree in Graphviz dot");
  tree->add_option("--n", a.n)->required();
  commands[tree] = {
      [&] { return Json{{"command", "tree"}, {"n", a.n}}; },
      [&](kr_context* ctx, bool&) {
        kr_strings* raw = nullptr;
        check(kr_prefix_tree_dot(ctx, a.n, &raw), ctx);
        StringsPtr s(raw);
        return Json{{"dot", kr_strings_at(s.get(), 0)}};
      }};

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const Command& cmd = commands.at(chosen);

  try {
    kr_context* raw = nullptr;
    if (kr_context_create(&raw) != KR_OK) throw std::runtime_error("context allocation failed");
    ContextPtr ctx(raw);
    check(kr_context_set_max_symbols(ctx.get(), g.max_symbols), ctx.get());
    check(kr_context_set_threads(ctx.get(), g.threads), ctx.get());

    OutputRecord record;
    record.query = cmd.query();
    bool failed = false;
    const auto t0 = std::chrono::steady_clock::now();
    record.result = cmd.execute(ctx.get(), failed);
    const auto t1 = std::chrono::steady_clock::now();
    if (!g.no_timing)
      record.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    out << render(record, *parse_format(g.format));
    return failed ? kExitVerificationFailed : kExitOk;
  } catch (const LibraryFailure& e) {
    err << "error: " << e.what() << "\n";
    switch (e.status) {
      case KR_ERROR_INVALID_ARGUMENT:
      case KR_ERROR_PARSE: return kExitUsage;
      case KR_ERROR_RESOURCE: return kExitResource;
      default: return kExitInternal;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace kregular::cli
