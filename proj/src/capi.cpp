#include "kregular/kregular.h"

#include <exception>
#include <string>
#include <string_view>
#include <vector>

#include "kregular/construct.hpp"
#include "kregular/enumerate.hpp"
#include "kregular/error.hpp"
#include "kregular/sequences.hpp"
#include "kregular/verify.hpp"

struct kr_context {
  kregular::EnumerationOptions options;
  std::string last_error;
};

struct kr_strings {
  std::vector<std::string> items;
};

struct kr_report {
  kregular::Report report;
};

namespace {

using namespace kregular;

// Runs fn, translating exceptions into status codes and recording the
// message on the context.
template <typename Fn>
kr_status guarded(kr_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return KR_ERROR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    fn();
    return KR_OK;
  } catch (const ParseError& e) {
    ctx->last_error = e.what();
    return KR_ERROR_PARSE;
  } catch (const DomainError& e) {
    ctx->last_error = e.what();
    return KR_ERROR_INVALID_ARGUMENT;
  } catch (const ResourceError& e) {
    ctx->last_error = e.what();
    return KR_ERROR_RESOURCE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return KR_ERROR_INTERNAL;
  } catch (...) {
    ctx->last_error = "unknown error";
    return KR_ERROR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

std::string_view text(const char* s, const char* what) {
  require(s != nullptr, what);
  return s;
}

unsigned to_unsigned(long long v, const char* what) {
  if (v < 0 || v > 1'000'000) throw DomainError(what);
  return static_cast<unsigned>(v);
}

kr_strings* words_to_strings(const std::vector<Word>& words) {
  auto* out = new kr_strings;
  out->items.reserve(words.size());
  for (const auto& w : words) out->items.push_back(w.str());
  return out;
}

std::vector<BigInt> named_sequence(std::string_view name,
                                   const kr_seq_params* p, unsigned count) {
  static const kr_seq_params defaults{1, 0, 1, 1, 1, 1};
  const kr_seq_params& q = p ? *p : defaults;
  std::vector<BigInt> out;
  out.reserve(count);

  auto each = [&](auto term) {
    for (unsigned n = 0; n < count; ++n) out.push_back(term(n));
  };

  if (name == "fibk") {
    const unsigned k = to_unsigned(q.k, "k must be >= 0");
    return general_prefix({1, 1, 1, k}, count);
  }
  if (name == "kfib") {
    const unsigned k = to_unsigned(q.k, "k must be >= 0");
    return general_prefix({1, 1, k, 1}, count);
  }
  if (name == "dk") {
    const unsigned k = to_unsigned(q.k, "k must be >= 0");
    return general_prefix({1, 1, k, k}, count);
  }
  if (name == "general")
    return general_prefix({q.b0, q.b1, q.k1, q.k2}, count);
  if (name == "c") {
    each([](unsigned n) { return fib_squared_c(n); });
  } else if (name == "cprime") {
    return c_prime_prefix(count);
  } else if (name == "cdoubleprime") {
    return c_double_prime_prefix(count);
  } else if (name == "catalank") {
    const unsigned k = to_unsigned(q.k, "k must be >= 1");
    require(k >= 1, "catalank needs k >= 1");
    each([k](unsigned n) { return catalan_k(k, n); });
  } else if (name == "stirling") {
    each([](unsigned n) { return double_factorial_odd(n); });
  } else if (name == "conjecture") {
    const unsigned r = to_unsigned(q.r, "r must be >= 1");
    require(r >= 1, "conjecture needs r >= 1");
    each([r](unsigned n) { return conjecture_formula(r, n); });
  } else if (auto row = parse_table5_row(name)) {
    const unsigned r = to_unsigned(q.r, "r must be >= 1");
    each([&](unsigned n) { return table5_formula(*row, r, n); });
  } else {
    throw ParseError("unknown sequence '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace

extern "C" {

const char* kr_version(void) { return "0.1.0"; }

const char* kr_status_string(kr_status status) {
  switch (status) {
    case KR_OK: return "ok";
    case KR_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case KR_ERROR_PARSE: return "parse error";
    case KR_ERROR_RESOURCE: return "resource limit exceeded";
    case KR_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

kr_status kr_context_create(kr_context** out) {
  if (out == nullptr) return KR_ERROR_INVALID_ARGUMENT;
  try {
    *out = new kr_context;
  } catch (...) {
    *out = nullptr;
    return KR_ERROR_INTERNAL;
  }
  return KR_OK;
}

void kr_context_destroy(kr_context* ctx) { delete ctx; }

kr_status kr_context_set_max_symbols(kr_context* ctx, size_t max_symbols) {
  return guarded(ctx, [&] { ctx->options.max_symbols = max_symbols; });
}

kr_status kr_context_set_threads(kr_context* ctx, unsigned threads) {
  return guarded(ctx, [&] {
    require(threads >= 1, "threads must be >= 1");
    ctx->options.threads = threads;
  });
}

const char* kr_context_last_error(const kr_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

size_t kr_strings_size(const kr_strings* list) {
  return list ? list->items.size() : 0;
}

const char* kr_strings_at(const kr_strings* list, size_t index) {
  if (list == nullptr || index >= list->items.size()) return nullptr;
  return list->items[index].c_str();
}

void kr_strings_destroy(kr_strings* list) { delete list; }

kr_status kr_count(kr_context* ctx, unsigned n, unsigned k,
                   const char* patterns, kr_strings** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    const auto ps = PatternSet::parse(text(patterns, "null pattern set"));
    const BigInt count = count_avoiders({n, k}, ps, ctx->options);
    *out = new kr_strings{{count.str()}};
  });
}

kr_status kr_list(kr_context* ctx, unsigned n, unsigned k, const char* patterns,
                  kr_method method, kr_strings** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    const auto ps = PatternSet::parse(text(patterns, "null pattern set"));
    if (method == KR_METHOD_CONSTRUCT) {
      validate({n, k});
      auto family = identify_family(ps, k);
      if (!family)
        throw DomainError("no constructive generator for {" + ps.str() +
                          "} with k=" + std::to_string(k));
      *out = words_to_strings(construct_sorted(*family, n, k));
      return;
    }
    require(method == KR_METHOD_BRUTE, "unknown method");
    auto cls = enumerate_avoiders({n, k}, ps, ctx->options);
    *out = words_to_strings(*cls.words);
  });
}

kr_status kr_sequence(kr_context* ctx, const char* name,
                      const kr_seq_params* params, unsigned count,
                      kr_strings** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    auto values = named_sequence(text(name, "null sequence name"), params, count);
    auto* list = new kr_strings;
    list->items.reserve(values.size());
    for (const auto& v : values) list->items.push_back(v.str());
    *out = list;
  });
}

kr_status kr_standard_partition(kr_context* ctx, const char* word, unsigned n,
                                unsigned k, kr_strings** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    validate({n, k});
    auto part = standard_partition(Word::parse(text(word, "null word")), {n, k});
    *out = new kr_strings{{part.annex.str(), part.base.str()}};
  });
}

kr_status kr_annexes(kr_context* ctx, unsigned n, kr_strings** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    *out = words_to_strings(prefix_tree_annexes(n));
  });
}

kr_status kr_prefix_tree_dot(kr_context* ctx, unsigned n, kr_strings** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    *out = new kr_strings{{PrefixTree(n).to_dot()}};
  });
}

kr_status kr_verify(kr_context* ctx, const char* theorem, unsigned n_max,
                    unsigned k_max, kr_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    const auto name = text(theorem, "null theorem");
    auto t = parse_theorem(name);
    if (!t) throw ParseError("unknown theorem '" + std::string(name) + "'");
    *out = new kr_report{verify(*t, n_max, k_max, ctx->options)};
  });
}

kr_status kr_conjecture(kr_context* ctx, unsigned r, unsigned n_max,
                        kr_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    *out = new kr_report{verify_conjecture(r, n_max, ctx->options)};
  });
}

kr_status kr_table(kr_context* ctx, int id, unsigned k_min, unsigned k_max,
                   unsigned n_count, int check, size_t check_symbols,
                   kr_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    *out = new kr_report{sequence_table(id, k_min, k_max, n_count, check != 0,
                                        check_symbols, ctx->options)};
  });
}

const char* kr_report_title(const kr_report* r) {
  return r ? r->report.title.c_str() : nullptr;
}

const char* kr_report_summary(const kr_report* r) {
  return r ? r->report.summary.c_str() : nullptr;
}

int kr_report_passed(const kr_report* r) {
  return r && r->report.passed() ? 1 : 0;
}

size_t kr_report_row_count(const kr_report* r) {
  return r ? r->report.rows.size() : 0;
}

const char* kr_report_row_label(const kr_report* r, size_t row) {
  if (!r || row >= r->report.rows.size()) return nullptr;
  return r->report.rows[row].label.c_str();
}

int kr_report_row_passed(const kr_report* r, size_t row) {
  if (!r || row >= r->report.rows.size()) return 0;
  return r->report.rows[row].pass ? 1 : 0;
}

size_t kr_report_field_count(const kr_report* r, size_t row) {
  if (!r || row >= r->report.rows.size()) return 0;
  return r->report.rows[row].fields.size();
}

const char* kr_report_field_name(const kr_report* r, size_t row, size_t field) {
  if (!r || row >= r->report.rows.size()) return nullptr;
  const auto& fields = r->report.rows[row].fields;
  return field < fields.size() ? fields[field].name.c_str() : nullptr;
}

const char* kr_report_field_value(const kr_report* r, size_t row, size_t field) {
  if (!r || row >= r->report.rows.size()) return nullptr;
  const auto& fields = r->report.rows[row].fields;
  return field < fields.size() ? fields[field].value.c_str() : nullptr;
}

void kr_report_destroy(kr_report* r) { delete r; }

}  // extern "C"
