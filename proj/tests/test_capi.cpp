#include <string>
#include <vector>

#include "doctest.h"
#include "kregular/kregular.h"

namespace {

struct Ctx {
  kr_context* ctx = nullptr;
  Ctx() { REQUIRE(kr_context_create(&ctx) == KR_OK); }
  ~Ctx() { kr_context_destroy(ctx); }
};

std::vector<std::string> take(kr_strings* s) {
  std::vector<std::string> out;
  for (size_t i = 0; i < kr_strings_size(s); ++i) out.emplace_back(kr_strings_at(s, i));
  kr_strings_destroy(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("count and list") {
  Ctx c;
  kr_strings* out = nullptr;
  REQUIRE(kr_count(c.ctx, 3, 2, "121,123,132,213", &out) == KR_OK);
  CHECK(take(out) == std::vector<std::string>{"5"});
  REQUIRE(kr_count(c.ctx, 3, 2, "v:121,123,132,213", &out) == KR_OK);
  CHECK(take(out) == std::vector<std::string>{"9"});
  REQUIRE(kr_list(c.ctx, 2, 2, "122,213", KR_METHOD_BRUTE, &out) == KR_OK);
  CHECK(take(out) == std::vector<std::string>{"2112", "2121", "2211"});
  REQUIRE(kr_list(c.ctx, 4, 3, "122,213", KR_METHOD_CONSTRUCT, &out) == KR_OK);
  auto construct = take(out);
  REQUIRE(kr_list(c.ctx, 4, 3, "122,213", KR_METHOD_BRUTE, &out) == KR_OK);
  CHECK(take(out) == construct);
  CHECK(construct.size() == 43);
}

TEST_CASE("errors map to status codes") {
  Ctx c;
  kr_strings* out = nullptr;
  CHECK(kr_count(c.ctx, 3, 2, "12x", &out) == KR_ERROR_PARSE);
  CHECK(std::string(kr_context_last_error(c.ctx)).find("12x") != std::string::npos);
  CHECK(kr_count(c.ctx, 13, 2, "123", &out) == KR_ERROR_RESOURCE);
  CHECK(kr_count(c.ctx, 3, 0, "123", &out) == KR_ERROR_INVALID_ARGUMENT);
  CHECK(kr_list(c.ctx, 3, 2, "212", KR_METHOD_CONSTRUCT, &out) == KR_ERROR_INVALID_ARGUMENT);
  CHECK(kr_count(c.ctx, 3, 2, nullptr, &out) == KR_ERROR_INVALID_ARGUMENT);
  CHECK(kr_count(c.ctx, 3, 2, "123", nullptr) == KR_ERROR_INVALID_ARGUMENT);
  CHECK(kr_count(nullptr, 3, 2, "123", &out) == KR_ERROR_INVALID_ARGUMENT);
  CHECK(kr_sequence(c.ctx, "nope", nullptr, 3, &out) == KR_ERROR_PARSE);
  kr_report* rep = nullptr;
  CHECK(kr_verify(c.ctx, "zz", 3, 2, &rep) == KR_ERROR_PARSE);
  CHECK(kr_context_set_threads(c.ctx, 0) == KR_ERROR_INVALID_ARGUMENT);
  // a successful call clears the message
  REQUIRE(kr_count(c.ctx, 1, 1, "123", &out) == KR_OK);
  kr_strings_destroy(out);
  CHECK(std::string(kr_context_last_error(c.ctx)).empty());
  CHECK(std::string(kr_status_string(KR_ERROR_RESOURCE)) == "resource limit exceeded");
}

TEST_CASE("symbol limit is configurable") {
  Ctx c;
  kr_strings* out = nullptr;
  REQUIRE(kr_context_set_max_symbols(c.ctx, 26) == KR_OK);
  REQUIRE(kr_count(c.ctx, 13, 2, "121,123,132,213", &out) == KR_OK);
  CHECK(take(out) == std::vector<std::string>{"5461"});
}

TEST_CASE("sequences") {
  Ctx c;
  kr_strings* out = nullptr;
  kr_seq_params p{2, 0, 1, 1, 1, 1};
  REQUIRE(kr_sequence(c.ctx, "fibk", &p, 7, &out) == KR_OK);
  CHECK(take(out) == std::vector<std::string>{"1", "1", "3", "5", "11", "21", "43"});
  kr_seq_params pell{1, 0, 1, 2, 1, 1};
  REQUIRE(kr_sequence(c.ctx, "general", &pell, 8, &out) == KR_OK);
  CHECK(take(out) == std::vector<std::string>{"0", "1", "2", "5", "12", "29", "70", "169"});
  REQUIRE(kr_sequence(c.ctx, "c", nullptr, 5, &out) == KR_OK);
  CHECK(take(out) == std::vector<std::string>{"1", "1", "4", "9", "25"});
  kr_seq_params r3{1, 0, 1, 1, 1, 3};
  REQUIRE(kr_sequence(c.ctx, "conjecture", &r3, 5, &out) == KR_OK);
  CHECK(take(out) == std::vector<std::string>{"1", "1", "4", "16", "71"});
  REQUIRE(kr_sequence(c.ctx, "pell_1_rplus1", &r3, 4, &out) == KR_OK);
  CHECK(take(out) == std::vector<std::string>{"1", "1", "4", "9"});
  for (const char* name : {"kfib", "dk", "cprime", "cdoubleprime", "catalank", "stirling",
                           "linear", "degenerate"}) {
    CAPTURE(name);
    REQUIRE(kr_sequence(c.ctx, name, &p, 6, &out) == KR_OK);
    CHECK(take(out).size() == 6);
  }
}

TEST_CASE("partition, annexes and tree") {
  Ctx c;
  kr_strings* out = nullptr;
  REQUIRE(kr_standard_partition(c.ctx, "656556443234322111", 6, 3, &out) == KR_OK);
  CHECK(take(out) == std::vector<std::string>{"656556", "443234322111"});
  REQUIRE(kr_annexes(c.ctx, 4, &out) == KR_OK);
  CHECK(take(out).size() == 8);
  REQUIRE(kr_prefix_tree_dot(c.ctx, 5, &out) == KR_OK);
  CHECK(take(out).front().find("digraph") != std::string::npos);
  CHECK(kr_prefix_tree_dot(c.ctx, 2, &out) == KR_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("reports") {
  Ctx c;
  kr_report* rep = nullptr;
  REQUIRE(kr_verify(c.ctx, "c", 5, 2, &rep) == KR_OK);
  CHECK(kr_report_passed(rep) == 1);
  REQUIRE(kr_report_row_count(rep) > 0);
  CHECK(kr_report_row_passed(rep, 0) == 1);
  CHECK(kr_report_field_count(rep, 0) > 0);
  CHECK(kr_report_field_name(rep, 0, 0) != nullptr);
  CHECK(kr_report_field_value(rep, 0, 999) == nullptr);
  CHECK(kr_report_row_label(rep, 999) == nullptr);
  CHECK(std::string(kr_report_summary(rep)).rfind("PASS", 0) == 0);
  kr_report_destroy(rep);

  REQUIRE(kr_conjecture(c.ctx, 2, 4, &rep) == KR_OK);
  CHECK(kr_report_passed(rep) == 1);
  kr_report_destroy(rep);

  REQUIRE(kr_table(c.ctx, 6, 1, 9, 8, 1, 18, &rep) == KR_OK);
  CHECK(kr_report_passed(rep) == 1);
  CHECK(kr_report_row_count(rep) == 9);
  kr_report_destroy(rep);
}

}
