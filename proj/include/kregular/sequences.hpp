#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kregular/bigint.hpp"

namespace kregular {

// f(n) = k1 f(n-1) + k2 f(n-2), f(0) = b0, f(1) = b1.
struct RecurrenceSpec {
  BigInt b0;
  BigInt b1;
  BigInt k1;
  BigInt k2;
};

BigInt eval_general(const RecurrenceSpec& spec, unsigned n);
// f(0..count-1) in one pass.
std::vector<BigInt> general_prefix(const RecurrenceSpec& spec, unsigned count);

// Fibonacci-k numbers: a(n-1) + k a(n-2), bases 1, 1.
BigInt a_k(unsigned k, unsigned n);
// k-Fibonacci numbers: k b(n-1) + b(n-2), bases 1, 1.
BigInt b_k(unsigned k, unsigned n);
// k-Fibonacci-k numbers: k d(n-1) + k d(n-2), bases 1, 1.
BigInt d_k(unsigned k, unsigned n);

// c(n) = a_1(n)^2.
BigInt fib_squared_c(unsigned n);
// c'(n) = 2c'(n-1) + 2c'(n-2) - c'(n-3), bases 1, 1, 4.
BigInt c_prime(unsigned n);
// c''(n) = c''(n-1) + 3c''(n-2) + 2 sum_{i=3..n} c''(n-i), bases 1, 1.
BigInt c_double_prime(unsigned n);
std::vector<BigInt> c_double_prime_prefix(unsigned count);
std::vector<BigInt> c_prime_prefix(unsigned count);

// binomial(a, b) = a (a-1) ... (a-b+1) / b!, valid for negative a.
BigInt binomial(const BigInt& a, unsigned b);

// Number of k-ary trees with n nodes: binomial(kn, n) / ((k-1)n + 1).
BigInt catalan_k(unsigned k, unsigned n);

// (2n-1)!! = 1 * 3 * ... * (2n-1); 1 for n = 0.
BigInt double_factorial_odd(unsigned n);

// sum_{i=0..n} binomial(n, i) / (n-i+1) * binomial(n + (r-1) i - 1, n-i),
// evaluated exactly; throws ConsistencyError if the total is not integral.
BigInt conjecture_formula(unsigned r, unsigned n);

// Closed forms for the rows of the (alpha, beta) pair table, indexed so that
// value(n) is the number of r-regular words over [n] in the class.
enum class Table5Row {
  pell_1_rplus1,  // {132,221}: 1, then the (1, r+1)-based Pell numbers
  linear,         // {132,211}: r(n-1) + 1, with 1 at n = 0
  degenerate,     // {123,211}: 1, 1, r+1, 0, 0, ...
};

std::optional<Table5Row> parse_table5_row(std::string_view name);
std::string_view to_string(Table5Row row);

BigInt table5_formula(Table5Row row, unsigned r, unsigned n);

}  // namespace kregular
