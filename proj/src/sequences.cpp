#include "kregular/sequences.hpp"

#include <string>

#include "kregular/error.hpp"

namespace kregular {

std::vector<BigInt> general_prefix(const RecurrenceSpec& spec, unsigned count) {
  std::vector<BigInt> out;
  out.reserve(count);
  if (count > 0) out.push_back(spec.b0);
  if (count > 1) out.push_back(spec.b1);
  for (unsigned n = 2; n < count; ++n)
    out.push_back(spec.k1 * out[n - 1] + spec.k2 * out[n - 2]);
  return out;
}

BigInt eval_general(const RecurrenceSpec& spec, unsigned n) {
  if (n == 0) return spec.b0;
  BigInt prev = spec.b0;
  BigInt cur = spec.b1;
  for (unsigned i = 2; i <= n; ++i) {
    BigInt next = spec.k1 * cur + spec.k2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt a_k(unsigned k, unsigned n) { return eval_general({1, 1, 1, k}, n); }
BigInt b_k(unsigned k, unsigned n) { return eval_general({1, 1, k, 1}, n); }
BigInt d_k(unsigned k, unsigned n) { return eval_general({1, 1, k, k}, n); }

BigInt fib_squared_c(unsigned n) {
  BigInt f = a_k(1, n);
  return f * f;
}

std::vector<BigInt> c_prime_prefix(unsigned count) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (unsigned n = 0; n < count; ++n) {
    if (n <= 1)
      out.emplace_back(1);
    else if (n == 2)
      out.emplace_back(4);
    else
      out.push_back(2 * out[n - 1] + 2 * out[n - 2] - out[n - 3]);
  }
  return out;
}

BigInt c_prime(unsigned n) { return c_prime_prefix(n + 1).back(); }

std::vector<BigInt> c_double_prime_prefix(unsigned count) {
  std::vector<BigInt> out;
  out.reserve(count);
  // running = c''(0) + ... + c''(n-3)
  BigInt running = 0;
  for (unsigned n = 0; n < count; ++n) {
    if (n <= 1) {
      out.emplace_back(1);
      continue;
    }
    if (n >= 3) running += out[n - 3];
    out.push_back(out[n - 1] + 3 * out[n - 2] + 2 * running);
  }
  return out;
}

BigInt c_double_prime(unsigned n) { return c_double_prime_prefix(n + 1).back(); }

BigInt binomial(const BigInt& a, unsigned b) {
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned j = 0; j < b; ++j) {
    num *= a - j;
    den *= j + 1;
  }
  // A product of b consecutive integers is divisible by b!.
  return num / den;
}

BigInt catalan_k(unsigned k, unsigned n) {
  if (k == 0) throw DomainError("catalan_k needs k >= 1");
  const BigInt top = BigInt(k) * n;
  const BigInt den = BigInt(k - 1) * n + 1;
  BigInt c = binomial(top, n);
  if (c % den != 0)
    throw ConsistencyError("k-ary Catalan division is not exact");
  return c / den;
}

BigInt double_factorial_odd(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 1; i <= n; ++i) out *= 2 * i - 1;
  return out;
}

BigInt conjecture_formula(unsigned r, unsigned n) {
  if (r == 0) throw DomainError("conjecture formula needs r >= 1");
  BigRational total = 0;
  for (unsigned i = 0; i <= n; ++i) {
    const BigInt top = BigInt(n) + BigInt(r - 1) * i - 1;
    const BigInt term = binomial(BigInt(n), i) * binomial(top, n - i);
    total += BigRational(term, BigInt(n - i + 1));
  }
  if (boost::multiprecision::denominator(total) != 1)
    throw ConsistencyError("conjecture formula is not integral at r=" +
                           std::to_string(r) + ", n=" + std::to_string(n));
  return boost::multiprecision::numerator(total);
}

std::optional<Table5Row> parse_table5_row(std::string_view name) {
  if (name == "pell_1_rplus1") return Table5Row::pell_1_rplus1;
  if (name == "linear") return Table5Row::linear;
  if (name == "degenerate") return Table5Row::degenerate;
  return std::nullopt;
}

std::string_view to_string(Table5Row row) {
  switch (row) {
    case Table5Row::pell_1_rplus1: return "pell_1_rplus1";
    case Table5Row::linear: return "linear";
    case Table5Row::degenerate: return "degenerate";
  }
  return "?";
}

BigInt table5_formula(Table5Row row, unsigned r, unsigned n) {
  switch (row) {
    case Table5Row::pell_1_rplus1:
      if (n == 0) return 1;
      return eval_general({1, BigInt(r) + 1, 2, 1}, n - 1);
    case Table5Row::linear:
      if (n == 0) return 1;
      return BigInt(r) * (n - 1) + 1;
    case Table5Row::degenerate:
      if (n <= 1) return 1;
      if (n == 2) return BigInt(r) + 1;
      return 0;
  }
  throw DomainError("unknown table row");
}

}  // namespace kregular
