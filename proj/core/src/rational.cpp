#include "ppp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace ppp {

bool is_integral(const Rational& q) { return q.denominator() == 1; }

namespace {

using i128 = __int128;

bool fits64(i128 v) {
  return v >= INT64_MIN && v <= INT64_MAX;
}

}  // namespace

Rational parse_decimal(const std::string& text) {
  const char* p = text.c_str();
  bool neg = false;
  if (*p == '+' || *p == '-') {
    neg = (*p == '-');
    ++p;
  }
  i128 mantissa = 0;
  int digits = 0, frac_digits = 0;
  bool seen_digit = false, overflow = false;
  for (; std::isdigit(static_cast<unsigned char>(*p)); ++p) {
    if (digits < 37) {
      mantissa = mantissa * 10 + (*p - '0');
      ++digits;
    } else {
      overflow = true;
    }
    seen_digit = true;
  }
  if (*p == '.') {
    ++p;
    for (; std::isdigit(static_cast<unsigned char>(*p)); ++p) {
      if (digits < 37) {
        mantissa = mantissa * 10 + (*p - '0');
        ++digits;
        ++frac_digits;
      } else {
        overflow = true;
      }
      seen_digit = true;
    }
  }
  if (!seen_digit) throw ParseError("not a decimal number: '" + text + "'");
  long exponent = 0;
  if (*p == 'e' || *p == 'E') {
    char* end = nullptr;
    exponent = std::strtol(p + 1, &end, 10);
    if (end == p + 1) throw ParseError("bad exponent in '" + text + "'");
    p = end;
  }
  if (*p != '\0') throw ParseError("trailing characters in '" + text + "'");

  long pow10 = exponent - frac_digits;  // value = mantissa * 10^pow10
  i128 num = neg ? -mantissa : mantissa;
  i128 den = 1;
  bool range_ok = !overflow;
  for (long k = 0; range_ok && k < pow10; ++k) {
    num *= 10;
    if (!fits64(num)) range_ok = false;
  }
  for (long k = 0; range_ok && k < -pow10; ++k) {
    den *= 10;
    if (!fits64(den)) range_ok = false;
  }
  if (range_ok && fits64(num) && fits64(den)) {
    return Rational(static_cast<std::int64_t>(num),
                    static_cast<std::int64_t>(den));
  }

  // Out-of-range exact representation. Values this library reads are
  // solver outputs within variable bounds; round to a fixed 1e-12 grid.
  double d = std::strtod(text.c_str(), nullptr);
  if (std::abs(d) < 1e-9) return Rational(0);
  if (std::abs(d) > 9e5) throw ParseError("value out of range: '" + text + "'");
  return Rational(std::llround(d * 1e12), 1000000000000LL);
}

std::string decimal_string(const Rational& q) {
  if (q.numerator() == 0) return "0";
  bool neg = q.numerator() < 0;
  i128 num = q.numerator();
  if (neg) num = -num;
  std::int64_t den = q.denominator();

  // Terminating decimal iff the reduced denominator is 2^a * 5^b.
  std::int64_t d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d == 1) {
    int shift = std::max(twos, fives);
    for (int k = 0; k < shift - twos; ++k) num *= 2;
    for (int k = 0; k < shift - fives; ++k) num *= 5;
    // num / 10^shift is now exact.
    std::string digits;
    i128 v = num;
    while (v > 0) { digits.push_back(char('0' + int(v % 10))); v /= 10; }
    while (static_cast<int>(digits.size()) <= shift) digits.push_back('0');
    std::reverse(digits.begin(), digits.end());
    std::string out = neg ? "-" : "";
    out += digits.substr(0, digits.size() - shift);
    if (shift > 0) {
      std::string frac = digits.substr(digits.size() - shift);
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      if (!frac.empty()) out += "." + frac;
    }
    return out;
  }

  // Non-terminating: 17 significant digits, correctly rounded (half up).
  constexpr int kSig = 17;
  i128 ip = num / den;
  std::string int_digits;
  {
    i128 v = ip;
    while (v > 0) { int_digits.push_back(char('0' + int(v % 10))); v /= 10; }
    std::reverse(int_digits.begin(), int_digits.end());
  }
  std::vector<int> sig;
  for (char c : int_digits) sig.push_back(c - '0');
  i128 rem = num % den;
  int leading_zero_frac = 0;
  std::string frac_digits;
  while (static_cast<int>(sig.size()) < kSig) {
    rem *= 10;
    int dig = static_cast<int>(rem / den);
    rem %= den;
    if (sig.empty() && dig == 0) {
      ++leading_zero_frac;
      frac_digits.push_back('0');
    } else {
      sig.push_back(dig);
      frac_digits.push_back(char('0' + dig));
    }
  }
  // Round on the next digit.
  rem *= 10;
  if (rem / den >= 5) {
    for (int k = static_cast<int>(sig.size()) - 1; k >= 0; --k) {
      if (++sig[k] < 10) break;
      sig[k] = 0;
      if (k == 0) sig.insert(sig.begin(), 1);
    }
  }
  // Reassemble: the first int_digits.size() significant digits are the
  // integer part (plus a possible carry digit), the rest are fractional.
  std::size_t int_len = int_digits.size();
  if (sig.size() > static_cast<std::size_t>(kSig)) ++int_len;  // carry
  if (int_len == 0 && leading_zero_frac == 0) int_len = 0;
  std::string out = neg ? "-" : "";
  if (int_len == 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(leading_zero_frac), '0');
    for (int v : sig) out.push_back(char('0' + v));
  } else {
    for (std::size_t k = 0; k < int_len; ++k) out.push_back(char('0' + sig[k]));
    out += ".";
    for (std::size_t k = int_len; k < sig.size(); ++k)
      out.push_back(char('0' + sig[k]));
  }
  while (out.find('.') != std::string::npos && out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

}  // namespace ppp
