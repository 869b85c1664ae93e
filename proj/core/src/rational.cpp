#include "quboc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace quboc {

std::string to_string(const Rational& value) { return value.str(); }

Rational rational_from_string(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  const std::string trimmed = text.substr(begin, end - begin);
  if (trimmed.empty()) {
    throw std::invalid_argument("empty rational literal");
  }

  const auto check_digits = [](const std::string& part, bool sign_ok) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (sign_ok && (part[0] == '+' || part[0] == '-')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };

  const std::size_t slash = trimmed.find('/');
  if (slash != std::string::npos) {
    const std::string num = trimmed.substr(0, slash);
    const std::string den = trimmed.substr(slash + 1);
    if (!check_digits(num, true) || !check_digits(den, false)) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    BigInt d(den);
    if (d == 0) {
      throw std::invalid_argument("zero denominator in rational literal: " + text);
    }
    return Rational(BigInt(num), d);
  }

  const std::size_t dot = trimmed.find('.');
  if (dot != std::string::npos) {
    std::string integral = trimmed.substr(0, dot);
    const std::string frac = trimmed.substr(dot + 1);
    bool negative = false;
    if (!integral.empty() && (integral[0] == '+' || integral[0] == '-')) {
      negative = integral[0] == '-';
      integral = integral.substr(1);
    }
    if (integral.empty() && frac.empty()) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    if ((!integral.empty() && !check_digits(integral, false)) ||
        (!frac.empty() && !check_digits(frac, false))) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    BigInt numer = integral.empty() ? BigInt(0) : BigInt(integral);
    BigInt denom = 1;
    for (char c : frac) {
      numer = numer * 10 + (c - '0');
      denom *= 10;
    }
    Rational result(numer, denom);
    return negative ? Rational(-result) : result;
  }

  if (!check_digits(trimmed, true)) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  return Rational(BigInt(trimmed));
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool is_integer(const Rational& value) { return denominator(value) == 1; }

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) {
    --q;
  }
  return q;
}

BigInt rational_floor(const Rational& value) {
  return floor_div(numerator(value), denominator(value));
}

BigInt rational_ceil(const Rational& value) {
  return -floor_div(-numerator(value), denominator(value));
}

}  // namespace quboc
