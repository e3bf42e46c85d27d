#include "ncg/rational.h"

#include <charconv>
#include <limits>
#include <stdexcept>

#include "ncg/errors.h"

namespace ncg {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_integer(trim(text.substr(0, slash)), whole);
    const auto den = parse_integer(trim(text.substr(slash + 1)), whole);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(whole) + "'");
    }
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (frac_part.size() > 15 || int_part.empty() || frac_part.empty()) {
      throw ParseError("not a rational number: '" + std::string(whole) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
      scale *= 10;
    }
    const std::int64_t ip = int_part.empty() ? 0 : parse_integer(int_part, whole);
    const std::int64_t fp = frac_part.empty() ? 0 : parse_integer(frac_part, whole);
    if (ip < 0 || fp < 0 || ip > std::numeric_limits<std::int64_t>::max() / scale) {
      throw ParseError("not a rational number: '" + std::string(whole) + "'");
    }
    Rational r(ip * scale + fp, scale);
    return negative ? -r : r;
  }
  return Rational(parse_integer(text, whole));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) {
    return std::to_string(r.numerator());
  }
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

const Rational& ExtRational::value() const {
  if (!_value) {
    throw std::logic_error("value() called on an infinite quantity");
  }
  return *_value;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return ExtRational::infinity();
  }
  return ExtRational(*a._value + *b._value);
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  if (*a._value < *b._value) {
    return std::strong_ordering::less;
  }
  if (*b._value < *a._value) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const ExtRational& r) {
  return r.is_infinite() ? std::string("inf") : to_string(r.value());
}

ExtRational parse_ext_rational(std::string_view text) {
  const auto t = trim(text);
  if (t == "inf" || t == "INF" || t == "infinity") {
    return ExtRational::infinity();
  }
  return ExtRational(parse_rational(t));
}

ExtRational difference(const ExtRational& a, const ExtRational& b) {
  if (b.is_infinite()) {
    throw std::logic_error("cannot subtract an infinite quantity");
  }
  if (a.is_infinite()) {
    return a;
  }
  return ExtRational(a.value() - b.value());
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) {
  return os << to_string(r);
}

} // namespace ncg
