#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ncg {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", "p" and plain decimals such as "3.5" or "-0.25".
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& r);

// A rational number or +infinity. Infinity is absorbing under addition and
// compares above every finite value.
class ExtRational {
public:
  ExtRational() = default;
  ExtRational(Rational value) : _value(value) {}
  ExtRational(std::int64_t value) : _value(Rational(value)) {}
  ExtRational(int value) : _value(Rational(value)) {}

  static ExtRational infinity() {
    ExtRational e;
    e._value.reset();
    return e;
  }

  bool is_infinite() const { return !_value.has_value(); }
  bool is_finite() const { return _value.has_value(); }

  // Throws std::logic_error when infinite.
  const Rational& value() const;

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  ExtRational& operator+=(const ExtRational& other) {
    *this = *this + other;
    return *this;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a._value == b._value;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b);

private:
  std::optional<Rational> _value{Rational(0)};
};

// "inf" or the canonical rational form.
std::string to_string(const ExtRational& r);
ExtRational parse_ext_rational(std::string_view text);

// a - b where a is finite or infinite and b is finite; infinite minus finite
// is infinite. Throws std::logic_error when b is infinite.
ExtRational difference(const ExtRational& a, const ExtRational& b);

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

} // namespace ncg
