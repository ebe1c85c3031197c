#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "rgl/errors.hpp"

namespace rgl {

// Expression templates off: `auto` on arithmetic results stays a value.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(Integer(num), Integer(den));
}

/// Canonical "p/q" form; the denominator is always written, so "2/1" not "2".
inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// Parses "p/q" or a bare integer "p". Anything else is a parse_error.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw parse_error("not a rational: '" + std::string(text) + "'");
    return Rational(to_int(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw parse_error("not a rational: '" + std::string(text) + "'");
  Integer d = to_int(den);
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  return Rational(to_int(num), d);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact rational extended by the two symbolic infinities.
class Rank {
 public:
  enum class Kind : std::int8_t { neg_inf = -1, finite = 0, pos_inf = 1 };

  Rank() = default;
  Rank(const Rational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)
  Rank(int v) : value_(v) {}              // NOLINT(google-explicit-constructor)

  static Rank infinity() { return Rank(Kind::pos_inf); }
  static Rank neg_infinity() { return Rank(Kind::neg_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  const Rational& value() const {
    if (!is_finite()) throw std::logic_error("value() of an infinite rank");
    return value_;
  }

  int sign() const {
    if (!is_finite()) return static_cast<int>(kind_);
    return value_ > 0 ? 1 : (value_ < 0 ? -1 : 0);
  }

  Rank operator-() const {
    if (is_pos_inf()) return neg_infinity();
    if (is_neg_inf()) return infinity();
    return Rank(-value_);
  }

  friend Rank operator+(const Rank& a, const Rank& b) {
    if (a.is_finite() && b.is_finite()) return Rank(a.value_ + b.value_);
    if (!a.is_finite() && !b.is_finite() && a.kind_ != b.kind_)
      throw indeterminate_form("(+inf) + (-inf)");
    return a.is_finite() ? b : a;
  }
  friend Rank operator-(const Rank& a, const Rank& b) { return a + (-b); }
  Rank& operator+=(const Rank& o) { return *this = *this + o; }
  Rank& operator-=(const Rank& o) { return *this = *this - o; }

  friend Rank operator*(const Rational& s, const Rank& r) {
    if (r.is_finite()) return Rank(s * r.value_);
    if (s == 0) throw indeterminate_form("0 * inf");
    return s > 0 ? r : -r;
  }

  friend bool operator==(const Rank& a, const Rank& b) {
    return a.kind_ == b.kind_ && (!a.is_finite() || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Rank& a, const Rank& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (!a.is_finite()) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    return to_string(value_);
  }
  double to_double() const {
    if (is_pos_inf()) return std::numeric_limits<double>::infinity();
    if (is_neg_inf()) return -std::numeric_limits<double>::infinity();
    return rgl::to_double(value_);
  }

  static Rank parse(std::string_view text) {
    if (text == "inf" || text == "+inf") return infinity();
    if (text == "-inf") return neg_infinity();
    return Rank(parse_rational(text));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rank& r) { return os << r.str(); }

 private:
  explicit Rank(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  Rational value_ = 0;
};

inline Rank max(const Rank& a, const Rank& b) { return a < b ? b : a; }
inline Rank min(const Rank& a, const Rank& b) { return b < a ? b : a; }

/// Closed grading codomain [lo, hi].
struct RankInterval {
  Rank lo;
  Rank hi;

  RankInterval(Rank l, Rank h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw precondition_violation("rank interval with hi < lo: [" + lo.str() + ", " + hi.str() + "]");
  }

  bool contains(const Rank& r) const { return lo <= r && r <= hi; }
  bool bounded() const { return lo.is_finite() && hi.is_finite(); }
};

}  // namespace rgl
