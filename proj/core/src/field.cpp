#include "comatrix/field.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace comatrix {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ArithmeticOverflow("rational arithmetic exceeded 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Scalar reduce(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return {0, 1};
  i128 g = gcd128(n, d);
  return {narrow(n / g), narrow(d / g)};
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw InvalidStructure("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::int64_t{1} << 31)) throw InvalidStructure("prime field characteristic must be below 2^31");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

std::optional<std::int64_t> Field::order() const {
  if (kind_ == Kind::Prime) return p_;
  return std::nullopt;
}

std::string Field::name() const {
  if (kind_ == Kind::Prime) return "F" + std::to_string(p_);
  return "QQ";
}

Field Field::parse_name(std::string_view text) {
  if (text == "QQ") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    std::int64_t p = parse_int(text.substr(1));
    return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected F<p> or QQ)");
}

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::Prime) {
    std::int64_t r = v % p_;
    return {r < 0 ? r + p_ : r, 1};
  }
  return {v, 1};
}

Scalar Field::from_fraction(std::int64_t n, std::int64_t d) const {
  if (kind_ == Kind::Prime) return div(from_int(n), from_int(d));
  return reduce(n, d);
}

Scalar Field::inv(Scalar a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (kind_ == Kind::Prime) {
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a.num;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return {t < 0 ? t + p_ : t, 1};
  }
  return reduce(a.den, a.num);
}

Scalar Field::rational_add(Scalar a, Scalar b) const {
  i128 n = i128(a.num) * b.den + i128(b.num) * a.den;
  i128 d = i128(a.den) * b.den;
  return reduce(n, d);
}

Scalar Field::rational_mul(Scalar a, Scalar b) const {
  if (a.is_zero() || b.is_zero()) return {0, 1};
  return reduce(i128(a.num) * b.num, i128(a.den) * b.den);
}

std::string Field::format(Scalar a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Scalar Field::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_int(text));
  std::int64_t n = parse_int(text.substr(0, slash));
  std::int64_t d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (kind_ == Kind::Prime && from_int(d).is_zero()) {
    throw std::invalid_argument("denominator not invertible in " + name() + ": '" + std::string(text) + "'");
  }
  return from_fraction(n, d);
}

}  // namespace comatrix
