#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "comatrix/error.hpp"

namespace comatrix {

/// Canonical field element. Over F_p `num` is the residue in [0, p) and
/// `den` is 1; over Q the fraction is reduced with a positive denominator.
/// Equal values therefore have identical bits.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool is_zero() const { return num == 0; }
  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

/// The exact ground field: a prime field F_p or the rationals.
class Field {
 public:
  enum class Kind : std::uint8_t { Prime, Rationals };

  /// Defaults to Q so that containers of matrices are default constructible.
  Field() = default;

  /// Throws InvalidStructure unless p is a prime below 2^31.
  static Field prime(std::int64_t p);
  static Field rationals() { return Field{}; }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Prime; }
  std::int64_t characteristic() const { return p_; }
  /// Number of elements, or nullopt over Q.
  std::optional<std::int64_t> order() const;

  std::string name() const;
  /// Accepts "F<p>" or "QQ".
  static Field parse_name(std::string_view text);

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return {1, 1}; }
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(std::int64_t n, std::int64_t d) const;

  Scalar add(Scalar a, Scalar b) const {
    if (kind_ == Kind::Prime) {
      std::int64_t s = a.num + b.num;
      return {s >= p_ ? s - p_ : s, 1};
    }
    return rational_add(a, b);
  }
  Scalar neg(Scalar a) const {
    if (kind_ == Kind::Prime) return {a.num == 0 ? 0 : p_ - a.num, 1};
    return {-a.num, a.den};
  }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const {
    if (kind_ == Kind::Prime) return {(a.num * b.num) % p_, 1};
    return rational_mul(a, b);
  }
  /// Throws std::domain_error on zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  std::string format(Scalar a) const;
  /// Integer or "n/d" literal; n/d is rejected over F_p only when d is not invertible.
  Scalar parse(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Scalar rational_add(Scalar a, Scalar b) const;
  Scalar rational_mul(Scalar a, Scalar b) const;

  Kind kind_ = Kind::Rationals;
  std::int64_t p_ = 0;
};

bool is_prime(std::int64_t n);

}  // namespace comatrix
