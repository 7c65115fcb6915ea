#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace bicoalg {

/// Base field of a document: the rationals, or F_p for a prime p.
struct Field {
  std::uint64_t p = 0;  // 0 selects Q

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// Exact field element.
///
/// Rationals live in lowest terms with a positive denominator. Small values use
/// an int64 numerator/denominator pair; anything that overflows is promoted to
/// a GMP rational and demoted again as soon as it fits. Residues modulo p are
/// kept in [0, p). Integer and rational values mix freely with residues: they
/// are mapped into F_p on first contact, so generators can emit plain integer
/// matrices that serve both fields.
class Scalar {
 public:
  Scalar() noexcept = default;

  template <std::integral I>
  Scalar(I n) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_unsigned_v<I> && sizeof(I) >= sizeof(std::int64_t)) {
      if (n > static_cast<I>(INT64_MAX)) {
        *this = from_mpq(mpq_class(mpz_class(std::to_string(n))));
        return;
      }
    }
    a_ = static_cast<std::int64_t>(n);
  }

  static Scalar fraction(std::int64_t num, std::int64_t den);
  static Scalar from_mpq(const mpq_class& q);
  static Scalar residue(std::int64_t value, std::uint64_t p);

  /// Parses "a", "-a", "a/b" (Q) or a decimal integer (F_p).
  static Scalar parse(std::string_view text, const Field& field);

  bool is_zero() const noexcept;
  bool is_one() const;
  bool is_residue() const noexcept { return kind_ == Kind::Mod; }
  /// Modulus of a residue, 0 for rationals.
  std::uint64_t modulus() const noexcept { return kind_ == Kind::Mod ? static_cast<std::uint64_t>(b_) : 0; }

  /// Same value viewed in `field` (rationals are reduced mod p).
  Scalar in_field(const Field& field) const;

  /// Lowest-terms "p/q", integer, or residue text.
  std::string str() const;

  Scalar inverse() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  friend bool operator==(const Scalar& x, const Scalar& y);

 private:
  enum class Kind : std::uint8_t { Small, Big, Mod };

  static Scalar normalized(const mpq_class& q);
  static Scalar small_from_i128(__int128 num, __int128 den);
  mpq_class to_mpq() const;
  Scalar to_residue(std::uint64_t p) const;

  Kind kind_ = Kind::Small;
  std::int64_t a_ = 0;  // numerator, or residue
  std::int64_t b_ = 1;  // denominator, or modulus
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace bicoalg
