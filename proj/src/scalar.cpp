#include "bicoalg/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace bicoalg {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 x, i128 y) {
  x = abs128(x);
  y = abs128(y);
  while (y != 0) {
    i128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

bool fits_i64(i128 x) { return x >= INT64_MIN && x <= INT64_MAX; }

std::string i128_str(i128 x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  u128 u = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(x) * y % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  i128 r = static_cast<i128>(v) % static_cast<i128>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % mpz_class(std::to_string(p));
  if (m < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; static_cast<u128>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p > (1ULL << 62)) {
    throw std::invalid_argument("F_p needs a prime p below 2^62, got " + std::to_string(p));
  }
  return Field{p};
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p); }

Scalar Scalar::small_from_i128(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (fits_i64(num) && fits_i64(den)) {
    Scalar s;
    s.a_ = static_cast<std::int64_t>(num);
    s.b_ = static_cast<std::int64_t>(den);
    return s;
  }
  mpq_class q(mpz_class(i128_str(num)), mpz_class(i128_str(den)));
  return normalized(q);
}

Scalar Scalar::fraction(std::int64_t num, std::int64_t den) { return small_from_i128(num, den); }

Scalar Scalar::normalized(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    Scalar s;
    s.a_ = c.get_num().get_si();
    s.b_ = c.get_den().get_si();
    return s;
  }
  Scalar s;
  s.kind_ = Kind::Big;
  s.big_ = std::make_shared<const mpq_class>(std::move(c));
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) { return normalized(q); }

Scalar Scalar::residue(std::int64_t value, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("residue modulus must be a prime");
  Scalar s;
  s.kind_ = Kind::Mod;
  s.a_ = static_cast<std::int64_t>(reduce_signed(value, p));
  s.b_ = static_cast<std::int64_t>(p);
  return s;
}

mpq_class Scalar::to_mpq() const {
  switch (kind_) {
    case Kind::Small:
      return mpq_class(mpz_class(std::to_string(a_)), mpz_class(std::to_string(b_)));
    case Kind::Big:
      return *big_;
    case Kind::Mod:
      break;
  }
  throw std::logic_error("residue has no rational value");
}

Scalar Scalar::to_residue(std::uint64_t p) const {
  if (kind_ == Kind::Mod) {
    if (static_cast<std::uint64_t>(b_) != p) {
      throw std::domain_error("mixing residues modulo " + std::to_string(b_) + " and " + std::to_string(p));
    }
    return *this;
  }
  std::uint64_t num = 0;
  std::uint64_t den = 0;
  if (kind_ == Kind::Small) {
    num = reduce_signed(a_, p);
    den = reduce_signed(b_, p);
  } else {
    num = reduce_mpz(big_->get_num(), p);
    den = reduce_mpz(big_->get_den(), p);
  }
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  Scalar s;
  s.kind_ = Kind::Mod;
  s.b_ = static_cast<std::int64_t>(p);
  s.a_ = static_cast<std::int64_t>(mul_mod(num, pow_mod(den, p - 2, p), p));
  return s;
}

Scalar Scalar::in_field(const Field& field) const {
  if (field.is_rational()) {
    if (kind_ == Kind::Mod) throw std::domain_error("cannot lift a residue to Q");
    return *this;
  }
  return to_residue(field.p);
}

Scalar Scalar::parse(std::string_view text, const Field& field) {
  auto parse_int = [&](std::string_view t) -> mpz_class {
    std::string s(t);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad scalar '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad scalar '" + std::string(text) + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
  };
  auto slash = text.find('/');
  if (!field.is_rational()) {
    if (slash != std::string_view::npos) {
      throw std::invalid_argument("F_p scalars are integers, got '" + std::string(text) + "'");
    }
    mpz_class z = parse_int(text);
    Scalar s;
    s.kind_ = Kind::Mod;
    s.b_ = static_cast<std::int64_t>(field.p);
    s.a_ = static_cast<std::int64_t>(reduce_mpz(z, field.p));
    return s;
  }
  if (slash == std::string_view::npos) return normalized(mpq_class(parse_int(text)));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return normalized(mpq_class(num, den));
}

bool Scalar::is_zero() const noexcept { return kind_ != Kind::Big && a_ == 0; }

bool Scalar::is_one() const {
  if (kind_ == Kind::Big) return false;
  return a_ == 1 && (kind_ == Kind::Mod || b_ == 1);
}

std::string Scalar::str() const {
  switch (kind_) {
    case Kind::Small:
      return b_ == 1 ? std::to_string(a_) : std::to_string(a_) + "/" + std::to_string(b_);
    case Kind::Big:
      return big_->get_str();
    case Kind::Mod:
      return std::to_string(a_);
  }
  return {};
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (kind_ == Kind::Mod) {
    auto p = static_cast<std::uint64_t>(b_);
    return residue(static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(a_), p - 2, p)), p);
  }
  if (kind_ == Kind::Small) return small_from_i128(b_, a_);
  return normalized(1 / *big_);
}

Scalar Scalar::operator-() const {
  if (kind_ == Kind::Mod) {
    Scalar s = *this;
    if (a_ != 0) s.a_ = b_ - a_;
    return s;
  }
  if (kind_ == Kind::Small) return small_from_i128(-static_cast<i128>(a_), b_);
  return normalized(-*big_);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  using K = Scalar::Kind;
  if (x.kind_ == K::Mod || y.kind_ == K::Mod) {
    std::uint64_t p = x.kind_ == K::Mod ? x.modulus() : y.modulus();
    Scalar u = x.to_residue(p);
    Scalar v = y.to_residue(p);
    std::uint64_t s = static_cast<std::uint64_t>(u.a_) + static_cast<std::uint64_t>(v.a_);
    if (s >= p) s -= p;
    u.a_ = static_cast<std::int64_t>(s);
    return u;
  }
  if (x.kind_ == K::Small && y.kind_ == K::Small) {
    if (x.b_ == 1 && y.b_ == 1) {
      std::int64_t r = 0;
      if (!__builtin_add_overflow(x.a_, y.a_, &r)) return Scalar(r);
    }
    i128 num = static_cast<i128>(x.a_) * y.b_ + static_cast<i128>(y.a_) * x.b_;
    i128 den = static_cast<i128>(x.b_) * y.b_;
    return Scalar::small_from_i128(num, den);
  }
  return Scalar::normalized(x.to_mpq() + y.to_mpq());
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  using K = Scalar::Kind;
  if (x.kind_ == K::Mod || y.kind_ == K::Mod) {
    std::uint64_t p = x.kind_ == K::Mod ? x.modulus() : y.modulus();
    Scalar u = x.to_residue(p);
    Scalar v = y.to_residue(p);
    u.a_ = static_cast<std::int64_t>(mul_mod(static_cast<std::uint64_t>(u.a_), static_cast<std::uint64_t>(v.a_), p));
    return u;
  }
  if (x.kind_ == K::Small && y.kind_ == K::Small) {
    if (x.b_ == 1 && y.b_ == 1) {
      std::int64_t r = 0;
      if (!__builtin_mul_overflow(x.a_, y.a_, &r)) return Scalar(r);
    }
    return Scalar::small_from_i128(static_cast<i128>(x.a_) * y.a_, static_cast<i128>(x.b_) * y.b_);
  }
  return Scalar::normalized(x.to_mpq() * y.to_mpq());
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
  using K = Scalar::Kind;
  if (x.kind_ == K::Mod || y.kind_ == K::Mod) {
    std::uint64_t p = x.kind_ == K::Mod ? x.modulus() : y.modulus();
    return x.to_residue(p).a_ == y.to_residue(p).a_;
  }
  if (x.kind_ == K::Small && y.kind_ == K::Small) return x.a_ == y.a_ && x.b_ == y.b_;
  if (x.kind_ == K::Big && y.kind_ == K::Big) return *x.big_ == *y.big_;
  return false;  // normalized: a big value never equals a small one
}

}  // namespace bicoalg
