#include "nchensel/scalars.hpp"

#include <charconv>
#include <limits>

#include <boost/integer/mod_inverse.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace nchensel {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t reduce_integer(const Integer& v, std::uint64_t m) {
  Integer r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

void require_same_ring(const Scalar& a, const Scalar& b) {
  if (!(a.ring() == b.ring())) {
    throw ScalarError("mixed-ring operands: " + a.ring().name() + " and " + b.ring().name());
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  return boost::multiprecision::miller_rabin_test(Integer(n), 25);
}

ScalarRing::ScalarRing() : ScalarRing(RingKind::prime_field, 2, 1, 2) {}

ScalarRing ScalarRing::prime_field(std::uint64_t p) { return prime_power(p, 1); }

ScalarRing ScalarRing::prime_power(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw ScalarError("modulus base " + std::to_string(p) + " is not prime");
  if (k == 0) throw ScalarError("exponent must be at least 1");
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t m = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (m > limit / p) throw ScalarError("modulus p^k does not fit in 62 bits");
    m *= p;
  }
  return ScalarRing(k == 1 ? RingKind::prime_field : RingKind::prime_power, p, k, m);
}

ScalarRing ScalarRing::rationals() { return ScalarRing(RingKind::rationals, 0, 0, 0); }

Scalar ScalarRing::zero() const {
  if (kind_ == RingKind::rationals) return Scalar(*this, Rational(0));
  return Scalar(*this, std::uint64_t{0});
}

Scalar ScalarRing::one() const {
  if (kind_ == RingKind::rationals) return Scalar(*this, Rational(1));
  return Scalar(*this, std::uint64_t{1});
}

Scalar ScalarRing::from_int(std::int64_t v) const { return from_integer(Integer(v)); }

Scalar ScalarRing::from_integer(const Integer& v) const {
  if (kind_ == RingKind::rationals) return Scalar(*this, Rational(v));
  return Scalar(*this, reduce_integer(v, modulus_));
}

Scalar ScalarRing::from_fraction(const Integer& num, const Integer& den) const {
  if (den == 0) throw ScalarError("zero denominator");
  if (kind_ == RingKind::rationals) return Scalar(*this, Rational(num, den));
  auto inv = from_integer(den).inverse();
  if (!inv) throw ScalarError("denominator is not a unit in " + name());
  return from_integer(num) * *inv;
}

Scalar ScalarRing::from_residue(std::uint64_t r) const {
  if (kind_ == RingKind::rationals) return Scalar(*this, Rational(r));
  return Scalar(*this, r % modulus_);
}

unsigned ScalarRing::valuation(const Scalar& a) const {
  if (kind_ == RingKind::rationals) return 0;
  std::uint64_t r = a.residue();
  if (r == 0) return k_;
  unsigned v = 0;
  while (r % p_ == 0) {
    r /= p_;
    ++v;
  }
  return v;
}

Scalar ScalarRing::p_power(unsigned v) const {
  if (kind_ == RingKind::rationals) {
    if (v != 0) throw ScalarError("p-powers are undefined in Q");
    return one();
  }
  std::uint64_t r = 1;
  for (unsigned i = 0; i < v && r != 0; ++i) r = mul_mod(r, p_, modulus_);
  return Scalar(*this, r % modulus_);
}

ScalarRing ScalarRing::truncated(unsigned j) const {
  if (kind_ == RingKind::rationals) return *this;
  if (j == 0 || j > k_) throw ScalarError("cannot truncate " + name() + " to exponent " + std::to_string(j));
  return prime_power(p_, j);
}

bool ScalarRing::reduces_to(const ScalarRing& other) const {
  if (*this == other) return true;
  return is_modular() && other.is_modular() && p_ == other.p_ && other.k_ <= k_;
}

Scalar ScalarRing::reduce_into(const Scalar& a) const {
  if (a.ring() == *this) return a;
  if (!a.ring().reduces_to(*this)) {
    throw ScalarError("no reduction map " + a.ring().name() + " -> " + name());
  }
  return Scalar(*this, a.residue() % modulus_);
}

std::string ScalarRing::name() const {
  switch (kind_) {
    case RingKind::prime_field: return "GF(" + std::to_string(p_) + ")";
    case RingKind::prime_power: return "Z/" + std::to_string(p_) + "^" + std::to_string(k_);
    case RingKind::rationals: return "Q";
  }
  return "?";
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return std::get<Rational>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1 % ring_.modulus();
  return std::get<Rational>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw ScalarError("residue() on a rational scalar");
}

const Rational& Scalar::rational() const {
  if (auto q = std::get_if<Rational>(&value_)) return *q;
  throw ScalarError("rational() on a modular scalar");
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) {
    return Scalar(ring_, *r == 0 ? 0 : ring_.modulus() - *r);
  }
  return Scalar(ring_, Rational(-std::get<Rational>(value_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  if (auto x = std::get_if<std::uint64_t>(&a.value_)) {
    std::uint64_t m = a.ring_.modulus();
    std::uint64_t s = *x + std::get<std::uint64_t>(b.value_);
    return Scalar(a.ring_, s >= m ? s - m : s);
  }
  return Scalar(a.ring_, Rational(std::get<Rational>(a.value_) + std::get<Rational>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  if (auto x = std::get_if<std::uint64_t>(&a.value_)) {
    std::uint64_t y = std::get<std::uint64_t>(b.value_);
    return Scalar(a.ring_, *x >= y ? *x - y : *x + (a.ring_.modulus() - y));
  }
  return Scalar(a.ring_, Rational(std::get<Rational>(a.value_) - std::get<Rational>(b.value_)));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_ring(a, b);
  if (auto x = std::get_if<std::uint64_t>(&a.value_)) {
    return Scalar(a.ring_, mul_mod(*x, std::get<std::uint64_t>(b.value_), a.ring_.modulus()));
  }
  return Scalar(a.ring_, Rational(std::get<Rational>(a.value_) * std::get<Rational>(b.value_)));
}

std::optional<Scalar> Scalar::inverse() const {
  if (is_zero()) return std::nullopt;
  if (auto q = std::get_if<Rational>(&value_)) return Scalar(ring_, Rational(1 / *q));
  std::uint64_t r = std::get<std::uint64_t>(value_);
  std::uint64_t m = ring_.modulus();
  if (m == 1) return std::nullopt;
  if (r % ring_.prime() == 0) return std::nullopt;
  auto inv = boost::integer::mod_inverse(static_cast<std::int64_t>(r), static_cast<std::int64_t>(m));
  if (inv == 0) return std::nullopt;
  return Scalar(ring_, static_cast<std::uint64_t>(inv));
}

bool Scalar::operator==(const Scalar& other) const {
  return ring_ == other.ring_ && value_ == other.value_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& other) const {
  require_same_ring(*this, other);
  if (auto x = std::get_if<std::uint64_t>(&value_)) return *x <=> std::get<std::uint64_t>(other.value_);
  const auto& a = std::get<Rational>(value_);
  const auto& b = std::get<Rational>(other.value_);
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (auto x = std::get_if<std::uint64_t>(&value_)) return std::to_string(*x);
  const auto& q = std::get<Rational>(value_);
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw ScalarError("unknown arithmetic op");
}

std::optional<Scalar> scalar_inverse(const Scalar& a) { return a.inverse(); }

Scalar parse_scalar(const ScalarRing& ring, std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw ScalarError("empty scalar literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ScalarError("malformed scalar literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ScalarError("malformed scalar literal '" + std::string(text) + "'");
    }
    Integer v(std::string(s.substr(start)));
    return s[0] == '-' ? Integer(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ring.from_integer(parse_int(text));
  return ring.from_fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Scalar floor_div_p_power(const Scalar& a, unsigned v) {
  const auto& ring = a.ring();
  if (!ring.is_modular()) {
    if (v != 0) throw ScalarError("p-powers are undefined in Q");
    return a;
  }
  std::uint64_t d = 1;
  for (unsigned i = 0; i < v; ++i) d *= ring.prime();
  return ring.from_residue(a.residue() / d);
}

Scalar unit_part_inverse(const Scalar& a) {
  const auto& ring = a.ring();
  if (a.is_zero()) throw ScalarError("unit part of zero");
  if (!ring.is_modular()) return *a.inverse();
  unsigned v = ring.valuation(a);
  Scalar u = floor_div_p_power(a, v);
  auto inv = u.inverse();
  if (!inv) throw ScalarError("unit part is not invertible");
  return *inv;
}

}  // namespace nchensel
