#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace orthoweave {

// Arbitrary-precision rational, always canonical.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : v_(n) {}  // NOLINT(implicit)
  Rat(const mpz_class& n, const mpz_class& d);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // "p", "-p", "p/q"; throws DomainError on junk or zero denominator.
  static Rat parse(std::string_view s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  double to_double() const { return v_.get_d(); }
  std::size_t hash() const;

 private:
  mpq_class v_;
};

// a + b·√2 with rational a, b.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long a) : a_(a) {}  // NOLINT(implicit)
  QuadExt(Rat a) : a_(std::move(a)) {}  // NOLINT(implicit)
  QuadExt(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt sqrt2() { return QuadExt(Rat(0), Rat(1)); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  int sign() const;
  QuadExt conj() const { return QuadExt(a_, -b_); }
  Rat norm() const { return a_ * a_ - Rat(2) * b_ * b_; }
  QuadExt inverse() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  // Numeric order (not structural).
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

  // Exact floor as an integer.
  mpz_class floor() const;
  // Correctly rounded, half away from zero; exactly `digits` decimals.
  std::string approx(int digits) const;
  double to_double() const;
  // Square root inside Q(√2) when it exists.
  std::optional<QuadExt> sqrt() const;

  std::string to_string() const;  // "a+b*sqrt2" style, for diagnostics
  std::size_t hash() const;

 private:
  Rat a_, b_;
};

int sign(const QuadExt& x);
inline QuadExt conj(const QuadExt& x) { return x.conj(); }
std::string approx(const QuadExt& x, int digits);

// Structural lexicographic order on (a, b); used for deterministic sorting.
bool lex_less(const QuadExt& x, const QuadExt& y);

// Digits used for "approx" fields in serialized output.
// ORTHOWEAVE_PRECISION overrides the default of 12.
int output_precision();

}  // namespace orthoweave

template <>
struct std::hash<orthoweave::QuadExt> {
  std::size_t operator()(const orthoweave::QuadExt& x) const { return x.hash(); }
};
