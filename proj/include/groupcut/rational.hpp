#ifndef GROUPCUT_RATIONAL_HPP
#define GROUPCUT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace groupcut {

/// Exact rational scalar backed by GMP.  Values are always kept in canonical
/// form: gcd(|numerator|, denominator) = 1 and denominator > 0.  Arithmetic
/// is exact; there is no floating-point mode.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d);
  explicit Rat(mpq_class v);

  /// Parses "p/q" or "n".  Throws std::invalid_argument on malformed input
  /// or zero denominator.
  static Rat parse(const std::string& s);

  /// Canonical representation: "p/q", or just "n" when integral.
  std::string str() const;

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

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
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  /// Largest integer <= *this.
  mpz_class floor() const;

  /// Fractional part x - floor(x), in [0, 1).
  Rat mod1() const;

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  /// Value as double; for rendering only, never for decisions.
  double to_double() const { return v_.get_d(); }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// lcm of the denominators of a range of rationals; the "q" of the grid
/// (1/q)Z containing them all.
mpz_class common_denominator(const std::vector<Rat>& xs);

}  // namespace groupcut

#endif
