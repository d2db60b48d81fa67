#include "groupcut/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace groupcut {

Rat::Rat(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rat: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::invalid_argument("Rat: zero denominator");
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) throw std::invalid_argument("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat: empty string");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rat: cannot parse '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rat(std::move(v));
}

std::string Rat::str() const {
  return v_.get_str();
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rat Rat::mod1() const {
  return *this - Rat(mpq_class(floor()));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

mpz_class common_denominator(const std::vector<Rat>& xs) {
  mpz_class q = 1;
  for (const Rat& x : xs) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), x.den().get_mpz_t());
  return q;
}

}  // namespace groupcut
