#include "blockcalc/rational.hpp"

#include <climits>
#include <stdexcept>

namespace blockcalc {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(const std::string& text) {
  if (q_.set_str(text, 10) != 0) throw std::invalid_argument("Rat: cannot parse '" + text + "'");
  if (q_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

long Rat::to_long() const {
  if (!is_integer()) throw std::domain_error("Rat::to_long: " + str() + " is not an integer");
  if (!q_.get_num().fits_slong_p()) throw std::overflow_error("Rat::to_long: overflow");
  return q_.get_num().get_si();
}

Rat Rat::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Rat(mpq_class(f));
}

Rat mod(const Rat& a, const Rat& m) {
  if (m.sign() <= 0) throw std::domain_error("mod: modulus must be positive");
  return a - m * (a / m).floor();
}

}  // namespace blockcalc
