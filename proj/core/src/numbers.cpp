#include <spi/numbers.hpp>

#include <spi/errors.hpp>

namespace spi {

Integer pow_ui(const Integer& base, std::uint64_t e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Rational pow_ui(const Rational& base, std::uint64_t e) {
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()),
             static_cast<unsigned long>(e));
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()),
             static_cast<unsigned long>(e));
  // powers of a canonical fraction stay canonical
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::size_t bit_length(const Integer& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

}  // namespace spi
