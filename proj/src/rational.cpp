#include "monoval/rational.hpp"

namespace monoval {

mpq_class parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return mpq_class(mpz_class(text));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational literal: \"" + text + "\"");
  }
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_pow(const mpq_class& q, long e) {
  if (e == 0) return mpq_class(1);
  if (q == 0) {
    if (e < 0) throw ZeroDenominator();
    return mpq_class(0);
  }
  mpz_class num, den;
  unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), mag);
  return e < 0 ? make_rational(den, num) : make_rational(num, den);
}

}  // namespace monoval
