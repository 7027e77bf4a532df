#ifndef DEGEN_RATIONAL_HPP
#define DEGEN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "json.hpp"

namespace degen {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// [num, den] pair; numbers outside the int64 range are kept as strings
inline nlohmann::json rational_to_json(const Rational& q) {
  auto part = [](const mpz_class& z) -> nlohmann::json {
    if (z.fits_slong_p())
      return z.get_si();
    return z.get_str();
  };
  return nlohmann::json::array({part(q.get_num()), part(q.get_den())});
}

inline Rational rational_from_json(const nlohmann::json& j) {
  auto part = [](const nlohmann::json& v) -> mpz_class {
    if (v.is_string())
      return mpz_class(v.get<std::string>());
    return mpz_class(v.get<long>());
  };
  if (j.is_number_integer())
    return Rational(j.get<long>());
  Rational q(part(j.at(0)), part(j.at(1)));
  q.canonicalize();
  return q;
}

// Parses "3", "-2/5".
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational number: " + s);
  q.canonicalize();
  return q;
}

} // namespace degen

#endif
