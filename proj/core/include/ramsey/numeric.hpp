#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ramsey {

// All arithmetic in the library is exact. Int/Rat are the only scalar types;
// there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

struct RamseyError : std::runtime_error {
  explicit RamseyError(const std::string& what) : std::runtime_error(what) {}
};

#define RK_CHECK(cond, msg)                       \
  do {                                            \
    if (!(cond)) throw ::ramsey::RamseyError(msg); \
  } while (0)

inline Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw RamseyError("not an integer literal: '" + s + "'");
  }
}

inline Rat rat_from_string(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw RamseyError("not a rational literal: '" + s + "'");
  }
}

inline long to_long(const Int& v) {
  RK_CHECK(v.fits_slong_p(), "integer out of machine range: " + v.get_str());
  return v.get_si();
}

}  // namespace ramsey
