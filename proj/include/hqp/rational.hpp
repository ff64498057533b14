#pragma once

#include <gmpxx.h>

#include <string>

namespace hqp {

using Q = mpq_class;
using Z = mpz_class;

// Accepts "p", "-p", "p/q". Result is canonicalized.
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

inline bool is_integer(const Q& q) { return q.get_den() == 1; }

}  // namespace hqp
