#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "hqp/pathalg.hpp"
#include "hqp/poly.hpp"
#include "hqp/rep.hpp"

namespace hqp {

// Key of a Grassmannian stratum: dimension vector e of the subrepresentation
// and its Jordan type t (t[k][l] = blocks of size l at vertex k).
struct StratumKey {
  std::vector<int> e;
  std::vector<std::vector<int>> t;
  bool operator<(const StratumKey& o) const { return std::tie(e, t) < std::tie(o.e, o.t); }
  bool operator==(const StratumKey& o) const { return e == o.e && t == o.t; }
};

// Number of F_p-rational subrepresentations of the reduction of m, per stratum.
std::map<StratumKey, std::int64_t> count_subreps(const QP& qp, const DecoratedRep& m, int p);

// f_{k,0} = 1, f_{k,1} = z, f_{k,l} = z f_{k,l-1} - f_{k,l-2}.
LaurentPoly f_chebyshev(const LaurentPoly& z, int l);

// Interpolates counts over the given primes with a polynomial of degree
// < primes.size() - 1, checks the last prime, and returns the value at q = 1.
// Throws NonPolynomialCount on mismatch.
Z euler_from_counts(const std::vector<int>& primes, const std::vector<std::int64_t>& counts);

const std::vector<int>& default_primes();

// True when no denominator of m or of the potential is divisible by p.
bool good_prime(const QP& qp, const DecoratedRep& m, int p);
// The requested primes with each bad one replaced by the next good prime
// above all requested ones.
std::vector<int> oracle_primes(const QP& qp, const DecoratedRep& m, const std::vector<int>& requested);

// F_M in the variables y1..yn and the z-symbols of the datum, both looked
// up by name in `vars`. Vertices with d_k = 1 contribute no f-factor.
// Counts are taken over oracle_primes(qp, m, primes).
LaurentPoly f_polynomial_oracle(const QP& qp, const DecoratedRep& m, const VarsPtr& vars,
                                const std::vector<int>& primes = default_primes());

}  // namespace hqp
