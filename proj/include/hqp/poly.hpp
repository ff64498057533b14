#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hqp/rational.hpp"

namespace hqp {

// Immutable, shared list of variable names. Polynomials built over the same
// Vars object (or over equal name lists) can be combined.
class Vars {
 public:
  explicit Vars(std::vector<std::string> names);
  static std::shared_ptr<const Vars> make(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  int size() const { return static_cast<int>(names_.size()); }
  int index(const std::string& name) const;  // -1 when absent

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};
using VarsPtr = std::shared_ptr<const Vars>;

bool same_vars(const VarsPtr& a, const VarsPtr& b);

using Exp = std::vector<int>;

class RatFunc;

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Terms are kept sorted by exponent vector (lexicographic, ascending).
class LaurentPoly {
 public:
  using Term = std::pair<Exp, Q>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarsPtr v) : vars_(std::move(v)) {}

  static LaurentPoly constant(const VarsPtr& v, const Q& c);
  static LaurentPoly variable(const VarsPtr& v, int idx, int power = 1);
  static LaurentPoly variable(const VarsPtr& v, const std::string& name, int power = 1);
  static LaurentPoly monomial(const VarsPtr& v, Exp e, const Q& c = 1);
  static LaurentPoly from_terms(const VarsPtr& v, std::vector<Term> terms);

  const VarsPtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  Q coeff(const Exp& e) const;
  Q constant_term() const;

  Exp min_exponents() const;
  Exp max_exponents() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Q& c) const;
  LaurentPoly shifted(const Exp& delta) const;  // multiply by x^delta
  LaurentPoly pow(unsigned k) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  bool has_negative_exponent() const;
  bool integer_coefficients() const;
  bool nonnegative_coefficients() const;

  // Substitute a rational function for every variable (by index).
  RatFunc substitute(const std::vector<RatFunc>& values) const;
  // Re-express over a different variable list; names missing from `target`
  // must have exponent 0 in every term.
  LaurentPoly rebased(const VarsPtr& target) const;

  std::string str() const;
  static LaurentPoly parse(const VarsPtr& v, const std::string& s);

 private:
  void check_same(const LaurentPoly& o) const;
  VarsPtr vars_;
  std::vector<Term> terms_;
};

// Exact division in the Laurent ring. Throws DivisionError carrying the
// remainder when b does not divide a.
LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> try_divexact(const LaurentPoly& a, const LaurentPoly& b);

// Quotient of Laurent polynomials. Normalization: monomial denominators are
// absorbed into the numerator, exact divisions are carried out, and the
// integer contents of numerator and denominator are made coprime.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(LaurentPoly num);
  RatFunc(LaurentPoly num, LaurentPoly den);
  static RatFunc constant(const VarsPtr& v, const Q& c);
  static RatFunc variable(const VarsPtr& v, int idx);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const VarsPtr& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  // True when the denominator is 1 after normalization.
  bool is_laurent() const;
  bool nonnegative() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc pow(int k) const;
  RatFunc inverse() const;

  // Equality of rational functions (cross multiplication).
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // "num" and "den" canonical strings are the exchange format; pretty()
  // pulls monomial denominators out for display.
  std::string str() const;
  std::string pretty() const;

 private:
  void normalize();
  LaurentPoly num_, den_;
};

}  // namespace hqp
