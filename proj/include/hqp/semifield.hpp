#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hqp/errors.hpp"
#include "hqp/poly.hpp"

namespace hqp {

// Laurent monomial in the tropical semifield over a fixed generator list.
struct TropicalValue {
  VarsPtr gens;
  std::vector<int> e;

  static TropicalValue one(const VarsPtr& g) { return {g, std::vector<int>(g->size(), 0)}; }
  static TropicalValue generator(const VarsPtr& g, int idx);
  bool operator==(const TropicalValue& o) const { return same_vars(gens, o.gens) && e == o.e; }
  std::string str() const;
  LaurentPoly as_monomial(const VarsPtr& ring) const;  // embed into a polynomial ring
};

TropicalValue trop_add(const TropicalValue& a, const TropicalValue& b);
TropicalValue trop_mul(const TropicalValue& a, const TropicalValue& b);
TropicalValue trop_div(const TropicalValue& a, const TropicalValue& b);
TropicalValue trop_pow(const TropicalValue& a, int k);

// Element of the universal semifield: a rational function whose numerator and
// denominator have nonnegative coefficients.
class SubtractionFreeValue {
 public:
  explicit SubtractionFreeValue(RatFunc f);
  static SubtractionFreeValue constant(const VarsPtr& v, const Q& c);
  static SubtractionFreeValue variable(const VarsPtr& v, int idx);
  const RatFunc& value() const { return f_; }
  SubtractionFreeValue operator+(const SubtractionFreeValue& o) const;
  SubtractionFreeValue operator*(const SubtractionFreeValue& o) const;
  SubtractionFreeValue operator/(const SubtractionFreeValue& o) const;
  SubtractionFreeValue pow(int k) const;
  bool operator==(const SubtractionFreeValue& o) const { return f_ == o.f_; }

 private:
  RatFunc f_;
};

// Subtraction-free expression tree: constants, variables, +, *, /, integer powers.
struct SFExpr {
  enum class Op { Const, Var, Add, Mul, Div, Pow };
  Op op = Op::Const;
  Q c;
  std::string name;
  int power = 1;
  std::vector<std::shared_ptr<const SFExpr>> kids;
};
using SFExprPtr = std::shared_ptr<const SFExpr>;

// Parses e.g. "(1 + y)/y", "z1*y^2 + 1". Any subtraction is rejected with a
// PreconditionError.
SFExprPtr parse_sf_expr(const std::string& s);

struct RationalSemifield {
  using Value = Q;
  Value constant(const Q& c) const { return c; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const {
    if (b == 0) throw DivisionError("division by zero", "0");
    return a / b;
  }
};

struct TropicalSemifield {
  VarsPtr gens;
  using Value = TropicalValue;
  Value constant(const Q&) const { return TropicalValue::one(gens); }
  Value add(const Value& a, const Value& b) const { return trop_add(a, b); }
  Value mul(const Value& a, const Value& b) const { return trop_mul(a, b); }
  Value div(const Value& a, const Value& b) const { return trop_div(a, b); }
};

struct UniversalSemifield {
  VarsPtr vars;
  using Value = SubtractionFreeValue;
  Value constant(const Q& c) const { return SubtractionFreeValue::constant(vars, c); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
};

template <class Sem>
typename Sem::Value sf_eval(const SFExpr& e, const std::map<std::string, typename Sem::Value>& env,
                            const Sem& sem) {
  using V = typename Sem::Value;
  switch (e.op) {
    case SFExpr::Op::Const:
      if (e.c <= 0) throw PreconditionError("non-positive constant in subtraction-free expression");
      return sem.constant(e.c);
    case SFExpr::Op::Var: {
      auto it = env.find(e.name);
      if (it == env.end()) throw StructuralError("unbound variable: " + e.name);
      return it->second;
    }
    case SFExpr::Op::Add: {
      V acc = sf_eval(*e.kids[0], env, sem);
      for (size_t i = 1; i < e.kids.size(); ++i) acc = sem.add(acc, sf_eval(*e.kids[i], env, sem));
      return acc;
    }
    case SFExpr::Op::Mul: {
      V acc = sf_eval(*e.kids[0], env, sem);
      for (size_t i = 1; i < e.kids.size(); ++i) acc = sem.mul(acc, sf_eval(*e.kids[i], env, sem));
      return acc;
    }
    case SFExpr::Op::Div:
      return sem.div(sf_eval(*e.kids[0], env, sem), sf_eval(*e.kids[1], env, sem));
    case SFExpr::Op::Pow: {
      V base = sf_eval(*e.kids[0], env, sem);
      V acc = sem.constant(1);
      int k = e.power < 0 ? -e.power : e.power;
      for (int i = 0; i < k; ++i) acc = sem.mul(acc, base);
      if (e.power < 0) acc = sem.div(sem.constant(1), acc);
      return acc;
    }
  }
  throw StructuralError("bad expression node");
}

}  // namespace hqp
