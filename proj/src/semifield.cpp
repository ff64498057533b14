#include "hqp/semifield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hqp {

TropicalValue TropicalValue::generator(const VarsPtr& g, int idx) {
  TropicalValue t = one(g);
  t.e.at(idx) = 1;
  return t;
}

std::string TropicalValue::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    any = true;
    os << gens->names()[i];
    if (e[i] != 1) os << "^" << e[i];
  }
  return any ? os.str() : "1";
}

LaurentPoly TropicalValue::as_monomial(const VarsPtr& ring) const {
  Exp x(ring->size(), 0);
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    int idx = ring->index(gens->names()[i]);
    if (idx < 0) throw StructuralError("generator " + gens->names()[i] + " missing in ring");
    x[idx] = e[i];
  }
  return LaurentPoly::monomial(ring, x, 1);
}

static void check_gens(const TropicalValue& a, const TropicalValue& b) {
  if (!same_vars(a.gens, b.gens)) throw StructuralError("tropical values over different generator lists");
}

TropicalValue trop_add(const TropicalValue& a, const TropicalValue& b) {
  check_gens(a, b);
  TropicalValue r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

TropicalValue trop_mul(const TropicalValue& a, const TropicalValue& b) {
  check_gens(a, b);
  TropicalValue r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

TropicalValue trop_div(const TropicalValue& a, const TropicalValue& b) {
  check_gens(a, b);
  TropicalValue r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
  return r;
}

TropicalValue trop_pow(const TropicalValue& a, int k) {
  TropicalValue r = a;
  for (auto& x : r.e) x *= k;
  return r;
}

SubtractionFreeValue::SubtractionFreeValue(RatFunc f) : f_(std::move(f)) {
  // Negative coefficients can survive only when a non-reduced fraction hides
  // them; with nonnegative inputs and +,*,/ that never happens.
  if (!f_.nonnegative()) throw PreconditionError("value is not subtraction-free: " + f_.str());
}

SubtractionFreeValue SubtractionFreeValue::constant(const VarsPtr& v, const Q& c) {
  if (c <= 0) throw PreconditionError("semifield constants must be positive");
  return SubtractionFreeValue(RatFunc::constant(v, c));
}

SubtractionFreeValue SubtractionFreeValue::variable(const VarsPtr& v, int idx) {
  return SubtractionFreeValue(RatFunc::variable(v, idx));
}

SubtractionFreeValue SubtractionFreeValue::operator+(const SubtractionFreeValue& o) const {
  return SubtractionFreeValue(f_ + o.f_);
}
SubtractionFreeValue SubtractionFreeValue::operator*(const SubtractionFreeValue& o) const {
  return SubtractionFreeValue(f_ * o.f_);
}
SubtractionFreeValue SubtractionFreeValue::operator/(const SubtractionFreeValue& o) const {
  return SubtractionFreeValue(f_ / o.f_);
}
SubtractionFreeValue SubtractionFreeValue::pow(int k) const { return SubtractionFreeValue(f_.pow(k)); }

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  SFExprPtr parse() {
    auto e = sum();
    ws();
    if (i_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("expression: " + why + " at offset " + std::to_string(i_) + " in '" + s_ + "'");
  }
  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  static SFExprPtr node(SFExpr::Op op, std::vector<SFExprPtr> kids) {
    auto n = std::make_shared<SFExpr>();
    n->op = op;
    n->kids = std::move(kids);
    return n;
  }
  SFExprPtr sum() {
    std::vector<SFExprPtr> parts{product()};
    while (true) {
      char c = peek();
      if (c == '+') {
        ++i_;
        parts.push_back(product());
      } else if (c == '-') {
        throw PreconditionError("subtraction is not allowed in a subtraction-free expression");
      } else {
        break;
      }
    }
    return parts.size() == 1 ? parts[0] : node(SFExpr::Op::Add, parts);
  }
  SFExprPtr product() {
    SFExprPtr acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i_;
        acc = node(SFExpr::Op::Mul, {acc, power()});
      } else if (c == '/') {
        ++i_;
        acc = node(SFExpr::Op::Div, {acc, power()});
      } else {
        break;
      }
    }
    return acc;
  }
  SFExprPtr power() {
    SFExprPtr b = atom();
    if (peek() == '^') {
      ++i_;
      ws();
      size_t st = i_;
      bool paren = false;
      if (i_ < s_.size() && s_[i_] == '(') {
        paren = true;
        ++i_;
        st = i_;
      }
      if (i_ < s_.size() && s_[i_] == '-') ++i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("bad exponent");
      int k = std::stoi(s_.substr(st, i_ - st));
      if (paren) {
        if (peek() != ')') fail("expected )");
        ++i_;
      }
      auto n = std::make_shared<SFExpr>();
      n->op = SFExpr::Op::Pow;
      n->power = k;
      n->kids = {b};
      return n;
    }
    return b;
  }
  SFExprPtr atom() {
    char c = peek();
    if (c == '(') {
      ++i_;
      auto e = sum();
      if (peek() != ')') fail("expected )");
      ++i_;
      return e;
    }
    if (c == '-') throw PreconditionError("subtraction is not allowed in a subtraction-free expression");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto n = std::make_shared<SFExpr>();
      n->op = SFExpr::Op::Const;
      n->c = parse_rational(s_.substr(st, i_ - st));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t st = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      auto n = std::make_shared<SFExpr>();
      n->op = SFExpr::Op::Var;
      n->name = s_.substr(st, i_ - st);
      return n;
    }
    fail("unexpected character");
  }

  const std::string& s_;
  size_t i_ = 0;
};

}  // namespace

SFExprPtr parse_sf_expr(const std::string& s) { return ExprParser(s).parse(); }

}  // namespace hqp
