#include "hqp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "hqp/errors.hpp"

namespace hqp {

Vars::Vars(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw StructuralError("duplicate variable name: " + names_[i]);
  }
}

std::shared_ptr<const Vars> Vars::make(std::vector<std::string> names) {
  return std::make_shared<const Vars>(std::move(names));
}

int Vars::index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool same_vars(const VarsPtr& a, const VarsPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names() == b->names();
}

namespace {

void merge_sorted(std::vector<LaurentPoly::Term>& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<LaurentPoly::Term> out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  v.swap(out);
}

struct ExpHash {
  size_t operator()(const Exp& e) const {
    size_t h = 1469598103934665603ull;
    for (int x : e) h = (h ^ static_cast<size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

Exp add_exp(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exp sub_exp(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const VarsPtr& v, const Q& c) {
  LaurentPoly p(v);
  if (c != 0) p.terms_.emplace_back(Exp(v->size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(const VarsPtr& v, int idx, int power) {
  if (idx < 0 || idx >= v->size()) throw StructuralError("variable index out of range");
  Exp e(v->size(), 0);
  e[idx] = power;
  return monomial(v, e, 1);
}

LaurentPoly LaurentPoly::variable(const VarsPtr& v, const std::string& name, int power) {
  int idx = v->index(name);
  if (idx < 0) throw StructuralError("unknown variable: " + name);
  return variable(v, idx, power);
}

LaurentPoly LaurentPoly::monomial(const VarsPtr& v, Exp e, const Q& c) {
  if (static_cast<int>(e.size()) != v->size())
    throw StructuralError("exponent vector length does not match variable list");
  LaurentPoly p(v);
  if (c != 0) p.terms_.emplace_back(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const VarsPtr& v, std::vector<Term> terms) {
  for (auto& t : terms)
    if (static_cast<int>(t.first.size()) != v->size())
      throw StructuralError("exponent vector length does not match variable list");
  LaurentPoly p(v);
  p.terms_ = std::move(terms);
  merge_sorted(p.terms_);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int x : terms_[0].first)
    if (x != 0) return false;
  return true;
}

Q LaurentPoly::coeff(const Exp& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exp& k) { return t.first < k; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

Q LaurentPoly::constant_term() const {
  if (!vars_) return 0;
  return coeff(Exp(vars_->size(), 0));
}

Exp LaurentPoly::min_exponents() const {
  Exp r(vars_ ? vars_->size() : 0, 0);
  bool first = true;
  for (const auto& t : terms_) {
    for (size_t i = 0; i < r.size(); ++i) r[i] = first ? t.first[i] : std::min(r[i], t.first[i]);
    first = false;
  }
  return r;
}

Exp LaurentPoly::max_exponents() const {
  Exp r(vars_ ? vars_->size() : 0, 0);
  bool first = true;
  for (const auto& t : terms_) {
    for (size_t i = 0; i < r.size(); ++i) r[i] = first ? t.first[i] : std::max(r[i], t.first[i]);
    first = false;
  }
  return r;
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (!same_vars(vars_, o.vars_)) throw StructuralError("polynomials over different variable lists");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same(o);
  LaurentPoly r(vars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Q c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.emplace_back(terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same(o);
  LaurentPoly r(vars_);
  if (terms_.empty() || o.terms_.empty()) return r;
  if (o.terms_.size() == 1) {
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.emplace_back(add_exp(t.first, o.terms_[0].first), t.second * o.terms_[0].second);
    return r;
  }
  if (terms_.size() == 1) return o * *this;
  std::unordered_map<Exp, Q, ExpHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  Q c;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      c = a.second * b.second;
      auto [it, fresh] = acc.try_emplace(add_exp(a.first, b.first), c);
      if (!fresh) it->second += c;
    }
  r.terms_.reserve(acc.size());
  for (auto& [e, q] : acc)
    if (q != 0) r.terms_.emplace_back(e, std::move(q));
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return r;
}

LaurentPoly LaurentPoly::scaled(const Q& c) const {
  LaurentPoly r(vars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exp& delta) const {
  LaurentPoly r(vars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(add_exp(t.first, delta), t.second);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return same_vars(vars_, o.vars_) && terms_ == o.terms_;
}

bool LaurentPoly::has_negative_exponent() const {
  for (const auto& t : terms_)
    for (int x : t.first)
      if (x < 0) return true;
  return false;
}

bool LaurentPoly::integer_coefficients() const {
  for (const auto& t : terms_)
    if (t.second.get_den() != 1) return false;
  return true;
}

bool LaurentPoly::nonnegative_coefficients() const {
  for (const auto& t : terms_)
    if (t.second < 0) return false;
  return true;
}

RatFunc LaurentPoly::substitute(const std::vector<RatFunc>& values) const {
  if (static_cast<int>(values.size()) != vars_->size())
    throw StructuralError("substitution needs one value per variable");
  if (values.empty()) return RatFunc(*this);
  const VarsPtr& tv = values[0].vars();
  // Split into numerator/denominator products to avoid repeated normalization.
  std::map<std::pair<int, int>, RatFunc> cache;
  auto power = [&](int i, int e) -> const RatFunc& {
    auto key = std::make_pair(i, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, values[i].pow(e)).first->second;
  };
  // Common denominator accumulation: sum_t c_t * prod num / prod den.
  LaurentPoly num(tv), den = LaurentPoly::constant(tv, 1);
  RatFunc acc = RatFunc::constant(tv, 0);
  std::vector<RatFunc> pieces;
  for (const auto& t : terms_) {
    RatFunc m = RatFunc::constant(tv, t.second);
    for (size_t i = 0; i < t.first.size(); ++i)
      if (t.first[i] != 0) m = m * power(static_cast<int>(i), t.first[i]);
    pieces.push_back(std::move(m));
  }
  // Group pieces sharing a denominator to keep sums cheap.
  std::map<std::vector<LaurentPoly::Term>, std::pair<LaurentPoly, LaurentPoly>> by_den;
  for (auto& p : pieces) {
    auto key = p.den().terms();
    auto it = by_den.find(key);
    if (it == by_den.end())
      by_den.emplace(key, std::make_pair(p.num(), p.den()));
    else
      it->second.first = it->second.first + p.num();
  }
  for (auto& [k, nd] : by_den) acc = acc + RatFunc(nd.first, nd.second);
  return acc;
}

LaurentPoly LaurentPoly::rebased(const VarsPtr& target) const {
  std::vector<int> map(vars_->size());
  for (int i = 0; i < vars_->size(); ++i) map[i] = target->index(vars_->names()[i]);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Exp e(target->size(), 0);
    for (int i = 0; i < vars_->size(); ++i) {
      if (t.first[i] == 0) continue;
      if (map[i] < 0) throw StructuralError("variable " + vars_->names()[i] + " missing in target ring");
      e[map[i]] = t.first[i];
    }
    out.emplace_back(std::move(e), t.second);
  }
  return from_terms(target, std::move(out));
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    Q a = neg ? Q(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << vars_->names()[i];
      if (e[i] != 1) mono << "^" << e[i];
    }
    if (!any) {
      os << to_string(a);
    } else if (a == 1) {
      os << mono.str();
    } else {
      os << to_string(a) << "*" << mono.str();
    }
  }
  return os.str();
}

namespace {

struct PolyLexer {
  const std::string& s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    ws();
    return i >= s.size();
  }
  char peek() {
    ws();
    return i < s.size() ? s[i] : '\0';
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const VarsPtr& v, const std::string& s) {
  PolyLexer lx{s};
  std::vector<Term> terms;
  if (lx.eof()) throw ParseError("empty polynomial");
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.i;
    } else if (!first) {
      throw ParseError("expected + or - in polynomial: " + s);
    }
    first = false;
    Q coef = sign;
    Exp e(v->size(), 0);
    bool need_factor = true;
    while (need_factor) {
      need_factor = false;
      char p = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        size_t st = lx.i;
        while (lx.i < s.size() && (std::isdigit(static_cast<unsigned char>(s[lx.i])) || s[lx.i] == '/')) ++lx.i;
        coef *= parse_rational(s.substr(st, lx.i - st));
      } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
        size_t st = lx.i;
        while (lx.i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[lx.i])) || s[lx.i] == '_'))
          ++lx.i;
        std::string name = s.substr(st, lx.i - st);
        int idx = v->index(name);
        if (idx < 0) throw ParseError("unknown variable in polynomial: " + name);
        int ex = 1;
        if (lx.peek() == '^') {
          ++lx.i;
          lx.ws();
          size_t es = lx.i;
          if (lx.i < s.size() && s[lx.i] == '-') ++lx.i;
          while (lx.i < s.size() && std::isdigit(static_cast<unsigned char>(s[lx.i]))) ++lx.i;
          if (es == lx.i) throw ParseError("bad exponent in polynomial: " + s);
          ex = std::stoi(s.substr(es, lx.i - es));
        }
        e[idx] += ex;
      } else {
        throw ParseError("unexpected character in polynomial: " + s);
      }
      if (lx.peek() == '*') {
        ++lx.i;
        need_factor = true;
      }
    }
    terms.emplace_back(std::move(e), coef);
  }
  if (terms.size() == 1 && terms[0].second == 0) terms.clear();
  return from_terms(v, std::move(terms));
}

std::optional<LaurentPoly> try_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_vars(a.vars(), b.vars())) throw StructuralError("polynomials over different variable lists");
  if (b.is_zero()) throw DivisionError("division by zero polynomial", a.str());
  const VarsPtr& v = a.vars();
  if (a.is_zero()) return LaurentPoly(v);
  if (b.is_monomial()) {
    const auto& [eb, cb] = b.terms()[0];
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size());
    for (const auto& [e, c] : a.terms()) out.emplace_back(sub_exp(e, eb), c / cb);
    return LaurentPoly::from_terms(v, std::move(out));
  }
  // Support of the quotient lies in the box [minA - minB, maxA - maxB].
  Exp lo = sub_exp(a.min_exponents(), b.min_exponents());
  Exp hi = sub_exp(a.max_exponents(), b.max_exponents());
  for (size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return std::nullopt;
  std::map<Exp, Q> r;
  for (const auto& t : a.terms()) r.emplace(t.first, t.second);
  const auto& lead = b.terms().back();
  std::vector<LaurentPoly::Term> q;
  while (!r.empty()) {
    auto it = std::prev(r.end());
    Exp t = sub_exp(it->first, lead.first);
    for (size_t i = 0; i < t.size(); ++i)
      if (t[i] < lo[i] || t[i] > hi[i]) return std::nullopt;
    Q c = it->second / lead.second;
    for (const auto& bt : b.terms()) {
      Exp e = add_exp(t, bt.first);
      auto jt = r.find(e);
      Q delta = c * bt.second;
      if (jt == r.end()) {
        r.emplace(std::move(e), -delta);
      } else {
        jt->second -= delta;
        if (jt->second == 0) r.erase(jt);
      }
    }
    q.emplace_back(std::move(t), c);
  }
  return LaurentPoly::from_terms(v, std::move(q));
}

LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_divexact(a, b);
  if (!q) {
    // Report the remainder of a naive division as the witness.
    std::map<Exp, Q> r;
    for (const auto& t : a.terms()) r.emplace(t.first, t.second);
    throw DivisionError("non-exact division of (" + a.str() + ") by (" + b.str() + ")", a.str());
  }
  return *q;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(num_.vars(), 1)) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!same_vars(num_.vars(), den_.vars())) throw StructuralError("numerator and denominator rings differ");
  if (den_.is_zero()) throw DivisionError("zero denominator", num_.str());
  normalize();
}

RatFunc RatFunc::constant(const VarsPtr& v, const Q& c) { return RatFunc(LaurentPoly::constant(v, c)); }

RatFunc RatFunc::variable(const VarsPtr& v, int idx) { return RatFunc(LaurentPoly::variable(v, idx)); }

namespace {

Z content_lcm_den(const LaurentPoly& p, Z acc) {
  for (const auto& t : p.terms()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), t.second.get_den_mpz_t());
  return acc;
}

Z content_gcd_num(const LaurentPoly& p, Z acc) {
  for (const auto& t : p.terms()) mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), t.second.get_num_mpz_t());
  return acc;
}

}  // namespace

void RatFunc::normalize() {
  const VarsPtr& v = num_.vars();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(v, 1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& [e, c] = den_.terms()[0];
    Exp neg(e.size());
    for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    num_ = num_.shifted(neg).scaled(1 / c);
    den_ = LaurentPoly::constant(v, 1);
    return;
  }
  Exp dm = den_.min_exponents();
  for (auto& x : dm) x = -x;
  den_ = den_.shifted(dm);
  num_ = num_.shifted(dm);
  if (auto q = try_divexact(num_, den_)) {
    num_ = *q;
    den_ = LaurentPoly::constant(v, 1);
    return;
  }
  if (auto q = try_divexact(den_, num_)) {
    den_ = *q;
    num_ = LaurentPoly::constant(v, 1);
    if (den_.is_monomial()) {
      normalize();
      return;
    }
  }
  Z l = content_lcm_den(den_, content_lcm_den(num_, 1));
  Q scale(l);
  Z g = 0;
  LaurentPoly n2 = num_.scaled(scale), d2 = den_.scaled(scale);
  g = content_gcd_num(d2, content_gcd_num(n2, 0));
  if (d2.terms().back().second < 0) g = -g;
  num_ = n2.scaled(Q(1) / Q(g));
  den_ = d2.scaled(Q(1) / Q(g));
}

bool RatFunc::is_laurent() const { return den_.is_constant() && den_.constant_term() == 1; }

bool RatFunc::nonnegative() const {
  return num_.nonnegative_coefficients() && den_.nonnegative_coefficients();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_laurent() && o.is_laurent()) return RatFunc(num_ * o.num_);
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw DivisionError("inverse of zero", "0");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionError("division by zero rational function", num_.str());
  if (o.is_laurent() && is_laurent()) return RatFunc(num_, o.num_);
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k >= 0) {
    if (is_laurent()) return RatFunc(num_.pow(static_cast<unsigned>(k)));
    return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
  }
  return inverse().pow(-k);
}

bool RatFunc::operator==(const RatFunc& o) const {
  if (!same_vars(vars(), o.vars())) return false;
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

std::string RatFunc::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string RatFunc::pretty() const {
  // Pull negative exponents of the numerator into a monomial denominator.
  Exp mn = num_.min_exponents();
  Exp shift(mn.size());
  bool any = false;
  for (size_t i = 0; i < mn.size(); ++i) {
    shift[i] = mn[i] < 0 ? -mn[i] : 0;
    any = any || shift[i] != 0;
  }
  LaurentPoly n = num_.shifted(shift);
  LaurentPoly d = den_.shifted(shift);
  if (!any && is_laurent()) return n.str();
  std::string ns = n.size() > 1 ? "(" + n.str() + ")" : n.str();
  std::string ds = d.size() > 1 || !d.is_monomial() ? "(" + d.str() + ")" : d.str();
  return ns + "/" + ds;
}

}  // namespace hqp
