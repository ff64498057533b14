#include "hqp/classical.hpp"

#include "hqp/errors.hpp"

namespace hqp {

namespace {

int plus(int x) { return x > 0 ? x : 0; }

}  // namespace

ClassicalState classical_initial(const IntMat& b) {
  int n = static_cast<int>(b.size());
  ClassicalState s;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
  s.ring = Vars::make(names);
  s.ext.assign(2 * n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s.ext[i][j] = b[i][j];
    s.ext[n + i][i] = 1;
    s.x.emplace_back(LaurentPoly::variable(s.ring, i));
  }
  return s;
}

ClassicalState classical_mutate(const ClassicalState& s, int k) {
  int n = static_cast<int>(s.x.size());
  if (k < 0 || k >= n) throw PreconditionError("mutation vertex out of range");
  auto value = [&](int row) {
    // cluster variable or frozen variable of the extended row
    return row < n ? s.x[row] : RatFunc(LaurentPoly::variable(s.ring, row));
  };
  RatFunc up = RatFunc::constant(s.ring, 1), down = RatFunc::constant(s.ring, 1);
  for (int i = 0; i < 2 * n; ++i) {
    int b = s.ext[i][k];
    if (b > 0) up = up * value(i).pow(b);
    if (b < 0) down = down * value(i).pow(-b);
  }
  ClassicalState r = s;
  r.x[k] = (up + down) / s.x[k];
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        r.ext[i][j] = -s.ext[i][j];
      else
        r.ext[i][j] = s.ext[i][j] + plus(s.ext[i][k]) * plus(s.ext[k][j]) - plus(-s.ext[i][k]) * plus(-s.ext[k][j]);
    }
  return r;
}

LaurentPoly classical_f(const ClassicalState& s, int l) {
  int n = static_cast<int>(s.x.size());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
  VarsPtr yv = Vars::make(names);
  std::vector<RatFunc> vals;
  for (int i = 0; i < n; ++i) vals.push_back(RatFunc::constant(yv, 1));
  for (int i = 0; i < n; ++i) vals.emplace_back(LaurentPoly::variable(yv, i));
  RatFunc f = s.x[l].num().substitute(vals) / s.x[l].den().substitute(vals);
  if (!f.is_laurent()) throw StructuralError("X-function is not a Laurent polynomial");
  return f.num();
}

std::vector<int> classical_g(const ClassicalState& s, const IntMat& b0, int l) {
  int n = static_cast<int>(s.x.size());
  const RatFunc& x = s.x[l];
  if (!x.is_laurent()) throw StructuralError("X-function is not a Laurent polynomial");
  const Exp& e = x.num().terms().front().first;
  std::vector<int> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = e[i];
    for (int j = 0; j < n; ++j) g[i] -= b0[i][j] * e[n + j];
  }
  return g;
}

std::vector<int> classical_c(const ClassicalState& s, int j) {
  int n = static_cast<int>(s.x.size());
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = s.ext[n + i][j];
  return c;
}

}  // namespace hqp
