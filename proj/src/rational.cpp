#include "hqp/rational.hpp"

#include <cctype>

#include "hqp/errors.hpp"

namespace hqp {

Q parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ParseError("empty rational literal");
  size_t i = 0;
  if (t[i] == '-' || t[i] == '+') ++i;
  bool seen_digit = false, seen_slash = false;
  for (; i < t.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(t[i]))) {
      seen_digit = true;
    } else if (t[i] == '/' && !seen_slash && seen_digit && i + 1 < t.size()) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw ParseError("bad rational literal: " + s);
    }
  }
  if (!seen_digit) throw ParseError("bad rational literal: " + s);
  if (t[0] == '+') t.erase(0, 1);
  Q q;
  if (q.set_str(t, 10) != 0) throw ParseError("bad rational literal: " + s);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

}  // namespace hqp
