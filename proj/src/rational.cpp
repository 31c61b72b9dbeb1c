#include "nilgraph/rational.hpp"

#include "nilgraph/error.hpp"

namespace nilgraph {

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error("empty rational literal");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  for (char ch : s) {
    if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9'))) {
      throw Error("malformed rational literal '" + std::string(text) + "'");
    }
  }
  Rational out;
  if (out.set_str(s, 10) != 0) {
    throw Error("malformed rational literal '" + std::string(text) + "'");
  }
  if (out.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  out.canonicalize();
  return out;
}

}  // namespace nilgraph
