#include "coxcomb/numeric.hpp"

#include "coxcomb/errors.hpp"

namespace coxcomb {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
  Int num = numerator(v);
  Int den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Int parse_int(const std::string& text) {
  if (text.empty()) throw schema_error("empty integer literal");
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) throw schema_error("bad integer literal '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw schema_error("bad integer literal '" + text + "'");
  }
  return Int(text);
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw schema_error("zero denominator in '" + text + "'");
  return Rat(num, den);
}

}  // namespace coxcomb
