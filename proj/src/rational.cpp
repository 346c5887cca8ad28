#include "weitz/rational.hpp"

#include <cctype>
#include <sstream>

namespace weitz {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorKind::ParseError, "empty rational literal");

  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };

  std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid(s)) fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den == "0")
      fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
  }

  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
  r.canonicalize();
  return r;
}

std::string approx_string(const Rational& r, int significant_digits) {
  mpf_class f(r, 256);
  std::ostringstream os;
  os.precision(significant_digits);
  os << f;
  return os.str();
}

}  // namespace weitz
