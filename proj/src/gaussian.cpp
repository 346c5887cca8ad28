#include "weitz/gaussian.hpp"

namespace weitz {

std::string to_string(const Gaussian& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (sgn(z.re) != 0) out += z.re.get_str();
  if (sgn(z.im) != 0) {
    if (!out.empty() && sgn(z.im) > 0) out += "+";
    out += z.im.get_str();
    out += "*i";
  }
  return out;
}

Gaussian parse_gaussian(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorKind::ParseError, "empty Gaussian literal");

  // Split at the last top-level +/- that is not the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') split = i;

  auto parse_part = [](const std::string& part, Rational& re, Rational& im) {
    if (part.size() >= 2 && part.substr(part.size() - 2) == "*i") {
      im += parse_rational(part.substr(0, part.size() - 2));
    } else if (part == "i") {
      im += 1;
    } else if (part == "-i") {
      im -= 1;
    } else {
      re += parse_rational(part);
    }
  };

  Rational re(0), im(0);
  if (split == std::string::npos) {
    parse_part(s, re, im);
  } else {
    parse_part(s.substr(0, split), re, im);
    std::string second = s.substr(split);
    if (second.size() >= 1 && second[0] == '+') second = second.substr(1);
    parse_part(second, re, im);
  }
  return Gaussian(re, im);
}

}  // namespace weitz
