#include "orthoposet/rational.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace orthoposet {

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

namespace {

Integer parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad integer literal: " + s);
  return Integer(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rational(num, den);
}

std::string format_scalar(const Scalar& s) {
  if (s.im == 0) return format_rational(s.re);
  std::string out = format_rational(s.re);
  out += (s.im < 0) ? "-" : "+";
  out += format_rational(s.im < 0 ? Rational(-s.im) : s.im);
  out += "*i";
  return out;
}

Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  // Split into at most two signed terms at top level.
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/' &&
        text[i - 1] != '+' && text[i - 1] != '-') {
      terms.push_back(text.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(text.substr(start));
  if (terms.size() > 2) throw std::invalid_argument("bad scalar literal: " + text);

  Scalar result;
  for (auto term : terms) {
    bool negative = false;
    if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      negative = (term[0] == '-');
      term = term.substr(1);
    }
    bool imaginary = false;
    if (auto star = term.find("*i"); star != std::string::npos && star + 2 == term.size()) {
      imaginary = true;
      term = term.substr(0, star);
    } else if (!term.empty() && term.back() == 'i') {
      imaginary = true;
      term = term.substr(0, term.size() - 1);
      if (term.empty()) term = "1";
    }
    Rational value = parse_rational(term);
    if (negative) value = -value;
    if (imaginary) {
      result.im += value;
    } else {
      result.re += value;
    }
  }
  return result;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace orthoposet
