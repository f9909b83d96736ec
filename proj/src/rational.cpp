#include "skewpf/rational.hpp"

#include <ostream>

namespace skewpf {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) fail(Errc::BadInput, "empty rational literal");
  try {
    mpq_class v(s);
    if (v.get_den() == 0) fail(Errc::BadInput, "zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    fail(Errc::BadInput, "malformed rational literal '" + s + "'");
  }
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str_pretty() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str_pretty(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace skewpf
