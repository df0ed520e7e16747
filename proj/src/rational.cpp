#include "stabiliscope/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace stabiliscope {

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat::Rat(mpz_class num, mpz_class den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(std::move(num), std::move(den));
  v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text))
      throw std::invalid_argument("malformed rational: \"" + text + "\"");
    return Rat(mpz_class(text), mpz_class(1));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw std::invalid_argument("malformed rational: \"" + text + "\"");
  mpz_class d(den);
  if (d == 0) throw std::domain_error("rational with zero denominator: \"" + text + "\"");
  return Rat(mpz_class(num), std::move(d));
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.v_ == 0) throw std::domain_error("division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat mediant(const Rat& p, const Rat& q) {
  if (p == q) throw std::invalid_argument("mediant of equal rationals");
  return Rat(p.num() + q.num(), p.den() + q.den());
}

bool is_farey_neighbor(const Rat& p, const Rat& q) {
  mpz_class det = p.num() * q.den() - p.den() * q.num();
  return det == 1 || det == -1;
}

}  // namespace stabiliscope
