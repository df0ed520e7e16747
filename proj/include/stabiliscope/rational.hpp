#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace stabiliscope {

// Arbitrary-precision rational number, kept in canonical form at all times:
// lowest terms, positive denominator, zero represented as 0/1. Equality is
// structural and arithmetic never rounds.
//
// Textual form is "a/b", shortened to "a" when the denominator is 1.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
  Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}
  Rat(mpz_class num, mpz_class den);

  // Accepts "a/b" or "a" (optional sign, decimal digits). Non-reduced input
  // is silently reduced; a zero denominator throws std::domain_error and
  // anything else malformed throws std::invalid_argument.
  static Rat parse(const std::string& text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Farey mediant (a+c)/(b+d) of p = a/b and q = c/d, reduced. Lies strictly
// between p and q; when p,q are Farey neighbors the reduction is a no-op
// and the result is a Farey neighbor of both. Throws std::invalid_argument
// when p == q.
Rat mediant(const Rat& p, const Rat& q);

// True iff |ad - bc| == 1 for p = a/b, q = c/d in lowest terms.
bool is_farey_neighbor(const Rat& p, const Rat& q);

}  // namespace stabiliscope
