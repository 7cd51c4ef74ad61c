#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace srep {

// Exact rational scalar. mpq_class keeps values canonical (positive
// denominator, reduced) as long as construction goes through rat()/parse;
// the raw two-argument mpq_class constructor does NOT canonicalize.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Text form "a/b" or "a".
std::string to_string(const Rational& r);
std::optional<Rational> parse_rational(const std::string& text);

// Exact square root when the argument is a perfect rational square.
std::optional<Rational> exact_sqrt(const Rational& r);

enum class FieldTag { RealQ, ComplexQi };

inline const char* field_name(FieldTag f) {
  return f == FieldTag::RealQ ? "R" : "C";
}

// Element of Q(i); multiplication satisfies i^2 = -1.
struct GRat {
  Rational re;
  Rational im;

  GRat() : re(0), im(0) {}
  GRat(const Rational& r) : re(r), im(0) {}  // NOLINT: implicit by design
  GRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GRat(long r) : re(rat(r)), im(0) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GRat conj() const { return GRat(re, -im); }
  Rational norm() const { return re * re + im * im; }

  GRat operator-() const { return GRat(-re, -im); }
  GRat operator+(const GRat& o) const { return GRat(re + o.re, im + o.im); }
  GRat operator-(const GRat& o) const { return GRat(re - o.re, im - o.im); }
  GRat operator*(const GRat& o) const {
    return GRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GRat operator/(const GRat& o) const;

  GRat& operator+=(const GRat& o) { return *this = *this + o; }
  GRat& operator-=(const GRat& o) { return *this = *this - o; }
  GRat& operator*=(const GRat& o) { return *this = *this * o; }

  bool operator==(const GRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GRat& o) const { return !(*this == o); }
};

inline GRat grat_i() { return GRat(rat(0), rat(1)); }

// Text form "a/b", "c/d*i", or "a/b+c/d*i".
std::string to_string(const GRat& z);
std::optional<GRat> parse_grat(const std::string& text);

// Square root in Q(i) when one exists.
std::optional<GRat> exact_sqrt(const GRat& z);

}  // namespace srep
