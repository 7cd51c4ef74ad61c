#include "superrep/scalar.hpp"

#include <cctype>

namespace srep {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text);
      return Rational(n);
    }
    mpz_class n(text.substr(0, slash));
    mpz_class d(text.substr(slash + 1));
    if (d == 0) return std::nullopt;
    return rat(n, d);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rational(0);
  mpz_class num = r.get_num(), den = r.get_den();
  mpz_class sn, sd;
  if (mpz_root(sn.get_mpz_t(), num.get_mpz_t(), 2) == 0) return std::nullopt;
  if (mpz_root(sd.get_mpz_t(), den.get_mpz_t(), 2) == 0) return std::nullopt;
  return rat(sn, sd);
}

GRat GRat::operator/(const GRat& o) const {
  Rational n = o.norm();
  if (n == 0) throw std::domain_error("division by zero Gaussian rational");
  GRat c = *this * o.conj();
  return GRat(c.re / n, c.im / n);
}

std::string to_string(const GRat& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im_part = to_string(z.im) + "*i";
  if (z.re == 0) return im_part;
  if (z.im > 0) return to_string(z.re) + "+" + im_part;
  return to_string(z.re) + im_part;  // sign carried by the numerator
}

namespace {

// Splits "a+b*i" / "a-b*i" at the sign of the imaginary part, ignoring a
// leading sign on the real part.
std::optional<GRat> parse_sum_form(const std::string& text) {
  for (size_t k = 1; k < text.size(); ++k) {
    if (text[k] != '+' && text[k] != '-') continue;
    if (text[k - 1] == '/' || text[k - 1] == '+' || text[k - 1] == '-')
      continue;
    auto re = parse_rational(text.substr(0, k));
    if (!re) continue;
    std::string rest = text.substr(k);  // keeps the sign
    if (rest.size() < 2 || rest.back() != 'i') return std::nullopt;
    std::string imtext = rest.substr(0, rest.size() - 1);
    if (!imtext.empty() && imtext.back() == '*') imtext.pop_back();
    if (imtext == "+" || imtext == "-") imtext += "1";
    auto im = parse_rational(imtext);
    if (!im) return std::nullopt;
    return GRat(*re, *im);
  }
  return std::nullopt;
}

}  // namespace

std::optional<GRat> parse_grat(const std::string& in) {
  std::string text;
  for (char c : in)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  if (text.empty()) return std::nullopt;
  if (text.back() == 'i') {
    if (auto z = parse_sum_form(text)) return z;
    // pure imaginary: "b*i", "i", "-i"
    std::string imtext = text.substr(0, text.size() - 1);
    if (!imtext.empty() && imtext.back() == '*') imtext.pop_back();
    if (imtext.empty() || imtext == "+" || imtext == "-") imtext += "1";
    auto im = parse_rational(imtext);
    if (!im) return std::nullopt;
    return GRat(Rational(0), *im);
  }
  auto re = parse_rational(text);
  if (!re) return std::nullopt;
  return GRat(*re);
}

std::optional<GRat> exact_sqrt(const GRat& z) {
  if (z.im == 0) {
    if (auto s = exact_sqrt(z.re)) return GRat(*s);
    if (auto s = exact_sqrt(-z.re)) return GRat(Rational(0), *s);
    return std::nullopt;
  }
  // (p+qi)^2 = a+bi with b != 0: p^2 = (a + sqrt(a^2+b^2))/2, q = b/(2p).
  auto s = exact_sqrt(z.norm());
  if (!s) return std::nullopt;
  for (int sign : {+1, -1}) {
    Rational p2 = (z.re + sign * *s) / 2;
    if (auto p = exact_sqrt(p2)) {
      if (*p == 0) continue;
      Rational q = z.im / (2 * *p);
      GRat cand(*p, q);
      if (cand * cand == z) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace srep
