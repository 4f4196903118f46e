#include "nonconvex/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace nonconvex {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Scalar parse_decimal(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = s.substr(epos + 1);
    s = s.substr(0, epos);
    std::string digits = es;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits = digits.substr(1);
    if (!all_digits(digits)) throw std::invalid_argument("malformed exponent in '" + text + "'");
    exp10 = std::stol(es);
  }
  std::string intpart = s, frac;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    intpart = s.substr(0, dot);
    frac = s.substr(dot + 1);
  }
  if (intpart.empty() && frac.empty()) throw std::invalid_argument("malformed number '" + text + "'");
  if (!intpart.empty() && !all_digits(intpart)) throw std::invalid_argument("malformed number '" + text + "'");
  if (!frac.empty() && !all_digits(frac)) throw std::invalid_argument("malformed number '" + text + "'");
  std::string digits = intpart + frac;
  mpz_class num(digits.empty() ? std::string("0") : digits, 10);
  exp10 -= static_cast<long>(frac.size());
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  Scalar r;
  if (exp10 >= 0)
    r = Scalar(num * p10);
  else
    r = Scalar(num, p10);
  r.canonicalize();
  return neg ? Scalar(-r) : r;
}

}  // namespace

Scalar frac(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Scalar r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}

Scalar parse_scalar(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string ps = trim(s.substr(0, slash)), qs = trim(s.substr(slash + 1));
    std::string pd = ps;
    if (!pd.empty() && (pd[0] == '-' || pd[0] == '+')) pd = pd.substr(1);
    if (!all_digits(pd) || !all_digits(qs)) throw std::invalid_argument("malformed rational '" + s + "'");
    mpz_class p(ps[0] == '+' ? ps.substr(1) : ps, 10), q(qs, 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Scalar r(p, q);
    r.canonicalize();
    return r;
  }
  return parse_decimal(s);
}

std::string to_string(const Scalar& s) { return s.get_str(); }

double to_double(const Scalar& s) { return s.get_d(); }

Scalar from_double_exact(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  return Scalar(x);
}

Scalar from_double_decimal(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return parse_decimal(std::string(buf, res.ptr));
}

int sign(const Scalar& s) { return sgn(s); }

Scalar pow(const Scalar& base, unsigned e) {
  Scalar r = 1, b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

Scalar min(const Scalar& a, const Scalar& b) { return a < b ? a : b; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

double sqrt_of(const Scalar& s) { return std::sqrt(s.get_d()); }

std::optional<Scalar> exact_sqrt(const Scalar& s) {
  if (sgn(s) < 0) return std::nullopt;
  mpz_class n = s.get_num(), d = s.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Scalar r(rn, rd);
  r.canonicalize();
  return r;
}

Scalar round_up(double x, int bits) {
  double scaled = std::ceil(std::ldexp(x, bits));
  mpz_class n;
  mpz_set_d(n.get_mpz_t(), scaled);
  mpz_class d = 1;
  d <<= bits;
  Scalar r(n, d);
  r.canonicalize();
  if (r < from_double_exact(x)) r += Scalar(1, 1) / Scalar(d);
  return r;
}

Scalar round_down(double x, int bits) { return -round_up(-x, bits); }

}  // namespace nonconvex
