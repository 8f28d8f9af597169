#include "equigeo/rational.hpp"

#include <cctype>
#include <cmath>

#include "equigeo/error.hpp"

namespace equigeo {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_int(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class d = parse_int(den);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Scalar q(parse_int(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_perfect_square(const Scalar& value) {
  return sgn(value) >= 0 && mpz_perfect_square_p(value.get_num_mpz_t()) &&
         mpz_perfect_square_p(value.get_den_mpz_t());
}

Scalar exact_sqrt(const Scalar& value) {
  if (!is_perfect_square(value)) throw Error(ErrorKind::Domain, "not a rational square: " + to_string(value));
  return Scalar(sqrt(value.get_num()), sqrt(value.get_den()));
}

double to_double(const Scalar& value) { return value.get_d(); }

Scalar rationalize(double value, long max_den) {
  // Convergents p/q of the continued fraction; stop before q exceeds max_den.
  long sign = value < 0 ? -1 : 1;
  double x = std::fabs(value);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(x);
    if (a > 1e15) break;
    mpz_class ai(static_cast<long>(a));
    mpz_class p2 = ai * p1 + p0;
    mpz_class q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (q1 == 0) return Scalar(0);
  Scalar r(sign * p1, q1);
  r.canonicalize();
  return r;
}

}  // namespace equigeo
