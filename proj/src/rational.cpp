#include "trinomia/rational.hpp"

#include <cctype>
#include <cmath>

namespace trinomia {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_int(std::string_view s) {
  s = trim(s);
  std::string buf(s);
  if (!buf.empty() && buf.front() == '+') buf.erase(0, 1);
  bool ok = !buf.empty();
  for (std::size_t i = 0; i < buf.size() && ok; ++i) {
    const char c = buf[i];
    ok = std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && buf.size() > 1);
  }
  if (!ok) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return BigInt(buf, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) { return v.get_str(); }

BigInt int_pow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

BigRational rational_pow(const BigRational& q, long e) {
  if (e >= 0) {
    return make_rational(int_pow(q.get_num(), static_cast<unsigned long>(e)),
                         int_pow(q.get_den(), static_cast<unsigned long>(e)));
  }
  if (q == 0) throw std::domain_error("zero raised to a negative power");
  const auto k = static_cast<unsigned long>(-e);
  return make_rational(int_pow(q.get_den(), k), int_pow(q.get_num(), k));
}

double log_abs(const BigRational& q) {
  if (q == 0) throw std::domain_error("log of zero");
  auto log_z = [](const BigInt& z) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
  };
  return log_z(q.get_num()) - log_z(q.get_den());
}

}  // namespace trinomia
