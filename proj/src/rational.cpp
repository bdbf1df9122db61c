#include "gitstab/rational.hpp"

#include <limits>

namespace gitstab {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.empty()) throw InputError("empty rational literal");
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  Rational q;
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw InputError("malformed rational '" + text + "'");
    q.get_num().set_str(s[0] == '+' ? s.substr(1) : s, 10);
    q.get_den() = 1;
  } else {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
      throw InputError("malformed rational '" + text + "'");
    }
    Integer d(den, 10);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    q.get_num().set_str(num[0] == '+' ? num.substr(1) : num, 10);
    q.get_den() = d;
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw InputError("integer out of 64-bit range: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1) throw InputError("expected an integer, got " + q.get_str());
  return to_int64(q.get_num());
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IntVec primitive_on_ray(const RatVec& v) {
  Integer denom_lcm = 1;
  for (const auto& x : v) {
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> scaled;
  scaled.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (denom_lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    scaled.push_back(z);
  }
  IntVec out(v.size(), 0);
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_int64(Integer(scaled[i] / g));
  return out;
}

Rational dot(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw InputError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace gitstab
