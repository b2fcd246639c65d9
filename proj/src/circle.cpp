#include "lam/circle.hpp"

#include <boost/functional/hash.hpp>

#include <cstdint>
#include <sstream>

namespace lam {

namespace {

void reduce(BigInt& n, BigInt& d) {
  if (d == 0)
    throw DomainError("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
}

BigInt parse_int(const std::string& s, const std::string& whole) {
  if (s.empty())
    throw ParseError("malformed number: '" + whole + "'");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+')
    i = 1;
  if (i == s.size())
    throw ParseError("malformed number: '" + whole + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      throw ParseError("malformed number: '" + whole + "'");
  return BigInt(s);
}

}  // namespace

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
  reduce(num, den);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return Rational(parse_int(text, text), 1);
  BigInt d = parse_int(text.substr(slash + 1), text);
  if (d == 0)
    throw ParseError("zero denominator: '" + text + "'");
  return Rational(parse_int(text.substr(0, slash), text), d);
}

std::string Rational::str() const {
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0)
    throw DomainError("division by zero");
  return Rational(a.num * b.den, a.den * b.num);
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

double Rational::to_double() const {
  return num.convert_to<double>() / den.convert_to<double>();
}

Angle::Angle(BigInt n, BigInt d) {
  if (d == 0)
    throw DomainError("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  n %= d;
  if (n < 0)
    n += d;
  reduce(n, d);
  num_ = std::move(n);
  den_ = std::move(d);
}

Angle Angle::parse(const std::string& text) {
  Rational r = Rational::parse(text);
  return Angle(r.num, r.den);
}

std::string Angle::str() const {
  if (num_ == 0)
    return "0";
  return num_.str() + "/" + den_.str();
}

double Angle::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::size_t Angle::hash() const {
  std::size_t h = 0;
  boost::hash_combine(h, static_cast<std::uint64_t>(num_ & BigInt(0xffffffffffffffffULL)));
  boost::hash_combine(h, static_cast<std::uint64_t>(den_ & BigInt(0xffffffffffffffffULL)));
  if (den_ > BigInt(0xffffffffffffffffULL))
    boost::hash_combine(h, msb(den_));
  return h;
}

Angle Angle::operator+(const Rational& r) const {
  return Angle(num_ * r.den + r.num * den_, den_ * r.den);
}

Angle Angle::operator-(const Rational& r) const {
  return Angle(num_ * r.den - r.num * den_, den_ * r.den);
}

bool operator<(const Angle& a, const Angle& b) {
  return a.num() * b.den() < b.num() * a.den();
}

Angle sigma(int d, const Angle& a) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  return Angle(a.num() * d, a.den());
}

Angle sigma_n(int d, int n, const Angle& a) {
  if (n == 0)
    return a;
  return Angle(a.num() * pow_int(d, n), a.den());
}

std::vector<Angle> preimages(int d, const Angle& a) {
  if (d < 2)
    throw DomainError("degree must be at least 2");
  std::vector<Angle> out;
  out.reserve(d);
  for (int j = 0; j < d; ++j)
    out.emplace_back(a.num() + a.den() * j, a.den() * d);
  return out;
}

Rational dist(const Angle& a, const Angle& b) {
  BigInt n = b.num() * a.den() - a.num() * b.den();
  BigInt den = a.den() * b.den();
  if (n < 0)
    n += den;
  return Rational(n, den);
}

Rational arc_length(const Arc& arc) { return dist(arc.start, arc.end); }

Orientation cyclic_order(const Angle& a, const Angle& b, const Angle& c) {
  if (a == b || b == c || a == c)
    return Orientation::Degenerate;
  // b in (a, c) iff the three are positively ordered
  bool ab = a < b, bc = b < c, ca = c < a;
  int rises = int(ab) + int(bc) + int(ca);
  return rises == 2 ? Orientation::Positive : Orientation::Negative;
}

bool contains(const Arc& arc, const Angle& x) {
  if (arc.degenerate())
    return false;
  return cyclic_order(arc.start, x, arc.end) == Orientation::Positive;
}

bool contains_closed(const Arc& arc, const Angle& x) {
  return x == arc.start || x == arc.end || contains(arc, x);
}

std::vector<Arc> preimage_arcs(int d, const Arc& arc) {
  auto starts = preimages(d, arc.start);
  Rational len = arc_length(arc) / Rational(d);
  std::vector<Arc> out;
  out.reserve(d);
  for (auto& s : starts)
    out.push_back({s, s + len});
  return out;
}

BigInt pow_int(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i)
    r *= base;
  return r;
}

int period(int d, const Angle& a) {
  if (boost::multiprecision::gcd(a.den(), BigInt(d)) != 1)
    return 0;
  BigInt x = a.num();
  int n = 0;
  do {
    x = (x * d) % a.den();
    ++n;
  } while (x != a.num());
  return n;
}

int preperiod(int d, const Angle& a) {
  Angle x = a;
  int n = 0;
  while (boost::multiprecision::gcd(x.den(), BigInt(d)) != 1) {
    x = sigma(d, x);
    ++n;
  }
  return n;
}

std::string str(const Arc& arc) {
  return "(" + arc.start.str() + ", " + arc.end.str() + ")";
}

}  // namespace lam
