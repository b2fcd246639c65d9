#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lam {

using BigInt = boost::multiprecision::cpp_int;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational number. Used for arc lengths and rotation numbers.
struct Rational {
  BigInt num = 0;
  BigInt den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(BigInt n, BigInt d);

  static Rational parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
  double to_double() const;
};

// A point of R/Z in lowest terms with 0 <= num < den.
class Angle {
 public:
  Angle() = default;
  Angle(long long n, long long d) : Angle(BigInt(n), BigInt(d)) {}
  Angle(BigInt n, BigInt d);
  explicit Angle(const Rational& r) : Angle(r.num, r.den) {}

  static Angle parse(const std::string& text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  Rational value() const { return Rational(num_, den_); }
  std::string str() const;
  double to_double() const;
  std::size_t hash() const;

  Angle operator+(const Rational& r) const;
  Angle operator-(const Rational& r) const;

  friend bool operator==(const Angle&, const Angle&) = default;
  // order of representatives in [0,1)
  friend bool operator<(const Angle& a, const Angle& b);
  friend bool operator>(const Angle& a, const Angle& b) { return b < a; }
  friend bool operator<=(const Angle& a, const Angle& b) { return !(b < a); }

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

struct AngleHash {
  std::size_t operator()(const Angle& a) const { return a.hash(); }
};

// Positively oriented open arc from start to end. start == end is the empty arc.
struct Arc {
  Angle start;
  Angle end;

  bool degenerate() const { return start == end; }
  Arc reversed() const { return {end, start}; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class Orientation { Positive, Negative, Degenerate };

Angle sigma(int d, const Angle& a);
Angle sigma_n(int d, int n, const Angle& a);
std::vector<Angle> preimages(int d, const Angle& a);

Rational arc_length(const Arc& arc);
// length of the positively oriented arc from a to b
Rational dist(const Angle& a, const Angle& b);

bool contains(const Arc& arc, const Angle& x);
bool contains_closed(const Arc& arc, const Angle& x);
Orientation cyclic_order(const Angle& a, const Angle& b, const Angle& c);

// Preimage arcs of an open arc of length < 1 under sigma_d, as d arcs of length |arc|/d.
std::vector<Arc> preimage_arcs(int d, const Arc& arc);

// Points k/(d^n - 1), fixed by sigma_d^n.
BigInt pow_int(int base, int exp);
// least n >= 1 with sigma_d^n(a) = a, or 0 if a is not periodic
int period(int d, const Angle& a);
// number of steps until the orbit of a reaches a periodic point
int preperiod(int d, const Angle& a);

std::string str(const Arc& arc);

}  // namespace lam
