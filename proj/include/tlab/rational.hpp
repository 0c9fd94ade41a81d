// rational.hpp
// Exact rational arithmetic for the feasibility solvers.
//
// Rat64 is a gcd-reduced fraction over int64 with __int128 intermediates.
// Every operation that would leave the int64 range throws RatOverflow; callers
// that need unbounded precision retry with BigRat (boost cpp_rational).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tlab {

using BigRat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct RatOverflow : std::runtime_error {
  RatOverflow() : std::runtime_error("Rat64 overflow") {}
};

class Rat64 {
public:
  Rat64() : num_(0), den_(1) {}
  Rat64(long long n) : num_(n), den_(1) {}
  Rat64(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rat64 operator-() const { return Rat64(-num_, den_, NoReduce{}); }

  friend Rat64 operator+(const Rat64& a, const Rat64& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return make(n, d);
  }
  friend Rat64 operator-(const Rat64& a, const Rat64& b) { return a + (-b); }
  friend Rat64 operator*(const Rat64& a, const Rat64& b) {
    return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat64 operator/(const Rat64& a, const Rat64& b) {
    if (b.num_ == 0) throw std::domain_error("Rat64 division by zero");
    __int128 n = (__int128)a.num_ * b.den_;
    __int128 d = (__int128)a.den_ * b.num_;
    return make(n, d);
  }
  Rat64& operator+=(const Rat64& b) { return *this = *this + b; }
  Rat64& operator-=(const Rat64& b) { return *this = *this - b; }
  Rat64& operator*=(const Rat64& b) { return *this = *this * b; }
  Rat64& operator/=(const Rat64& b) { return *this = *this / b; }

  friend bool operator==(const Rat64& a, const Rat64& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat64& a, const Rat64& b) { return !(a == b); }
  friend bool operator<(const Rat64& a, const Rat64& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
  friend bool operator<=(const Rat64& a, const Rat64& b) { return !(b < a); }
  friend bool operator>=(const Rat64& a, const Rat64& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  struct NoReduce {};
  Rat64(long long n, long long d, NoReduce) : num_(n), den_(d) {}

  static Rat64 make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat64 zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw RatOverflow();
    return Rat64((long long)n, (long long)d, NoReduce{});
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat64 zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_;
  long long den_;
};

// Uniform helpers so the feasibility solvers can be written once for both
// rational backends.
inline int sign_of(const Rat64& q) { return q.sign(); }
inline int sign_of(const BigRat& q) { return q.sign(); }
inline bool is_zero(const Rat64& q) { return q.is_zero(); }
inline bool is_zero(const BigRat& q) { return q.is_zero(); }

inline std::string to_fraction_string(const Rat64& q) { return q.str(); }
inline std::string to_fraction_string(const BigRat& q) {
  if (boost::multiprecision::denominator(q) == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

} // namespace tlab
