#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbn {

/// Exact rational number over 64-bit integers, always kept in lowest terms
/// with a positive denominator.  All arithmetic in the library stays well
/// inside the 64-bit range (denominators divide a Weyl element order <= 30,
/// numerators are desk-scale lattice coordinates), so no big-integer backend
/// is needed.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("Rat: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
  Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  int sign() const { return num < 0 ? -1 : (num > 0 ? 1 : 0); }
  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Which coordinate system a rational vector is expressed in.  The core keeps
/// everything in the simple-coroot basis; epsilon coordinates are a type-A
/// display form and root coordinates appear only for roots themselves.
enum class Basis { Coroot, Root, Epsilon };

/// A vector of exact rationals tagged with its basis.
struct RatVec {
  std::vector<Rat> c;
  Basis basis = Basis::Coroot;

  RatVec() = default;
  explicit RatVec(std::size_t n, Basis b = Basis::Coroot) : c(n), basis(b) {}
  RatVec(std::vector<Rat> v, Basis b = Basis::Coroot) : c(std::move(v)), basis(b) {}

  std::size_t size() const { return c.size(); }
  Rat& operator[](std::size_t i) { return c[i]; }
  const Rat& operator[](std::size_t i) const { return c[i]; }

  friend bool operator==(const RatVec& a, const RatVec& b) { return a.basis == b.basis && a.c == b.c; }

  friend RatVec operator+(const RatVec& a, const RatVec& b) {
    check_compat(a, b);
    RatVec r(a.size(), a.basis);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend RatVec operator-(const RatVec& a, const RatVec& b) {
    check_compat(a, b);
    RatVec r(a.size(), a.basis);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }

  bool is_zero() const {
    for (const auto& x : c) if (x.num != 0) return false;
    return true;
  }

  static void check_compat(const RatVec& a, const RatVec& b) {
    if (a.basis != b.basis || a.size() != b.size())
      throw std::invalid_argument("RatVec: basis or dimension mismatch");
  }
};

/// Integer lattice vector (coroot or root coordinates depending on context).
using IntVec = std::vector<long long>;

inline RatVec to_ratvec(const IntVec& v, Basis b = Basis::Coroot) {
  RatVec r(v.size(), b);
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace qbn
