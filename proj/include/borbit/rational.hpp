#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace borbit {

// Exact rational on 64-bit words, always normalized (gcd 1, positive
// denominator). Coordinates in this project stay tiny; overflow throws
// rather than wrapping.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rat operator-() const { return Rat(-num_, den_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked(static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_),
               checked(static_cast<__int128>(a.den_) * b.den_));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked(static_cast<__int128>(a.num_) * b.num_),
               checked(static_cast<__int128>(a.den_) * b.den_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rat(checked(static_cast<__int128>(a.num_) * b.den_),
               checked(static_cast<__int128>(a.den_) * b.num_));
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  // "p/q" with q > 0 in lowest terms, the serialization used everywhere.
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p" or "p/q".
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational: " + s);
    }
  }

 private:
  long long num_ = 0;
  long long den_ = 1;

  static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }
};

}  // namespace borbit
