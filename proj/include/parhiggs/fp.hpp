#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parhiggs {

// Element of a prime field F_l, l < 2^63. A default-constructed value is an
// "unbound" zero with modulus 0; arithmetic binds it to the other operand's
// field, so zero-filled matrices can be built without a field context.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t value, std::uint64_t prime) : v_(prime ? value % prime : 0), p_(prime) {
    if (!prime) throw std::invalid_argument("Fp: zero modulus");
  }

  static Fp from_int(std::int64_t value, std::uint64_t prime) {
    std::int64_t m = value % static_cast<std::int64_t>(prime);
    if (m < 0) m += static_cast<std::int64_t>(prime);
    return Fp(static_cast<std::uint64_t>(m), prime);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = join(a, b);
    if (!p) return Fp();
    std::uint64_t s = a.v_ + b.v_;
    if (s >= p) s -= p;
    return Fp(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = join(a, b);
    if (!p) return Fp();
    std::uint64_t s = a.v_ + p - b.v_;
    if (s >= p) s -= p;
    return Fp(s, p);
  }
  Fp operator-() const {
    if (!p_) return Fp();
    return Fp(v_ ? p_ - v_ : 0, p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = join(a, b);
    if (!p || a.v_ == 0 || b.v_ == 0) return p ? Fp(0, p) : Fp();
    auto prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    return Fp(static_cast<std::uint64_t>(prod % p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  Fp inverse() const {
    if (v_ == 0 || p_ == 0) throw std::domain_error("Fp: inverse of zero");
    return pow(p_ - 2);  // Fermat, p prime
  }
  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc(1, p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.v_ == 0 && b.v_ == 0) return true;
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  static std::uint64_t join(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_)
      throw std::invalid_argument("Fp: mixed moduli " + std::to_string(a.p_) + " and " +
                                  std::to_string(b.p_));
    return a.p_ ? a.p_ : b.p_;
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

struct FpField {
  std::uint64_t p;
  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp operator()(std::int64_t v) const { return Fp::from_int(v, p); }
};

}  // namespace parhiggs
