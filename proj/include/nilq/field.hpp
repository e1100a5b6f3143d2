#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>

namespace nilq {

/// Element of a prime field F_p with a runtime modulus.
///
/// A default-constructed or integer-constructed element has modulus 0 and
/// behaves as a plain integer literal until it meets a modulus-carrying
/// operand; this is what lets Fp act as an Eigen scalar (Matrix::Zero,
/// setIdentity and friends construct Scalar(0), Scalar(1)).
class Fp {
public:
  Fp() = default;
  Fp(long long literal) : v_(literal) {}  // NOLINT: implicit by design
  Fp(std::uint32_t p, long long value) : p_(p) {
    if (p == 0) throw std::invalid_argument("Fp: zero modulus");
    v_ = value % static_cast<long long>(p);
    if (v_ < 0) v_ += p;
  }

  long long value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp inverse() const {
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::domain_error("Fp: inverse of a modulus-free literal");
    }
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // extended Euclid on (v, p)
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(p_, x0);
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint32_t p = joint(a, b);
    if (p == 0) return Fp(a.v_ + b.v_);
    return Fp(p, a.reduced(p) + b.reduced(p));
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint32_t p = joint(a, b);
    if (p == 0) return Fp(a.v_ - b.v_);
    return Fp(p, a.reduced(p) - b.reduced(p));
  }
  friend Fp operator-(const Fp& a) {
    return a.p_ ? Fp(a.p_, -a.v_) : Fp(-a.v_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint32_t p = joint(a, b);
    if (p == 0) return Fp(a.v_ * b.v_);
    return Fp(p, static_cast<long long>(
        static_cast<unsigned __int128>(a.reduced(p)) * b.reduced(p) % p));
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint32_t p = joint(a, b);
    if (p == 0) return a.v_ == b.v_;
    return a.reduced(p) == b.reduced(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
  static std::uint32_t joint(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_)
      throw std::invalid_argument("Fp: mixed moduli");
    return a.p_ ? a.p_ : b.p_;
  }
  long long reduced(std::uint32_t p) const {
    if (p_ == p) return v_;
    long long r = v_ % static_cast<long long>(p);
    return r < 0 ? r + p : r;
  }

  long long v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Default working prime, 2^31 - 1.
inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

}  // namespace nilq

namespace Eigen {

template <>
struct NumTraits<nilq::Fp> {
  typedef nilq::Fp Real;
  typedef nilq::Fp NonInteger;
  typedef nilq::Fp Nested;
  typedef long long Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline nilq::Fp epsilon() { return nilq::Fp(0); }
  static inline nilq::Fp dummy_precision() { return nilq::Fp(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
