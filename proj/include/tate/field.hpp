// Exact scalar fields: rationals, prime fields and univariate rational
// function fields over either.

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tate {

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& raw() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(q_ / o.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }
  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }

  Rational inverse() const { return Rational(1) / *this; }
  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

/// Element of F_p for a word-size prime p < 2^31. The modulus is a
/// per-thread setting installed with FpModulusScope; products reduce with a
/// precomputed Barrett constant.
class Fp {
 public:
  struct Context {
    uint32_t p = 32003;
    unsigned __int128 barrett = ((unsigned __int128)1 << 64) / 32003;
  };
  static Context& context() {
    thread_local Context ctx;
    return ctx;
  }
  static uint32_t modulus() { return context().p; }
  static void set_modulus(uint32_t p) {
    if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("modulus out of range");
    for (uint32_t d = 2; (uint64_t)d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    context().p = p;
    context().barrett = ((unsigned __int128)1 << 64) / p;
  }

  Fp() = default;
  Fp(long long v) {  // NOLINT(google-explicit-constructor)
    const long long p = modulus();
    v %= p;
    if (v < 0) v += p;
    v_ = static_cast<uint32_t>(v);
  }

  uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp o) const {
    uint32_t s = v_ + o.v_;
    if (s >= modulus()) s -= modulus();
    return raw(s);
  }
  Fp operator-(Fp o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_); }
  Fp operator*(Fp o) const { return raw(reduce((uint64_t)v_ * o.v_)); }
  Fp operator/(Fp o) const { return *this * o.inverse(); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  bool operator==(Fp o) const { return v_ == o.v_; }
  bool operator!=(Fp o) const { return v_ != o.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    long long a = v_, b = modulus(), x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    return Fp(x0);
  }
  std::string to_string() const {
    // Symmetric representative reads better for small negatives.
    uint32_t p = modulus();
    if (v_ > p / 2) return "-" + std::to_string(p - v_);
    return std::to_string(v_);
  }

 private:
  static Fp raw(uint32_t v) {
    Fp r;
    r.v_ = v;
    return r;
  }
  static uint32_t reduce(uint64_t x) {
    const Context& c = context();
    uint64_t q = (uint64_t)(((unsigned __int128)x * c.barrett) >> 64);
    uint64_t r = x - q * c.p;
    while (r >= c.p) r -= c.p;
    return static_cast<uint32_t>(r);
  }
  uint32_t v_ = 0;
};

/// Installs a prime modulus for the current thread and restores the old one.
class FpModulusScope {
 public:
  explicit FpModulusScope(uint32_t p) : saved_(Fp::context()) { Fp::set_modulus(p); }
  ~FpModulusScope() { Fp::context() = saved_; }
  FpModulusScope(const FpModulusScope&) = delete;
  FpModulusScope& operator=(const FpModulusScope&) = delete;

 private:
  Fp::Context saved_;
};

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <class F>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(F c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  static UniPoly monomial(F c, int deg) {
    UniPoly r;
    if (c.is_zero()) return r;
    r.c_.assign(deg + 1, F(0));
    r.c_[deg] = c;
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& lead() const { return c_.back(); }
  F coeff(int i) const { return i < (int)c_.size() ? c_[i] : F(0); }
  const std::vector<F>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const {
    UniPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), F(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
  }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    UniPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, F(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
  }
  UniPoly scaled(const F& s) const {
    UniPoly r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly q, r = *this;
    if (degree() < d.degree()) return {q, r};
    q.c_.assign(degree() - d.degree() + 1, F(0));
    F inv = F(1) / d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int shift = r.degree() - d.degree();
      F factor = r.lead() * inv;
      q.c_[shift] = factor;
      for (int i = 0; i <= d.degree(); ++i) r.c_[i + shift] -= factor * d.c_[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }
  UniPoly monic() const { return is_zero() ? *this : scaled(F(1) / lead()); }

  F evaluate(const F& t) const {
    F acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * t + c_[i];
    return acc;
  }

  std::string to_string(const std::string& var) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Scales a nonzero polynomial to a canonical associate before it is reused
/// in a remainder sequence; over Q this keeps coefficients primitive integers.
template <class F>
UniPoly<F> remainder_normal(const UniPoly<F>& p) {
  return p.monic();
}

template <>
inline UniPoly<Rational> remainder_normal(const UniPoly<Rational>& p) {
  mpz_class den = 1, num = 0;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.raw().get_num() * (den / c.raw().get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  return p.scaled(Rational(mpq_class(den, num)));
}

template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  if (!a.is_zero()) a = remainder_normal(a);
  if (!b.is_zero()) b = remainder_normal(b);
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.is_zero() ? r : remainder_normal(r);
  }
  return a.monic();
}

template <class F>
std::string UniPoly<F>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    std::string c = c_[i].to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string mon = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mon.empty()) out += c;
    else if (c == "1") out += mon;
    else out += c + "*" + mon;
  }
  return out;
}

/// Element of K(t) in canonical form: gcd(num, den) = 1, den monic.
template <class F>
class RationalFunction {
 public:
  RationalFunction() : den_(F(1)) {}
  RationalFunction(long v) : num_(F(v)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(F c) : num_(c), den_(F(1)) {}
  RationalFunction(UniPoly<F> num, UniPoly<F> den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }
  static RationalFunction t() { return RationalFunction(UniPoly<F>::monomial(F(1), 1), UniPoly<F>(F(1))); }

  const UniPoly<F>& num() const { return num_; }
  const UniPoly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
  RationalFunction operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    return RationalFunction(num_ * o.num_, den_ * o.den_);
  }
  RationalFunction operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero in K(t)");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  F evaluate(const F& t) const { return num_.evaluate(t) / den_.evaluate(t); }

  std::string to_string() const {
    if (den_.degree() == 0) {
      if (num_.degree() <= 0) return num_.is_zero() ? "0" : num_.lead().to_string();
      return "(" + num_.to_string("t") + ")";
    }
    return "(" + num_.to_string("t") + ")/(" + den_.to_string("t") + ")";
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator in K(t)");
    if (num_.is_zero()) {
      den_ = UniPoly<F>(F(1));
      return;
    }
    if (den_.degree() > 0) {
      UniPoly<F> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
      }
    }
    F inv = F(1) / den_.lead();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  UniPoly<F> num_;
  UniPoly<F> den_;
};

using RationalT = RationalFunction<Rational>;

inline std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Fp& v) { return os << v.to_string(); }
template <class B>
std::ostream& operator<<(std::ostream& os, const RationalFunction<B>& v) { return os << v.to_string(); }
using FpT = RationalFunction<Fp>;

/// Per-field helpers used by parsers, printers and randomized suites.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool has_parameter = false;
  static std::string name() { return "Q"; }
  static Rational from_fraction(long n, long d) { return Rational(n, d); }
  static Rational parameter() { throw std::invalid_argument("field Q has no parameter t"); }
  static Rational random(std::mt19937_64& rng) {
    return Rational(std::uniform_int_distribution<long>(-9, 9)(rng));
  }
};

template <>
struct FieldTraits<Fp> {
  static constexpr bool has_parameter = false;
  static std::string name() { return "Fp:" + std::to_string(Fp::modulus()); }
  static Fp from_fraction(long n, long d) { return Fp(n) / Fp(d); }
  static Fp parameter() { throw std::invalid_argument("field F_p has no parameter t"); }
  static Fp random(std::mt19937_64& rng) {
    return Fp((long long)std::uniform_int_distribution<uint32_t>(0, Fp::modulus() - 1)(rng));
  }
};

template <class B>
struct FieldTraits<RationalFunction<B>> {
  static constexpr bool has_parameter = true;
  static std::string name() { return FieldTraits<B>::name() + "(t)"; }
  static RationalFunction<B> from_fraction(long n, long d) {
    return RationalFunction<B>(FieldTraits<B>::from_fraction(n, d));
  }
  static RationalFunction<B> parameter() { return RationalFunction<B>::t(); }
  static RationalFunction<B> random(std::mt19937_64& rng) {
    UniPoly<B> num = UniPoly<B>(FieldTraits<B>::random(rng)) +
                     UniPoly<B>::monomial(FieldTraits<B>::random(rng), 1);
    UniPoly<B> den = UniPoly<B>(FieldTraits<B>::random(rng)) + UniPoly<B>::monomial(B(1), 1);
    return RationalFunction<B>(num, den);
  }
};

}  // namespace tate

namespace Eigen {

template <>
struct NumTraits<tate::Rational> : GenericNumTraits<tate::Rational> {
  typedef tate::Rational Real;
  typedef tate::Rational NonInteger;
  typedef tate::Rational Nested;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 1, AddCost = 3, MulCost = 3 };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<tate::Fp> : GenericNumTraits<tate::Fp> {
  typedef tate::Fp Real;
  typedef tate::Fp NonInteger;
  typedef tate::Fp Nested;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 1, AddCost = 1, MulCost = 1 };
  static inline int digits10() { return 0; }
};

template <class B>
struct NumTraits<tate::RationalFunction<B>> : GenericNumTraits<tate::RationalFunction<B>> {
  typedef tate::RationalFunction<B> Real;
  typedef tate::RationalFunction<B> NonInteger;
  typedef tate::RationalFunction<B> Nested;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
         ReadCost = 1, AddCost = 10, MulCost = 10 };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
