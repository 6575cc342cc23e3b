#pragma once

// Rig scalars: each built-in rig is a value type whose operator+ and operator*
// are the rig addition and multiplication. That lets Eigen dense matrices and
// vectors over any rig use ordinary expression syntax; a tropical matrix
// product is the min-plus product.
//
// Eigen builds constants with Scalar(0) and Scalar(1). Every scalar here maps
// an integer n to n.1 (the image of n under the unique rig map from N), so
// Scalar(0) is the rig zero and Scalar(1) the rig one in every rig.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "catalg/error.hpp"

namespace catalg {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]; plain modulo keeps streams identical across
/// standard libraries so seeded reports are byte-reproducible.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

// ---------------------------------------------------------------------------
// Scalar types

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Rational {
 public:
  Rational() = default;
  explicit Rational(int n) : value_(n) {}
  Rational(std::int64_t num, std::int64_t den) : value_(BigInt(num), BigInt(checked_den(den))) {
    if (den < 0) value_ = BigRational(-BigInt(num), -BigInt(den));
  }
  explicit Rational(BigRational value) : value_(std::move(value)) {}

  const BigRational& value() const { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  double to_double() const { return value_.convert_to<double>(); }
  bool is_zero() const { return value_ == 0; }

  /// "p/q" in lowest terms, or "p" when q = 1.
  std::string str() const;
  /// Accepts "p", "-p", "p/q"; q must be nonzero.
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw Error(Errc::not_invertible, "division by zero");
    return Rational(a.value_ / b.value_);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.value_); }
  Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
  Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
  Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

 private:
  static std::int64_t checked_den(std::int64_t den) {
    if (den == 0) throw Error(Errc::bad_literal, "zero denominator");
    return den < 0 ? 1 : den;
  }

  BigRational value_;
};

class Integer {
 public:
  Integer() = default;
  explicit Integer(int n) : value_(n) {}
  explicit Integer(BigInt value) : value_(std::move(value)) {}
  static Integer of(std::int64_t n) { return Integer(BigInt(n)); }

  const BigInt& value() const { return value_; }
  std::string str() const { return value_.str(); }
  static Integer parse(std::string_view text);

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(a.value_ + b.value_); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(a.value_ - b.value_); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(a.value_ * b.value_); }
  friend Integer operator-(const Integer& a) { return Integer(-a.value_); }
  Integer& operator+=(const Integer& b) { value_ += b.value_; return *this; }
  Integer& operator-=(const Integer& b) { value_ -= b.value_; return *this; }
  Integer& operator*=(const Integer& b) { value_ *= b.value_; return *this; }
  friend bool operator==(const Integer& a, const Integer& b) { return a.value_ == b.value_; }
  friend bool operator<(const Integer& a, const Integer& b) { return a.value_ < b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

 private:
  BigInt value_;
};

/// Nonnegative integers. No subtraction is provided.
class Natural {
 public:
  Natural() = default;
  explicit Natural(int n) : value_(n) {
    if (n < 0) throw Error(Errc::bad_literal, "negative natural number");
  }
  static Natural of(BigInt value) {
    if (value < 0) throw Error(Errc::bad_literal, "negative natural number");
    Natural r;
    r.value_ = std::move(value);
    return r;
  }

  const BigInt& value() const { return value_; }
  std::string str() const { return value_.str(); }
  static Natural parse(std::string_view text);

  friend Natural operator+(const Natural& a, const Natural& b) { return of(a.value_ + b.value_); }
  friend Natural operator*(const Natural& a, const Natural& b) { return of(a.value_ * b.value_); }
  Natural& operator+=(const Natural& b) { value_ += b.value_; return *this; }
  Natural& operator*=(const Natural& b) { value_ *= b.value_; return *this; }
  friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const Natural& a) { return os << a.str(); }

 private:
  BigInt value_;
};

/// The two-element rig ({false, true}, or, and).
class Boolean {
 public:
  constexpr Boolean() = default;
  constexpr explicit Boolean(int n) : value_(n != 0) {}
  static constexpr Boolean of(bool b) { return Boolean(b ? 1 : 0); }

  constexpr bool value() const { return value_; }
  std::string str() const { return value_ ? "true" : "false"; }

  friend constexpr Boolean operator+(Boolean a, Boolean b) { return of(a.value_ || b.value_); }
  friend constexpr Boolean operator*(Boolean a, Boolean b) { return of(a.value_ && b.value_); }
  constexpr Boolean& operator+=(Boolean b) { return *this = *this + b; }
  constexpr Boolean& operator*=(Boolean b) { return *this = *this * b; }
  friend constexpr bool operator==(Boolean a, Boolean b) { return a.value_ == b.value_; }
  friend std::ostream& operator<<(std::ostream& os, Boolean a) { return os << a.str(); }

 private:
  bool value_ = false;
};

/// Min-plus rig on R u {+inf}: addition is min, multiplication is +,
/// zero is +inf and one is 0.
class Tropical {
 public:
  static constexpr double infinity = std::numeric_limits<double>::infinity();

  constexpr Tropical() = default;
  constexpr explicit Tropical(int n) : value_(n == 0 ? infinity : 0.0) {}
  static Tropical of(double v) {
    if (std::isnan(v) || v == -infinity) throw Error(Errc::bad_literal, "tropical value must be real or +inf");
    Tropical t;
    t.value_ = v;
    return t;
  }

  constexpr double value() const { return value_; }
  constexpr bool is_infinite() const { return value_ == infinity; }
  std::string str() const;

  friend Tropical operator+(Tropical a, Tropical b) { return of(std::min(a.value_, b.value_)); }
  friend Tropical operator*(Tropical a, Tropical b) { return of(a.value_ + b.value_); }
  Tropical& operator+=(Tropical b) { return *this = *this + b; }
  Tropical& operator*=(Tropical b) { return *this = *this * b; }
  friend constexpr bool operator==(Tropical a, Tropical b) { return a.value_ == b.value_; }
  friend std::ostream& operator<<(std::ostream& os, Tropical a) { return os << a.str(); }

 private:
  double value_ = infinity;
};

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Rig traits

enum class RigKind { rational, complex, integer, natural, boolean, tropical };

template <class S>
struct RigTraits;

template <>
struct RigTraits<Rational> {
  static constexpr RigKind kind = RigKind::rational;
  static constexpr std::string_view name = "rational";
  static constexpr bool is_commutative = true;
  static constexpr bool has_subtraction = true;
  static constexpr bool is_field = true;
  static constexpr bool is_ordered = true;
  static constexpr bool is_exact = true;
  static constexpr double default_tol = 0.0;

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational star(const Rational& a) { return a; }
  static bool is_positive(const Rational& a, double = default_tol) { return a >= zero(); }
  static bool is_central(const Rational&) { return true; }
  static bool eq(const Rational& a, const Rational& b, double = default_tol) { return a == b; }
  static double distance(const Rational& a, const Rational& b) { return std::abs((a - b).to_double()); }
  static std::string format(const Rational& a) { return a.str(); }
  static Rational sample(Rng& rng) {
    return Rational(uniform_int(rng, -12, 12), uniform_int(rng, 1, 9));
  }
};

template <>
struct RigTraits<Complex> {
  static constexpr RigKind kind = RigKind::complex;
  static constexpr std::string_view name = "complex";
  static constexpr bool is_commutative = true;
  static constexpr bool has_subtraction = true;
  static constexpr bool is_field = true;
  static constexpr bool is_ordered = false;
  static constexpr bool is_exact = false;
  static constexpr double default_tol = 1e-12;

  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex star(const Complex& a) { return std::conj(a); }
  /// Membership in R>=0 inside C, up to an absolute tolerance.
  static bool is_positive(const Complex& a, double tol = default_tol) {
    return std::abs(a.imag()) <= tol && a.real() >= -tol;
  }
  static bool is_central(const Complex&) { return true; }
  static bool eq(const Complex& a, const Complex& b, double tol = default_tol) {
    return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
  }
  static double distance(const Complex& a, const Complex& b) { return std::abs(a - b); }
  static std::string format(const Complex& a);
  static Complex sample(Rng& rng) {
    const double re = uniform_real(rng, -2.0, 2.0);
    const double im = uniform_real(rng, -2.0, 2.0);
    return {re, im};
  }
};

template <>
struct RigTraits<Integer> {
  static constexpr RigKind kind = RigKind::integer;
  static constexpr std::string_view name = "integer";
  static constexpr bool is_commutative = true;
  static constexpr bool has_subtraction = true;
  static constexpr bool is_field = false;
  static constexpr bool is_ordered = true;
  static constexpr bool is_exact = true;
  static constexpr double default_tol = 0.0;

  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static Integer star(const Integer& a) { return a; }
  static bool is_positive(const Integer& a, double = default_tol) { return !(a < zero()); }
  static bool is_central(const Integer&) { return true; }
  static bool eq(const Integer& a, const Integer& b, double = default_tol) { return a == b; }
  static double distance(const Integer& a, const Integer& b) {
    return std::abs((a - b).value().convert_to<double>());
  }
  static std::string format(const Integer& a) { return a.str(); }
  static Integer sample(Rng& rng) { return Integer::of(uniform_int(rng, -20, 20)); }
};

template <>
struct RigTraits<Natural> {
  static constexpr RigKind kind = RigKind::natural;
  static constexpr std::string_view name = "natural";
  static constexpr bool is_commutative = true;
  static constexpr bool has_subtraction = false;
  static constexpr bool is_field = false;
  static constexpr bool is_ordered = true;
  static constexpr bool is_exact = true;
  static constexpr double default_tol = 0.0;

  static Natural zero() { return Natural(0); }
  static Natural one() { return Natural(1); }
  static Natural star(const Natural& a) { return a; }
  static bool is_positive(const Natural&, double = default_tol) { return true; }
  static bool is_central(const Natural&) { return true; }
  static bool eq(const Natural& a, const Natural& b, double = default_tol) { return a == b; }
  static double distance(const Natural& a, const Natural& b) {
    const BigInt d = a.value() - b.value();
    return std::abs(d.convert_to<double>());
  }
  static std::string format(const Natural& a) { return a.str(); }
  static Natural sample(Rng& rng) { return Natural::of(BigInt(uniform_int(rng, 0, 20))); }
};

template <>
struct RigTraits<Boolean> {
  static constexpr RigKind kind = RigKind::boolean;
  static constexpr std::string_view name = "boolean";
  static constexpr bool is_commutative = true;
  static constexpr bool has_subtraction = false;
  static constexpr bool is_field = false;
  static constexpr bool is_ordered = true;
  static constexpr bool is_exact = true;
  static constexpr double default_tol = 0.0;

  static Boolean zero() { return Boolean(0); }
  static Boolean one() { return Boolean(1); }
  static Boolean star(Boolean a) { return a; }
  static bool is_positive(Boolean, double = default_tol) { return true; }
  static bool is_central(Boolean) { return true; }
  static bool eq(Boolean a, Boolean b, double = default_tol) { return a == b; }
  static double distance(Boolean a, Boolean b) { return a == b ? 0.0 : 1.0; }
  static std::string format(Boolean a) { return a.str(); }
  static Boolean sample(Rng& rng) { return Boolean::of((rng() & 1U) != 0); }
};

template <>
struct RigTraits<Tropical> {
  static constexpr RigKind kind = RigKind::tropical;
  static constexpr std::string_view name = "tropical";
  static constexpr bool is_commutative = true;
  static constexpr bool has_subtraction = false;
  static constexpr bool is_field = false;
  static constexpr bool is_ordered = true;
  static constexpr bool is_exact = true;
  static constexpr double default_tol = 0.0;

  static Tropical zero() { return Tropical(0); }
  static Tropical one() { return Tropical(1); }
  static Tropical star(Tropical a) { return a; }
  static bool is_positive(Tropical, double = default_tol) { return true; }
  static bool is_central(Tropical) { return true; }
  static bool eq(Tropical a, Tropical b, double = default_tol) { return a == b; }
  static double distance(Tropical a, Tropical b) {
    if (a == b) return 0.0;
    return std::abs(a.value() - b.value());
  }
  static std::string format(Tropical a) { return a.str(); }
  /// Integer-valued samples keep + exact in floating point.
  static Tropical sample(Rng& rng) {
    if (uniform_int(rng, 0, 7) == 0) return zero();
    return Tropical::of(static_cast<double>(uniform_int(rng, -10, 20)));
  }
};

template <class S>
concept RigScalar = requires(const S& a, const S& b, Rng& rng) {
  { RigTraits<S>::kind } -> std::convertible_to<RigKind>;
  { RigTraits<S>::zero() } -> std::same_as<S>;
  { RigTraits<S>::one() } -> std::same_as<S>;
  { RigTraits<S>::star(a) } -> std::same_as<S>;
  { RigTraits<S>::is_positive(a) } -> std::same_as<bool>;
  { RigTraits<S>::is_central(a) } -> std::same_as<bool>;
  { RigTraits<S>::eq(a, b) } -> std::same_as<bool>;
  { RigTraits<S>::sample(rng) } -> std::same_as<S>;
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
};

template <RigScalar S>
S rig_zero() { return RigTraits<S>::zero(); }

template <RigScalar S>
S rig_one() { return RigTraits<S>::one(); }

template <RigScalar S>
S conj(const S& a) { return RigTraits<S>::star(a); }

template <RigScalar S>
bool rig_eq(const S& a, const S& b, double tol = RigTraits<S>::default_tol) {
  return RigTraits<S>::eq(a, b, tol);
}

template <RigScalar S>
std::string format(const S& a) { return RigTraits<S>::format(a); }

// ---------------------------------------------------------------------------
// Runtime rig descriptors

/// Runtime summary of a built-in rig, used where the rig is chosen by name.
struct RigInfo {
  RigKind kind;
  std::string_view name;
  bool is_commutative;
  bool has_subtraction;
  bool is_field;
  bool is_ordered;
};

std::string_view to_string(RigKind kind);
/// Exact names: "rational", "complex", "integer", "natural", "boolean", "tropical".
RigKind parse_rig_kind(std::string_view name);
RigInfo builtin_rig(RigKind kind);

/// Calls f(std::type_identity<S>{}) with the scalar type behind `kind`.
template <class F>
decltype(auto) visit_rig(RigKind kind, F&& f) {
  switch (kind) {
    case RigKind::rational: return f(std::type_identity<Rational>{});
    case RigKind::complex: return f(std::type_identity<Complex>{});
    case RigKind::integer: return f(std::type_identity<Integer>{});
    case RigKind::natural: return f(std::type_identity<Natural>{});
    case RigKind::boolean: return f(std::type_identity<Boolean>{});
    case RigKind::tropical: return f(std::type_identity<Tropical>{});
  }
  throw Error(Errc::unknown_rig, "unhandled rig kind");
}

/// A rig with involution and positivity given by explicit operations. The
/// built-in rigs produce one through builtin_rig<S>(); tests build deliberately
/// broken ones to exercise check_rig_laws.
template <class S>
struct RigDescriptor {
  std::string name;
  S zero;
  S one;
  std::function<S(const S&, const S&)> add;
  std::function<S(const S&, const S&)> mul;
  std::function<S(const S&)> star;
  std::function<bool(const S&)> is_positive;
  std::function<bool(const S&)> is_central;
  std::function<bool(const S&, const S&)> eq;
  bool is_commutative = true;
  bool has_subtraction = false;
  bool is_field = false;
  bool is_ordered = false;
};

template <RigScalar S>
RigDescriptor<S> builtin_rig(double tol = RigTraits<S>::default_tol) {
  using T = RigTraits<S>;
  RigDescriptor<S> d;
  d.name = std::string(T::name);
  d.zero = T::zero();
  d.one = T::one();
  d.add = [](const S& a, const S& b) { return S(a + b); };
  d.mul = [](const S& a, const S& b) { return S(a * b); };
  d.star = [](const S& a) { return T::star(a); };
  d.is_positive = [tol](const S& a) { return T::is_positive(a, tol); };
  d.is_central = [](const S& a) { return T::is_central(a); };
  d.eq = [tol](const S& a, const S& b) { return T::eq(a, b, tol); };
  d.is_commutative = T::is_commutative;
  d.has_subtraction = T::has_subtraction;
  d.is_field = T::is_field;
  d.is_ordered = T::is_ordered;
  return d;
}

template <class S>
struct LawCheck {
  std::string law;
  bool passed = true;
  std::size_t samples = 0;
  std::optional<std::array<S, 3>> witness;
};

template <class S>
struct LawReport {
  std::vector<LawCheck<S>> laws;

  bool all_passed() const {
    return std::all_of(laws.begin(), laws.end(), [](const auto& l) { return l.passed; });
  }
  const LawCheck<S>* find(std::string_view law) const {
    for (const auto& l : laws)
      if (l.law == law) return &l;
    return nullptr;
  }
};

inline constexpr std::array<std::string_view, 8> rig_law_names = {
    "additive_monoid", "multiplicative_monoid", "distributivity",          "absorption",
    "star_involutive", "star_additive",         "star_antimultiplicative", "positivity",
};

/// Evaluates both sides of every rig, involution and positivity law on each
/// sampled triple. Failures are recorded with the first offending triple.
template <class S>
LawReport<S> check_rig_laws(const RigDescriptor<S>& rig, std::span<const std::array<S, 3>> samples) {
  const auto& add = rig.add;
  const auto& mul = rig.mul;
  const auto& star = rig.star;
  const auto& eq = rig.eq;
  const auto& pos = rig.is_positive;
  const S& zero = rig.zero;
  const S& one = rig.one;

  using Law = std::function<bool(const S&, const S&, const S&)>;
  const std::array<Law, 8> laws = {
      // additive_monoid
      [&](const S& a, const S& b, const S& c) {
        return eq(add(add(a, b), c), add(a, add(b, c))) && eq(add(a, b), add(b, a)) &&
               eq(add(a, zero), a) && eq(add(zero, a), a);
      },
      // multiplicative_monoid
      [&](const S& a, const S& b, const S& c) {
        return eq(mul(mul(a, b), c), mul(a, mul(b, c))) && eq(mul(a, one), a) && eq(mul(one, a), a);
      },
      // distributivity
      [&](const S& a, const S& b, const S& c) {
        return eq(mul(c, add(b, a)), add(mul(c, b), mul(c, a))) &&
               eq(mul(add(c, b), a), add(mul(c, a), mul(b, a)));
      },
      // absorption
      [&](const S& a, const S&, const S&) { return eq(mul(zero, a), zero) && eq(mul(a, zero), zero); },
      // star_involutive
      [&](const S& a, const S&, const S&) { return eq(star(star(a)), a); },
      // star_additive
      [&](const S& a, const S& b, const S&) { return eq(star(add(a, b)), add(star(a), star(b))); },
      // star_antimultiplicative
      [&](const S& a, const S& b, const S&) { return eq(star(mul(a, b)), mul(star(b), star(a))); },
      // positivity: a*a in R+, R+ closed under + and *, zero-sum-free
      [&](const S& a, const S& b, const S&) {
        if (!pos(mul(star(a), a))) return false;
        if (!pos(zero) || !pos(one)) return false;
        if (pos(a) && pos(b)) {
          if (!pos(add(a, b)) || !pos(mul(a, b))) return false;
          if (eq(add(a, b), zero) && !(eq(a, zero) && eq(b, zero))) return false;
        }
        return true;
      },
  };

  LawReport<S> report;
  for (std::size_t i = 0; i < laws.size(); ++i) {
    LawCheck<S> check;
    check.law = std::string(rig_law_names[i]);
    for (const auto& t : samples) {
      ++check.samples;
      if (!laws[i](t[0], t[1], t[2])) {
        check.passed = false;
        check.witness = t;
        break;
      }
    }
    report.laws.push_back(std::move(check));
  }
  return report;
}

template <RigScalar S>
std::vector<std::array<S, 3>> sample_triples(Rng& rng, std::size_t count) {
  std::vector<std::array<S, 3>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    S a = RigTraits<S>::sample(rng);
    S b = RigTraits<S>::sample(rng);
    S c = RigTraits<S>::sample(rng);
    out.push_back({a, b, c});
  }
  return out;
}

}  // namespace catalg

// ---------------------------------------------------------------------------
// Eigen integration

namespace Eigen {

namespace catalg_detail {
template <class S, int Cost>
struct RigNumTraits : GenericNumTraits<S> {
  using Real = S;
  using NonInteger = S;
  using Literal = S;
  using Nested = S;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = Cost,
    MulCost = Cost,
  };
  static inline S epsilon() { return S(0); }
  static inline S dummy_precision() { return S(0); }
  static inline int digits10() { return 0; }
};
}  // namespace catalg_detail

template <>
struct NumTraits<catalg::Rational> : catalg_detail::RigNumTraits<catalg::Rational, 8> {};
template <>
struct NumTraits<catalg::Integer> : catalg_detail::RigNumTraits<catalg::Integer, 4> {};
template <>
struct NumTraits<catalg::Natural> : catalg_detail::RigNumTraits<catalg::Natural, 4> {};
template <>
struct NumTraits<catalg::Boolean> : catalg_detail::RigNumTraits<catalg::Boolean, 1> {};
template <>
struct NumTraits<catalg::Tropical> : catalg_detail::RigNumTraits<catalg::Tropical, 1> {};

}  // namespace Eigen
