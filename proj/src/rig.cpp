#include "catalg/rig.hpp"

#include <cctype>
#include <charconv>
#include <system_error>

namespace catalg {

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return std::to_string(v);
  return std::string(buf, end);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_bigint(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(Errc::bad_literal, "not an integer literal: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text));
}

}  // namespace

std::string Rational::str() const {
  if (denominator() == 1) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigRational(parse_bigint(text)));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::bad_literal, "zero denominator in '" + std::string(text) + "'");
  return Rational(den < 0 ? BigRational(-num, -den) : BigRational(num, den));
}

Integer Integer::parse(std::string_view text) { return Integer(parse_bigint(text)); }

Natural Natural::parse(std::string_view text) { return Natural::of(parse_bigint(text)); }

std::string Tropical::str() const { return is_infinite() ? "inf" : shortest(value_); }

std::string RigTraits<Complex>::format(const Complex& a) {
  std::string out = shortest(a.real());
  const double im = a.imag();
  if (std::signbit(im))
    out += "-" + shortest(-im);
  else
    out += "+" + shortest(im);
  return out + "i";
}

std::string_view to_string(RigKind kind) {
  return visit_rig(kind, []<class S>(std::type_identity<S>) { return RigTraits<S>::name; });
}

RigKind parse_rig_kind(std::string_view name) {
  for (RigKind k : {RigKind::rational, RigKind::complex, RigKind::integer, RigKind::natural, RigKind::boolean,
                    RigKind::tropical}) {
    if (to_string(k) == name) return k;
  }
  throw Error(Errc::unknown_rig, "unknown rig '" + std::string(name) + "'");
}

RigInfo builtin_rig(RigKind kind) {
  return visit_rig(kind, []<class S>(std::type_identity<S>) {
    using T = RigTraits<S>;
    return RigInfo{T::kind, T::name, T::is_commutative, T::has_subtraction, T::is_field, T::is_ordered};
  });
}

}  // namespace catalg
