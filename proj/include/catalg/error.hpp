#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catalg {

enum class Errc {
  bad_arrow,
  bad_object,
  mismatch,
  shape_mismatch,
  not_indiscrete,
  not_a_monoid,
  not_a_poset,
  cyclic_quiver,
  no_inverse,
  invalid_dagger,
  not_invertible,
  unsupported_rig,
  not_symmetric,
  not_hermitian,
  no_convergence,
  not_psd,
  not_central,
  not_a_state,
  parse_error,
  schema_error,
  unknown_rig,
  bad_literal,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::bad_arrow: return "BadArrow";
    case Errc::bad_object: return "BadObject";
    case Errc::mismatch: return "Mismatch";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_indiscrete: return "NotIndiscrete";
    case Errc::not_a_monoid: return "NotAMonoid";
    case Errc::not_a_poset: return "NotAPoset";
    case Errc::cyclic_quiver: return "CyclicQuiver";
    case Errc::no_inverse: return "NoInverse";
    case Errc::invalid_dagger: return "InvalidDagger";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::unsupported_rig: return "UnsupportedRig";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::not_hermitian: return "NotHermitian";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::not_psd: return "NotPSD";
    case Errc::not_central: return "NotCentral";
    case Errc::not_a_state: return "NotAState";
    case Errc::parse_error: return "ParseError";
    case Errc::schema_error: return "SchemaError";
    case Errc::unknown_rig: return "UnknownRig";
    case Errc::bad_literal: return "BadLiteral";
  }
  return "Unknown";
}

/// Every library failure is reported as a catalg::Error carrying a stable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace catalg
