#pragma once

#include <charconv>
#include <sstream>
#include <string>

#include "catalg/cli.hpp"
#include "catalg/gns.hpp"

namespace catalg::cli {

inline std::string num(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <RigScalar S>
Json vector_json(const FinCategory& cat, const DenseVector<S>& v) {
  Json out = Json::object();
  for (ArrowId c = 0; c < cat.arrow_count(); ++c) out[cat.arrow_label(c)] = to_json(v(static_cast<Eigen::Index>(c)));
  return out;
}

template <class Scalar, class ToJson>
Json matrix_json(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m, ToJson to) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Scalar, class Fmt>
std::string matrix_text(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m, Fmt fmt) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += fmt(m(i, j));
    }
  }
  return s + "]";
}

inline std::string complex_text(const Complex& z) {
  // Snap float noise so printed matrices stay readable.
  auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  return RigTraits<Complex>::format(Complex(clean(z.real()), clean(z.imag())));
}

inline Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"trials", c.trials}, {"failures", c.failures}, {"max_residual", c.max_residual}});
  return checks;
}

inline void report_text(std::ostringstream& os, const VerificationReport& r) {
  for (const auto& c : r.checks) {
    os << "  " << c.name << std::string(c.name.size() < 24 ? 24 - c.name.size() : 1, ' ') << c.trials << " trials, "
       << c.failures << " failures, max residual " << num(c.max_residual) << "\n";
  }
}

}  // namespace catalg::cli
