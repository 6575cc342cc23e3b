#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "catalg/cli.hpp"
#include "catalg/gns.hpp"
#include "catalg/moebius.hpp"
#include "cli_util.hpp"

namespace catalg {
namespace {

using cli::num;

Json violations_json(const FinCategory& cat, const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& v : r.violations) {
    Json witness = Json::array();
    for (ArrowId c : v.witness) witness.push_back(c < cat.arrow_count() ? cat.arrow_label(c) : std::to_string(c));
    out.push_back({{"kind", v.kind}, {"witness", witness}, {"detail", v.detail}});
  }
  return out;
}

void require_valid(const CatSpecDocument& doc) {
  const auto r = validate_category(*doc.category);
  if (!r.valid())
    throw Error(Errc::schema_error, "/category: not a category (" + r.violations.front().kind + ": " +
                                        r.violations.front().detail + ")");
}

const Dagger& require_dagger(const CatSpecDocument& doc) {
  if (!doc.dagger) throw Error(Errc::schema_error, "/dagger: this command needs a dagger");
  return *doc.dagger;
}

template <RigScalar S>
LinearFunctional<S> require_functional(const CatSpecDocument& doc) {
  if (!doc.functional) throw Error(Errc::schema_error, "/functional: this command needs a functional");
  return LinearFunctional<S>(doc.category, std::get<DenseVector<S>>(*doc.functional));
}

Json header(const char* command, const CatSpecDocument& doc) {
  return {{"command", command},
          {"rig", std::string(to_string(doc.rig))},
          {"objects", doc.category->object_count()},
          {"arrows", doc.category->arrow_count()}};
}

// ---------------------------------------------------------------------------

template <RigScalar S>
CommandResult mul_impl(const CatSpecDocument& doc, const std::string& left, const std::string& right) {
  require_valid(doc);
  const auto a = element<S>(doc, left);
  const auto b = element<S>(doc, right);
  const auto p = convolve(a, b);
  CommandResult r;
  r.report = header("mul", doc);
  r.report["left"] = left;
  r.report["right"] = right;
  r.report["product"] = cli::vector_json(*doc.category, p.coeffs());
  std::ostringstream os;
  os << left << " * " << right << ":\n";
  for (ArrowId c = 0; c < p.size(); ++c) os << "  " << doc.category->arrow_label(c) << ": " << format(p(c)) << "\n";
  r.text = os.str();
  return r;
}

template <RigScalar S>
CommandResult mobius_impl(const CatSpecDocument& doc, const CliOptions& opts) {
  require_valid(doc);
  const auto cert = invert(zeta<S>(doc.category), opts.tol);
  const auto& cat = *doc.category;
  CommandResult r;
  r.report = header("mobius", doc);
  r.report["mu"] = cli::vector_json(cat, cert.inverse.coeffs());
  const bool exact = cert.exact();
  const double residual = cert.max_residual();
  r.report["certificate"] = {{"exact", exact}, {"max_residual", residual}};
  r.status = exact || (!RigTraits<S>::is_exact && residual <= opts.tol) ? 0 : 1;

  std::ostringstream os;
  os << "Mobius function (" << cat.arrow_count() << " arrows, " << to_string(doc.rig) << ")\n";
  for (ArrowId c = 0; c < cat.arrow_count(); ++c) os << "  mu(" << cat.arrow_label(c) << ") = " << format(cert.inverse(c)) << "\n";
  if (exact)
    os << "certificate: residuals zero\n";
  else
    os << "certificate: max residual " << num(residual) << "\n";
  r.text = os.str();
  return r;
}

template <RigScalar S>
CommandResult state_impl(const CatSpecDocument& doc, const CliOptions& opts) {
  require_valid(doc);
  const auto& cat = *doc.category;
  const auto cert = check_state(require_functional<S>(doc), require_dagger(doc), opts.tol);
  CommandResult r;
  r.report = header("state-check", doc);
  r.report["dagger"] = doc.dagger_source;
  r.report["verdict"] = cert.is_state() ? "state" : "not_state";
  r.report["reason"] = cert.reason;
  r.report["gram"] = cli::matrix_json(cert.gram, [](const S& x) { return to_json(x); });
  if (cert.min_eigenvalue) r.report["min_eigenvalue"] = *cert.min_eigenvalue;
  if (cert.witness) r.report["witness"] = cli::vector_json(cat, *cert.witness);
  if (cert.witness_value) r.report["witness_value"] = to_json(*cert.witness_value);
  r.status = cert.is_state() ? 0 : 1;

  std::ostringstream os;
  os << "verdict: " << (cert.is_state() ? "state" : "not a state");
  if (!cert.reason.empty()) os << " (" << cert.reason << ")";
  os << "\n";
  if (cert.min_eigenvalue) os << "min eigenvalue of gram: " << num(*cert.min_eigenvalue) << "\n";
  if (cert.witness) {
    os << "witness:";
    for (ArrowId c = 0; c < cat.arrow_count(); ++c) os << " " << cat.arrow_label(c) << "=" << format((*cert.witness)(static_cast<Eigen::Index>(c)));
    os << "\n";
  }
  if (cert.witness_value) os << "gram form at witness: " << format(*cert.witness_value) << "\n";
  r.text = os.str();
  return r;
}

template <RigScalar S>
CommandResult gns_impl(const CatSpecDocument& doc, const CliOptions& opts) {
  require_valid(doc);
  const auto& cat = *doc.category;
  const auto phi = require_functional<S>(doc);
  const auto& dag = require_dagger(doc);
  const auto space = [&] {
    if constexpr (has_psd_decision<S>)
      return make_probability_space(phi, dag, opts.tol);
    else
      return assume_state(phi, dag);
  }();
  const auto g = build_semi_hilbert(space);
  Rng rng(opts.seed);
  auto report = verify_gns(g, opts.verify, opts.tol, rng);

  CommandResult r;
  r.report = header("gns", doc);
  r.report["dagger"] = doc.dagger_source;
  r.report["positivity_checked"] = space.positivity_checked();
  r.report["seed"] = opts.seed;

  std::ostringstream os;
  os << "GNS data for " << to_string(doc.rig) << " functional on " << cat.arrow_count() << " arrows\n";
  if (!space.positivity_checked()) os << "positivity not decided over this rig; unital and hermitian only\n";

  Json reps = Json::object();
  std::ostringstream rep_text;
  if constexpr (has_psd_decision<S>) {
    const auto spectrum = hermitian_eigen(to_complex(g.gram), 1e-12).values;
    r.report["gram_spectrum"] = std::vector<double>(spectrum.data(), spectrum.data() + spectrum.size());
    os << "gram spectrum:";
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) os << " " << num(std::abs(spectrum(i)) < 1e-12 ? 0.0 : spectrum(i));
    os << "\n";
  }
  if constexpr (std::is_same_v<S, Complex>) {
    const auto p = build_pre_hilbert(g, opts.tol);
    const auto star_report = verify_star_representation(p, opts.verify, opts.tol, rng);
    report.checks.insert(report.checks.end(), star_report.checks.begin(), star_report.checks.end());
    r.report["quotient_dim"] = p.quotient_dim;
    os << "quotient dim: " << p.quotient_dim << "\n";
    for (ArrowId c = 0; c < cat.arrow_count(); ++c) {
      reps[cat.arrow_label(c)] = cli::matrix_json(p.rep_q[c], [](const Complex& z) { return to_json(z); });
      rep_text << "  pi(" << cat.arrow_label(c) << ") = " << cli::matrix_text(p.rep_q[c], cli::complex_text) << "\n";
    }
  } else {
    if constexpr (std::is_same_v<S, Rational> || std::is_same_v<S, Integer>) {
      DenseMatrix<Rational> gram_q;
      if constexpr (std::is_same_v<S, Rational>)
        gram_q = g.gram;
      else
        gram_q = to_rational(g.gram);
      const auto dim = gram_q.cols() - exact_null_space(gram_q).cols();
      r.report["quotient_dim"] = dim;
      os << "quotient dim: " << dim << "\n";
      if constexpr (std::is_same_v<S, Rational>) {
        const auto check = report.add("kernel_invariance");
        record(report, check, 0.0, kernel_invariant_exact(g));
      }
    } else {
      r.report["quotient_dim"] = nullptr;
    }
    for (ArrowId c = 0; c < cat.arrow_count(); ++c) {
      reps[cat.arrow_label(c)] = cli::matrix_json(g.rep[c], [](const S& x) { return to_json(x); });
      rep_text << "  pi(" << cat.arrow_label(c) << ") = " << cli::matrix_text(g.rep[c], [](const S& x) { return format(x); })
               << "\n";
    }
  }
  os << "representation:\n" << rep_text.str();
  os << "verification (" << opts.verify << " trials, seed " << opts.seed << "):\n";
  cli::report_text(os, report);
  os << (report.passed() ? "all checks passed\n" : "FAILED\n");

  r.report["representation"] = reps;
  r.report["verification"] = cli::report_json(report);
  r.report["passed"] = report.passed();
  r.status = report.passed() ? 0 : 1;
  r.text = os.str();
  return r;
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

CommandResult cmd_validate(const CatSpecDocument& doc, const CliOptions&) {
  const auto& cat = *doc.category;
  const auto rep = validate_category(cat);
  CommandResult r;
  r.report = header("validate", doc);
  r.report["valid"] = rep.valid();
  r.report["violations"] = violations_json(cat, rep);
  std::ostringstream os;
  os << "category: " << cat.object_count() << " objects, " << cat.arrow_count() << " arrows\n";
  if (rep.degenerate) os << "note: empty category\n";
  auto list = [&](const ValidationReport& v, const FinCategory& c) {
    for (const auto& x : v.violations) {
      os << "  " << x.kind << ":";
      for (ArrowId a : x.witness) os << " " << (a < c.arrow_count() ? c.arrow_label(a) : std::to_string(a));
      if (!x.detail.empty()) os << " (" << x.detail << ")";
      os << "\n";
    }
  };
  os << (rep.valid() ? "valid category\n" : "INVALID category\n");
  list(rep, cat);
  bool ok = rep.valid();
  if (doc.dagger && rep.valid()) {
    const auto drep = validate_dagger(cat, *doc.dagger);
    r.report["dagger"] = {{"source", doc.dagger_source}, {"valid", drep.valid()}, {"violations", violations_json(cat, drep)}};
    os << (drep.valid() ? "valid dagger (" : "INVALID dagger (") << doc.dagger_source << ")\n";
    list(drep, cat);
    ok = ok && drep.valid();
  }
  r.status = ok ? 0 : 1;
  r.text = os.str();
  return r;
}

CommandResult cmd_mul(const CatSpecDocument& doc, const std::string& left, const std::string& right,
                      const CliOptions&) {
  return visit_rig(doc.rig, [&](auto tag) { return mul_impl<typename decltype(tag)::type>(doc, left, right); });
}

CommandResult cmd_mobius(const CatSpecDocument& doc, const CliOptions& opts) {
  return visit_rig(doc.rig, [&](auto tag) { return mobius_impl<typename decltype(tag)::type>(doc, opts); });
}

CommandResult cmd_state_check(const CatSpecDocument& doc, const CliOptions& opts) {
  return visit_rig(doc.rig, [&](auto tag) { return state_impl<typename decltype(tag)::type>(doc, opts); });
}

CommandResult cmd_gns(const CatSpecDocument& doc, const CliOptions& opts) {
  return visit_rig(doc.rig, [&](auto tag) { return gns_impl<typename decltype(tag)::type>(doc, opts); });
}

CommandResult run_command(const std::string& command, const CatSpecDocument* doc, const std::vector<std::string>& args,
                          const CliOptions& opts) {
  if (command == "demo") return cmd_demo(opts);
  if (!doc) throw Error(Errc::schema_error, command + " needs a document");
  if (command == "validate") return cmd_validate(*doc, opts);
  if (command == "mul") {
    if (args.size() != 2) throw Error(Errc::schema_error, "mul needs two element names");
    return cmd_mul(*doc, args[0], args[1], opts);
  }
  if (command == "mobius") return cmd_mobius(*doc, opts);
  if (command == "state-check") return cmd_state_check(*doc, opts);
  if (command == "gns") return cmd_gns(*doc, opts);
  throw Error(Errc::schema_error, "unknown command '" + command + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Category algebras over rigs: convolution, Mobius inversion, states and GNS."};
  app.name("catalg");
  app.require_subcommand(1);

  CliOptions opts;
  app.add_flag("--json", opts.json, "Machine-readable output");
  app.add_option("--tol", opts.tol, "Numerical tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--verify", opts.verify, "Randomized trials per identity")->capture_default_str();
  app.add_option("--seed", opts.seed, "Seed for randomized checks")->capture_default_str();

  std::string file;
  std::vector<std::string> names;
  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", file, "Document path, or - for stdin")->required();
    return sub;
  };
  with_file("validate", "Check category and dagger axioms");
  with_file("mul", "Convolve two named elements")->add_option("names", names, "Left and right element")->expected(2)->required();
  with_file("mobius", "Mobius function with an inversion certificate");
  with_file("state-check", "Decide whether the functional is a state");
  with_file("gns", "GNS construction and randomized verification");
  app.add_subcommand("demo", "Run the built-in catalog")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    std::optional<CatSpecDocument> doc;
    if (command != "demo") doc = parse_document(read_input(file));
    const auto result = run_command(command, doc ? &*doc : nullptr, names, opts);
    if (opts.json)
      out << result.report.dump(2) << "\n";
    else
      out << result.text;
    return result.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace catalg
