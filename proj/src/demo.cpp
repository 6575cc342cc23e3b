#include <limits>
#include <sstream>

#include "catalg/cli.hpp"
#include "catalg/gns.hpp"
#include "catalg/moebius.hpp"
#include "cli_util.hpp"

namespace catalg {
namespace {

using cli::num;

struct DemoCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct DemoItem {
  explicit DemoItem(std::string n) : name(std::move(n)) {}

  std::string name;
  std::vector<DemoCheck> checks;
  void check(std::string check_name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(check_name), ok, std::move(detail)});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

int number_theoretic_mu(std::size_t n) {
  int sign = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::string residual_detail(const VerificationReport& r) {
  double worst = 0.0;
  std::size_t failures = 0;
  for (const auto& c : r.checks) {
    worst = std::max(worst, c.max_residual);
    failures += c.failures;
  }
  return std::to_string(failures) + " failures, max residual " + num(worst);
}

DemoItem chain_demo() {
  DemoItem item{"chain-3"};
  const auto cat = chain(3);
  item.check("valid", validate_category(*cat).valid());
  const auto cert = invert(zeta<Rational>(cat));
  item.check("certificate", cert.exact(), "residuals zero");
  bool ok = true;
  for (ArrowId c = 0; c < cat->arrow_count(); ++c) {
    const auto gap = cat->cod(c) - cat->dom(c);
    const Rational expected(gap == 0 ? 1 : gap == 1 ? -1 : 0);
    ok = ok && cert.inverse(c) == expected;
  }
  item.check("mu", ok, "1 on identities, -1 on covers, 0 otherwise");
  return item;
}

DemoItem divisor_demo() {
  DemoItem item{"divisor-poset-60"};
  const auto cat = divisor_poset(60);
  item.check("valid", validate_category(*cat).valid(), std::to_string(cat->object_count()) + " divisors");
  const auto cert = invert(zeta<Rational>(cat));
  item.check("certificate", cert.exact(), "mu zeta = zeta mu = unit exactly");
  bool ok = true;
  std::string mus;
  for (ArrowId c = 0; c < cat->arrow_count(); ++c) {
    const auto a = std::stoul(cat->object_label(cat->dom(c)));
    const auto b = std::stoul(cat->object_label(cat->cod(c)));
    ok = ok && cert.inverse(c) == Rational(number_theoretic_mu(b / a));
    if (a == 1) mus += (mus.empty() ? "" : " ") + std::to_string(b) + ":" + cert.inverse(c).str();
  }
  item.check("number-theoretic", ok, "mu(1->d) " + mus);
  return item;
}

DemoItem boolean_lattice_demo() {
  DemoItem item{"boolean-lattice-3"};
  const auto cat = boolean_lattice(3);
  const auto mu = invert(zeta<Rational>(cat));
  bool ok = true;
  for (ArrowId c = 0; c < cat->arrow_count(); ++c) {
    const auto diff = static_cast<unsigned>(cat->cod(c) & ~cat->dom(c));
    ok = ok && mu.inverse(c) == Rational(__builtin_popcount(diff) % 2 ? -1 : 1);
  }
  item.check("certificate", mu.exact());
  item.check("inclusion-exclusion", ok, std::to_string(cat->arrow_count()) + " comparable pairs");
  return item;
}

DemoItem symmetric_demo(const CliOptions& opts, Rng& rng) {
  DemoItem item{"S3"};
  const auto cat = symmetric_group(3);
  item.check("valid", validate_category(*cat).valid(), std::to_string(cat->arrow_count()) + " arrows");
  const auto dag = canonical_dagger(*cat, DaggerKind::inverse);
  item.check("inverse-dagger", validate_dagger(*cat, dag).valid());

  DenseVector<Rational> delta = DenseVector<Rational>::Constant(6, Rational(0));
  delta(static_cast<Eigen::Index>(cat->identity(0))) = Rational(1);
  const auto space = make_probability_space(LinearFunctional<Rational>(cat, delta), dag);
  const auto g = build_semi_hilbert(space);
  item.check("delta-gram", g.gram == DenseMatrix<Rational>::Identity(6, 6), "gram = identity");
  const auto report = verify_gns(g, opts.verify, opts.tol, rng);
  item.check("gns", report.passed(), residual_detail(report));
  item.check("kernel-invariance", kernel_invariant_exact(g), "quotient dim " + std::to_string(exact_quotient_dim(g)));

  DenseVector<Complex> cdelta = DenseVector<Complex>::Zero(6);
  cdelta(static_cast<Eigen::Index>(cat->identity(0))) = 1.0;
  const auto cspace = make_probability_space(LinearFunctional<Complex>(cat, cdelta), dag, opts.tol);
  const auto p = build_pre_hilbert(build_semi_hilbert(cspace), opts.tol);
  double unitarity = 0.0;
  for (const auto& r : p.rep_q)
    unitarity = std::max(unitarity, (r.adjoint() * r - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff());
  item.check("unitary", unitarity <= 1e-8, "max |pi(g)^* pi(g) - 1| = " + num(unitarity));
  return item;
}

DemoItem z2_demo(const CliOptions& opts, Rng& rng) {
  DemoItem item{"Z/2-family"};
  const auto cat = cyclic_group(2);
  const auto dag = canonical_dagger(*cat, DaggerKind::inverse);
  for (double t : {-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5}) {
    DenseVector<Complex> v(2);
    v << 1.0, t;
    const LinearFunctional<Complex> phi(cat, v);
    const auto cert = check_state(phi, dag, opts.tol);
    const bool expected = std::abs(t) <= 1.0;
    const std::string tag = "t=" + num(t);
    item.check(tag + " verdict", cert.is_state() == expected, cert.is_state() ? "state" : "not a state");
    if (!cert.is_state()) continue;
    const auto g = build_semi_hilbert(make_probability_space(phi, dag, opts.tol));
    const auto p = build_pre_hilbert(g, opts.tol);
    const std::size_t dim = std::abs(t) < 1.0 ? 2 : 1;
    item.check(tag + " quotient", p.quotient_dim == dim, "dim " + std::to_string(p.quotient_dim));
    auto report = verify_gns(g, opts.verify, opts.tol, rng);
    const auto star_report = verify_star_representation(p, opts.verify, opts.tol, rng);
    report.checks.insert(report.checks.end(), star_report.checks.begin(), star_report.checks.end());
    item.check(tag + " gns", report.passed(), residual_detail(report));
  }
  return item;
}

DemoItem indiscrete_demo(const CliOptions& opts, Rng& rng) {
  DemoItem item{"indiscrete-2-3"};
  for (std::size_t n : {2u, 3u}) {
    const auto cat = indiscrete(n);
    const std::string tag = "n=" + std::to_string(n);
    const auto k = static_cast<Eigen::Index>(n);
    bool ok = to_matrix(unit<Rational>(cat)) == DenseMatrix<Rational>::Identity(k, k);
    for (std::size_t t = 0; t < opts.verify && ok; ++t) {
      const auto a = random_element<Rational>(cat, rng);
      const auto b = random_element<Rational>(cat, rng);
      ok = to_matrix(convolve(a, b)) == DenseMatrix<Rational>(to_matrix(a) * to_matrix(b)) &&
           from_matrix(cat, to_matrix(a)) == a;
    }
    item.check(tag + " matrix-iso", ok, std::to_string(opts.verify) + " random pairs");
  }
  const auto cat = indiscrete(2);
  const auto dag = canonical_dagger(*cat, DaggerKind::reverse);
  DenseVector<Complex> trace = DenseVector<Complex>::Zero(4);
  for (ObjectId x = 0; x < 2; ++x) trace(static_cast<Eigen::Index>(cat->identity(x))) = 0.5;
  const LinearFunctional<Complex> phi(cat, trace);
  const auto cert = check_state(phi, dag, opts.tol);
  item.check("trace state", cert.is_state(), "min eigenvalue " + num(cert.min_eigenvalue.value_or(0.0)));
  if (cert.is_state()) {
    const auto g = build_semi_hilbert(make_probability_space(phi, dag, opts.tol));
    const auto p = build_pre_hilbert(g, opts.tol);
    auto report = verify_gns(g, opts.verify, opts.tol, rng);
    const auto star_report = verify_star_representation(p, opts.verify, opts.tol, rng);
    report.checks.insert(report.checks.end(), star_report.checks.begin(), star_report.checks.end());
    item.check("trace gns", report.passed(), "quotient dim " + std::to_string(p.quotient_dim) + ", " + residual_detail(report));
  }
  return item;
}

DemoItem quiver_demo() {
  DemoItem item{"A3-quiver"};
  const auto cat = free_on_acyclic_quiver(3, {{0, 1, "a"}, {1, 2, "b"}});
  item.check("valid", validate_category(*cat).valid(), std::to_string(cat->arrow_count()) + " paths");
  const auto a = *cat->find_arrow("a");
  const auto b = *cat->find_arrow("b");
  const auto ba = cat->compose(b, a);
  item.check("paths", cat->arrow_count() == 6 && ba != no_arrow &&
                          convolve(indeterminate<Rational>(cat, b), indeterminate<Rational>(cat, a)) ==
                              indeterminate<Rational>(cat, ba),
             "iota^b iota^a = iota^" + (ba == no_arrow ? std::string("?") : cat->arrow_label(ba)));
  item.check("no-reverse", convolve(indeterminate<Rational>(cat, a), indeterminate<Rational>(cat, b)) ==
                               zero_element<Rational>(cat),
             "iota^a iota^b = 0");
  const auto mu = invert(zeta<Rational>(cat));
  bool ok = mu.exact();
  for (ArrowId c = 0; c < cat->arrow_count(); ++c) {
    const Rational expected(cat->is_identity(c) ? 1 : (c == a || c == b) ? -1 : 0);
    ok = ok && mu.inverse(c) == expected;
  }
  item.check("mobius", ok, "mu = 1 on identities, -1 on edges, 0 on the length-2 path");
  return item;
}

DemoItem tropical_demo() {
  DemoItem item{"tropical-shortest-paths"};
  constexpr std::size_t n = 5;
  constexpr double inf = std::numeric_limits<double>::infinity();
  // w[i][j]: weight of the edge i -> j.
  const double w[n][n] = {{0, 4, 1, inf, inf},
                          {inf, 0, inf, 1, 7},
                          {inf, 2, 0, 5, inf},
                          {inf, inf, inf, 0, 3},
                          {2, inf, inf, inf, 0}};
  const auto cat = indiscrete(n);
  DenseMatrix<Tropical> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Tropical::of(w[j][i]);
  const auto a = from_matrix(cat, m);

  double fw[n][n];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fw[i][j] = w[i][j];
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) fw[i][j] = std::min(fw[i][j], fw[i][k] + fw[k][j]);

  // dist[i][j] with at most `hops` edges, by Bellman-Ford rounds.
  double hop[n][n];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hop[i][j] = w[i][j];
  auto power = a;
  for (std::size_t hops = 1; hops < n; ++hops) {
    if (hops > 1) {
      power = convolve(a, power);
      double next[n][n];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          next[i][j] = hop[i][j];
          for (std::size_t k = 0; k < n; ++k) next[i][j] = std::min(next[i][j], hop[i][k] + w[k][j]);
        }
      std::copy(&next[0][0], &next[0][0] + n * n, &hop[0][0]);
    }
    const auto pm = to_matrix(power);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ok = ok && pm(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)).value() == hop[i][j];
    item.check("hops<=" + std::to_string(hops), ok);
  }
  const auto pm = to_matrix(power);
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ok = ok && pm(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)).value() == fw[i][j];
  item.check("floyd-warshall", ok, "a^" + std::to_string(n - 1) + " equals all-pairs shortest paths");
  return item;
}

}  // namespace

CommandResult cmd_demo(const CliOptions& opts) {
  Rng rng(opts.seed);
  std::vector<DemoItem> items;
  auto guarded = [&](const char* name, auto make) {
    try {
      items.push_back(make());
    } catch (const Error& e) {
      DemoItem failed{name};
      failed.check("error", false, e.what());
      items.push_back(std::move(failed));
    }
  };
  guarded("chain-3", chain_demo);
  guarded("divisor-poset-60", divisor_demo);
  guarded("boolean-lattice-3", boolean_lattice_demo);
  guarded("S3", [&] { return symmetric_demo(opts, rng); });
  guarded("Z/2-family", [&] { return z2_demo(opts, rng); });
  guarded("indiscrete-2-3", [&] { return indiscrete_demo(opts, rng); });
  guarded("A3-quiver", quiver_demo);
  guarded("tropical-shortest-paths", tropical_demo);

  CommandResult r;
  bool all = true;
  Json json_items = Json::array();
  std::ostringstream os;
  for (const auto& item : items) {
    all = all && item.passed();
    os << (item.passed() ? "[ok]   " : "[FAIL] ") << item.name << "\n";
    Json checks = Json::array();
    for (const auto& c : item.checks) {
      os << "       " << (c.passed ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    json_items.push_back({{"name", item.name}, {"passed", item.passed()}, {"checks", checks}});
  }
  os << (all ? "demo passed\n" : "demo FAILED\n");
  r.report = {{"command", "demo"}, {"seed", opts.seed}, {"trials", opts.verify}, {"items", json_items}, {"passed", all}};
  r.text = os.str();
  r.status = all ? 0 : 1;
  return r;
}

}  // namespace catalg
