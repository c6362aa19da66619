#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "planar/asymptotics.hpp"
#include "planar/combinatorics.hpp"
#include "planar/complex_moments.hpp"
#include "planar/errors.hpp"
#include "planar/moments.hpp"
#include "planar/numeric/oracle.hpp"
#include "planar/verify.hpp"

namespace planar::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string family = "hermite";
  std::string tau = "0";
  std::string nu = "0";
  std::string a = "0";
  std::string alpha = "0";
  std::string ensemble = "complex";
  std::string method = "auto";
  std::string format = "text";
  int p1 = 0, p2 = 0, N = 1, p_max = 4;
  std::vector<int> N_list;
  bool oracle = false;
  std::optional<double> oracle_tol;
  std::string suite = "all";
  std::optional<std::string> suite_family;
  std::string check = "all";
  int threads = 1;
};

// Thrown for parameter validation failures found after CLI parsing.
struct Invalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool symbolic_tau(const Config& c) { return c.tau == "symbolic" || c.tau == "t"; }

WeightFamily make_family(const Config& c) {
  const FamilyKind kind = parse_family(c.family);
  if (symbolic_tau(c)) {
    const Scalar t{TauPoly::variable()};
    if (kind == FamilyKind::gegenbauer) throw Invalid("symbolic tau is not supported for the gegenbauer family");
    return kind == FamilyKind::hermite ? WeightFamily::hermite(t) : WeightFamily::laguerre(t, Rational::parse(c.nu));
  }
  const Rational tau = Rational::parse(c.tau);
  switch (kind) {
    case FamilyKind::hermite: return WeightFamily::hermite(Scalar(tau));
    case FamilyKind::laguerre: return WeightFamily::laguerre(Scalar(tau), Rational::parse(c.nu));
    case FamilyKind::gegenbauer: return WeightFamily::gegenbauer(tau, Rational::parse(c.a));
  }
  throw Invalid("unknown family");
}


std::optional<double> float_value(const Scalar& s) {
  if (s.is_symbolic()) return std::nullopt;
  return s.to_double();
}

std::string text_value(const Scalar& s) {
  if (s.is_symbolic()) return s.to_string();
  const Rational r = s.rational();
  if (r.is_integer()) return r.to_string();
  return r.to_string() + " (" + fmt17(r.to_double()) + ")";
}

json query_json(const Config& c, const WeightFamily& f, int p1, int p2, int N) {
  json q = {{"family", family_name(f.kind())}, {"tau", symbolic_tau(c) ? "symbolic" : f.tau().to_string()},
            {"p1", p1}, {"p2", p2}, {"N", N}, {"ensemble", c.ensemble}, {"method", c.method}};
  if (f.kind() == FamilyKind::laguerre) q["nu"] = f.nu().to_string();
  if (f.kind() == FamilyKind::gegenbauer) q["a"] = f.a().to_string();
  return q;
}

json float_json(const Scalar& s) {
  const auto v = float_value(s);
  return v ? json(*v) : json(nullptr);
}

double default_oracle_tol(const WeightFamily& f) { return f.kind() == FamilyKind::laguerre ? 1e-5 : 1e-7; }

int cmd_compute(const Config& c, std::ostream& out, std::ostream& err) {
  const WeightFamily f = make_family(c);
  const Component comp = parse_component(c.ensemble);
  const MomentEngine engine(f);
  const MomentResult r = engine.compute(c.p1, c.p2, c.N, comp, parse_method(c.method));

  std::optional<double> oracle_value;
  double tol = 0, discrepancy = 0;
  if (c.oracle) {
    if (f.symbolic()) throw Invalid("--oracle needs a rational tau");
    if (!(f.tau().rational() < Rational(1))) throw Invalid("--oracle needs tau < 1");
    tol = c.oracle_tol.value_or(default_oracle_tol(f));
    oracle_value = numeric::quadrature_moments_checked(f, c.N, comp, {{c.p1, c.p2}}, tol).front();
    const double exact = r.value.to_double();
    discrepancy = std::abs(*oracle_value - exact) / std::max(1.0, std::abs(exact));
  }

  if (c.format == "json") {
    json j = {{"query", query_json(c, f, c.p1, c.p2, c.N)},
              {"exact", r.value.to_string()},
              {"float", float_json(r.value)},
              {"method", r.formula_used}};
    if (r.cross_check) j["cross_check"] = *r.cross_check;
    if (oracle_value)
      j["oracle"] = {{"value", *oracle_value}, {"discrepancy", discrepancy}, {"tolerance", tol},
                     {"agree", discrepancy <= tol}, {"kernel", numeric::isa_name(numeric::active_isa())}};
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "p1,p2,N,exact,float" << (oracle_value ? ",oracle" : "") << "\n";
    const auto v = float_value(r.value);
    out << c.p1 << "," << c.p2 << "," << c.N << "," << r.value.to_string() << "," << (v ? fmt17(*v) : "");
    if (oracle_value) out << "," << fmt17(*oracle_value);
    out << "\n";
  } else {
    out << text_value(r.value) << "\n";
    if (oracle_value)
      out << "oracle " << fmt17(*oracle_value) << " (discrepancy " << fmt17(discrepancy) << ", tolerance "
          << fmt17(tol) << ")\n";
  }
  if (oracle_value && !(discrepancy <= tol)) {
    err << "oracle disagreement: relative discrepancy " << fmt17(discrepancy) << " exceeds " << fmt17(tol) << "\n";
    return exit_oracle;
  }
  return exit_ok;
}

std::vector<int> effective_N_list(const Config& c) { return c.N_list.empty() ? std::vector<int>{c.N} : c.N_list; }

int cmd_table(const Config& c, std::ostream& out) {
  const WeightFamily f = make_family(c);
  const Component comp = parse_component(c.ensemble);
  const Method m = parse_method(c.method);
  if (c.p_max < 0) throw Invalid("--p-max must be nonnegative");
  const MomentEngine engine(f);
  json rows = json::array();
  if (c.format == "csv") out << "p1,p2,N,exact,float\n";
  for (int N : effective_N_list(c))
    for (int p1 = 0; p1 <= c.p_max; ++p1)
      for (int p2 = 0; p1 + p2 <= c.p_max; ++p2) {
        const MomentResult r = engine.compute(p1, p2, N, comp, m);
        const auto v = float_value(r.value);
        if (c.format == "csv") {
          out << p1 << "," << p2 << "," << N << "," << r.value.to_string() << "," << (v ? fmt17(*v) : "") << "\n";
        } else if (c.format == "json") {
          rows.push_back({{"query", query_json(c, f, p1, p2, N)},
                          {"exact", r.value.to_string()},
                          {"float", float_json(r.value)},
                          {"method", r.formula_used}});
        } else {
          out << "M[" << p1 << "," << p2 << "," << N << "] = " << text_value(r.value) << "\n";
        }
      }
  if (c.format == "json") out << rows.dump(2) << "\n";
  return exit_ok;
}

int cmd_verify(const Config& c, std::ostream& out) {
  SuiteOptions opts;
  if (c.suite_family) opts.family = parse_family(*c.suite_family);
  const auto names = expand_suite(c.suite);
  const auto reports = run_suites(names, opts, c.threads);
  bool all = true;
  json arr = json::array();
  for (const auto& r : reports) {
    all = all && r.pass;
    if (c.format == "json") {
      arr.push_back({{"suite", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"seconds", r.seconds},
                     {"first_failure", r.first_failure}});
    } else {
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
      out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << secs << " s)";
      if (!r.pass) out << ": " << r.first_failure;
      out << "\n";
    }
  }
  if (c.format == "json")
    out << arr.dump(2) << "\n";
  else
    out << (all ? "PASS" : "FAIL") << " " << c.suite << "\n";
  return all ? exit_ok : exit_failure;
}

int cmd_asympt(const Config& c, std::ostream& out) {
  const WeightFamily f = make_family(c);
  const Component comp = parse_component(c.ensemble);
  const Rational alpha = Rational::parse(c.alpha);
  const auto rep = asymptotic_check(f.kind(), f.tau(), alpha, c.p1, c.p2, comp, c.N_list);

  const bool laguerre = f.kind() == FamilyKind::laguerre;
  const Scalar lead = laguerre ? l1(c.p1, c.p2, f.tau(), alpha) : c1(c.p1, c.p2, f.tau());
  std::optional<Scalar> sub;
  if (!laguerre) sub = comp == Component::complex ? c2(c.p1, c.p2, f.tau()) : c2_prime(c.p1, c.p2, f.tau());

  json rows = json::array();
  if (c.format == "csv") out << "p1,p2,N,exact,float,scaled,c1,c2,predicted,residual\n";
  if (c.format == "text")
    out << (rep.pass ? "PASS " : "FAIL ") << rep.formula_pair << ": " << rep.detail << "\n"
        << "c1 = " << lead.to_string() << "\n"
        << (sub ? "c2 = " + sub->to_string() + "\n" : std::string());
  for (const auto& row : rep.rows) {
    WeightFamily fam = f;
    if (laguerre) {
      const long nu = std::lround(alpha.to_double() * row.N * (comp == Component::symplectic ? 2 : 1));
      fam = WeightFamily::laguerre(f.tau(), Rational(nu));
    }
    const Scalar exact = MomentEngine(fam).compute(c.p1, c.p2, row.N, comp, Method::main).value;
    const auto ev = float_value(exact);
    const std::string c1s = lead.to_string(), c2s = sub ? sub->to_string() : "";
    if (c.format == "csv") {
      out << c.p1 << "," << c.p2 << "," << row.N << "," << exact.to_string() << "," << (ev ? fmt17(*ev) : "") << ","
          << fmt17(row.scaled) << "," << c1s << "," << c2s << "," << fmt17(row.predicted) << ","
          << fmt17(row.residual) << "\n";
    } else if (c.format == "json") {
      rows.push_back({{"p1", c.p1}, {"p2", c.p2}, {"N", row.N}, {"exact", exact.to_string()}, {"float", float_json(exact)},
                      {"scaled", row.scaled}, {"c1", c1s}, {"c2", c2s}, {"predicted", row.predicted},
                      {"residual", row.residual}});
    } else {
      out << "N=" << row.N << " scaled=" << fmt17(row.scaled) << " predicted=" << fmt17(row.predicted)
          << " residual=" << fmt17(row.residual) << "\n";
    }
  }
  if (c.format == "json")
    out << json({{"pass", rep.pass}, {"formula_pair", rep.formula_pair}, {"detail", rep.detail},
                 {"fitted_K", rep.fitted_K}, {"rows", rows}})
               .dump(2)
        << "\n";
  return rep.pass ? exit_ok : exit_failure;
}

int cmd_limits(const Config& c, std::ostream& out) {
  if (c.p_max < 0) throw Invalid("--p-max must be nonnegative");
  const Scalar t{TauPoly::variable()};
  const Rational one(1);
  struct Outcome {
    std::string name;
    long checks = 0;
    std::string failure;
  };
  std::vector<Outcome> results;
  auto record = [](Outcome& o, bool ok, const std::string& what) {
    ++o.checks;
    if (!ok && o.failure.empty()) o.failure = what;
  };
  const bool all = c.check == "all";
  bool known = all;
  if (all || c.check == "catalan") {
    known = true;
    Outcome o{"catalan"};
    for (int p = 0; p <= c.p_max; ++p)
      record(o, c1(p, p, t).substitute(one) == catalan(p), "c1(p,p) at tau=1, p=" + std::to_string(p));
    results.push_back(o);
  }
  if (all || c.check == "narayana") {
    known = true;
    Outcome o{"narayana"};
    for (const Rational& a : {Rational(0), Rational::parse("1/2"), Rational(1)})
      for (int p1 = 0; p1 <= c.p_max; ++p1)
        for (int p2 = 0; p1 + p2 <= c.p_max; ++p2) {
          const Rational want = p1 + p2 == 0 ? one : narayana(p1 + p2, one + a);
          record(o, l1(p1, p2, t, a).substitute(one) == want,
                 "l1 at tau=1, alpha=" + a.to_string() + " (" + std::to_string(p1) + "," + std::to_string(p2) + ")");
        }
    results.push_back(o);
  }
  if (all || c.check == "genus") {
    known = true;
    Outcome o{"genus"};
    for (int p = 0; p <= c.p_max; ++p) {
      record(o, genus_coeff(0, p) == catalan(p), "E_0 vs catalan, p=" + std::to_string(p));
      for (int N = 1; N <= 20; ++N) {
        Rational sum;
        for (int g = 0; 2 * g <= p; ++g) {
          Rational Np(1);
          for (int e = 0; e < p + 1 - 2 * g; ++e) Np *= Rational(N);
          sum += genus_coeff(g, p) * Np;
        }
        record(o, sum == gue_moment(p, N), "genus sum p=" + std::to_string(p) + " N=" + std::to_string(N));
      }
    }
    results.push_back(o);
  }
  if (all || c.check == "c2") {
    known = true;
    Outcome o{"c2"};
    for (int p1 = 0; p1 <= c.p_max; ++p1)
      for (int p2 = 0; p1 + p2 <= c.p_max; ++p2) {
        if ((p1 + p2) % 2) continue;
        const int p = (p1 + p2) / 2;
        Rational tail;
        for (int l = 0; l < p; ++l) tail += binomial(2 * p, l);
        const std::string at = " (" + std::to_string(p1) + "," + std::to_string(p2) + ")";
        record(o, c2(p1, p2, t).substitute(one).is_zero(), "c2 at tau=1" + at);
        record(o, c2_prime(p1, p2, t).substitute(one) == -tail / Rational(2), "c2' at tau=1" + at);
      }
    results.push_back(o);
  }
  if (!known) throw Invalid("unknown --check: " + c.check);
  bool pass = true;
  json arr = json::array();
  for (const auto& o : results) {
    pass = pass && o.failure.empty();
    if (c.format == "json")
      arr.push_back({{"check", o.name}, {"pass", o.failure.empty()}, {"checks", o.checks}, {"first_failure", o.failure}});
    else
      out << (o.failure.empty() ? "PASS " : "FAIL ") << o.name << " (" << o.checks << " checks)"
          << (o.failure.empty() ? "" : ": " + o.failure) << "\n";
  }
  if (c.format == "json") out << arr.dump(2) << "\n";
  return pass ? exit_ok : exit_failure;
}

void add_family_options(CLI::App* sub, Config& c) {
  sub->add_option("--family", c.family, "hermite | laguerre | gegenbauer")
      ->check(CLI::IsMember({"hermite", "laguerre", "gegenbauer"}));
  sub->add_option("--tau", c.tau, "rational in [0,1] or 'symbolic'");
  sub->add_option("--nu", c.nu, "laguerre parameter > -1");
  sub->add_option("--a", c.a, "gegenbauer parameter > -1");
  sub->add_option("--ensemble", c.ensemble, "complex | symplectic")->check(CLI::IsMember({"complex", "symplectic"}));
}

void add_format(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact mixed spectral moments of planar random matrix ensembles", "planar-moments"};
  app.require_subcommand(1);
  app.add_option("--threads", c.threads, "worker threads for verify")->check(CLI::PositiveNumber);

  auto* compute = app.add_subcommand("compute", "one moment M_{p1,p2,N}");
  add_family_options(compute, c);
  compute->add_option("--p1", c.p1)->required()->check(CLI::NonNegativeNumber);
  compute->add_option("--p2", c.p2)->required()->check(CLI::NonNegativeNumber);
  compute->add_option("--N", c.N)->required()->check(CLI::PositiveNumber);
  compute->add_option("--method", c.method, "auto | main | cd | appendixB | closed-form")
      ->check(CLI::IsMember({"auto", "main", "cd", "appendixB", "closed-form"}));
  compute->add_flag("--oracle", c.oracle, "compare with the quadrature oracle");
  compute->add_option("--oracle-tol", c.oracle_tol, "relative tolerance for --oracle");
  add_format(compute, c);

  auto* table = app.add_subcommand("table", "moments for all p1 + p2 <= p-max");
  add_family_options(table, c);
  table->add_option("--p-max", c.p_max)->check(CLI::NonNegativeNumber);
  auto* table_N = table->add_option("--N", c.N)->check(CLI::PositiveNumber);
  table->add_option("--N-list", c.N_list)->delimiter(',')->check(CLI::PositiveNumber)->excludes(table_N);
  table->add_option("--method", c.method)->check(CLI::IsMember({"auto", "main", "cd", "appendixB", "closed-form"}));
  add_format(table, c);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", c.suite, "all | cross-formula | asymptotics | <suite>");
  verify->add_option("--family", c.suite_family, "restrict the oracle suite to one family")
      ->check(CLI::IsMember({"hermite", "laguerre", "gegenbauer"}));
  verify->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* asympt = app.add_subcommand("asympt", "large-N comparison with the limiting coefficients");
  add_family_options(asympt, c);
  asympt->add_option("--alpha", c.alpha, "limit of nu/N (laguerre)");
  asympt->add_option("--p1", c.p1)->required()->check(CLI::NonNegativeNumber);
  asympt->add_option("--p2", c.p2)->required()->check(CLI::NonNegativeNumber);
  asympt->add_option("--N-list", c.N_list)->delimiter(',')->check(CLI::PositiveNumber);
  add_format(asympt, c);

  auto* limits = app.add_subcommand("limits", "Hermitian-limit and genus identities");
  limits->add_option("--check", c.check, "all | catalan | narayana | genus | c2");
  limits->add_option("--p-max", c.p_max)->check(CLI::NonNegativeNumber);
  limits->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (*compute) return cmd_compute(c, out, err);
    if (*table) return cmd_table(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*asympt) return cmd_asympt(c, out);
    if (*limits) return cmd_limits(c, out);
  } catch (const numeric::ConvergenceError& e) {
    err << "oracle did not converge: " << e.what() << "\n";
    return exit_oracle;
  } catch (const Invalid& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return exit_invalid;
  } catch (const DomainError& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return exit_invalid;
  } catch (const FormulaMismatch& e) {
    err << "formula mismatch: " << e.what() << "\n";
    return exit_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_failure;
}

}  // namespace planar::cli
