#include "planar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "planar/a_coeff.hpp"
#include "planar/asymptotics.hpp"
#include "planar/combinatorics.hpp"
#include "planar/complex_moments.hpp"
#include "planar/errors.hpp"
#include "planar/moments.hpp"
#include "planar/numeric/oracle.hpp"
#include "planar/symplectic_moments.hpp"

namespace planar {

namespace {

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }
const Scalar tsym{TauPoly::variable()};

class Checker {
 public:
  explicit Checker(SuiteReport& r) : r_(r) {}
  template <class Msg>
  void operator()(bool ok, Msg&& msg) {
    ++r_.checks;
    if (!ok && r_.pass) {
      r_.pass = false;
      r_.first_failure = msg();
    }
  }

 private:
  SuiteReport& r_;
};

std::string cell(std::string_view what, const WeightFamily& f, int p1, int p2, int N) {
  std::ostringstream os;
  os << what << " " << f.describe() << " p1=" << p1 << " p2=" << p2 << " N=" << N;
  return os.str();
}

std::vector<Scalar> cross_taus() { return {Scalar(q(0)), Scalar(q(1, 3)), Scalar(q(1, 2)), tsym}; }

void cross_formula_complex(Checker& check) {
  for (const Scalar& tau : cross_taus()) {
    const auto f = WeightFamily::hermite(tau);
    const MomentEngine engine(f);
    for (int N = 1; N <= 12; ++N)
      for (int p1 = 0; p1 <= 8; ++p1)
        for (int p2 = 0; p1 + p2 <= 8; ++p2) {
          const Scalar m = moment_complex(engine.a_table(), p1, p2, N);
          const Scalar cd = eginue_cd_moment(engine.a_table(), p1, p2, N);
          const Scalar ab = eginue_appendixB_moment(p1, p2, N, tau);
          check(m == cd && m == ab, [&] {
            return cell("main/cd/appendixB", f, p1, p2, N) + ": " + m.to_string() + " | " + cd.to_string() + " | " +
                   ab.to_string();
          });
        }
  }
}

void cross_formula_symplectic(Checker& check) {
  for (const Scalar& tau : cross_taus()) {
    const auto f = WeightFamily::hermite(tau);
    const MomentEngine engine(f);
    for (int N = 1; N <= 8; ++N)
      for (int p1 = 0; p1 <= 8; ++p1)
        for (int p2 = 0; p1 + p2 <= 8; ++p2) {
          const Scalar m = moment_symplectic(engine.b_table(), p1, p2, N);
          const Scalar rec = eginse_recursive_moment(engine.a_table(), p1, p2, N);
          const Scalar ab = eginse_appendixB_moment(p1, p2, N, tau);
          check(m == rec && m == ab, [&] {
            return cell("main/recursive/appendixB", f, p1, p2, N) + ": " + m.to_string() + " | " +
                   rec.to_string() + " | " + ab.to_string();
          });
        }
  }
}

void closed_forms(Checker& check) {
  const auto g = WeightFamily::hermite(Scalar(0));
  const MomentEngine engine(g);
  for (int N = 1; N <= 10; ++N)
    for (int p1 = 0; p1 <= 8; ++p1)
      for (int p2 = 0; p1 + p2 <= 8; ++p2) {
        const Scalar c = engine.compute(p1, p2, N, Component::complex, Method::main).value;
        check(c == Scalar(ginue_moment(p1, p2, N)), [&] { return cell("GinUE", g, p1, p2, N); });
        const Scalar s = engine.compute(p1, p2, N, Component::symplectic, Method::main).value;
        check(s == Scalar(ginse_moment(p1, p2, N)), [&] { return cell("GinSE", g, p1, p2, N); });
      }
  check(ginue_moment(2, 2, 5) == q(70), [] { return std::string("GinUE (2,2,5) != 70"); });
  check(engine.compute(2, 2, 5, Component::complex, Method::main).value == Scalar(70),
        [] { return std::string("main (2,2,5) at tau=0 != 70"); });
  for (int N = 1; N <= 10; ++N)
    check(engine.compute(2, 0, N, Component::symplectic, Method::main).value == Scalar(-N),
          [&] { return cell("GinSE -N", g, 2, 0, N); });

  const auto h = WeightFamily::hermite(tsym);
  const MomentEngine sym(h);
  for (int N = 1; N <= 8; ++N) {
    for (int k = 0; k <= 12; ++k) {
      const Rational v = sym.compute(k, 0, N, Component::complex, Method::main).value.substitute(q(1));
      const Rational want = k % 2 ? q(0) : gue_moment(k / 2, N);
      check(v == want, [&] { return cell("GUE at tau=1", h, k, 0, N); });
    }
    for (int k = 0; k <= 8; ++k) {
      const Rational v = sym.compute(k, 0, N, Component::symplectic, Method::main).value.substitute(q(1));
      const Rational want = k % 2 ? q(0) : gse_moment(k / 2, N);
      check(v == want, [&] { return cell("GSE at tau=1", h, k, 0, N); });
    }
  }
}

void holomorphic_scaling(Checker& check) {
  for (const Rational& tau : {q(1, 4), q(1, 2), q(3, 4)}) {
    const auto f = WeightFamily::hermite(Scalar(tau));
    const MomentEngine engine(f);
    for (int p = 0; p <= 6; ++p)
      for (int N = 1; N <= 12; ++N) {
        const Scalar v = engine.compute(2 * p, 0, N, Component::complex, Method::main).value;
        const Scalar want = pow(Scalar(tau), p) * Scalar(gue_moment(p, N));
        check(v == want, [&] { return cell("M_{2p,0,N} / tau^p vs GUE", f, 2 * p, 0, N); });
      }
  }
}

void asymptotic_coefficients(Checker& check) {
  for (Component comp : {Component::complex, Component::symplectic})
    for (int p1 = 0; p1 <= 6; ++p1)
      for (int p2 = 0; p1 + p2 <= 6; ++p2) {
        const auto rep = asymptotic_check(FamilyKind::hermite, tsym, q(0), p1, p2, comp, {});
        check(rep.pass, [&] {
          return rep.formula_pair + " p1=" + std::to_string(p1) + " p2=" + std::to_string(p2) + ": " + rep.detail;
        });
      }
  const TauPoly want = TauPoly::monomial(q(1, 3), 4) + TauPoly::monomial(q(4, 3), 2) + TauPoly(q(1, 3));
  check(c1(2, 2, tsym) == Scalar(want), [] { return std::string("c1(2,2) spot value"); });
}

void laguerre_asymptotics(Checker& check) {
  for (const Rational& a : {q(0), q(1)})
    for (const Rational& tau : {q(0), q(1, 2)})
      for (int p1 = 0; p1 <= 3; ++p1)
        for (int p2 = 0; p1 + p2 <= 3; ++p2)
          for (Component comp : {Component::complex, Component::symplectic}) {
            const std::vector<int> Ns =
                comp == Component::complex ? std::vector<int>{50, 100, 200} : std::vector<int>{25, 50};
            const auto rep = asymptotic_check(FamilyKind::laguerre, Scalar(tau), a, p1, p2, comp, Ns);
            check(rep.pass, [&] {
              std::ostringstream os;
              os << rep.formula_pair << " tau=" << tau << " alpha=" << a << " p1=" << p1 << " p2=" << p2 << ": "
                 << rep.detail;
              return os.str();
            });
          }
}

void elliptic_law(Checker& check) {
  for (int p1 = 0; p1 <= 12; ++p1)
    for (int p2 = 0; p1 + p2 <= 12; ++p2) {
      if ((p1 + p2) % 2) continue;
      check(elliptic_law_moment(p1, p2, tsym) == c1(p1, p2, tsym),
            [&] { return "elliptic law vs c1 at (" + std::to_string(p1) + "," + std::to_string(p2) + ")"; });
    }
}

void genus(Checker& check) {
  for (int p = 0; p <= 6; ++p) {
    check(genus_coeff(0, p) == catalan(p), [&] { return "E_0(" + std::to_string(p) + ") != catalan"; });
    for (int N = 1; N <= 20; ++N) {
      Rational sum;
      Rational Np = 1;
      for (int g = p / 2; g >= 0; --g) {
        Np = 1;
        for (int e = 0; e < p + 1 - 2 * g; ++e) Np *= Rational(N);
        sum += genus_coeff(g, p) * Np;
      }
      check(sum == gue_moment(p, N), [&] { return "genus sum p=" + std::to_string(p) + " N=" + std::to_string(N); });
    }
  }
}

void hermitian_limits(Checker& check) {
  for (int p = 0; p <= 8; ++p)
    check(c1(p, p, tsym).substitute(q(1)) == catalan(p), [&] { return "c1(p,p) at 1, p=" + std::to_string(p); });
  for (const Rational& a : {q(0), q(1, 2), q(1)})
    for (int p1 = 0; p1 <= 5; ++p1)
      for (int p2 = 0; p1 + p2 <= 5; ++p2) {
        const Rational want = p1 + p2 == 0 ? q(1) : narayana(p1 + p2, Rational(1) + a);
        check(l1(p1, p2, tsym, a).substitute(q(1)) == want, [&] {
          std::ostringstream os;
          os << "l1 at 1 vs Narayana, alpha=" << a << " (" << p1 << "," << p2 << ")";
          return os.str();
        });
      }
  for (int p1 = 0; p1 <= 8; ++p1)
    for (int p2 = 0; p1 + p2 <= 8; ++p2) {
      if ((p1 + p2) % 2) continue;
      const int p = (p1 + p2) / 2;
      const auto where = [&] { return " at (" + std::to_string(p1) + "," + std::to_string(p2) + ")"; };
      check(c2(p1, p2, tsym).substitute(q(1)).is_zero(), [&] { return "c2 at 1" + where(); });
      Rational tail;
      for (int l = 0; l < p; ++l) tail += binomial(2 * p, l);
      check(c2_prime(p1, p2, tsym).substitute(q(1)) == -tail / Rational(2), [&] { return "c2' at 1" + where(); });
    }
}

void oracle(Checker& check, const SuiteOptions& opts) {
  std::vector<WeightFamily> fams = {
      WeightFamily::hermite(Scalar(q(0))),
      WeightFamily::hermite(Scalar(q(1, 3))),
      WeightFamily::hermite(Scalar(q(1, 2))),
      WeightFamily::laguerre(Scalar(q(0)), q(1)),
      WeightFamily::laguerre(Scalar(q(1, 3)), q(1, 2)),
      WeightFamily::laguerre(Scalar(q(1, 2)), q(2)),
      WeightFamily::gegenbauer(q(1, 3), q(0)),
      WeightFamily::gegenbauer(q(1, 2), q(3, 2)),
  };
  std::vector<std::pair<int, int>> ps;
  for (int s = 0; s <= 4; ++s)
    for (int p2 = 0; p2 <= s; ++p2) ps.emplace_back(s - p2, p2);
  for (const auto& f : fams) {
    if (opts.family && *opts.family != f.kind()) continue;
    const MomentEngine engine(f);
    const double tol = f.kind() == FamilyKind::laguerre ? 1e-5 : 1e-7;
    for (Component c : {Component::complex, Component::symplectic})
      for (int N = 1; N <= 6; ++N) {
        const numeric::DensityEval d(f, N, c);
        const auto got = numeric::quadrature_moments(d, ps, numeric::weighted_grid(f, numeric::density_degree(N, c), 4));
        for (std::size_t i = 0; i < ps.size(); ++i) {
          const auto [p1, p2] = ps[i];
          const double want = engine.compute(p1, p2, N, c, Method::main).value.to_double();
          const double err = std::abs(got[i] - want) / std::max(1.0, std::abs(want));
          check(err < tol, [&] {
            std::ostringstream os;
            os.precision(17);
            os << cell("quadrature", f, p1, p2, N) << " " << component_name(c) << ": exact " << want << " quadrature "
               << got[i];
            return os.str();
          });
        }
      }
  }
  if (!opts.family) {
    for (double tau : {0.0, 0.5})
      for (const Rational& a : {q(0), q(1, 2), q(1)})
        for (int p1 = 0; p1 <= 2; ++p1)
          for (int p2 = 0; p1 + p2 <= 2; ++p2) {
            const Rational tq = tau == 0 ? q(0) : q(1, 2);
            const double want = l1(p1, p2, Scalar(tq), a).to_double();
            const double got = numeric::mp_law_moment_quadrature(p1, p2, tau, a.to_double());
            check(std::abs(got - want) < 1e-5 * std::max(1.0, std::abs(want)), [&] {
              std::ostringstream os;
              os << "MP law tau=" << tau << " alpha=" << a << " (" << p1 << "," << p2 << "): " << got << " vs " << want;
              return os.str();
            });
          }
  }
}

void a_coefficients(Checker& check) {
  std::vector<WeightFamily> grid;
  for (const Rational& t : {q(0), q(1, 3), q(1)}) grid.push_back(WeightFamily::hermite(Scalar(t)));
  for (const Rational& t : {q(0), q(1, 2)})
    for (const Rational& nu : {q(0), q(1, 2), q(2)}) grid.push_back(WeightFamily::laguerre(Scalar(t), nu));
  for (const Rational& t : {q(0), q(1, 2)})
    for (const Rational& a : {q(0), q(1, 2)}) grid.push_back(WeightFamily::gegenbauer(t, a));
  for (const auto& f : grid) {
    const ACoeffTable rec(f, AMethod::recursive), ex(f, AMethod::explicit_formula), sc(f, AMethod::scaling);
    for (int p = 0; p <= 6; ++p)
      for (int k = 0; k <= 20; ++k)
        for (int j = std::max(0, k - p); j <= k + p; ++j) {
          const Scalar v = rec(p, j, k);
          check(v == ex(p, j, k) && v == sc(p, j, k), [&] {
            return "three methods " + f.describe() + " p=" + std::to_string(p) + " j=" + std::to_string(j) +
                   " k=" + std::to_string(k);
          });
        }
  }
  grid.push_back(WeightFamily::hermite(tsym));
  grid.push_back(WeightFamily::laguerre(tsym, q(1, 2)));
  for (const auto& f : grid) {
    const ACoeffTable A(f);
    for (int p = 0; p <= 6; ++p)
      for (int r = 0; p + r <= 6; ++r)
        for (int k = 0; k <= 12; ++k)
          for (int j = std::max(0, k - p - r); j <= k + p + r; ++j) {
            Scalar sum;
            for (int m = std::max(0, k - p); m <= k + p; ++m) sum += A(p, m, k) * A(r, j, m);
            check(sum == A(p + r, j, k), [&] {
              return "composition " + f.describe() + " p=" + std::to_string(p) + " q=" + std::to_string(r) +
                     " j=" + std::to_string(j) + " k=" + std::to_string(k);
            });
          }
  }
  const Rational tau = q(1, 2);
  const ACoeffTable A(WeightFamily::hermite(Scalar(tau)));
  const int k = 10000;
  for (int p = 0; p <= 6; ++p)
    for (int r = -p; r <= p; r += 2) {
      const double exact = A(p, k - r, k).to_double();
      const double lead = std::pow(tau.to_double(), (p + r) / 2.0) * binomial(p, (p + r) / 2).to_double() *
                          std::pow(double(k), (p + r) / 2.0);
      check(std::abs(exact / lead - 1.0) < 0.01,
            [&] { return "large-degree ratio p=" + std::to_string(p) + " r=" + std::to_string(r); });
    }
}

using SuiteFn = std::function<void(Checker&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"cross-formula-complex", [](Checker& c, const SuiteOptions&) { cross_formula_complex(c); }},
      {"cross-formula-symplectic", [](Checker& c, const SuiteOptions&) { cross_formula_symplectic(c); }},
      {"closed-forms", [](Checker& c, const SuiteOptions&) { closed_forms(c); }},
      {"holomorphic-scaling", [](Checker& c, const SuiteOptions&) { holomorphic_scaling(c); }},
      {"asymptotic-coefficients", [](Checker& c, const SuiteOptions&) { asymptotic_coefficients(c); }},
      {"laguerre-asymptotics", [](Checker& c, const SuiteOptions&) { laguerre_asymptotics(c); }},
      {"elliptic-law", [](Checker& c, const SuiteOptions&) { elliptic_law(c); }},
      {"genus", [](Checker& c, const SuiteOptions&) { genus(c); }},
      {"hermitian-limits", [](Checker& c, const SuiteOptions&) { hermitian_limits(c); }},
      {"oracle", [](Checker& c, const SuiteOptions& o) { oracle(c, o); }},
      {"a-coefficients", [](Checker& c, const SuiteOptions&) { a_coefficients(c); }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

std::vector<std::string> expand_suite(std::string_view name) {
  if (name == "all") return suite_names();
  if (name == "cross-formula") return {"cross-formula-complex", "cross-formula-symplectic"};
  if (name == "asymptotics") return {"asymptotic-coefficients", "laguerre-asymptotics", "elliptic-law"};
  for (const auto& n : suite_names())
    if (n == name) return {n};
  throw DomainError("unknown suite: " + std::string(name));
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  const auto& r = registry();
  const auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == name; });
  if (it == r.end()) throw DomainError("unknown suite: " + std::string(name));
  SuiteReport rep;
  rep.name = it->first;
  Checker check(rep);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    it->second(check, opts);
  } catch (const std::exception& e) {
    ++rep.checks;
    if (rep.pass) {
      rep.pass = false;
      rep.first_failure = std::string("exception: ") + e.what();
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteOptions& opts, int threads) {
  std::vector<SuiteReport> out(names.size());
  for (const auto& n : names) expand_suite(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < names.size();) out[i] = run_suite(names[i], opts);
  };
  const int n = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(names.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace planar
