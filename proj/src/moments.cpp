#include "planar/moments.hpp"

#include <utility>

#include "planar/complex_moments.hpp"
#include "planar/errors.hpp"

namespace planar {

std::string_view component_name(Component c) { return c == Component::complex ? "complex" : "symplectic"; }

Component parse_component(std::string_view name) {
  if (name == "complex") return Component::complex;
  if (name == "symplectic") return Component::symplectic;
  throw DomainError("unknown ensemble '" + std::string(name) + "'");
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::auto_select: return "auto";
    case Method::main: return "main";
    case Method::cd: return "cd";
    case Method::appendixB: return "appendixB";
    case Method::closed_form: return "closed-form";
  }
  return "auto";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::auto_select, Method::main, Method::cd, Method::appendixB, Method::closed_form})
    if (name == method_name(m)) return m;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

MomentEngine::MomentEngine(WeightFamily family) : family_(family), A_(family) {}

const BCoeffTable& MomentEngine::b_table() const {
  if (!B_) B_.emplace(A_, skew_data(family_));
  return *B_;
}

namespace {

void require_hermite(const WeightFamily& f, Method m) {
  if (f.kind() != FamilyKind::hermite)
    throw DomainError(std::string("method ") + std::string(method_name(m)) + " applies to the hermite family only");
}

bool tau_is(const WeightFamily& f, long v) { return !f.symbolic() && f.tau().rational() == Rational(v); }

}  // namespace

Scalar MomentEngine::evaluate(int p1, int p2, int N, Component component, Method method, std::string& name) const {
  const bool cx = component == Component::complex;
  switch (method) {
    case Method::auto_select:
    case Method::main:
      name = cx ? "main-complex" : "main-symplectic";
      return cx ? moment_complex(A_, p1, p2, N) : moment_symplectic(b_table(), p1, p2, N);
    case Method::cd:
      require_hermite(family_, method);
      name = cx ? "cd-complex" : "recursive-symplectic";
      return cx ? eginue_cd_moment(A_, p1, p2, N) : eginse_recursive_moment(A_, p1, p2, N);
    case Method::appendixB:
      require_hermite(family_, method);
      name = cx ? "appendixB-complex" : "appendixB-symplectic";
      return cx ? eginue_appendixB_moment(p1, p2, N, family_.tau()) : eginse_appendixB_moment(p1, p2, N, family_.tau());
    case Method::closed_form:
      require_hermite(family_, method);
      if (tau_is(family_, 0)) {
        name = cx ? "ginue" : "ginse";
        return cx ? ginue_moment(p1, p2, N) : ginse_moment(p1, p2, N);
      }
      if (p2 == 0 && cx) {
        name = "gue-scaled";
        if (p1 % 2) return Scalar(0);
        return pow(family_.tau(), p1 / 2) * Scalar(gue_moment(p1 / 2, N));
      }
      if (p2 == 0 && tau_is(family_, 1)) {
        name = "gse";
        return p1 % 2 ? Scalar(0) : Scalar(gse_moment(p1 / 2, N));
      }
      throw DomainError("no closed form for this query (needs tau = 0, or a holomorphic moment)");
  }
  throw DomainError("unknown method");
}

Scalar MomentEngine::alternative(int p1, int p2, int N, Component component, std::string& name) const {
  if (family_.kind() == FamilyKind::hermite) return evaluate(p1, p2, N, component, Method::cd, name);
  if (!A_explicit_) A_explicit_.emplace(family_, AMethod::explicit_formula);
  if (component == Component::complex) {
    name = "main-complex-explicitA";
    return moment_complex(*A_explicit_, p1, p2, N);
  }
  if (!B_explicit_) B_explicit_.emplace(*A_explicit_, skew_data(family_));
  name = "main-symplectic-explicitA";
  return moment_symplectic(*B_explicit_, p1, p2, N);
}

MomentResult MomentEngine::compute(int p1, int p2, int N, Component component, Method method) const {
  if (N < 1) throw DomainError("N must be at least 1");
  if (p1 < 0 || p2 < 0) throw DomainError("moment indices must be nonnegative");
  if (p1 < p2) std::swap(p1, p2);
  MomentResult r;
  r.family = family_.describe();
  r.value = evaluate(p1, p2, N, component, method, r.formula_used);
  if (method == Method::auto_select && p1 + p2 <= auto_cross_check_limit) {
    std::string alt_name;
    const Scalar alt = alternative(p1, p2, N, component, alt_name);
    if (!(alt == r.value))
      throw FormulaMismatch(r.formula_used + " = " + r.value.to_string() + " but " + alt_name + " = " + alt.to_string());
    r.cross_check = alt_name;
  }
  return r;
}

MomentResult compute_moment(const MomentQuery& q) {
  return MomentEngine(q.family).compute(q.p1, q.p2, q.N, q.component, q.method);
}

}  // namespace planar
