#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "planar/a_coeff.hpp"
#include "planar/symplectic_moments.hpp"

namespace planar {

enum class Component { complex, symplectic };
enum class Method { auto_select, main, cd, appendixB, closed_form };

std::string_view component_name(Component c);
Component parse_component(std::string_view name);
std::string_view method_name(Method m);
Method parse_method(std::string_view name);

struct MomentQuery {
  WeightFamily family;
  int p1 = 0;
  int p2 = 0;
  int N = 1;
  Component component = Component::complex;
  Method method = Method::auto_select;
};

struct MomentResult {
  Scalar value;
  std::string formula_used;
  // Formula that independently reproduced the value (auto method only).
  std::optional<std::string> cross_check;
  std::string family;
};

// Coefficient tables for one family, built lazily and shared across queries.
class MomentEngine {
 public:
  explicit MomentEngine(WeightFamily family);

  const WeightFamily& family() const { return family_; }
  const ACoeffTable& a_table() const { return A_; }
  const BCoeffTable& b_table() const;

  // Orders p1 >= p2 before evaluation. Throws DomainError for an inapplicable
  // method and FormulaMismatch when the auto cross-check disagrees.
  MomentResult compute(int p1, int p2, int N, Component component, Method method = Method::auto_select) const;

 private:
  Scalar evaluate(int p1, int p2, int N, Component component, Method method, std::string& name) const;
  Scalar alternative(int p1, int p2, int N, Component component, std::string& name) const;

  WeightFamily family_;
  ACoeffTable A_;
  mutable std::optional<BCoeffTable> B_;
  mutable std::optional<ACoeffTable> A_explicit_;
  mutable std::optional<BCoeffTable> B_explicit_;
};

MomentResult compute_moment(const MomentQuery& q);

// Largest p1 + p2 for which auto also evaluates an alternative formula.
inline constexpr int auto_cross_check_limit = 6;

}  // namespace planar
