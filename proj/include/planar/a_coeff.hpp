#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "planar/scalar.hpp"
#include "planar/weight_family.hpp"

namespace planar {

enum class AMethod { recursive, explicit_formula, scaling };

// (A^p)^j_k: coefficient of p_j in z^p p_k. Zero for j < 0, |j-k| > p, and
// (even-symmetric families) j - k of the wrong parity.
Scalar a_coeff(const WeightFamily& f, int p, int j, int k, AMethod method);

// Memoized (A^p)^j_k, stored per column (p, k). Thread-safe; copies share storage.
class ACoeffTable {
 public:
  explicit ACoeffTable(WeightFamily family, AMethod method = AMethod::recursive);

  const WeightFamily& family() const { return family_; }
  AMethod method() const { return method_; }
  Scalar operator()(int p, int j, int k) const;

 private:
  struct Column {
    int lo = 0;  // index of the first stored target degree
    std::vector<Scalar> v;
  };
  struct Store {
    std::mutex mu;
    std::map<std::pair<int, int>, std::shared_ptr<const Column>> columns;
  };

  std::shared_ptr<const Column> column(int p, int k) const;
  std::shared_ptr<const Column> build(int p, int k) const;

  WeightFamily family_;
  AMethod method_;
  std::shared_ptr<Store> store_;
};

}  // namespace planar
