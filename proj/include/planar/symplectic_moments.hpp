#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "planar/a_coeff.hpp"
#include "planar/rational.hpp"
#include "planar/scalar.hpp"

namespace planar {

// Skew-orthogonal structure: q_{2k} = sum_{j<=k} mu_{k,j} p_{2j}, q_{2k+1} = p_{2k+1}.
// lambda_l = (h_{2l+2} - c_{2l+2} h_{2l+1}) / (h_{2l+1} - c_{2l+1} h_{2l}),
// mu_{k,j} = prod_{l=j}^{k-1} lambda_l, r_k = 2(h_{2k+1} - c_{2k+1} h_{2k}).
// In symbolic mode every ratio is an exact polynomial division.
class SkewData {
 public:
  explicit SkewData(WeightFamily family);

  const WeightFamily& family() const { return family_; }
  Scalar lambda(int l) const;
  // Defined for 0 <= j <= k; mu_{k,k} = 1.
  Scalar mu(int k, int j) const;
  // r_n / r_k
  Scalar skew_norm_ratio(int n, int k) const;

 private:
  // d_k = r_k / (2 h_{2k}) = h_{2k+1}/h_{2k} - c_{2k+1}
  Scalar d(int k) const;

  struct Store {
    std::mutex mu;
    std::vector<Scalar> d;
    std::vector<Scalar> lambda;
  };
  WeightFamily family_;
  std::shared_ptr<Store> store_;
};

SkewData skew_data(const WeightFamily& f);

// (B^p)^target_source in the skew basis; zero for a negative target.
class BCoeffTable {
 public:
  BCoeffTable(ACoeffTable A, SkewData S);

  const ACoeffTable& a_table() const { return A_; }
  const SkewData& skew() const { return S_; }
  Scalar operator()(int p, int target, int source) const;

 private:
  Scalar compute(int p, int target, int source) const;

  struct Store {
    std::mutex mu;
    std::map<std::tuple<int, int, int>, Scalar> entries;
  };
  ACoeffTable A_;
  SkewData S_;
  std::shared_ptr<Store> store_;
};

Scalar b_coeff(const BCoeffTable& B, int p, int target, int source);
// frak m_{p1,p2,k}; the symplectic moment is half its partial sum over k < N.
Scalar frak_m(const BCoeffTable& B, int p1, int p2, int k);

Scalar moment_symplectic(const BCoeffTable& B, int p1, int p2, int N);
// 1/2 M^C_{p,0,2N} - 1/2 sum_{j<N} mu_{N,j} (A^p)^{2N}_{2j}
Scalar moment_symplectic_holomorphic(const BCoeffTable& B, int p, int N);

Rational ginse_moment(int p1, int p2, int N);
// Moment of index 2p of the GSE in the same normalization.
Rational gse_moment(int p, int N);

// Hermite family only.
Scalar eginse_recursive_moment(const ACoeffTable& hermite, int p1, int p2, int N);
Scalar eginse_recursive_moment(int p1, int p2, int N, const Scalar& tau);
Scalar eginse_appendixB_moment(int p1, int p2, int N, const Scalar& tau);
// 1/2 M^C_{2p,0,2N} - 1/2 sum_{r=1}^p sum_l tau^{p-r} (2N)!!/(2N-2r)!! (2p)!/(2^l l!(p-l+r)!) binom(2N-2r, p-l-r)
Scalar eginse_appendixB_holomorphic(int p, int N, const Scalar& tau);

}  // namespace planar
