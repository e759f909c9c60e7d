#ifndef CENTUN_MULTIPLICITY_HPP
#define CENTUN_MULTIPLICITY_HPP

#include <map>
#include <utility>
#include <vector>

#include "centun/root_system.hpp"
#include "centun/weight.hpp"

namespace centun {

// Weight multiplicities of finite-dimensional highest-weight modules via
// the Freudenthal recursion; memoized per highest weight.
class FreudenthalTable {
 public:
  FreudenthalTable(const RootSystem& rs, Weight lambda);

  // dim V_lambda(mu) for arbitrary mu (0 outside the support).
  long mult(const Weight& mu);

  // Dominant weights of V_lambda with their multiplicities, ordered by
  // (depth below lambda, lex).
  const std::vector<std::pair<Weight, long>>& dominant_support();

  const Weight& highest_weight() const { return lambda_; }

 private:
  long mult_dominant(const Weight& mu);

  const RootSystem& rs_;
  Weight lambda_;
  Rat norm_top_;  // (lambda + rho, lambda + rho)
  std::map<Weight, long, WeightLess> memo_;
  std::vector<std::pair<Weight, long>> dom_support_;
  bool support_done_ = false;
};

long freudenthal_mult(const RootSystem& rs, const Weight& lambda,
                      const Weight& mu);

mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda);

// d = max over all weights of dim V_xi(mu).
long max_weight_multiplicity(const RootSystem& rs, const Weight& xi);

// Full W-orbit of a weight (BFS over simple reflections).
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu);

// All weights of V_lambda with multiplicities (dominant support expanded
// over W-orbits).
std::vector<std::pair<Weight, long>> weight_support(const RootSystem& rs,
                                                    const Weight& lambda);

}  // namespace centun

#endif
