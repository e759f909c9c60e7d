#ifndef CENTUN_CONSTRUCT_HPP
#define CENTUN_CONSTRUCT_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "centun/envelope.hpp"
#include "centun/gpoly.hpp"
#include "centun/irrep.hpp"
#include "centun/root_system.hpp"
#include "centun/symalg.hpp"

namespace centun {

// The sl2-triple through the sum of the simple root vectors, with
// [h, e] = 2e, [h, e_-] = -2e_-, [e, e_-] = h held exactly.
struct PrincipalSL2 {
  RatVec e, h, e_minus;  // coordinates over the Chevalley basis letters
  RatVec c;              // e_- = sum c_i f_{alpha_i}
};

PrincipalSL2 principal_sl2(const RootSystem& rs);

// Graded multiplicity of V_lambda inside the harmonic space, one
// coefficient per degree. Total = dim V_lambda(0); the top degree is
// the height of lambda with coefficient 1.
struct ExponentPolynomial {
  Weight lambda;
  std::map<int, long> coeffs;  // degree -> multiplicity, only nonzero

  int min_degree() const { return coeffs.begin()->first; }
  int max_degree() const { return coeffs.rbegin()->first; }
  long total() const {
    long t = 0;
    for (const auto& [d, m] : coeffs) t += m;
    return t;
  }
};

inline constexpr int kDefaultHeightBound = 12;

ExponentPolynomial generalized_exponents(const RootSystem& rs,
                                         const Weight& lambda,
                                         int height_bound = kDefaultHeightBound);

// (pi(tau(e_-^m)) v, v) with m = nu(h) = ht(2 nu); nonzero exactly.
Rat max_exponent_pairing(const RootSystem& rs, const Weight& nu,
                         const Irrep& V);
Rat max_exponent_pairing(const RootSystem& rs, const Weight& nu,
                         long size_cap = kDefaultSizeCap);

struct ConstructionReport {
  Weight nu, lambda;
  int k = 0;
  GPoly fk;
  bool weight_ok = false;
  bool in_Sn = false;
  bool n_invariant = false;
  bool harmonic = false;
  bool k_equals_min_exponent = false;
  bool fk_nonzero = false;

  bool all_ok() const {
    return weight_ok && in_Sn && n_invariant && harmonic &&
           k_equals_min_exponent && fk_nonzero;
  }
  std::string to_text(const RootSystem& rs) const;
  std::string to_structured(const RootSystem& rs) const;
};

ConstructionReport lipsman_wolf_element(const RootSystem& rs, const Irrep& V,
                                        bool allow_expensive_invariants = false);
ConstructionReport lipsman_wolf_element(const RootSystem& rs, const Weight& nu,
                                        long size_cap = kDefaultSizeCap,
                                        bool allow_expensive_invariants = false);

struct CounterexampleReport {
  Weight xi, nu, lambda;
  long d = 0;
  long ell_lambda = 0;
  std::set<int> degrees_present;
  Rat max_pairing;
  int invariance_witness = -1;  // simple index with ad e_i f != 0, or -1
  GPoly f_nu;

  bool valid() const {
    return d > 1 && ell_lambda > 1 && degrees_present.size() >= 2 &&
           invariance_witness >= 0;
  }
  std::string to_text(const RootSystem& rs) const;
  std::string to_structured(const RootSystem& rs) const;
};

CounterexampleReport counterexample_check(const RootSystem& rs,
                                          const Weight& xi, const Irrep& V_nu);
CounterexampleReport counterexample_check(const RootSystem& rs,
                                          const Weight& xi,
                                          long size_cap = kDefaultSizeCap);

struct InequalityCase {
  Weight beta, gamma;
  long d = 0;
  bool monotone_ok = false;     // dim V_{beta+gamma}(mu) >= dim V_beta(mu)
  bool zero_weight_ok = false;  // dim V_{beta+beta*}(0) >= d
};

struct InequalityReport {
  std::vector<InequalityCase> cases;
  bool all_ok() const {
    for (const auto& c : cases)
      if (!c.monotone_ok || !c.zero_weight_ok) return false;
    return true;
  }
};

InequalityReport multiplicity_inequality_battery(
    const RootSystem& rs, const std::vector<std::pair<Weight, Weight>>& pairs);

}  // namespace centun

#endif
