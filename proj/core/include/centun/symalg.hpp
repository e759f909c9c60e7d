#ifndef CENTUN_SYMALG_HPP
#define CENTUN_SYMALG_HPP

#include <vector>

#include "centun/gpoly.hpp"
#include "centun/irrep.hpp"
#include "centun/root_system.hpp"
#include "centun/weight.hpp"

namespace centun {

// The Killing form of g extended to S(g) by (x^n, y^n) = n! (x,y)^n;
// graded pieces of different degree pair to zero.
Rat killing_pair_S(const RootSystem& rs, const GPoly& p, const GPoly& q);

// Directional derivative: the pairing-adjoint of multiplication,
// (u, v w) = (d_v u, w). Returns d_p u.
GPoly directional_derivative(const RootSystem& rs, const GPoly& u,
                             const GPoly& p);

// Adjoint action of a basis letter extended to S(g) as a derivation.
GPoly ad_action(const RootSystem& rs, int letter, const GPoly& p);

// Membership test for (S(g)(lambda))^n: annihilated by every simple
// ad e_i and weight homogeneous of weight lambda.
bool is_n_invariant_weight(const RootSystem& rs, const GPoly& p,
                           const Weight& lambda);

// Generators of the polynomial invariant ring, realized as symbolic
// trace powers in a small faithful module.
struct InvariantSet {
  std::vector<GPoly> generators;
  std::vector<int> degrees;
};

// Trace powers of degree > this need an explicit opt-in (the G2
// degree-6 expansion is the expensive case at the supported ranks).
inline constexpr int kCheapInvariantDegreeLimit = 5;

InvariantSet invariant_generators(const RootSystem& rs, const Irrep& v_def,
                                  bool allow_expensive = false);

// Harmonic relative to the generator set: d_{p_i} f = 0 for all i.
bool is_harmonic(const RootSystem& rs, const GPoly& f, const InvariantSet& J);

// Highest weight of the defining module used for trace-power
// invariants: first fundamental weight except for F4 (the 26-dim
// fundamental module).
Weight defining_module_weight(const RootSystem& rs);

}  // namespace centun

#endif
