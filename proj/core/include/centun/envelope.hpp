#ifndef CENTUN_ENVELOPE_HPP
#define CENTUN_ENVELOPE_HPP

#include <vector>

#include "centun/gpoly.hpp"
#include "centun/irrep.hpp"
#include "centun/root_system.hpp"

namespace centun {

// Image of the enveloping filtration level U_m(g) on the highest-weight
// line: W_m = span{pi(words of length <= m) v}. The functional below
// factors through U(g) v, so vanishing on W_m is vanishing on U_m.
struct FiltrationSpace {
  int level = 0;
  std::vector<RatVec> basis;  // reduced echelon rows
};

FiltrationSpace filtration_start(const Irrep& V);
FiltrationSpace filtration_grow(const Irrep& V, const FiltrationSpace& W);

// f(u) = v_{nu*}(pi(u) v_nu), realized as the lowest-weight coefficient
// of pi(u) v_nu with scale 1.
class MatrixCoeffFunctional {
 public:
  explicit MatrixCoeffFunctional(const Irrep& V);
  const Irrep& module() const { return *V_; }
  Rat value_on(const RatVec& v) const { return v[V_->lw_index()]; }
  Rat value_word(const Word& word) const;

 private:
  const Irrep* V_;
};

// Least m with f nonvanishing on W_m; always in [1, dim V].
int codegree(const MatrixCoeffFunctional& F);

// f_(k) in S^k(g) via the dual-basis reconstruction
//   f_(k) = (1/k!) sum f(x~_{a_1} ... x~_{a_k}) x^{a_1} ... x^{a_k},
// restricted to tuples of total weight -(nu + nu*). Rejects k below or
// above the codegree.
GPoly extract_fk(const MatrixCoeffFunctional& F, int k);

// Killing-dual of a basis letter as a degree-1 polynomial.
GPoly killing_dual_letter(const RootSystem& rs, int letter);

inline constexpr int kDefaultTauDegreeBound = 10;

// tau(Xi) v: average of all distinct letter orderings of the monomial,
// each applied via act_word.
RatVec tau_apply(const Irrep& V, const Monomial& xi, const RatVec& v,
                 int degree_bound = kDefaultTauDegreeBound);

// The element f_nu in S(n) determined against the diagonal pairing by
// (f_nu, Xi) = (pi(tau(Xi)) v, v) for every monomial Xi in S(n_-) of
// weight -2 nu, where nu = xi + xi*. Weight homogeneous of weight 2 nu
// but in general not degree homogeneous.
GPoly lw_naive_f(const RootSystem& rs, const Weight& xi,
                 long size_cap = kDefaultSizeCap);
GPoly lw_naive_f(const RootSystem& rs, const Weight& xi, const Irrep& V_nu);

}  // namespace centun

#endif
