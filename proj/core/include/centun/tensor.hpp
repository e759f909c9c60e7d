#ifndef CENTUN_TENSOR_HPP
#define CENTUN_TENSOR_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "centun/irrep.hpp"
#include "centun/linalg.hpp"
#include "centun/root_system.hpp"
#include "centun/weight.hpp"

namespace centun {

// Two constituents of the tensor product share the Casimir eigenvalue
// of the Cartan component; the spectral projector does not exist and
// the engine refuses rather than resolves.
struct CasimirCollision : std::runtime_error {
  explicit CasimirCollision(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Multiset of dominant constituents of V_beta (x) V_gamma via the
// Weyl-alternated weight sum.
std::map<Weight, long, WeightLess> tensor_decompose(const RootSystem& rs,
                                                    const Weight& beta,
                                                    const Weight& gamma);

// V_beta (x) V_gamma with the Leibniz action and its exact Casimir
// matrix (Killing-dual normalization).
class TensorModule {
 public:
  TensorModule(const Irrep& a, const Irrep& b);

  const Irrep& factor_a() const { return *a_; }
  const Irrep& factor_b() const { return *b_; }
  int dim() const { return dim_; }
  int index(int ia, int ib) const { return ia * b_->dim() + ib; }
  RatVec tensor_vec(const RatVec& u, const RatVec& w) const;

  // Action of a Chevalley basis letter of g (root system letter index).
  const SpMat& action(int letter) const { return action_[letter]; }
  const SpMat& casimir() const { return casimir_; }
  // (mu, mu + 2 rho) in the Killing-dual form.
  Rat casimir_eigenvalue(const Weight& mu) const;

  const std::map<Weight, long, WeightLess>& constituents() const {
    return constituents_;
  }

 private:
  const Irrep* a_;
  const Irrep* b_;
  int dim_;
  std::vector<SpMat> action_;
  SpMat casimir_;
  std::map<Weight, long, WeightLess> constituents_;
};

// The unique invariant projection onto the Cartan component
// V_{beta+gamma}, as the spectral projector over the distinct Casimir
// eigenvalues of the constituents. Throws CasimirCollision when the top
// eigenvalue is shared.
QMat cartan_projection_matrix(const TensorModule& T);

inline RatVec cartan_project(const TensorModule& T, const QMat& projector,
                             const RatVec& v) {
  return qmat_apply(projector, v);
}

}  // namespace centun

#endif
