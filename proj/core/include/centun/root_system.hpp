#ifndef CENTUN_ROOT_SYSTEM_HPP
#define CENTUN_ROOT_SYSTEM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "centun/cartan.hpp"
#include "centun/linalg.hpp"
#include "centun/rational.hpp"
#include "centun/weight.hpp"

namespace centun {

// Identifies the deterministic choice of structure-constant signs; part
// of every serialization header so caches from a different convention
// are never reused.
inline constexpr const char* kSignConventionVersion = "extraspecial-v1";

struct WeylElement {
  std::vector<std::vector<long>> fund_matrix;  // action on fundamental coords
  std::vector<int> word;                       // reduced simple-reflection word
  int sign;                                    // (-1)^length
};

// A simple root system realized from its Cartan matrix: positive roots,
// Chevalley basis with deterministic structure constants, the Killing
// form computed from adjoint traces, and the (eagerly enumerated) Weyl
// group. Immutable after build(); concurrent reads are safe.
class RootSystem {
 public:
  static RootSystem build(const CartanDatum& datum);
  static RootSystem build(Family family, int rank) {
    return build(make_cartan_datum(family, rank));
  }

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  int num_positive() const { return static_cast<int>(pos_roots_.size()); }
  int dim() const { return 2 * num_positive() + rank(); }

  // --- roots ------------------------------------------------------------
  // Positive roots as integer simple-root coordinates, ordered by
  // (height, then lexicographic coordinates); the order fixes the
  // extraspecial pairs and every downstream enumeration.
  const std::vector<std::vector<long>>& positive_roots() const {
    return pos_roots_;
  }
  int height(int idx) const { return heights_[idx]; }
  int max_height() const { return heights_.back(); }

  // Signed root ids: +(idx+1) for a positive root, -(idx+1) for its
  // negative, 0 for "not a root".
  int signed_root_id(const std::vector<long>& coords) const;
  bool is_root(const std::vector<long>& coords) const {
    return signed_root_id(coords) != 0;
  }
  std::vector<long> signed_root_coords(int sr) const;

  // N_{a,b} over signed root ids; 0 when the sum is not a root.
  long struct_const(int sr_a, int sr_b) const;
  // Largest k with b - k a still a root.
  int root_string_down(int sr_a, int sr_b) const;
  // Extraspecial decomposition (c, d), c + d = gamma, of a non-simple
  // positive root; positive-root indices.
  std::pair<int, int> extraspecial_pair(int idx) const;

  // --- Chevalley basis letters -------------------------------------------
  // Letter index layout: [0, m) e_gamma in root order, [m, m+l) h_i,
  // [m+l, 2m+l) e_{-gamma} in root order.
  int letter_e(int root_idx) const { return root_idx; }
  int letter_h(int i) const { return num_positive() + i; }
  int letter_f(int root_idx) const {
    return num_positive() + rank() + root_idx;
  }
  bool is_h_letter(int letter) const {
    return letter >= num_positive() && letter < num_positive() + rank();
  }
  // +-(idx+1) for e/f letters, 0 for h letters.
  int signed_root_of_letter(int letter) const;
  int letter_of_signed_root(int sr) const;
  std::vector<long> letter_weight(int letter) const;  // root coords
  std::string letter_label(int letter) const;

  // [x_a, x_b] as a sparse combination of basis letters.
  std::vector<std::pair<int, Rat>> bracket(int a, int b) const;

  // --- weights ------------------------------------------------------------
  Weight weight_from_fund(RatVec f) const;
  Weight weight_from_root(RatVec r) const;
  Weight zero_weight() const;
  Weight fundamental_weight(int i) const;
  Weight simple_root_weight(int i) const;
  Weight root_weight(const std::vector<long>& coords) const;
  Weight rho() const { return rho_; }
  Weight highest_root() const;  // the adjoint highest weight

  Weight reflect(const Weight& w, int i) const;  // simple reflection s_i
  Weight dominant_rep(const Weight& w) const;    // in the same W-orbit
  // Highest weight of the dual module, -w0(lambda); requires lambda
  // dominant integral, and is an involution.
  Weight dual_weight(const Weight& lambda) const;

  // --- invariant forms ------------------------------------------------------
  // W-invariant form with integral root pairings , normalized so the
  // shortest simple root has (a, a) = 2; used wherever only ratios matter.
  Rat form_d(const Weight& a, const Weight& b) const;
  Rat root_norm_d(int idx) const;  // (gamma, gamma) in the d-form

  // True Killing data (adjoint traces): Gram matrix of the h_i, its
  // inverse, and the root pairings (e_gamma, e_{-gamma}).
  const QMat& killing_h() const { return killing_h_; }
  const QMat& killing_h_inv() const { return killing_h_inv_; }
  const Rat& kappa(int root_idx) const { return kappa_[root_idx]; }
  // Killing-dual form on weights.
  Rat form_killing_dual(const Weight& a, const Weight& b) const;
  // Killing form between basis letters.
  Rat killing_letters(int a, int b) const;

  // Coefficients of the coroot gamma^vee on the simple coroots h_i.
  const RatVec& coroot_coeffs(int root_idx) const {
    return coroot_coeffs_[root_idx];
  }

  const std::vector<int>& invariant_degrees() const {
    return invariant_degrees_;
  }

  // --- Weyl group ------------------------------------------------------------
  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  Weight weyl_apply(const WeylElement& w, const Weight& mu) const;

  int simple_pos_index(int i) const { return simple_pos_idx_[i]; }

  // Deterministic text serialization (positive roots + structure
  // constants); byte-identical across runs.
  std::string to_text() const;

  // Full Chevalley verification: antisymmetry, |N| = p+1, closure,
  // Jacobi on all basis triples, ad-invariance of the Killing form.
  // Throws InternalError on any violation.
  void verify_chevalley() const;

 private:
  RootSystem() = default;

  long mixed_struct_const(int p_idx, int q_idx) const;  // N_{p, -q}

  CartanDatum datum_;
  std::vector<std::vector<long>> pos_roots_;
  std::vector<int> heights_;
  std::map<std::vector<long>, int> root_index_;
  std::vector<int> simple_pos_idx_;

  RatVec d_;    // half square lengths of the simple roots, min = 1
  QMat dform_;  // (alpha_i, alpha_j) in the d-normalized form
  QMat ct_;     // fund = ct_ * root  (transpose of the Cartan matrix)
  QMat ct_inv_;

  std::map<std::pair<int, int>, long> nsigned_;  // signed-id pairs -> N
  std::vector<std::pair<int, int>> extraspecial_;
  std::vector<RatVec> coroot_coeffs_;

  QMat killing_h_;
  QMat killing_h_inv_;
  std::vector<Rat> kappa_;

  Weight rho_;
  std::vector<int> invariant_degrees_;
  std::vector<WeylElement> weyl_;
};

// Bilinear extension of the bracket to coordinate vectors over the
// Chevalley basis letters.
inline RatVec bracket_vec(const RootSystem& rs, const RatVec& x,
                          const RatVec& y) {
  RatVec out(rs.dim(), Rat(0));
  for (int a = 0; a < rs.dim(); ++a) {
    if (is_zero(x[a])) continue;
    for (int b = 0; b < rs.dim(); ++b) {
      if (is_zero(y[b])) continue;
      for (const auto& [idx, c] : rs.bracket(a, b)) out[idx] += x[a] * y[b] * c;
    }
  }
  return out;
}

}  // namespace centun

#endif
