#ifndef CENTUN_IRREP_HPP
#define CENTUN_IRREP_HPP

#include <map>
#include <string>
#include <vector>

#include "centun/linalg.hpp"
#include "centun/multiplicity.hpp"
#include "centun/root_system.hpp"

namespace centun {

inline constexpr long kDefaultSizeCap = 512;

// One letter of a word acting on a module: either a root vector
// (nonzero signed root id) or a Cartan generator h_i.
struct Letter {
  int signed_root = 0;
  int cartan = -1;
  static Letter e(int sr) { return Letter{sr, -1}; }
  static Letter h(int i) { return Letter{0, i}; }
};
using Word = std::vector<Letter>;

struct WeightSpace {
  Weight mu;
  std::vector<long> content;  // lambda - mu in simple-root coordinates
  int offset = 0;             // first global basis index
  int dim = 0;
  QMat gram;                  // contravariant form on the chosen basis
};

// An irreducible finite-dimensional highest-weight module with exact
// sparse generator matrices, built weight space by weight space as the
// quotient of the Verma module by the radical of the contravariant
// form. The basis is the first-come echelon choice under the
// deterministic word order (length, then lexicographic generator
// index), so all matrices are reproducible. Immutable after build.
class Irrep {
 public:
  static Irrep build(const RootSystem& rs, const Weight& lambda,
                     long size_cap = kDefaultSizeCap);

  const RootSystem& rs() const { return *rs_; }
  const Weight& highest_weight() const { return lambda_; }
  const Weight& lowest_weight() const { return spaces_.back().mu; }
  int dim() const { return dim_; }

  int num_weight_spaces() const { return static_cast<int>(spaces_.size()); }
  const WeightSpace& weight_space(int k) const { return spaces_[k]; }
  // -1 when mu is not a weight of the module.
  int weight_space_index(const Weight& mu) const;
  const Weight& weight_of(int global_idx) const;
  int space_of(int global_idx) const;

  int hw_index() const { return 0; }
  int lw_index() const { return spaces_.back().offset; }

  const SpMat& gen_e(int i) const { return gen_e_[i]; }
  const SpMat& gen_f(int i) const { return gen_f_[i]; }
  Rat h_diag(int i, int global_idx) const {
    return weight_of(global_idx).fund_coords[i];
  }
  // pi(e_gamma) for any signed root id; non-simple root matrices are
  // normalized commutators along the extraspecial decomposition.
  const SpMat& root_matrix(int sr) const;

  RatVec hw_vector() const {
    RatVec v(dim_, Rat(0));
    v[0] = 1;
    return v;
  }

  // Versioned deterministic cache serialization.
  std::string to_cache_text() const;
  static Irrep from_cache_text(const RootSystem& rs, const std::string& text);
  static std::string cache_key_for(const RootSystem& rs, const Weight& lambda);
  std::string cache_key() const { return cache_key_for(*rs_, lambda_); }

 private:
  Irrep() = default;
  void finalize();  // derived data shared by build and cache load

  const RootSystem* rs_ = nullptr;
  Weight lambda_;
  int dim_ = 0;
  std::vector<WeightSpace> spaces_;
  std::map<Weight, int, WeightLess> space_index_;
  std::vector<int> space_of_global_;
  std::vector<SpMat> gen_e_, gen_f_;
  std::map<int, SpMat> root_matrices_;
};

// Applies pi(letter_1) ... pi(letter_k) right to left; exact.
RatVec act_word(const Irrep& V, const Word& word, RatVec v);

// The invariant bilinear pairing (u, v) of a self-dual module against
// the highest-weight line, realized as the lowest-weight coefficient
// with overall scale 1. v must be supported on the highest-weight line.
Rat invariant_pairing_value(const Irrep& V, const RatVec& u, const RatVec& v);

}  // namespace centun

#endif
