#include "centun/tensor.hpp"

#include <algorithm>

#include "centun/errors.hpp"
#include "centun/multiplicity.hpp"

namespace centun {

std::map<Weight, long, WeightLess> tensor_decompose(const RootSystem& rs,
                                                    const Weight& beta,
                                                    const Weight& gamma) {
  if (!beta.is_integral() || !beta.is_dominant() || !gamma.is_integral() ||
      !gamma.is_dominant())
    throw UsageError("tensor_decompose: weights must be dominant integral");
  std::map<Weight, long, WeightLess> out;
  Weight rho = rs.rho();
  for (const auto& [delta, mult] : weight_support(rs, gamma)) {
    Weight x = beta + delta + rho;
    // Dominantize with sign; zero coordinate means singular (skip).
    long sign = 1;
    bool singular = false;
    while (true) {
      int neg = -1;
      bool zero = false;
      for (int i = 0; i < rs.rank(); ++i) {
        if (is_zero(x.fund_coords[i])) zero = true;
        if (sgn(x.fund_coords[i]) < 0) {
          neg = i;
          break;
        }
      }
      if (neg < 0) {
        singular = zero;
        break;
      }
      x = rs.reflect(x, neg);
      sign = -sign;
    }
    if (singular) continue;
    Weight mu = x - rho;
    out[mu] += sign * mult;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) {
      it = out.erase(it);
      continue;
    }
    if (it->second < 0)
      throw InternalError("tensor_decompose: negative multiplicity");
    ++it;
  }
  return out;
}

TensorModule::TensorModule(const Irrep& a, const Irrep& b) : a_(&a), b_(&b) {
  const RootSystem& rs = a.rs();
  dim_ = a.dim() * b.dim();
  int n = rs.dim();
  action_.reserve(n);
  for (int letter = 0; letter < n; ++letter) {
    SpMat m(dim_, dim_);
    int sr = rs.signed_root_of_letter(letter);
    if (sr != 0) {
      const SpMat& A = a.root_matrix(sr);
      const SpMat& B = b.root_matrix(sr);
      for (int c = 0; c < a.dim(); ++c)
        for (const auto& [r, v] : A.col[c])
          for (int ib = 0; ib < b.dim(); ++ib)
            m.add(index(r, ib), index(c, ib), v);
      for (int c = 0; c < b.dim(); ++c)
        for (const auto& [r, v] : B.col[c])
          for (int ia = 0; ia < a.dim(); ++ia)
            m.add(index(ia, r), index(ia, c), v);
    } else {
      int i = letter - rs.num_positive();
      for (int ia = 0; ia < a.dim(); ++ia)
        for (int ib = 0; ib < b.dim(); ++ib) {
          Rat v = a.h_diag(i, ia) + b.h_diag(i, ib);
          if (!is_zero(v)) m.add(index(ia, ib), index(ia, ib), v);
        }
    }
    action_.push_back(std::move(m));
  }

  // Casimir from Killing-dual bases: sum_ij Kinv_ij h_i h_j
  // + sum_{gamma>0} (e_gamma f_gamma + f_gamma e_gamma) / kappa_gamma.
  casimir_ = SpMat(dim_, dim_);
  const QMat& kinv = rs.killing_h_inv();
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) {
      if (is_zero(kinv[i][j])) continue;
      SpMat prod =
          sp_mul(action_[rs.letter_h(i)], action_[rs.letter_h(j)]);
      casimir_ = sp_add(casimir_, prod, kinv[i][j]);
    }
  for (int g = 0; g < rs.num_positive(); ++g) {
    const SpMat& E = action_[rs.letter_e(g)];
    const SpMat& F = action_[rs.letter_f(g)];
    SpMat sym = sp_add(sp_mul(E, F), sp_mul(F, E));
    casimir_ = sp_add(casimir_, sym, 1 / rs.kappa(g));
  }

  constituents_ = tensor_decompose(rs, a.highest_weight(), b.highest_weight());
}

RatVec TensorModule::tensor_vec(const RatVec& u, const RatVec& w) const {
  if (static_cast<int>(u.size()) != a_->dim() ||
      static_cast<int>(w.size()) != b_->dim())
    throw UsageError("tensor_vec: dimension mismatch");
  RatVec v(dim_, Rat(0));
  for (int ia = 0; ia < a_->dim(); ++ia) {
    if (is_zero(u[ia])) continue;
    for (int ib = 0; ib < b_->dim(); ++ib)
      if (!is_zero(w[ib])) v[index(ia, ib)] = u[ia] * w[ib];
  }
  return v;
}

Rat TensorModule::casimir_eigenvalue(const Weight& mu) const {
  const RootSystem& rs = a_->rs();
  Weight shifted = mu + 2 * rs.rho();
  return rs.form_killing_dual(mu, shifted);
}

QMat cartan_projection_matrix(const TensorModule& T) {
  const Irrep& a = T.factor_a();
  const RootSystem& rs = a.rs();
  Weight top = a.highest_weight() + T.factor_b().highest_weight();
  Rat c_top = T.casimir_eigenvalue(top);
  std::vector<Rat> others;
  for (const auto& [mu, mult] : T.constituents()) {
    if (mu == top) continue;
    Rat c = T.casimir_eigenvalue(mu);
    if (cmp(c, c_top) == 0)
      throw CasimirCollision(
          "Casimir eigenvalue of a constituent collides with the Cartan "
          "component " +
          top.fund_str());
    if (std::none_of(others.begin(), others.end(),
                     [&](const Rat& x) { return cmp(x, c) == 0; }))
      others.push_back(c);
  }
  int n = T.dim();
  QMat P = qmat_identity(n);
  QMat C = qmat_zero(n, n);
  for (int col = 0; col < n; ++col)
    for (const auto& [r, v] : T.casimir().col[col]) C[r][col] = v;
  for (const Rat& c : others) {
    QMat factor = C;
    for (int i = 0; i < n; ++i) factor[i][i] -= c;
    P = qmat_mul(P, factor);
    Rat scale = 1 / (c_top - c);
    for (auto& row : P)
      for (auto& x : row) x *= scale;
  }
  return P;
}

}  // namespace centun
