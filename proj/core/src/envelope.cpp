#include "centun/envelope.hpp"

#include <algorithm>
#include <set>

#include "centun/errors.hpp"

namespace centun {

FiltrationSpace filtration_start(const Irrep& V) {
  FiltrationSpace W;
  W.level = 0;
  W.basis.push_back(V.hw_vector());
  return W;
}

FiltrationSpace filtration_grow(const Irrep& V, const FiltrationSpace& W) {
  const RootSystem& rs = V.rs();
  EchelonBasis span(V.dim());
  for (const auto& v : W.basis) span.insert(v);
  for (const auto& v : W.basis) {
    for (int g = 0; g < rs.num_positive(); ++g) {
      span.insert(V.root_matrix(g + 1).apply(v));
      span.insert(V.root_matrix(-(g + 1)).apply(v));
    }
    // h letters act diagonally on the weight components and never grow
    // the span; kept for the letter-complete filtration definition.
    for (int i = 0; i < rs.rank(); ++i) {
      RatVec hv = v;
      for (int t = 0; t < V.dim(); ++t)
        if (!is_zero(hv[t])) hv[t] *= V.h_diag(i, t);
      span.insert(hv);
    }
  }
  FiltrationSpace out;
  out.level = W.level + 1;
  out.basis = span.rows();
  return out;
}

MatrixCoeffFunctional::MatrixCoeffFunctional(const Irrep& V) : V_(&V) {
  if (V.highest_weight().is_zero())
    throw UsageError("matrix coefficient functional needs nu != 0");
}

Rat MatrixCoeffFunctional::value_word(const Word& word) const {
  return value_on(act_word(*V_, word, V_->hw_vector()));
}

int codegree(const MatrixCoeffFunctional& F) {
  const Irrep& V = F.module();
  FiltrationSpace W = filtration_start(V);
  for (int m = 0; m <= V.dim(); ++m) {
    if (m > 0) W = filtration_grow(V, W);
    for (const auto& v : W.basis)
      if (!is_zero(F.value_on(v))) return m;
  }
  throw InternalError("codegree: functional vanished on the whole module");
}

GPoly killing_dual_letter(const RootSystem& rs, int letter) {
  int sr = rs.signed_root_of_letter(letter);
  if (sr != 0) {
    GPoly p = GPoly::letter(rs.letter_of_signed_root(-sr));
    p *= 1 / rs.kappa(std::abs(sr) - 1);
    return p;
  }
  int i = letter - rs.num_positive();
  GPoly acc;
  for (int j = 0; j < rs.rank(); ++j) {
    GPoly t = GPoly::letter(rs.letter_h(j));
    t *= rs.killing_h_inv()[i][j];
    acc += t;
  }
  return acc;
}

GPoly extract_fk(const MatrixCoeffFunctional& F, int k) {
  const Irrep& V = F.module();
  const RootSystem& rs = V.rs();
  if (k != codegree(F))
    throw UsageError(
        "extract_fk: the dual-basis reconstruction is valid only at the "
        "codegree");
  Weight nu = V.highest_weight();
  Weight lambda = nu + rs.dual_weight(nu);
  std::vector<long> target(rs.rank());
  for (int j = 0; j < rs.rank(); ++j)
    target[j] = -lambda.root_coords[j].get_num().get_si();

  int n = rs.dim();
  // Weight sums reachable by r letters, for pruning the tuple tree.
  std::vector<std::set<std::vector<long>>> reach(k + 1);
  reach[0].insert(std::vector<long>(rs.rank(), 0));
  for (int r = 1; r <= k; ++r)
    for (const auto& w : reach[r - 1])
      for (int a = 0; a < n; ++a) {
        std::vector<long> w2 = w;
        std::vector<long> lw = rs.letter_weight(a);
        for (int j = 0; j < rs.rank(); ++j) w2[j] += lw[j];
        reach[r].insert(std::move(w2));
      }

  std::vector<GPoly> duals(n);
  for (int a = 0; a < n; ++a) duals[a] = killing_dual_letter(rs, a);

  GPoly fk;
  Rat kfact = 1;
  for (int t = 2; t <= k; ++t) kfact *= t;

  // DFS over tuple positions from the right, reusing suffix vectors.
  std::vector<int> chosen(k, -1);
  std::vector<RatVec> suffix(k + 1);
  suffix[k] = V.hw_vector();
  std::vector<long> acc(rs.rank(), 0);

  auto letter_apply = [&](int a, const RatVec& v) {
    int sr = rs.signed_root_of_letter(a);
    if (sr != 0) return V.root_matrix(sr).apply(v);
    RatVec out = v;
    int i = a - rs.num_positive();
    for (int t = 0; t < V.dim(); ++t)
      if (!is_zero(out[t])) out[t] *= V.h_diag(i, t);
    return out;
  };

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == 0) {
      Rat f = F.value_on(suffix[0]);
      if (is_zero(f)) return;
      GPoly mono = GPoly::constant(f / kfact);
      for (int t = 0; t < k; ++t) mono = mono * duals[chosen[t]];
      fk += mono;
      return;
    }
    for (int a = 0; a < n; ++a) {
      std::vector<long> lw = rs.letter_weight(a);
      std::vector<long> rest(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) rest[j] = target[j] - acc[j] - lw[j];
      if (!reach[pos - 1].count(rest)) continue;
      chosen[pos - 1] = a;
      for (int j = 0; j < rs.rank(); ++j) acc[j] += lw[j];
      suffix[pos - 1] = letter_apply(a, suffix[pos]);
      if (!vec_is_zero(suffix[pos - 1])) self(self, pos - 1);
      for (int j = 0; j < rs.rank(); ++j) acc[j] -= lw[j];
    }
  };
  rec(rec, k);
  return fk;
}

RatVec tau_apply(const Irrep& V, const Monomial& xi, const RatVec& v,
                 int degree_bound) {
  if (xi.degree() > degree_bound)
    throw UsageError("tau_apply: monomial degree " +
                     std::to_string(xi.degree()) + " exceeds bound " +
                     std::to_string(degree_bound));
  const RootSystem& rs = V.rs();
  std::vector<int> letters = xi.letters();
  std::sort(letters.begin(), letters.end());
  RatVec total(V.dim(), Rat(0));
  long count = 0;
  do {
    Word w;
    for (int a : letters) {
      int sr = rs.signed_root_of_letter(a);
      w.push_back(sr != 0 ? Letter::e(sr) : Letter::h(a - rs.num_positive()));
    }
    RatVec r = act_word(V, w, v);
    for (int t = 0; t < V.dim(); ++t) total[t] += r[t];
    ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  Rat inv = Rat(1) / Rat(count);
  for (auto& x : total) x *= inv;
  return total;
}

GPoly lw_naive_f(const RootSystem& rs, const Weight& xi, const Irrep& V_nu) {
  if (!xi.is_integral() || !xi.is_dominant())
    throw UsageError("lw_naive_f: xi must be dominant integral");
  Weight nu = xi + rs.dual_weight(xi);
  if (V_nu.highest_weight() != nu)
    throw UsageError("lw_naive_f: module does not match xi + xi*");
  Weight two_nu = 2 * nu;
  std::vector<long> content(rs.rank());
  for (int j = 0; j < rs.rank(); ++j)
    content[j] = two_nu.root_coords[j].get_num().get_si();
  int bound = 0;
  for (long x : content) bound += static_cast<int>(x);

  RatVec hw = V_nu.hw_vector();
  GPoly f;
  int m = rs.num_positive();

  // All monomials in the negative root letters of weight -2 nu,
  // enumerated by ascending root index.
  std::vector<int> exps(m, 0);
  auto rec = [&](auto&& self, int idx, std::vector<long> rest) -> void {
    bool done = true;
    for (long x : rest)
      if (x != 0) done = false;
    if (done) {
      Monomial mono;
      for (int g = 0; g < m; ++g)
        if (exps[g] > 0) mono.factors.push_back({rs.letter_f(g), exps[g]});
      if (mono.factors.empty()) return;
      Rat val = invariant_pairing_value(
          V_nu, tau_apply(V_nu, mono, hw, bound), hw);
      if (is_zero(val)) return;
      // diagonal pairing norm: prod exps! kappa^exps
      Rat norm = 1;
      Monomial mirror;
      for (int g = 0; g < m; ++g) {
        if (exps[g] == 0) continue;
        for (int t = 1; t <= exps[g]; ++t) norm *= Rat(t) * rs.kappa(g);
        mirror.factors.push_back({rs.letter_e(g), exps[g]});
      }
      f.add_term(mirror, val / norm);
      return;
    }
    if (idx == m) return;
    const auto& gamma = rs.positive_roots()[idx];
    long maxe = -1;
    for (int j = 0; j < rs.rank(); ++j) {
      if (gamma[j] == 0) continue;
      long cap = rest[j] / gamma[j];
      maxe = (maxe < 0) ? cap : std::min(maxe, cap);
    }
    for (long e = 0; e <= maxe; ++e) {
      exps[idx] = static_cast<int>(e);
      std::vector<long> r2 = rest;
      for (int j = 0; j < rs.rank(); ++j) r2[j] -= e * gamma[j];
      bool ok = true;
      for (long x : r2)
        if (x < 0) ok = false;
      if (ok) self(self, idx + 1, r2);
    }
    exps[idx] = 0;
  };
  rec(rec, 0, content);

  std::vector<long> w;
  if (!f.weight_homogeneous(rs, w) ||
      (!f.is_zero() && w != content))
    throw InternalError("lw_naive_f: weight bookkeeping failed");
  return f;
}

GPoly lw_naive_f(const RootSystem& rs, const Weight& xi, long size_cap) {
  if (!xi.is_integral() || !xi.is_dominant())
    throw UsageError("lw_naive_f: xi must be dominant integral");
  Weight nu = xi + rs.dual_weight(xi);
  Irrep V = Irrep::build(rs, nu, size_cap);
  return lw_naive_f(rs, xi, V);
}

}  // namespace centun
