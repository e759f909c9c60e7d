#include "centun/symalg.hpp"

#include <algorithm>

#include "centun/errors.hpp"

namespace centun {

namespace {

// Sum over perfect matchings of the two letter lists, each matching
// contributing the product of pairwise Killing values. Letters pair
// nontrivially only across opposite root spaces or within h, so the
// recursion prunes hard.
Rat monomial_pairing(const RootSystem& rs, std::vector<int>& a,
                     std::vector<int>& b, size_t pos) {
  if (pos == a.size()) return Rat(1);
  Rat total = 0;
  int x = a[pos];
  for (size_t j = pos; j < b.size(); ++j) {
    Rat k = rs.killing_letters(x, b[j]);
    if (is_zero(k)) continue;
    std::swap(b[pos], b[j]);
    Rat rest = monomial_pairing(rs, a, b, pos + 1);
    std::swap(b[pos], b[j]);
    if (!is_zero(rest)) total += k * rest;
  }
  return total;
}

}  // namespace

Rat killing_pair_S(const RootSystem& rs, const GPoly& p, const GPoly& q) {
  Rat total = 0;
  for (const auto& [ma, ca] : p.terms()) {
    std::vector<int> la = ma.letters();
    for (const auto& [mb, cb] : q.terms()) {
      if (mb.degree() != ma.degree()) continue;  // graded orthogonality
      std::vector<int> lb = mb.letters();
      Rat v = monomial_pairing(rs, la, lb, 0);
      if (!is_zero(v)) total += ca * cb * v;
    }
  }
  return total;
}

namespace {

// d_y u for a single basis letter y: derivation with d_y(z) = (y, z).
GPoly letter_derivative(const RootSystem& rs, const GPoly& u, int y) {
  GPoly out;
  for (const auto& [m, c] : u.terms()) {
    for (size_t k = 0; k < m.factors.size(); ++k) {
      auto [z, e] = m.factors[k];
      Rat kv = rs.killing_letters(y, z);
      if (is_zero(kv)) continue;
      Monomial m2 = m;
      if (e == 1)
        m2.factors.erase(m2.factors.begin() + k);
      else
        m2.factors[k].second -= 1;
      out.add_term(m2, c * Rat(e) * kv);
    }
  }
  return out;
}

}  // namespace

GPoly directional_derivative(const RootSystem& rs, const GPoly& u,
                             const GPoly& p) {
  GPoly out;
  for (const auto& [mp, cp] : p.terms()) {
    GPoly cur = u;
    for (const auto& [l, e] : mp.factors)
      for (int k = 0; k < e && !cur.is_zero(); ++k)
        cur = letter_derivative(rs, cur, l);
    cur *= cp;
    out += cur;
  }
  return out;
}

GPoly ad_action(const RootSystem& rs, int letter, const GPoly& p) {
  GPoly out;
  for (const auto& [m, c] : p.terms()) {
    for (size_t k = 0; k < m.factors.size(); ++k) {
      auto [z, e] = m.factors[k];
      for (const auto& [w, coeff] : rs.bracket(letter, z)) {
        Monomial m2 = m;
        if (e == 1)
          m2.factors.erase(m2.factors.begin() + k);
        else
          m2.factors[k].second -= 1;
        // multiply the remaining monomial by the letter w
        Monomial m3;
        bool inserted = false;
        for (const auto& f : m2.factors) {
          if (!inserted && w < f.first) {
            m3.factors.push_back({w, 1});
            inserted = true;
          }
          if (f.first == w) {
            m3.factors.push_back({w, f.second + 1});
            inserted = true;
          } else {
            m3.factors.push_back(f);
          }
        }
        if (!inserted) m3.factors.push_back({w, 1});
        out.add_term(m3, c * Rat(e) * coeff);
      }
    }
  }
  return out;
}

bool is_n_invariant_weight(const RootSystem& rs, const GPoly& p,
                           const Weight& lambda) {
  std::vector<long> w;
  if (!p.weight_homogeneous(rs, w)) return false;
  for (int j = 0; j < rs.rank(); ++j) {
    if (!is_integer(lambda.root_coords[j])) return false;
    if (Rat(w[j]) != lambda.root_coords[j]) return false;
  }
  for (int i = 0; i < rs.rank(); ++i) {
    int e_i = rs.letter_e(rs.simple_pos_index(i));
    if (!ad_action(rs, e_i, p).is_zero()) return false;
  }
  return true;
}

Weight defining_module_weight(const RootSystem& rs) {
  if (rs.datum().family == Family::F) return rs.fundamental_weight(3);
  return rs.fundamental_weight(0);
}

InvariantSet invariant_generators(const RootSystem& rs, const Irrep& v_def,
                                  bool allow_expensive) {
  const std::vector<int>& degs = rs.invariant_degrees();
  for (size_t i = 0; i + 1 < degs.size(); ++i)
    if (degs[i] == degs[i + 1])
      throw UsageError(
          "invariant_generators: repeated invariant degree " +
          std::to_string(degs[i]) +
          "; trace powers of one module cannot separate the generators");

  // Dual basis letters as degree-1 polynomials.
  int n = rs.dim();
  std::vector<GPoly> dual(n);
  for (int a = 0; a < n; ++a) {
    int sr = rs.signed_root_of_letter(a);
    if (sr != 0) {
      dual[a] = GPoly::letter(rs.letter_of_signed_root(-sr));
      dual[a] *= 1 / rs.kappa(std::abs(sr) - 1);
    } else {
      int i = a - rs.num_positive();
      GPoly acc;
      for (int j = 0; j < rs.rank(); ++j) {
        GPoly t = GPoly::letter(rs.letter_h(j));
        t *= rs.killing_h_inv()[i][j];
        acc += t;
      }
      dual[a] = acc;
    }
  }

  // Generic element as a matrix of degree-1 polynomials.
  int d = v_def.dim();
  std::vector<std::vector<GPoly>> Y(d, std::vector<GPoly>(d));
  for (int a = 0; a < n; ++a) {
    int sr = rs.signed_root_of_letter(a);
    if (sr != 0) {
      const SpMat& M = v_def.root_matrix(sr);
      for (int c = 0; c < d; ++c)
        for (const auto& [r, v] : M.col[c]) {
          GPoly t = dual[a];
          t *= v;
          Y[r][c] += t;
        }
    } else {
      int i = a - rs.num_positive();
      for (int c = 0; c < d; ++c) {
        Rat v = v_def.h_diag(i, c);
        if (is_zero(v)) continue;
        GPoly t = dual[a];
        t *= v;
        Y[c][c] += t;
      }
    }
  }

  InvariantSet out;
  std::vector<std::vector<GPoly>> power = Y;
  int cur_deg = 1;
  for (int target : degs) {
    if (target > kCheapInvariantDegreeLimit && !allow_expensive)
      throw UsageError("invariant_generators: degree " +
                       std::to_string(target) +
                       " expansion is gated; enable expensive invariants");
    while (cur_deg < target) {
      std::vector<std::vector<GPoly>> next(d, std::vector<GPoly>(d));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          GPoly acc;
          for (int k = 0; k < d; ++k) {
            if (power[r][k].is_zero() || Y[k][c].is_zero()) continue;
            acc += power[r][k] * Y[k][c];
          }
          next[r][c] = std::move(acc);
        }
      power = std::move(next);
      ++cur_deg;
    }
    GPoly tr;
    for (int r = 0; r < d; ++r) tr += power[r][r];
    if (tr.is_zero())
      throw UsageError("invariant_generators: trace power of degree " +
                       std::to_string(target) +
                       " vanishes in the given module");
    out.generators.push_back(std::move(tr));
    out.degrees.push_back(target);
  }
  return out;
}

bool is_harmonic(const RootSystem& rs, const GPoly& f, const InvariantSet& J) {
  for (const auto& p : J.generators)
    if (!directional_derivative(rs, f, p).is_zero()) return false;
  return true;
}

}  // namespace centun
