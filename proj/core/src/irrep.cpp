#include "centun/irrep.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "centun/errors.hpp"

namespace centun {

namespace {

struct LevelBuild {
  std::vector<long> content;
  Weight mu;
  int dim = 0;
  std::vector<std::pair<int, int>> cands;  // (simple i, parent basis index)
  std::vector<int> sel;                    // selected candidate positions
  QMat gram;                               // Gram on the selected basis
  std::vector<int> parent;                 // per i: level index or -1
  std::vector<QMat> fmap;  // per i: coords of f_i(parent basis) here
  std::vector<QMat> emap;  // per i: e_i from here into parent level
};

long depth_of(const std::vector<long>& c) {
  long d = 0;
  for (long x : c) d += x;
  return d;
}

}  // namespace

int Irrep::weight_space_index(const Weight& mu) const {
  auto it = space_index_.find(mu);
  return it == space_index_.end() ? -1 : it->second;
}

const Weight& Irrep::weight_of(int global_idx) const {
  return spaces_[space_of_global_[global_idx]].mu;
}

int Irrep::space_of(int global_idx) const {
  return space_of_global_[global_idx];
}

const SpMat& Irrep::root_matrix(int sr) const {
  auto it = root_matrices_.find(sr);
  if (it == root_matrices_.end())
    throw UsageError("root_matrix: not a root id");
  return it->second;
}

void Irrep::finalize() {
  space_index_.clear();
  space_of_global_.assign(dim_, 0);
  for (int k = 0; k < num_weight_spaces(); ++k) {
    space_index_[spaces_[k].mu] = k;
    for (int t = 0; t < spaces_[k].dim; ++t)
      space_of_global_[spaces_[k].offset + t] = k;
  }
  // Non-simple root matrices from the extraspecial decomposition,
  // normalized by the recorded structure constants.
  root_matrices_.clear();
  const RootSystem& rs = *rs_;
  for (int g = 0; g < rs.num_positive(); ++g) {
    if (rs.height(g) == 1) {
      int i = -1;
      for (int j = 0; j < rs.rank(); ++j)
        if (rs.simple_pos_index(j) == g) i = j;
      root_matrices_[g + 1] = gen_e_[i];
      root_matrices_[-(g + 1)] = gen_f_[i];
      continue;
    }
    auto [c, d] = rs.extraspecial_pair(g);
    Rat n = Rat(rs.struct_const(c + 1, d + 1));
    root_matrices_[g + 1] = sp_scale(
        sp_commutator(root_matrices_.at(c + 1), root_matrices_.at(d + 1)),
        1 / n);
    root_matrices_[-(g + 1)] = sp_scale(
        sp_commutator(root_matrices_.at(-(c + 1)), root_matrices_.at(-(d + 1))),
        -1 / n);
  }
}

Irrep Irrep::build(const RootSystem& rs, const Weight& lambda, long size_cap) {
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw UsageError("build_irrep: weight must be dominant integral");
  if (size_cap < 1) throw UsageError("build_irrep: size cap must be >= 1");
  mpz_class wdim = weyl_dimension(rs, lambda);
  if (wdim > size_cap)
    throw SizeCapError(wdim.fits_slong_p() ? wdim.get_si() : size_cap + 1,
                       size_cap);

  int l = rs.rank();
  std::vector<LevelBuild> levels;
  std::map<std::vector<long>, int> level_of;

  LevelBuild top;
  top.content.assign(l, 0);
  top.mu = lambda;
  top.dim = 1;
  top.gram = QMat{{Rat(1)}};
  top.parent.assign(l, -1);
  top.fmap.assign(l, QMat{});
  top.emap.assign(l, QMat{});
  levels.push_back(std::move(top));
  level_of[levels[0].content] = 0;

  std::vector<std::vector<long>> frontier{levels[0].content};
  while (!frontier.empty()) {
    std::set<std::vector<long>> next_contents;
    for (const auto& c : frontier)
      for (int i = 0; i < l; ++i) {
        auto c2 = c;
        c2[i] += 1;
        next_contents.insert(c2);
      }
    std::vector<std::vector<long>> grown;
    for (const auto& c : next_contents) {
      LevelBuild lev;
      lev.content = c;
      {
        RatVec r(l);
        for (int j = 0; j < l; ++j) r[j] = lambda.root_coords[j] - c[j];
        lev.mu = rs.weight_from_root(std::move(r));
      }
      lev.parent.assign(l, -1);
      for (int i = 0; i < l; ++i) {
        if (c[i] == 0) continue;
        auto cp = c;
        cp[i] -= 1;
        auto it = level_of.find(cp);
        if (it != level_of.end()) lev.parent[i] = it->second;
      }
      for (int i = 0; i < l; ++i) {
        if (lev.parent[i] < 0) continue;
        int pd = levels[lev.parent[i]].dim;
        for (int b = 0; b < pd; ++b) lev.cands.push_back({i, b});
      }
      if (lev.cands.empty()) continue;
      size_t nc = lev.cands.size();

      // Candidate Gram:
      //   <f_i b, f_j b'> = delta_ij (mu+a_i)(h_i) <b,b'> + <e_j b, e_i b'>
      QMat G = qmat_zero(nc, nc);
      for (size_t s = 0; s < nc; ++s) {
        auto [i, b] = lev.cands[s];
        const LevelBuild& Pi = levels[lev.parent[i]];
        for (size_t t = s; t < nc; ++t) {
          auto [j, b2] = lev.cands[t];
          const LevelBuild& Pj = levels[lev.parent[j]];
          Rat val = 0;
          if (i == j) {
            Rat scal = lev.mu.fund_coords[i] + Rat(rs.datum().cartan_matrix[i][i]);
            val += scal * Pi.gram[b][b2];
          }
          // e_j from P_i and e_i from P_j both land in content c-e_i-e_j
          if (!Pi.emap[j].empty() && !Pj.emap[i].empty()) {
            auto cq = c;
            cq[i] -= 1;
            cq[j] -= 1;
            auto itq = level_of.find(cq);
            if (itq != level_of.end()) {
              const LevelBuild& Q = levels[itq->second];
              size_t qd = static_cast<size_t>(Q.dim);
              RatVec x(qd, Rat(0)), y(qd, Rat(0));
              for (size_t r = 0; r < qd; ++r) {
                x[r] = Pi.emap[j][r][b];
                y[r] = Pj.emap[i][r][b2];
              }
              for (size_t r = 0; r < qd; ++r) {
                if (is_zero(x[r])) continue;
                for (size_t r2 = 0; r2 < qd; ++r2)
                  if (!is_zero(y[r2])) val += x[r] * Q.gram[r][r2] * y[r2];
              }
            }
          }
          G[s][t] = val;
          G[t][s] = G[s][t];
        }
      }

      // First-come echelon basis: a candidate joins the basis iff its
      // Gram row (against all candidates, a spanning set) grows the row
      // span; with a nondegenerate form this is exactly linear
      // independence in the quotient.
      EchelonBasis rowspan(nc);
      for (size_t s = 0; s < nc; ++s)
        if (rowspan.insert(G[s])) lev.sel.push_back(static_cast<int>(s));
      if (lev.sel.empty()) continue;
      size_t nd = lev.sel.size();
      lev.dim = static_cast<int>(nd);

      lev.gram = qmat_zero(nd, nd);
      for (size_t a = 0; a < nd; ++a)
        for (size_t b = 0; b < nd; ++b) lev.gram[a][b] = G[lev.sel[a]][lev.sel[b]];
      QMat gram_inv = qmat_inverse(lev.gram);

      // Down maps: coordinates of every candidate in the chosen basis.
      lev.fmap.assign(l, QMat{});
      for (int i = 0; i < l; ++i) {
        if (lev.parent[i] < 0) continue;
        lev.fmap[i] = qmat_zero(nd, levels[lev.parent[i]].dim);
      }
      for (size_t s = 0; s < nc; ++s) {
        auto [i, b] = lev.cands[s];
        RatVec rhs(nd);
        for (size_t a = 0; a < nd; ++a) rhs[a] = G[lev.sel[a]][s];
        RatVec x = qmat_apply(gram_inv, rhs);
        for (size_t a = 0; a < nd; ++a) lev.fmap[i][a][b] = x[a];
      }

      // Up maps: e_i(f_j b0) = f_j(e_i b0) + delta_ij (mu+a_j)(h_i) b0.
      lev.emap.assign(l, QMat{});
      for (int i = 0; i < l; ++i) {
        if (lev.parent[i] < 0) continue;
        const LevelBuild& Pi = levels[lev.parent[i]];
        lev.emap[i] = qmat_zero(Pi.dim, nd);
        for (size_t col = 0; col < nd; ++col) {
          auto [j, b0] = lev.cands[lev.sel[col]];
          const LevelBuild& Pj = levels[lev.parent[j]];
          RatVec acc(static_cast<size_t>(Pi.dim), Rat(0));
          if (i == j) {
            Rat scal =
                lev.mu.fund_coords[i] + Rat(rs.datum().cartan_matrix[i][i]);
            acc[b0] += scal;
          }
          if (!Pj.emap[i].empty()) {
            auto cq = c;
            cq[i] -= 1;
            cq[j] -= 1;
            auto itq = level_of.find(cq);
            if (itq != level_of.end()) {
              const LevelBuild& Q = levels[itq->second];
              // f_j down-map stored at level P_i
              if (!Pi.fmap[j].empty()) {
                RatVec eb(static_cast<size_t>(Q.dim), Rat(0));
                for (size_t r = 0; r < eb.size(); ++r)
                  eb[r] = Pj.emap[i][r][b0];
                RatVec moved = qmat_apply(Pi.fmap[j], eb);
                for (size_t r = 0; r < moved.size(); ++r) acc[r] += moved[r];
              }
            }
          }
          for (size_t r = 0; r < acc.size(); ++r) lev.emap[i][r][col] = acc[r];
        }
      }

      level_of[lev.content] = static_cast<int>(levels.size());
      grown.push_back(lev.content);
      levels.push_back(std::move(lev));
    }
    frontier = std::move(grown);
  }

  Irrep V;
  V.rs_ = &rs;
  V.lambda_ = lambda;
  int offset = 0;
  for (auto& lev : levels) {
    WeightSpace ws;
    ws.mu = lev.mu;
    ws.content = lev.content;
    ws.offset = offset;
    ws.dim = lev.dim;
    ws.gram = lev.gram;
    offset += ws.dim;
    V.spaces_.push_back(std::move(ws));
  }
  V.dim_ = offset;
  if (mpz_class(V.dim_) != wdim)
    throw InternalError("build_irrep: dimension disagrees with Weyl formula");
  if (V.spaces_.back().dim != 1)
    throw InternalError("build_irrep: lowest weight space not a line");

  V.gen_e_.assign(l, SpMat(V.dim_, V.dim_));
  V.gen_f_.assign(l, SpMat(V.dim_, V.dim_));
  for (size_t k = 0; k < levels.size(); ++k) {
    const LevelBuild& lev = levels[k];
    int off = V.spaces_[k].offset;
    for (int i = 0; i < l; ++i) {
      if (lev.parent[i] < 0) continue;
      int poff = V.spaces_[lev.parent[i]].offset;
      const QMat& fm = lev.fmap[i];
      for (size_t r = 0; r < fm.size(); ++r)
        for (size_t b = 0; b < fm[r].size(); ++b)
          if (!is_zero(fm[r][b]))
            V.gen_f_[i].add(off + static_cast<int>(r),
                            poff + static_cast<int>(b), fm[r][b]);
      const QMat& em = lev.emap[i];
      for (size_t r = 0; r < em.size(); ++r)
        for (size_t b = 0; b < em[r].size(); ++b)
          if (!is_zero(em[r][b]))
            V.gen_e_[i].add(poff + static_cast<int>(r),
                            off + static_cast<int>(b), em[r][b]);
    }
  }
  V.finalize();
  return V;
}

RatVec act_word(const Irrep& V, const Word& word, RatVec v) {
  if (static_cast<int>(v.size()) != V.dim())
    throw UsageError("act_word: dimension mismatch");
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->signed_root != 0) {
      v = V.root_matrix(it->signed_root).apply(v);
    } else {
      for (int g = 0; g < V.dim(); ++g)
        if (!is_zero(v[g])) v[g] *= V.h_diag(it->cartan, g);
    }
  }
  return v;
}

Rat invariant_pairing_value(const Irrep& V, const RatVec& u, const RatVec& v) {
  if (V.rs().dual_weight(V.highest_weight()) != V.highest_weight())
    throw UsageError("invariant_pairing_value: module is not self-dual");
  if (static_cast<int>(u.size()) != V.dim() ||
      static_cast<int>(v.size()) != V.dim())
    throw UsageError("invariant_pairing_value: dimension mismatch");
  for (int g = 0; g < V.dim(); ++g)
    if (g != V.hw_index() && !is_zero(v[g]))
      throw UsageError(
          "invariant_pairing_value: second argument must lie on the "
          "highest-weight line");
  return u[V.lw_index()] * v[V.hw_index()];
}

std::string Irrep::to_cache_text() const {
  std::ostringstream os;
  os << "centun-irrep v1 " << kSignConventionVersion << "\n";
  os << "type " << static_cast<char>(rs_->datum().family) << " "
     << rs_->rank() << "\n";
  os << "lambda " << lambda_.fund_str() << "\n";
  os << "dimension " << dim_ << "\n";
  os << "weight-spaces " << spaces_.size() << "\n";
  for (const auto& ws : spaces_)
    os << "mu " << ws.mu.fund_str() << " dim " << ws.dim << "\n";
  for (size_t k = 0; k < spaces_.size(); ++k) {
    os << "gram " << k << "\n";
    for (const auto& row : spaces_[k].gram) {
      for (size_t j = 0; j < row.size(); ++j)
        os << (j ? " " : "") << rat_str(row[j]);
      os << "\n";
    }
  }
  auto dump = [&os](const std::string& name, const SpMat& m) {
    size_t nnz = 0;
    for (const auto& c : m.col) nnz += c.size();
    os << "matrix " << name << " " << nnz << "\n";
    for (int c = 0; c < m.cols; ++c)
      for (const auto& [r, v] : m.col[c])
        os << r << " " << c << " " << rat_str(v) << "\n";
  };
  for (int i = 0; i < rs_->rank(); ++i)
    dump("e" + std::to_string(i + 1), gen_e_[i]);
  for (int i = 0; i < rs_->rank(); ++i)
    dump("f" + std::to_string(i + 1), gen_f_[i]);
  os << "end\n";
  return os.str();
}

std::string Irrep::cache_key_for(const RootSystem& rs, const Weight& lambda) {
  std::string key = rs.datum().name() + "_lam";
  for (size_t i = 0; i < lambda.fund_coords.size(); ++i) {
    if (i) key += '-';
    key += rat_str(lambda.fund_coords[i]);
  }
  key += "_";
  key += kSignConventionVersion;
  return key;
}

Irrep Irrep::from_cache_text(const RootSystem& rs, const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  auto expect = [&](const std::string& want) {
    is >> tok;
    if (tok != want)
      throw UsageError("irrep cache: expected '" + want + "', got '" + tok +
                       "'");
  };
  expect("centun-irrep");
  expect("v1");
  is >> tok;
  if (tok != kSignConventionVersion)
    throw UsageError("irrep cache: sign convention mismatch");
  expect("type");
  std::string fam;
  int rank;
  is >> fam >> rank;
  if (fam.size() != 1 || family_from_char(fam[0]) != rs.datum().family ||
      rank != rs.rank())
    throw UsageError("irrep cache: type does not match the root system");
  expect("lambda");
  std::string lamstr;
  is >> lamstr;
  auto parse_csv = [&](const std::string& s) {
    RatVec out;
    std::string cur;
    for (char ch : s + ",") {
      if (ch == ',') {
        out.push_back(parse_rat(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    return out;
  };
  Irrep V;
  V.rs_ = &rs;
  V.lambda_ = rs.weight_from_fund(parse_csv(lamstr));
  expect("dimension");
  is >> V.dim_;
  expect("weight-spaces");
  size_t nspaces;
  is >> nspaces;
  int offset = 0;
  for (size_t k = 0; k < nspaces; ++k) {
    expect("mu");
    std::string mustr;
    int d;
    is >> mustr;
    expect("dim");
    is >> d;
    WeightSpace ws;
    ws.mu = rs.weight_from_fund(parse_csv(mustr));
    Weight diff = V.lambda_ - ws.mu;
    ws.content.resize(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) {
      if (!is_integer(diff.root_coords[j]))
        throw UsageError("irrep cache: weight outside the root lattice shift");
      ws.content[j] = diff.root_coords[j].get_num().get_si();
    }
    ws.offset = offset;
    ws.dim = d;
    offset += d;
    V.spaces_.push_back(std::move(ws));
  }
  if (offset != V.dim_) throw UsageError("irrep cache: dimension mismatch");
  for (size_t k = 0; k < nspaces; ++k) {
    expect("gram");
    size_t kk;
    is >> kk;
    if (kk != k) throw UsageError("irrep cache: gram order corrupt");
    int d = V.spaces_[k].dim;
    V.spaces_[k].gram = qmat_zero(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        is >> tok;
        V.spaces_[k].gram[r][c] = parse_rat(tok);
      }
  }
  auto load_mat = [&](const std::string& want) {
    expect("matrix");
    expect(want);
    size_t nnz;
    is >> nnz;
    SpMat m(V.dim_, V.dim_);
    for (size_t t = 0; t < nnz; ++t) {
      int r, c;
      is >> r >> c >> tok;
      m.add(r, c, parse_rat(tok));
    }
    return m;
  };
  for (int i = 0; i < rs.rank(); ++i)
    V.gen_e_.push_back(load_mat("e" + std::to_string(i + 1)));
  for (int i = 0; i < rs.rank(); ++i)
    V.gen_f_.push_back(load_mat("f" + std::to_string(i + 1)));
  expect("end");
  V.finalize();
  return V;
}

}  // namespace centun
