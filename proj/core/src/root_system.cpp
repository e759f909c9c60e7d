#include "centun/root_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "centun/errors.hpp"

namespace centun {

namespace {

// (height, lex) order on root coordinate vectors.
struct RootLess {
  bool operator()(const std::vector<long>& a,
                  const std::vector<long>& b) const {
    long ha = 0, hb = 0;
    for (long x : a) ha += x;
    for (long x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

}  // namespace

int RootSystem::signed_root_id(const std::vector<long>& coords) const {
  auto it = root_index_.find(coords);
  if (it != root_index_.end()) return it->second + 1;
  std::vector<long> neg(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
  it = root_index_.find(neg);
  if (it != root_index_.end()) return -(it->second + 1);
  return 0;
}

std::vector<long> RootSystem::signed_root_coords(int sr) const {
  std::vector<long> c = pos_roots_[std::abs(sr) - 1];
  if (sr < 0)
    for (auto& x : c) x = -x;
  return c;
}

long RootSystem::struct_const(int sr_a, int sr_b) const {
  auto it = nsigned_.find({sr_a, sr_b});
  return it == nsigned_.end() ? 0 : it->second;
}

int RootSystem::root_string_down(int sr_a, int sr_b) const {
  std::vector<long> a = signed_root_coords(sr_a);
  std::vector<long> x = signed_root_coords(sr_b);
  int p = 0;
  while (true) {
    for (size_t i = 0; i < x.size(); ++i) x[i] -= a[i];
    if (signed_root_id(x) == 0) break;
    ++p;
  }
  return p;
}

std::pair<int, int> RootSystem::extraspecial_pair(int idx) const {
  if (heights_[idx] < 2)
    throw InternalError("extraspecial_pair: simple root has none");
  return extraspecial_[idx];
}

int RootSystem::signed_root_of_letter(int letter) const {
  int m = num_positive();
  if (letter < m) return letter + 1;
  if (letter < m + rank()) return 0;
  return -(letter - m - rank() + 1);
}

int RootSystem::letter_of_signed_root(int sr) const {
  return sr > 0 ? letter_e(sr - 1) : letter_f(-sr - 1);
}

std::vector<long> RootSystem::letter_weight(int letter) const {
  int sr = signed_root_of_letter(letter);
  if (sr == 0) return std::vector<long>(rank(), 0);
  return signed_root_coords(sr);
}

std::string RootSystem::letter_label(int letter) const {
  if (is_h_letter(letter))
    return "h" + std::to_string(letter - num_positive() + 1);
  std::vector<long> c = letter_weight(letter);
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

std::vector<std::pair<int, Rat>> RootSystem::bracket(int a, int b) const {
  std::vector<std::pair<int, Rat>> out;
  int l = rank();
  int sa = signed_root_of_letter(a), sb = signed_root_of_letter(b);
  if (sa == 0 && sb == 0) return out;  // [h, h'] = 0
  if (sa == 0 || sb == 0) {
    // [h_i, e_gamma] = gamma(h_i) e_gamma
    int hi = (sa == 0) ? a - num_positive() : b - num_positive();
    int eletter = (sa == 0) ? b : a;
    std::vector<long> g = letter_weight(eletter);
    Rat val = 0;
    for (int j = 0; j < l; ++j)
      val += Rat(g[j]) * Rat(datum_.cartan_matrix[j][hi]);
    if (sb == 0) val = -val;  // [e, h] = -[h, e]
    if (!is_zero(val)) out.push_back({eletter, val});
    return out;
  }
  if (sa == -sb) {
    // [e_gamma, e_{-gamma}] = gamma^vee;  [e_{-gamma}, e_gamma] = -gamma^vee
    const RatVec& cc = coroot_coeffs_[std::abs(sa) - 1];
    Rat sign = (sa > 0) ? 1 : -1;
    for (int i = 0; i < l; ++i)
      if (!is_zero(cc[i])) out.push_back({letter_h(i), sign * cc[i]});
    return out;
  }
  std::vector<long> sum = signed_root_coords(sa);
  std::vector<long> cb = signed_root_coords(sb);
  for (int i = 0; i < l; ++i) sum[i] += cb[i];
  int ssum = signed_root_id(sum);
  if (ssum == 0) return out;
  long n = struct_const(sa, sb);
  if (n != 0) out.push_back({letter_of_signed_root(ssum), Rat(n)});
  return out;
}

Weight RootSystem::weight_from_fund(RatVec f) const {
  Weight w;
  w.root_coords = qmat_apply(ct_inv_, f);
  w.fund_coords = std::move(f);
  return w;
}

Weight RootSystem::weight_from_root(RatVec r) const {
  Weight w;
  w.fund_coords = qmat_apply(ct_, r);
  w.root_coords = std::move(r);
  return w;
}

Weight RootSystem::zero_weight() const {
  Weight w;
  w.fund_coords.assign(rank(), Rat(0));
  w.root_coords.assign(rank(), Rat(0));
  return w;
}

Weight RootSystem::fundamental_weight(int i) const {
  RatVec f(rank(), Rat(0));
  f[i] = 1;
  return weight_from_fund(std::move(f));
}

Weight RootSystem::simple_root_weight(int i) const {
  RatVec r(rank(), Rat(0));
  r[i] = 1;
  return weight_from_root(std::move(r));
}

Weight RootSystem::root_weight(const std::vector<long>& coords) const {
  RatVec r(rank());
  for (int i = 0; i < rank(); ++i) r[i] = coords[i];
  return weight_from_root(std::move(r));
}

Weight RootSystem::highest_root() const {
  return root_weight(pos_roots_.back());
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight out = w;
  Rat c = w.fund_coords[i];
  for (int j = 0; j < rank(); ++j)
    out.fund_coords[j] -= c * Rat(datum_.cartan_matrix[i][j]);
  out.root_coords[i] -= c;
  return out;
}

Weight RootSystem::dominant_rep(const Weight& w) const {
  Weight x = w;
  while (true) {
    int neg = -1;
    for (int i = 0; i < rank(); ++i)
      if (sgn(x.fund_coords[i]) < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return x;
    x = reflect(x, neg);
  }
}

Weight RootSystem::dual_weight(const Weight& lambda) const {
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw UsageError("dual_weight: weight must be dominant integral");
  return dominant_rep(-lambda);
}

Rat RootSystem::form_d(const Weight& a, const Weight& b) const {
  Rat v = 0;
  for (int i = 0; i < rank(); ++i) {
    if (is_zero(a.root_coords[i])) continue;
    for (int j = 0; j < rank(); ++j)
      if (!is_zero(b.root_coords[j]))
        v += a.root_coords[i] * dform_[i][j] * b.root_coords[j];
  }
  return v;
}

Rat RootSystem::root_norm_d(int idx) const {
  Weight g = root_weight(pos_roots_[idx]);
  return form_d(g, g);
}

Rat RootSystem::form_killing_dual(const Weight& a, const Weight& b) const {
  RatVec t = qmat_apply(killing_h_inv_, b.fund_coords);
  Rat v = 0;
  for (int i = 0; i < rank(); ++i) v += a.fund_coords[i] * t[i];
  return v;
}

Rat RootSystem::killing_letters(int a, int b) const {
  int sa = signed_root_of_letter(a), sb = signed_root_of_letter(b);
  if (sa == 0 && sb == 0)
    return killing_h_[a - num_positive()][b - num_positive()];
  if (sa == 0 || sb == 0) return Rat(0);
  if (sa != -sb) return Rat(0);
  return kappa_[std::abs(sa) - 1];
}

Weight RootSystem::weyl_apply(const WeylElement& w, const Weight& mu) const {
  RatVec f(rank(), Rat(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (w.fund_matrix[i][j] != 0)
        f[i] += Rat(w.fund_matrix[i][j]) * mu.fund_coords[j];
  return weight_from_fund(std::move(f));
}

long RootSystem::mixed_struct_const(int p_idx, int q_idx) const {
  // N_{p, -q} for distinct positive roots p, q.
  std::vector<long> diff = pos_roots_[p_idx];
  const std::vector<long>& q = pos_roots_[q_idx];
  for (size_t i = 0; i < diff.size(); ++i) diff[i] -= q[i];
  int sd = signed_root_id(diff);
  if (sd == 0) return 0;
  if (sd > 0) {
    // p - q positive: reduces to the pair (p-q, q) summing to p.
    int d_idx = sd - 1;
    Rat ratio = root_norm_d(d_idx) / root_norm_d(p_idx);
    auto it = nsigned_.find({d_idx + 1, q_idx + 1});
    if (it == nsigned_.end())
      throw InternalError("mixed_struct_const: missing positive pair");
    Rat v = ratio * Rat(it->second);
    if (!is_integer(v)) throw InternalError("mixed_struct_const: non-integer");
    return static_cast<long>(v.get_num().get_si());
  }
  // q - p positive: reduces to the pair (q-p, p) summing to q.
  int d_idx = -sd - 1;
  Rat ratio = root_norm_d(d_idx) / root_norm_d(q_idx);
  auto it = nsigned_.find({d_idx + 1, p_idx + 1});
  if (it == nsigned_.end())
    throw InternalError("mixed_struct_const: missing positive pair");
  Rat v = ratio * Rat(it->second);
  if (!is_integer(v)) throw InternalError("mixed_struct_const: non-integer");
  return static_cast<long>(v.get_num().get_si());
}

RootSystem RootSystem::build(const CartanDatum& datum) {
  validate_cartan_datum(datum);
  RootSystem rs;
  rs.datum_ = datum;
  int l = datum.rank;
  const auto& C = datum.cartan_matrix;

  // --- positive roots by closure under simple-root strings ----------------
  std::set<std::vector<long>> known;
  std::vector<std::vector<long>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<long> a(l, 0);
    a[i] = 1;
    known.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& phi : frontier) {
      for (int i = 0; i < l; ++i) {
        std::vector<long> ai(l, 0);
        ai[i] = 1;
        if (phi == ai) continue;
        // p = steps down the alpha_i-string from phi
        int p = 0;
        std::vector<long> x = phi;
        while (true) {
          x[i] -= 1;
          if (!known.count(x)) break;
          ++p;
        }
        long pairing = 0;  // <phi, alpha_i^vee>
        for (int j = 0; j < l; ++j) pairing += phi[j] * C[j][i];
        long q = p - pairing;
        if (q >= 1) {
          std::vector<long> up = phi;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  rs.pos_roots_.assign(known.begin(), known.end());
  std::sort(rs.pos_roots_.begin(), rs.pos_roots_.end(), RootLess{});
  for (size_t k = 0; k < rs.pos_roots_.size(); ++k) {
    long h = 0;
    for (long x : rs.pos_roots_[k]) h += x;
    rs.heights_.push_back(static_cast<int>(h));
    rs.root_index_[rs.pos_roots_[k]] = static_cast<int>(k);
  }
  rs.simple_pos_idx_.assign(l, -1);
  for (int i = 0; i < l; ++i) {
    std::vector<long> a(l, 0);
    a[i] = 1;
    rs.simple_pos_idx_[i] = rs.root_index_.at(a);
  }
  int m = rs.num_positive();

  // --- normalized invariant form on the root space -------------------------
  // d_i (alpha_i, alpha_j) bookkeeping: d_i C[j][i] = d_j C[i][j].
  rs.d_.assign(l, Rat(0));
  rs.d_[0] = 1;
  {
    std::vector<int> todo{0};
    while (!todo.empty()) {
      int i = todo.back();
      todo.pop_back();
      for (int j = 0; j < l; ++j) {
        if (C[i][j] == 0 || i == j || !is_zero(rs.d_[j])) continue;
        rs.d_[j] = rs.d_[i] * Rat(C[j][i]) / Rat(C[i][j]);
        todo.push_back(j);
      }
    }
    Rat dmin = rs.d_[0];
    for (const auto& x : rs.d_)
      if (cmp(x, dmin) < 0) dmin = x;
    for (auto& x : rs.d_) x /= dmin;
  }
  rs.dform_ = qmat_zero(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.dform_[i][j] = rs.d_[j] * Rat(C[i][j]);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (cmp(rs.dform_[i][j], rs.dform_[j][i]) != 0)
        throw InternalError("d-form not symmetric");

  // --- weight coordinate conversion ----------------------------------------
  rs.ct_ = qmat_zero(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.ct_[i][j] = Rat(C[j][i]);
  rs.ct_inv_ = qmat_inverse(rs.ct_);

  // --- structure constants --------------------------------------------------
  // Signs are pinned by the extraspecial-pair convention: for each
  // non-simple gamma the minimal special pair gets N = +(p+1); every
  // other special pair follows from the Jacobi identity against the
  // extraspecial pair, and the mixed/negative tables follow from the
  // closed Chevalley-basis relations.
  rs.extraspecial_.assign(m, {-1, -1});
  auto norm_of = [&](int idx) { return rs.root_norm_d(idx); };
  for (int g = 0; g < m; ++g) {
    if (rs.heights_[g] < 2) continue;
    std::vector<std::pair<int, int>> special;
    for (int a = 0; a < m; ++a) {
      std::vector<long> rest = rs.pos_roots_[g];
      bool neg = false;
      for (int i = 0; i < l; ++i) {
        rest[i] -= rs.pos_roots_[a][i];
        if (rest[i] < 0) neg = true;
      }
      if (neg) continue;
      auto it = rs.root_index_.find(rest);
      if (it == rs.root_index_.end()) continue;
      int b = it->second;
      if (a < b) special.push_back({a, b});
    }
    if (special.empty()) throw InternalError("non-simple root with no pair");
    std::sort(special.begin(), special.end());
    int c = special[0].first, d = special[0].second;
    rs.extraspecial_[g] = {c, d};
    {
      int p = rs.root_string_down(c + 1, d + 1);
      rs.nsigned_[{c + 1, d + 1}] = p + 1;
      rs.nsigned_[{d + 1, c + 1}] = -(p + 1);
    }
    // N_{gamma, -c} via the pair (d, c): nonzero denominator of the
    // Jacobi relation below.
    Rat n_g_negc = (norm_of(d) / norm_of(g)) * Rat(rs.nsigned_[{d + 1, c + 1}]);
    for (size_t s = 1; s < special.size(); ++s) {
      int a = special[s].first, b = special[s].second;
      // N_{a,b} N_{gamma,-c} + N_{b,-c} N_{b-c,a} - N_{a,-c} N_{a-c,b} = 0
      auto mixed_term = [&](int x_idx, int other_idx) -> Rat {
        // N_{x,-c} * N_{x-c, other}
        std::vector<long> diff = rs.pos_roots_[x_idx];
        for (int i = 0; i < l; ++i) diff[i] -= rs.pos_roots_[c][i];
        int sd = rs.signed_root_id(diff);
        if (sd <= 0) return Rat(0);  // below c in height: never negative here
        long n1 = rs.mixed_struct_const(x_idx, c);
        auto it2 = rs.nsigned_.find({sd, other_idx + 1});
        if (it2 == rs.nsigned_.end())
          throw InternalError("structure constants: missing recursion entry");
        return Rat(n1) * Rat(it2->second);
      };
      Rat num = mixed_term(a, b) - mixed_term(b, a);
      Rat nab = num / n_g_negc;
      if (!is_integer(nab))
        throw InternalError("structure constants: non-integer N");
      long nval = static_cast<long>(nab.get_num().get_si());
      int p = rs.root_string_down(a + 1, b + 1);
      if (std::abs(nval) != p + 1)
        throw InternalError("structure constants: |N| != p+1 for " +
                            rs.datum_.name());
      rs.nsigned_[{a + 1, b + 1}] = nval;
      rs.nsigned_[{b + 1, a + 1}] = -nval;
    }
  }
  // Negative-negative block: N_{-a,-b} = -N_{a,b}.
  {
    std::vector<std::pair<std::pair<int, int>, long>> pp(rs.nsigned_.begin(),
                                                         rs.nsigned_.end());
    for (const auto& [key, n] : pp)
      rs.nsigned_[{-key.first, -key.second}] = -n;
  }
  // Mixed blocks via the closed relations.
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (p == q) continue;
      std::vector<long> diff = rs.pos_roots_[p];
      for (int i = 0; i < l; ++i) diff[i] -= rs.pos_roots_[q][i];
      if (rs.signed_root_id(diff) == 0) continue;
      long n = rs.mixed_struct_const(p, q);
      rs.nsigned_[{p + 1, -(q + 1)}] = n;
      rs.nsigned_[{-(q + 1), p + 1}] = -n;
    }

  // --- coroots ---------------------------------------------------------------
  for (int g = 0; g < m; ++g) {
    Rat dg = norm_of(g) / 2;
    RatVec cc(l);
    for (int i = 0; i < l; ++i)
      cc[i] = Rat(rs.pos_roots_[g][i]) * rs.d_[i] / dg;
    rs.coroot_coeffs_.push_back(std::move(cc));
  }

  // --- Killing form -----------------------------------------------------------
  rs.killing_h_ = qmat_zero(l, l);
  for (int g = 0; g < m; ++g) {
    RatVec vals(l);
    for (int i = 0; i < l; ++i) {
      long v = 0;
      for (int j = 0; j < l; ++j) v += rs.pos_roots_[g][j] * C[j][i];
      vals[i] = v;
    }
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        rs.killing_h_[i][j] += 2 * vals[i] * vals[j];
  }
  rs.killing_h_inv_ = qmat_inverse(rs.killing_h_);
  // kappa_gamma = tr(ad e_gamma ad e_{-gamma})
  for (int g = 0; g < m; ++g) {
    Rat tr = 0;
    for (int b = 0; b < rs.dim(); ++b) {
      auto first = rs.bracket(rs.letter_f(g), b);
      Rat diag = 0;
      for (const auto& [mid, cf] : first) {
        auto second = rs.bracket(rs.letter_e(g), mid);
        for (const auto& [fin, cf2] : second)
          if (fin == b) diag += cf * cf2;
      }
      tr += diag;
    }
    rs.kappa_.push_back(tr);
  }

  // --- rho, degrees, Weyl group -----------------------------------------------
  rs.rho_ = rs.weight_from_fund(RatVec(l, Rat(1)));
  rs.invariant_degrees_ = invariant_degree_table(datum.family, datum.rank);

  {
    std::vector<std::vector<std::vector<long>>> gens;
    for (int i = 0; i < l; ++i) {
      std::vector<std::vector<long>> s(l, std::vector<long>(l, 0));
      // s_i: m_j -> m_j - C[i][j] m_i on fundamental coordinates
      for (int j = 0; j < l; ++j) s[j][j] = 1;
      for (int j = 0; j < l; ++j) s[j][i] -= C[i][j];
      gens.push_back(std::move(s));
    }
    auto matmul = [&](const std::vector<std::vector<long>>& a,
                      const std::vector<std::vector<long>>& b) {
      std::vector<std::vector<long>> out(l, std::vector<long>(l, 0));
      for (int i = 0; i < l; ++i)
        for (int k = 0; k < l; ++k)
          if (a[i][k] != 0)
            for (int j = 0; j < l; ++j) out[i][j] += a[i][k] * b[k][j];
      return out;
    };
    std::map<std::vector<std::vector<long>>, int> seen;
    WeylElement id;
    id.fund_matrix.assign(l, std::vector<long>(l, 0));
    for (int i = 0; i < l; ++i) id.fund_matrix[i][i] = 1;
    id.sign = 1;
    rs.weyl_.push_back(id);
    seen[id.fund_matrix] = 0;
    size_t head = 0;
    while (head < rs.weyl_.size()) {
      WeylElement cur = rs.weyl_[head++];
      for (int i = 0; i < l; ++i) {
        WeylElement nxt;
        nxt.fund_matrix = matmul(cur.fund_matrix, gens[i]);
        if (seen.count(nxt.fund_matrix)) continue;
        nxt.word = cur.word;
        nxt.word.push_back(i);
        nxt.sign = -cur.sign;
        seen[nxt.fund_matrix] = static_cast<int>(rs.weyl_.size());
        rs.weyl_.push_back(std::move(nxt));
      }
    }
  }
  return rs;
}

std::string RootSystem::to_text() const {
  std::ostringstream os;
  os << "root-system " << datum_.name() << " sign-convention "
     << kSignConventionVersion << "\n";
  os << "positive-roots " << num_positive() << "\n";
  auto coords_str = [](const std::vector<long>& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    return s;
  };
  for (const auto& r : pos_roots_) os << coords_str(r) << "\n";
  std::vector<std::string> lines;
  for (int a = 0; a < num_positive(); ++a)
    for (int b = 0; b < num_positive(); ++b) {
      auto it = nsigned_.find({a + 1, b + 1});
      if (it == nsigned_.end()) continue;
      lines.push_back(coords_str(pos_roots_[a]) + " " +
                      coords_str(pos_roots_[b]) + " " +
                      std::to_string(it->second));
    }
  os << "structure-constants " << lines.size() << "\n";
  for (const auto& s : lines) os << s << "\n";
  return os.str();
}

void RootSystem::verify_chevalley() const {
  int n = dim();
  // antisymmetry and |N| = p+1 over all signed pairs
  for (const auto& [key, nval] : nsigned_) {
    auto it = nsigned_.find({key.second, key.first});
    if (it == nsigned_.end() || it->second != -nval)
      throw InternalError("verify: antisymmetry violated");
    int p = root_string_down(key.first, key.second);
    if (std::abs(nval) != p + 1)
      throw InternalError("verify: |N| != p+1");
  }
  // closure: bracket of root letters vanishes iff the sum is not a root
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int sa = signed_root_of_letter(a), sb = signed_root_of_letter(b);
      if (sa == 0 || sb == 0 || sa == -sb) continue;
      std::vector<long> sum = signed_root_coords(sa);
      std::vector<long> cb = signed_root_coords(sb);
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += cb[i];
      bool isroot = is_root(sum);
      bool nonzero = !bracket(a, b).empty();
      if (nonzero && !isroot)
        throw InternalError("verify: bracket outside root set");
      if (!nonzero && isroot)
        throw InternalError("verify: vanishing bracket on a root pair");
    }
  // Jacobi on all basis triples
  auto add_into = [&](RatVec& acc, const std::vector<std::pair<int, Rat>>& t,
                      const Rat& scale) {
    for (const auto& [idx, c] : t) acc[idx] += scale * c;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        RatVec acc(n, Rat(0));
        for (const auto& [mid, cf] : bracket(b, c))
          add_into(acc, bracket(a, mid), cf);
        for (const auto& [mid, cf] : bracket(c, a))
          add_into(acc, bracket(b, mid), cf);
        for (const auto& [mid, cf] : bracket(a, b))
          add_into(acc, bracket(c, mid), cf);
        if (!vec_is_zero(acc)) throw InternalError("verify: Jacobi violated");
      }
  // ad-invariance of the Killing form on basis triples
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Rat v = 0;
        for (const auto& [idx, c] : bracket(x, y))
          v += c * killing_letters(idx, z);
        for (const auto& [idx, c] : bracket(x, z))
          v += c * killing_letters(y, idx);
        if (!is_zero(v))
          throw InternalError("verify: Killing form not ad-invariant");
      }
}

}  // namespace centun
