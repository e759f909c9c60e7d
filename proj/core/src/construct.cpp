#include "centun/construct.hpp"

#include <algorithm>
#include <sstream>

#include "centun/errors.hpp"
#include "centun/multiplicity.hpp"

namespace centun {

PrincipalSL2 principal_sl2(const RootSystem& rs) {
  int l = rs.rank();
  const auto& C = rs.datum().cartan_matrix;
  // alpha_j(h) = 2 for all j, h = sum t_i h_i: sum_i C[j][i] t_i = 2.
  QMat M = qmat_zero(l, l);
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < l; ++i) M[j][i] = Rat(C[j][i]);
  RatVec t = qmat_solve(M, RatVec(l, Rat(2)));

  PrincipalSL2 out;
  out.e.assign(rs.dim(), Rat(0));
  out.h.assign(rs.dim(), Rat(0));
  out.e_minus.assign(rs.dim(), Rat(0));
  out.c = t;
  for (int i = 0; i < l; ++i) {
    out.e[rs.letter_e(rs.simple_pos_index(i))] = 1;
    out.h[rs.letter_h(i)] = t[i];
    out.e_minus[rs.letter_f(rs.simple_pos_index(i))] = t[i];
  }

  auto check = [&](const RatVec& got, const RatVec& want, const Rat& scale) {
    for (int a = 0; a < rs.dim(); ++a)
      if (cmp(got[a], scale * want[a]) != 0)
        throw InternalError("principal_sl2: triple relations violated");
  };
  check(bracket_vec(rs, out.h, out.e), out.e, Rat(2));
  check(bracket_vec(rs, out.h, out.e_minus), out.e_minus, Rat(-2));
  check(bracket_vec(rs, out.e, out.e_minus), out.h, Rat(1));
  return out;
}

namespace {

// dim S^k(g)(mu) for all k <= bound, as a table over the weights
// reachable by degree <= bound monomials in the root letters; the h
// letters contribute a zero-weight degree factor handled separately.
struct SymWeightTable {
  std::map<std::vector<long>, std::vector<long long>> root_part;
  std::vector<long long> zero_part;  // monomial counts in l zero letters
  int bound;
  int rank;

  SymWeightTable(const RootSystem& rs, int bound_) : bound(bound_) {
    rank = rs.rank();
    root_part[std::vector<long>(rank, 0)] =
        std::vector<long long>(bound + 1, 0);
    root_part.begin()->second[0] = 1;
    for (int g = 0; g < rs.num_positive(); ++g)
      for (int sign : {1, -1}) {
        std::vector<long> w = rs.positive_roots()[g];
        for (auto& x : w) x *= sign;
        // multiply by the geometric series of one letter of weight w
        std::map<std::vector<long>, std::vector<long long>> next;
        for (const auto& [mu, series] : root_part) {
          std::vector<long> shifted = mu;
          for (int rep = 0; rep * 1 <= bound; ++rep) {
            if (rep > 0)
              for (int j = 0; j < rank; ++j) shifted[j] += w[j];
            auto& tgt = next[shifted];
            if (tgt.empty()) tgt.assign(bound + 1, 0);
            for (int k = rep; k <= bound; ++k)
              tgt[k] += series[k - rep];
            if (rep == bound) break;
          }
        }
        root_part = std::move(next);
      }
    // choose(t + l - 1, l - 1) monomials of degree t in l zero letters
    zero_part.assign(bound + 1, 0);
    for (int t = 0; t <= bound; ++t) {
      long long v = 1;
      for (int j = 1; j < rank; ++j) v = v * (t + j) / j;
      zero_part[t] = v;
    }
  }

  long long dim(int k, const std::vector<long>& mu) const {
    auto it = root_part.find(mu);
    if (it == root_part.end()) return 0;
    long long total = 0;
    for (int j = 0; j <= k; ++j)
      if (it->second[j] != 0) total += it->second[j] * zero_part[k - j];
    return total;
  }
};

}  // namespace

ExponentPolynomial generalized_exponents(const RootSystem& rs,
                                         const Weight& lambda,
                                         int height_bound) {
  if (!lambda.is_dominant() || !lambda.in_root_lattice())
    throw UsageError(
        "generalized_exponents: weight must be dominant in the root lattice");
  Rat htr = lambda.height();
  long H = htr.get_num().get_si();
  if (H > height_bound) throw SizeCapError(H, height_bound);
  if (H == 0)
    throw UsageError("generalized_exponents: lambda must be nonzero");

  SymWeightTable table(rs, static_cast<int>(H));

  // Graded multiplicity of V_lambda in S(g) via the Weyl alternation.
  std::vector<long long> mult(H + 1, 0);
  for (const auto& w : rs.weyl_group()) {
    Weight shifted = lambda + rs.rho() - rs.weyl_apply(w, rs.rho());
    std::vector<long> mu(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) {
      if (!is_integer(shifted.root_coords[j]))
        throw InternalError("generalized_exponents: alternation off lattice");
      mu[j] = shifted.root_coords[j].get_num().get_si();
    }
    for (int k = 0; k <= H; ++k)
      mult[k] += w.sign * table.dim(k, mu);
  }

  // Multiply by prod (1 - q^{d_i}) and truncate.
  std::vector<long long> e = mult;
  for (int d : rs.invariant_degrees()) {
    std::vector<long long> next(H + 1, 0);
    for (int k = 0; k <= H; ++k) {
      next[k] += e[k];
      if (k + d <= H) next[k + d] -= e[k];
    }
    e = std::move(next);
  }

  ExponentPolynomial out;
  out.lambda = lambda;
  for (int k = 0; k <= H; ++k) {
    if (e[k] == 0) continue;
    if (e[k] < 0)
      throw InternalError("generalized_exponents: negative coefficient");
    out.coeffs[k] = e[k];
  }
  if (out.coeffs.empty())
    throw InternalError("generalized_exponents: empty exponent set");
  if (out.max_degree() != H || out.coeffs.rbegin()->second != 1)
    throw InternalError(
        "generalized_exponents: top exponent is not the height with "
        "multiplicity one");
  long ell = freudenthal_mult(rs, lambda, rs.zero_weight());
  if (out.total() != ell)
    throw InternalError(
        "generalized_exponents: total disagrees with the zero-weight "
        "multiplicity");
  if (ell > 1 && out.min_degree() >= out.max_degree())
    throw InternalError("generalized_exponents: expected a strict gap");
  return out;
}

namespace {

bool decomposes_as_xi_plus_dual(const RootSystem& rs, const Weight& nu) {
  // search dominant integral xi with xi + xi* = nu inside the
  // coordinate box of nu
  int l = rs.rank();
  std::vector<long> cap(l);
  for (int i = 0; i < l; ++i) {
    if (!is_integer(nu.fund_coords[i]) || sgn(nu.fund_coords[i]) < 0)
      return false;
    cap[i] = nu.fund_coords[i].get_num().get_si();
  }
  std::vector<long> cur(l, 0);
  while (true) {
    RatVec f(l);
    for (int i = 0; i < l; ++i) f[i] = cur[i];
    Weight xi = rs.weight_from_fund(std::move(f));
    if (xi + rs.dual_weight(xi) == nu) return true;
    int pos = 0;
    while (pos < l) {
      if (++cur[pos] <= cap[pos]) break;
      cur[pos] = 0;
      ++pos;
    }
    if (pos == l) return false;
  }
}

}  // namespace

Rat max_exponent_pairing(const RootSystem& rs, const Weight& nu,
                         const Irrep& V) {
  if (V.highest_weight() != nu)
    throw UsageError("max_exponent_pairing: module does not match nu");
  if (!decomposes_as_xi_plus_dual(rs, nu))
    throw UsageError("max_exponent_pairing: nu is not of the form xi + xi*");
  PrincipalSL2 a = principal_sl2(rs);
  // m = nu(h) = ht(2 nu)
  Rat mr = 0;
  for (int i = 0; i < rs.rank(); ++i) mr += a.c[i] * nu.fund_coords[i];
  Weight two_nu = 2 * nu;
  if (cmp(mr, two_nu.height()) != 0)
    throw InternalError("max_exponent_pairing: nu(h) != ht(2 nu)");
  int m = static_cast<int>(mr.get_num().get_si());

  RatVec hw = V.hw_vector();
  int l = rs.rank();
  Rat total = 0;
  // (sum_i c_i f_i)^m expanded over exponent vectors
  std::vector<int> exps(l, 0);
  auto rec = [&](auto&& self, int idx, int rest) -> void {
    if (idx == l - 1) {
      exps[idx] = rest;
      Rat coeff = 1;
      int pos = 0;
      // multinomial m! / prod exps! times prod c_i^exps
      for (int i = 0; i < l; ++i) {
        for (int t = 1; t <= exps[i]; ++t) coeff *= Rat(++pos) / Rat(t);
        for (int t = 0; t < exps[i]; ++t) coeff *= a.c[i];
      }
      Monomial mono;
      for (int i = 0; i < l; ++i)
        if (exps[i] > 0)
          mono.factors.push_back({rs.letter_f(rs.simple_pos_index(i)), exps[i]});
      std::sort(mono.factors.begin(), mono.factors.end());
      Rat val = invariant_pairing_value(V, tau_apply(V, mono, hw, m), hw);
      total += coeff * val;
      return;
    }
    for (int e = 0; e <= rest; ++e) {
      exps[idx] = e;
      self(self, idx + 1, rest - e);
    }
  };
  rec(rec, 0, m);
  if (is_zero(total))
    throw InternalError(
        "max_exponent_pairing: zero pairing contradicts the principal "
        "sl2 string");
  return total;
}

Rat max_exponent_pairing(const RootSystem& rs, const Weight& nu,
                         long size_cap) {
  Irrep V = Irrep::build(rs, nu, size_cap);
  return max_exponent_pairing(rs, nu, V);
}

ConstructionReport lipsman_wolf_element(const RootSystem& rs, const Irrep& V,
                                        bool allow_expensive_invariants) {
  const Weight& nu = V.highest_weight();
  if (nu.is_zero()) throw UsageError("lipsman_wolf_element: nu must be nonzero");
  ConstructionReport rep;
  rep.nu = nu;
  rep.lambda = nu + rs.dual_weight(nu);

  MatrixCoeffFunctional F(V);
  rep.k = codegree(F);
  rep.fk = extract_fk(F, rep.k);

  std::vector<long> w;
  bool homog = rep.fk.weight_homogeneous(rs, w);
  rep.weight_ok = homog && !rep.fk.is_zero();
  if (rep.weight_ok)
    for (int j = 0; j < rs.rank(); ++j)
      if (Rat(w[j]) != rep.lambda.root_coords[j]) rep.weight_ok = false;

  rep.in_Sn = rep.fk.in_Sn(rs);
  rep.n_invariant = is_n_invariant_weight(rs, rep.fk, rep.lambda);

  Irrep v_def = Irrep::build(rs, defining_module_weight(rs));
  InvariantSet J = invariant_generators(rs, v_def, allow_expensive_invariants);
  rep.harmonic = is_harmonic(rs, rep.fk, J);

  long H = rep.lambda.height().get_num().get_si();
  ExponentPolynomial ep = generalized_exponents(
      rs, rep.lambda, std::max<long>(kDefaultHeightBound, H));
  rep.k_equals_min_exponent = (ep.min_degree() == rep.k);

  rep.fk_nonzero = !rep.fk.is_zero();
  return rep;
}

ConstructionReport lipsman_wolf_element(const RootSystem& rs, const Weight& nu,
                                        long size_cap,
                                        bool allow_expensive_invariants) {
  if (nu.is_zero()) throw UsageError("lipsman_wolf_element: nu must be nonzero");
  Irrep V = Irrep::build(rs, nu, size_cap);
  return lipsman_wolf_element(rs, V, allow_expensive_invariants);
}

CounterexampleReport counterexample_check(const RootSystem& rs,
                                          const Weight& xi,
                                          const Irrep& V_nu) {
  if (!xi.is_integral() || !xi.is_dominant())
    throw UsageError("counterexample_check: xi must be dominant integral");
  CounterexampleReport rep;
  rep.xi = xi;
  rep.d = max_weight_multiplicity(rs, xi);
  if (rep.d <= 1)
    throw NotApplicableError(
        "counterexample_check: every weight multiplicity of V_xi is 1; no "
        "counterexample in this type");
  rep.nu = xi + rs.dual_weight(xi);
  rep.lambda = 2 * rep.nu;
  rep.f_nu = lw_naive_f(rs, xi, V_nu);
  rep.ell_lambda = freudenthal_mult(rs, rep.lambda, rs.zero_weight());
  for (int deg : rep.f_nu.degrees_present()) rep.degrees_present.insert(deg);
  rep.max_pairing = max_exponent_pairing(rs, rep.nu, V_nu);
  for (int i = 0; i < rs.rank(); ++i) {
    int e_i = rs.letter_e(rs.simple_pos_index(i));
    if (!ad_action(rs, e_i, rep.f_nu).is_zero()) {
      rep.invariance_witness = i;
      break;
    }
  }
  long top = rep.lambda.height().get_num().get_si();
  if (!rep.degrees_present.count(static_cast<int>(top)))
    throw InternalError(
        "counterexample_check: top degree missing despite the nonzero "
        "principal pairing");
  return rep;
}

CounterexampleReport counterexample_check(const RootSystem& rs,
                                          const Weight& xi, long size_cap) {
  if (!xi.is_integral() || !xi.is_dominant())
    throw UsageError("counterexample_check: xi must be dominant integral");
  long d = max_weight_multiplicity(rs, xi);
  if (d <= 1)
    throw NotApplicableError(
        "counterexample_check: every weight multiplicity of V_xi is 1; no "
        "counterexample in this type");
  Weight nu = xi + rs.dual_weight(xi);
  Irrep V = Irrep::build(rs, nu, size_cap);
  return counterexample_check(rs, xi, V);
}

InequalityReport multiplicity_inequality_battery(
    const RootSystem& rs, const std::vector<std::pair<Weight, Weight>>& pairs) {
  InequalityReport rep;
  for (const auto& [beta, gamma] : pairs) {
    if (!beta.is_integral() || !beta.is_dominant())
      throw UsageError("inequality battery: beta must be dominant integral");
    if (!gamma.is_dominant() || !gamma.in_root_lattice())
      throw UsageError(
          "inequality battery: gamma must be dominant in the root lattice");
    InequalityCase c;
    c.beta = beta;
    c.gamma = gamma;
    c.d = max_weight_multiplicity(rs, beta);

    FreudenthalTable tb(rs, beta);
    FreudenthalTable tsum(rs, beta + gamma);
    c.monotone_ok = true;
    for (const auto& [mu, mult] : weight_support(rs, beta))
      if (tsum.mult(mu) < mult) c.monotone_ok = false;

    Weight sum_dual = beta + rs.dual_weight(beta);
    c.zero_weight_ok =
        freudenthal_mult(rs, sum_dual, rs.zero_weight()) >= c.d;
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

namespace {

std::string flag_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string ConstructionReport::to_text(const RootSystem& rs) const {
  std::ostringstream os;
  os << "construction-report\n";
  os << "type " << rs.datum().name() << "\n";
  os << "nu " << nu.fund_str() << "\n";
  os << "lambda " << lambda.fund_str() << "\n";
  os << "codegree " << k << "\n";
  os << "flag weight_ok " << flag_str(weight_ok) << "\n";
  os << "flag in_Sn " << flag_str(in_Sn) << "\n";
  os << "flag n_invariant " << flag_str(n_invariant) << "\n";
  os << "flag harmonic " << flag_str(harmonic) << "\n";
  os << "flag k_equals_min_exponent " << flag_str(k_equals_min_exponent)
     << "\n";
  os << "flag fk_nonzero " << flag_str(fk_nonzero) << "\n";
  os << "f_k " << fk.to_text(rs) << "\n";
  os << "end\n";
  return os.str();
}

std::string ConstructionReport::to_structured(const RootSystem& rs) const {
  std::ostringstream os;
  os << "{\"report\":\"construction\",\"type\":\"" << rs.datum().name()
     << "\",\"nu\":\"" << nu.fund_str() << "\",\"lambda\":\""
     << lambda.fund_str() << "\",\"codegree\":" << k
     << ",\"flags\":{\"weight_ok\":" << flag_str(weight_ok)
     << ",\"in_Sn\":" << flag_str(in_Sn)
     << ",\"n_invariant\":" << flag_str(n_invariant)
     << ",\"harmonic\":" << flag_str(harmonic)
     << ",\"k_equals_min_exponent\":" << flag_str(k_equals_min_exponent)
     << ",\"fk_nonzero\":" << flag_str(fk_nonzero)
     << "},\"f_k\":" << fk.to_records(rs) << "}";
  return os.str();
}

std::string CounterexampleReport::to_text(const RootSystem& rs) const {
  std::ostringstream os;
  os << "counterexample-report\n";
  os << "type " << rs.datum().name() << "\n";
  os << "xi " << xi.fund_str() << "\n";
  os << "d " << d << "\n";
  os << "nu " << nu.fund_str() << "\n";
  os << "lambda " << lambda.fund_str() << "\n";
  os << "ell_lambda " << ell_lambda << "\n";
  os << "degrees";
  for (int deg : degrees_present) os << " " << deg;
  os << "\n";
  os << "max_pairing " << rat_str(max_pairing) << "\n";
  os << "invariance_witness ";
  if (invariance_witness >= 0)
    os << "alpha_" << (invariance_witness + 1);
  else
    os << "none";
  os << "\n";
  os << "f_nu " << f_nu.to_text(rs) << "\n";
  os << "end\n";
  return os.str();
}

std::string CounterexampleReport::to_structured(const RootSystem& rs) const {
  std::ostringstream os;
  os << "{\"report\":\"counterexample\",\"type\":\"" << rs.datum().name()
     << "\",\"xi\":\"" << xi.fund_str() << "\",\"d\":" << d << ",\"nu\":\""
     << nu.fund_str() << "\",\"lambda\":\"" << lambda.fund_str()
     << "\",\"ell_lambda\":" << ell_lambda << ",\"degrees\":[";
  bool first = true;
  for (int deg : degrees_present) {
    if (!first) os << ",";
    first = false;
    os << deg;
  }
  os << "],\"max_pairing\":\"" << rat_str(max_pairing)
     << "\",\"invariance_witness\":" << invariance_witness
     << ",\"f_nu\":" << f_nu.to_records(rs) << "}";
  return os.str();
}

}  // namespace centun
