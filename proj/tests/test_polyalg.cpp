#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "centun/envelope.hpp"
#include "centun/errors.hpp"
#include "centun/gpoly.hpp"
#include "centun/symalg.hpp"

using namespace centun;

namespace {

GPoly rand_poly(const RootSystem& rs, std::mt19937& rng, int max_deg,
                int terms) {
  GPoly p;
  std::uniform_int_distribution<int> letter(0, rs.dim() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    std::vector<int> ls;
    int d = deg(rng);
    for (int j = 0; j < d; ++j) ls.push_back(letter(rng));
    std::sort(ls.begin(), ls.end());
    for (int l : ls) {
      if (!m.factors.empty() && m.factors.back().first == l)
        m.factors.back().second++;
      else
        m.factors.push_back({l, 1});
    }
    p.add_term(m, Rat(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("extended pairing basics") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  int e = a1.letter_e(0), f = a1.letter_f(0), h = a1.letter_h(0);
  GPoly pe = GPoly::letter(e), pf = GPoly::letter(f), ph = GPoly::letter(h);

  // degree-1 pairing is the Killing form itself
  CHECK(killing_pair_S(a1, pe, pf) == Rat(4));
  CHECK(killing_pair_S(a1, ph, ph) == Rat(8));
  CHECK(killing_pair_S(a1, pe, pe) == Rat(0));

  // (e^2, f^2) = 2 (e,f)^2 = 32
  GPoly e2 = pe * pe, f2 = pf * pf, ef = pe * pf;
  CHECK(killing_pair_S(a1, e2, f2) == Rat(32));
  CHECK(killing_pair_S(a1, e2, ef) == Rat(0));
  // graded orthogonality
  CHECK(killing_pair_S(a1, e2, pf) == Rat(0));
  // symmetry
  CHECK(killing_pair_S(a1, f2, e2) == killing_pair_S(a1, e2, f2));
}

TEST_CASE("diagonal monomial norms on the nilradical pairing") {
  RootSystem b2 = RootSystem::build(Family::B, 2);
  // prod a_i! (e_gamma, e_-gamma)^{a_i} on a grid of monomials
  for (int g0 = 0; g0 <= 2; ++g0)
    for (int g1 = 0; g1 <= 2; ++g1) {
      if (g0 + g1 == 0) continue;
      Monomial up, down;
      if (g0) {
        up.factors.push_back({b2.letter_e(0), g0});
        down.factors.push_back({b2.letter_f(0), g0});
      }
      if (g1) {
        up.factors.push_back({b2.letter_e(3), g1});
        down.factors.push_back({b2.letter_f(3), g1});
      }
      Rat want = 1;
      for (int t = 1; t <= g0; ++t) want *= Rat(t) * b2.kappa(0);
      for (int t = 1; t <= g1; ++t) want *= Rat(t) * b2.kappa(3);
      CHECK(killing_pair_S(b2, GPoly::monomial(up, Rat(1)),
                           GPoly::monomial(down, Rat(1))) == want);
    }
}

TEST_CASE("orthocomplement of S^k(n) is spanned by h- and n-letter monomials") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  int m = a2.num_positive();
  for (int k : {2, 3}) {
    // enumerate all degree-k monomials over the full basis
    std::vector<Monomial> all;
    std::vector<int> letters(a2.dim());
    std::function<void(int, int, Monomial)> rec = [&](int start, int left,
                                                      Monomial cur) {
      if (left == 0) {
        all.push_back(cur);
        return;
      }
      for (int l = start; l < a2.dim(); ++l) {
        Monomial nxt = cur;
        if (!nxt.factors.empty() && nxt.factors.back().first == l)
          nxt.factors.back().second++;
        else
          nxt.factors.push_back({l, 1});
        rec(l, left - 1, nxt);
      }
    };
    rec(0, k, Monomial{});
    for (const auto& mono : all) {
      bool pure_n_minus = true;
      for (const auto& [l, e] : mono.factors)
        if (a2.signed_root_of_letter(l) >= 0) pure_n_minus = false;
      // pair against every S^k(n) monomial
      bool orthogonal = true;
      std::vector<Monomial> nmons;
      std::function<void(int, int, Monomial)> recn = [&](int start, int left,
                                                         Monomial cur) {
        if (left == 0) {
          nmons.push_back(cur);
          return;
        }
        for (int l = start; l < m; ++l) {
          Monomial nxt = cur;
          if (!nxt.factors.empty() && nxt.factors.back().first == l)
            nxt.factors.back().second++;
          else
            nxt.factors.push_back({l, 1});
          recn(l, left - 1, nxt);
        }
      };
      recn(0, k, Monomial{});
      for (const auto& nm : nmons)
        if (!is_zero(killing_pair_S(a2, GPoly::monomial(mono, Rat(1)),
                                    GPoly::monomial(nm, Rat(1)))))
          orthogonal = false;
      // a monomial with an h or positive letter pairs to zero with all
      // of S^k(n); a pure n_- monomial pairs nontrivially with its mirror
      CHECK(orthogonal == !pure_n_minus);
    }
  }
}

TEST_CASE("directional derivative") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  int e = a1.letter_e(0), f = a1.letter_f(0);
  GPoly pe = GPoly::letter(e), pf = GPoly::letter(f);
  // d_x y = (x, y) 1
  GPoly d = directional_derivative(a1, pe, pf);
  CHECK(d.coeff(Monomial{}) == Rat(4));
  // d_f e^2 = 2 (f,e) e = 8 e
  GPoly e2 = pe * pe;
  GPoly dfe2 = directional_derivative(a1, e2, pf);
  CHECK(dfe2.coeff(Monomial{{{e, 1}}}) == Rat(8));
  // d_x(y^n) = n (x,y) y^{n-1}
  GPoly e5 = e2 * e2 * pe;
  GPoly dfe5 = directional_derivative(a1, e5, pf);
  CHECK(dfe5.coeff(Monomial{{{e, 4}}}) == Rat(20));
}

TEST_CASE("derivative is adjoint to multiplication") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  std::mt19937 rng(999);
  for (int trial = 0; trial < 40; ++trial) {
    GPoly u = rand_poly(a2, rng, 4, 3);
    GPoly v = rand_poly(a2, rng, 2, 2);
    GPoly w = rand_poly(a2, rng, 2, 2);
    Rat lhs = killing_pair_S(a2, u, v * w);
    Rat rhs = killing_pair_S(a2, directional_derivative(a2, u, v), w);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("adjoint action on polynomials") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  int theta_idx = a2.num_positive() - 1;
  CHECK(a2.height(theta_idx) == 2);
  int e_theta = a2.letter_e(theta_idx), f_theta = a2.letter_f(theta_idx);

  // ad e_alpha (e_-alpha) = h_alpha
  GPoly br = ad_action(a2, e_theta, GPoly::letter(f_theta));
  const RatVec& cc = a2.coroot_coeffs(theta_idx);
  for (int i = 0; i < 2; ++i)
    CHECK(br.coeff(Monomial{{{a2.letter_h(i), 1}}}) == cc[i]);

  // ad e_{alpha_i} (e_theta^k) = 0
  GPoly etheta3 = GPoly::letter(e_theta) * GPoly::letter(e_theta) *
                  GPoly::letter(e_theta);
  for (int i = 0; i < 2; ++i)
    CHECK(ad_action(a2, a2.letter_e(a2.simple_pos_index(i)), etheta3)
              .is_zero());

  // derivation rule on random degree-3 products
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    GPoly p = rand_poly(a2, rng, 2, 2);
    GPoly q = rand_poly(a2, rng, 1, 2);
    for (int letter : {e_theta, a2.letter_h(0), a2.letter_f(0)}) {
      GPoly lhs = ad_action(a2, letter, p * q);
      GPoly rhs = ad_action(a2, letter, p) * q + p * ad_action(a2, letter, q);
      CHECK((lhs - rhs).is_zero());
    }
  }
}

TEST_CASE("n-invariance of weight components") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  int theta_idx = a2.num_positive() - 1;
  GPoly etheta2 =
      GPoly::letter(a2.letter_e(theta_idx)) * GPoly::letter(a2.letter_e(theta_idx));
  CHECK(is_n_invariant_weight(a2, etheta2, 2 * a2.highest_root()));
  GPoly ea1 = GPoly::letter(a2.letter_e(a2.simple_pos_index(0)));
  CHECK(!is_n_invariant_weight(a2, ea1, a2.highest_root()));
}

TEST_CASE("invariant generators") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  Irrep d1 = Irrep::build(a1, defining_module_weight(a1));
  InvariantSet j1 = invariant_generators(a1, d1);
  REQUIRE(j1.generators.size() == 1);
  CHECK(j1.degrees == std::vector<int>{2});
  // proportional to the quadratic Casimir element of S(g)
  GPoly cas;
  cas += (2 / a1.kappa(0)) *
         (GPoly::letter(a1.letter_e(0)) * GPoly::letter(a1.letter_f(0)));
  cas += a1.killing_h_inv()[0][0] *
         (GPoly::letter(a1.letter_h(0)) * GPoly::letter(a1.letter_h(0)));
  // j1.generators[0] = c * cas for a single scalar c
  const GPoly& g = j1.generators[0];
  REQUIRE(!g.is_zero());
  CHECK(g.terms().size() == cas.terms().size());
  Rat ratio = 0;
  bool proportional = true;
  for (const auto& [m, c] : cas.terms()) {
    Rat gc = g.coeff(m);
    if (is_zero(ratio))
      ratio = gc / c;
    else if (gc / c != ratio)
      proportional = false;
  }
  CHECK(proportional);
  CHECK(!is_zero(ratio));

  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}}) {
    RootSystem rs = RootSystem::build(fam, rank);
    Irrep vd = Irrep::build(rs, defining_module_weight(rs));
    InvariantSet J = invariant_generators(rs, vd);
    CHECK(J.degrees == rs.invariant_degrees());
    for (size_t t = 0; t < J.generators.size(); ++t) {
      const GPoly& p = J.generators[t];
      CHECK(p.degree() == J.degrees[t]);
      CHECK(p.degree_homogeneous());
      std::vector<long> w;
      CHECK(p.weight_homogeneous(rs, w));
      for (long x : w) CHECK(x == 0);
      for (int i = 0; i < rs.rank(); ++i) {
        CHECK(ad_action(rs, rs.letter_e(rs.simple_pos_index(i)), p).is_zero());
        CHECK(ad_action(rs, rs.letter_f(rs.simple_pos_index(i)), p).is_zero());
      }
    }
  }

  // the G2 degree-6 expansion needs the explicit opt-in
  RootSystem g2 = RootSystem::build(Family::G, 2);
  Irrep g7 = Irrep::build(g2, defining_module_weight(g2));
  CHECK_THROWS_AS(invariant_generators(g2, g7), UsageError);

  // repeated invariant degrees cannot come from one trace family
  RootSystem d4 = RootSystem::build(Family::D, 4);
  Irrep v8 = Irrep::build(d4, defining_module_weight(d4));
  CHECK_THROWS_AS(invariant_generators(d4, v8, true), UsageError);
}

TEST_CASE("harmonicity") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep vd = Irrep::build(a2, defining_module_weight(a2));
  InvariantSet J = invariant_generators(a2, vd);

  CHECK(is_harmonic(a2, GPoly::constant(Rat(3)), J));
  // powers of root vectors are harmonic
  int theta_idx = a2.num_positive() - 1;
  GPoly e_theta = GPoly::letter(a2.letter_e(theta_idx));
  GPoly pw = GPoly::constant(Rat(1));
  for (int k = 1; k <= 4; ++k) {
    pw = pw * e_theta;
    CHECK(is_harmonic(a2, pw, J));
  }
  GPoly f_simple = GPoly::letter(a2.letter_f(a2.simple_pos_index(1)));
  CHECK(is_harmonic(a2, f_simple * f_simple, J));
  // the quadratic invariant itself is not harmonic
  CHECK(!is_harmonic(a2, J.generators[0], J));
}

TEST_CASE("polynomial printing and record format") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  int theta_idx = a2.num_positive() - 1;
  GPoly p = GPoly::monomial(Monomial{{{a2.letter_e(theta_idx), 2}}}, Rat(-1, 36));
  p.add_term(Monomial{{{a2.letter_e(0), 1}, {a2.letter_h(0), 1}}}, Rat(3));
  CHECK(p.to_text(a2) == "3 e(0,1) h(1) + -1/36 e(1,1)^2");
  CHECK(p.to_records(a2) ==
        "[{\"monomial\":{\"0,1\":1,\"h1\":1},\"coeff\":\"3\"},"
        "{\"monomial\":{\"1,1\":2},\"coeff\":\"-1/36\"}]");
  CHECK(GPoly().to_text(a2) == "0");
  // ordering: graded first, then letter sequence
  GPoly q = GPoly::letter(a2.letter_e(0));
  q += GPoly::monomial(Monomial{{{a2.letter_e(0), 3}}}, Rat(1));
  CHECK(q.to_text(a2) == "1 e(0,1) + 1 e(0,1)^3");
}
