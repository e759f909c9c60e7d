#include <doctest.h>

#include <random>

#include "centun/envelope.hpp"
#include "centun/errors.hpp"
#include "centun/symalg.hpp"

using namespace centun;

TEST_CASE("filtration growth") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep v8 = Irrep::build(a2, a2.highest_root());
  FiltrationSpace W = filtration_start(v8);
  CHECK(W.level == 0);
  CHECK(W.basis.size() == 1);
  size_t prev = 1;
  for (int m = 1; m <= 4; ++m) {
    W = filtration_grow(v8, W);
    CHECK(W.basis.size() >= prev);
    prev = W.basis.size();
  }
  // stabilizes at the whole module
  CHECK(prev == 8);
}

TEST_CASE("codegree examples") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  Irrep vw = Irrep::build(a1, a1.fundamental_weight(0));
  CHECK(codegree(MatrixCoeffFunctional(vw)) == 1);
  Irrep va = Irrep::build(a1, a1.highest_root());
  CHECK(codegree(MatrixCoeffFunctional(va)) == 2);

  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep vt = Irrep::build(a2, a2.highest_root());
  CHECK(codegree(MatrixCoeffFunctional(vt)) == 2);
  Irrep v2t = Irrep::build(a2, 2 * a2.highest_root());
  CHECK(codegree(MatrixCoeffFunctional(v2t)) == 4);

  Irrep triv = Irrep::build(a2, a2.zero_weight());
  CHECK_THROWS_AS([&] { MatrixCoeffFunctional f(triv); }(), UsageError);

  // f(1) = 0 for nu != 0
  MatrixCoeffFunctional F(vt);
  CHECK(F.value_word({}) == Rat(0));
}

TEST_CASE("extract_fk on the small battery") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  Irrep vw = Irrep::build(a1, a1.fundamental_weight(0));
  MatrixCoeffFunctional Fw(vw);
  GPoly f1 = extract_fk(Fw, 1);
  // exactly e / (e, f)
  CHECK(f1.terms().size() == 1);
  CHECK(f1.coeff(Monomial{{{a1.letter_e(0), 1}}}) == Rat(1, 4));
  CHECK_THROWS_AS(extract_fk(Fw, 2), UsageError);

  RootSystem a2 = RootSystem::build(Family::A, 2);
  int theta_idx = a2.num_positive() - 1;
  Irrep vt = Irrep::build(a2, a2.highest_root());
  MatrixCoeffFunctional Ft(vt);
  GPoly f2 = extract_fk(Ft, 2);
  CHECK(f2.terms().size() == 1);
  CHECK(!is_zero(f2.coeff(Monomial{{{a2.letter_e(theta_idx), 2}}})));

  Irrep v2t = Irrep::build(a2, 2 * a2.highest_root());
  MatrixCoeffFunctional F2t(v2t);
  GPoly f4 = extract_fk(F2t, 4);
  CHECK(f4.terms().size() == 1);
  CHECK(!is_zero(f4.coeff(Monomial{{{a2.letter_e(theta_idx), 4}}})));
}

TEST_CASE("reconstruction pairs back to the functional") {
  // f(x~_1...x~_k) = (f_(k), x_1...x_k) on every k-letter word
  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep vt = Irrep::build(a2, a2.highest_root());
  MatrixCoeffFunctional F(vt);
  int k = codegree(F);
  GPoly fk = extract_fk(F, k);
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> letter(0, a2.dim() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    GPoly mono = GPoly::constant(Rat(1));
    for (int t = 0; t < k; ++t) {
      int l = letter(rng);
      int sr = a2.signed_root_of_letter(l);
      w.push_back(sr != 0 ? Letter::e(sr)
                          : Letter::h(l - a2.num_positive()));
      mono = mono * GPoly::letter(l);
    }
    CHECK(F.value_word(w) == killing_pair_S(a2, fk, mono));
  }
}

TEST_CASE("functional is permutation invariant at the codegree") {
  RootSystem b2 = RootSystem::build(Family::B, 2);
  Irrep vt = Irrep::build(b2, b2.highest_root());
  MatrixCoeffFunctional F(vt);
  int k = codegree(F);
  REQUIRE(k == 2);
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> letter(0, b2.dim() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> ls{letter(rng), letter(rng)};
    auto to_word = [&](const std::vector<int>& v) {
      Word w;
      for (int l : v) {
        int sr = b2.signed_root_of_letter(l);
        w.push_back(sr != 0 ? Letter::e(sr)
                            : Letter::h(l - b2.num_positive()));
      }
      return w;
    };
    Rat v1 = F.value_word(to_word(ls));
    std::swap(ls[0], ls[1]);
    Rat v2 = F.value_word(to_word(ls));
    CHECK(v1 == v2);
  }
}

TEST_CASE("split words factor through the pairing") {
  // f(tau(v) tau(w)) = (f_(k), v w) for v in S^i, w in S^j, i + j = k
  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep v2t = Irrep::build(a2, 2 * a2.highest_root());
  MatrixCoeffFunctional F(v2t);
  int k = codegree(F);
  REQUIRE(k == 4);
  GPoly fk = extract_fk(F, k);
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> letter(0, a2.dim() - 1);
  for (int split = 1; split < 4; ++split) {
    for (int trial = 0; trial < 40; ++trial) {
      Monomial mv, mw;
      std::vector<int> lv, lw;
      for (int t = 0; t < split; ++t) lv.push_back(letter(rng));
      for (int t = 0; t < k - split; ++t) lw.push_back(letter(rng));
      std::sort(lv.begin(), lv.end());
      std::sort(lw.begin(), lw.end());
      for (int l : lv) {
        if (!mv.factors.empty() && mv.factors.back().first == l)
          mv.factors.back().second++;
        else
          mv.factors.push_back({l, 1});
      }
      for (int l : lw) {
        if (!mw.factors.empty() && mw.factors.back().first == l)
          mw.factors.back().second++;
        else
          mw.factors.push_back({l, 1});
      }
      RatVec inner = tau_apply(v2t, mw, v2t.hw_vector());
      RatVec outer = tau_apply(v2t, mv, inner);
      Rat lhs = outer[v2t.lw_index()];
      GPoly prod = GPoly::monomial(mv, Rat(1)) * GPoly::monomial(mw, Rat(1));
      CHECK(lhs == killing_pair_S(a2, fk, prod));
    }
  }
}

TEST_CASE("tau symmetrization") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  Irrep va = Irrep::build(a1, a1.highest_root());
  RatVec hw = va.hw_vector();
  // tau(f^k) = pi(f)^k
  for (int k = 1; k <= 2; ++k) {
    Monomial fk{{{a1.letter_f(0), k}}};
    Word w(k, Letter::e(-1));
    CHECK(tau_apply(va, fk, hw) == act_word(va, w, hw));
  }

  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep vt = Irrep::build(a2, a2.highest_root());
  RatVec hv = vt.hw_vector();
  int f1 = a2.letter_f(a2.simple_pos_index(0));
  int f2 = a2.letter_f(a2.simple_pos_index(1));
  Monomial m12{{{std::min(f1, f2), 1}, {std::max(f1, f2), 1}}};
  int s1 = -(a2.simple_pos_index(0) + 1), s2 = -(a2.simple_pos_index(1) + 1);
  RatVec direct1 = act_word(vt, {Letter::e(s1), Letter::e(s2)}, hv);
  RatVec direct2 = act_word(vt, {Letter::e(s2), Letter::e(s1)}, hv);
  RatVec avg(vt.dim());
  for (int t = 0; t < vt.dim(); ++t)
    avg[t] = (direct1[t] + direct2[t]) / 2;
  CHECK(tau_apply(vt, m12, hv) == avg);

  Monomial big{{{f1, 11}}};
  CHECK_THROWS_AS(tau_apply(vt, big, hv), UsageError);
}

TEST_CASE("lw_naive_f") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  GPoly fA1 = lw_naive_f(a1, a1.fundamental_weight(0));
  // single homogeneous monomial e^2 / (2 kappa^2) = e^2 / 32
  CHECK(fA1.terms().size() == 1);
  CHECK(fA1.coeff(Monomial{{{a1.letter_e(0), 2}}}) == Rat(1, 32));
  CHECK(fA1.degree_homogeneous());

  RootSystem a2 = RootSystem::build(Family::A, 2);
  GPoly f = lw_naive_f(a2, a2.highest_root());
  int theta_idx = a2.num_positive() - 1;
  int e1 = a2.letter_e(a2.simple_pos_index(0));
  int e2 = a2.letter_e(a2.simple_pos_index(1));
  // the degree-4 power of the highest root vector appears
  CHECK(!is_zero(f.coeff(Monomial{{{a2.letter_e(theta_idx), 4}}})));
  // and the degree-8 corner monomial appears
  Monomial corner{{{std::min(e1, e2), 4}, {std::max(e1, e2), 4}}};
  CHECK(!is_zero(f.coeff(corner)));
  CHECK(!f.degree_homogeneous());
  std::vector<long> w;
  CHECK(f.weight_homogeneous(a2, w));
  Weight two_nu = 4 * a2.highest_root();
  for (int j = 0; j < 2; ++j) CHECK(Rat(w[j]) == two_nu.root_coords[j]);

  CHECK_THROWS_AS(lw_naive_f(a2, a2.zero_weight() - a2.highest_root()),
                  UsageError);
}
