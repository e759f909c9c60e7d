#include <doctest.h>

#include "centun/errors.hpp"
#include "centun/irrep.hpp"
#include "centun/multiplicity.hpp"

using namespace centun;

namespace {

void check_serre_relations(const Irrep& V) {
  const RootSystem& rs = V.rs();
  int l = rs.rank();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      SpMat comm = sp_commutator(V.gen_e(i), V.gen_f(j));
      if (i == j) {
        SpMat h(V.dim(), V.dim());
        for (int g = 0; g < V.dim(); ++g) h.add(g, g, V.h_diag(i, g));
        CHECK(sp_equal(comm, h));
      } else {
        CHECK(comm.is_zero_mat());
      }
    }
  // [h, e_i] = <alpha_i, alpha_j^vee> e_i on every basis vector
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < l; ++i) {
      SpMat he(V.dim(), V.dim());
      for (int c = 0; c < V.dim(); ++c)
        for (const auto& [r, v] : V.gen_e(i).col[c])
          he.add(r, c, v * (V.h_diag(j, r) - V.h_diag(j, c)));
      SpMat want = sp_scale(V.gen_e(i),
                            Rat(rs.datum().cartan_matrix[i][j]));
      CHECK(sp_equal(he, want));
    }
}

void check_root_matrix_consistency(const Irrep& V) {
  const RootSystem& rs = V.rs();
  int m = rs.num_positive();
  std::vector<int> srs;
  for (int g = 1; g <= m; ++g) {
    srs.push_back(g);
    srs.push_back(-g);
  }
  for (int sa : srs)
    for (int sb : srs) {
      if (sa + sb == 0) continue;
      std::vector<long> sum = rs.signed_root_coords(sa);
      std::vector<long> cb = rs.signed_root_coords(sb);
      for (size_t t = 0; t < sum.size(); ++t) sum[t] += cb[t];
      SpMat comm = sp_commutator(V.root_matrix(sa), V.root_matrix(sb));
      int ssum = rs.signed_root_id(sum);
      if (ssum == 0) {
        CHECK(comm.is_zero_mat());
      } else {
        SpMat want =
            sp_scale(V.root_matrix(ssum), Rat(rs.struct_const(sa, sb)));
        CHECK(sp_equal(comm, want));
      }
    }
}

}  // namespace

TEST_CASE("small modules have the expected shapes") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  Irrep v2 = Irrep::build(a1, a1.fundamental_weight(0));
  CHECK(v2.dim() == 2);
  CHECK(v2.num_weight_spaces() == 2);
  CHECK(v2.weight_of(0).fund_str() == "1");
  CHECK(v2.weight_of(1).fund_str() == "-1");

  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep v8 = Irrep::build(a2, a2.highest_root());
  CHECK(v8.dim() == 8);
  int z = v8.weight_space_index(a2.zero_weight());
  REQUIRE(z >= 0);
  CHECK(v8.weight_space(z).dim == 2);

  Irrep v27 = Irrep::build(a2, 2 * a2.highest_root());
  CHECK(v27.dim() == 27);
}

TEST_CASE("weight space dimensions match freudenthal") {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::B, 2}, {Family::G, 2}}) {
    RootSystem rs = RootSystem::build(f, r);
    Weight lam = (f == Family::G) ? rs.fundamental_weight(0)
                                  : rs.highest_root();
    Irrep V = Irrep::build(rs, lam);
    FreudenthalTable table(rs, lam);
    for (int k = 0; k < V.num_weight_spaces(); ++k)
      CHECK(V.weight_space(k).dim == table.mult(V.weight_space(k).mu));
    CHECK(mpz_class(V.dim()) == weyl_dimension(rs, lam));
  }
}

TEST_CASE("generator and root matrices satisfy the algebra relations") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep v8 = Irrep::build(a2, a2.highest_root());
  check_serre_relations(v8);
  check_root_matrix_consistency(v8);

  RootSystem b2 = RootSystem::build(Family::B, 2);
  Irrep v10 = Irrep::build(b2, b2.highest_root());
  check_serre_relations(v10);
  check_root_matrix_consistency(v10);
}

TEST_CASE("highest and lowest weight lines behave") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep V = Irrep::build(a2, 2 * a2.highest_root());
  RatVec hw = V.hw_vector();
  for (int i = 0; i < a2.rank(); ++i)
    CHECK(vec_is_zero(V.gen_e(i).apply(hw)));
  RatVec lw(V.dim(), Rat(0));
  lw[V.lw_index()] = 1;
  for (int i = 0; i < a2.rank(); ++i)
    CHECK(vec_is_zero(V.gen_f(i).apply(lw)));
  CHECK(V.weight_space(V.num_weight_spaces() - 1).dim == 1);
  CHECK(V.lowest_weight() == a2.zero_weight() - 2 * a2.highest_root());
}

TEST_CASE("contravariant grams are nonsingular") {
  RootSystem b2 = RootSystem::build(Family::B, 2);
  Irrep V = Irrep::build(b2, b2.highest_root());
  for (int k = 0; k < V.num_weight_spaces(); ++k) {
    const QMat& g = V.weight_space(k).gram;
    CHECK(qmat_rank(g) == g.size());
  }
}

TEST_CASE("act_word") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  Irrep v2 = Irrep::build(a1, a1.fundamental_weight(0));
  RatVec hw = v2.hw_vector();
  CHECK(act_word(v2, {}, hw) == hw);
  RatVec low = act_word(v2, {Letter::e(-1)}, hw);
  CHECK(!is_zero(low[v2.lw_index()]));

  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep v8 = Irrep::build(a2, a2.highest_root());
  int theta = a2.num_positive();  // highest root has the last index
  RatVec r = act_word(v8, {Letter::e(-theta), Letter::e(-theta)},
                      v8.hw_vector());
  bool only_lw = true;
  for (int g = 0; g < v8.dim(); ++g)
    if (g != v8.lw_index() && !is_zero(r[g])) only_lw = false;
  CHECK(only_lw);
  CHECK(!is_zero(r[v8.lw_index()]));

  RatVec wrong(3, Rat(1));
  CHECK_THROWS_AS(act_word(v8, {}, wrong), UsageError);
}

TEST_CASE("invariant pairing against the highest weight line") {
  RootSystem a1 = RootSystem::build(Family::A, 1);
  Irrep vadj = Irrep::build(a1, a1.highest_root());
  RatVec hw = vadj.hw_vector();
  // (v_nu, v_nu) = 0 since nu != 0
  CHECK(invariant_pairing_value(vadj, hw, hw) == Rat(0));
  RatVec lw(vadj.dim(), Rat(0));
  lw[vadj.lw_index()] = 1;
  CHECK(invariant_pairing_value(vadj, lw, hw) == Rat(1));

  // oracle: Chevalley-basis adjoint matrices of sl2, frozen by hand.
  // With basis (e, h, f): ad f e = -h, ad f h = 2f, so pi(f)^2 e = -2 f
  // and the pairing against the f-coefficient gives -2. The engine
  // basis vector at the bottom is pi(f)^2 v = -2 f, so the engine value
  // is the oracle value divided by the basis scale -2.
  {
    QMat adf = qmat_zero(3, 3);  // columns e,h,f
    adf[1][0] = -1;              // [f,e] = -h
    adf[2][1] = 2;               // [f,h] = 2f
    RatVec e0{Rat(1), Rat(0), Rat(0)};
    RatVec u = qmat_apply(adf, qmat_apply(adf, e0));
    CHECK(u == RatVec{Rat(0), Rat(0), Rat(-2)});
  }
  RatVec engine = act_word(vadj, {Letter::e(-1), Letter::e(-1)},
                           vadj.hw_vector());
  CHECK(invariant_pairing_value(vadj, engine, hw) == Rat(1));

  RootSystem a2 = RootSystem::build(Family::A, 2);
  Irrep v3 = Irrep::build(a2, a2.fundamental_weight(0));
  CHECK_THROWS_AS(invariant_pairing_value(v3, v3.hw_vector(), v3.hw_vector()),
                  UsageError);
}

TEST_CASE("size cap is enforced with the computed dimension") {
  RootSystem a2 = RootSystem::build(Family::A, 2);
  Weight big = 3 * a2.highest_root();
  try {
    Irrep::build(a2, big, 50);
    FAIL("expected SizeCapError");
  } catch (const SizeCapError& e) {
    CHECK(e.dimension == 64);
    CHECK(e.cap == 50);
  }
}

TEST_CASE("cache round trip is exact") {
  RootSystem b2 = RootSystem::build(Family::B, 2);
  Irrep V = Irrep::build(b2, b2.highest_root());
  std::string text = V.to_cache_text();
  Irrep W = Irrep::from_cache_text(b2, text);
  CHECK(W.to_cache_text() == text);
  CHECK(W.dim() == V.dim());
  for (int i = 0; i < b2.rank(); ++i) {
    CHECK(sp_equal(W.gen_e(i), V.gen_e(i)));
    CHECK(sp_equal(W.gen_f(i), V.gen_f(i)));
  }
  for (int k = 0; k < V.num_weight_spaces(); ++k)
    CHECK(W.weight_space(k).gram == V.weight_space(k).gram);
  CHECK(V.cache_key() == "B2_lam0-2_extraspecial-v1");

  RootSystem a2 = RootSystem::build(Family::A, 2);
  CHECK_THROWS_AS(Irrep::from_cache_text(a2, text), UsageError);
}
