#include "centun/cartan.hpp"

#include <algorithm>

#include "centun/errors.hpp"

namespace centun {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw UsageError(std::string("unknown family '") + c + "'");
  }
}

std::string CartanDatum::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

static bool valid_type(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

CartanDatum make_cartan_datum(Family family, int rank) {
  if (!valid_type(family, rank))
    throw UsageError("unknown family/rank combination " +
                     std::string(1, static_cast<char>(family)) +
                     std::to_string(rank));
  int n = rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  auto chain = [&](int i, int j) { m[i][j] = m[j][i] = -1; };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      m[n - 2][n - 1] = -2;
      m[n - 1][n - 2] = -1;
      break;
    case Family::C:
      // alpha_n long: transpose of B
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      m[n - 2][n - 1] = -1;
      m[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 3 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 2);
      chain(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: node 2 hangs off node 4 of the A-chain 1-3-4-5-6(-7-8)
      chain(0, 2);
      chain(2, 3);
      chain(1, 3);
      chain(3, 4);
      chain(4, 5);
      if (n >= 7) chain(5, 6);
      if (n >= 8) chain(6, 7);
      break;
    case Family::F:
      chain(0, 1);
      m[1][2] = -2;
      m[2][1] = -1;
      chain(2, 3);
      break;
    case Family::G:
      // alpha_1 short: <alpha_2, alpha_1^vee> = -3
      m[0][1] = -1;
      m[1][0] = -3;
      break;
  }
  return CartanDatum{family, rank, std::move(m)};
}

void validate_cartan_datum(const CartanDatum& datum) {
  const auto& m = datum.cartan_matrix;
  int n = datum.rank;
  if (static_cast<int>(m.size()) != n)
    throw UsageError("Cartan matrix size does not match rank");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw UsageError("Cartan matrix is not square");
    if (m[i][i] != 2) throw UsageError("Cartan diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0) throw UsageError("positive off-diagonal Cartan entry");
      if ((m[i][j] == 0) != (m[j][i] == 0))
        throw UsageError("Cartan zero pattern is not symmetric");
    }
  }
  CartanDatum ref = make_cartan_datum(datum.family, datum.rank);
  if (ref.cartan_matrix != m)
    throw UsageError("Cartan matrix does not match the standard table for " +
                     datum.name());
}

std::vector<int> invariant_degree_table(Family family, int rank) {
  std::vector<int> d;
  switch (family) {
    case Family::A:
      for (int k = 2; k <= rank + 1; ++k) d.push_back(k);
      return d;
    case Family::B:
    case Family::C:
      for (int k = 2; k <= 2 * rank; k += 2) d.push_back(k);
      return d;
    case Family::D:
      for (int k = 2; k <= 2 * rank - 2; k += 2) d.push_back(k);
      d.push_back(rank);
      std::sort(d.begin(), d.end());
      return d;
    case Family::E:
      if (rank == 6) return {2, 5, 6, 8, 9, 12};
      if (rank == 7) return {2, 6, 8, 10, 12, 14, 18};
      return {2, 8, 12, 14, 18, 20, 24, 30};
    case Family::F: return {2, 6, 8, 12};
    case Family::G: return {2, 6};
  }
  throw UsageError("no invariant degree table");
}

}  // namespace centun
