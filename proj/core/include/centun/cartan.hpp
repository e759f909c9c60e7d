#ifndef CENTUN_CARTAN_HPP
#define CENTUN_CARTAN_HPP

#include <string>
#include <vector>

namespace centun {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

// Cartan matrix convention: entry [i][j] = <alpha_i, alpha_j^vee> = alpha_i(h_j).
struct CartanDatum {
  Family family;
  int rank;
  std::vector<std::vector<int>> cartan_matrix;

  std::string name() const;  // "A2", "G2", ...
};

// Builds the standard Cartan matrix (Bourbaki numbering) for a valid
// simple type; throws UsageError for unknown family/rank combinations.
CartanDatum make_cartan_datum(Family family, int rank);

// Checks the structural invariants of a Cartan matrix against the table.
void validate_cartan_datum(const CartanDatum& datum);

// Degrees of the generators of the polynomial invariant ring, fixed
// classical table per type.
std::vector<int> invariant_degree_table(Family family, int rank);

}  // namespace centun

#endif
