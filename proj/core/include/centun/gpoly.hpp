#ifndef CENTUN_GPOLY_HPP
#define CENTUN_GPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "centun/rational.hpp"
#include "centun/root_system.hpp"

namespace centun {

// Monomial in the Chevalley-basis letters of g: sorted (letter, exp)
// pairs with positive exponents.
struct Monomial {
  std::vector<std::pair<int, int>> factors;

  int degree() const {
    int d = 0;
    for (const auto& [l, e] : factors) d += e;
    return d;
  }
  std::vector<int> letters() const {
    std::vector<int> out;
    for (const auto& [l, e] : factors)
      for (int k = 0; k < e; ++k) out.push_back(l);
    return out;
  }
  bool operator==(const Monomial& o) const { return factors == o.factors; }
};

// Graded order, then lexicographic on the exploded letter sequence. The
// letter indices already run through the positive roots by (height,
// lex), then h, then the negative roots, so this is the fixed output
// order used by every serializer.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.letters() < b.letters();
  }
};

// Sparse exact polynomial in S(g). Immutable value semantics; no zero
// coefficients are ever stored.
class GPoly {
 public:
  using TermMap = std::map<Monomial, Rat, MonomialLess>;

  GPoly() = default;
  static GPoly constant(const Rat& c);
  static GPoly letter(int letter_idx);
  static GPoly monomial(Monomial m, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rat coeff(const Monomial& m) const;

  // -1 for the zero polynomial.
  int degree() const;
  bool degree_homogeneous() const;
  // All degrees with a nonzero term, ascending.
  std::vector<int> degrees_present() const;

  GPoly& operator+=(const GPoly& o);
  GPoly& operator-=(const GPoly& o);
  GPoly& operator*=(const Rat& c);
  GPoly operator*(const GPoly& o) const;
  void add_term(const Monomial& m, const Rat& c);

  // Weight (integer simple-root coordinates) when every term has the
  // same letter-weight sum; false otherwise.
  bool weight_homogeneous(const RootSystem& rs,
                          std::vector<long>& weight_out) const;
  // True when every letter of every monomial is a positive-root vector.
  bool in_Sn(const RootSystem& rs) const;

  std::string to_text(const RootSystem& rs) const;
  // The record list format: [{"monomial":{label:exp,...},"coeff":"p/q"},...]
  std::string to_records(const RootSystem& rs) const;

 private:
  TermMap terms_;
};

inline GPoly operator+(GPoly a, const GPoly& b) { return a += b; }
inline GPoly operator-(GPoly a, const GPoly& b) { return a -= b; }
inline GPoly operator*(const Rat& c, GPoly p) { return p *= c; }

}  // namespace centun

#endif
