#ifndef CENTUN_WEIGHT_HPP
#define CENTUN_WEIGHT_HPP

#include <string>
#include <vector>

#include "centun/rational.hpp"

namespace centun {

// A weight of the Cartan subalgebra, carried in two coordinate systems
// kept exactly consistent: coefficients on the fundamental weights
// (fund_coords[i] = value on the i-th simple coroot) and coefficients
// on the simple roots.
struct Weight {
  RatVec fund_coords;
  RatVec root_coords;

  bool is_integral() const {  // member of the weight lattice L
    for (const auto& c : fund_coords)
      if (!is_integer(c)) return false;
    return true;
  }

  bool in_root_lattice() const {  // member of L_o
    for (const auto& c : root_coords)
      if (!is_integer(c)) return false;
    return true;
  }

  bool is_dominant() const {
    for (const auto& c : fund_coords)
      if (sgn(c) < 0) return false;
    return true;
  }

  bool is_zero() const { return vec_is_zero(fund_coords); }

  // Sum of simple-root coordinates; integral on the root lattice.
  Rat height() const {
    Rat h = 0;
    for (const auto& c : root_coords) h += c;
    return h;
  }

  std::string fund_str() const {
    std::string s;
    for (size_t i = 0; i < fund_coords.size(); ++i) {
      if (i) s += ',';
      s += rat_str(fund_coords[i]);
    }
    return s;
  }
};

inline bool operator==(const Weight& a, const Weight& b) {
  if (a.fund_coords.size() != b.fund_coords.size()) return false;
  for (size_t i = 0; i < a.fund_coords.size(); ++i)
    if (cmp(a.fund_coords[i], b.fund_coords[i]) != 0) return false;
  return true;
}
inline bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

inline Weight operator+(const Weight& a, const Weight& b) {
  Weight w = a;
  for (size_t i = 0; i < w.fund_coords.size(); ++i) {
    w.fund_coords[i] += b.fund_coords[i];
    w.root_coords[i] += b.root_coords[i];
  }
  return w;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  Weight w = a;
  for (size_t i = 0; i < w.fund_coords.size(); ++i) {
    w.fund_coords[i] -= b.fund_coords[i];
    w.root_coords[i] -= b.root_coords[i];
  }
  return w;
}

inline Weight operator-(const Weight& a) {
  Weight w = a;
  for (size_t i = 0; i < w.fund_coords.size(); ++i) {
    w.fund_coords[i] = -w.fund_coords[i];
    w.root_coords[i] = -w.root_coords[i];
  }
  return w;
}

inline Weight operator*(long k, const Weight& a) {
  Weight w = a;
  for (size_t i = 0; i < w.fund_coords.size(); ++i) {
    w.fund_coords[i] *= k;
    w.root_coords[i] *= k;
  }
  return w;
}

// Strict total order (on fundamental coordinates), for map keys.
struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const {
    return RatVecLess{}(a.fund_coords, b.fund_coords);
  }
};

}  // namespace centun

#endif
