#ifndef CENTUN_RATIONAL_HPP
#define CENTUN_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace centun {

// All arithmetic in the engine is exact arbitrary-precision rational.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Canonical "p" or "p/q" spelling, used by every serializer.
inline std::string rat_str(const Rat& x) { return x.get_str(); }

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t pos = 0;
  if (s[pos] == '-' || s[pos] == '+') ++pos;
  if (pos == s.size()) throw std::invalid_argument("malformed rational " + s);
  bool slash_seen = false;
  for (size_t i = pos; i < s.size(); ++i) {
    if (s[i] == '/' && !slash_seen && i + 1 < s.size() && i > pos) {
      slash_seen = true;
      continue;
    }
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("malformed rational " + s);
  }
  Rat r(s);
  r.canonicalize();
  return r;
}

using RatVec = std::vector<Rat>;

inline bool vec_is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

// Lexicographic order on rational vectors (shorter vectors first).
struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

}  // namespace centun

#endif
