#include "centun/gpoly.hpp"

#include <algorithm>
#include <sstream>

#include "centun/errors.hpp"

namespace centun {

GPoly GPoly::constant(const Rat& c) {
  GPoly p;
  if (!centun::is_zero(c)) p.terms_[Monomial{}] = c;
  return p;
}

GPoly GPoly::letter(int letter_idx) {
  GPoly p;
  p.terms_[Monomial{{{letter_idx, 1}}}] = 1;
  return p;
}

GPoly GPoly::monomial(Monomial m, const Rat& c) {
  GPoly p;
  if (!centun::is_zero(c)) p.terms_[std::move(m)] = c;
  return p;
}

Rat GPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

int GPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool GPoly::degree_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d < 0) d = m.degree();
    if (m.degree() != d) return false;
  }
  return true;
}

std::vector<int> GPoly::degrees_present() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_) out.push_back(m.degree());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void GPoly::add_term(const Monomial& m, const Rat& c) {
  if (centun::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
    return;
  }
  it->second += c;
  if (centun::is_zero(it->second)) terms_.erase(it);
}

GPoly& GPoly::operator+=(const GPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GPoly& GPoly::operator-=(const GPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GPoly& GPoly::operator*=(const Rat& c) {
  if (centun::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GPoly GPoly::operator*(const GPoly& o) const {
  GPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      // merge sorted factor lists
      Monomial m;
      size_t i = 0, j = 0;
      while (i < ma.factors.size() || j < mb.factors.size()) {
        if (j == mb.factors.size() ||
            (i < ma.factors.size() &&
             ma.factors[i].first < mb.factors[j].first)) {
          m.factors.push_back(ma.factors[i++]);
        } else if (i == ma.factors.size() ||
                   mb.factors[j].first < ma.factors[i].first) {
          m.factors.push_back(mb.factors[j++]);
        } else {
          m.factors.push_back({ma.factors[i].first,
                               ma.factors[i].second + mb.factors[j].second});
          ++i;
          ++j;
        }
      }
      out.add_term(m, ca * cb);
    }
  return out;
}

bool GPoly::weight_homogeneous(const RootSystem& rs,
                               std::vector<long>& weight_out) const {
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::vector<long> w(rs.rank(), 0);
    for (const auto& [l, e] : m.factors) {
      std::vector<long> lw = rs.letter_weight(l);
      for (int j = 0; j < rs.rank(); ++j) w[j] += e * lw[j];
    }
    if (first) {
      weight_out = w;
      first = false;
    } else if (w != weight_out) {
      return false;
    }
  }
  if (first) weight_out.assign(rs.rank(), 0);  // zero polynomial
  return true;
}

bool GPoly::in_Sn(const RootSystem& rs) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [l, e] : m.factors)
      if (rs.signed_root_of_letter(l) <= 0) return false;
  return true;
}

namespace {

std::string pretty_letter(const RootSystem& rs, int letter) {
  int sr = rs.signed_root_of_letter(letter);
  if (sr == 0)
    return "h(" + std::to_string(letter - rs.num_positive() + 1) + ")";
  std::vector<long> c = rs.signed_root_coords(std::abs(sr));
  std::string s = sr > 0 ? "e(" : "f(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace

std::string GPoly::to_text(const RootSystem& rs) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (const auto& [l, e] : m.factors) {
      os << " " << pretty_letter(rs, l);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string GPoly::to_records(const RootSystem& rs) const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"monomial\":{";
    for (size_t i = 0; i < m.factors.size(); ++i) {
      if (i) os << ",";
      os << "\"" << rs.letter_label(m.factors[i].first)
         << "\":" << m.factors[i].second;
    }
    os << "},\"coeff\":\"" << rat_str(c) << "\"}";
  }
  os << "]";
  return os.str();
}

}  // namespace centun
