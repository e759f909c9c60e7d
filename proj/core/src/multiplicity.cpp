#include "centun/multiplicity.hpp"

#include <algorithm>
#include <set>

#include "centun/errors.hpp"

namespace centun {

namespace {

// lambda - mu must land in the nonnegative integer root span for mu to
// be a weight of V_lambda.
bool under_lambda(const Weight& lambda, const Weight& mu) {
  for (size_t i = 0; i < lambda.root_coords.size(); ++i) {
    Rat diff = lambda.root_coords[i] - mu.root_coords[i];
    if (!is_integer(diff) || sgn(diff) < 0) return false;
  }
  return true;
}

}  // namespace

FreudenthalTable::FreudenthalTable(const RootSystem& rs, Weight lambda)
    : rs_(rs), lambda_(std::move(lambda)) {
  if (!lambda_.is_integral() || !lambda_.is_dominant())
    throw UsageError("freudenthal: weight must be dominant integral");
  Weight top = lambda_ + rs_.rho();
  norm_top_ = rs_.form_d(top, top);
  memo_[lambda_] = 1;
}

long FreudenthalTable::mult(const Weight& mu) {
  if (!under_lambda(lambda_, mu)) return 0;
  return mult_dominant(rs_.dominant_rep(mu));
}

long FreudenthalTable::mult_dominant(const Weight& mu) {
  auto it = memo_.find(mu);
  if (it != memo_.end()) return it->second;
  Weight shifted = mu + rs_.rho();
  Rat denom = norm_top_ - rs_.form_d(shifted, shifted);
  if (is_zero(denom)) {
    // Only lambda itself sits on the top shell among dominant weights
    // under lambda, and that case is seeded in the constructor.
    memo_[mu] = 0;
    return 0;
  }
  Rat sum = 0;
  for (int g = 0; g < rs_.num_positive(); ++g) {
    Weight gamma = rs_.root_weight(rs_.positive_roots()[g]);
    Weight x = mu;
    while (true) {
      x = x + gamma;
      if (!under_lambda(lambda_, x)) break;
      long mx = mult_dominant(rs_.dominant_rep(x));
      if (mx != 0) sum += Rat(mx) * rs_.form_d(x, gamma);
    }
  }
  Rat val = 2 * sum / denom;
  if (!is_integer(val) || sgn(val) < 0)
    throw InternalError("freudenthal: non-integral multiplicity");
  long m = static_cast<long>(val.get_num().get_si());
  memo_[mu] = m;
  return m;
}

const std::vector<std::pair<Weight, long>>&
FreudenthalTable::dominant_support() {
  if (support_done_) return dom_support_;
  // Enumerate dominant mu with lambda - mu in the nonnegative root span.
  struct Key {
    long depth;
    std::vector<long> content;
    bool operator<(const Key& o) const {
      return depth != o.depth ? depth < o.depth : content < o.content;
    }
  };
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> frontier{std::vector<long>(rs_.rank(), 0)};
  seen.insert(frontier[0]);
  std::vector<Key> all{{0, frontier[0]}};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& c : frontier) {
      for (int i = 0; i < rs_.rank(); ++i) {
        std::vector<long> c2 = c;
        c2[i] += 1;
        if (seen.count(c2)) continue;
        RatVec r(rs_.rank());
        for (int j = 0; j < rs_.rank(); ++j)
          r[j] = lambda_.root_coords[j] - c2[j];
        bool valid = true;
        for (int j = 0; j < rs_.rank(); ++j)
          if (sgn(r[j]) < 0) valid = false;
        if (!valid) continue;
        seen.insert(c2);
        next.push_back(c2);
        long d = 0;
        for (long x : c2) d += x;
        all.push_back({d, c2});
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  for (const auto& key : all) {
    RatVec r(rs_.rank());
    for (int j = 0; j < rs_.rank(); ++j)
      r[j] = lambda_.root_coords[j] - key.content[j];
    Weight mu = rs_.weight_from_root(std::move(r));
    if (!mu.is_dominant()) continue;
    long m = mult_dominant(mu);
    if (m > 0) dom_support_.push_back({mu, m});
  }
  support_done_ = true;
  return dom_support_;
}

long freudenthal_mult(const RootSystem& rs, const Weight& lambda,
                      const Weight& mu) {
  FreudenthalTable table(rs, lambda);
  return table.mult(mu);
}

mpz_class weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw UsageError("weyl_dimension: weight must be dominant integral");
  Weight top = lambda + rs.rho();
  Rat prod = 1;
  for (int g = 0; g < rs.num_positive(); ++g) {
    Weight gamma = rs.root_weight(rs.positive_roots()[g]);
    prod *= rs.form_d(top, gamma) / rs.form_d(rs.rho(), gamma);
  }
  if (!is_integer(prod) || sgn(prod) <= 0)
    throw InternalError("weyl_dimension: non-integral product");
  return prod.get_num();
}

long max_weight_multiplicity(const RootSystem& rs, const Weight& xi) {
  FreudenthalTable table(rs, xi);
  long best = 0;
  for (const auto& [mu, m] : table.dominant_support()) best = std::max(best, m);
  return best;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu) {
  std::set<Weight, WeightLess> seen;
  std::vector<Weight> orbit{rs.dominant_rep(mu)};
  seen.insert(orbit[0]);
  size_t head = 0;
  while (head < orbit.size()) {
    Weight cur = orbit[head++];
    for (int i = 0; i < rs.rank(); ++i) {
      Weight nxt = rs.reflect(cur, i);
      if (seen.insert(nxt).second) orbit.push_back(nxt);
    }
  }
  return orbit;
}

std::vector<std::pair<Weight, long>> weight_support(const RootSystem& rs,
                                                    const Weight& lambda) {
  FreudenthalTable table(rs, lambda);
  std::vector<std::pair<Weight, long>> out;
  for (const auto& [mu, m] : table.dominant_support())
    for (const auto& w : weyl_orbit(rs, mu)) out.push_back({w, m});
  return out;
}

}  // namespace centun
