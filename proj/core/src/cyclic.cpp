#include "polyzeta/cyclic.hpp"

#include <algorithm>
#include <cstdlib>

namespace polyzeta {

int AdmissibleTuple::easy_exponent() const {
  int s = 0;
  for (int a : alphas) s += a;
  return k - n() - s;
}

bool cyclically_nonconsecutive(int k, std::span<const int> r) {
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 1 || r[i] > k) return false;
    for (size_t j = 0; j < i; ++j) {
      int d = std::abs(r[i] - r[j]);
      if (d == 0 || d == 1 || d == k - 1) return false;
    }
  }
  return true;
}

std::vector<int> compute_alphas(int k, const std::vector<int>& r) {
  if (k < 2) throw invalid_parameter("compute_alphas: k must be >= 2");
  if (!cyclically_nonconsecutive(k, r)) {
    throw invalid_parameter("compute_alphas: tuple is not admissible");
  }
  const int n = static_cast<int>(r.size());
  std::vector<int> alphas(n);
  for (int j = 0; j < n; ++j) {
    int a = 2 - (k == 2 ? 1 : 0);
    for (int m = 0; m < j; ++m) {
      int d = std::abs(r[m] - r[j]);
      if (d == 2) a -= 1;
      if (d == k - 2) a -= 1;  // fires together with the above when k == 4
    }
    alphas[j] = a;
  }
  return alphas;
}

std::vector<AdmissibleTuple> enumerate_admissible_tuples(int k, int n) {
  if (k < 2) throw invalid_parameter("enumerate_admissible_tuples: k must be >= 2");
  if (n < 1 || n > k / 2) {
    throw invalid_parameter("enumerate_admissible_tuples: need 1 <= n <= k/2");
  }
  std::vector<AdmissibleTuple> out;
  std::vector<int> r;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(r.size()) == n) {
      out.push_back({k, r, compute_alphas(k, r)});
      return;
    }
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int prev : r) {
        int d = std::abs(prev - c);
        if (d == 0 || d == 1 || d == k - 1) { ok = false; break; }
      }
      if (!ok) continue;
      r.push_back(c);
      self(self);
      r.pop_back();
    }
  };
  rec(rec);
  return out;
}

long long count_admissible_subsets(int k, int n) {
  if (k < 2 || k > 64) throw invalid_parameter("count_admissible_subsets: need 2 <= k <= 64");
  if (n < 1 || n > k / 2) {
    throw invalid_parameter("count_admissible_subsets: need 1 <= n <= k/2");
  }
  // (k/(k-n)) * C(k-n, n), computed exactly
  long long binom = 1;
  for (int i = 1; i <= n; ++i) {
    binom = binom * (k - n - n + i) / i;  // C(k-n, n) built up term by term
  }
  return binom * k / (k - n);
}

std::map<int, std::vector<std::vector<int>>> brute_force_admissible_subsets(int k) {
  if (k < 2 || k > 20) throw invalid_parameter("brute_force_admissible_subsets: need 2 <= k <= 20");
  std::map<int, std::vector<std::vector<int>>> out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) subset.push_back(i + 1);
    }
    if (cyclically_nonconsecutive(k, subset)) {
      out[static_cast<int>(subset.size())].push_back(subset);
    }
  }
  return out;
}

}  // namespace polyzeta
