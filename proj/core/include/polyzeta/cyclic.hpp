#ifndef POLYZETA_CYCLIC_HPP
#define POLYZETA_CYCLIC_HPP

#include <map>
#include <span>
#include <vector>

#include "polyzeta/types.hpp"

namespace polyzeta {

// Ordered tuple (r_1,...,r_n) of indices in [k], pairwise at cyclic distance
// >= 2, with the per-position neighbor-bound counts alpha_j.
struct AdmissibleTuple {
  int k = 0;
  std::vector<int> r;       // 1-based indices, all distinct
  std::vector<int> alphas;  // each in {0,1,2}

  int n() const { return static_cast<int>(r.size()); }
  // exponent of psi(1) (resp. phi(1)) on the unconstrained variables
  int easy_exponent() const;
};

// True iff all indices lie in [1,k], are distinct, and every pair is at
// cyclic distance >= 2 (|ri - rj| not in {0, 1, k-1}).
bool cyclically_nonconsecutive(int k, std::span<const int> r);

// alpha_j = 2 - [k==2] - sum over earlier positions m < j of
// ([|r_m - r_j| == 2] + [|r_m - r_j| == k-2]): the number of neighbors of
// r_j whose upper bound 1/xi_{r_j} is not already imposed by a larger
// tuple variable.
std::vector<int> compute_alphas(int k, const std::vector<int>& r);

// All ordered n-tuples of pairwise cyclically nonconsecutive indices in [k],
// in lexicographic order, with alphas filled in.
std::vector<AdmissibleTuple> enumerate_admissible_tuples(int k, int n);

// Number of size-n independent sets in the cycle graph C_k:
// (k/(k-n)) * C(k-n, n). Exact integer arithmetic; requires k <= 64.
long long count_admissible_subsets(int k, int n);

// Filters all 2^k subsets by the cyclic-nonconsecutive predicate, grouped by
// size. Requires k <= 20. Sets of size > floor(k/2) never survive.
std::map<int, std::vector<std::vector<int>>> brute_force_admissible_subsets(int k);

}  // namespace polyzeta

#endif
