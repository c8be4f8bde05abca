#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nlhorn/partition.hpp"

namespace nlhorn {

/// |mu| + |nu| + |lambda| even. N_{mu,nu,lambda} = 0 whenever this fails.
bool parity_ok(const Partition& mu, const Partition& nu, const Partition& lambda);

/// Newell-Littlewood number: sum over alpha,beta,gamma of
/// c^mu_{alpha,beta} c^nu_{alpha,gamma} c^lambda_{beta,gamma}.
long long newell_littlewood(const Partition& mu, const Partition& nu, const Partition& lambda);

/// N_{mu,nu,lambda} > 0, short-circuiting on the first contributing triple.
bool nl_positive(const Partition& mu, const Partition& nu, const Partition& lambda);

/// N_{mu,nu,(p)} > 0 decided by the closed row criterion (no LR search).
bool pieri_row_positive(const Partition& mu, const Partition& nu, int p);
/// Witness alpha with c^mu_{alpha,*} c^nu_{alpha,*} contributing, when the row
/// criterion holds; nullopt otherwise.
std::optional<Partition> pieri_row_witness(const Partition& mu, const Partition& nu, int p);
/// N_{mu,nu,(1^p)} > 0 decided by the column criterion (conjugate dual).
bool pieri_col_positive(const Partition& mu, const Partition& nu, int p);
std::optional<Partition> pieri_col_witness(const Partition& mu, const Partition& nu, int p);

/// Brute-force fallbacks that search alpha directly; for cross-validation.
bool pieri_row_positive_search(const Partition& mu, const Partition& nu, int p);
bool pieri_col_positive_search(const Partition& mu, const Partition& nu, int p);

/// True when alpha certifies N_{mu,nu,(p)} > 0: horizontal strips mu/alpha and
/// nu/alpha of the sizes forced by p.
bool pieri_row_certificate_ok(const Partition& mu, const Partition& nu, int p,
                              const Partition& alpha);
bool pieri_col_certificate_ok(const Partition& mu, const Partition& nu, int p,
                              const Partition& alpha);

/// Enumerates partitions of exactly `size` contained in `bound`, largest first
/// part first. Visitor returns true to stop; returns whether a visitor did.
template <class Fn>
bool for_each_subpartition(const Partition& bound, long long size, Fn&& fn) {
  if (size < 0 || size > bound.size()) return false;
  const std::vector<int>& b = bound.parts();
  std::vector<long long> suffix(b.size() + 1, 0);
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + b[i];
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t i, int prev, long long rem) -> bool {
    if (rem == 0) return fn(Partition(std::vector<int>(cur)));
    if (i >= b.size() || rem > suffix[i]) return false;
    int hi = static_cast<int>(std::min<long long>(std::min(b[i], prev), rem));
    for (int v = hi; v >= 1; --v) {
      cur.push_back(v);
      bool stop = self(self, i + 1, v, rem - v);
      cur.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return rec(rec, 0, bound.empty() ? 0 : bound.parts()[0], size);
}

}  // namespace nlhorn
