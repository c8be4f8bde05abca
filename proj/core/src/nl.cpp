#include "nlhorn/nl.hpp"

#include <algorithm>
#include <stdexcept>

#include "nlhorn/lr.hpp"

namespace nlhorn {

bool parity_ok(const Partition& mu, const Partition& nu, const Partition& la) {
  return ((mu.size() + nu.size() + la.size()) & 1) == 0;
}

namespace {

// The three glueing sizes |alpha|, |beta|, |gamma| are forced by the triple.
struct GlueSizes {
  long long a, b, g;
  bool ok;
};

GlueSizes glue_sizes(const Partition& mu, const Partition& nu, const Partition& la) {
  long long m = mu.size(), n = nu.size(), l = la.size();
  if (((m + n + l) & 1) != 0) return {0, 0, 0, false};
  long long a2 = m + n - l, b2 = m + l - n, g2 = n + l - m;
  if (a2 < 0 || b2 < 0 || g2 < 0) return {0, 0, 0, false};
  return {a2 / 2, b2 / 2, g2 / 2, true};
}

}  // namespace

long long newell_littlewood(const Partition& mu, const Partition& nu, const Partition& la) {
  auto [a, b, g, ok] = glue_sizes(mu, nu, la);
  if (!ok) return 0;
  const Partition mn = meet(mu, nu), ml = meet(mu, la), nl = meet(nu, la);
  long long total = 0;
  for_each_subpartition(mn, a, [&](const Partition& alpha) {
    for_each_subpartition(ml, b, [&](const Partition& beta) {
      long long c1 = lr_coefficient(alpha, beta, mu);
      if (c1 == 0) return false;
      for_each_subpartition(nl, g, [&](const Partition& gamma) {
        long long c2 = lr_coefficient(alpha, gamma, nu);
        if (c2 == 0) return false;
        total += c1 * c2 * lr_coefficient(beta, gamma, la);
        return false;
      });
      return false;
    });
    return false;
  });
  return total;
}

bool nl_positive(const Partition& mu, const Partition& nu, const Partition& la) {
  auto [a, b, g, ok] = glue_sizes(mu, nu, la);
  if (!ok) return false;
  const Partition mn = meet(mu, nu), ml = meet(mu, la), nl = meet(nu, la);
  return for_each_subpartition(mn, a, [&](const Partition& alpha) {
    return for_each_subpartition(ml, b, [&](const Partition& beta) {
      if (!lr_positive(alpha, beta, mu)) return false;
      return for_each_subpartition(nl, g, [&](const Partition& gamma) {
        return lr_positive(alpha, gamma, nu) && lr_positive(beta, gamma, la);
      });
    });
  });
}

namespace {

struct RowCase {
  long long k;    // |alpha|
  Partition w;    // meet(mu, nu)
  bool ok;
};

RowCase row_case(const Partition& mu, const Partition& nu, int p) {
  if (p < 0) throw std::invalid_argument("pieri: p < 0");
  RowCase rc{0, {}, false};
  long long k2 = mu.size() + nu.size() - p;
  if (k2 < 0 || (k2 & 1) != 0) return rc;
  rc.k = k2 / 2;
  rc.w = meet(mu, nu);
  rc.ok = rc.k <= rc.w.size();
  return rc;
}

}  // namespace

bool pieri_row_positive(const Partition& mu, const Partition& nu, int p) {
  RowCase rc = row_case(mu, nu, p);
  if (!rc.ok) return false;
  if (!is_horizontal_strip(mu, rc.w) || !is_horizontal_strip(nu, rc.w)) return false;
  // columns where mu and nu have equal positive height
  const Partition mc = conjugate(mu), nc = conjugate(nu);
  int shared = 0;
  for (int i = 0; i < std::min(mc.rows(), nc.rows()); ++i)
    shared += mc.parts()[i] == nc.parts()[i];
  return shared >= rc.w.size() - rc.k;
}

std::optional<Partition> pieri_row_witness(const Partition& mu, const Partition& nu, int p) {
  if (!pieri_row_positive(mu, nu, p)) return std::nullopt;
  RowCase rc = row_case(mu, nu, p);
  // Drop the bottom box of the rightmost |w|-k columns where mu'_i = nu'_i > 0.
  long long need = rc.w.size() - rc.k;
  std::vector<int> wc = conjugate(rc.w).parts();
  const Partition mc = conjugate(mu), nc = conjugate(nu);
  for (int i = std::min(mc.rows(), nc.rows()) - 1; i >= 0 && need > 0; --i) {
    if (mc.parts()[i] == nc.parts()[i]) {
      --wc[i];
      --need;
    }
  }
  return conjugate(Partition(std::move(wc)));
}

bool pieri_col_positive(const Partition& mu, const Partition& nu, int p) {
  return pieri_row_positive(conjugate(mu), conjugate(nu), p);
}

std::optional<Partition> pieri_col_witness(const Partition& mu, const Partition& nu, int p) {
  if (!pieri_col_positive(mu, nu, p)) return std::nullopt;
  RowCase rc = row_case(mu, nu, p);
  // Dual construction: drop the last box of the lowest rows with mu_i = nu_i > 0.
  long long need = rc.w.size() - rc.k;
  std::vector<int> w = rc.w.parts();
  for (int i = std::min(mu.rows(), nu.rows()) - 1; i >= 0 && need > 0; --i) {
    if (mu.parts()[i] == nu.parts()[i]) {
      --w[i];
      --need;
    }
  }
  return Partition(std::move(w));
}

bool pieri_row_certificate_ok(const Partition& mu, const Partition& nu, int p,
                              const Partition& alpha) {
  if (p < 0) return false;
  long long sm = mu.size() - alpha.size(), sn = nu.size() - alpha.size();
  return sm >= 0 && sn >= 0 && sm + sn == p && is_horizontal_strip(mu, alpha) &&
         is_horizontal_strip(nu, alpha);
}

bool pieri_col_certificate_ok(const Partition& mu, const Partition& nu, int p,
                              const Partition& alpha) {
  if (p < 0) return false;
  long long sm = mu.size() - alpha.size(), sn = nu.size() - alpha.size();
  return sm >= 0 && sn >= 0 && sm + sn == p && is_vertical_strip(mu, alpha) &&
         is_vertical_strip(nu, alpha);
}

bool pieri_row_positive_search(const Partition& mu, const Partition& nu, int p) {
  RowCase rc = row_case(mu, nu, p);
  if (!rc.ok) return false;
  return for_each_subpartition(rc.w, rc.k, [&](const Partition& alpha) {
    return is_horizontal_strip(mu, alpha) && is_horizontal_strip(nu, alpha);
  });
}

bool pieri_col_positive_search(const Partition& mu, const Partition& nu, int p) {
  RowCase rc = row_case(mu, nu, p);
  if (!rc.ok) return false;
  return for_each_subpartition(rc.w, rc.k, [&](const Partition& alpha) {
    return is_vertical_strip(mu, alpha) && is_vertical_strip(nu, alpha);
  });
}

}  // namespace nlhorn
