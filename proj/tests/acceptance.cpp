// Acceptance harness: ten end-to-end checks, one PASS or FAIL line each.
// Wall-clock budgets, where a check carries one, are hard limits; a slow
// pass is a failure. Exit code is the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <initializer_list>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "nlhorn/inequalities.hpp"
#include "nlhorn/lr.hpp"
#include "nlhorn/nl.hpp"
#include "nlhorn/partition.hpp"
#include "nlhorn/verify.hpp"
#include "oracles.hpp"

using namespace nlhorn;

namespace {

using Vec = std::vector<std::int8_t>;

Vec vec(std::initializer_list<int> xs) { return Vec(xs.begin(), xs.end()); }

std::set<Vec> vectors(const InequalitySet& s) {
  std::set<Vec> out;
  for (const IneqRecord& r : s.records) out.insert(r.coeffs);
  return out;
}

std::set<Vec> orbit_closure(const std::set<Vec>& base, int n) {
  std::set<Vec> out;
  for (const Vec& v : base)
    for (const Vec& w : s3_images(v, n)) out.insert(w);
  return out;
}

// the published n=2 generators and the four published n=3 examples
const Vec kTopParts = vec({1, 0, 1, 0, -1, 0});
const Vec kStaggered = vec({1, 0, 0, 1, 0, -1});
const Vec kFullSizes = vec({1, 1, 1, 1, -1, -1});
const Vec kSkewMix = vec({1, -1, -1, 1, 1, 1});
const Vec kThreeNeg = vec({-1, 1, 1, 1, -1, 1, 1, 1, -1});
const Vec kRepeatBlocks = vec({1, -1, 1, 1, -1, 1, 1, -1, 1});
const Vec kTwoDiffs = vec({1, -1, 0, 1, -1, 0, 0, 1, 1});
const Vec kLowDiffs = vec({0, 1, -1, 0, 1, -1, 0, 1, 1});

std::vector<Partition> box_partitions(int rows, int width) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int row, int cap) -> void {
    out.emplace_back(parts);
    if (row == rows) return;
    for (int v = 1; v <= cap; ++v) {
      parts.push_back(v);
      self(self, row + 1, v);
      parts.pop_back();
    }
  };
  rec(rec, 0, width);
  return out;
}

Partition row_shape(int p) {
  return p == 0 ? Partition{} : Partition({p});
}

Partition col_shape(int p) {
  return p == 0 ? Partition{} : Partition(std::vector<int>(p, 1));
}

struct Gate {
  int failures = 0;

  // returns elapsed seconds; budget <= 0 means the check is untimed
  template <class Fn>
  double check(int idx, const char* label, double budget, Fn&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = std::string(" [") + e.what() + "]";
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
    if (budget > 0 && secs >= budget) {
      ok = false;
      note += " [over budget]";
    }
    if (!ok) ++failures;
    if (budget > 0)
      std::printf("[%2d] %s  %s (%.1fs < %.0fs)%s\n", idx, ok ? "PASS" : "FAIL",
                  label, secs, budget, note.c_str());
    else
      std::printf("[%2d] %s  %s (%.1fs)%s\n", idx, ok ? "PASS" : "FAIL", label,
                  secs, note.c_str());
    std::fflush(stdout);
    return secs;
  }
};

}  // namespace

int main() {
  const unsigned hw = std::thread::hardware_concurrency();
  const int jobs = static_cast<int>(std::clamp(hw, 1u, 8u));
  std::printf("acceptance run, %d worker threads\n", jobs);

  Gate gate;
  InequalitySet g2, g3;
  CrossCheckStats stats2, stats3;
  ScanReport rep3;

  gate.check(1, "n=2 family equals the published orbit list", 1.0, [&] {
    g2 = enumerate_extended(2, jobs, &stats2);
    return vectors(g2) ==
           orbit_closure({kTopParts, kStaggered, kFullSizes, kSkewMix}, 2);
  });

  gate.check(2, "n=3 family covers the published and embedded vectors", 120.0, [&] {
    g3 = enumerate_extended(3, jobs, &stats3);
    const auto vs = vectors(g3);
    for (const Vec& v : {kThreeNeg, kRepeatBlocks, kTwoDiffs, kLowDiffs})
      if (!vs.count(v)) return false;
    std::set<Vec> base;
    for (const InequalitySet& fam :
         {horn_family(3), extended_weyl_family(3), subset_sum_family(3)})
      base.merge(vectors(fam));
    const auto embedded = orbit_closure(base, 3);
    return std::includes(vs.begin(), vs.end(), embedded.begin(), embedded.end());
  });

  const double t3 =
      gate.check(3, "no positive triple violates the n=3 family (size <= 8)", 600.0, [&] {
        rep3 = scan_conjecture(3, 8, g3, jobs);
        return rep3.breaches.empty() && rep3.scanned > 0;
      });

  // shares the n=3 scan above; the budget below is what remains of the
  // combined 900 s allowance for both scans
  gate.check(4, "no classification holes (n=2 size <= 10, n=3 size <= 8)",
             std::max(0.1, 900.0 - t3), [&] {
               const ScanReport rep2 = scan_conjecture(2, 10, g2, jobs);
               return rep2.counterexamples.empty() && rep2.breaches.empty() &&
                      rep3.counterexamples.empty() && rep2.scanned > 0;
             });

  gate.check(5, "row and column rules match positivity with sound witnesses", 0, [&] {
    const auto ps = partitions_up_to(3, 7);
    long long bad = 0;
    for (const Partition& mu : ps)
      for (const Partition& nu : ps)
        for (int p = 0; p <= 9; ++p) {
          const bool row_pos = pieri_row_positive(mu, nu, p);
          const bool col_pos = pieri_col_positive(mu, nu, p);
          if (row_pos != nl_positive(mu, nu, row_shape(p))) ++bad;
          if (col_pos != nl_positive(mu, nu, col_shape(p))) ++bad;
          const auto rw = pieri_row_witness(mu, nu, p);
          const auto cw = pieri_col_witness(mu, nu, p);
          if (rw.has_value() != row_pos || cw.has_value() != col_pos) ++bad;
          if (rw && !pieri_row_certificate_ok(mu, nu, p, *rw)) ++bad;
          if (cw && !pieri_col_certificate_ok(mu, nu, p, *cw)) ++bad;
        }
    return bad == 0;
  });

  gate.check(6, "complement form of the cross conditions never disagrees", 0, [&] {
    CrossCheckStats stats1;
    enumerate_extended(1, jobs, &stats1);
    const long long evaluated =
        stats1.evaluated + stats2.evaluated + stats3.evaluated;
    const long long mismatches =
        stats1.mismatches + stats2.mismatches + stats3.mismatches;
    return evaluated > 0 && mismatches == 0;
  });

  gate.check(7, "tableau engine matches the recursive criterion and symmetries", 0, [&] {
    long long bad = 0;
    const Partition m21({2, 1}), l321({3, 2, 1});
    if (oracle::lr_brute(m21, m21, l321) != 2) ++bad;
    if (lr_coefficient(m21, m21, l321) != 2) ++bad;

    const auto box = box_partitions(4, 6);
    std::vector<std::vector<const Partition*>> by_size(25);
    for (const Partition& la : box) by_size[la.size()].push_back(&la);
    for (const Partition& mu : box)
      for (const Partition& nu : box) {
        const long long s = mu.size() + nu.size();
        if (s >= static_cast<long long>(by_size.size())) continue;
        for (const Partition* la : by_size[s])
          if (lr_positive(mu, nu, *la) != lr_positive_horn(mu, nu, *la)) ++bad;
      }

    const auto smalls = oracle::small_partitions(6);
    for (const Partition& la : smalls)
      for (const Partition& mu : smalls)
        for (const Partition& nu : smalls) {
          if (la.size() != mu.size() + nu.size()) continue;
          if (lr_coefficient(mu, nu, la) !=
              lr_coefficient(conjugate(mu), conjugate(nu), conjugate(la)))
            ++bad;
        }

    // complement everything inside compatible boxes and compare
    for (const Partition& la : smalls)
      for (const Partition& mu : smalls) {
        if (!contains(la, mu)) continue;
        for (const Partition& nu : smalls) {
          if (nu.size() != la.size() - mu.size()) continue;
          for (int n = std::max(la.part(1), 1); n <= la.part(1) + 1; ++n) {
            if (nu.part(1) > n) continue;
            for (int k = mu.rows(); k <= mu.rows() + 1; ++k)
              for (int l = nu.rows(); l <= nu.rows() + 1; ++l) {
                if (la.rows() > k + l) continue;
                if (lr_coefficient(mu, nu, la) !=
                    lr_coefficient(box_complement(mu, n, k),
                                   box_complement(nu, n, l),
                                   box_complement(la, n, k + l)))
                  ++bad;
              }
          }
        }
      }
    return bad == 0;
  });

  gate.check(8, "stretching scan finds no failures (n=2, size <= 5, t <= 3)", 300.0, [&] {
    const ScanReport rep = scan_saturation(2, 5, 3, jobs);
    return rep.counterexamples.empty() && rep.scanned > 0;
  });

  gate.check(9, "redundancy filter prunes exactly the published implied vectors", 120.0, [&] {
    const auto all3 = vectors(g3);
    const auto kept = vectors(filter_redundant(g3));
    const auto dropped_expected =
        orbit_closure({kRepeatBlocks, kTwoDiffs, kLowDiffs}, 3);
    for (const Vec& v : dropped_expected)
      if (!all3.count(v) || kept.count(v)) return false;
    for (const Vec& v : s3_images(kThreeNeg, 3))
      if (!kept.count(v)) return false;
    return true;
  });

  gate.check(10, "positivity count is symmetric in its three arguments", 0, [&] {
    const auto ps = partitions_up_to(3, 6);
    long long bad = 0;
    for (const Partition& mu : ps)
      for (const Partition& nu : ps)
        for (const Partition& la : ps) {
          const long long base = newell_littlewood(mu, nu, la);
          if (newell_littlewood(mu, la, nu) != base ||
              newell_littlewood(nu, mu, la) != base ||
              newell_littlewood(nu, la, mu) != base ||
              newell_littlewood(la, mu, nu) != base ||
              newell_littlewood(la, nu, mu) != base)
            ++bad;
        }
    return bad == 0;
  });

  std::printf("%d/10 checks passed\n", 10 - gate.failures);
  return gate.failures;
}
