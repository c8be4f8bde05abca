#include "nlhorn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "nlhorn/lr.hpp"
#include "nlhorn/nl.hpp"

namespace nlhorn {

namespace {

void parts_rec(int n_parts, long long rem, int max_part, std::vector<int>& cur,
               std::vector<Partition>& out) {
  if (rem == 0) {
    out.push_back(Partition(std::vector<int>(cur)));
    return;
  }
  if (static_cast<int>(cur.size()) == n_parts) return;
  for (int v = static_cast<int>(std::min<long long>(max_part, rem)); v >= 1; --v) {
    cur.push_back(v);
    parts_rec(n_parts, rem - v, v, cur, out);
    cur.pop_back();
  }
}

// Runs fn(i) for i in [0, total) across `jobs` threads. Callers store results
// into per-index slots, so reports do not depend on scheduling.
void parallel_for(long long total, int jobs, const std::function<void(long long)>& fn,
                  const ProgressFn& progress) {
  std::atomic<long long> next{0};
  std::atomic<long long> done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (;;) {
      long long i = next.fetch_add(1);
      if (i >= total) return;
      fn(i);
      long long d = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        progress(d, total);
      }
    }
  };
  if (jobs <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < jobs && i < total; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

Partition scale(const Partition& p, int t) {
  std::vector<int> parts = p.parts();
  for (int& v : parts) v *= t;
  return Partition(std::move(parts));
}

struct Slot {
  long long scanned = 0, nl_pos = 0, compatible = 0;
  std::vector<TripleVerdict> counterexamples, breaches;
};

ScanReport merge_slots(std::vector<Slot>&& slots, ScanReport base) {
  for (Slot& s : slots) {
    base.scanned += s.scanned;
    base.nl_positive_count += s.nl_pos;
    base.compatible += s.compatible;
    for (auto& v : s.counterexamples) base.counterexamples.push_back(std::move(v));
    for (auto& v : s.breaches) base.breaches.push_back(std::move(v));
  }
  return base;
}

}  // namespace

std::vector<Partition> partitions_up_to(int n_parts, long long max_size) {
  if (n_parts < 0 || max_size < 0) throw std::invalid_argument("negative scan bounds");
  std::vector<Partition> out;
  std::vector<int> cur;
  for (long long s = 0; s <= max_size; ++s)
    parts_rec(n_parts, s, static_cast<int>(s), cur, out);
  return out;
}

TripleVerdict check_triple(const Partition& mu, const Partition& nu, const Partition& la,
                           const InequalitySet& set) {
  if (mu.rows() > set.n || nu.rows() > set.n || la.rows() > set.n)
    throw std::invalid_argument("triple has more parts than the inequality set's n");
  TripleVerdict v{mu, nu, la};
  v.parity = parity_ok(mu, nu, la);
  v.nl_pos = nl_positive(mu, nu, la);
  for (std::size_t i = 0; i < set.records.size(); ++i)
    if (evaluate(set.records[i].coeffs, mu, nu, la) < 0)
      v.violated.push_back(static_cast<int>(i));
  return v;
}

ScanReport scan_conjecture(int n, long long max_size, const InequalitySet& set, int jobs,
                           const ProgressFn& progress) {
  if (set.n != n) throw std::invalid_argument("inequality set generated for a different n");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Partition> parts = partitions_up_to(n, max_size);
  const std::size_t np = parts.size();

  // flattened coefficient matrix, padded part arrays
  const std::size_t nrec = set.records.size();
  std::vector<std::int8_t> coeffs(nrec * 3 * n);
  for (std::size_t r = 0; r < nrec; ++r)
    std::copy(set.records[r].coeffs.begin(), set.records[r].coeffs.end(),
              coeffs.begin() + r * 3 * n);
  std::vector<std::vector<int>> padded(np);
  std::vector<long long> sizes(np);
  for (std::size_t i = 0; i < np; ++i) {
    padded[i] = pad(parts[i], n);
    sizes[i] = parts[i].size();
  }

  auto eval = [&](std::size_t r, const int* pm, const int* pn, const int* pl) {
    const std::int8_t* c = coeffs.data() + r * 3 * n;
    long long v = 0;
    for (int i = 0; i < n; ++i)
      v += static_cast<long long>(c[i]) * pm[i] + static_cast<long long>(c[n + i]) * pn[i] +
           static_cast<long long>(c[2 * n + i]) * pl[i];
    return v;
  };

  std::vector<Slot> slots(np);
  parallel_for(
      static_cast<long long>(np), jobs,
      [&](long long mi) {
        Slot& slot = slots[mi];
        const int* pm = padded[mi].data();
        for (std::size_t ni = 0; ni < np; ++ni) {
          const int* pn = padded[ni].data();
          for (std::size_t li = 0; li < np; ++li) {
            ++slot.scanned;
            if (((sizes[mi] + sizes[ni] + sizes[li]) & 1) != 0) continue;
            const int* pl = padded[li].data();
            const bool nl = nl_positive(parts[mi], parts[ni], parts[li]);
            if (nl) ++slot.nl_pos;
            std::vector<int> violated;
            for (std::size_t r = 0; r < nrec; ++r) {
              if (eval(r, pm, pn, pl) < 0) {
                violated.push_back(static_cast<int>(r));
                if (!nl) break;  // one violation settles a non-positive triple
              }
            }
            if (violated.empty()) {
              ++slot.compatible;
              if (!nl) {
                TripleVerdict v{parts[mi], parts[ni], parts[li], true, false, {}, 0};
                slot.counterexamples.push_back(std::move(v));
              }
            } else if (nl) {
              TripleVerdict v{parts[mi], parts[ni], parts[li], true, true, std::move(violated), 0};
              slot.breaches.push_back(std::move(v));
            }
          }
        }
      },
      progress);

  ScanReport report;
  report.kind = "conjecture";
  report.n = n;
  report.max_size = max_size;
  report.family = set.family;
  report = merge_slots(std::move(slots), std::move(report));
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

ScanReport scan_saturation(int n, long long max_size, int t_max, int jobs,
                           const ProgressFn& progress) {
  if (t_max < 2) throw std::invalid_argument("t_max must be >= 2");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Partition> parts = partitions_up_to(n, max_size);
  const std::size_t np = parts.size();

  std::vector<Slot> slots(np);
  parallel_for(
      static_cast<long long>(np), jobs,
      [&](long long mi) {
        Slot& slot = slots[mi];
        for (std::size_t ni = 0; ni < np; ++ni) {
          for (std::size_t li = 0; li < np; ++li) {
            ++slot.scanned;
            if (!parity_ok(parts[mi], parts[ni], parts[li])) continue;
            ++slot.compatible;
            if (nl_positive(parts[mi], parts[ni], parts[li])) {
              ++slot.nl_pos;
              continue;  // scaling preserves positivity
            }
            for (int t = 2; t <= t_max; ++t) {
              if (nl_positive(scale(parts[mi], t), scale(parts[ni], t), scale(parts[li], t))) {
                TripleVerdict v{parts[mi], parts[ni], parts[li], true, false, {}, t};
                slot.counterexamples.push_back(std::move(v));
                break;
              }
            }
          }
        }
      },
      progress);

  ScanReport report;
  report.kind = "saturation";
  report.n = n;
  report.max_size = max_size;
  report.family = "-";
  report.t_max = t_max;
  report = merge_slots(std::move(slots), std::move(report));
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

ScanReport scan_rowcol(int n, long long max_size, int jobs, const ProgressFn& progress) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Partition> parts = partitions_up_to(n, max_size);
  const std::size_t np = parts.size();

  std::vector<Slot> slots(np);
  parallel_for(
      static_cast<long long>(np), jobs,
      [&](long long mi) {
        Slot& slot = slots[mi];
        const Partition& mu = parts[mi];
        auto compare = [&](const Partition& nu, const Partition& la, bool expd,
                           bool cert_ok) {
          ++slot.scanned;
          // la sits in each block position in turn; N is block-symmetric
          const bool got1 = nl_positive(mu, nu, la);
          const bool got2 = nl_positive(la, mu, nu);
          const bool got3 = nl_positive(mu, la, nu);
          if (got1) ++slot.nl_pos;
          if (expd == got1 && expd == got2 && expd == got3 && (!expd || cert_ok)) {
            ++slot.compatible;
            return;
          }
          TripleVerdict v{mu, nu, la, parity_ok(mu, nu, la), got1, {}, 0};
          slot.counterexamples.push_back(std::move(v));
        };
        for (std::size_t ni = 0; ni < np; ++ni) {
          const Partition& nu = parts[ni];
          for (int p = 0; p <= max_size; ++p) {
            const bool row = pieri_row_positive(mu, nu, p);
            bool row_cert = false;
            if (row) {
              auto wit = pieri_row_witness(mu, nu, p);
              row_cert = wit && pieri_row_certificate_ok(mu, nu, p, *wit);
            }
            compare(nu, p ? Partition({p}) : Partition{}, row, row_cert);
            if (p <= n) {
              const bool col = pieri_col_positive(mu, nu, p);
              bool col_cert = false;
              if (col) {
                auto wit = pieri_col_witness(mu, nu, p);
                col_cert = wit && pieri_col_certificate_ok(mu, nu, p, *wit);
              }
              compare(nu, Partition(std::vector<int>(p, 1)), col, col_cert);
            }
          }
        }
      },
      progress);

  ScanReport report;
  report.kind = "rowcol";
  report.n = n;
  report.max_size = max_size;
  report.family = "-";
  report = merge_slots(std::move(slots), std::move(report));
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace nlhorn
