#include "nlhorn/lr.hpp"

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace nlhorn {

namespace {

// Triple key: mu parts, -1, nu parts, -1, lambda parts. Callers that want the
// mu/nu symmetry folded sort the two blocks before encoding.
std::vector<int> encode(const Partition& mu, const Partition& nu, const Partition& la) {
  std::vector<int> key;
  key.reserve(mu.rows() + nu.rows() + la.rows() + 2);
  key.insert(key.end(), mu.parts().begin(), mu.parts().end());
  key.push_back(-1);
  key.insert(key.end(), nu.parts().begin(), nu.parts().end());
  key.push_back(-1);
  key.insert(key.end(), la.parts().begin(), la.parts().end());
  return key;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Hash map sharded by key hash so concurrent scans do not serialize on one lock.
template <class V>
class StripedCache {
 public:
  std::optional<V> get(const std::vector<int>& key) const {
    const Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mutex);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::vector<int>& key, V value) {
    Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mutex);
    s.map.emplace(key, value);
  }
  void clear() {
    for (Shard& s : shards_) {
      std::lock_guard<std::mutex> lock(s.mutex);
      s.map.clear();
    }
  }

 private:
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::vector<int>, V, VecHash> map;
  };
  static constexpr std::size_t kShards = 64;
  Shard& shard(const std::vector<int>& key) { return shards_[VecHash{}(key) % kShards]; }
  const Shard& shard(const std::vector<int>& key) const {
    return shards_[VecHash{}(key) % kShards];
  }
  std::array<Shard, kShards> shards_;
};

StripedCache<long long> g_count_cache;
StripedCache<char> g_pos_cache;
StripedCache<char> g_horn_cache;

// Backtracking count of lattice skew tableaux of shape la/mu and content nu.
// Cells are visited in reverse reading order (rows top to bottom, right to
// left within a row) so the lattice prefix condition can be enforced as each
// cell is placed. first_only stops at the first completed tableau.
long long count_tableaux(const Partition& mu, const Partition& nu, const Partition& la,
                         bool first_only) {
  if (la.size() != mu.size() + nu.size()) return 0;
  if (!contains(la, mu) || !contains(la, nu)) return 0;

  const int rows = la.rows();
  const std::vector<int> mup = pad(mu, rows);
  struct Cell {
    int row;
    int right;  // index of the cell to the right, -1 at row end
    int up;     // index of the cell above in the skew shape, -1 if absent
  };
  std::vector<Cell> cells;
  std::vector<int> row_start(rows + 1, 0);
  for (int r = 0; r < rows; ++r) {
    row_start[r] = static_cast<int>(cells.size());
    for (int c = la.parts()[r] - 1; c >= mup[r]; --c) {
      Cell cell{r, -1, -1};
      if (c + 1 < la.parts()[r]) cell.right = static_cast<int>(cells.size()) - 1;
      if (r > 0 && c >= mup[r - 1] && c < la.parts()[r - 1])
        cell.up = row_start[r - 1] + (la.parts()[r - 1] - 1 - c);
      cells.push_back(cell);
    }
  }
  row_start[rows] = static_cast<int>(cells.size());
  if (cells.empty()) return nu.empty() ? 1 : 0;

  const int values = nu.rows();
  std::vector<int> val(cells.size(), 0);
  std::vector<int> cnt(values + 2, 0);
  long long total = 0;

  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == cells.size()) {
      ++total;
      return first_only;
    }
    const Cell& cell = cells[k];
    // In a lattice filling the entries of row r are at most r+1.
    int hi = std::min(values, cell.row + 1);
    if (cell.right >= 0) hi = std::min(hi, val[cell.right]);
    int lo = cell.up >= 0 ? val[cell.up] + 1 : 1;
    for (int v = lo; v <= hi; ++v) {
      if (cnt[v] >= nu.parts()[v - 1]) continue;
      if (v > 1 && cnt[v] >= cnt[v - 1]) continue;
      val[k] = v;
      ++cnt[v];
      bool done = self(self, k + 1);
      --cnt[v];
      if (done) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return total;
}

long long subset_sum_of(const Partition& p, const std::vector<int>& subset) {
  long long s = 0;
  for (int i : subset) s += p.part(i);
  return s;
}

void combinations_rec(int n, int d, int start, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    combinations_rec(n, d, v + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> combinations(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  combinations_rec(n, d, 1, cur, out);
  return out;
}

Partition tau_of(const std::vector<int>& subset) {
  int d = static_cast<int>(subset.size());
  std::vector<int> parts(d);
  for (int k = 0; k < d; ++k) parts[k] = subset[d - 1 - k] - (d - k);
  return Partition(std::move(parts));
}

// Horn's recursive criterion, sizes already known to match. Positivity of the
// tau triples that index the inequalities is decided by this same routine, so
// the whole recursion never consults the tableau engine.
bool horn_recursive(const Partition& mu, const Partition& nu, const Partition& la) {
  const int n = std::max({mu.rows(), nu.rows(), la.rows(), 1});
  if (n == 1) return true;  // sizes match and there is nothing to cut

  const Partition& a = std::min(mu, nu);
  const Partition& b = std::max(mu, nu);
  std::vector<int> key = encode(a, b, la);
  if (auto hit = g_horn_cache.get(key)) return *hit;

  bool ok = true;
  for (int d = 1; d < n && ok; ++d) {
    const auto subs = combinations(n, d);
    for (const auto& bigI : subs) {
      const Partition ti = tau_of(bigI);
      for (const auto& bigJ : subs) {
        const Partition tj = tau_of(bigJ);
        for (const auto& bigK : subs) {
          const Partition tk = tau_of(bigK);
          if (tk.size() != ti.size() + tj.size()) continue;
          if (!horn_recursive(ti, tj, tk)) continue;
          if (subset_sum_of(la, bigK) > subset_sum_of(mu, bigI) + subset_sum_of(nu, bigJ)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
  }
  g_horn_cache.put(key, ok);
  return ok;
}

}  // namespace

long long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& la) {
  if (la.size() != mu.size() + nu.size()) return 0;
  const Partition& a = std::min(mu, nu);
  const Partition& b = std::max(mu, nu);
  std::vector<int> key = encode(a, b, la);
  if (auto hit = g_count_cache.get(key)) return *hit;
  long long value = count_tableaux(a, b, la, false);
  g_count_cache.put(key, value);
  return value;
}

bool lr_positive(const Partition& mu, const Partition& nu, const Partition& la) {
  if (la.size() != mu.size() + nu.size()) return false;
  const Partition& a = std::min(mu, nu);
  const Partition& b = std::max(mu, nu);
  std::vector<int> key = encode(a, b, la);
  if (auto hit = g_pos_cache.get(key)) return *hit;
  bool value = count_tableaux(a, b, la, true) > 0;
  g_pos_cache.put(key, value);
  return value;
}

bool lr_positive_horn(const Partition& mu, const Partition& nu, const Partition& la) {
  if (la.size() != mu.size() + nu.size())
    throw std::invalid_argument("lr_positive_horn: |lambda| != |mu| + |nu|");
  return horn_recursive(mu, nu, la);
}

void lr_clear_caches() {
  g_count_cache.clear();
  g_pos_cache.clear();
  g_horn_cache.clear();
}

}  // namespace nlhorn
