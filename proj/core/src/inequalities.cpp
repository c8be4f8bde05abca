#include "nlhorn/inequalities.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "nlhorn/errors.hpp"
#include "nlhorn/lr.hpp"
#include "nlhorn/simplex.hpp"

namespace nlhorn {

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::horn: return "horn";
    case Family::extended: return "extended";
    case Family::weyl: return "weyl";
    case Family::subset_sum: return "subset-sum";
    case Family::variant: return "variant";
  }
  return "?";
}

std::optional<Family> family_from_tag(std::string_view tag) {
  for (Family f : kAllFamilies)
    if (family_tag(f) == tag) return f;
  return std::nullopt;
}

namespace {

using Mask = unsigned;

std::vector<int> mask_elems(Mask m) {
  std::vector<int> out;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

IndexSet set_of(Mask m, int n) { return IndexSet(mask_elems(m), n); }

Partition tau_of_elems(const std::vector<int>& el) {
  const int d = static_cast<int>(el.size());
  std::vector<int> parts(d);
  for (int k = 0; k < d; ++k) parts[k] = el[d - 1 - k] - (d - k);
  return Partition(std::move(parts));
}

// tau of ([n] \ S) together with the interval [n+1, n+t].
Partition tau_ext(int n, Mask s, int t) {
  std::vector<int> el;
  for (int i = 1; i <= n; ++i)
    if (!(s >> (i - 1) & 1)) el.push_back(i);
  for (int i = 1; i <= t; ++i) el.push_back(n + i);
  return tau_of_elems(el);
}

void combos_rec(const std::vector<int>& pool, int d, std::size_t start, std::vector<int>& cur,
                std::vector<Mask>& out) {
  if (static_cast<int>(cur.size()) == d) {
    Mask m = 0;
    for (int e : cur) m |= 1u << (e - 1);
    out.push_back(m);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    combos_rec(pool, d, i + 1, cur, out);
    cur.pop_back();
  }
}

// d-subsets of pool in element-lex order, as masks.
std::vector<Mask> combos(const std::vector<int>& pool, int d) {
  std::vector<Mask> out;
  std::vector<int> cur;
  combos_rec(pool, d, 0, cur, out);
  return out;
}

struct Tables {
  int n = 0;
  std::vector<Partition> tau_p;  // indexed by mask
  std::vector<long long> tsize;
  std::vector<int> card;
  std::vector<std::vector<Mask>> by_card;
  // disjoint ordered pairs grouped as pairs[|S|][|T|]
  std::vector<std::vector<std::vector<std::pair<Mask, Mask>>>> pairs;
};

Tables make_tables(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("n out of range");
  Tables t;
  t.n = n;
  const Mask full = (1u << n) - 1;
  t.tau_p.resize(full + 1);
  t.tsize.resize(full + 1);
  t.card.resize(full + 1);
  t.by_card.assign(n + 1, {});
  for (Mask m = 0; m <= full; ++m) {
    t.tau_p[m] = tau_of_elems(mask_elems(m));
    t.tsize[m] = t.tau_p[m].size();
    t.card[m] = std::popcount(m);
  }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  for (int d = 0; d <= n; ++d) t.by_card[d] = combos(all, d);
  t.pairs.assign(n + 1, std::vector<std::vector<std::pair<Mask, Mask>>>(n + 1));
  for (int cs = 0; cs <= n; ++cs) {
    for (Mask s : t.by_card[cs]) {
      std::vector<int> rest = mask_elems(full & ~s);
      for (int ct = 0; ct + cs <= n; ++ct)
        for (Mask r : combos(rest, ct)) t.pairs[cs][ct].emplace_back(s, r);
    }
  }
  return t;
}

struct RawEmission {
  std::array<Mask, 6> tuple;    // A, Ap, B, Bp, C, Cp
  std::array<Mask, 6> witness;  // A1, A2, B1, B2, C1, C2
};

// Nested witness search in a fixed order, pruned by the size identities that
// follow from the tau product conditions. primed switches the three cross
// conditions to their box-complement form; cross_check evaluates both forms
// at every cross-condition candidate and counts disagreements.
class WitnessSearch {
 public:
  WitnessSearch(const Tables& t, bool primed, CrossCheckStats* xc)
      : t_(t), primed_(primed), xc_(xc) {}

  std::optional<std::array<Mask, 6>> run(const std::array<Mask, 6>& tuple) {
    a_ = tuple[0], ap_ = tuple[1], b_ = tuple[2], bp_ = tuple[3], c_ = tuple[4], cp_ = tuple[5];
    mA_ = std::min(t_.card[bp_], t_.card[cp_]);
    mB_ = std::min(t_.card[ap_], t_.card[cp_]);
    mC_ = std::min(t_.card[ap_], t_.card[bp_]);
    const auto& a_halves = t_.by_card[t_.card[ap_]];
    const auto& b_halves = t_.by_card[t_.card[bp_]];
    const auto& c_halves = t_.by_card[t_.card[cp_]];
    for (Mask a1 : a_halves) {
      for (Mask a2 : a_halves) {
        if (t_.tsize[a1] + t_.tsize[a2] != t_.tsize[ap_]) continue;
        if (!lr_positive(t_.tau_p[a1], t_.tau_p[a2], t_.tau_p[ap_])) continue;
        for (Mask b2 : b_halves) {
          if (!cross(c_, a1, b2, mC_)) continue;
          for (Mask b1 : b_halves) {
            if (t_.tsize[b1] + t_.tsize[b2] != t_.tsize[bp_]) continue;
            if (!lr_positive(t_.tau_p[b1], t_.tau_p[b2], t_.tau_p[bp_])) continue;
            for (Mask c2 : c_halves) {
              if (!cross(a_, b1, c2, mA_)) continue;
              for (Mask c1 : c_halves) {
                if (t_.tsize[c1] + t_.tsize[c2] != t_.tsize[cp_]) continue;
                if (!lr_positive(t_.tau_p[c1], t_.tau_p[c2], t_.tau_p[cp_])) continue;
                if (!cross(b_, c1, a2, mB_)) continue;
                return std::array<Mask, 6>{a1, a2, b1, b2, c1, c2};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  bool cross_plain(Mask x, Mask y1, Mask z2) const {
    return t_.tsize[y1] + t_.tsize[z2] == t_.tsize[x] &&
           lr_positive(t_.tau_p[y1], t_.tau_p[z2], t_.tau_p[x]);
  }
  bool cross_primed(Mask x, Mask y1, Mask z2, int m) const {
    const int n = t_.n;
    return lr_positive(tau_ext(n, y1, t_.card[y1] - m), tau_ext(n, z2, t_.card[z2] - m),
                       tau_ext(n, x, t_.card[x] - m));
  }
  // c^{tau(X)}_{tau(Y1), tau(Z2)} > 0, in the requested formulation.
  bool cross(Mask x, Mask y1, Mask z2, int m) const {
    if (primed_) return cross_primed(x, y1, z2, m);
    bool plain = cross_plain(x, y1, z2);
    if (xc_) {
      xc_->evaluated.fetch_add(1, std::memory_order_relaxed);
      if (plain != cross_primed(x, y1, z2, m))
        xc_->mismatches.fetch_add(1, std::memory_order_relaxed);
    }
    return plain;
  }

  const Tables& t_;
  bool primed_;
  CrossCheckStats* xc_;
  Mask a_ = 0, ap_ = 0, b_ = 0, bp_ = 0, c_ = 0, cp_ = 0;
  int mA_ = 0, mB_ = 0, mC_ = 0;
};

std::vector<std::int8_t> coeffs_of_masks(const std::array<Mask, 6>& tuple, int n) {
  std::vector<std::int8_t> v(3 * n, 0);
  for (int block = 0; block < 3; ++block) {
    Mask plus = tuple[2 * block], minus = tuple[2 * block + 1];
    for (int i = 0; i < n; ++i) {
      if (plus >> i & 1) v[block * n + i] = 1;
      if (minus >> i & 1) v[block * n + i] = -1;
    }
  }
  return v;
}

GTuple tuple_of_masks(const std::array<Mask, 6>& m, int n) {
  return GTuple{set_of(m[0], n), set_of(m[1], n), set_of(m[2], n),
                set_of(m[3], n), set_of(m[4], n), set_of(m[5], n)};
}

GWitness witness_of_masks(const std::array<Mask, 6>& m, int n) {
  return GWitness{set_of(m[0], n), set_of(m[1], n), set_of(m[2], n),
                  set_of(m[3], n), set_of(m[4], n), set_of(m[5], n)};
}

using Accum = std::map<std::vector<std::int8_t>, std::vector<std::pair<GTuple, GWitness>>>;

InequalitySet finalize(Accum&& acc, int n, std::string family) {
  InequalitySet out;
  out.n = n;
  out.family = std::move(family);
  for (auto& [coeffs, prov] : acc) {
    std::sort(prov.begin(), prov.end());
    prov.erase(std::unique(prov.begin(), prov.end()), prov.end());
    IneqRecord rec;
    rec.coeffs = coeffs;
    rec.witness = prov.front().second;
    for (auto& [t, w] : prov) rec.provenance.push_back(t);
    rec.trivial = std::none_of(coeffs.begin(), coeffs.end(), [](std::int8_t c) { return c < 0; });
    out.records.push_back(std::move(rec));
  }
  return out;
}

void accumulate(Accum& acc, const std::vector<std::int8_t>& coeffs, const GTuple& t,
                const GWitness& w) {
  if (std::all_of(coeffs.begin(), coeffs.end(), [](std::int8_t c) { return c == 0; })) return;
  acc[coeffs].emplace_back(t, w);
}

// Core tuple enumeration shared by the extended family and its (II)' variant.
InequalitySet enumerate_core(int n, int jobs, bool primed, CrossCheckStats* xc,
                             const char* family) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (jobs < 1) jobs = 1;
  const Tables t = make_tables(n);

  std::vector<std::pair<Mask, Mask>> a_pairs;
  for (int ca = 0; ca <= n; ++ca)
    for (int cap = 0; ca + cap <= n; ++cap)
      for (auto& pr : t.pairs[ca][cap]) a_pairs.push_back(pr);

  std::vector<std::vector<RawEmission>> found(a_pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    WitnessSearch search(t, primed, xc);
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= a_pairs.size()) return;
      auto [a, ap] = a_pairs[idx];
      const int ca = t.card[a], cap = t.card[ap];
      auto try_tuple = [&](Mask b, Mask bp, Mask c, Mask cp) {
        std::array<Mask, 6> tuple{a, ap, b, bp, c, cp};
        if (auto w = search.run(tuple)) found[idx].push_back(RawEmission{tuple, *w});
      };
      if (!primed) {
        // (II) pins all six cardinalities once |B'| is chosen.
        for (int cbp = 0; cbp <= ca; ++cbp) {
          const int ccp = ca - cbp;
          const int cb = cap + ccp, cc = cap + cbp;
          if (cb + cbp > n || cc + ccp > n) continue;
          for (auto [b, bp] : t.pairs[cb][cbp]) {
            for (auto [c, cp] : t.pairs[cc][ccp]) {
              // the six tau size identities of (III) sum to this balance
              if (t.tsize[a] + t.tsize[b] + t.tsize[c] !=
                  t.tsize[ap] + t.tsize[bp] + t.tsize[cp])
                continue;
              try_tuple(b, bp, c, cp);
            }
          }
        }
      } else {
        for (int cb = 0; cb <= n; ++cb) {
          for (int cbp = 0; cb + cbp <= n; ++cbp) {
            if (ca < cbp) continue;  // (II)' needs |A| >= |B'|
            for (auto [b, bp] : t.pairs[cb][cbp]) {
              for (int cc = 0; cc <= n; ++cc) {
                for (int ccp = 0; cc + ccp <= n; ++ccp) {
                  if (ca < std::max(cbp, ccp) || cb < std::max(cap, ccp) ||
                      cc < std::max(cap, cbp))
                    continue;
                  for (auto [c, cp] : t.pairs[cc][ccp]) try_tuple(b, bp, c, cp);
                }
              }
            }
          }
        }
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Accum acc;
  for (const auto& chunk : found)
    for (const RawEmission& e : chunk)
      accumulate(acc, coeffs_of_masks(e.tuple, n), tuple_of_masks(e.tuple, n),
                 witness_of_masks(e.witness, n));
  return finalize(std::move(acc), n, family);
}

long long tau_size_of(const IndexSet& s) {
  long long v = 0;
  const int d = s.card();
  for (int i = 0; i < d; ++i) v += s.elems()[i];
  return v - static_cast<long long>(d) * (d + 1) / 2;
}

Mask mask_of(const IndexSet& s, int n) {
  Mask m = 0;
  for (int e : s.elems()) {
    if (e < 1 || e > n) throw std::invalid_argument("index set element outside [n]");
    m |= 1u << (e - 1);
  }
  return m;
}

}  // namespace

std::vector<std::int8_t> coeff_vector(const GTuple& t, int n) {
  std::array<Mask, 6> m{mask_of(t.A, n),  mask_of(t.Ap, n), mask_of(t.B, n),
                        mask_of(t.Bp, n), mask_of(t.C, n),  mask_of(t.Cp, n)};
  return coeffs_of_masks(m, n);
}

long long evaluate(const std::vector<std::int8_t>& coeffs, const Partition& mu,
                   const Partition& nu, const Partition& la) {
  const int n = static_cast<int>(coeffs.size()) / 3;
  if (coeffs.size() != static_cast<std::size_t>(3 * n))
    throw std::invalid_argument("coefficient vector length not divisible by 3");
  const std::vector<int> pm = pad(mu, n), pn = pad(nu, n), pl = pad(la, n);
  long long v = 0;
  for (int i = 0; i < n; ++i)
    v += coeffs[i] * static_cast<long long>(pm[i]) +
         coeffs[n + i] * static_cast<long long>(pn[i]) +
         coeffs[2 * n + i] * static_cast<long long>(pl[i]);
  return v;
}

namespace {

struct BlockPerm {
  std::array<int, 3> src;  // new block b comes from old block src[b]
  bool odd;
};

constexpr std::array<BlockPerm, 6> kBlockPerms{{
    {{0, 1, 2}, false},
    {{1, 0, 2}, true},
    {{2, 1, 0}, true},
    {{0, 2, 1}, true},
    {{1, 2, 0}, false},
    {{2, 0, 1}, false},
}};

std::vector<std::int8_t> permute_coeffs(const std::vector<std::int8_t>& v, const BlockPerm& p,
                                        int n) {
  std::vector<std::int8_t> out(3 * n);
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < n; ++i) out[b * n + i] = v[p.src[b] * n + i];
  return out;
}

GTuple permute_tuple(const GTuple& t, const BlockPerm& p) {
  std::array<std::pair<IndexSet, IndexSet>, 3> pairs{
      std::pair{t.A, t.Ap}, std::pair{t.B, t.Bp}, std::pair{t.C, t.Cp}};
  std::array<std::pair<IndexSet, IndexSet>, 3> out;
  for (int b = 0; b < 3; ++b) out[b] = pairs[p.src[b]];
  return GTuple{out[0].first, out[0].second, out[1].first,
                out[1].second, out[2].first, out[2].second};
}

// Odd permutations reverse the roles inside each witness pair.
GWitness permute_witness(const GWitness& w, const BlockPerm& p) {
  std::array<std::pair<IndexSet, IndexSet>, 3> pairs{
      std::pair{w.A1, w.A2}, std::pair{w.B1, w.B2}, std::pair{w.C1, w.C2}};
  std::array<std::pair<IndexSet, IndexSet>, 3> out;
  for (int b = 0; b < 3; ++b) {
    out[b] = pairs[p.src[b]];
    if (p.odd) std::swap(out[b].first, out[b].second);
  }
  return GWitness{out[0].first, out[0].second, out[1].first,
                  out[1].second, out[2].first, out[2].second};
}

void emit_with_orbit(Accum& acc, const Embedded& e, int n) {
  for (const BlockPerm& p : kBlockPerms) {
    GTuple t = permute_tuple(e.tuple, p);
    GWitness w = permute_witness(e.witness, p);
    if (!is_valid_extended(t, w, n))
      throw std::logic_error("block permutation broke an embedded tuple");
    accumulate(acc, coeff_vector(t, n), t, w);
  }
}

}  // namespace

std::vector<std::vector<std::int8_t>> s3_images(const std::vector<std::int8_t>& coeffs, int n) {
  std::vector<std::vector<std::int8_t>> out;
  for (const BlockPerm& p : kBlockPerms) out.push_back(permute_coeffs(coeffs, p, n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int8_t> zero_extend(const std::vector<std::int8_t>& coeffs, int n, int m) {
  if (static_cast<int>(coeffs.size()) != 3 * n || m < n)
    throw std::invalid_argument("zero_extend: bad dimensions");
  std::vector<std::int8_t> out(3 * m, 0);
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < n; ++i) out[b * m + i] = coeffs[b * n + i];
  return out;
}

bool tuple_conditions_ok(const GTuple& t, int n) {
  const Mask a = mask_of(t.A, n), ap = mask_of(t.Ap, n), b = mask_of(t.B, n),
             bp = mask_of(t.Bp, n), c = mask_of(t.C, n), cp = mask_of(t.Cp, n);
  if ((a & ap) || (b & bp) || (c & cp)) return false;
  return t.A.card() == t.Bp.card() + t.Cp.card() && t.B.card() == t.Ap.card() + t.Cp.card() &&
         t.C.card() == t.Ap.card() + t.Bp.card();
}

bool witness_sizes_ok(const GTuple& t, const GWitness& w) {
  return w.A1.card() == t.Ap.card() && w.A2.card() == t.Ap.card() &&
         w.B1.card() == t.Bp.card() && w.B2.card() == t.Bp.card() &&
         w.C1.card() == t.Cp.card() && w.C2.card() == t.Cp.card();
}

bool condition_iii2(const GTuple& t, const GWitness& w) {
  return lr_positive(tau(w.A1), tau(w.A2), tau(t.Ap)) &&
         lr_positive(tau(w.B1), tau(w.B2), tau(t.Bp)) &&
         lr_positive(tau(w.C1), tau(w.C2), tau(t.Cp));
}

bool condition_iii3(const GTuple& t, const GWitness& w) {
  return lr_positive(tau(w.B1), tau(w.C2), tau(t.A)) &&
         lr_positive(tau(w.C1), tau(w.A2), tau(t.B)) &&
         lr_positive(tau(w.A1), tau(w.B2), tau(t.C));
}

bool condition_iii3_prime(const GTuple& t, const GWitness& w, int n) {
  if (!witness_sizes_ok(t, w))
    throw std::invalid_argument("condition_iii3_prime: witness sizes do not match the tuple");
  const int mA = std::min(t.Bp.card(), t.Cp.card());
  const int mB = std::min(t.Ap.card(), t.Cp.card());
  const int mC = std::min(t.Ap.card(), t.Bp.card());
  auto ext = [&](const IndexSet& s, int m) {
    return tau_ext(n, mask_of(s, n), s.card() - m);
  };
  return lr_positive(ext(w.B1, mA), ext(w.C2, mA), ext(t.A, mA)) &&
         lr_positive(ext(w.C1, mB), ext(w.A2, mB), ext(t.B, mB)) &&
         lr_positive(ext(w.A1, mC), ext(w.B2, mC), ext(t.C, mC));
}

bool is_valid_extended(const GTuple& t, const GWitness& w, int n) {
  return tuple_conditions_ok(t, n) && witness_sizes_ok(t, w) && condition_iii2(t, w) &&
         condition_iii3(t, w);
}

std::vector<HornTriple> horn_triples(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Tables t = make_tables(n);
  std::vector<HornTriple> out;
  for (int d = 1; d < n; ++d) {
    for (Mask i : t.by_card[d]) {
      for (Mask j : t.by_card[d]) {
        for (Mask k : t.by_card[d]) {
          if (t.tsize[k] != t.tsize[i] + t.tsize[j]) continue;
          if (!lr_positive(t.tau_p[i], t.tau_p[j], t.tau_p[k])) continue;
          out.push_back(HornTriple{set_of(i, n), set_of(j, n), set_of(k, n), n, d});
        }
      }
    }
  }
  return out;
}

InequalitySet enumerate_extended(int n, int jobs, CrossCheckStats* cross_check) {
  return enumerate_core(n, jobs, false, cross_check, "extended");
}

InequalitySet enumerate_variant(int n, int jobs) {
  return enumerate_core(n, jobs, true, nullptr, "variant");
}

Embedded embed_subfamily(const HornTriple& t) {
  const int n = t.n;
  const IndexSet empty({}, n);
  Embedded e{GTuple{empty, t.K, t.J, empty, t.I, empty},
             GWitness{t.I, t.J, empty, empty, empty, empty}};
  if (!is_valid_extended(e.tuple, e.witness, n))
    throw std::logic_error("horn triple failed to embed");
  return e;
}

Embedded embed_subfamily(const WeylInstance& w) {
  const int n = w.n;
  if (!(1 <= w.k && w.k <= w.i && w.i < w.j && w.j <= w.l && w.l <= n))
    throw std::invalid_argument("weyl instance indices out of order");
  const int m = std::min(w.i - w.k, w.l - w.j), M = std::max(w.i - w.k, w.l - w.j);
  if (w.p < 0 || w.p > m || M + w.p + 2 > n)
    throw std::invalid_argument("weyl instance p out of range");
  const IndexSet empty({}, n);
  auto single = [&](int x) { return IndexSet({x}, n); };
  Embedded e{GTuple{single(w.j), single(w.i), IndexSet({m - w.p + 1, M + w.p + 2}, n), empty,
                    single(w.k), single(w.l)},
             GWitness{single(w.k), single(w.i - w.k + 1), empty, empty, single(w.l - w.j + 1),
                      single(w.j)}};
  if (!is_valid_extended(e.tuple, e.witness, n))
    throw std::logic_error("weyl instance failed to embed");
  return e;
}

Embedded embed_subfamily(const SubsetSumInstance& s) {
  const int n = s.n;
  if (mask_of(s.X, n) & mask_of(s.Y, n))
    throw std::invalid_argument("subset-sum instance sets intersect");
  auto prefix = [&](int k) {
    std::vector<int> el(k);
    for (int i = 0; i < k; ++i) el[i] = i + 1;
    return IndexSet(std::move(el), n);
  };
  const IndexSet empty({}, n);
  Embedded e{GTuple{s.X, s.Y, s.Y, s.X, prefix(s.X.card() + s.Y.card()), empty},
             GWitness{prefix(s.Y.card()), s.Y, s.X, prefix(s.X.card()), empty, empty}};
  if (!is_valid_extended(e.tuple, e.witness, n))
    throw std::logic_error("subset-sum instance failed to embed");
  return e;
}

InequalitySet horn_family(int n) {
  Accum acc;
  for (const HornTriple& t : horn_triples(n)) emit_with_orbit(acc, embed_subfamily(t), n);
  return finalize(std::move(acc), n, "horn");
}

InequalitySet extended_weyl_family(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Accum acc;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int l = j; l <= n; ++l) {
          const int m = std::min(i - k, l - j), M = std::max(i - k, l - j);
          for (int p = 0; p <= m && M + p + 2 <= n; ++p)
            emit_with_orbit(acc, embed_subfamily(WeylInstance{n, k, i, j, l, p}), n);
        }
  return finalize(std::move(acc), n, "weyl");
}

InequalitySet subset_sum_family(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Tables t = make_tables(n);
  Accum acc;
  for (int cx = 0; cx <= n; ++cx)
    for (int cy = 0; cx + cy <= n; ++cy)
      for (auto [x, y] : t.pairs[cx][cy]) {
        if (!x && !y) continue;  // zero vector
        emit_with_orbit(acc, embed_subfamily(SubsetSumInstance{n, set_of(x, n), set_of(y, n)}),
                        n);
      }
  return finalize(std::move(acc), n, "subset-sum");
}

InequalitySet generate_family(Family f, int n, int jobs) {
  switch (f) {
    case Family::horn: return horn_family(n);
    case Family::extended: return enumerate_extended(n, jobs);
    case Family::weyl: return extended_weyl_family(n);
    case Family::subset_sum: return subset_sum_family(n);
    case Family::variant: return enumerate_variant(n, jobs);
  }
  throw std::invalid_argument("unknown family");
}

InequalitySet merge_sets(const std::vector<InequalitySet>& sets) {
  if (sets.empty()) throw std::invalid_argument("merge_sets: nothing to merge");
  const int n = sets.front().n;
  Accum acc;
  bool same_family = true;
  for (const InequalitySet& s : sets) {
    if (s.n != n) throw std::invalid_argument("merge_sets: mixed n");
    same_family = same_family && s.family == sets.front().family;
    for (const IneqRecord& r : s.records)
      for (const GTuple& t : r.provenance) acc[r.coeffs].emplace_back(t, r.witness);
  }
  return finalize(std::move(acc), n, same_family ? sets.front().family : "all");
}

InequalitySet filter_redundant(const InequalitySet& in) {
  if (in.n > 3) throw ScaleGuardError("redundancy filter supports n <= 3 only");
  if (in.n < 1) throw std::invalid_argument("n must be >= 1");
  const int n = in.n, dim = 3 * n;

  // dedup first so equal vectors cannot justify each other
  InequalitySet base = merge_sets({in});

  std::vector<std::vector<long long>> order_rows;
  for (int b = 0; b < 3; ++b) {
    for (int i = 0; i < n; ++i) {
      std::vector<long long> row(dim, 0);
      row[b * n + i] = 1;
      if (i + 1 < n) row[b * n + i + 1] = -1;
      order_rows.push_back(std::move(row));
    }
  }

  auto widen = [dim](const std::vector<std::int8_t>& v) {
    std::vector<long long> out(dim);
    for (int i = 0; i < dim; ++i) out[i] = v[i];
    return out;
  };

  std::vector<bool> alive(base.records.size(), true);
  for (std::size_t i = 0; i < base.records.size(); ++i) {
    std::vector<std::vector<long long>> gens = order_rows;
    for (std::size_t j = 0; j < base.records.size(); ++j)
      if (alive[j] && j != i) gens.push_back(widen(base.records[j].coeffs));
    if (in_nonneg_cone(gens, widen(base.records[i].coeffs))) alive[i] = false;
  }

  InequalitySet out;
  out.n = n;
  out.family = base.family;
  for (std::size_t i = 0; i < base.records.size(); ++i)
    if (alive[i]) out.records.push_back(base.records[i]);
  return out;
}

}  // namespace nlhorn
