#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlhorn/partition.hpp"

namespace nlhorn {

enum class Family { horn, extended, weyl, subset_sum, variant };

inline constexpr std::array<Family, 5> kAllFamilies = {
    Family::horn, Family::extended, Family::weyl, Family::subset_sum, Family::variant};

std::string_view family_tag(Family f);
std::optional<Family> family_from_tag(std::string_view tag);

/// Six-set tuple (A, A', B, B', C, C') over [n].
struct GTuple {
  IndexSet A, Ap, B, Bp, C, Cp;
  friend bool operator==(const GTuple&, const GTuple&) = default;
  friend auto operator<=>(const GTuple&, const GTuple&) = default;
};

/// Witness six-tuple (A1, A2, B1, B2, C1, C2).
struct GWitness {
  IndexSet A1, A2, B1, B2, C1, C2;
  friend bool operator==(const GWitness&, const GWitness&) = default;
  friend auto operator<=>(const GWitness&, const GWitness&) = default;
};

struct HornTriple {
  IndexSet I, J, K;
  int n = 0;
  int d = 0;
};

/// One inequality: coefficient vector of length 3n over the blocks
/// (mu_1..mu_n, nu_1..nu_n, lambda_1..lambda_n), +1 on unprimed positions and
/// -1 on primed ones, with every tuple that produced it and one witness.
struct IneqRecord {
  std::vector<std::int8_t> coeffs;
  std::vector<GTuple> provenance;  // sorted; witness belongs to provenance.front()
  GWitness witness;
  bool trivial = false;  // no negative coefficient
};

struct InequalitySet {
  int n = 0;
  std::string family;              // family tag, or "all" for merged sets
  std::vector<IneqRecord> records; // sorted by coeffs
};

std::vector<std::int8_t> coeff_vector(const GTuple& t, int n);
/// Reads coefficients against (mu, nu, lambda) padded to n parts each.
long long evaluate(const std::vector<std::int8_t>& coeffs, const Partition& mu,
                   const Partition& nu, const Partition& la);
/// The distinct images of a coefficient vector under the six block permutations.
std::vector<std::vector<std::int8_t>> s3_images(const std::vector<std::int8_t>& coeffs, int n);
/// Reindexes a length-3n vector as length-3m, m >= n, zero-filling new columns.
std::vector<std::int8_t> zero_extend(const std::vector<std::int8_t>& coeffs, int n, int m);

/// Disjointness (I) and the cardinality constraints (II).
bool tuple_conditions_ok(const GTuple& t, int n);
/// Witness cardinalities |X1| = |X2| = |X'|.
bool witness_sizes_ok(const GTuple& t, const GWitness& w);
/// The three tau products against the primed sets.
bool condition_iii2(const GTuple& t, const GWitness& w);
/// The three cross products against A, B, C.
bool condition_iii3(const GTuple& t, const GWitness& w);
/// Box-complement reformulation of condition_iii3; equivalent per-condition
/// whenever (II) and the witness sizes hold. Throws std::invalid_argument if
/// the witness sizes do not match.
bool condition_iii3_prime(const GTuple& t, const GWitness& w, int n);
/// Full membership check: (I), (II) and witness conditions (III)(1)-(3).
bool is_valid_extended(const GTuple& t, const GWitness& w, int n);

/// Counters filled by enumerate_extended when cross-checking condition_iii3
/// against condition_iii3_prime at every evaluation point.
struct CrossCheckStats {
  std::atomic<long long> evaluated{0};
  std::atomic<long long> mismatches{0};
};

/// Triples (I, J, K) of d-subsets of [n], d < n, with c^{tau K}_{tau I, tau J} > 0.
std::vector<HornTriple> horn_triples(int n);

/// The full degree-n extended family: every tuple satisfying (I)-(III), one
/// record per distinct coefficient vector, canonically ordered.
InequalitySet enumerate_extended(int n, int jobs = 1, CrossCheckStats* cross_check = nullptr);
/// Relaxed family: (II) weakened to |A| >= max(|B'|, |C'|) (cyclically) and
/// (III)(3) replaced by its box-complement form.
InequalitySet enumerate_variant(int n, int jobs = 1);
/// Subfamilies through their embeddings, closed under the block action.
InequalitySet horn_family(int n);
InequalitySet extended_weyl_family(int n);
InequalitySet subset_sum_family(int n);
InequalitySet generate_family(Family f, int n, int jobs = 1);
/// Union of sets over one n; dedups by vector and merges provenance.
InequalitySet merge_sets(const std::vector<InequalitySet>& sets);

struct WeylInstance {
  int n, k, i, j, l, p;
};
struct SubsetSumInstance {
  int n;
  IndexSet X, Y;
};
struct Embedded {
  GTuple tuple;
  GWitness witness;
};
/// Embeddings into the extended family. Each result is re-validated against
/// (I)-(III); failure throws std::logic_error.
Embedded embed_subfamily(const HornTriple& t);
Embedded embed_subfamily(const WeylInstance& w);
Embedded embed_subfamily(const SubsetSumInstance& s);

/// Drops every record implied over partition space by the remaining records
/// (exact rational cone test). Throws ScaleGuardError for n > 3.
InequalitySet filter_redundant(const InequalitySet& in);

}  // namespace nlhorn
