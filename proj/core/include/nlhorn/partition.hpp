#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace nlhorn {

/// Integer partition with weakly decreasing positive parts. Trailing zeros are
/// trimmed on construction, so two representations of the same partition
/// compare equal and parts beyond the length read as 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are weakly decreasing and >= 0.
  explicit Partition(std::vector<int> parts);

  /// Parses "3,1,1". "" and "0" denote the empty partition. Throws ParseError.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  /// 1-based part access; lambda_i = 0 for i past the length.
  int part(int i) const;
  /// Number of nonzero parts.
  int rows() const { return static_cast<int>(parts_.size()); }
  /// |lambda|, the number of boxes.
  long long size() const;
  bool empty() const { return parts_.empty(); }
  /// "3,1,1"; the empty partition prints as "0".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);
/// Entrywise minimum.
Partition meet(const Partition& a, const Partition& b);
/// inner_i <= outer_i for all i.
bool contains(const Partition& outer, const Partition& inner);
/// outer/inner has at most one box per column: inner ⊆ outer and outer_{i+1} <= inner_i.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);
/// outer/inner has at most one box per row: inner ⊆ outer and outer_i <= inner_i + 1.
bool is_vertical_strip(const Partition& outer, const Partition& inner);
/// Complement inside a height x width box, read upside down. Throws
/// std::invalid_argument unless theta fits in the box.
Partition box_complement(const Partition& theta, int width, int height);
/// First n entries of the part sequence. Throws if the partition has more rows.
std::vector<int> pad(const Partition& p, int n);

/// Subset of [ambient] = {1..ambient}, kept sorted increasing.
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws std::invalid_argument unless elems are strictly increasing in [1, ambient].
  IndexSet(std::vector<int> elems, int ambient);

  /// Parses "{1,3,4}" or "{}". ambient < 0 means "use the largest element".
  static IndexSet parse(std::string_view text, int ambient = -1);

  const std::vector<int>& elems() const { return elems_; }
  int ambient() const { return ambient_; }
  int card() const { return static_cast<int>(elems_.size()); }
  bool contains(int i) const;
  /// [ambient] minus this set, same ambient.
  IndexSet complement() const;
  /// This set together with {ambient+1, ..., ambient+t}; ambient grows by t.
  IndexSet extended(int t) const;
  std::string str() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> elems_;
  int ambient_ = 0;
};

/// tau(I) = (i_d - d, ..., i_2 - 2, i_1 - 1) for I = {i_1 < ... < i_d}.
Partition tau(const IndexSet& s);

}  // namespace nlhorn
