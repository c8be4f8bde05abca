#include "nlhorn/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "nlhorn/errors.hpp"

namespace nlhorn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition part < 0");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts not weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("part index is 1-based");
  return i <= rows() ? parts_[i - 1] : 0;
}

long long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> vals;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(std::string("bad ") + what + ": '" + std::string(text) + "'");
    vals.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size())
      throw ParseError(std::string("trailing comma in ") + what + ": '" + std::string(text) + "'");
  }
  return vals;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "0") return Partition{};
  try {
    return Partition(parse_int_list(text, "partition"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> out(p.parts()[0]);
  for (int j = 0; j < p.parts()[0]; ++j) {
    int cnt = 0;
    for (int v : p.parts()) cnt += v > j;
    out[j] = cnt;
  }
  return Partition(std::move(out));
}

Partition meet(const Partition& a, const Partition& b) {
  std::size_t k = std::min(a.parts().size(), b.parts().size());
  std::vector<int> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = std::min(a.parts()[i], b.parts()[i]);
  return Partition(std::move(out));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.rows() > outer.rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.parts()[i] > outer.parts()[i]) return false;
  return true;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (int i = 1; i <= inner.rows(); ++i)
    if (outer.part(i + 1) > inner.part(i)) return false;
  // rows of outer past inner's length must vanish except the first
  return outer.rows() <= inner.rows() + 1;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (int i = 1; i <= outer.rows(); ++i)
    if (outer.part(i) > inner.part(i) + 1) return false;
  return true;
}

Partition box_complement(const Partition& theta, int width, int height) {
  if (width < 0 || height < 0) throw std::invalid_argument("box dimensions < 0");
  if (theta.rows() > height || (theta.rows() > 0 && theta.parts()[0] > width))
    throw std::invalid_argument("partition does not fit in the box");
  std::vector<int> out(height);
  for (int i = 0; i < height; ++i) out[i] = width - theta.part(height - i);
  return Partition(std::move(out));
}

std::vector<int> pad(const Partition& p, int n) {
  if (p.rows() > n) throw std::invalid_argument("partition has more than n parts");
  std::vector<int> out(n, 0);
  std::copy(p.parts().begin(), p.parts().end(), out.begin());
  return out;
}

IndexSet::IndexSet(std::vector<int> elems, int ambient)
    : elems_(std::move(elems)), ambient_(ambient) {
  if (ambient_ < 0) throw std::invalid_argument("ambient < 0");
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1 || elems_[i] > ambient_)
      throw std::invalid_argument("index set element outside [ambient]");
    if (i > 0 && elems_[i] <= elems_[i - 1])
      throw std::invalid_argument("index set not strictly increasing");
  }
}

IndexSet IndexSet::parse(std::string_view text, int ambient) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ParseError("index set must look like {1,3,4}: '" + std::string(text) + "'");
  std::string_view inner = text.substr(1, text.size() - 2);
  std::vector<int> elems;
  if (!inner.empty()) elems = parse_int_list(inner, "index set");
  int amb = ambient >= 0 ? ambient : (elems.empty() ? 0 : elems.back());
  try {
    return IndexSet(std::move(elems), amb);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

bool IndexSet::contains(int i) const {
  return std::binary_search(elems_.begin(), elems_.end(), i);
}

IndexSet IndexSet::complement() const {
  std::vector<int> out;
  out.reserve(ambient_ - card());
  for (int i = 1; i <= ambient_; ++i)
    if (!contains(i)) out.push_back(i);
  return IndexSet(std::move(out), ambient_);
}

IndexSet IndexSet::extended(int t) const {
  if (t < 0) throw std::invalid_argument("extension length < 0");
  std::vector<int> out = elems_;
  for (int i = 1; i <= t; ++i) out.push_back(ambient_ + i);
  return IndexSet(std::move(out), ambient_ + t);
}

std::string IndexSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i]);
  }
  return out + "}";
}

Partition tau(const IndexSet& s) {
  int d = s.card();
  std::vector<int> out(d);
  for (int k = 0; k < d; ++k) out[k] = s.elems()[d - 1 - k] - (d - k);
  return Partition(std::move(out));
}

}  // namespace nlhorn
