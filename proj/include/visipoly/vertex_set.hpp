#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "visipoly/errors.hpp"

namespace visipoly {

/// A subset of the vertices 0..n-1 of an associated graph, stored as a
/// bitset. All binary operations require both operands to share the same
/// universe size.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : n_(universe), words_(word_count(universe), 0) {
    if (universe < 0) throw InvalidArgument("VertexSet universe must be >= 0");
  }

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
  }

  static VertexSet of(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
    s.mask_tail();
    return s;
  }

  int universe_size() const { return n_; }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool contains(int v) const {
    check_vertex(v);
    return (words_[v >> 6] >> (v & 63)) & 1ULL;
  }

  VertexSet& add(int v) {
    check_vertex(v);
    words_[v >> 6] |= 1ULL << (v & 63);
    return *this;
  }

  VertexSet& remove(int v) {
    check_vertex(v);
    words_[v >> 6] &= ~(1ULL << (v & 63));
    return *this;
  }

  void clear() {
    for (uint64_t& w : words_) w = 0;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& operator-=(const VertexSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet r(*this);
    for (uint64_t& w : r.words_) w = ~w;
    r.mask_tail();
    return r;
  }

  bool intersects(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool subset_of(const VertexSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  /// Smallest member, or -1 if empty.
  int first() const { return next(-1); }

  /// Smallest member greater than `after`, or -1 if none.
  int next(int after) const {
    int start = after + 1;
    if (start >= n_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    uint64_t w = words_[wi] & (~0ULL << (start & 63));
    while (true) {
      if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  /// "{0,2,5}"; "{}" when empty.
  std::string str() const {
    std::string out = "{";
    bool sep = false;
    for (int v = first(); v >= 0; v = next(v)) {
      if (sep) out += ',';
      out += std::to_string(v);
      sep = true;
    }
    out += '}';
    return out;
  }

  /// Canonical order: by size, then lexicographically on the ascending
  /// member sequence. Total order on sets over one universe.
  static bool canonical_less(const VertexSet& a, const VertexSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    // First differing bit; the set containing it has the smaller member there.
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) return (a.words_[i] >> std::countr_zero(diff)) & 1ULL;
    }
    return false;
  }

  bool operator<(const VertexSet& o) const { return canonical_less(*this, o); }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  static std::size_t word_count(int n) { return static_cast<std::size_t>(n + 63) >> 6; }

  void mask_tail() {
    if (n_ & 63) words_.back() &= (~0ULL >> (64 - (n_ & 63)));
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InvalidArgument("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(n_));
  }

  void check_same_universe(const VertexSet& o) const {
    if (n_ != o.n_)
      throw InvalidArgument("VertexSet universe mismatch: " + std::to_string(n_) + " vs " +
                            std::to_string(o.n_));
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace visipoly
