#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace prott {

using Element = std::uint32_t;

/// Set of group elements stored as a bit vector over 0..universe-1.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet operator&(const ElementSet& other) const {
    ElementSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
    return r;
  }
  ElementSet operator|(const ElementSet& other) const {
    ElementSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | other.words_[i];
    return r;
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Lowercase hex of the integer sum(2^e), most significant digit first.
  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    std::size_t nibbles = (universe_ + 3) / 4;
    for (std::size_t k = nibbles; k-- > 0;) {
      unsigned v = 0;
      for (unsigned b = 0; b < 4; ++b) {
        std::size_t e = k * 4 + b;
        if (e < universe_ && contains(static_cast<Element>(e))) v |= 1u << b;
      }
      if (out.empty() && v == 0) continue;
      out.push_back(digits[v]);
    }
    return out.empty() ? "0" : out;
  }

  static ElementSet from_hex(const std::string& text, std::size_t universe) {
    ElementSet s(universe);
    std::size_t n = text.size();
    for (std::size_t i = 0; i < n; ++i) {
      char c = text[n - 1 - i];
      unsigned v = (c >= '0' && c <= '9') ? unsigned(c - '0') : unsigned(c - 'a' + 10);
      for (unsigned b = 0; b < 4; ++b)
        if ((v >> b) & 1u) s.insert(static_cast<Element>(i * 4 + b));
    }
    return s;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Canonical order: by size, then lexicographically on sorted member lists.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    std::size_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    // the smallest element of the symmetric difference decides
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.words_[i] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace prott
