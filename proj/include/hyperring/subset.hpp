#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperring {

using Element = std::size_t;

// Fixed-capacity bitset over a carrier {0..kCapacity-1}. Two subsets are equal
// iff they hold the same members, so table cells compare in constant time.
class Subset {
 public:
  static constexpr std::size_t kWords    = 4;
  static constexpr std::size_t kCapacity = kWords * 64;

  constexpr Subset() = default;
  Subset(std::initializer_list<Element> members) {
    for (Element e : members) {
      insert(e);
    }
  }
  template <typename Range>
  static Subset of(Range const& members) {
    Subset s;
    for (auto e : members) {
      s.insert(static_cast<Element>(e));
    }
    return s;
  }
  static Subset singleton(Element e) {
    Subset s;
    s.insert(e);
    return s;
  }
  // {0..n-1}
  static Subset full(std::size_t n) {
    Subset s;
    for (std::size_t w = 0; w < kWords; ++w) {
      if (n >= (w + 1) * 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > w * 64) {
        s.words_[w] = (std::uint64_t{1} << (n - w * 64)) - 1;
      }
    }
    return s;
  }

  bool contains(Element e) const {
    return e < kCapacity && ((words_[e >> 6] >> (e & 63)) & 1U) != 0;
  }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }
  // Least member; undefined on the empty set.
  Element front() const {
    for (std::size_t w = 0; w < kWords; ++w) {
      if (words_[w] != 0) {
        return w * 64 + static_cast<Element>(std::countr_zero(words_[w]));
      }
    }
    return kCapacity;
  }

  bool subset_of(Subset const& other) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) {
        return false;
      }
    }
    return true;
  }
  bool intersects(Subset const& other) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      if ((words_[w] & other.words_[w]) != 0) {
        return true;
      }
    }
    return false;
  }

  Subset& operator|=(Subset const& o) {
    for (std::size_t w = 0; w < kWords; ++w) {
      words_[w] |= o.words_[w];
    }
    return *this;
  }
  Subset& operator&=(Subset const& o) {
    for (std::size_t w = 0; w < kWords; ++w) {
      words_[w] &= o.words_[w];
    }
    return *this;
  }
  Subset& operator-=(Subset const& o) {
    for (std::size_t w = 0; w < kWords; ++w) {
      words_[w] &= ~o.words_[w];
    }
    return *this;
  }
  friend Subset operator|(Subset a, Subset const& b) { return a |= b; }
  friend Subset operator&(Subset a, Subset const& b) { return a &= b; }
  friend Subset operator-(Subset a, Subset const& b) { return a -= b; }

  friend bool operator==(Subset const&, Subset const&) = default;
  // Word-wise order; only used for associative containers.
  friend auto operator<=>(Subset const& a, Subset const& b) {
    for (std::size_t w = kWords; w-- > 0;) {
      if (a.words_[w] != b.words_[w]) {
        return a.words_[w] <=> b.words_[w];
      }
    }
    return std::strong_ordering::equal;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<Element>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

// Order used for every listing: by size, then lexicographically on the sorted
// member list.
bool size_lex_less(Subset const& a, Subset const& b);

// "0,2"
std::string to_string(Subset const& s);

// Parses "0,2"; whitespace around entries is allowed, duplicates are not.
Subset parse_subset(std::string const& text);

}  // namespace hyperring

template <>
struct std::hash<hyperring::Subset> {
  std::size_t operator()(hyperring::Subset const& s) const noexcept {
    return s.hash();
  }
};
