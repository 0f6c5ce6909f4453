#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hyperring/hyperring.hpp"

namespace hyperring {

inline constexpr std::size_t kEnumerationCap = 32;
inline constexpr std::size_t kSubsetScanCap  = 12;

// A subset of a ring's carrier that has been checked to be a hyperideal.
class Hyperideal {
 public:
  // Throws PreconditionFailed when `members` is not a hyperideal of `ring`.
  Hyperideal(FiniteHyperring const& ring, Subset members);

  Subset const& members() const noexcept { return members_; }
  bool          proper() const noexcept { return proper_; }
  bool contains(Element x) const { return members_.contains(x); }

  friend bool operator==(Hyperideal const& a, Hyperideal const& b) {
    return a.members_ == b.members_;
  }

 private:
  struct Trusted {};
  Hyperideal(Subset members, bool proper, Trusted)
      : members_(members), proper_(proper) {}
  friend Hyperideal generate_hyperideal(FiniteHyperring const&, Subset const&);

  Subset members_;
  bool   proper_ = true;
};

struct IdealCheck {
  enum class Failure { none, empty, absorption, subtraction };

  bool    ok      = true;
  Failure failure = Failure::none;
  // absorption: (r, x) with r o x or x o r not inside; subtraction: (a, b).
  Element first  = 0;
  Element second = 0;

  explicit operator bool() const noexcept { return ok; }
};

IdealCheck is_hyperideal(FiniteHyperring const& ring, Subset const& s);

// Least hyperideal containing `seed` (worklist closure under subtraction and
// two-sided absorption).
Hyperideal generate_hyperideal(FiniteHyperring const& ring, Subset const& seed);

// All hyperideals, including R, sorted by size then lexicographically.
// Throws CapExceeded above `cap` elements.
std::vector<Hyperideal> enumerate_hyperideals(FiniteHyperring const& ring,
                                              std::size_t cap
                                              = kEnumerationCap);

// Brute-force reference: every subset that passes is_hyperideal.
std::vector<Subset> hyperideals_by_subset_scan(FiniteHyperring const& ring);

// All finite product sets r1 o r2 o ... o rk (k >= 1), sorted.
struct ProductClassC {
  std::vector<Subset> family;
};

ProductClassC class_c(FiniteHyperring const& ring);

struct CCheck {
  bool                  ok = true;
  std::optional<Subset> witness;  // product set meeting I but not inside it
  explicit operator bool() const noexcept { return ok; }
};

CCheck is_c_hyperideal(ProductClassC const& c, Subset const& ideal);

Hyperideal colon(FiniteHyperring const& ring, Subset const& ideal, Element by);
Hyperideal colon(FiniteHyperring const& ring, Subset const& ideal,
                 Subset const& by);

Hyperideal ideal_product(FiniteHyperring const& ring, Subset const& a,
                         Subset const& b);
Hyperideal ideal_power(FiniteHyperring const& ring, Subset const& a,
                       std::size_t k);

// x, y with x o y inside `ideal` but neither factor in it; nothing when
// `ideal` is prime or not proper.
std::optional<std::pair<Element, Element>>
prime_witness(FiniteHyperring const& ring, Subset const& ideal);
bool is_prime(FiniteHyperring const& ring, Subset const& ideal);

// {r : r^k is a subset of `ideal` for some k >= 1}
Subset d_set(FiniteHyperring const& ring, Subset const& ideal);

std::vector<Hyperideal> maximal_among(std::vector<Hyperideal> const& ideals,
                                      std::size_t                    n);

// Per-ring ideal data, computed once and then read-only: the ideal list,
// primes, maximal ideals, class C and the prime radical.
class IdealLattice {
 public:
  explicit IdealLattice(RingPtr ring, std::size_t cap = kEnumerationCap);

  FiniteHyperring const& ring() const noexcept { return *ring_; }
  RingPtr const&         ring_ptr() const noexcept { return ring_; }

  std::vector<Hyperideal> const& ideals() const noexcept { return ideals_; }
  std::vector<Hyperideal> const& proper() const noexcept { return proper_; }
  std::vector<Hyperideal> const& primes() const noexcept { return primes_; }
  std::vector<Hyperideal> const& maximal() const noexcept { return maximal_; }
  bool                 is_local() const noexcept { return maximal_.size() == 1; }
  ProductClassC const& class_c() const noexcept { return class_c_; }

  bool is_ideal(Subset const& s) const { return index_.count(s) != 0; }
  bool is_c_hyperideal(Subset const& s) const;
  bool is_prime(Subset const& s) const;
  bool is_maximal(Subset const& s) const;

  // Intersection of the primes containing `ideal`, or R when there is none.
  Subset radical(Subset const& ideal) const;
  Subset const& nil_radical() const noexcept { return nil_radical_; }

  Hyperideal const& ideal(Subset const& s) const;

 private:
  RingPtr                          ring_;
  std::vector<Hyperideal>          ideals_;
  std::vector<Hyperideal>          proper_;
  std::vector<Hyperideal>          primes_;
  std::vector<Hyperideal>          maximal_;
  ProductClassC                    class_c_;
  std::vector<bool>                c_status_;
  std::map<Subset, std::size_t>    index_;
  Subset                           nil_radical_;
};

Subset radical(IdealLattice const& lattice, Subset const& ideal);

}  // namespace hyperring
