#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperring/errors.hpp"
#include "hyperring/subset.hpp"

namespace hyperring {

// Caps on carrier size. Full validation scans n^3 triples with set folds.
inline constexpr std::size_t kFullValidationCap = 32;
inline constexpr std::size_t kTripleScanCap     = 32;

// Unvalidated input tables.
struct RawTables {
  std::string                      name;
  std::size_t                      n    = 0;
  std::size_t                      zero = 0;
  std::vector<std::vector<long>>   add;
  std::vector<std::vector<Subset>> mul;
};

struct AxiomReport {
  std::string                axiom;
  std::array<std::size_t, 3> witness{};
  std::string                detail;
};

// A validated multiplicative hyperring on carrier {0..n-1}. Immutable; the
// identity/unit data is computed once at construction.
class FiniteHyperring {
 public:
  std::size_t        size() const noexcept { return n_; }
  std::string const& name() const noexcept { return name_; }
  Element            zero() const noexcept { return zero_; }

  Element add(Element a, Element b) const { return add_[a * n_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Subset const& mul(Element a, Element b) const { return mul_[a * n_ + b]; }

  Subset carrier() const { return Subset::full(n_); }

  // A o B, the union of a o b over a in A, b in B.
  Subset product(Subset const& a, Subset const& b) const;
  Subset product(Subset const& a, Element b) const;
  Subset product(Element a, Subset const& b) const;
  // Left fold of the lifted product; throws EmptyOperand.
  Subset product(std::span<Subset const> operands) const;
  // {x + y : x in A, y in B}
  Subset sum(Subset const& a, Subset const& b) const;
  Subset negate(Subset const& a) const;
  // r^k as a set, k >= 1.
  Subset power(Element r, std::size_t k) const;

  Subset const& identities() const noexcept { return identities_; }
  Subset const& scalar_identities() const noexcept {
    return scalar_identities_;
  }
  Subset const& units() const noexcept { return units_; }
  Subset        nonunits() const { return carrier() - units_; }
  bool          is_unit(Element x) const { return units_.contains(x); }
  bool strongly_distributive() const noexcept { return strongly_distributive_; }
  bool zero_annihilates() const noexcept { return zero_annihilates_; }
  bool commutative() const noexcept { return commutative_; }

  std::vector<std::vector<Element>> add_table() const;
  std::vector<std::vector<Subset>>  mul_table() const;

 private:
  friend FiniteHyperring build_hyperring(RawTables const&, bool, std::size_t);

  FiniteHyperring() = default;

  std::string          name_;
  std::size_t          n_    = 0;
  Element              zero_ = 0;
  std::vector<Element> add_;
  std::vector<Element> neg_;
  std::vector<Subset>  mul_;
  Subset               identities_;
  Subset               scalar_identities_;
  Subset               units_;
  bool                 strongly_distributive_ = true;
  bool                 zero_annihilates_      = true;
  bool                 commutative_           = true;
};

using RingPtr = std::shared_ptr<FiniteHyperring const>;

// Shape checks only; throws MalformedTable.
void check_shape(RawTables const& raw);

// Runs every axiom; returns the first violation or nothing. Requires a
// well-shaped table.
std::optional<AxiomReport> check_axioms(RawTables const& raw);

// Full validation: shape, additive group, associativity, distributive
// inclusions and sign compatibility. Throws MalformedTable or AxiomViolation.
FiniteHyperring validate_hyperring(RawTables const& raw);

// Validation restricted to the additive group plus the multiplicative axioms
// on a deterministic sample of triples (for carriers too large for a full
// n^3 scan).
FiniteHyperring validate_hyperring_sampled(RawTables const& raw,
                                           std::size_t      samples);

RawTables to_raw(FiniteHyperring const& ring);

struct ElementProfile {
  Element index = 0;
  bool    is_unit            = false;
  bool    is_identity        = false;
  bool    is_scalar_identity = false;
  bool    is_regular         = false;
  bool    is_nilpotent       = false;
  // Empty when the notion does not apply (zero or a unit).
  std::optional<bool> is_irreducible;
  std::optional<bool> is_prime_element;
};

ElementProfile element_profile(FiniteHyperring const& ring, Element x);

bool is_regular(FiniteHyperring const& ring, Element r);
bool is_nilpotent(FiniteHyperring const& ring, Element r);
// Throws NotApplicable for zero or a unit.
bool is_irreducible(FiniteHyperring const& ring, Element x);
bool is_prime_element(FiniteHyperring const& ring, Element x);

// Distinct set powers r^1, r^2, ... up to the first repeat.
std::vector<Subset> power_sequence(FiniteHyperring const& ring, Element r);

}  // namespace hyperring
