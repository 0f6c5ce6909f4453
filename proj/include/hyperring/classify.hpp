#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperring/ideals.hpp"

namespace hyperring {

using Witness = std::vector<Element>;

// Which elements a class definition quantifies over.
enum class Domain { nonunits, all };

// Read-only per-ring data shared by every classification on that ring:
// the ideal lattice plus a cache of singleton triple products x o y o z.
class ClassifyContext {
 public:
  explicit ClassifyContext(RingPtr ring, std::size_t cap = kEnumerationCap);

  FiniteHyperring const& ring() const noexcept { return lattice_.ring(); }
  RingPtr const&         ring_ptr() const noexcept { return lattice_.ring_ptr(); }
  IdealLattice const&    lattice() const noexcept { return lattice_; }
  std::vector<Element> const& nonunits() const noexcept { return nonunits_; }
  std::vector<Element> const& elements() const noexcept { return elements_; }
  std::vector<Element> const& domain(Domain d) const noexcept {
    return d == Domain::nonunits ? nonunits_ : elements_;
  }

  Subset const& triple(Element x, Element y, Element z) const {
    std::size_t const n = ring().size();
    return triples_[(x * n + y) * n + z];
  }

 private:
  IdealLattice         lattice_;
  std::vector<Element> nonunits_;
  std::vector<Element> elements_;
  std::vector<Subset>  triples_;
};

struct Verdict {
  bool    holds = true;
  Witness witness;  // lexicographically least violating tuple
  explicit operator bool() const noexcept { return holds; }
};

struct BasicClasses {
  Verdict prime;
  Verdict primary;
  bool    maximal = false;
};

// Throws NotProper when `ideal` is the whole ring.
BasicClasses basic_classes(ClassifyContext const& ctx, Subset const& ideal,
                           Domain domain = Domain::all);

Verdict one_absorbing_prime(ClassifyContext const& ctx, Subset const& ideal,
                            Domain domain = Domain::nonunits);
Verdict one_absorbing_primary(ClassifyContext const& ctx, Subset const& ideal,
                              Domain domain = Domain::nonunits);
Verdict strongly_one_absorbing_primary(ClassifyContext const& ctx,
                                       Subset const&          ideal,
                                       Domain domain = Domain::nonunits);
Verdict weakly_one_absorbing_primary(ClassifyContext const& ctx,
                                     Subset const&          ideal,
                                     Domain domain = Domain::nonunits);

struct TwoAbsorbing {
  Verdict two_absorbing;
  Verdict two_absorbing_primary;
};

TwoAbsorbing two_absorbing_classes(ClassifyContext const& ctx,
                                   Subset const&          ideal,
                                   Domain                 domain = Domain::all);

// Nonunit (x, y, z) with x o y o z = {0}, x o y not inside I, z outside the
// radical of I.
struct TripleZero {
  Element x = 0;
  Element y = 0;
  Element z = 0;
  friend bool operator==(TripleZero const&, TripleZero const&) = default;
};

bool is_one_triple_zero(ClassifyContext const& ctx, Subset const& ideal,
                        Element x, Element y, Element z);

// Throws NotWeakly when `ideal` is not weakly 1-absorbing primary.
std::vector<TripleZero> find_one_triple_zeros(ClassifyContext const& ctx,
                                              Subset const&          ideal);

struct FreeCheck {
  bool                      free = true;
  std::optional<TripleZero> witness;
  explicit operator bool() const noexcept { return free; }
};

// Throws PreconditionFailed unless I is weakly 1-absorbing primary and
// j o h o k lies in I for every j, h, k.
FreeCheck is_free_one_triple_zero(ClassifyContext const& ctx, Subset const& i,
                                  Subset const& j, Subset const& h,
                                  Subset const& k);

struct ClassificationReport {
  Subset ideal;
  bool   proper                   = true;
  bool   is_c_hyperideal          = false;
  bool   prime                    = false;
  bool   primary                  = false;
  bool   maximal                  = false;
  bool   two_absorbing            = false;
  bool   two_absorbing_primary    = false;
  bool   one_abs_prime            = false;
  bool   one_abs_primary          = false;
  bool   strongly_one_abs_primary = false;
  bool   weakly_one_abs_primary   = false;
  // True when no nonunit triple meets the weakly guard (0 not in xyz, xyz in I).
  bool   weakly_vacuous = false;
  Subset radical;
  bool   radical_prime = false;
  std::map<std::string, Witness> witnesses;
};

ClassificationReport classify(ClassifyContext const& ctx, Subset const& ideal);

nlohmann::json to_json(ClassificationReport const& report);

// prime => 1-abs prime => 2-absorbing, primary => 1-abs primary =>
// 2-abs primary, 1-abs prime => 1-abs primary, strongly => 1-abs primary =>
// weakly. Returns the name of the first broken link.
std::optional<std::string> chain_violation(ClassificationReport const& r);

}  // namespace hyperring
