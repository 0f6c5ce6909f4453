#include "hyperring/flags.hpp"

namespace hyperring {

RingFlags ring_flags(IdealLattice const& lattice) {
  FiniteHyperring const& ring = lattice.ring();
  std::size_t const      n    = ring.size();
  Element const          zero = ring.zero();

  RingFlags f;
  f.strongly_distributive = ring.strongly_distributive();
  f.has_identity          = !ring.identities().empty();
  f.has_scalar_identity   = !ring.scalar_identities().empty();
  f.local                 = lattice.is_local();

  f.reduced      = true;
  f.regular_ring = true;
  for (Element x = 0; x < n; ++x) {
    if (x != zero && is_nilpotent(ring, x)) {
      f.reduced = false;
    }
    if (!is_regular(ring, x)) {
      f.regular_ring = false;
    }
  }

  f.integral_hyperdomain = n > 1;
  for (Element x = 0; x < n && f.integral_hyperdomain; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x != zero && y != zero && ring.mul(x, y).contains(zero)) {
        f.integral_hyperdomain = false;
        break;
      }
    }
  }

  Subset nonzero = ring.carrier();
  nonzero.erase(zero);
  f.hyperfield = n > 1 && nonzero.subset_of(ring.units());
  return f;
}

RingFlags ring_flags(FiniteHyperring const& ring) {
  return ring_flags(IdealLattice(std::make_shared<FiniteHyperring const>(ring)));
}

}  // namespace hyperring
