#pragma once

#include "hyperring/ideals.hpp"

namespace hyperring {

struct RingFlags {
  bool strongly_distributive = false;
  bool reduced               = false;
  bool integral_hyperdomain  = false;
  bool hyperfield            = false;
  bool regular_ring          = false;
  bool local                 = false;
  bool has_identity          = false;
  bool has_scalar_identity   = false;
};

// Integral hyperdomains and hyperfields are required to be nontrivial (n > 1),
// as fields and domains are.
RingFlags ring_flags(IdealLattice const& lattice);
RingFlags ring_flags(FiniteHyperring const& ring);

}  // namespace hyperring
