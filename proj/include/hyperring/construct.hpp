#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperring/ideals.hpp"

namespace hyperring {

inline constexpr std::size_t kProductCap = 16;

// Z_n with x o y = {x*a*y mod n : a in A}. Throws AxiomViolation when the
// tables fail validation.
FiniteHyperring zn_template(std::size_t n, std::vector<long> const& a);
std::string     zn_name(std::size_t n, std::vector<long> const& a);

// Carrier pairs (a, b) flattened as a * |R2| + b.
FiniteHyperring product_ring(FiniteHyperring const& r1,
                             FiniteHyperring const& r2,
                             std::size_t            cap = kProductCap);

struct Quotient {
  FiniteHyperring      ring;
  std::vector<Subset>  cosets;      // coset k, ordered by least member
  std::vector<Element> projection;  // element -> coset index
};

// R/J with (a+J) o (b+J) = {c+J : c in a o b}. Throws IllDefinedQuotient when
// the coset product depends on the representatives.
Quotient quotient_ring(FiniteHyperring const& ring, Subset const& j);

// 2x2 hypermatrices over R, |R| <= 4. (A o B)_ij = sum_t A_it o B_tj.
struct MatrixRing {
  FiniteHyperring ring;
  std::size_t     base_size = 0;
  Element         base_zero = 0;

  Element                encode(std::array<Element, 4> const& entries) const;
  std::array<Element, 4> decode(Element m) const;
  // x in the (1,1) slot, zero elsewhere.
  Element diag(Element x) const;
  // M_2(I): every entry in I.
  Subset matrices_over(Subset const& ideal) const;
};

inline constexpr std::size_t kMatrixSamples = 20000;

MatrixRing matrix_ring(FiniteHyperring const& base, std::size_t k = 2);

struct FundamentalQuotient {
  std::vector<Subset>               classes;  // ordered by least member
  std::vector<Element>              projection;
  std::vector<std::vector<Element>> class_add;
  std::vector<std::vector<Element>> class_mul;
  Element                           zero = 0;
  std::size_t                       sum_family_size = 0;

  std::size_t size() const noexcept { return classes.size(); }
  // The quotient as a hyperring with singleton products.
  FiniteHyperring as_ring(std::string const& name) const;
};

// Fundamental relation: transitive closure of co-membership in a finite sum of
// finite products. Throws IllDefinedQuotient if the induced operations are
// ill-defined or fail the ring axioms.
FundamentalQuotient gamma_star(FiniteHyperring const& ring,
                               std::size_t            cap = kSubsetScanCap);

// First failing ordinary ring axiom of single-valued tables, if any.
std::optional<std::string>
ordinary_ring_violation(std::vector<std::vector<Element>> const& add,
                        std::vector<std::vector<Element>> const& mul,
                        Element                                  zero);

struct GoodHomomorphism {
  RingPtr              source;
  RingPtr              target;
  std::vector<Element> map;
  std::string          label;

  Element operator()(Element x) const { return map[x]; }
  Subset  image(Subset const& s) const;
  Subset  preimage(Subset const& s) const;
  Subset  kernel() const;
  bool    surjective() const;
  bool    injective() const;
  // Every nonunit of the source maps to a nonunit of the target.
  bool    preserves_nonunits() const;
};

// Checks phi(x+y) = phi(x)+phi(y) and phi(x o y) = phi(x) o phi(y) as sets.
// Throws NotHomomorphism with the failing pair.
GoodHomomorphism check_good_homomorphism(RingPtr source, RingPtr target,
                                         std::vector<Element> map,
                                         std::string          label = "");

Hyperideal preimage_ideal(GoodHomomorphism const& phi, Subset const& ideal);
// Requires phi surjective and ker(phi) inside `ideal`; throws HypothesisUnmet.
Hyperideal image_ideal(GoodHomomorphism const& phi, Subset const& ideal);

// An additive subgroup closed under o, relabelled as its own hyperring.
struct SubHyperring {
  FiniteHyperring      ring;
  std::vector<Element> embedding;  // sub index -> ambient element
  Subset               carrier;    // in the ambient ring

  Subset restrict(Subset const& ambient) const;
};

SubHyperring sub_hyperring(FiniteHyperring const& ring, Subset const& carrier,
                           std::string const& name);

}  // namespace hyperring
