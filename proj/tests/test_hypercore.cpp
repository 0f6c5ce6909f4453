#include "doctest.h"

#include <fstream>
#include <sstream>

#include "hyperring/flags.hpp"
#include "hyperring/ideals.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace hyperring;
using oracle::Set;

namespace {

std::vector<RingPtr> small_catalog_rings(std::size_t max_n) {
  std::vector<RingPtr> out;
  for (auto const& e : support::catalog().rings) {
    if (e.ring->size() <= max_n) {
      out.push_back(e.ring);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("z4h fixture holds the example tables exactly") {
  RawTables const raw = load_raw(support::data("z4h.json"));
  REQUIRE(raw.n == 4);
  CHECK(raw.zero == 0);
  Subset const all{0, 1, 2, 3}, even{0, 2}, z{0};
  std::vector<std::vector<Subset>> const printed{
      {z, z, z, z}, {z, all, even, all}, {z, even, z, even}, {z, all, even, all}};
  CHECK(raw.mul == printed);
  for (long a = 0; a < 4; ++a) {
    for (long b = 0; b < 4; ++b) {
      CHECK(raw.add[a][b] == (a + b) % 4);
    }
  }
  RawTables const builtin = z4h_tables();
  CHECK(builtin.mul == raw.mul);
  CHECK(builtin.add == raw.add);
}

TEST_CASE("z4h validates and is not strongly distributive") {
  RingPtr const r = support::z4h();
  CHECK(r->size() == 4);
  CHECK_FALSE(r->strongly_distributive());
  // 1 o (1 + 1) = {0,2} is strictly inside 1 o 1 + 1 o 1 = Z4.
  CHECK(r->mul(1, r->add(1, 1)) == Subset{0, 2});
  CHECK(r->sum(r->mul(1, 1), r->mul(1, 1)) == Subset{0, 1, 2, 3});
}

TEST_CASE("trivial ring validates") {
  RingPtr const r = support::trivial();
  CHECK(r->size() == 1);
  CHECK(r->strongly_distributive());
}

TEST_CASE("corrupted z4h reports the first failing axiom with a replayable triple") {
  RawTables const raw = load_raw(support::data("z4h_corrupted.json"));
  auto const      report = check_axioms(raw);
  REQUIRE(report.has_value());
  CHECK(report->axiom == "mul-associativity");
  oracle::Ring const o(raw);
  auto const [a, b, c] = report->witness;
  Set const left  = o.prod(Set{a}, o.mul[b][c]);
  Set const right = o.prod(o.mul[a][b], Set{c});
  CHECK(left != right);
  CHECK_THROWS_AS(validate_hyperring(raw), AxiomViolation);
}

TEST_CASE("malformed tables are rejected") {
  RawTables raw = z4h_tables();
  raw.mul[1][1] = Subset{};
  CHECK_THROWS_AS(validate_hyperring(raw), MalformedTable);
  raw           = z4h_tables();
  raw.add[2].pop_back();
  CHECK_THROWS_AS(validate_hyperring(raw), MalformedTable);
  raw           = z4h_tables();
  raw.add[0][0] = 7;
  CHECK_THROWS_AS(validate_hyperring(raw), MalformedTable);
}

TEST_CASE("json parser enforces canonical cell lists") {
  auto doc = to_json(z4h_tables());
  auto bad = doc;
  bad["mul"][1][1] = nlohmann::json::array({1, 0, 2, 3});
  CHECK_THROWS_AS(raw_from_json(bad), MalformedTable);
  bad              = doc;
  bad["mul"][1][1] = nlohmann::json::array({0, 0, 1});
  CHECK_THROWS_AS(raw_from_json(bad), MalformedTable);
  bad = doc;
  bad.erase("zero");
  CHECK_THROWS_AS(raw_from_json(bad), MalformedTable);
}

TEST_CASE("canonical emission round-trips byte for byte") {
  std::ifstream     f(support::data("z4h.json"), std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string const text = ss.str();
  RingPtr const     r    = support::z4h();
  CHECK(canonical_dump(to_json(*r)) + "\n" == text);
  CHECK(canonical_dump(to_json(validate_hyperring(raw_from_json(to_json(*r)))))
        == canonical_dump(to_json(*r)));
}

TEST_CASE("set product examples") {
  RingPtr const             r = support::z4h();
  std::vector<Subset> const ops{Subset{1}, Subset{1}, Subset{2}};
  CHECK(r->product(ops) == Subset{0, 2});
  std::vector<Subset> const zs{Subset{0}, Subset{1, 3}};
  CHECK(r->product(zs) == Subset{0});
  RingPtr const             z6 = support::zn(6, {2, 3});
  std::vector<Subset> const two_three{Subset{2}, Subset{3}};
  CHECK(z6->product(two_three) == Subset{0});
  CHECK_THROWS_AS(r->product(std::span<Subset const>{}), EmptyOperand);
  std::vector<Subset> const with_empty{Subset{1}, Subset{}};
  CHECK_THROWS_AS(r->product(with_empty), EmptyOperand);
}

TEST_CASE("identities and units") {
  RingPtr const r = support::z4h();
  CHECK(r->identities() == Subset{1, 3});
  CHECK(r->units() == Subset{1, 3});
  CHECK(r->nonunits() == Subset{0, 2});
  RingPtr const z6 = support::zn(6, {2, 3});
  CHECK(z6->identities().empty());
  CHECK(z6->units().empty());
  RingPtr const nr = support::null_ring();
  CHECK(nr->identities().empty());
  CHECK(nr->units().empty());
  CHECK(nr->nonunits() == Subset{0, 1});
}

TEST_CASE("ring flags on the worked examples") {
  RingFlags const f = ring_flags(*support::z4h());
  CHECK_FALSE(f.reduced);
  CHECK_FALSE(f.integral_hyperdomain);
  CHECK_FALSE(f.hyperfield);
  CHECK(f.local);
  CHECK(f.has_identity);
  CHECK_FALSE(f.has_scalar_identity);

  RingFlags const t = ring_flags(*support::trivial());
  CHECK(t.reduced);
  CHECK_FALSE(t.local);

  RingPtr const z10 = support::zn(10, {2, 3});
  CHECK(ring_flags(*z10).has_identity);
  CHECK(z10->identities().contains(7));
  IdealLattice const lat(z10);
  oracle::Ring const o   = oracle::Ring::of(*z10);
  auto const         all = oracle::ideals(o);
  CHECK(ring_flags(*z10).local == (oracle::maximal(o, all).size() == 1));
}

TEST_CASE("element profile examples") {
  RingPtr const        r = support::z4h();
  ElementProfile const p = element_profile(*r, 2);
  CHECK(p.is_nilpotent);
  CHECK_FALSE(p.is_regular);
  CHECK_FALSE(p.is_unit);
  CHECK_THROWS_AS(is_irreducible(*r, 1), NotApplicable);
  CHECK_THROWS_AS(is_prime_element(*r, 3), NotApplicable);
  CHECK_THROWS_AS(is_irreducible(*r, 0), NotApplicable);
  ElementProfile const unit = element_profile(*r, 1);
  CHECK(unit.is_identity);
  CHECK_FALSE(unit.is_irreducible.has_value());

  // Prime element by a direct scan: x1 o x2 inside x o r forces x1 or x2
  // into some x o r'.
  RingPtr const      z10 = support::zn(10, {2, 3});
  oracle::Ring const o   = oracle::Ring::of(*z10);
  auto in_multiple = [&](std::size_t x, std::size_t v) {
    for (std::size_t s = 0; s < o.n; ++s) {
      if (o.mul[x][s].count(v)) {
        return true;
      }
    }
    return false;
  };
  bool prime = true;
  for (std::size_t x1 = 0; x1 < o.n; ++x1) {
    for (std::size_t x2 = 0; x2 < o.n; ++x2) {
      for (std::size_t s = 0; s < o.n; ++s) {
        if (oracle::includes(o.mul[5][s], o.mul[x1][x2])
            && !in_multiple(5, x1) && !in_multiple(5, x2)) {
          prime = false;
        }
      }
    }
  }
  CHECK(is_prime_element(*z10, 5) == prime);
}

TEST_CASE("property: identity and unit sets match the oracle on the catalog") {
  for (RingPtr const& r : small_catalog_rings(16)) {
    CAPTURE(r->name());
    oracle::Ring const o = oracle::Ring::of(*r);
    CHECK(oracle::to_set(r->identities()) == oracle::identities(o));
    CHECK(oracle::to_set(r->scalar_identities()) == oracle::scalar_identities(o));
    CHECK(oracle::to_set(r->units()) == oracle::units(o));
    CHECK(r->scalar_identities().subset_of(r->identities()));
  }
}

TEST_CASE("property: lifted associativity and distributivity on the catalog") {
  for (RingPtr const& r : small_catalog_rings(12)) {
    CAPTURE(r->name());
    oracle::Ring const o  = oracle::Ring::of(*r);
    bool               sd = true;
    for (std::size_t a = 0; a < o.n; ++a) {
      for (std::size_t b = 0; b < o.n; ++b) {
        for (std::size_t c = 0; c < o.n; ++c) {
          Set const left  = o.prod(Set{a}, o.mul[b][c]);
          Set const right = o.prod(o.mul[a][b], Set{c});
          REQUIRE(left == right);
          std::vector<Subset> const ops{Subset{a}, Subset{b}, Subset{c}};
          REQUIRE(oracle::to_set(r->product(ops)) == right);
          Set const l1 = o.mul[a][o.add[b][c]];
          Set const r1 = o.sum(o.mul[a][b], o.mul[a][c]);
          Set const l2 = o.mul[o.add[b][c]][a];
          Set const r2 = o.sum(o.mul[b][a], o.mul[c][a]);
          REQUIRE(oracle::includes(r1, l1));
          REQUIRE(oracle::includes(r2, l2));
          sd = sd && l1 == r1 && l2 == r2;
        }
      }
    }
    CHECK(r->strongly_distributive() == sd);
  }
}

TEST_CASE("property: flag implications on the catalog") {
  std::size_t unit_product_findings = 0;
  for (RingPtr const& r : small_catalog_rings(16)) {
    CAPTURE(r->name());
    IdealLattice const lat(r);
    RingFlags const    f = ring_flags(lat);
    if (f.hyperfield) {
      CHECK(f.local);
    }
    if (f.regular_ring) {
      CHECK(f.reduced);
    }
    if (f.has_scalar_identity) {
      CHECK(f.has_identity);
    }
    if (!r->identities().empty() && r->size() > 1) {
      CHECK_FALSE(r->is_unit(r->zero()));
    }
    // Units closed under products in the weak sense: some element of x o y
    // is a unit. Counted, not asserted.
    r->units().for_each([&](Element x) {
      r->units().for_each([&](Element y) {
        if (!r->mul(x, y).intersects(r->units())) {
          ++unit_product_findings;
        }
      });
    });
  }
  MESSAGE("unit pairs whose product misses the units: " << unit_product_findings);
}

TEST_CASE("property: set power sequences terminate in a cycle") {
  for (RingPtr const& r : small_catalog_rings(12)) {
    for (Element x = 0; x < r->size(); ++x) {
      auto const seq = power_sequence(*r, x);
      REQUIRE_FALSE(seq.empty());
      CHECK(seq.size() <= (std::size_t{1} << r->size()));
      CHECK(seq.front() == Subset{x});
      CHECK(element_profile(*r, x).is_nilpotent
            == (std::find(seq.begin(), seq.end(), Subset{r->zero()}) != seq.end()));
    }
  }
}
