#include "doctest.h"

#include "hyperring/classify.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace hyperring;
using oracle::Set;

namespace {

std::vector<RingPtr> rings_up_to(std::size_t n) {
  std::vector<RingPtr> out;
  for (auto const& e : support::catalog().rings) {
    if (e.ring->size() <= n) {
      out.push_back(e.ring);
    }
  }
  return out;
}

// Reference verdicts computed directly from the tables.
struct Expected {
  bool prime, primary, two_abs, two_abs_primary;
  bool one_abs_prime, one_abs_primary, strongly, weakly;
};

Expected expected(oracle::Ring const& o, std::vector<Set> const& all,
                  Set const& i) {
  Set const rad = oracle::radical(o, all, i);
  Set const nil = oracle::radical(o, all, {o.zero});
  Expected  e{true, true, true, true, true, true, true, true};
  for (std::size_t x = 0; x < o.n; ++x) {
    for (std::size_t y = 0; y < o.n; ++y) {
      if (!oracle::includes(i, o.mul[x][y]) || i.count(x)) {
        continue;
      }
      e.prime   = e.prime && i.count(y);
      e.primary = e.primary && rad.count(y);
    }
  }
  for (std::size_t x = 0; x < o.n; ++x) {
    for (std::size_t y = 0; y < o.n; ++y) {
      for (std::size_t z = 0; z < o.n; ++z) {
        if (!oracle::includes(i, o.prod3(x, y, z))
            || oracle::includes(i, o.mul[x][y])) {
          continue;
        }
        bool const xz_i = oracle::includes(i, o.mul[x][z]);
        bool const yz_i = oracle::includes(i, o.mul[y][z]);
        bool const xz_r = oracle::includes(rad, o.mul[x][z]);
        bool const yz_r = oracle::includes(rad, o.mul[y][z]);
        e.two_abs         = e.two_abs && (xz_i || yz_i);
        e.two_abs_primary = e.two_abs_primary && (xz_r || yz_r);
      }
    }
  }
  e.one_abs_prime   = oracle::absorbing(o, i, [&](auto z) { return i.count(z) > 0; }, false);
  e.one_abs_primary = oracle::absorbing(o, i, [&](auto z) { return rad.count(z) > 0; }, false);
  e.strongly        = oracle::absorbing(o, i, [&](auto z) { return nil.count(z) > 0; }, false);
  e.weakly          = oracle::absorbing(o, i, [&](auto z) { return rad.count(z) > 0; }, true);
  return e;
}

std::vector<TripleZero> expected_triple_zeros(oracle::Ring const& o,
                                              std::vector<Set> const& all,
                                              Set const& i) {
  Set const               rad = oracle::radical(o, all, i);
  auto const              nu  = oracle::nonunits(o);
  std::vector<TripleZero> out;
  for (auto x : nu) {
    for (auto y : nu) {
      for (auto z : nu) {
        if (o.prod3(x, y, z) == Set{o.zero} && !oracle::includes(i, o.mul[x][y])
            && !rad.count(z)) {
          out.push_back(TripleZero{x, y, z});
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("basic classes on Z4H") {
  ClassifyContext const ctx(support::z4h());
  auto const            even = basic_classes(ctx, Subset{0, 2});
  CHECK(even.prime);
  CHECK(even.primary);
  CHECK(even.maximal);

  auto const zero = basic_classes(ctx, Subset{0});
  CHECK_FALSE(zero.prime);
  CHECK(zero.prime.witness == Witness{2, 2});
  CHECK(zero.primary);
  CHECK_FALSE(zero.maximal);

  CHECK_THROWS_AS(basic_classes(ctx, ctx.ring().carrier()), NotProper);
  CHECK_THROWS_AS(one_absorbing_prime(ctx, ctx.ring().carrier()), NotProper);
  CHECK_THROWS_AS(two_absorbing_classes(ctx, ctx.ring().carrier()), NotProper);
}

TEST_CASE("absorbing classes on Z4H") {
  ClassifyContext const ctx(support::z4h());
  Subset const          even{0, 2};
  CHECK(one_absorbing_prime(ctx, even));
  CHECK(one_absorbing_primary(ctx, even));
  CHECK(strongly_one_absorbing_primary(ctx, even));
  auto const two = two_absorbing_classes(ctx, even);
  CHECK(two.two_absorbing);
  CHECK(two.two_absorbing_primary);

  ClassificationReport const zero = classify(ctx, Subset{0});
  CHECK(zero.strongly_one_abs_primary);
  CHECK(zero.one_abs_primary);
  CHECK(zero.two_absorbing);
  CHECK(zero.two_absorbing_primary);
  CHECK_FALSE(chain_violation(zero).has_value());

  // Every proper hyperideal of the local ring Z4H is weakly.
  for (Hyperideal const& h : ctx.lattice().proper()) {
    CHECK(weakly_one_absorbing_primary(ctx, h.members()));
  }
  CHECK(zero.weakly_one_abs_primary);
  CHECK(zero.weakly_vacuous);
}

TEST_CASE("surrogate verdicts on Z10A and Z6A") {
  ClassifyContext const z10(support::zn(10, {2, 3}));
  std::vector<Element>  nu(z10.nonunits());
  CHECK(nu == std::vector<Element>{0, 2, 4, 5, 6, 8});
  CHECK(one_absorbing_prime(z10, Subset{0, 5}));

  ClassifyContext const z6(support::zn(6, {2, 3}));
  CHECK(z6.nonunits().size() == 6);
  ClassificationReport const r = classify(z6, Subset{0, 3});
  CHECK(r.one_abs_primary);
  CHECK(r.prime);
  CHECK_FALSE(r.strongly_one_abs_primary);
  CHECK(r.witnesses.at("strongly_one_abs_primary") == Witness{1, 1, 3});
}

TEST_CASE("weakly surrogate on Z30 with A = {2,4}") {
  ClassifyContext const ctx(support::zn(30, {2, 4}));
  Subset const          i = generate_hyperideal(ctx.ring(), Subset{15}).members();
  CHECK(i == Subset{0, 15});
  ClassificationReport const r = classify(ctx, i);
  CHECK(r.weakly_one_abs_primary);
  CHECK(r.weakly_vacuous);
  CHECK_FALSE(r.one_abs_primary);
  CHECK(r.witnesses.at("one_abs_primary") == Witness{1, 3, 5});
  // Direct scan; the subset oracle is out of reach at n = 30.
  oracle::Ring const      o   = oracle::Ring::of(ctx.ring());
  Set const               rad = oracle::to_set(r.radical);
  std::vector<TripleZero> expect;
  for (std::size_t x = 0; x < o.n; ++x) {
    for (std::size_t y = 0; y < o.n; ++y) {
      for (std::size_t z = 0; z < o.n; ++z) {
        if (o.prod3(x, y, z) == Set{0} && !oracle::includes({0, 15}, o.mul[x][y])
            && !rad.count(z)) {
          expect.push_back(TripleZero{x, y, z});
        }
      }
    }
  }
  CHECK(find_one_triple_zeros(ctx, i) == expect);
}

TEST_CASE("product rings have no strongly 1-absorbing primary hyperideal") {
  auto const& cat = support::catalog();
  std::size_t seen = 0;
  for (auto const& e : cat.rings) {
    if (!e.factors || e.ring->identities().empty()) {
      continue;
    }
    CAPTURE(e.name);
    ClassifyContext const ctx(e.ring);
    for (Hyperideal const& h : ctx.lattice().proper()) {
      Verdict const v = strongly_one_absorbing_primary(ctx, h.members());
      CHECK_FALSE(v);
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("witnesses replay against the tables") {
  for (RingPtr const& r : rings_up_to(12)) {
    ClassifyContext const ctx(r);
    oracle::Ring const    o   = oracle::Ring::of(*r);
    auto const            all = oracle::ideals(o);
    for (Hyperideal const& h : ctx.lattice().proper()) {
      ClassificationReport const rep = classify(ctx, h.members());
      Set const                  i   = oracle::to_set(h.members());
      Set const                  rad = oracle::to_set(rep.radical);
      for (auto const& [name, w] : rep.witnesses) {
        CAPTURE(r->name());
        CAPTURE(name);
        if (w.size() == 2) {
          CHECK(oracle::includes(i, o.mul[w[0]][w[1]]));
          CHECK_FALSE(i.count(w[0]));
          continue;
        }
        REQUIRE(w.size() == 3);
        CHECK(oracle::includes(i, o.prod3(w[0], w[1], w[2])));
        CHECK_FALSE(oracle::includes(i, o.mul[w[0]][w[1]]));
        if (name == "one_abs_prime") {
          CHECK_FALSE(i.count(w[2]));
        } else if (name == "one_abs_primary" || name == "weakly_one_abs_primary") {
          CHECK_FALSE(rad.count(w[2]));
        }
      }
    }
  }
}

TEST_CASE("property: every class matches the oracle and the chains hold") {
  std::size_t checked = 0;
  for (RingPtr const& r : rings_up_to(12)) {
    CAPTURE(r->name());
    ClassifyContext const ctx(r);
    oracle::Ring const    o   = oracle::Ring::of(*r);
    auto const            all = oracle::ideals(o);
    for (Hyperideal const& h : ctx.lattice().proper()) {
      CAPTURE(to_string(h.members()));
      ClassificationReport const rep = classify(ctx, h.members());
      Expected const e = expected(o, all, oracle::to_set(h.members()));
      CHECK(rep.prime == e.prime);
      CHECK(rep.primary == e.primary);
      CHECK(rep.two_absorbing == e.two_abs);
      CHECK(rep.two_absorbing_primary == e.two_abs_primary);
      CHECK(rep.one_abs_prime == e.one_abs_prime);
      CHECK(rep.one_abs_primary == e.one_abs_primary);
      CHECK(rep.strongly_one_abs_primary == e.strongly);
      CHECK(rep.weakly_one_abs_primary == e.weakly);
      CHECK(chain_violation(rep) == std::nullopt);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("property: triple-zero search matches the oracle") {
  std::size_t with_zeros = 0, not_weakly = 0;
  for (RingPtr const& r : rings_up_to(12)) {
    CAPTURE(r->name());
    ClassifyContext const ctx(r);
    oracle::Ring const    o   = oracle::Ring::of(*r);
    auto const            all = oracle::ideals(o);
    for (Hyperideal const& h : ctx.lattice().proper()) {
      Subset const& i = h.members();
      if (!weakly_one_absorbing_primary(ctx, i)) {
        CHECK_THROWS_AS(find_one_triple_zeros(ctx, i), NotWeakly);
        CHECK_THROWS_AS(is_free_one_triple_zero(ctx, i, i, i, i), PreconditionFailed);
        ++not_weakly;
        continue;
      }
      auto const got = find_one_triple_zeros(ctx, i);
      CHECK(got == expected_triple_zeros(o, all, oracle::to_set(i)));
      for (TripleZero const& t : got) {
        CHECK(is_one_triple_zero(ctx, i, t.x, t.y, t.z));
      }
      with_zeros += got.empty() ? 0 : 1;
      // Free exactly when no member triple of J x H x K is a triple-zero.
      for (Hyperideal const& j : ctx.lattice().proper()) {
        Subset const& js = j.members();
        if (!r->product(r->product(js, js), js).subset_of(i)) {
          continue;
        }
        bool expect_free = true;
        for (TripleZero const& t : got) {
          expect_free = expect_free
                        && !(js.contains(t.x) && js.contains(t.y) && js.contains(t.z));
        }
        CHECK(static_cast<bool>(is_free_one_triple_zero(ctx, i, js, js, js))
              == expect_free);
      }
      if (got.empty()) {
        CHECK(is_free_one_triple_zero(ctx, i, Subset{0}, Subset{0}, Subset{0}));
      }
    }
  }
  CHECK(with_zeros > 0);
  CHECK(not_weakly > 0);
}

TEST_CASE("free 1-triple-zero on Z4H and a non-free instance") {
  ClassifyContext const ctx(support::z4h());
  Subset const          even{0, 2};
  CHECK(find_one_triple_zeros(ctx, even).empty());
  CHECK(is_free_one_triple_zero(ctx, even, even, even, even));

  // First catalog instance with a triple-zero inside J o H o K.
  bool found = false;
  for (auto const& e : support::catalog().rings) {
    if (found || e.ring->size() > 12) {
      continue;
    }
    ClassifyContext const c(e.ring);
    FiniteHyperring const& r = c.ring();
    for (Hyperideal const& h : c.lattice().proper()) {
      Subset const& i = h.members();
      if (found || !weakly_one_absorbing_primary(c, i)) {
        continue;
      }
      for (TripleZero const& t : find_one_triple_zeros(c, i)) {
        Subset const j = generate_hyperideal(r, Subset{t.x}).members();
        Subset const k = generate_hyperideal(r, Subset{t.y}).members();
        Subset const l = generate_hyperideal(r, Subset{t.z}).members();
        if (!r.product(r.product(j, k), l).subset_of(i)) {
          continue;
        }
        FreeCheck const f = is_free_one_triple_zero(c, i, j, k, l);
        CHECK_FALSE(f);
        REQUIRE(f.witness.has_value());
        CHECK(is_one_triple_zero(c, i, f.witness->x, f.witness->y, f.witness->z));
        MESSAGE("non-free instance: " << e.name << " I={" << to_string(i)
                                      << "} triple (" << t.x << "," << t.y
                                      << "," << t.z << ")");
        found = true;
        break;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("non-free fixture on Z6 with A = {1}") {
  ClassifyContext const  ctx(support::zn(6, {1}));
  FiniteHyperring const& r = ctx.ring();
  Subset const           zero{0};
  REQUIRE(weakly_one_absorbing_primary(ctx, zero));
  CHECK(is_one_triple_zero(ctx, zero, 2, 2, 3));
  Subset const j = generate_hyperideal(r, Subset{2}).members();
  Subset const k = generate_hyperideal(r, Subset{3}).members();
  CHECK(j == Subset{0, 2, 4});
  CHECK(k == Subset{0, 3});
  FreeCheck const f = is_free_one_triple_zero(ctx, zero, j, j, k);
  CHECK_FALSE(f);
  REQUIRE(f.witness.has_value());
  CHECK(*f.witness == TripleZero{2, 2, 3});
}
