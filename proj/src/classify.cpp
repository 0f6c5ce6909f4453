#include "hyperring/classify.hpp"

namespace hyperring {

ClassifyContext::ClassifyContext(RingPtr ring, std::size_t cap)
    : lattice_(std::move(ring), cap) {
  FiniteHyperring const& r = lattice_.ring();
  std::size_t const      n = r.size();
  if (n > kTripleScanCap) {
    throw CapExceeded("triple scans are capped at "
                      + std::to_string(kTripleScanCap) + " elements");
  }
  for (Element x = 0; x < n; ++x) {
    elements_.push_back(x);
    if (!r.is_unit(x)) {
      nonunits_.push_back(x);
    }
  }
  triples_.resize(n * n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Subset const& xy = r.mul(x, y);
      for (Element z = 0; z < n; ++z) {
        triples_[(x * n + y) * n + z] = r.product(xy, z);
      }
    }
  }
}

namespace {

  void require_proper(ClassifyContext const& ctx, Subset const& ideal) {
    if (ideal == ctx.ring().carrier()) {
      throw NotProper("{" + to_string(ideal) + "} is the whole ring");
    }
  }

  // First (x, y, z) in lexicographic order with x o y o z inside `ideal`
  // (and 0 outside it when `weak`), x o y not inside `ideal`, and
  // `z_ok(z)` false.
  template <typename ZOk>
  Verdict absorbing_scan(ClassifyContext const& ctx, Subset const& ideal,
                         Domain domain, bool weak, ZOk z_ok) {
    require_proper(ctx, ideal);
    FiniteHyperring const& ring = ctx.ring();
    Element const          zero = ring.zero();
    auto const&            dom  = ctx.domain(domain);
    for (Element x : dom) {
      for (Element y : dom) {
        if (ring.mul(x, y).subset_of(ideal)) {
          continue;
        }
        for (Element z : dom) {
          Subset const& xyz = ctx.triple(x, y, z);
          if (weak && xyz.contains(zero)) {
            continue;
          }
          if (xyz.subset_of(ideal) && !z_ok(z)) {
            return Verdict{false, {x, y, z}};
          }
        }
      }
    }
    return Verdict{};
  }

}  // namespace

BasicClasses basic_classes(ClassifyContext const& ctx, Subset const& ideal,
                           Domain domain) {
  require_proper(ctx, ideal);
  FiniteHyperring const& ring = ctx.ring();
  Subset const           rad  = ctx.lattice().radical(ideal);
  auto const&            dom  = ctx.domain(domain);
  BasicClasses           out;
  for (Element x : dom) {
    for (Element y : dom) {
      if (!ring.mul(x, y).subset_of(ideal) || ideal.contains(x)) {
        continue;
      }
      if (out.prime && !ideal.contains(y)) {
        out.prime = Verdict{false, {x, y}};
      }
      if (out.primary && !rad.contains(y)) {
        out.primary = Verdict{false, {x, y}};
      }
    }
  }
  out.maximal = ctx.lattice().is_maximal(ideal);
  return out;
}

Verdict one_absorbing_prime(ClassifyContext const& ctx, Subset const& ideal,
                            Domain domain) {
  return absorbing_scan(ctx, ideal, domain, false,
                        [&](Element z) { return ideal.contains(z); });
}

Verdict one_absorbing_primary(ClassifyContext const& ctx, Subset const& ideal,
                              Domain domain) {
  Subset const rad = ctx.lattice().radical(ideal);
  return absorbing_scan(ctx, ideal, domain, false,
                        [&](Element z) { return rad.contains(z); });
}

Verdict strongly_one_absorbing_primary(ClassifyContext const& ctx,
                                       Subset const& ideal, Domain domain) {
  Subset const& nil = ctx.lattice().nil_radical();
  return absorbing_scan(ctx, ideal, domain, false,
                        [&](Element z) { return nil.contains(z); });
}

Verdict weakly_one_absorbing_primary(ClassifyContext const& ctx,
                                     Subset const& ideal, Domain domain) {
  Subset const rad = ctx.lattice().radical(ideal);
  return absorbing_scan(ctx, ideal, domain, true,
                        [&](Element z) { return rad.contains(z); });
}

TwoAbsorbing two_absorbing_classes(ClassifyContext const& ctx,
                                   Subset const& ideal, Domain domain) {
  require_proper(ctx, ideal);
  FiniteHyperring const& ring = ctx.ring();
  Subset const           rad  = ctx.lattice().radical(ideal);
  auto const&            dom  = ctx.domain(domain);
  TwoAbsorbing           out;
  for (Element x : dom) {
    for (Element y : dom) {
      if (ring.mul(x, y).subset_of(ideal)) {
        continue;
      }
      for (Element z : dom) {
        if (!ctx.triple(x, y, z).subset_of(ideal)) {
          continue;
        }
        Subset const& xz = ring.mul(x, z);
        Subset const& yz = ring.mul(y, z);
        if (out.two_absorbing && !xz.subset_of(ideal)
            && !yz.subset_of(ideal)) {
          out.two_absorbing = Verdict{false, {x, y, z}};
        }
        if (out.two_absorbing_primary && !xz.subset_of(rad)
            && !yz.subset_of(rad)) {
          out.two_absorbing_primary = Verdict{false, {x, y, z}};
        }
      }
    }
  }
  return out;
}

bool is_one_triple_zero(ClassifyContext const& ctx, Subset const& ideal,
                        Element x, Element y, Element z) {
  FiniteHyperring const& ring = ctx.ring();
  if (ring.is_unit(x) || ring.is_unit(y) || ring.is_unit(z)) {
    return false;
  }
  return ctx.triple(x, y, z) == Subset::singleton(ring.zero())
         && !ring.mul(x, y).subset_of(ideal)
         && !ctx.lattice().radical(ideal).contains(z);
}

std::vector<TripleZero> find_one_triple_zeros(ClassifyContext const& ctx,
                                              Subset const&          ideal) {
  if (!weakly_one_absorbing_primary(ctx, ideal)) {
    throw NotWeakly("{" + to_string(ideal)
                    + "} is not weakly 1-absorbing primary");
  }
  FiniteHyperring const&  ring = ctx.ring();
  Subset const            rad  = ctx.lattice().radical(ideal);
  Subset const            zero = Subset::singleton(ring.zero());
  std::vector<TripleZero> out;
  for (Element x : ctx.nonunits()) {
    for (Element y : ctx.nonunits()) {
      if (ring.mul(x, y).subset_of(ideal)) {
        continue;
      }
      for (Element z : ctx.nonunits()) {
        if (!rad.contains(z) && ctx.triple(x, y, z) == zero) {
          out.push_back(TripleZero{x, y, z});
        }
      }
    }
  }
  return out;
}

FreeCheck is_free_one_triple_zero(ClassifyContext const& ctx, Subset const& i,
                                  Subset const& j, Subset const& h,
                                  Subset const& k) {
  FiniteHyperring const& ring = ctx.ring();
  if (i == ring.carrier() || !weakly_one_absorbing_primary(ctx, i)) {
    throw PreconditionFailed("{" + to_string(i)
                             + "} is not weakly 1-absorbing primary");
  }
  if (!ring.product(ring.product(j, h), k).subset_of(i)) {
    throw PreconditionFailed("J o H o K is not inside {" + to_string(i) + "}");
  }
  FreeCheck out;
  for (Element x : j.members()) {
    for (Element y : h.members()) {
      for (Element z : k.members()) {
        if (is_one_triple_zero(ctx, i, x, y, z)) {
          out.free    = false;
          out.witness = TripleZero{x, y, z};
          return out;
        }
      }
    }
  }
  return out;
}

ClassificationReport classify(ClassifyContext const& ctx,
                              Subset const&          ideal) {
  IdealLattice const&  lat = ctx.lattice();
  ClassificationReport r;
  r.ideal           = lat.ideal(ideal).members();
  r.proper          = ideal != ctx.ring().carrier();
  r.is_c_hyperideal = lat.is_c_hyperideal(ideal);
  r.radical         = lat.radical(ideal);
  r.radical_prime   = lat.is_prime(r.radical);
  if (!r.proper) {
    return r;
  }
  auto record = [&](char const* name, Verdict const& v) {
    if (!v.holds) {
      r.witnesses[name] = v.witness;
    }
    return v.holds;
  };
  auto const basic = basic_classes(ctx, ideal);
  r.prime          = record("prime", basic.prime);
  r.primary        = record("primary", basic.primary);
  r.maximal        = basic.maximal;
  auto const two   = two_absorbing_classes(ctx, ideal);
  r.two_absorbing  = record("two_absorbing", two.two_absorbing);
  r.two_absorbing_primary
      = record("two_absorbing_primary", two.two_absorbing_primary);
  r.one_abs_prime = record("one_abs_prime", one_absorbing_prime(ctx, ideal));
  r.one_abs_primary
      = record("one_abs_primary", one_absorbing_primary(ctx, ideal));
  r.strongly_one_abs_primary = record("strongly_one_abs_primary",
                                      strongly_one_absorbing_primary(ctx, ideal));
  r.weakly_one_abs_primary = record("weakly_one_abs_primary",
                                    weakly_one_absorbing_primary(ctx, ideal));

  FiniteHyperring const& ring = ctx.ring();
  auto const guarded_triple_inside = [&] {
    for (Element x : ctx.nonunits()) {
      for (Element y : ctx.nonunits()) {
        for (Element z : ctx.nonunits()) {
          Subset const& xyz = ctx.triple(x, y, z);
          if (!xyz.contains(ring.zero()) && xyz.subset_of(ideal)) {
            return true;
          }
        }
      }
    }
    return false;
  };
  r.weakly_vacuous = !guarded_triple_inside();
  return r;
}

nlohmann::json to_json(ClassificationReport const& r) {
  nlohmann::json doc;
  doc["ideal"]                    = to_string(r.ideal);
  doc["proper"]                   = r.proper;
  doc["is_c_hyperideal"]          = r.is_c_hyperideal;
  doc["radical"]                  = to_string(r.radical);
  doc["radical_prime"]            = r.radical_prime;
  if (r.proper) {
    doc["prime"]                    = r.prime;
    doc["primary"]                  = r.primary;
    doc["maximal"]                  = r.maximal;
    doc["two_absorbing"]            = r.two_absorbing;
    doc["two_absorbing_primary"]    = r.two_absorbing_primary;
    doc["one_abs_prime"]            = r.one_abs_prime;
    doc["one_abs_primary"]          = r.one_abs_primary;
    doc["strongly_one_abs_primary"] = r.strongly_one_abs_primary;
    doc["weakly_one_abs_primary"]   = r.weakly_one_abs_primary;
    doc["weakly_vacuous"]           = r.weakly_vacuous;
  }
  nlohmann::json w = nlohmann::json::object();
  for (auto const& [name, tuple] : r.witnesses) {
    w[name] = tuple;
  }
  doc["witnesses"] = std::move(w);
  return doc;
}

std::optional<std::string> chain_violation(ClassificationReport const& r) {
  if (!r.proper) {
    return std::nullopt;
  }
  struct Link {
    bool        from;
    bool        to;
    char const* name;
  };
  Link const links[] = {
      {r.prime, r.one_abs_prime, "prime => one_abs_prime"},
      {r.one_abs_prime, r.two_absorbing, "one_abs_prime => two_absorbing"},
      {r.primary, r.one_abs_primary, "primary => one_abs_primary"},
      {r.one_abs_primary, r.two_absorbing_primary,
       "one_abs_primary => two_absorbing_primary"},
      {r.one_abs_prime, r.one_abs_primary, "one_abs_prime => one_abs_primary"},
      {r.strongly_one_abs_primary, r.one_abs_primary,
       "strongly_one_abs_primary => one_abs_primary"},
      {r.one_abs_primary, r.weakly_one_abs_primary,
       "one_abs_primary => weakly_one_abs_primary"},
  };
  for (auto const& l : links) {
    if (l.from && !l.to) {
      return std::string(l.name);
    }
  }
  return std::nullopt;
}

}  // namespace hyperring
