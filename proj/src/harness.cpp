#include "hyperring/harness.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "hyperring/flags.hpp"
#include "hyperring/io.hpp"

namespace hyperring {

// ---------------------------------------------------------------- catalog

RawTables z4h_tables() {
  Subset const all{0, 1, 2, 3};
  Subset const even{0, 2};
  Subset const zero{0};
  RawTables    raw;
  raw.name = "Z4H";
  raw.n    = 4;
  raw.zero = 0;
  raw.add.assign(4, std::vector<long>(4));
  for (long a = 0; a < 4; ++a) {
    for (long b = 0; b < 4; ++b) {
      raw.add[a][b] = (a + b) % 4;
    }
  }
  raw.mul = {{zero, zero, zero, zero},
             {zero, all, even, all},
             {zero, even, zero, even},
             {zero, all, even, all}};
  return raw;
}

std::optional<std::size_t> Catalog::find(std::string const& name) const {
  for (std::size_t i = 0; i < rings.size(); ++i) {
    if (rings[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

namespace {

std::size_t add_entry(Catalog& cat, FiniteHyperring ring,
                      CatalogEntry::Kind kind, std::string recipe) {
  CatalogEntry e;
  e.name   = ring.name();
  e.ring   = std::make_shared<FiniteHyperring const>(std::move(ring));
  e.kind   = kind;
  e.recipe = std::move(recipe);
  cat.rings.push_back(std::move(e));
  return cat.rings.size() - 1;
}

void add_map(Catalog& cat, PoolMap::Kind kind, std::string label,
             std::size_t source, std::size_t target,
             std::vector<Element> map) {
  try {
    auto phi = check_good_homomorphism(cat.rings[source].ring,
                                       cat.rings[target].ring, std::move(map),
                                       label);
    cat.pool.push_back(PoolMap{label, kind, source, target, std::move(phi)});
  } catch (NotHomomorphism const& e) {
    cat.rejected.emplace_back(label, e.what());
  }
}

}  // namespace

Catalog builtin_catalog(CatalogLimits const& limits) {
  Catalog cat;
  std::size_t const z4h
      = add_entry(cat, validate_hyperring(z4h_tables()),
                  CatalogEntry::Kind::worked_example, "strongly 1-absorbing example");

  std::vector<std::vector<long>> const multipliers{
      {1}, {2}, {3}, {2, 3}, {2, 4}};
  for (std::size_t n = 2; n <= std::min<std::size_t>(limits.max_n, 32); ++n) {
    for (auto const& a : multipliers) {
      std::string const name = zn_name(n, a);
      try {
        add_entry(cat, zn_template(n, a), CatalogEntry::Kind::template_ring,
                  "zn_template");
      } catch (Error const& e) {
        cat.rejected.emplace_back(name, e.what());
      }
    }
  }

  std::vector<std::pair<std::string, std::string>> const products{
      {"Z4H", "Z4H"},
      {zn_name(2, {1}), zn_name(3, {1})},
      {zn_name(2, {1}), zn_name(2, {1})},
      {zn_name(3, {1}), zn_name(3, {1})},
      {zn_name(4, {1}), "Z4H"},
  };
  for (auto const& [left, right] : products) {
    auto const l = cat.find(left);
    auto const r = cat.find(right);
    if (!l || !r) {
      continue;
    }
    std::string const name = left + "x" + right;
    try {
      auto const idx = add_entry(
          cat,
          product_ring(*cat.rings[*l].ring, *cat.rings[*r].ring,
                       limits.product_cap),
          CatalogEntry::Kind::product, "product_ring");
      cat.rings[idx].factors = std::make_pair(*l, *r);
    } catch (Error const& e) {
      cat.rejected.emplace_back(name, e.what());
    }
  }

  for (std::string const& parent_name : {std::string("Z4H"), zn_name(6, {2, 3})}) {
    auto const parent = cat.find(parent_name);
    if (!parent) {
      continue;
    }
    RingPtr const base = cat.rings[*parent].ring;
    for (Hyperideal const& j : enumerate_hyperideals(*base)) {
      if (!j.proper()) {
        continue;
      }
      std::string const name = parent_name + "/{" + to_string(j.members()) + "}";
      try {
        Quotient q = quotient_ring(*base, j.members());
        if (q.ring.size() > limits.max_n) {
          continue;
        }
        auto const idx = add_entry(cat, std::move(q.ring),
                                   CatalogEntry::Kind::quotient, "quotient_ring");
        cat.rings[idx].parent     = *parent;
        cat.rings[idx].by         = j.members();
        cat.rings[idx].projection = std::move(q.projection);
      } catch (Error const& e) {
        cat.rejected.emplace_back(name, e.what());
      }
    }
  }

  if (30 <= limits.surrogate_cap) {
    add_entry(cat, zn_template(30, {2, 4}), CatalogEntry::Kind::surrogate,
              "zn_template, surrogate of <15> under a o b = {2ab, 4ab}");
  }

  // Homomorphism pool.
  for (std::size_t i = 0; i < cat.rings.size(); ++i) {
    CatalogEntry const& e = cat.rings[i];
    std::vector<Element> id(e.ring->size());
    for (Element x = 0; x < id.size(); ++x) {
      id[x] = x;
    }
    add_map(cat, PoolMap::Kind::identity, "id:" + e.name, i, i, id);
    if (e.parent) {
      add_map(cat, PoolMap::Kind::quotient,
              "pi:" + cat.rings[*e.parent].name + "->" + e.name, *e.parent, i,
              e.projection);
    }
    if (e.factors) {
      auto const [f1, f2]   = *e.factors;
      std::size_t const n2 = cat.rings[f2].ring->size();
      std::size_t const n1 = cat.rings[f1].ring->size();
      std::vector<Element> p1(e.ring->size()), p2(e.ring->size());
      for (Element x = 0; x < e.ring->size(); ++x) {
        p1[x] = x / n2;
        p2[x] = x % n2;
      }
      add_map(cat, PoolMap::Kind::projection,
              "pr1:" + e.name + "->" + cat.rings[f1].name, i, f1, p1);
      add_map(cat, PoolMap::Kind::projection,
              "pr2:" + e.name + "->" + cat.rings[f2].name, i, f2, p2);
      Element const z1 = cat.rings[f1].ring->zero();
      Element const z2 = cat.rings[f2].ring->zero();
      std::vector<Element> i1(n1), i2(n2);
      for (Element a = 0; a < n1; ++a) {
        i1[a] = a * n2 + z2;
      }
      for (Element b = 0; b < n2; ++b) {
        i2[b] = z1 * n2 + b;
      }
      add_map(cat, PoolMap::Kind::injection,
              "in1:" + cat.rings[f1].name + "->" + e.name, f1, i, i1);
      add_map(cat, PoolMap::Kind::injection,
              "in2:" + cat.rings[f2].name + "->" + e.name, f2, i, i2);
    }
  }

  // Subhyperring fixtures: (ring, carrier).
  std::vector<std::pair<std::string, Subset>> const subrings{
      {"Z4H", Subset{0, 2}},
      {zn_name(12, {1}), Subset{0, 3, 6, 9}},
      {zn_name(12, {1}), Subset{0, 4, 8}},
      {zn_name(12, {1}), Subset{0, 2, 4, 6, 8, 10}},
      {zn_name(6, {2, 3}), Subset{0, 2, 4}},
      {zn_name(6, {2, 3}), Subset{0, 3}},
      {zn_name(8, {1}), Subset{0, 2, 4, 6}},
      {"Z4HxZ4H", Subset{0, 4, 8, 12}},
      {"Z4HxZ4H", Subset{0, 1, 2, 3}},
      {zn_name(2, {1}) + "x" + zn_name(3, {1}), Subset{0, 3}},
      {zn_name(2, {1}) + "x" + zn_name(3, {1}), Subset{0, 1, 2}},
  };
  for (auto const& [name, carrier] : subrings) {
    if (auto idx = cat.find(name)) {
      cat.subrings.push_back(
          SubringFixture{*idx, carrier, name + "[" + to_string(carrier) + "]"});
    }
  }
  (void)z4h;
  return cat;
}

// ---------------------------------------------------------------- verdicts

std::string to_string(Mode mode) {
  return mode == Mode::all ? "all" : "c-only";
}

std::optional<Mode> parse_mode(std::string const& text) {
  if (text == "all") {
    return Mode::all;
  }
  if (text == "c-only") {
    return Mode::c_only;
  }
  return std::nullopt;
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass:
      return "pass";
    case Outcome::vacuous:
      return "vacuous";
    case Outcome::counterexample:
      return "counterexample";
  }
  return "?";
}

std::size_t SuiteReport::counterexamples() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](auto const& v) {
        return v.outcome == Outcome::counterexample;
      }));
}

bool theorem_matches(std::string const& id, std::string const& filter) {
  return id == filter
         || (id.size() > filter.size() && id.compare(0, filter.size(), filter) == 0
             && id[filter.size()] == '.');
}

// ---------------------------------------------------------------- suite

namespace {

enum class Kind { ideal, element, map, subring };

struct Arg {
  Kind    kind = Kind::ideal;
  Subset  set;
  Element value = 0;
};
using Args = std::vector<Arg>;

Arg ideal_arg(Subset const& s) { return Arg{Kind::ideal, s, 0}; }
Arg elem_arg(Element x) { return Arg{Kind::element, {}, x}; }

struct Eval {
  bool hyp   = false;
  bool concl = true;
};

// Everything a check may ask about one ring; built once, then read-only.
struct RingData {
  std::string                      name;
  CatalogEntry const*              entry = nullptr;
  std::unique_ptr<ClassifyContext> ctx;
  std::map<Subset, ClassificationReport> reports;
  std::vector<Subset>              proper;
  std::vector<Subset>              proper_c;
  Subset                           nil;
  Subset                           zero;
  RingFlags                        flags;
  std::optional<Subset>            maximal;  // when local

  FiniteHyperring const& ring() const { return ctx->ring(); }
  IdealLattice const&    lattice() const { return ctx->lattice(); }

  bool is_proper(Subset const& s) const { return s != ring().carrier(); }
  ClassificationReport const* report(Subset const& s) const {
    auto it = reports.find(s);
    return it == reports.end() ? nullptr : &it->second;
  }
  // False for R or for a subset that is not a hyperideal.
  bool has(Subset const& s, bool ClassificationReport::*field) const {
    auto const* r = report(s);
    return r != nullptr && r->*field;
  }
  bool prime(Subset const& s) const {
    return has(s, &ClassificationReport::prime);
  }
  bool primary(Subset const& s) const {
    return has(s, &ClassificationReport::primary);
  }
  bool abs_prime(Subset const& s) const {
    return has(s, &ClassificationReport::one_abs_prime);
  }
  bool abs_primary(Subset const& s) const {
    return has(s, &ClassificationReport::one_abs_primary);
  }
  bool strongly(Subset const& s) const {
    return has(s, &ClassificationReport::strongly_one_abs_primary);
  }
  bool weakly(Subset const& s) const {
    return has(s, &ClassificationReport::weakly_one_abs_primary);
  }
  Subset rad(Subset const& s) const { return lattice().radical(s); }
  bool   local() const { return maximal.has_value(); }
  Subset mul(Element x, Element y) const { return ring().mul(x, y); }
  Subset prod(Subset const& a, Subset const& b) const {
    return ring().product(a, b);
  }
  std::vector<Element> const& nonunits() const { return ctx->nonunits(); }
};

std::unique_ptr<RingData> make_ring_data(std::string name, RingPtr ring,
                                         CatalogEntry const* entry) {
  auto d   = std::make_unique<RingData>();
  d->name  = std::move(name);
  d->entry = entry;
  d->ctx   = std::make_unique<ClassifyContext>(std::move(ring));
  for (Hyperideal const& h : d->lattice().proper()) {
    d->proper.push_back(h.members());
    d->reports.emplace(h.members(), classify(*d->ctx, h.members()));
    if (d->lattice().is_c_hyperideal(h.members())) {
      d->proper_c.push_back(h.members());
    }
  }
  d->nil   = d->lattice().nil_radical();
  d->zero  = Subset::singleton(d->ring().zero());
  d->flags = ring_flags(d->lattice());
  if (d->lattice().is_local()) {
    d->maximal = d->lattice().maximal().front().members();
  }
  return d;
}

enum class Scope { ring, map, subring };

struct Suite;
using Emit = std::function<void(Args const&)>;

struct Check {
  std::string                                     id;
  Scope                                           scope = Scope::ring;
  std::vector<std::pair<std::string, Kind>>       params;
  std::function<bool(Suite const&, std::size_t)>  applies;
  std::function<void(Suite const&, std::size_t, Emit const&)> each;
  std::function<Eval(Suite const&, std::size_t, Args const&)> eval;
};

struct MatrixData {
  MatrixRing        m;
  std::vector<bool> diag_nonunit;
};

struct GammaData {
  FundamentalQuotient       q;
  std::unique_ptr<RingData> data;
};

struct SubData {
  SubHyperring              sub;
  std::unique_ptr<RingData> data;
};

struct Suite {
  Catalog const*                         catalog = nullptr;
  Mode                                   mode    = Mode::all;
  bool                                   require_identity = true;
  std::vector<std::unique_ptr<RingData>> rings;
  std::map<std::size_t, MatrixData>      matrices;
  std::map<std::size_t, GammaData>       gammas;
  std::vector<std::optional<SubData>>    subs;
  std::vector<Check>                     checks;

  RingData const& ring(std::size_t i) const { return *rings[i]; }
  PoolMap const&  map(std::size_t i) const { return catalog->pool[i]; }
  RingData const& source(std::size_t m) const { return ring(map(m).source); }
  RingData const& target(std::size_t m) const { return ring(map(m).target); }

  std::vector<Subset> const& vars(RingData const& d) const {
    return mode == Mode::c_only ? d.proper_c : d.proper;
  }
  std::size_t subjects(Scope s) const {
    switch (s) {
      case Scope::ring:
        return rings.size();
      case Scope::map:
        return catalog->pool.size();
      case Scope::subring:
        return subs.size();
    }
    return 0;
  }
  // Units, and with them every absorbing class, presume an identity.
  bool has_identity(Scope s, std::size_t i) const {
    if (!require_identity) {
      return true;
    }
    switch (s) {
      case Scope::ring:
        return rings[i]->flags.has_identity;
      case Scope::map:
        return source(i).flags.has_identity && target(i).flags.has_identity;
      case Scope::subring:
        return rings[catalog->subrings[i].ring]->flags.has_identity;
    }
    return false;
  }
  std::string subject_name(Scope s, std::size_t i) const {
    switch (s) {
      case Scope::ring:
        return rings[i]->name;
      case Scope::map:
        return catalog->pool[i].label;
      case Scope::subring:
        return catalog->subrings[i].label;
    }
    return {};
  }
};

// ------------------------------------------------------------ check helpers

using IdealEval = std::function<Eval(Suite const&, RingData const&, Subset const&)>;
using RingPred  = std::function<bool(Suite const&, RingData const&)>;

bool always(Suite const&, std::size_t) { return true; }

// One instance per variable ideal I of the ring.
Check per_ideal(std::string id, IdealEval f, RingPred applies = nullptr) {
  Check c;
  c.id     = std::move(id);
  c.params = {{"I", Kind::ideal}};
  if (applies) {
    c.applies = [applies](Suite const& s, std::size_t r) {
      return applies(s, s.ring(r));
    };
  } else {
    c.applies = always;
  }
  c.each = [](Suite const& s, std::size_t r, Emit const& emit) {
    for (Subset const& i : s.vars(s.ring(r))) {
      emit({ideal_arg(i)});
    }
  };
  c.eval = [f](Suite const& s, std::size_t r, Args const& a) {
    return f(s, s.ring(r), a[0].set);
  };
  return c;
}

// Instances (I, J) over pairs of variable ideals.
Check per_ideal_pair(std::string id,
                     std::function<Eval(Suite const&, RingData const&,
                                        Subset const&, Subset const&)> f) {
  Check c;
  c.id      = std::move(id);
  c.params  = {{"I", Kind::ideal}, {"J", Kind::ideal}};
  c.applies = always;
  c.each    = [](Suite const& s, std::size_t r, Emit const& emit) {
    auto const& v = s.vars(s.ring(r));
    for (Subset const& i : v) {
      for (Subset const& j : v) {
        emit({ideal_arg(i), ideal_arg(j)});
      }
    }
  };
  c.eval = [f](Suite const& s, std::size_t r, Args const& a) {
    return f(s, s.ring(r), a[0].set, a[1].set);
  };
  return c;
}

// Instances (I, x) or (I, x, y) over variable ideals and nonunits.
Check per_ideal_elements(
    std::string id, std::size_t arity,
    std::function<Eval(Suite const&, RingData const&, Subset const&,
                       std::vector<Element> const&)> f,
    RingPred applies = nullptr) {
  Check c;
  c.id     = std::move(id);
  c.params = {{"I", Kind::ideal}};
  static char const* const names[] = {"x", "y", "z"};
  for (std::size_t k = 0; k < arity; ++k) {
    c.params.emplace_back(names[k], Kind::element);
  }
  if (applies) {
    c.applies = [applies](Suite const& s, std::size_t r) {
      return applies(s, s.ring(r));
    };
  } else {
    c.applies = always;
  }
  c.each = [arity](Suite const& s, std::size_t r, Emit const& emit) {
    RingData const& d = s.ring(r);
    auto const&     nu = d.nonunits();
    for (Subset const& i : s.vars(d)) {
      Args a(1 + arity);
      a[0] = ideal_arg(i);
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == arity) {
          emit(a);
          return;
        }
        for (Element x : nu) {
          a[1 + k] = elem_arg(x);
          rec(k + 1);
        }
      };
      rec(0);
    }
  };
  c.eval = [f](Suite const& s, std::size_t r, Args const& a) {
    std::vector<Element> xs;
    for (std::size_t k = 1; k < a.size(); ++k) {
      xs.push_back(a[k].value);
    }
    return f(s, s.ring(r), a[0].set, xs);
  };
  return c;
}

// Ideal-triple characterisations: `cls` is the class, `tail_ok(d, I, K)` the
// alternative to J o H inside I.
using ClassPred = std::function<bool(RingData const&, Subset const&)>;
using TailOk
    = std::function<bool(RingData const&, Subset const&, Subset const&)>;

// The J, H, K here sit inside the condition, so they range over every
// proper hyperideal in both modes.
bool triple_condition(Suite const&, RingData const& d, Subset const& i,
                      TailOk const& tail_ok, Args* witness = nullptr) {
  auto const& v = d.proper;
  for (Subset const& j : v) {
    for (Subset const& h : v) {
      Subset const jh = d.prod(j, h);
      if (jh.subset_of(i)) {
        continue;
      }
      for (Subset const& k : v) {
        if (d.prod(jh, k).subset_of(i) && !tail_ok(d, i, k)) {
          if (witness) {
            *witness = {ideal_arg(j), ideal_arg(h), ideal_arg(k)};
          }
          return false;
        }
      }
    }
  }
  return true;
}

void add_ideal_triple(std::vector<Check>& out, std::string const& base,
                      ClassPred cls, TailOk tail_ok) {
  Check fwd;
  fwd.id     = base + ".fwd";
  fwd.params = {{"I", Kind::ideal}, {"J", Kind::ideal}, {"H", Kind::ideal},
                {"K", Kind::ideal}};
  fwd.applies = always;
  fwd.each    = [cls](Suite const& s, std::size_t r, Emit const& emit) {
    RingData const& d = s.ring(r);
    auto const&     v = s.vars(d);
    for (Subset const& i : v) {
      if (!cls(d, i)) {
        emit({ideal_arg(i), ideal_arg(i), ideal_arg(i), ideal_arg(i)});
        continue;  // hypothesis false for every J, H, K
      }
      for (Subset const& j : v) {
        for (Subset const& h : v) {
          for (Subset const& k : v) {
            emit({ideal_arg(i), ideal_arg(j), ideal_arg(h), ideal_arg(k)});
          }
        }
      }
    }
  };
  fwd.eval = [cls, tail_ok](Suite const& s, std::size_t r, Args const& a) {
    RingData const& d = s.ring(r);
    Subset const&   i = a[0].set;
    Subset const    jh = d.prod(a[1].set, a[2].set);
    Eval            e;
    e.hyp   = cls(d, i) && d.prod(jh, a[3].set).subset_of(i);
    e.concl = jh.subset_of(i) || tail_ok(d, i, a[3].set);
    return e;
  };
  out.push_back(std::move(fwd));

  Check bwd = per_ideal(base + ".bwd", [cls, tail_ok](Suite const& s,
                                                       RingData const& d,
                                                       Subset const& i) {
    return Eval{triple_condition(s, d, i, tail_ok), cls(d, i)};
  });
  out.push_back(std::move(bwd));
}

// Homomorphism checks.
using MapEval = std::function<Eval(Suite const&, PoolMap const&, RingData const&,
                                   RingData const&, Subset const&)>;

// Variable ideals of the target (preimage direction) or of the source.
Check per_map(std::string id, bool over_target, MapEval f,
              std::function<bool(PoolMap const&)> kinds = nullptr) {
  Check c;
  c.id     = std::move(id);
  c.scope  = Scope::map;
  c.params = {{over_target ? "I2" : "I1", Kind::ideal}};
  c.applies = [kinds](Suite const& s, std::size_t m) {
    return !kinds || kinds(s.map(m));
  };
  c.each = [over_target](Suite const& s, std::size_t m, Emit const& emit) {
    RingData const& d = over_target ? s.target(m) : s.source(m);
    for (Subset const& i : s.vars(d)) {
      emit({ideal_arg(i)});
    }
  };
  c.eval = [f](Suite const& s, std::size_t m, Args const& a) {
    return f(s, s.map(m), s.source(m), s.target(m), a[0].set);
  };
  return c;
}

bool local_side_condition(PoolMap const& p, RingData const& tgt) {
  return !tgt.local() || p.phi.preserves_nonunits();
}

// Rectangular form I = A x R2 or R1 x B with the non-full factor primary.
bool rectangular_primary(Suite const& s, RingData const& d, Subset const& i) {
  auto const [f1, f2] = *d.entry->factors;
  RingData const& r1  = s.ring(f1);
  RingData const& r2  = s.ring(f2);
  std::size_t const n2 = r2.ring().size();
  Subset            a, b;
  i.for_each([&](Element p) {
    a.insert(p / n2);
    b.insert(p % n2);
  });
  if (a.size() * b.size() != i.size()) {
    return false;
  }
  bool const full_a = a == r1.ring().carrier();
  bool const full_b = b == r2.ring().carrier();
  return (full_b && !full_a && r1.primary(a))
         || (full_a && !full_b && r2.primary(b));
}

Subset intersection(Subset const& a, Subset const& b) { return a & b; }

bool has_unit_and_nonunit(RingData const& d) {
  return !d.ring().units().empty() && !d.nonunits().empty();
}

// Nonzero nonunit prime element that is not irreducible, or the reverse
// question; both throw nothing for zero or units.
bool prime_element(RingData const& d, Element x) {
  return x != d.ring().zero() && !d.ring().is_unit(x)
         && is_prime_element(d.ring(), x);
}

bool free_triple_zero(RingData const& d, Subset const& i, Subset const& j,
                      Subset const& h, Subset const& k) {
  Subset const rad  = d.rad(i);
  Subset const zero = d.zero;
  for (Element x : j.members()) {
    for (Element y : h.members()) {
      if (d.mul(x, y).subset_of(i) || d.ring().is_unit(x)
          || d.ring().is_unit(y)) {
        continue;
      }
      for (Element z : k.members()) {
        if (!rad.contains(z) && !d.ring().is_unit(z)
            && d.ctx->triple(x, y, z) == zero) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Check> build_checks() {
  std::vector<Check> out;
  using D = RingData;

  // ---- section 3
  out.push_back(per_ideal("T3.RADICAL.sqrt",
                          [](Suite const&, D const& d, Subset const& i) {
                            return Eval{d.abs_prime(i),
                                        d.lattice().is_prime(d.rad(i))};
                          }));
  out.push_back(per_ideal_elements(
      "T3.RADICAL.colon", 1,
      [](Suite const&, D const& d, Subset const& i,
         std::vector<Element> const& z) {
        Eval e;
        e.hyp = d.abs_prime(i) && !i.contains(z[0]);
        if (e.hyp) {
          e.concl = d.prime(colon(d.ring(), i, z[0]).members());
        }
        return e;
      }));
  {
    Check c;
    c.id      = "T3.LOCALLEM";
    c.applies = always;
    c.each    = [](Suite const&, std::size_t, Emit const& emit) { emit({}); };
    c.eval    = [](Suite const& s, std::size_t r, Args const&) {
      D const& d   = s.ring(r);
      bool     hyp = has_unit_and_nonunit(d);
      for (Element u : d.nonunits()) {
        d.ring().units().for_each([&](Element v) {
          hyp = hyp && d.ring().is_unit(d.ring().add(u, v));
        });
      }
      return Eval{hyp, d.local()};
    };
    out.push_back(std::move(c));
  }
  out.push_back(per_ideal("T3.NOTPRIME",
                          [](Suite const&, D const& d, Subset const& i) {
                            return Eval{d.abs_prime(i) && !d.prime(i),
                                        d.local()};
                          }));
  {
    Check c = per_ideal_elements(
        "T3.XYJ", 2,
        [](Suite const&, D const&, Subset const&, std::vector<Element> const&) {
          return Eval{};
        });
    c.params.emplace_back("J", Kind::ideal);
    c.each = [](Suite const& s, std::size_t r, Emit const& emit) {
      D const& d = s.ring(r);
      for (Subset const& i : s.vars(d)) {
        if (!d.abs_prime(i)) {
          continue;
        }
        for (Element x : d.nonunits()) {
          for (Element y : d.nonunits()) {
            for (Subset const& j : s.vars(d)) {
              emit({ideal_arg(i), elem_arg(x), elem_arg(y), ideal_arg(j)});
            }
          }
        }
      }
    };
    c.eval = [](Suite const& s, std::size_t r, Args const& a) {
      D const&      d  = s.ring(r);
      Subset const& i  = a[0].set;
      Subset const  xy = d.mul(a[1].value, a[2].value);
      return Eval{d.abs_prime(i) && d.prod(xy, a[3].set).subset_of(i),
                  xy.subset_of(i) || a[3].set.subset_of(i)};
    };
    out.push_back(std::move(c));
  }
  out.push_back(per_ideal(
      "T3.P2C", [](Suite const&, D const& d, Subset const& i) {
        Subset const p = d.rad(i);
        Eval         e;
        e.hyp = d.primary(i) && d.lattice().is_prime(p);
        if (e.hyp) {
          Subset const p2 = ideal_power(d.ring(), p, 2).members();
          (p - i).for_each([&](Element c) {
            e.hyp = e.hyp && colon(d.ring(), p2, c).members().subset_of(i);
          });
        }
        e.concl = d.abs_prime(i);
        return e;
      }));
  {
    Check c = per_ideal(
        "T3.MATRIX",
        [](Suite const& s, D const& d, Subset const& i) {
          (void)s;
          (void)d;
          (void)i;
          return Eval{};
        },
        [](Suite const& s, D const&) {
          (void)s;
          return false;
        });
    c.applies = [](Suite const& s, std::size_t r) {
      return s.matrices.count(r) != 0;
    };
    c.eval = [](Suite const& s, std::size_t r, Args const& a) {
      D const&          d  = s.ring(r);
      MatrixData const& md = s.matrices.at(r);
      FiniteHyperring const& m = md.m.ring;
      Subset const&     i  = a[0].set;
      Subset const      mi = md.m.matrices_over(i);
      std::size_t const n  = d.ring().size();
      bool              hyp = true;
      for (Element x = 0; x < n && hyp; ++x) {
        for (Element y = 0; y < n && hyp; ++y) {
          if (!md.diag_nonunit[x] || !md.diag_nonunit[y]) {
            continue;
          }
          Subset const xy = m.mul(md.m.diag(x), md.m.diag(y));
          for (Element z = 0; z < n && hyp; ++z) {
            if (!md.diag_nonunit[z]) {
              continue;
            }
            if (m.product(xy, md.m.diag(z)).subset_of(mi)
                && !xy.subset_of(mi) && !mi.contains(md.m.diag(z))) {
              hyp = false;
            }
          }
        }
      }
      return Eval{hyp, d.abs_prime(i)};
    };
    out.push_back(std::move(c));
  }
  for (bool forward : {true, false}) {
    Check c = per_ideal(forward ? "T3.GAMMA.fwd" : "T3.GAMMA.bwd",
                        [](Suite const&, D const&, Subset const&) {
                          return Eval{};
                        });
    c.applies = [](Suite const& s, std::size_t r) {
      return s.gammas.count(r) != 0;
    };
    c.eval = [forward](Suite const& s, std::size_t r, Args const& a) {
      D const&         d  = s.ring(r);
      GammaData const& g  = s.gammas.at(r);
      Subset           image;
      a[0].set.for_each([&](Element x) { image.insert(g.q.projection[x]); });
      bool const lhs = d.abs_prime(a[0].set);
      bool const rhs = g.data->abs_prime(image);
      return forward ? Eval{lhs, rhs} : Eval{rhs, lhs};
    };
    out.push_back(std::move(c));
  }
  add_ideal_triple(
      out, "T3.IDEAL3",
      [](D const& d, Subset const& i) { return d.abs_prime(i); },
      [](D const&, Subset const& i, Subset const& k) {
        return k.subset_of(i);
      });

  // ---- section 4
  out.push_back(per_ideal("T4.CHAIN.primary",
                          [](Suite const&, D const& d, Subset const& i) {
                            return Eval{d.primary(i), d.abs_primary(i)};
                          }));
  out.push_back(per_ideal(
      "T4.CHAIN.two", [](Suite const&, D const& d, Subset const& i) {
        return Eval{d.abs_primary(i),
                    d.has(i, &ClassificationReport::two_absorbing_primary)};
      }));
  out.push_back(per_ideal("T4.RADICAL",
                          [](Suite const&, D const& d, Subset const& i) {
                            return Eval{d.abs_primary(i),
                                        d.lattice().is_prime(d.rad(i))};
                          }));
  out.push_back(per_ideal("T4.NOTPRIMARY",
                          [](Suite const&, D const& d, Subset const& i) {
                            return Eval{d.abs_primary(i) && !d.primary(i),
                                        d.local()};
                          }));
  out.push_back(per_ideal("T4.NONLOCAL.fwd",
                          [](Suite const&, D const& d, Subset const& i) {
                            return Eval{!d.local() && d.abs_primary(i),
                                        d.primary(i)};
                          }));
  out.push_back(per_ideal("T4.NONLOCAL.bwd",
                          [](Suite const&, D const& d, Subset const& i) {
                            return Eval{!d.local() && d.primary(i),
                                        d.abs_primary(i)};
                          }));
  {
    auto is_product = [](Suite const&, D const& d) {
      return d.entry != nullptr && d.entry->factors.has_value();
    };
    out.push_back(per_ideal(
        "T4.PRODUCT.1to2",
        [](Suite const&, D const& d, Subset const& i) {
          return Eval{d.abs_primary(i), d.primary(i)};
        },
        is_product));
    out.push_back(per_ideal(
        "T4.PRODUCT.2to3",
        [](Suite const& s, D const& d, Subset const& i) {
          return Eval{d.primary(i), rectangular_primary(s, d, i)};
        },
        is_product));
    out.push_back(per_ideal(
        "T4.PRODUCT.3to1",
        [](Suite const& s, D const& d, Subset const& i) {
          return Eval{rectangular_primary(s, d, i), d.abs_primary(i)};
        },
        is_product));
  }
  {
    Check c;
    c.id      = "T4.IRRED";
    c.params  = {{"x", Kind::element}};
    c.applies = always;
    c.each    = [](Suite const& s, std::size_t r, Emit const& emit) {
      for (Element x : s.ring(r).nonunits()) {
        emit({elem_arg(x)});
      }
    };
    c.eval = [](Suite const& s, std::size_t r, Args const& a) {
      D const& d = s.ring(r);
      Element  x = a[0].value;
      Eval     e;
      e.hyp = d.local() && d.ring().strongly_distributive()
              && prime_element(d, x);
      if (e.hyp) {
        e.concl = is_irreducible(d.ring(), x);
      }
      return e;
    };
    out.push_back(std::move(c));
  }
  {
    Check c;
    c.id      = "T4.XM";
    c.params  = {{"x", Kind::element}};
    c.applies = always;
    c.each    = [](Suite const& s, std::size_t r, Emit const& emit) {
      for (Element x : s.ring(r).nonunits()) {
        emit({elem_arg(x)});
      }
    };
    c.eval = [](Suite const& s, std::size_t r, Args const& a) {
      D const& d = s.ring(r);
      Element  x = a[0].value;
      Eval     e;
      e.hyp = d.local() && d.ring().strongly_distributive()
              && d.maximal->contains(x) && prime_element(d, x);
      if (e.hyp) {
        Subset const xr = generate_hyperideal(
                              d.ring(), d.prod(Subset::singleton(x),
                                               d.ring().carrier()))
                              .members();
        e.hyp = *d.maximal != xr;
      }
      if (e.hyp) {
        Subset const q
            = generate_hyperideal(d.ring(),
                                  d.prod(Subset::singleton(x), *d.maximal))
                  .members();
        e.concl = d.abs_primary(q) && !d.primary(q);
      }
      return e;
    };
    out.push_back(std::move(c));
  }
  out.push_back(per_ideal(
      "T4.WITNESS.exists", [](Suite const&, D const& d, Subset const& i) {
        Eval e;
        e.hyp   = d.abs_primary(i) && !d.primary(i);
        e.concl = false;
        if (e.hyp) {
          Subset const rad = d.rad(i);
          for (Element x : d.nonunits()) {
            if (i.contains(x) || !is_irreducible(d.ring(), x)) {
              continue;
            }
            for (Element y : d.nonunits()) {
              if (!rad.contains(y) && d.mul(x, y).subset_of(i)) {
                e.concl = true;
              }
            }
          }
        }
        return e;
      }));
  out.push_back(per_ideal_elements(
      "T4.WITNESS.every", 2,
      [](Suite const&, D const& d, Subset const& i,
         std::vector<Element> const& xy) {
        Eval e;
        e.hyp = d.abs_primary(i) && !d.primary(i) && !i.contains(xy[0])
                && !d.rad(i).contains(xy[1])
                && d.mul(xy[0], xy[1]).subset_of(i);
        if (e.hyp) {
          e.concl = is_irreducible(d.ring(), xy[0]);
        }
        return e;
      }));
  {
    Check c = per_ideal(
        "T4.PM", [](Suite const&, D const& d, Subset const& p) {
          Eval e;
          e.hyp = d.local() && d.prime(p);
          if (e.hyp) {
            e.concl = d.abs_primary(
                ideal_product(d.ring(), p, *d.maximal).members());
          }
          return e;
        });
    c.params = {{"P", Kind::ideal}};
    out.push_back(std::move(c));
  }
  out.push_back(per_ideal_elements(
      "T4.COLON", 1,
      [](Suite const&, D const& d, Subset const& i,
         std::vector<Element> const& a) {
        Eval e;
        e.hyp = d.abs_primary(i) && !i.contains(a[0]);
        if (e.hyp) {
          e.concl = d.primary(colon(d.ring(), i, a[0]).members());
        }
        return e;
      }));
  out.push_back(per_ideal_pair(
      "T4.CAP", [](Suite const&, D const& d, Subset const& i, Subset const& j) {
        Eval         e;
        Subset const p = d.rad(i);
        e.hyp = d.abs_primary(i) && d.abs_primary(j) && p == d.rad(j);
        if (e.hyp) {
          Subset const k = intersection(i, j);
          e.concl        = d.abs_primary(k) && d.rad(k) == p;
        }
        return e;
      }));
  auto const any_map = std::function<bool(PoolMap const&)>(nullptr);
  out.push_back(per_map(
      "T4.HOM.pre", true,
      [](Suite const&, PoolMap const& p, D const& src, D const& tgt,
         Subset const& i2) {
        Subset const pre = p.phi.preimage(i2);
        Eval         e;
        e.hyp = local_side_condition(p, tgt) && tgt.abs_primary(i2)
                && src.is_proper(pre);
        e.concl = src.abs_primary(pre);
        return e;
      },
      any_map));
  out.push_back(per_map(
      "T4.HOM.img", false,
      [](Suite const&, PoolMap const& p, D const& src, D const& tgt,
         Subset const& i1) {
        Eval e;
        e.hyp = local_side_condition(p, tgt) && p.phi.surjective()
                && p.phi.kernel().subset_of(i1) && src.abs_primary(i1);
        e.concl = tgt.abs_primary(p.phi.image(i1));
        return e;
      },
      any_map));
  for (bool forward : {true, false}) {
    out.push_back(per_map(
        forward ? "T4.QUOT.fwd" : "T4.QUOT.bwd", false,
        [forward](Suite const&, PoolMap const& p, D const& src, D const& tgt,
                  Subset const& i) {
          bool const side = local_side_condition(p, tgt)
                            && p.phi.kernel().subset_of(i);
          bool const lhs = src.abs_primary(i);
          bool const rhs = tgt.abs_primary(p.phi.image(i));
          return forward ? Eval{side && lhs, rhs} : Eval{side && rhs, lhs};
        },
        [](PoolMap const& p) { return p.kind == PoolMap::Kind::quotient; }));
  }
  {
    Check c = per_ideal_elements(
        "T4.XYJRAD", 2,
        [](Suite const&, D const&, Subset const&, std::vector<Element> const&) {
          return Eval{};
        });
    c.params.emplace_back("J", Kind::ideal);
    c.each = [](Suite const& s, std::size_t r, Emit const& emit) {
      D const& d = s.ring(r);
      for (Subset const& i : s.vars(d)) {
        if (!d.abs_primary(i)) {
          continue;
        }
        for (Element x : d.nonunits()) {
          for (Element y : d.nonunits()) {
            for (Subset const& j : s.vars(d)) {
              emit({ideal_arg(i), elem_arg(x), elem_arg(y), ideal_arg(j)});
            }
          }
        }
      }
    };
    c.eval = [](Suite const& s, std::size_t r, Args const& a) {
      D const&      d  = s.ring(r);
      Subset const& i  = a[0].set;
      Subset const  xy = d.mul(a[1].value, a[2].value);
      return Eval{d.abs_primary(i) && d.prod(xy, a[3].set).subset_of(i),
                  xy.subset_of(i) || a[3].set.subset_of(d.rad(i))};
    };
    out.push_back(std::move(c));
  }
  add_ideal_triple(
      out, "T4.IDEAL3",
      [](D const& d, Subset const& i) { return d.abs_primary(i); },
      [](D const& d, Subset const& i, Subset const& k) {
        return k.subset_of(d.rad(i));
      });

  // ---- section 5
  out.push_back(per_ideal_pair(
      "T5.CAP2", [](Suite const&, D const& d, Subset const& i, Subset const& j) {
        return Eval{d.strongly(i) && d.strongly(j),
                    d.strongly(intersection(i, j))};
      }));
  auto char_rhs = [](D const& d, Subset const& i) {
    Subset const rad = d.rad(i);
    return (d.abs_primary(i) && rad == d.nil)
           || (d.local() && *d.maximal == rad
               && d.prod(*d.maximal, *d.maximal).subset_of(i));
  };
  out.push_back(per_ideal("T5.CHAR.fwd",
                          [char_rhs](Suite const&, D const& d, Subset const& i) {
                            return Eval{d.strongly(i), char_rhs(d, i)};
                          }));
  out.push_back(per_ideal("T5.CHAR.bwd",
                          [char_rhs](Suite const&, D const& d, Subset const& i) {
                            return Eval{char_rhs(d, i), d.strongly(i)};
                          }));
  for (bool forward : {true, false}) {
    Check c = per_ideal(
        forward ? "T5.PRIMECHAR.fwd" : "T5.PRIMECHAR.bwd",
        [forward](Suite const&, D const& d, Subset const& p) {
          bool const rhs = p == d.nil || (d.local() && *d.maximal == p);
          bool const lhs = d.strongly(p);
          Eval       e   = forward ? Eval{lhs, rhs} : Eval{rhs, lhs};
          e.hyp          = e.hyp && d.prime(p);
          return e;
        });
    c.params = {{"P", Kind::ideal}};
    out.push_back(std::move(c));
  }
  for (bool forward : {true, false}) {
    Check c = per_ideal(
        forward ? "T5.PMCHAR.fwd" : "T5.PMCHAR.bwd",
        [forward](Suite const&, D const& d, Subset const& p) {
          if (!d.local() || !d.prime(p)) {
            return Eval{false, true};
          }
          Subset const q
              = ideal_product(d.ring(), p, *d.maximal).members();
          bool const lhs = d.strongly(q);
          bool const rhs = p == d.nil || p == *d.maximal;
          return forward ? Eval{lhs, rhs} : Eval{rhs, lhs};
        });
    c.params = {{"P", Kind::ideal}};
    out.push_back(std::move(c));
  }
  for (bool forward : {true, false}) {
    Check c;
    c.id      = forward ? "T5.EXIST.fwd" : "T5.EXIST.bwd";
    c.applies = always;
    c.each    = [](Suite const&, std::size_t, Emit const& emit) { emit({}); };
    c.eval    = [forward](Suite const& s, std::size_t r, Args const&) {
      D const&   d      = s.ring(r);
      auto const& v     = d.proper;
      bool const exists = std::any_of(v.begin(), v.end(), [&](Subset const& i) {
        return d.strongly(i);
      });
      bool const rhs = d.lattice().is_prime(d.nil) || d.local();
      return forward ? Eval{exists, rhs} : Eval{rhs, exists};
    };
    out.push_back(std::move(c));
  }
  out.push_back(per_ideal(
      "T5.NOPROD",
      [](Suite const&, D const& d, Subset const& i) {
        return Eval{true, !d.strongly(i)};
      },
      [](Suite const&, D const& d) {
        return d.entry != nullptr && d.entry->factors.has_value();
      }));
  add_ideal_triple(
      out, "T5.IDEAL3",
      [](D const& d, Subset const& i) { return d.strongly(i); },
      [](D const& d, Subset const&, Subset const& k) {
        return k.subset_of(d.nil);
      });
  for (bool forward : {true, false}) {
    Check c;
    c.id      = forward ? "T5.ZEROONLY.fwd" : "T5.ZEROONLY.bwd";
    c.applies = always;
    c.each    = [](Suite const&, std::size_t, Emit const& emit) { emit({}); };
    c.eval    = [forward](Suite const& s, std::size_t r, Args const&) {
      D const&    d    = s.ring(r);
      auto const& v    = d.proper;
      bool        only = d.is_proper(d.zero) && d.strongly(d.zero);
      for (Subset const& i : v) {
        only = only && (i == d.zero || !d.strongly(i));
      }
      bool const rhs = d.flags.hyperfield
                       || (!d.local() && d.flags.integral_hyperdomain);
      return forward ? Eval{only, rhs} : Eval{rhs, only};
    };
    out.push_back(std::move(c));
  }
  {
    Check c = per_ideal_pair(
        "T5.COLONJ", [](Suite const&, D const& d, Subset const& i,
                        Subset const& j) {
          Eval e;
          e.hyp = d.abs_primary(i) && !j.subset_of(i);
          if (e.hyp) {
            e.concl = d.primary(colon(d.ring(), i, j).members());
          }
          return e;
        });
    out.push_back(std::move(c));
  }
  out.push_back(per_ideal_pair(
      "T5.COLONSTRONG",
      [](Suite const&, D const& d, Subset const& i, Subset const& j) {
        Eval e;
        e.hyp = d.abs_primary(i) && !j.subset_of(d.rad(i));
        if (e.hyp) {
          e.concl = d.strongly(colon(d.ring(), i, j).members());
        }
        return e;
      }));
  out.push_back(per_map("T5.HOM.pre", true,
                        [](Suite const&, PoolMap const& p, D const& src,
                           D const& tgt, Subset const& i2) {
                          Subset const pre = p.phi.preimage(i2);
                          return Eval{p.phi.injective() && tgt.strongly(i2)
                                          && src.is_proper(pre),
                                      src.strongly(pre)};
                        }));
  out.push_back(per_map("T5.HOM.img", false,
                        [](Suite const&, PoolMap const& p, D const& src,
                           D const& tgt, Subset const& i1) {
                          return Eval{p.phi.surjective()
                                          && p.phi.kernel().subset_of(i1)
                                          && src.strongly(i1),
                                      tgt.strongly(p.phi.image(i1))};
                        }));
  {
    Check c;
    c.id      = "T5.SUBRING";
    c.scope   = Scope::subring;
    c.params  = {{"I", Kind::ideal}};
    c.applies = [](Suite const& s, std::size_t t) {
      return s.subs[t].has_value();
    };
    c.each = [](Suite const& s, std::size_t t, Emit const& emit) {
      D const& amb = s.ring(s.catalog->subrings[t].ring);
      for (Subset const& i : s.vars(amb)) {
        emit({ideal_arg(i)});
      }
    };
    c.eval = [](Suite const& s, std::size_t t, Args const& a) {
      D const&       amb = s.ring(s.catalog->subrings[t].ring);
      SubData const& sd  = *s.subs[t];
      Subset const   ti  = sd.sub.restrict(a[0].set);
      return Eval{amb.strongly(a[0].set) && sd.data->is_proper(ti),
                  sd.data->strongly(ti)};
    };
    out.push_back(std::move(c));
  }

  // ---- section 6
  out.push_back(per_ideal("T6.CHAIN.abs",
                          [](Suite const&, D const& d, Subset const& i) {
                            return Eval{d.abs_primary(i), d.weakly(i)};
                          }));
  out.push_back(per_ideal("T6.CHAIN.local",
                          [](Suite const&, D const& d, Subset const&) {
                            return Eval{d.local() && *d.maximal == d.nil,
                                        true};
                          }));
  // The conclusion above is filled per ideal; see the replacement below.
  out.back().eval = [](Suite const& s, std::size_t r, Args const& a) {
    D const& d = s.ring(r);
    return Eval{d.local() && *d.maximal == d.nil, d.weakly(a[0].set)};
  };
  out.push_back(per_ideal("T6.MAXRAD",
                          [](Suite const&, D const& d, Subset const& i) {
                            return Eval{d.weakly(i)
                                            && d.lattice().is_maximal(d.rad(i)),
                                        d.primary(i) && d.abs_primary(i)};
                          }));
  out.push_back(per_ideal("T6.REDUCED",
                          [](Suite const&, D const& d, Subset const& i) {
                            return Eval{d.flags.reduced && i != d.zero
                                            && d.weakly(i),
                                        d.lattice().is_prime(d.rad(i))};
                          }));
  {
    auto regular = [](D const& d, Subset const& i) {
      return d.flags.regular_ring && i != d.zero;
    };
    out.push_back(per_ideal("T6.REGULAR.1to2",
                            [regular](Suite const&, D const& d, Subset const& i) {
                              return Eval{regular(d, i) && d.weakly(i),
                                          d.primary(i)};
                            }));
    out.push_back(per_ideal("T6.REGULAR.2to3",
                            [regular](Suite const&, D const& d, Subset const& i) {
                              return Eval{regular(d, i) && d.primary(i),
                                          d.abs_primary(i)};
                            }));
    out.push_back(per_ideal("T6.REGULAR.3to1",
                            [regular](Suite const&, D const& d, Subset const& i) {
                              return Eval{regular(d, i) && d.abs_primary(i),
                                          d.weakly(i)};
                            }));
  }
  for (bool second : {false, true}) {
    Check c = per_ideal_elements(
        second ? "T6.TRIPLE.b" : "T6.TRIPLE.a", 3,
        [second](Suite const&, D const& d, Subset const& i,
                 std::vector<Element> const& t) {
          Element const x = t[0], y = t[1], z = t[2];
          Eval          e;
          e.hyp = d.ring().strongly_distributive() && d.weakly(i)
                  && is_one_triple_zero(*d.ctx, i, x, y, z);
          if (second) {
            e.hyp = e.hyp && !d.mul(x, z).subset_of(i)
                    && !d.mul(y, z).subset_of(i);
          }
          if (e.hyp) {
            Element const zero = d.ring().zero();
            if (second) {
              e.concl = d.prod(d.mul(y, z), i).contains(zero)
                        && d.prod(d.mul(x, z), i).contains(zero);
            } else {
              e.concl = d.prod(d.mul(x, y), i).contains(zero);
            }
          }
          return e;
        },
        [](Suite const&, D const& d) {
          return d.ring().strongly_distributive();
        });
    out.push_back(std::move(c));
  }
  out.push_back(per_ideal_pair(
      "T6.CAPFAM", [](Suite const&, D const& d, Subset const& i, Subset const& j) {
        return Eval{d.weakly(i) && d.weakly(j) && d.rad(i) == d.rad(j),
                    d.weakly(intersection(i, j))};
      }));
  {
    auto product_ok = [](Suite const& s, D const& d) {
      if (d.entry == nullptr || !d.entry->factors) {
        return false;
      }
      auto const [f1, f2] = *d.entry->factors;
      for (std::size_t f : {f1, f2}) {
        D const& x = s.ring(f);
        if (!x.flags.has_identity || x.flags.hyperfield) {
          return false;
        }
      }
      return true;
    };
    auto nz = [](D const& d, Subset const& i) { return i != d.zero; };
    out.push_back(per_ideal(
        "T6.PRODUCT.1to2",
        [nz](Suite const& s, D const& d, Subset const& i) {
          return Eval{nz(d, i) && d.weakly(i), rectangular_primary(s, d, i)};
        },
        product_ok));
    out.push_back(per_ideal(
        "T6.PRODUCT.2to3",
        [nz](Suite const& s, D const& d, Subset const& i) {
          return Eval{nz(d, i) && rectangular_primary(s, d, i),
                      d.abs_primary(i)};
        },
        product_ok));
    out.push_back(per_ideal(
        "T6.PRODUCT.3to4",
        [nz](Suite const&, D const& d, Subset const& i) {
          return Eval{nz(d, i) && d.abs_primary(i), d.primary(i)};
        },
        product_ok));
    out.push_back(per_ideal(
        "T6.PRODUCT.4to1",
        [nz](Suite const&, D const& d, Subset const& i) {
          return Eval{nz(d, i) && d.primary(i), d.weakly(i)};
        },
        product_ok));
  }
  out.push_back(per_map("T6.HOM.pre", true,
                        [](Suite const&, PoolMap const& p, D const& src,
                           D const& tgt, Subset const& i2) {
                          Subset const pre = p.phi.preimage(i2);
                          return Eval{p.phi.injective()
                                          && p.phi.preserves_nonunits()
                                          && tgt.weakly(i2)
                                          && src.is_proper(pre),
                                      src.weakly(pre)};
                        }));
  out.push_back(per_map("T6.HOM.img", false,
                        [](Suite const&, PoolMap const& p, D const& src,
                           D const& tgt, Subset const& i1) {
                          return Eval{p.phi.surjective()
                                          && p.phi.kernel().subset_of(i1)
                                          && src.weakly(i1),
                                      tgt.weakly(p.phi.image(i1))};
                        }));
  {
    Check c;
    c.id     = "T6.FREE";
    c.params = {{"I", Kind::ideal}, {"J", Kind::ideal}, {"H", Kind::ideal},
                {"K", Kind::ideal}};
    c.applies = always;
    c.each    = [](Suite const& s, std::size_t r, Emit const& emit) {
      D const&    d = s.ring(r);
      auto const& v = s.vars(d);
      for (Subset const& i : v) {
        if (!d.weakly(i)) {
          continue;
        }
        for (Subset const& j : v) {
          for (Subset const& h : v) {
            for (Subset const& k : v) {
              emit({ideal_arg(i), ideal_arg(j), ideal_arg(h), ideal_arg(k)});
            }
          }
        }
      }
    };
    c.eval = [](Suite const& s, std::size_t r, Args const& a) {
      D const&      d   = s.ring(r);
      Subset const& i   = a[0].set;
      Subset const  jh  = d.prod(a[1].set, a[2].set);
      Subset const  jhk = d.prod(jh, a[3].set);
      Eval          e;
      e.hyp = d.weakly(i) && jhk.subset_of(i) && jhk != d.zero
              && free_triple_zero(d, i, a[1].set, a[2].set, a[3].set);
      e.concl = jh.subset_of(i) || a[3].set.subset_of(d.rad(i));
      return e;
    };
    out.push_back(std::move(c));
  }
  {
    Check c = per_ideal_elements(
        "T6.KLEM", 2,
        [](Suite const&, D const&, Subset const&, std::vector<Element> const&) {
          return Eval{};
        });
    c.params.emplace_back("K", Kind::ideal);
    c.each = [](Suite const& s, std::size_t r, Emit const& emit) {
      D const& d = s.ring(r);
      for (Subset const& i : s.vars(d)) {
        if (!d.weakly(i)) {
          continue;
        }
        for (Element x : d.nonunits()) {
          for (Element y : d.nonunits()) {
            for (Subset const& k : s.vars(d)) {
              emit({ideal_arg(i), elem_arg(x), elem_arg(y), ideal_arg(k)});
            }
          }
        }
      }
    };
    c.eval = [](Suite const& s, std::size_t r, Args const& a) {
      D const&      d  = s.ring(r);
      Subset const& i  = a[0].set;
      Element const x  = a[1].value;
      Element const y  = a[2].value;
      Subset const& k  = a[3].set;
      Subset const  xy = d.mul(x, y);
      Eval          e;
      e.hyp = d.weakly(i) && d.prod(xy, k).subset_of(i) && !xy.subset_of(i);
      if (e.hyp) {
        k.for_each([&](Element z) {
          e.hyp = e.hyp && !is_one_triple_zero(*d.ctx, i, x, y, z);
        });
      }
      e.concl = k.subset_of(d.rad(i));
      return e;
    };
    out.push_back(std::move(c));
  }

  std::sort(out.begin(), out.end(),
            [](Check const& a, Check const& b) { return a.id < b.id; });
  return out;
}

nlohmann::json witness_json(Suite const& s, Check const& c, Args const& a) {
  nlohmann::json w = nlohmann::json::object();
  for (std::size_t k = 0; k < c.params.size(); ++k) {
    auto const& [name, kind] = c.params[k];
    switch (kind) {
      case Kind::ideal:
        w[name] = to_string(a[k].set);
        break;
      case Kind::element:
        w[name] = a[k].value;
        break;
      case Kind::map:
        w[name] = s.catalog->pool[a[k].value].label;
        break;
      case Kind::subring:
        w[name] = s.catalog->subrings[a[k].value].label;
        break;
    }
  }
  return w;
}

}  // namespace

struct TheoremSuite::Impl : Suite {};

TheoremSuite::TheoremSuite(Catalog const& catalog, Mode mode,
                           bool require_identity)
    : impl_(std::make_unique<Impl>()) {
  Impl& s            = *impl_;
  s.catalog          = &catalog;
  s.mode             = mode;
  s.require_identity = require_identity;
  for (CatalogEntry const& e : catalog.rings) {
    s.rings.push_back(make_ring_data(e.name, e.ring, &e));
  }
  for (std::size_t r = 0; r < s.rings.size(); ++r) {
    FiniteHyperring const& ring = s.rings[r]->ring();
    if (ring.scalar_identities().empty()) {
      continue;
    }
    if (ring.size() <= 4) {
      MatrixData md{matrix_ring(ring), {}};
      for (Element x = 0; x < ring.size(); ++x) {
        md.diag_nonunit.push_back(!md.m.ring.is_unit(md.m.diag(x)));
      }
      s.matrices.emplace(r, std::move(md));
    }
    if (ring.size() <= kSubsetScanCap) {
      GammaData g;
      g.q    = gamma_star(ring);
      auto q = std::make_shared<FiniteHyperring const>(
          g.q.as_ring(ring.name() + "/gamma*"));
      g.data = make_ring_data(q->name(), q, nullptr);
      s.gammas.emplace(r, std::move(g));
    }
  }
  for (SubringFixture const& f : catalog.subrings) {
    try {
      SubHyperring sub
          = sub_hyperring(s.rings[f.ring]->ring(), f.carrier, f.label);
      auto ptr  = std::make_shared<FiniteHyperring const>(sub.ring);
      auto data = make_ring_data(f.label, ptr, nullptr);
      s.subs.emplace_back(SubData{std::move(sub), std::move(data)});
    } catch (Error const&) {
      s.subs.emplace_back(std::nullopt);
    }
  }
  s.checks = build_checks();
}

TheoremSuite::~TheoremSuite() = default;

Mode TheoremSuite::mode() const noexcept { return impl_->mode; }

SuiteReport TheoremSuite::run(std::vector<std::string> const& only) const {
  Suite const& s = *impl_;
  for (std::string const& f : only) {
    bool const known
        = std::any_of(s.checks.begin(), s.checks.end(),
                      [&](Check const& c) { return theorem_matches(c.id, f); });
    if (!known) {
      throw PreconditionFailed("unknown theorem id: " + f);
    }
  }
  SuiteReport report;
  report.mode = s.mode;
  for (auto const& d : s.rings) {
    if (s.require_identity && !d->flags.has_identity) {
      report.without_identity.push_back(d->name);
    }
  }
  std::sort(report.without_identity.begin(), report.without_identity.end());
  for (Check const& c : s.checks) {
    if (!only.empty()
        && std::none_of(only.begin(), only.end(), [&](std::string const& f) {
             return theorem_matches(c.id, f);
           })) {
      continue;
    }
    for (std::size_t subj = 0; subj < s.subjects(c.scope); ++subj) {
      if (!s.has_identity(c.scope, subj) || !c.applies(s, subj)) {
        continue;
      }
      TheoremVerdict v;
      v.theorem = c.id;
      v.ring    = s.subject_name(c.scope, subj);
      c.each(s, subj, [&](Args const& a) {
        Eval const e = c.eval(s, subj, a);
        if (!e.hyp) {
          return;
        }
        ++v.instances;
        if (!e.concl && v.outcome != Outcome::counterexample) {
          v.outcome = Outcome::counterexample;
          v.witness = witness_json(s, c, a);
        }
      });
      if (v.outcome != Outcome::counterexample) {
        v.outcome = v.instances == 0 ? Outcome::vacuous : Outcome::pass;
      }
      report.results.push_back(std::move(v));
    }
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](TheoremVerdict const& a, TheoremVerdict const& b) {
                     return std::tie(a.theorem, a.ring)
                            < std::tie(b.theorem, b.ring);
                   });
  return report;
}

Replay TheoremSuite::replay(TheoremVerdict const& verdict) const {
  Suite const& s  = *impl_;
  auto const   it = std::find_if(s.checks.begin(), s.checks.end(),
                                 [&](Check const& c) { return c.id == verdict.theorem; });
  if (it == s.checks.end()) {
    throw PreconditionFailed("unknown theorem id: " + verdict.theorem);
  }
  Check const& c = *it;
  std::optional<std::size_t> subj;
  for (std::size_t i = 0; i < s.subjects(c.scope); ++i) {
    if (s.subject_name(c.scope, i) == verdict.ring) {
      subj = i;
    }
  }
  if (!subj) {
    throw PreconditionFailed("unknown subject: " + verdict.ring);
  }
  nlohmann::json const& w = verdict.witness;
  Args                  a;
  for (auto const& [name, kind] : c.params) {
    if (!w.is_object() || !w.contains(name)) {
      throw PreconditionFailed("witness lacks " + name);
    }
    if (kind == Kind::ideal) {
      a.push_back(ideal_arg(parse_subset(w.at(name).get<std::string>())));
    } else {
      a.push_back(elem_arg(w.at(name).get<Element>()));
    }
  }
  Eval const e = c.eval(s, *subj, a);
  return Replay{e.hyp, e.concl};
}

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (Check const& c : build_checks()) {
    ids.push_back(c.id);
  }
  return ids;
}

SuiteReport run_theorem_suite(Catalog const& catalog,
                              std::vector<std::string> const& only, Mode mode,
                              bool require_identity) {
  return TheoremSuite(catalog, mode, require_identity).run(only);
}

nlohmann::json to_json(SuiteReport const& report) {
  nlohmann::json doc;
  doc["mode"]    = to_string(report.mode);
  doc["results"] = nlohmann::json::array();
  for (TheoremVerdict const& v : report.results) {
    doc["results"].push_back({{"theorem", v.theorem},
                              {"ring", v.ring},
                              {"outcome", to_string(v.outcome)},
                              {"witness", v.witness},
                              {"instances", v.instances}});
  }
  return doc;
}

std::string render_table(SuiteReport const& report) {
  struct Row {
    std::size_t rings = 0, pass = 0, vacuous = 0, cex = 0, instances = 0;
  };
  std::map<std::string, Row> rows;
  for (TheoremVerdict const& v : report.results) {
    Row& r = rows[v.theorem];
    ++r.rings;
    r.instances += v.instances;
    switch (v.outcome) {
      case Outcome::pass:
        ++r.pass;
        break;
      case Outcome::vacuous:
        ++r.vacuous;
        break;
      case Outcome::counterexample:
        ++r.cex;
        break;
    }
  }
  std::ostringstream out;
  out << "mode: " << to_string(report.mode) << "\n";
  out << std::left << std::setw(22) << "check" << std::right << std::setw(7)
      << "rings" << std::setw(7) << "pass" << std::setw(9) << "vacuous"
      << std::setw(6) << "cex" << std::setw(12) << "instances" << "\n";
  for (auto const& [id, r] : rows) {
    out << std::left << std::setw(22) << id << std::right << std::setw(7)
        << r.rings << std::setw(7) << r.pass << std::setw(9) << r.vacuous
        << std::setw(6) << r.cex << std::setw(12) << r.instances << "\n";
  }
  std::vector<std::string> all_vacuous;
  for (auto const& [id, r] : rows) {
    if (r.pass == 0 && r.cex == 0) {
      all_vacuous.push_back(id);
    }
  }
  out << "vacuous on every ring:";
  if (all_vacuous.empty()) {
    out << " none";
  }
  for (auto const& id : all_vacuous) {
    out << " " << id;
  }
  out << "\n";
  out << "skipped, no identity (" << report.without_identity.size() << "):";
  for (auto const& name : report.without_identity) {
    out << " " << name;
  }
  out << "\n";
  out << "counterexamples: " << report.counterexamples() << "\n";
  for (TheoremVerdict const& v : report.results) {
    if (v.outcome == Outcome::counterexample) {
      out << "  " << v.theorem << " on " << v.ring << ": "
          << canonical_dump(v.witness) << "\n";
    }
  }
  return out.str();
}

std::vector<SensitivityRow> quantifier_sensitivity(Catalog const& catalog) {
  struct Cls {
    char const* name;
    Domain      stated;
    std::function<bool(ClassifyContext const&, Subset const&, Domain)> f;
  };
  std::vector<Cls> const classes{
      {"prime", Domain::all,
       [](auto const& c, auto const& i, Domain d) {
         return basic_classes(c, i, d).prime.holds;
       }},
      {"primary", Domain::all,
       [](auto const& c, auto const& i, Domain d) {
         return basic_classes(c, i, d).primary.holds;
       }},
      {"two_absorbing", Domain::all,
       [](auto const& c, auto const& i, Domain d) {
         return two_absorbing_classes(c, i, d).two_absorbing.holds;
       }},
      {"two_absorbing_primary", Domain::all,
       [](auto const& c, auto const& i, Domain d) {
         return two_absorbing_classes(c, i, d).two_absorbing_primary.holds;
       }},
      {"one_abs_prime", Domain::nonunits,
       [](auto const& c, auto const& i, Domain d) {
         return one_absorbing_prime(c, i, d).holds;
       }},
      {"one_abs_primary", Domain::nonunits,
       [](auto const& c, auto const& i, Domain d) {
         return one_absorbing_primary(c, i, d).holds;
       }},
      {"strongly_one_abs_primary", Domain::nonunits,
       [](auto const& c, auto const& i, Domain d) {
         return strongly_one_absorbing_primary(c, i, d).holds;
       }},
      {"weakly_one_abs_primary", Domain::nonunits,
       [](auto const& c, auto const& i, Domain d) {
         return weakly_one_absorbing_primary(c, i, d).holds;
       }},
  };
  std::vector<SensitivityRow> rows;
  for (Cls const& c : classes) {
    rows.push_back(SensitivityRow{
        c.name, c.stated == Domain::all ? "all" : "nonunits", 0, 0, ""});
  }
  for (CatalogEntry const& e : catalog.rings) {
    ClassifyContext const ctx(e.ring);
    for (Hyperideal const& h : ctx.lattice().proper()) {
      for (std::size_t k = 0; k < classes.size(); ++k) {
        Domain const other = classes[k].stated == Domain::all
                                 ? Domain::nonunits
                                 : Domain::all;
        bool const a = classes[k].f(ctx, h.members(), classes[k].stated);
        bool const b = classes[k].f(ctx, h.members(), other);
        ++rows[k].ideals;
        if (a != b) {
          if (rows[k].changed++ == 0) {
            rows[k].example = e.name + ":{" + to_string(h.members()) + "}";
          }
        }
      }
    }
  }
  return rows;
}

std::string render_sensitivity(std::vector<SensitivityRow> const& rows) {
  std::ostringstream out;
  out << "quantifier sensitivity (verdict changes when the element domain is "
         "swapped):\n";
  for (SensitivityRow const& r : rows) {
    out << "  " << std::left << std::setw(26) << r.class_name
        << "stated=" << std::setw(9) << r.stated_domain << std::right
        << std::setw(5) << r.changed << "/" << r.ideals;
    if (!r.example.empty()) {
      out << "  e.g. " << r.example;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace hyperring
