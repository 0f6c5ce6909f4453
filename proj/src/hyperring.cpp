#include "hyperring/hyperring.hpp"

#include <random>
#include <set>
#include <sstream>

namespace hyperring {

AxiomViolation::AxiomViolation(std::string                axiom,
                               std::array<std::size_t, 3> witness,
                               std::string const&         detail)
    : Error("axiom violation [" + axiom + "] at (" + std::to_string(witness[0])
            + "," + std::to_string(witness[1]) + ","
            + std::to_string(witness[2]) + "): " + detail),
      axiom_(std::move(axiom)),
      witness_(witness) {}

namespace {

  // Flat view over raw tables used by the axiom scans before a ring exists.
  struct TableView {
    std::size_t          n;
    Element              zero;
    std::vector<Element> add;
    std::vector<Element> neg;
    std::vector<Subset>  mul;

    Element plus(Element a, Element b) const { return add[a * n + b]; }
    Subset const& times(Element a, Element b) const { return mul[a * n + b]; }

    Subset times(Subset const& a, Subset const& b) const {
      Subset out;
      a.for_each([&](Element x) {
        b.for_each([&](Element y) { out |= times(x, y); });
      });
      return out;
    }
    Subset plus(Subset const& a, Subset const& b) const {
      Subset out;
      a.for_each([&](Element x) {
        b.for_each([&](Element y) { out.insert(plus(x, y)); });
      });
      return out;
    }
    Subset minus(Subset const& a) const {
      Subset out;
      a.for_each([&](Element x) { out.insert(neg[x]); });
      return out;
    }
  };

  TableView make_view(RawTables const& raw) {
    TableView v{raw.n, raw.zero, {}, {}, {}};
    v.add.resize(raw.n * raw.n);
    v.mul.resize(raw.n * raw.n);
    for (std::size_t a = 0; a < raw.n; ++a) {
      for (std::size_t b = 0; b < raw.n; ++b) {
        v.add[a * raw.n + b] = static_cast<Element>(raw.add[a][b]);
        v.mul[a * raw.n + b] = raw.mul[a][b];
      }
    }
    return v;
  }

  std::string show(Subset const& s) {
    return "{" + to_string(s) + "}";
  }

  using Triple = std::array<std::size_t, 3>;

  std::optional<AxiomReport> check_group(TableView& v) {
    std::size_t const n = v.n;
    for (Element a = 0; a < n; ++a) {
      if (v.plus(v.zero, a) != a || v.plus(a, v.zero) != a) {
        return AxiomReport{"additive-identity", Triple{a, v.zero, 0},
                           "zero is not neutral for " + std::to_string(a)};
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (v.plus(a, b) != v.plus(b, a)) {
          return AxiomReport{"additive-commutativity", Triple{a, b, 0},
                             "a+b != b+a"};
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (v.plus(v.plus(a, b), c) != v.plus(a, v.plus(b, c))) {
            return AxiomReport{"additive-associativity", Triple{a, b, c},
                               "(a+b)+c != a+(b+c)"};
          }
        }
      }
    }
    v.neg.assign(n, n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (v.plus(a, b) == v.zero) {
          v.neg[a] = b;
          break;
        }
      }
      if (v.neg[a] == n) {
        return AxiomReport{"additive-inverse", Triple{a, 0, 0},
                           "no additive inverse"};
      }
    }
    return std::nullopt;
  }

  struct TripleResult {
    std::optional<AxiomReport> violation;
    bool                       equal_left  = true;
    bool                       equal_right = true;
  };

  // Axioms (i)-(iii) at one triple. Equality flags track strong
  // distributivity.
  TripleResult check_triple(TableView const& v, Element a, Element b,
                            Element c) {
    TripleResult r;
    Subset const sa = Subset::singleton(a);
    Subset const sc = Subset::singleton(c);
    Subset const left  = v.times(sa, v.times(b, c));
    Subset const right = v.times(v.times(a, b), sc);
    if (left != right) {
      r.violation = AxiomReport{"mul-associativity", Triple{a, b, c},
                                "a(bc)=" + show(left) + " but (ab)c="
                                    + show(right)};
      return r;
    }
    Subset const lhs_l = v.times(a, v.plus(b, c));
    Subset const rhs_l = v.plus(v.times(a, b), v.times(a, c));
    if (!lhs_l.subset_of(rhs_l)) {
      r.violation = AxiomReport{"left-distributivity", Triple{a, b, c},
                                "a(b+c)=" + show(lhs_l) + " not in ab+ac="
                                    + show(rhs_l)};
      return r;
    }
    Subset const lhs_r = v.times(v.plus(b, c), a);
    Subset const rhs_r = v.plus(v.times(b, a), v.times(c, a));
    if (!lhs_r.subset_of(rhs_r)) {
      r.violation = AxiomReport{"right-distributivity", Triple{a, b, c},
                                "(b+c)a=" + show(lhs_r) + " not in ba+ca="
                                    + show(rhs_r)};
      return r;
    }
    r.equal_left  = lhs_l == rhs_l;
    r.equal_right = lhs_r == rhs_r;
    return r;
  }

  std::optional<AxiomReport> check_sign(TableView const& v, Element a,
                                        Element b) {
    Subset const p1 = v.times(a, v.neg[b]);
    Subset const p2 = v.times(v.neg[a], b);
    Subset const p3 = v.minus(v.times(a, b));
    if (p1 != p2 || p2 != p3) {
      return AxiomReport{"sign-compatibility", Triple{a, b, 0},
                         "a(-b)=" + show(p1) + ", (-a)b=" + show(p2)
                             + ", -(ab)=" + show(p3)};
    }
    return std::nullopt;
  }

  struct Scan {
    std::optional<AxiomReport> violation;
    bool                       strongly_distributive = true;
  };

  Scan full_scan(TableView const& v) {
    Scan        s;
    std::size_t n = v.n;
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          auto r = check_triple(v, a, b, c);
          if (r.violation) {
            s.violation = r.violation;
            return s;
          }
          s.strongly_distributive
              = s.strongly_distributive && r.equal_left && r.equal_right;
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (auto bad = check_sign(v, a, b)) {
          s.violation = bad;
          return s;
        }
      }
    }
    return s;
  }

  Scan sampled_scan(TableView const& v, std::size_t samples) {
    Scan                                  s;
    std::mt19937_64                       gen(0x5eedULL);
    std::uniform_int_distribution<Element> pick(0, v.n - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      Element a = pick(gen), b = pick(gen), c = pick(gen);
      auto    r = check_triple(v, a, b, c);
      if (r.violation) {
        s.violation = r.violation;
        return s;
      }
      s.strongly_distributive
          = s.strongly_distributive && r.equal_left && r.equal_right;
      if (auto bad = check_sign(v, a, b)) {
        s.violation = bad;
        return s;
      }
    }
    return s;
  }

}  // namespace

void check_shape(RawTables const& raw) {
  std::size_t const n = raw.n;
  if (n == 0) {
    throw MalformedTable("carrier must have at least one element");
  }
  if (n > Subset::kCapacity) {
    throw CapExceeded("carrier of " + std::to_string(n)
                      + " elements exceeds the subset capacity");
  }
  if (raw.zero >= n) {
    throw MalformedTable("zero index " + std::to_string(raw.zero)
                         + " out of range");
  }
  if (raw.add.size() != n || raw.mul.size() != n) {
    throw MalformedTable("tables must have " + std::to_string(n) + " rows");
  }
  Subset const all = Subset::full(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw.add[i].size() != n || raw.mul[i].size() != n) {
      throw MalformedTable("row " + std::to_string(i) + " is ragged");
    }
    for (std::size_t j = 0; j < n; ++j) {
      long const v = raw.add[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw MalformedTable("add[" + std::to_string(i) + "]["
                             + std::to_string(j) + "] out of range");
      }
      Subset const& cell = raw.mul[i][j];
      if (cell.empty()) {
        throw MalformedTable("mul[" + std::to_string(i) + "]["
                             + std::to_string(j) + "] is empty");
      }
      if (!cell.subset_of(all)) {
        throw MalformedTable("mul[" + std::to_string(i) + "]["
                             + std::to_string(j) + "] out of range");
      }
    }
  }
}

std::optional<AxiomReport> check_axioms(RawTables const& raw) {
  TableView v = make_view(raw);
  if (auto bad = check_group(v)) {
    return bad;
  }
  return full_scan(v).violation;
}

FiniteHyperring build_hyperring(RawTables const& raw, bool sampled,
                                std::size_t samples) {
  check_shape(raw);
  if (!sampled && raw.n > kFullValidationCap) {
    throw CapExceeded("full validation is capped at "
                      + std::to_string(kFullValidationCap) + " elements");
  }
  TableView v = make_view(raw);
  if (auto bad = check_group(v)) {
    throw AxiomViolation(bad->axiom, bad->witness, bad->detail);
  }
  Scan const scan = sampled ? sampled_scan(v, samples) : full_scan(v);
  if (scan.violation) {
    throw AxiomViolation(scan.violation->axiom, scan.violation->witness,
                         scan.violation->detail);
  }

  FiniteHyperring r;
  r.name_                  = raw.name;
  r.n_                     = raw.n;
  r.zero_                  = raw.zero;
  r.add_                   = std::move(v.add);
  r.neg_                   = std::move(v.neg);
  r.mul_                   = std::move(v.mul);
  r.strongly_distributive_ = scan.strongly_distributive;

  std::size_t const n    = r.n_;
  Subset const      zset = Subset::singleton(r.zero_);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (r.mul(a, b) != r.mul(b, a)) {
        r.commutative_ = false;
      }
    }
    if (r.mul(r.zero_, a) != zset || r.mul(a, r.zero_) != zset) {
      r.zero_annihilates_ = false;
    }
  }
  for (Element e = 0; e < n; ++e) {
    bool identity = true;
    bool scalar   = true;
    for (Element a = 0; a < n && identity; ++a) {
      Subset const& ae = r.mul(a, e);
      identity         = ae.contains(a);
      scalar           = scalar && ae == Subset::singleton(a);
    }
    if (identity) {
      r.identities_.insert(e);
      if (scalar) {
        r.scalar_identities_.insert(e);
      }
    }
  }
  if (!r.identities_.empty()) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (r.mul(x, y).intersects(r.identities_)) {
          r.units_.insert(x);
          break;
        }
      }
    }
  }
  return r;
}

FiniteHyperring validate_hyperring(RawTables const& raw) {
  return build_hyperring(raw, false, 0);
}

FiniteHyperring validate_hyperring_sampled(RawTables const& raw,
                                           std::size_t      samples) {
  return build_hyperring(raw, true, samples);
}

RawTables to_raw(FiniteHyperring const& ring) {
  RawTables raw;
  raw.name = ring.name();
  raw.n    = ring.size();
  raw.zero = ring.zero();
  raw.add.assign(raw.n, std::vector<long>(raw.n));
  raw.mul.assign(raw.n, std::vector<Subset>(raw.n));
  for (Element a = 0; a < raw.n; ++a) {
    for (Element b = 0; b < raw.n; ++b) {
      raw.add[a][b] = static_cast<long>(ring.add(a, b));
      raw.mul[a][b] = ring.mul(a, b);
    }
  }
  return raw;
}

std::vector<std::vector<Element>> FiniteHyperring::add_table() const {
  std::vector<std::vector<Element>> t(n_, std::vector<Element>(n_));
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      t[a][b] = add(a, b);
    }
  }
  return t;
}

std::vector<std::vector<Subset>> FiniteHyperring::mul_table() const {
  std::vector<std::vector<Subset>> t(n_, std::vector<Subset>(n_));
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      t[a][b] = mul(a, b);
    }
  }
  return t;
}

Subset FiniteHyperring::product(Subset const& a, Subset const& b) const {
  Subset out;
  a.for_each([&](Element x) {
    b.for_each([&](Element y) { out |= mul(x, y); });
  });
  return out;
}

Subset FiniteHyperring::product(Subset const& a, Element b) const {
  Subset out;
  a.for_each([&](Element x) { out |= mul(x, b); });
  return out;
}

Subset FiniteHyperring::product(Element a, Subset const& b) const {
  Subset out;
  b.for_each([&](Element y) { out |= mul(a, y); });
  return out;
}

Subset FiniteHyperring::product(std::span<Subset const> operands) const {
  if (operands.empty()) {
    throw EmptyOperand("set product needs at least one operand");
  }
  for (auto const& op : operands) {
    if (op.empty()) {
      throw EmptyOperand("set product operand is empty");
    }
    if (!op.subset_of(carrier())) {
      throw EmptyOperand("set product operand leaves the carrier");
    }
  }
  Subset acc = operands.front();
  for (std::size_t i = 1; i < operands.size(); ++i) {
    acc = product(acc, operands[i]);
  }
  return acc;
}

Subset FiniteHyperring::sum(Subset const& a, Subset const& b) const {
  Subset out;
  a.for_each([&](Element x) {
    b.for_each([&](Element y) { out.insert(add(x, y)); });
  });
  return out;
}

Subset FiniteHyperring::negate(Subset const& a) const {
  Subset out;
  a.for_each([&](Element x) { out.insert(neg(x)); });
  return out;
}

Subset FiniteHyperring::power(Element r, std::size_t k) const {
  Subset acc = Subset::singleton(r);
  for (std::size_t i = 1; i < k; ++i) {
    acc = product(acc, r);
  }
  return acc;
}

std::vector<Subset> power_sequence(FiniteHyperring const& ring, Element r) {
  std::vector<Subset> seq;
  std::set<Subset>    seen;
  Subset              cur = Subset::singleton(r);
  while (seen.insert(cur).second) {
    seq.push_back(cur);
    cur = ring.product(cur, r);
  }
  return seq;
}

bool is_nilpotent(FiniteHyperring const& ring, Element r) {
  Subset const zero = Subset::singleton(ring.zero());
  for (auto const& p : power_sequence(ring, r)) {
    if (p == zero) {
      return true;
    }
  }
  return false;
}

bool is_regular(FiniteHyperring const& ring, Element r) {
  Subset const square = ring.mul(r, r);
  for (Element x = 0; x < ring.size(); ++x) {
    if (ring.product(square, x).contains(r)) {
      return true;
    }
  }
  return false;
}

namespace {
  void require_nonzero_nonunit(FiniteHyperring const& ring, Element x,
                               char const* what) {
    if (x >= ring.size()) {
      throw NotApplicable(std::string(what) + ": element out of range");
    }
    if (x == ring.zero()) {
      throw NotApplicable(std::string(what) + " is defined for nonzero "
                                              "elements only");
    }
    if (ring.is_unit(x)) {
      throw NotApplicable(std::string(what) + " is defined for nonunit "
                                              "elements only");
    }
  }
}  // namespace

bool is_irreducible(FiniteHyperring const& ring, Element x) {
  require_nonzero_nonunit(ring, x, "irreducibility");
  for (Element a = 0; a < ring.size(); ++a) {
    for (Element b = 0; b < ring.size(); ++b) {
      if (ring.mul(a, b).contains(x) && !ring.is_unit(a) && !ring.is_unit(b)) {
        return false;
      }
    }
  }
  return true;
}

bool is_prime_element(FiniteHyperring const& ring, Element x) {
  require_nonzero_nonunit(ring, x, "prime element");
  std::size_t const n = ring.size();
  // Elements of the form "in x o r for some r".
  Subset const multiples = ring.product(x, ring.carrier());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (multiples.contains(a) || multiples.contains(b)) {
        continue;
      }
      Subset const& ab = ring.mul(a, b);
      for (Element r = 0; r < n; ++r) {
        if (ab.subset_of(ring.mul(x, r))) {
          return false;
        }
      }
    }
  }
  return true;
}

ElementProfile element_profile(FiniteHyperring const& ring, Element x) {
  if (x >= ring.size()) {
    throw NotApplicable("element " + std::to_string(x) + " out of range");
  }
  ElementProfile p;
  p.index              = x;
  p.is_unit            = ring.is_unit(x);
  p.is_identity        = ring.identities().contains(x);
  p.is_scalar_identity = ring.scalar_identities().contains(x);
  p.is_regular         = is_regular(ring, x);
  p.is_nilpotent       = is_nilpotent(ring, x);
  if (x != ring.zero() && !p.is_unit) {
    p.is_irreducible   = is_irreducible(ring, x);
    p.is_prime_element = is_prime_element(ring, x);
  }
  return p;
}

}  // namespace hyperring
