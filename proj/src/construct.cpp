#include "hyperring/construct.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace hyperring {

namespace {

std::string join(std::vector<long> const& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i ? "," : "") << values[i];
  }
  return out.str();
}

// Union-find over the carrier.
struct Partition {
  std::vector<std::size_t> parent;

  explicit Partition(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Classes ordered by least member, plus the element -> class map.
  std::pair<std::vector<Subset>, std::vector<Element>> classes() {
    std::size_t const    n = parent.size();
    std::vector<Element> label(n, n);
    std::vector<Subset>  out;
    std::vector<Element> projection(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t const root = find(x);
      if (label[root] == n) {
        label[root] = out.size();
        out.emplace_back();
      }
      out[label[root]].insert(x);
      projection[x] = label[root];
    }
    return {out, projection};
  }
};

}  // namespace

std::string zn_name(std::size_t n, std::vector<long> const& a) {
  return "Z" + std::to_string(n) + "A{" + join(a) + "}";
}

FiniteHyperring zn_template(std::size_t n, std::vector<long> const& a) {
  if (n == 0 || n > Subset::kCapacity) {
    throw PreconditionFailed("template modulus out of range");
  }
  if (a.empty()) {
    throw PreconditionFailed("template multiplier set is empty");
  }
  for (long v : a) {
    if (v <= 0) {
      throw PreconditionFailed("template multipliers must be positive");
    }
  }
  std::vector<long> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  RawTables raw;
  raw.name = zn_name(n, sorted);
  raw.n    = n;
  raw.zero = 0;
  raw.add.assign(n, std::vector<long>(n));
  raw.mul.assign(n, std::vector<Subset>(n));
  auto const m = static_cast<long>(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto const lx = static_cast<long>(x);
      auto const ly = static_cast<long>(y);
      raw.add[x][y] = (lx + ly) % m;
      for (long v : sorted) {
        raw.mul[x][y].insert(static_cast<Element>(lx * (v % m) % m * ly % m));
      }
    }
  }
  return validate_hyperring(raw);
}

FiniteHyperring product_ring(FiniteHyperring const& r1,
                             FiniteHyperring const& r2, std::size_t cap) {
  std::size_t const n1 = r1.size();
  std::size_t const n2 = r2.size();
  if (n1 * n2 > cap) {
    throw CapExceeded("product carrier " + std::to_string(n1 * n2)
                      + " exceeds cap " + std::to_string(cap));
  }
  std::size_t const n = n1 * n2;
  RawTables         raw;
  raw.name = r1.name() + "x" + r2.name();
  raw.n    = n;
  raw.zero = r1.zero() * n2 + r2.zero();
  raw.add.assign(n, std::vector<long>(n));
  raw.mul.assign(n, std::vector<Subset>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      Element const a = p / n2, b = p % n2, c = q / n2, d = q % n2;
      raw.add[p][q] = static_cast<long>(r1.add(a, c) * n2 + r2.add(b, d));
      Subset& cell  = raw.mul[p][q];
      r1.mul(a, c).for_each([&](Element u) {
        r2.mul(b, d).for_each([&](Element v) { cell.insert(u * n2 + v); });
      });
    }
  }
  return validate_hyperring(raw);
}

Quotient quotient_ring(FiniteHyperring const& ring, Subset const& j) {
  if (!is_hyperideal(ring, j)) {
    throw PreconditionFailed("quotient by a subset that is not a hyperideal");
  }
  if (j == ring.carrier()) {
    throw NotProper("quotient by the whole ring");
  }
  std::size_t const n = ring.size();
  Partition         cosets(n);
  for (Element a = 0; a < n; ++a) {
    j.for_each([&](Element x) { cosets.unite(a, ring.add(a, x)); });
  }
  auto [classes, projection] = cosets.classes();
  std::size_t const k        = classes.size();

  auto project = [&](Subset const& s) {
    Subset out;
    s.for_each([&](Element x) { out.insert(projection[x]); });
    return out;
  };

  RawTables raw;
  raw.name = ring.name() + "/{" + to_string(j) + "}";
  raw.n    = k;
  raw.zero = projection[ring.zero()];
  raw.add.assign(k, std::vector<long>(k));
  raw.mul.assign(k, std::vector<Subset>(k));
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      Element const a = classes[p].front();
      Element const b = classes[q].front();
      raw.add[p][q]   = static_cast<long>(projection[ring.add(a, b)]);
      raw.mul[p][q]   = project(ring.mul(a, b));
      classes[p].for_each([&](Element x) {
        classes[q].for_each([&](Element y) {
          if (project(ring.mul(x, y)) != raw.mul[p][q]) {
            std::ostringstream msg;
            msg << "coset product depends on representatives: " << a << "," << b
                << " versus " << x << "," << y;
            throw IllDefinedQuotient(msg.str());
          }
        });
      });
    }
  }
  Quotient out{validate_hyperring(raw), classes, projection};
  return out;
}

Element MatrixRing::encode(std::array<Element, 4> const& e) const {
  return ((e[0] * base_size + e[1]) * base_size + e[2]) * base_size + e[3];
}

std::array<Element, 4> MatrixRing::decode(Element m) const {
  std::array<Element, 4> e{};
  for (std::size_t i = 4; i-- > 0;) {
    e[i] = m % base_size;
    m /= base_size;
  }
  return e;
}

Element MatrixRing::diag(Element x) const {
  return encode({x, base_zero, base_zero, base_zero});
}

Subset MatrixRing::matrices_over(Subset const& ideal) const {
  Subset out;
  for (Element m = 0; m < ring.size(); ++m) {
    auto const e = decode(m);
    if (std::all_of(e.begin(), e.end(),
                    [&](Element x) { return ideal.contains(x); })) {
      out.insert(m);
    }
  }
  return out;
}

MatrixRing matrix_ring(FiniteHyperring const& base, std::size_t k) {
  if (k != 2) {
    throw CapExceeded("matrix order other than 2 is not supported");
  }
  if (base.size() > 4) {
    throw CapExceeded("matrix base ring larger than 4 elements");
  }
  std::size_t const b = base.size();
  std::size_t const n = b * b * b * b;

  // A shell with the encoding fields, used before the ring exists.
  struct Codec {
    std::size_t b;
    Element     enc(std::array<Element, 4> const& e) const {
      return ((e[0] * b + e[1]) * b + e[2]) * b + e[3];
    }
    std::array<Element, 4> dec(Element m) const {
      std::array<Element, 4> e{};
      for (std::size_t i = 4; i-- > 0;) {
        e[i] = m % b;
        m /= b;
      }
      return e;
    }
  } const codec{b};

  RawTables raw;
  raw.name = "M2(" + base.name() + ")";
  raw.n    = n;
  raw.zero = codec.enc({base.zero(), base.zero(), base.zero(), base.zero()});
  raw.add.assign(n, std::vector<long>(n));
  raw.mul.assign(n, std::vector<Subset>(n));
  for (Element p = 0; p < n; ++p) {
    auto const x = codec.dec(p);
    for (Element q = 0; q < n; ++q) {
      auto const             y = codec.dec(q);
      std::array<Element, 4> s{};
      for (std::size_t i = 0; i < 4; ++i) {
        s[i] = base.add(x[i], y[i]);
      }
      raw.add[p][q] = static_cast<long>(codec.enc(s));

      std::array<Subset, 4> entry;
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
          entry[r * 2 + c] = base.sum(base.mul(x[r * 2], y[c]),
                                      base.mul(x[r * 2 + 1], y[2 + c]));
        }
      }
      Subset& cell = raw.mul[p][q];
      entry[0].for_each([&](Element e0) {
        entry[1].for_each([&](Element e1) {
          entry[2].for_each([&](Element e2) {
            entry[3].for_each(
                [&](Element e3) { cell.insert(codec.enc({e0, e1, e2, e3})); });
          });
        });
      });
    }
  }
  FiniteHyperring ring = n <= kFullValidationCap
                             ? validate_hyperring(raw)
                             : validate_hyperring_sampled(raw, kMatrixSamples);
  return MatrixRing{std::move(ring), b, base.zero()};
}

std::optional<std::string>
ordinary_ring_violation(std::vector<std::vector<Element>> const& add,
                        std::vector<std::vector<Element>> const& mul,
                        Element                                  zero) {
  std::size_t const n = add.size();
  for (Element a = 0; a < n; ++a) {
    if (add[a][zero] != a) {
      return "additive identity fails at " + std::to_string(a);
    }
    bool has_inverse = false;
    for (Element b = 0; b < n; ++b) {
      has_inverse = has_inverse || add[a][b] == zero;
      if (add[a][b] != add[b][a]) {
        return "addition not commutative at " + std::to_string(a) + ","
               + std::to_string(b);
      }
    }
    if (!has_inverse) {
      return "no additive inverse for " + std::to_string(a);
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        std::string const at = " at " + std::to_string(a) + ","
                               + std::to_string(b) + "," + std::to_string(c);
        if (add[add[a][b]][c] != add[a][add[b][c]]) {
          return "addition not associative" + at;
        }
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          return "multiplication not associative" + at;
        }
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) {
          return "left distributivity fails" + at;
        }
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]) {
          return "right distributivity fails" + at;
        }
      }
    }
  }
  return std::nullopt;
}

FiniteHyperring FundamentalQuotient::as_ring(std::string const& name) const {
  std::size_t const k = size();
  RawTables         raw;
  raw.name = name;
  raw.n    = k;
  raw.zero = zero;
  raw.add.assign(k, std::vector<long>(k));
  raw.mul.assign(k, std::vector<Subset>(k));
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      raw.add[p][q] = static_cast<long>(class_add[p][q]);
      raw.mul[p][q] = Subset::singleton(class_mul[p][q]);
    }
  }
  return validate_hyperring(raw);
}

FundamentalQuotient gamma_star(FiniteHyperring const& ring, std::size_t cap) {
  std::size_t const n = ring.size();
  if (n > cap) {
    throw CapExceeded("fundamental relation limited to " + std::to_string(cap)
                      + " elements");
  }
  // Finite sums of finite products: close the product family under adding one
  // more product at a time.
  std::vector<Subset> const  products = class_c(ring).family;
  std::unordered_set<Subset> sums(products.begin(), products.end());
  std::vector<Subset>        frontier(products.begin(), products.end());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset const& u : frontier) {
      for (Subset const& p : products) {
        Subset s = ring.sum(u, p);
        if (sums.insert(s).second) {
          next.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }

  Partition relation(n);
  for (Subset const& u : sums) {
    Element const first = u.front();
    u.for_each([&](Element x) { relation.unite(first, x); });
  }

  FundamentalQuotient out;
  std::tie(out.classes, out.projection) = relation.classes();
  out.sum_family_size = sums.size();
  out.zero            = out.projection[ring.zero()];
  std::size_t const k = out.size();
  out.class_add.assign(k, std::vector<Element>(k));
  out.class_mul.assign(k, std::vector<Element>(k));
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      Element const a   = out.classes[p].front();
      Element const b   = out.classes[q].front();
      out.class_add[p][q] = out.projection[ring.add(a, b)];
      out.class_mul[p][q] = out.projection[ring.mul(a, b).front()];
      out.classes[p].for_each([&](Element x) {
        out.classes[q].for_each([&](Element y) {
          if (out.projection[ring.add(x, y)] != out.class_add[p][q]) {
            throw IllDefinedQuotient("induced sum depends on representatives");
          }
          ring.mul(x, y).for_each([&](Element c) {
            if (out.projection[c] != out.class_mul[p][q]) {
              throw IllDefinedQuotient(
                  "induced product depends on representatives");
            }
          });
        });
      });
    }
  }
  if (auto bad = ordinary_ring_violation(out.class_add, out.class_mul, out.zero)) {
    throw IllDefinedQuotient("fundamental quotient is not a ring: " + *bad);
  }
  return out;
}

Subset GoodHomomorphism::image(Subset const& s) const {
  Subset out;
  s.for_each([&](Element x) { out.insert(map[x]); });
  return out;
}

Subset GoodHomomorphism::preimage(Subset const& s) const {
  Subset out;
  for (Element x = 0; x < map.size(); ++x) {
    if (s.contains(map[x])) {
      out.insert(x);
    }
  }
  return out;
}

Subset GoodHomomorphism::kernel() const {
  return preimage(Subset::singleton(target->zero()));
}

bool GoodHomomorphism::surjective() const {
  return image(source->carrier()) == target->carrier();
}

bool GoodHomomorphism::injective() const {
  return image(source->carrier()).size() == source->size();
}

bool GoodHomomorphism::preserves_nonunits() const {
  return image(source->nonunits()).subset_of(target->nonunits());
}

GoodHomomorphism check_good_homomorphism(RingPtr source, RingPtr target,
                                         std::vector<Element> map,
                                         std::string          label) {
  std::size_t const n = source->size();
  if (map.size() != n) {
    throw PreconditionFailed("map is not total on the source carrier");
  }
  for (Element v : map) {
    if (v >= target->size()) {
      throw PreconditionFailed("map value outside the target carrier");
    }
  }
  GoodHomomorphism phi{std::move(source), std::move(target), std::move(map),
                       std::move(label)};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (phi(phi.source->add(x, y)) != phi.target->add(phi(x), phi(y))) {
        throw NotHomomorphism(x, y, "map does not preserve addition");
      }
      if (phi.image(phi.source->mul(x, y)) != phi.target->mul(phi(x), phi(y))) {
        throw NotHomomorphism(x, y, "map does not preserve products as sets");
      }
    }
  }
  return phi;
}

Hyperideal preimage_ideal(GoodHomomorphism const& phi, Subset const& ideal) {
  return Hyperideal(*phi.source, phi.preimage(ideal));
}

Hyperideal image_ideal(GoodHomomorphism const& phi, Subset const& ideal) {
  if (!phi.surjective()) {
    throw HypothesisUnmet("image of an ideal needs a surjective map");
  }
  if (!phi.kernel().subset_of(ideal)) {
    throw HypothesisUnmet("image of an ideal needs the kernel inside it");
  }
  return Hyperideal(*phi.target, phi.image(ideal));
}

Subset SubHyperring::restrict(Subset const& ambient) const {
  Subset out;
  for (Element i = 0; i < embedding.size(); ++i) {
    if (ambient.contains(embedding[i])) {
      out.insert(i);
    }
  }
  return out;
}

SubHyperring sub_hyperring(FiniteHyperring const& ring, Subset const& carrier,
                           std::string const& name) {
  if (!carrier.contains(ring.zero())) {
    throw PreconditionFailed("subhyperring must contain zero");
  }
  std::vector<Element> const members = carrier.members();
  std::vector<Element>       local(ring.size(), ring.size());
  for (Element i = 0; i < members.size(); ++i) {
    local[members[i]] = i;
  }
  std::size_t const k = members.size();
  RawTables         raw;
  raw.name = name;
  raw.n    = k;
  raw.zero = local[ring.zero()];
  raw.add.assign(k, std::vector<long>(k));
  raw.mul.assign(k, std::vector<Subset>(k));
  for (Element i = 0; i < k; ++i) {
    for (Element j = 0; j < k; ++j) {
      Element const d = ring.sub(members[i], members[j]);
      Element const s = ring.add(members[i], members[j]);
      Subset const& m = ring.mul(members[i], members[j]);
      if (!carrier.contains(d) || !m.subset_of(carrier)) {
        throw PreconditionFailed("subset is not closed under - and o");
      }
      raw.add[i][j] = static_cast<long>(local[s]);
      m.for_each([&](Element x) { raw.mul[i][j].insert(local[x]); });
    }
  }
  return SubHyperring{validate_hyperring(raw), members, carrier};
}

}  // namespace hyperring
