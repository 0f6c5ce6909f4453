#include "hyperring/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hyperring {

IdealCheck is_hyperideal(FiniteHyperring const& ring, Subset const& s) {
  IdealCheck check;
  if (s.empty() || !s.subset_of(ring.carrier())) {
    check.ok      = false;
    check.failure = IdealCheck::Failure::empty;
    return check;
  }
  std::size_t const n = ring.size();
  for (Element x : s.members()) {
    for (Element r = 0; r < n; ++r) {
      if (!ring.mul(r, x).subset_of(s) || !ring.mul(x, r).subset_of(s)) {
        check.ok      = false;
        check.failure = IdealCheck::Failure::absorption;
        check.first   = r;
        check.second  = x;
        return check;
      }
    }
  }
  for (Element a : s.members()) {
    for (Element b : s.members()) {
      if (!s.contains(ring.sub(a, b))) {
        check.ok      = false;
        check.failure = IdealCheck::Failure::subtraction;
        check.first   = a;
        check.second  = b;
        return check;
      }
    }
  }
  return check;
}

Hyperideal::Hyperideal(FiniteHyperring const& ring, Subset members)
    : members_(members), proper_(members != ring.carrier()) {
  if (!is_hyperideal(ring, members)) {
    throw PreconditionFailed("{" + to_string(members)
                             + "} is not a hyperideal of " + ring.name());
  }
}

Hyperideal generate_hyperideal(FiniteHyperring const& ring,
                               Subset const&          seed) {
  std::size_t const n = ring.size();
  Subset            s = seed & ring.carrier();
  s.insert(ring.zero());
  std::deque<Element> queue;
  s.for_each([&](Element e) { queue.push_back(e); });

  auto admit = [&](Element e) {
    if (!s.contains(e)) {
      s.insert(e);
      queue.push_back(e);
    }
  };
  while (!queue.empty()) {
    Element const x = queue.front();
    queue.pop_front();
    for (Element r = 0; r < n; ++r) {
      (ring.mul(r, x) | ring.mul(x, r)).for_each(admit);
    }
    for (Element a : s.members()) {
      admit(ring.sub(a, x));
      admit(ring.sub(x, a));
    }
  }
  return Hyperideal(s, s != ring.carrier(), Hyperideal::Trusted{});
}

std::vector<Hyperideal> enumerate_hyperideals(FiniteHyperring const& ring,
                                              std::size_t            cap) {
  std::size_t const n = ring.size();
  if (n > cap) {
    throw CapExceeded("hyperideal enumeration is capped at "
                      + std::to_string(cap) + " elements; " + ring.name()
                      + " has " + std::to_string(n));
  }
  std::vector<Subset> principal;
  principal.reserve(n);
  for (Element x = 0; x < n; ++x) {
    principal.push_back(generate_hyperideal(ring, Subset::singleton(x)).members());
  }
  std::set<Subset>    found;
  std::deque<Subset>  work;
  auto                admit = [&](Subset const& s) {
    if (found.insert(s).second) {
      work.push_back(s);
    }
  };
  admit(generate_hyperideal(ring, Subset{}).members());
  for (auto const& p : principal) {
    admit(p);
  }
  while (!work.empty()) {
    Subset const a = work.front();
    work.pop_front();
    for (auto const& p : principal) {
      if (!p.subset_of(a)) {
        admit(generate_hyperideal(ring, a | p).members());
      }
    }
  }
  std::vector<Subset> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(), size_lex_less);
  std::vector<Hyperideal> out;
  out.reserve(sorted.size());
  for (auto const& s : sorted) {
    out.emplace_back(ring, s);
  }
  return out;
}

std::vector<Subset> hyperideals_by_subset_scan(FiniteHyperring const& ring) {
  std::size_t const n = ring.size();
  if (n > kSubsetScanCap) {
    throw CapExceeded("subset scan is capped at "
                      + std::to_string(kSubsetScanCap) + " elements");
  }
  std::vector<Subset> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Subset s;
    for (Element e = 0; e < n; ++e) {
      if ((mask >> e) & 1U) {
        s.insert(e);
      }
    }
    if (is_hyperideal(ring, s)) {
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

ProductClassC class_c(FiniteHyperring const& ring) {
  std::size_t const  n = ring.size();
  std::set<Subset>   found;
  std::deque<Subset> work;
  auto               admit = [&](Subset const& s) {
    if (found.insert(s).second) {
      work.push_back(s);
    }
  };
  for (Element r = 0; r < n; ++r) {
    admit(Subset::singleton(r));
  }
  while (!work.empty()) {
    Subset const a = work.front();
    work.pop_front();
    for (Element r = 0; r < n; ++r) {
      admit(ring.product(a, r));
    }
  }
  ProductClassC c;
  c.family.assign(found.begin(), found.end());
  std::sort(c.family.begin(), c.family.end(), size_lex_less);
  return c;
}

CCheck is_c_hyperideal(ProductClassC const& c, Subset const& ideal) {
  for (auto const& a : c.family) {
    if (a.intersects(ideal) && !a.subset_of(ideal)) {
      return CCheck{false, a};
    }
  }
  return CCheck{};
}

namespace {
  Hyperideal checked_colon(FiniteHyperring const& ring, Subset const& out) {
    auto const check = is_hyperideal(ring, out);
    if (!check) {
      throw Error("colon {" + to_string(out) + "} is not a hyperideal of "
                  + ring.name());
    }
    return Hyperideal(ring, out);
  }
}  // namespace

Hyperideal colon(FiniteHyperring const& ring, Subset const& ideal, Element by) {
  Subset out;
  for (Element r = 0; r < ring.size(); ++r) {
    if (ring.mul(r, by).subset_of(ideal)) {
      out.insert(r);
    }
  }
  return checked_colon(ring, out);
}

Hyperideal colon(FiniteHyperring const& ring, Subset const& ideal,
                 Subset const& by) {
  Subset out;
  for (Element r = 0; r < ring.size(); ++r) {
    if (ring.product(r, by).subset_of(ideal)) {
      out.insert(r);
    }
  }
  return checked_colon(ring, out);
}

Hyperideal ideal_product(FiniteHyperring const& ring, Subset const& a,
                         Subset const& b) {
  return generate_hyperideal(ring, ring.product(a, b));
}

Hyperideal ideal_power(FiniteHyperring const& ring, Subset const& a,
                       std::size_t k) {
  if (k == 0) {
    throw PreconditionFailed("ideal power needs k >= 1");
  }
  Hyperideal acc = generate_hyperideal(ring, a);
  for (std::size_t i = 1; i < k; ++i) {
    acc = ideal_product(ring, acc.members(), a);
  }
  return acc;
}

std::optional<std::pair<Element, Element>>
prime_witness(FiniteHyperring const& ring, Subset const& ideal) {
  std::size_t const n = ring.size();
  for (Element x = 0; x < n; ++x) {
    if (ideal.contains(x)) {
      continue;
    }
    for (Element y = 0; y < n; ++y) {
      if (!ideal.contains(y) && ring.mul(x, y).subset_of(ideal)) {
        return std::pair{x, y};
      }
    }
  }
  return std::nullopt;
}

bool is_prime(FiniteHyperring const& ring, Subset const& ideal) {
  return ideal != ring.carrier() && !prime_witness(ring, ideal);
}

Subset d_set(FiniteHyperring const& ring, Subset const& ideal) {
  Subset out;
  for (Element r = 0; r < ring.size(); ++r) {
    for (auto const& p : power_sequence(ring, r)) {
      if (p.subset_of(ideal)) {
        out.insert(r);
        break;
      }
    }
  }
  return out;
}

std::vector<Hyperideal> maximal_among(std::vector<Hyperideal> const& ideals,
                                      std::size_t                    n) {
  Subset const            all = Subset::full(n);
  std::vector<Hyperideal> out;
  for (auto const& i : ideals) {
    if (i.members() == all) {
      continue;
    }
    bool covered = false;
    for (auto const& j : ideals) {
      if (j.members() != all && j.members() != i.members()
          && i.members().subset_of(j.members())) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      out.push_back(i);
    }
  }
  return out;
}

IdealLattice::IdealLattice(RingPtr ring, std::size_t cap)
    : ring_(std::move(ring)) {
  FiniteHyperring const& r = *ring_;
  ideals_                  = enumerate_hyperideals(r, cap);
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    index_.emplace(ideals_[i].members(), i);
    if (ideals_[i].proper()) {
      proper_.push_back(ideals_[i]);
      if (hyperring::is_prime(r, ideals_[i].members())) {
        primes_.push_back(ideals_[i]);
      }
    }
  }
  maximal_ = maximal_among(ideals_, r.size());
  class_c_ = hyperring::class_c(r);
  c_status_.reserve(ideals_.size());
  for (auto const& i : ideals_) {
    c_status_.push_back(hyperring::is_c_hyperideal(class_c_, i.members()).ok);
  }
  nil_radical_ = radical(Subset::singleton(r.zero()));
}

Hyperideal const& IdealLattice::ideal(Subset const& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    throw PreconditionFailed("{" + to_string(s) + "} is not a hyperideal of "
                             + ring_->name());
  }
  return ideals_[it->second];
}

bool IdealLattice::is_c_hyperideal(Subset const& s) const {
  auto it = index_.find(s);
  if (it != index_.end()) {
    return c_status_[it->second];
  }
  return hyperring::is_c_hyperideal(class_c_, s).ok;
}

bool IdealLattice::is_prime(Subset const& s) const {
  return std::any_of(primes_.begin(), primes_.end(),
                     [&](Hyperideal const& p) { return p.members() == s; });
}

bool IdealLattice::is_maximal(Subset const& s) const {
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [&](Hyperideal const& p) { return p.members() == s; });
}

Subset IdealLattice::radical(Subset const& ideal) const {
  Subset out  = ring_->carrier();
  for (auto const& p : primes_) {
    if (ideal.subset_of(p.members())) {
      out &= p.members();
    }
  }
  return out;
}

Subset radical(IdealLattice const& lattice, Subset const& ideal) {
  return lattice.radical(ideal);
}

}  // namespace hyperring
