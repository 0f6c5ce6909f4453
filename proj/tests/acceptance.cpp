// One pass/fail line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "hyperring/classify.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace hyperring;
using oracle::Set;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Line {
  bool        pass = true;
  std::string detail;
};

std::string slurp(std::filesystem::path const& p) {
  std::ifstream     f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run(std::vector<std::string> const& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int const          code = run_cli(args, o, e);
  if (out != nullptr) {
    *out = o.str();
  }
  return code;
}

Line worked_example() {
  auto const start = Clock::now();
  Line       l;
  RawTables const raw = load_raw(support::data("z4h.json"));
  Subset const    all{0, 1, 2, 3}, even{0, 2}, z{0};
  std::vector<std::vector<Subset>> const printed{
      {z, z, z, z}, {z, all, even, all}, {z, even, z, even}, {z, all, even, all}};
  bool exact = raw.n == 4 && raw.mul == printed;
  for (long a = 0; a < 4 && exact; ++a) {
    for (long b = 0; b < 4; ++b) {
      exact = exact && raw.add[a][b] == (a + b) % 4;
    }
  }
  bool valid = true;
  try {
    validate_hyperring(raw);
  } catch (std::exception const&) {
    valid = false;
  }
  std::string out;
  int const   code = run({"classify", support::data("z4h.json"), "--ideal", "0,2"}, &out);
  auto const  doc  = nlohmann::json::parse(out);
  bool const  verdicts = code == 0 && doc["strongly_one_abs_primary"] == true
                        && doc["prime"] == true && doc["is_c_hyperideal"] == false;
  double const secs = seconds_since(start);
  l.pass = exact && valid && verdicts && secs < 1.0;
  std::ostringstream d;
  d << "tables exact=" << exact << " valid=" << valid
    << " strongly=" << doc["strongly_one_abs_primary"] << " prime=" << doc["prime"]
    << " c_hyperideal=" << doc["is_c_hyperideal"] << " time=" << secs << "s";
  l.detail = d.str();
  return l;
}

Line theorem_suite() {
  Catalog const& cat   = support::catalog();
  auto const     start = Clock::now();
  TheoremSuite const c_suite(cat, Mode::c_only);
  SuiteReport const  c_only = c_suite.run();
  double const       secs   = seconds_since(start);

  std::map<std::string, std::size_t> by_check;
  for (TheoremVerdict const& v : c_only.results) {
    if (v.outcome == Outcome::counterexample) {
      ++by_check[v.theorem];
    }
  }
  std::string const table   = render_table(c_only);
  bool const        listed  = table.find("vacuous on every ring:") != std::string::npos;

  TheoremSuite const all_suite(cat, Mode::all);
  SuiteReport const  all = all_suite.run();
  std::size_t        replayed = 0;
  for (TheoremVerdict const& v : all.results) {
    if (v.outcome == Outcome::counterexample && all_suite.replay(v).violated()) {
      ++replayed;
    }
  }

  Line l;
  l.pass = cat.rings.size() >= 25 && secs < 300.0 && c_only.counterexamples() == 0
           && listed && replayed == all.counterexamples();
  std::ostringstream d;
  d << cat.rings.size() << " rings, c-only time=" << secs
    << "s, c-only counterexamples=" << c_only.counterexamples();
  for (auto const& [id, n] : by_check) {
    d << " [" << id << " x" << n << "]";
  }
  d << ", vacuous list shown=" << listed << ", all-mode counterexamples replayed "
    << replayed << "/" << all.counterexamples()
    << ", identity-less rings skipped=" << c_only.without_identity.size();
  l.detail = d.str();
  return l;
}

Line chains() {
  std::size_t ideals = 0, broken = 0;
  std::string first;
  for (auto const& e : support::catalog().rings) {
    ClassifyContext const ctx(e.ring);
    for (Hyperideal const& h : ctx.lattice().proper()) {
      ++ideals;
      if (auto bad = chain_violation(classify(ctx, h.members()))) {
        if (broken++ == 0) {
          first = e.name + ":{" + to_string(h.members()) + "} " + *bad;
        }
      }
    }
  }
  Line l;
  l.pass   = broken == 0;
  l.detail = std::to_string(ideals) + " proper hyperideals, violations="
             + std::to_string(broken) + (first.empty() ? "" : " first " + first);
  return l;
}

Line oracle_equivalence() {
  std::size_t rings = 0, enum_bad = 0, gen_checked = 0, gen_bad = 0;
  for (auto const& e : support::catalog().rings) {
    if (e.ring->size() > 12) {
      continue;
    }
    ++rings;
    oracle::Ring const o      = oracle::Ring::of(*e.ring);
    auto               expect = oracle::ideals(o);
    std::vector<Set>   got;
    for (Hyperideal const& h : enumerate_hyperideals(*e.ring)) {
      got.push_back(oracle::to_set(h.members()));
    }
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    enum_bad += got == expect ? 0 : 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << o.n); ++mask) {
      Set seed;
      for (std::size_t i = 0; i < o.n; ++i) {
        if (mask >> i & 1U) {
          seed.insert(i);
        }
      }
      ++gen_checked;
      if (oracle::to_set(generate_hyperideal(*e.ring, oracle::to_subset(seed)).members())
          != oracle::generate(o, expect, seed)) {
        ++gen_bad;
      }
    }
  }
  Line l;
  l.pass   = enum_bad == 0 && gen_bad == 0 && rings > 0;
  l.detail = std::to_string(rings) + " rings with n<=12, enumeration mismatches="
             + std::to_string(enum_bad) + ", generate seeds checked="
             + std::to_string(gen_checked) + " mismatches=" + std::to_string(gen_bad);
  return l;
}

Line radical_law() {
  std::size_t ideals = 0, not_inside = 0, c_unequal = 0, non_c_or_strict = 0;
  for (auto const& e : support::catalog().rings) {
    IdealLattice const lat(e.ring);
    for (Hyperideal const& h : lat.ideals()) {
      ++ideals;
      Subset const d   = d_set(lat.ring(), h.members());
      Subset const rad = lat.radical(h.members());
      bool const   c   = lat.is_c_hyperideal(h.members());
      not_inside += d.subset_of(rad) ? 0 : 1;
      c_unequal += c && d != rad ? 1 : 0;
      non_c_or_strict += !c || d != rad ? 1 : 0;
    }
  }
  Line l;
  l.pass   = not_inside == 0 && c_unequal == 0 && non_c_or_strict > 0;
  l.detail = std::to_string(ideals) + " hyperideals, D not inside radical="
             + std::to_string(not_inside) + ", C with D != radical="
             + std::to_string(c_unequal) + ", non-C or strict instances="
             + std::to_string(non_c_or_strict);
  return l;
}

Line gamma_soundness() {
  std::size_t rings = 0, bad_axioms = 0, templates = 0, bad_iso = 0;
  for (auto const& e : support::catalog().rings) {
    if (e.ring->size() > 12) {
      continue;
    }
    ++rings;
    FundamentalQuotient q;
    try {
      q = gamma_star(*e.ring);
    } catch (std::exception const&) {
      ++bad_axioms;
      continue;
    }
    bad_axioms += ordinary_ring_violation(q.class_add, q.class_mul, q.zero) ? 1 : 0;
    if (e.kind == CatalogEntry::Kind::template_ring
        && e.name.size() > 4 && e.name.substr(e.name.size() - 4) == "A{1}") {
      ++templates;
      RawTables const base = to_raw(*e.ring);
      RawTables const quot = to_raw(q.as_ring("Q"));
      bool const      identity_map = [&] {
        for (Element x = 0; x < q.projection.size(); ++x) {
          if (q.projection[x] != x) {
            return false;
          }
        }
        return true;
      }();
      bool const same = q.size() == e.ring->size() && identity_map
                        && quot.add == base.add && quot.mul == base.mul;
      bad_iso += same ? 0 : 1;
    }
  }
  Line l;
  l.pass   = bad_axioms == 0 && bad_iso == 0 && templates > 0;
  l.detail = std::to_string(rings) + " rings with n<=12, ring-axiom failures="
             + std::to_string(bad_axioms) + ", A={1} templates "
             + std::to_string(templates) + " non-isomorphic=" + std::to_string(bad_iso);
  return l;
}

Line existence() {
  std::size_t rings = 0, bad = 0, products = 0, bad_products = 0;
  std::string identityless_note;
  for (auto const& e : support::catalog().rings) {
    ClassifyContext const ctx(e.ring);
    IdealLattice const&   lat    = ctx.lattice();
    bool                  exists = false;
    for (Hyperideal const& h : lat.proper()) {
      exists = exists || static_cast<bool>(strongly_one_absorbing_primary(ctx, h.members()));
    }
    bool const rhs = lat.is_prime(lat.nil_radical()) || lat.is_local();
    bool const ok  = exists == rhs;
    if (e.ring->identities().empty()) {
      if (!ok) {
        identityless_note += " " + e.name;
      }
      continue;
    }
    ++rings;
    bad += ok ? 0 : 1;
    if (e.factors) {
      ++products;
      bad_products += exists ? 1 : 0;
    }
  }
  Line l;
  l.pass   = bad == 0 && bad_products == 0 && products > 0;
  l.detail = std::to_string(rings) + " rings with identity, violations="
             + std::to_string(bad) + ", product rings " + std::to_string(products)
             + " with a strongly ideal=" + std::to_string(bad_products)
             + "; identity-less rings violating:"
             + (identityless_note.empty() ? " none" : identityless_note);
  return l;
}

Line determinism() {
  Catalog const& cat = support::catalog();
  bool           same = true;
  for (Mode mode : {Mode::all, Mode::c_only}) {
    std::string const a = canonical_dump(to_json(run_theorem_suite(cat, {}, mode)));
    std::string const b = canonical_dump(to_json(run_theorem_suite(cat, {}, mode)));
    same                = same && a == b;
  }
  auto dir = std::filesystem::temp_directory_path() / "hyperring_acceptance";
  std::filesystem::create_directories(dir);
  auto const f = dir / "z4.json", g = dir / "z4_again.json", h = dir / "z4h_again.json";
  bool round = run({"template", "zn", "--n", "4", "--A", "1", "-o", f.string()}) == 0
               && run({"validate", f.string(), "-o", g.string()}) == 0
               && slurp(f) == slurp(g);
  round = round && run({"validate", support::data("z4h.json"), "-o", h.string()}) == 0
          && slurp(h) == slurp(support::data("z4h.json"));
  Line l;
  l.pass   = same && round;
  l.detail = std::string("two full-suite runs per mode identical=") + (same ? "yes" : "no")
             + ", template round trip identical=" + (round ? "yes" : "no");
  return l;
}

}  // namespace

int main() {
  std::vector<std::pair<char const*, Line (*)()>> const criteria{
      {"worked example fidelity", worked_example},
      {"theorem suite", theorem_suite},
      {"implication chains", chains},
      {"oracle equivalence", oracle_equivalence},
      {"radical law", radical_law},
      {"fundamental quotient soundness", gamma_soundness},
      {"existence theorem at scale", existence},
      {"determinism", determinism},
  };
  int failed = 0;
  int index  = 0;
  for (auto const& [name, fn] : criteria) {
    ++index;
    Line l;
    try {
      l = fn();
    } catch (std::exception const& e) {
      l = Line{false, std::string("exception: ") + e.what()};
    }
    failed += l.pass ? 0 : 1;
    std::cout << "criterion " << index << ": " << (l.pass ? "PASS" : "FAIL") << " "
              << name << " (" << l.detail << ")\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criterion failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
