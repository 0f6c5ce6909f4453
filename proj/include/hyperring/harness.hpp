#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperring/classify.hpp"
#include "hyperring/construct.hpp"

namespace hyperring {

struct CatalogLimits {
  std::size_t max_n         = 12;  // templates and quotients
  std::size_t product_cap   = kProductCap;
  std::size_t surrogate_cap = 30;  // the Z30 surrogate ring
};

struct CatalogEntry {
  enum class Kind { worked_example, template_ring, product, quotient, surrogate };

  std::string name;
  RingPtr     ring;
  Kind        kind = Kind::worked_example;
  std::string recipe;
  // product: indices of the two factors; quotient: parent index and ideal.
  std::optional<std::pair<std::size_t, std::size_t>> factors;
  std::optional<std::size_t>                          parent;
  Subset                                              by;
  std::vector<Element>                                projection;
};

struct SubringFixture {
  std::size_t ring = 0;
  Subset      carrier;
  std::string label;
};

struct PoolMap {
  enum class Kind { identity, quotient, projection, injection };

  std::string      label;
  Kind             kind   = Kind::identity;
  std::size_t      source = 0;
  std::size_t      target = 0;
  GoodHomomorphism phi;
};

struct Catalog {
  std::vector<CatalogEntry>   rings;
  std::vector<SubringFixture> subrings;
  std::vector<PoolMap>        pool;
  // Candidates dropped during construction, with the reason.
  std::vector<std::pair<std::string, std::string>> rejected;

  std::optional<std::size_t> find(std::string const& name) const;
};

Catalog builtin_catalog(CatalogLimits const& limits = {});

// The Z4 hyperring of the strongly 1-absorbing primary example.
RawTables z4h_tables();

enum class Mode { all, c_only };
std::string          to_string(Mode mode);
std::optional<Mode>  parse_mode(std::string const& text);

enum class Outcome { pass, vacuous, counterexample };
std::string to_string(Outcome outcome);

struct TheoremVerdict {
  std::string    theorem;
  std::string    ring;
  Outcome        outcome   = Outcome::vacuous;
  nlohmann::json witness   = nullptr;
  std::size_t    instances = 0;
};

struct SuiteReport {
  Mode                        mode = Mode::all;
  std::vector<TheoremVerdict> results;
  // Catalog rings with no identity; no check applies to them.
  std::vector<std::string> without_identity;

  std::size_t counterexamples() const;
};

// Check ids, one per direction of a biconditional ("T5.CHAR.fwd").
std::vector<std::string> theorem_ids();
// True when `filter` names `id` itself or the theorem it belongs to.
bool theorem_matches(std::string const& id, std::string const& filter);

struct Replay {
  bool hypothesis = false;
  bool conclusion = false;
  bool violated() const noexcept { return hypothesis && !conclusion; }
};

class TheoremSuite {
 public:
  // With `require_identity`, rings lacking an identity are skipped: units,
  // and so every absorbing class, are defined relative to one.
  TheoremSuite(Catalog const& catalog, Mode mode, bool require_identity = true);
  ~TheoremSuite();
  TheoremSuite(TheoremSuite const&)            = delete;
  TheoremSuite& operator=(TheoremSuite const&) = delete;

  // Empty `only` runs every check. Results sorted by theorem, then ring.
  // Throws PreconditionFailed for a filter that matches nothing.
  SuiteReport run(std::vector<std::string> const& only = {}) const;

  // Re-evaluates a single instance from a verdict's witness.
  Replay replay(TheoremVerdict const& verdict) const;

  Mode mode() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SuiteReport run_theorem_suite(Catalog const& catalog,
                              std::vector<std::string> const& only, Mode mode,
                              bool require_identity = true);

nlohmann::json to_json(SuiteReport const& report);
// Per-theorem summary plus every counterexample and every all-vacuous check.
std::string render_table(SuiteReport const& report);

// How many catalog ideals change verdict when a class is re-quantified over
// the other element domain (nonunits versus all elements).
struct SensitivityRow {
  std::string class_name;
  std::string stated_domain;
  std::size_t ideals  = 0;
  std::size_t changed = 0;
  std::string example;  // "ring:{ideal}" of the first change
};

std::vector<SensitivityRow> quantifier_sensitivity(Catalog const& catalog);
std::string render_sensitivity(std::vector<SensitivityRow> const& rows);

}  // namespace hyperring
