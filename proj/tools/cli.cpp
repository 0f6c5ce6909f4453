#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperring/classify.hpp"
#include "hyperring/construct.hpp"
#include "hyperring/flags.hpp"
#include "hyperring/harness.hpp"
#include "hyperring/io.hpp"

namespace hyperring {
namespace {

// Bad flag value; the message names the flag.
struct UsageError : Error {
  UsageError(std::string const& flag, std::string const& why)
      : Error(flag + ": " + why) {}
};

RingPtr load_ring(std::string const& path) {
  return std::make_shared<FiniteHyperring const>(
      validate_hyperring(load_raw(path)));
}

Subset parse_ideal_flag(std::string const& flag, std::string const& text,
                        FiniteHyperring const& ring) {
  Subset s;
  try {
    s = parse_subset(text);
  } catch (Error const& e) {
    throw UsageError(flag, e.what());
  }
  s.for_each([&](Element x) {
    if (x >= ring.size()) {
      throw UsageError(flag, "index " + std::to_string(x) + " out of range for n="
                                 + std::to_string(ring.size()));
    }
  });
  return s;
}

Subset require_ideal(std::string const& flag, std::string const& text,
                     IdealLattice const& lat) {
  Subset const s = parse_ideal_flag(flag, text, lat.ring());
  if (!lat.is_ideal(s)) {
    throw UsageError(flag, "{" + to_string(s) + "} is not a hyperideal");
  }
  return s;
}

std::vector<long> parse_longs(std::string const& flag, std::string const& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string       item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (std::exception const&) {
      throw UsageError(flag, "expected a comma list of integers, got '" + text + "'");
    }
  }
  if (out.empty()) {
    throw UsageError(flag, "empty list");
  }
  return out;
}

void emit(nlohmann::json const& doc, std::string const& path, std::ostream& out) {
  std::string const text = canonical_dump(doc) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw UsageError("-o", "cannot write " + path);
  }
  f << text;
}

nlohmann::json classes_json(std::vector<Subset> const& classes) {
  auto arr = nlohmann::json::array();
  for (Subset const& c : classes) {
    arr.push_back(to_string(c));
  }
  return arr;
}

bool report_field(ClassificationReport const& r, std::string const& name,
                  bool& value) {
  static std::vector<std::pair<char const*, bool ClassificationReport::*>> const
      fields{{"prime", &ClassificationReport::prime},
             {"primary", &ClassificationReport::primary},
             {"maximal", &ClassificationReport::maximal},
             {"two_absorbing", &ClassificationReport::two_absorbing},
             {"two_absorbing_primary",
              &ClassificationReport::two_absorbing_primary},
             {"one_abs_prime", &ClassificationReport::one_abs_prime},
             {"one_abs_primary", &ClassificationReport::one_abs_primary},
             {"strongly_one_abs_primary",
              &ClassificationReport::strongly_one_abs_primary},
             {"weakly_one_abs_primary",
              &ClassificationReport::weakly_one_abs_primary},
             {"is_c_hyperideal", &ClassificationReport::is_c_hyperideal},
             {"radical_prime", &ClassificationReport::radical_prime},
             {"proper", &ClassificationReport::proper}};
  for (auto const& [key, field] : fields) {
    if (name == key) {
      value = r.*field;
      return true;
    }
  }
  return false;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finite multiplicative hyperring engine"};
  app.require_subcommand(1, 1);

  std::string file, file2, ideal, by, assert_class, output;

  auto* validate = app.add_subcommand("validate", "Check the hyperring axioms");
  validate->add_option("file", file, "hyperring JSON")->required();
  validate->add_option("-o,--output", output, "write canonical re-emission");

  auto* classify_cmd = app.add_subcommand("classify", "Classify one hyperideal");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--ideal", ideal, "comma list, e.g. 0,2")->required();
  classify_cmd->add_option("--assert", assert_class,
                           "exit 1 unless this class holds");

  auto* ideals_cmd = app.add_subcommand("ideals", "List every hyperideal");
  ideals_cmd->add_option("file", file)->required();

  auto* radical_cmd = app.add_subcommand("radical", "Radical and D-set");
  radical_cmd->add_option("file", file)->required();
  radical_cmd->add_option("--ideal", ideal)->required();

  auto* colon_cmd = app.add_subcommand("colon", "Colon hyperideal (I:x)");
  colon_cmd->add_option("file", file)->required();
  colon_cmd->add_option("--ideal", ideal)->required();
  colon_cmd->add_option("--by", by, "element or comma list")->required();

  auto* gamma_cmd = app.add_subcommand("gamma", "Fundamental quotient R/gamma*");
  gamma_cmd->add_option("file", file)->required();

  auto* tmpl = app.add_subcommand("template", "Emit a constructed hyperring");
  tmpl->require_subcommand(1, 1);
  std::size_t zn_n = 0;
  std::string zn_a;
  auto*       zn = tmpl->add_subcommand("zn", "Z_n with x o y = {xay : a in A}");
  zn->add_option("--n", zn_n)->required();
  zn->add_option("--A", zn_a)->required();
  zn->add_option("-o,--output", output);
  auto* prod = tmpl->add_subcommand("product", "R1 x R2");
  prod->add_option("file", file)->required();
  prod->add_option("file2", file2)->required();
  prod->add_option("-o,--output", output);
  auto* quot = tmpl->add_subcommand("quotient", "R / J");
  quot->add_option("file", file)->required();
  quot->add_option("--ideal", ideal)->required();
  quot->add_option("-o,--output", output);
  auto* mat = tmpl->add_subcommand("matrix", "2x2 hypermatrices over R");
  mat->add_option("file", file)->required();
  mat->add_option("-o,--output", output);

  auto*       theorems = app.add_subcommand("theorems", "Run the theorem suite");
  std::string catalog_name = "default", only, mode_text = "all", json_path;
  theorems->add_option("--catalog", catalog_name);
  theorems->add_option("--only", only, "comma list of check ids");
  theorems->add_option("--mode", mode_text, "all | c-only");
  theorems->add_option("--json", json_path, "write the report here");
  bool include_identityless = false;
  theorems->add_flag("--include-identityless", include_identityless,
                     "also check rings that have no identity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      RingPtr const ring = load_ring(file);
      if (!output.empty()) {
        emit(to_json(*ring), output, out);
      }
      nlohmann::json doc{{"valid", true},
                         {"name", ring->name()},
                         {"n", ring->size()},
                         {"strongly_distributive", ring->strongly_distributive()},
                         {"commutative", ring->commutative()}};
      emit(doc, "", out);
      return 0;
    }
    if (*classify_cmd) {
      ClassifyContext const ctx(load_ring(file));
      Subset const i = require_ideal("--ideal", ideal, ctx.lattice());
      ClassificationReport const r = classify(ctx, i);
      emit(to_json(r), "", out);
      if (!assert_class.empty()) {
        bool value = false;
        if (!report_field(r, assert_class, value)) {
          throw UsageError("--assert", "unknown class '" + assert_class + "'");
        }
        return value ? 0 : 1;
      }
      return 0;
    }
    if (*ideals_cmd) {
      IdealLattice const lat(load_ring(file));
      auto               arr = nlohmann::json::array();
      for (Hyperideal const& h : lat.ideals()) {
        arr.push_back({{"ideal", to_string(h.members())},
                       {"proper", h.proper()},
                       {"is_c_hyperideal", lat.is_c_hyperideal(h.members())},
                       {"prime", h.proper() && lat.is_prime(h.members())},
                       {"maximal", lat.is_maximal(h.members())}});
      }
      RingFlags const f = ring_flags(lat);
      emit({{"ideals", arr},
            {"local", lat.is_local()},
            {"nil_radical", to_string(lat.nil_radical())},
            {"reduced", f.reduced},
            {"hyperfield", f.hyperfield},
            {"integral_hyperdomain", f.integral_hyperdomain},
            {"regular", f.regular_ring}},
           "", out);
      return 0;
    }
    if (*radical_cmd) {
      IdealLattice const lat(load_ring(file));
      Subset const       i = require_ideal("--ideal", ideal, lat);
      emit({{"ideal", to_string(i)},
            {"radical", to_string(lat.radical(i))},
            {"d_set", to_string(d_set(lat.ring(), i))},
            {"is_c_hyperideal", lat.is_c_hyperideal(i)}},
           "", out);
      return 0;
    }
    if (*colon_cmd) {
      IdealLattice const lat(load_ring(file));
      Subset const       i = require_ideal("--ideal", ideal, lat);
      Subset const       b = parse_ideal_flag("--by", by, lat.ring());
      if (b.empty()) {
        throw UsageError("--by", "empty");
      }
      Hyperideal const c = b.size() == 1 ? colon(lat.ring(), i, b.front())
                                         : colon(lat.ring(), i, b);
      emit({{"ideal", to_string(i)},
            {"by", to_string(b)},
            {"colon", to_string(c.members())}},
           "", out);
      return 0;
    }
    if (*gamma_cmd) {
      RingPtr const             ring = load_ring(file);
      FundamentalQuotient const q    = gamma_star(*ring);
      emit({{"classes", classes_json(q.classes)},
            {"projection", q.projection},
            {"sum_family_size", q.sum_family_size},
            {"quotient", to_json(q.as_ring(ring->name() + "/gamma*"))}},
           "", out);
      return 0;
    }
    if (*tmpl) {
      if (*zn) {
        emit(to_json(zn_template(zn_n, parse_longs("--A", zn_a))), output, out);
      } else if (*prod) {
        emit(to_json(product_ring(*load_ring(file), *load_ring(file2))), output,
             out);
      } else if (*quot) {
        IdealLattice const lat(load_ring(file));
        Subset const       j = require_ideal("--ideal", ideal, lat);
        emit(to_json(quotient_ring(lat.ring(), j).ring), output, out);
      } else {
        emit(to_json(matrix_ring(*load_ring(file)).ring), output, out);
      }
      return 0;
    }
    if (*theorems) {
      if (catalog_name != "default") {
        throw UsageError("--catalog", "only 'default' is available");
      }
      auto const mode = parse_mode(mode_text);
      if (!mode) {
        throw UsageError("--mode", "expected all or c-only, got '" + mode_text + "'");
      }
      std::vector<std::string> filters;
      if (!only.empty()) {
        std::stringstream ss(only);
        std::string       item;
        while (std::getline(ss, item, ',')) {
          if (!item.empty()) {
            filters.push_back(item);
          }
        }
      }
      Catalog const      catalog = builtin_catalog();
      TheoremSuite const suite(catalog, *mode, !include_identityless);
      SuiteReport        report;
      try {
        report = suite.run(filters);
      } catch (PreconditionFailed const& e) {
        throw UsageError("--only", e.what());
      }
      if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) {
          throw UsageError("--json", "cannot write " + json_path);
        }
        f << canonical_dump(to_json(report)) << "\n";
      }
      out << "catalog: " << catalog.rings.size() << " rings, "
          << catalog.subrings.size() << " subhyperrings, " << catalog.pool.size()
          << " maps\n";
      out << "pool:";
      for (PoolMap const& p : catalog.pool) {
        out << " " << p.label;
      }
      out << "\n" << render_table(report);
      if (filters.empty()) {
        out << render_sensitivity(quantifier_sensitivity(catalog));
      }
      return report.counterexamples() == 0 ? 0 : 1;
    }
  } catch (UsageError const& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace hyperring
