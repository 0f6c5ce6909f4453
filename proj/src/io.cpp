#include "hyperring/io.hpp"

#include <fstream>
#include <sstream>

namespace hyperring {

using nlohmann::json;

namespace {

  long as_index(json const& v, char const* where) {
    if (!v.is_number_integer()) {
      throw MalformedTable(std::string(where) + ": expected an integer");
    }
    return v.get<long>();
  }

  json const& field(json const& doc, char const* key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
      throw MalformedTable(std::string("missing field \"") + key + "\"");
    }
    return *it;
  }

}  // namespace

RawTables raw_from_json(json const& doc) {
  if (!doc.is_object()) {
    throw MalformedTable("hyperring document must be a JSON object");
  }
  RawTables raw;
  json const& name = field(doc, "name");
  if (!name.is_string()) {
    throw MalformedTable("\"name\" must be a string");
  }
  raw.name    = name.get<std::string>();
  long const n = as_index(field(doc, "n"), "n");
  if (n < 1) {
    throw MalformedTable("\"n\" must be at least 1");
  }
  if (static_cast<std::size_t>(n) > Subset::kCapacity) {
    throw CapExceeded("\"n\" exceeds the subset capacity");
  }
  raw.n         = static_cast<std::size_t>(n);
  long const z  = as_index(field(doc, "zero"), "zero");
  if (z < 0 || z >= n) {
    throw MalformedTable("\"zero\" out of range");
  }
  raw.zero = static_cast<std::size_t>(z);

  json const& add = field(doc, "add");
  json const& mul = field(doc, "mul");
  if (!add.is_array() || add.size() != raw.n || !mul.is_array()
      || mul.size() != raw.n) {
    throw MalformedTable("tables must have " + std::to_string(n) + " rows");
  }
  raw.add.assign(raw.n, {});
  raw.mul.assign(raw.n, {});
  for (std::size_t i = 0; i < raw.n; ++i) {
    if (!add[i].is_array() || add[i].size() != raw.n) {
      throw MalformedTable("add row " + std::to_string(i) + " is ragged");
    }
    if (!mul[i].is_array() || mul[i].size() != raw.n) {
      throw MalformedTable("mul row " + std::to_string(i) + " is ragged");
    }
    for (std::size_t j = 0; j < raw.n; ++j) {
      raw.add[i].push_back(as_index(add[i][j], "add"));
      json const& cell = mul[i][j];
      std::string const where
          = "mul[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!cell.is_array() || cell.empty()) {
        throw MalformedTable(where + " must be a nonempty list");
      }
      Subset s;
      long   prev = -1;
      for (auto const& v : cell) {
        long const e = as_index(v, where.c_str());
        if (e < 0 || e >= n) {
          throw MalformedTable(where + " entry out of range");
        }
        if (e <= prev) {
          throw MalformedTable(where
                               + " must be strictly increasing (no "
                                 "duplicates)");
        }
        prev = e;
        s.insert(static_cast<Element>(e));
      }
      raw.mul[i].push_back(s);
    }
  }
  check_shape(raw);
  return raw;
}

RawTables load_raw(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw MalformedTable("cannot open " + path.string());
  }
  json doc;
  try {
    in >> doc;
  } catch (json::parse_error const& e) {
    throw MalformedTable(path.string() + ": " + e.what());
  }
  return raw_from_json(doc);
}

json subset_json(Subset const& s) {
  json arr = json::array();
  s.for_each([&](Element e) { arr.push_back(e); });
  return arr;
}

json to_json(RawTables const& raw) {
  json doc;
  doc["name"] = raw.name;
  doc["n"]    = raw.n;
  doc["zero"] = raw.zero;
  json add    = json::array();
  json mul    = json::array();
  for (std::size_t i = 0; i < raw.n; ++i) {
    json arow = json::array();
    json mrow = json::array();
    for (std::size_t j = 0; j < raw.n; ++j) {
      arow.push_back(raw.add[i][j]);
      mrow.push_back(subset_json(raw.mul[i][j]));
    }
    add.push_back(std::move(arow));
    mul.push_back(std::move(mrow));
  }
  doc["add"] = std::move(add);
  doc["mul"] = std::move(mul);
  return doc;
}

json to_json(FiniteHyperring const& ring) { return to_json(to_raw(ring)); }

std::string canonical_dump(json const& doc) { return doc.dump(); }

}  // namespace hyperring
