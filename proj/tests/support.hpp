#pragma once

#include <memory>
#include <string>

#include "hyperring/construct.hpp"
#include "hyperring/harness.hpp"
#include "hyperring/io.hpp"

#ifndef HYPERRING_TEST_DATA
#define HYPERRING_TEST_DATA "tests/data"
#endif

namespace support {

inline std::string data(std::string const& file) {
  return std::string(HYPERRING_TEST_DATA) + "/" + file;
}

inline hyperring::RingPtr share(hyperring::FiniteHyperring ring) {
  return std::make_shared<hyperring::FiniteHyperring const>(std::move(ring));
}

inline hyperring::RingPtr z4h() {
  return share(hyperring::validate_hyperring(hyperring::load_raw(data("z4h.json"))));
}

inline hyperring::RingPtr zn(std::size_t n, std::vector<long> const& a) {
  return share(hyperring::zn_template(n, a));
}

// n = 1: 0 + 0 = 0, 0 o 0 = {0}.
inline hyperring::RingPtr trivial() {
  hyperring::RawTables raw;
  raw.name = "T1";
  raw.n    = 1;
  raw.add  = {{0}};
  raw.mul  = {{hyperring::Subset{0}}};
  return share(hyperring::validate_hyperring(raw));
}

// n = 2 with every product {0}.
inline hyperring::RingPtr null_ring() {
  hyperring::RawTables raw;
  raw.name = "NullR";
  raw.n    = 2;
  raw.add  = {{0, 1}, {1, 0}};
  raw.mul.assign(2, std::vector<hyperring::Subset>(2, hyperring::Subset{0}));
  return share(hyperring::validate_hyperring(raw));
}

// Built once per test binary.
inline hyperring::Catalog const& catalog() {
  static hyperring::Catalog const cat = hyperring::builtin_catalog();
  return cat;
}

}  // namespace support
