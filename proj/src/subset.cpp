#include "hyperring/subset.hpp"

#include <algorithm>
#include <sstream>

#include "hyperring/errors.hpp"

namespace hyperring {

bool size_lex_less(Subset const& a, Subset const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  auto const ma = a.members();
  auto const mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

std::string to_string(Subset const& s) {
  std::string out;
  s.for_each([&](Element e) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(e);
  });
  return out;
}

Subset parse_subset(std::string const& text) {
  Subset            s;
  std::stringstream in(text);
  std::string       item;
  bool              any = false;
  while (std::getline(in, item, ',')) {
    auto const first = item.find_first_not_of(" \t");
    auto const last  = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw MalformedTable("empty entry in element list \"" + text + "\"");
    }
    item = item.substr(first, last - first + 1);
    if (!std::all_of(item.begin(), item.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw MalformedTable("not an element index: \"" + item + "\"");
    }
    unsigned long const v = std::stoul(item);
    if (v >= Subset::kCapacity) {
      throw MalformedTable("element index " + item + " out of range");
    }
    if (s.contains(v)) {
      throw MalformedTable("duplicate element " + item + " in \"" + text
                           + "\"");
    }
    s.insert(v);
    any = true;
  }
  if (!any && !text.empty()) {
    throw MalformedTable("empty element list");
  }
  return s;
}

}  // namespace hyperring
