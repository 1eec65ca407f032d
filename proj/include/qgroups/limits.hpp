#pragma once

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace qgroups {

// Capacity limits shared by the enumeration-based algorithms. Defaults can be
// overridden through the QGROUPS_LIMITS environment variable, e.g.
//   QGROUPS_LIMITS="closure=300000,automorphism=8192"
struct Limits
{
  std::uint64_t closure = 200000;       // matrix closure element budget
  std::uint64_t enumeration = 200000;   // element tables, classes, centers
  std::uint64_t isomorphism = 20000;    // isomorphism tests
  std::uint64_t automorphism = 128;     // Aut(G), required tier
  std::uint64_t automorphism_extended = 8192;
  std::uint64_t commutator_pairs = 4096;      // all-pairs K(G)
  std::uint64_t commutator_extended = 20000;
  std::uint64_t search_nodes = 50000000; // backtracking node budget

  void set(std::string const &key, std::uint64_t value)
  {
    if (key == "closure") closure = value;
    else if (key == "enumeration") enumeration = value;
    else if (key == "isomorphism") isomorphism = value;
    else if (key == "automorphism") automorphism = value;
    else if (key == "automorphism_extended") automorphism_extended = value;
    else if (key == "commutator_pairs") commutator_pairs = value;
    else if (key == "commutator_extended") commutator_extended = value;
    else if (key == "search_nodes") search_nodes = value;
    else throw InvalidArgument("unknown limit '" + key + "'");
  }

  // Parses "key=value,key=value".
  void apply(std::string const &spec)
  {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty())
        continue;
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw InvalidArgument("malformed limit '" + item + "'");
      try {
        set(item.substr(0, eq), std::stoull(item.substr(eq + 1)));
      } catch (std::logic_error const &) {
        throw InvalidArgument("malformed limit value in '" + item + "'");
      }
    }
  }

  static Limits from_environment()
  {
    Limits limits;
    if (char const *env = std::getenv("QGROUPS_LIMITS"))
      limits.apply(env);
    return limits;
  }
};

inline Limits &limits()
{
  static Limits instance = Limits::from_environment();
  return instance;
}

} // namespace qgroups
