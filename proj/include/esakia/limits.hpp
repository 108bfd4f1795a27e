#pragma once

#include <cstddef>

namespace esakia {

// Size caps shared by every enumeration. The defaults are what the CLI uses;
// ESAKIA_FORGE_CAP overrides `enumeration`.
struct Limits {
  std::size_t enumeration = 1'000'000;  // search nodes per Vietoris step
  std::size_t layer_elements = 20'000;  // elements of any constructed poset
  std::size_t upsets = std::size_t{1} << 24;
  std::size_t iso_elements = 64;
  std::size_t valuations = std::size_t{1} << 22;
  std::size_t algebra_members = std::size_t{1} << 20;

  static const Limits& defaults();
};

}  // namespace esakia
