#pragma once

#include <string>
#include <utility>
#include <vector>

#include "esakia/limits.hpp"

namespace esakia {

struct SuiteReport {
  explicit SuiteReport(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  // One line per checked instance.
  std::vector<std::string> log;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& line);
};

// Exhaustive property suites over small posets. `max_size` bounds the bases;
// each suite documents the sizes it actually uses.
std::vector<std::string> suite_names();
// The base size each suite is specified for: 4, or 3 where the suite
// quantifies over several posets or maps at once.
std::size_t default_max_size(const std::string& name);
// Throws InvalidInput for an unknown name.
SuiteReport run_suite(const std::string& name, std::size_t max_size, const Limits& lim = Limits::defaults());

SuiteReport rieger_nishimura_suite(const Limits& lim = Limits::defaults());
SuiteReport stabilization_suite(std::size_t max_size, const Limits& lim = Limits::defaults());
SuiteReport g_open_suite(std::size_t max_size, const Limits& lim = Limits::defaults());
SuiteReport lifting_suite(std::size_t max_size, const Limits& lim = Limits::defaults());
SuiteReport lc_suite(std::size_t max_size, const Limits& lim = Limits::defaults());
SuiteReport kc_suite(std::size_t max_size, const Limits& lim = Limits::defaults());
SuiteReport bool_suite(std::size_t max_size, const Limits& lim = Limits::defaults());
SuiteReport godel_suite(const Limits& lim = Limits::defaults());
SuiteReport codistributivity_suite(std::size_t depth, const Limits& lim = Limits::defaults());
SuiteReport product_suite(const Limits& lim = Limits::defaults());
SuiteReport amalgamation_suite(std::size_t max_size, const Limits& lim = Limits::defaults());
SuiteReport stability_suite(std::size_t max_size, const Limits& lim = Limits::defaults());
SuiteReport inquisitive_suite(std::size_t max_size, const Limits& lim = Limits::defaults());

}  // namespace esakia
