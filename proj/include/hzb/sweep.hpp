#pragma once

#include <optional>
#include <string>

#include "hzb/rational.hpp"

namespace hzb {

enum class SweepCheck { identities, definiteness, all };

std::optional<SweepCheck> sweep_check_from_string(const std::string& s);

struct SweepResult {
  Int limit = 0;
  Int germs = 0;
  Int checks = 0;
  bool ok = true;
  std::string failure;  // first failing assertion; empty when ok
};

// Asserts the library's cross-module identities for every valid germ with
// m, k, l <= limit (exponents enumerated with k <= l).
SweepResult run_sweep(Int limit, SweepCheck check);

}  // namespace hzb
