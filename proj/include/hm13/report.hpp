#pragma once

#include <optional>
#include <string>

#include "hm13/rational.hpp"

namespace hm13 {

struct VerificationReport {
  std::string id;
  std::string suite;
  bool pass = false;
  std::string detail;
  std::optional<Rat> order;  // truncation order for series checks
  double elapsed_ms = 0.0;

  std::string status() const { return pass ? "pass" : "fail"; }
};

}  // namespace hm13
