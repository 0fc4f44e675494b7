#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

namespace hdepth {

struct Violation {
  std::string descriptor;  // enough to replay the case, usually an hdepth command line
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string batteryName;
  std::size_t casesRun = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept { return violations.empty(); }
};

}  // namespace hdepth
