#pragma once

#include <stdexcept>
#include <string>

namespace ghzpure {

enum class PlanFailure {
  unreachable,      // target fidelity cannot be reached from this input
  below_threshold,  // GHZ weight at or below the distillability threshold
  cap_exceeded,     // round cap hit (or iterated weights underflowed)
};

class plan_error : public std::runtime_error {
public:
  plan_error(PlanFailure code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  PlanFailure code() const noexcept { return code_; }

private:
  PlanFailure code_;
};

}  // namespace ghzpure
