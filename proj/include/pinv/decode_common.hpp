#pragma once

#include <string>

namespace pinv {

// Typed bounded-distance decoding failures, shared by the RS and PRC codecs.
enum class DecodeFailure {
  LocatorDegreeExceeded,
  NonExactDivision,
  ResidualWeightExceeded,
  MessageDegreeExceeded,
};

inline std::string to_string(DecodeFailure f) {
  switch (f) {
    case DecodeFailure::LocatorDegreeExceeded: return "locator_degree_exceeded";
    case DecodeFailure::NonExactDivision: return "non_exact_division";
    case DecodeFailure::ResidualWeightExceeded: return "residual_weight_exceeded";
    case DecodeFailure::MessageDegreeExceeded: return "message_degree_exceeded";
  }
  return "unknown";
}

}  // namespace pinv
