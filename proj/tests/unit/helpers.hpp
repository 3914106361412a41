#pragma once

#include <string>
#include <string_view>

#include "w1/instance.hpp"

namespace w1::testing {

/// Boolean domain {0, 1} with free value 0; `body` supplies variables,
/// relations, constraints and k as JSON members.
inline CspInstance boolean_instance(std::string_view body) {
  return parse_instance(R"({"domain": ["0", "1"], "free_value": "0", )" + std::string(body) + "}");
}

inline Assignment support(const CspInstance& inst, std::string_view text) { return parse_assignment(text, inst); }

}  // namespace w1::testing
