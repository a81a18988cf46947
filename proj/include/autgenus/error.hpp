#pragma once

#include <stdexcept>
#include <string>

namespace autgenus {

/// Raised on domain errors: malformed automata, violated preconditions,
/// inputs outside a constructor's family.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace autgenus
