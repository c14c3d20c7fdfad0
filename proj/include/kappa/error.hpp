#pragma once

#include <stdexcept>
#include <string>

namespace kappa {

// Raised when a computation is asked for outside its domain (unstable
// moduli space, unsupported genus, mismatched dimensions, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kappa
