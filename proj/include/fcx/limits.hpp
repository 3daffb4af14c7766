#ifndef FCX_LIMITS_HPP
#define FCX_LIMITS_HPP

#include <stdexcept>
#include <string>

namespace fcx {

// Raised when an enumeration would exceed its configured resource budget.
// Callers that must never hard-fail (the verification driver) convert it
// into a "skipped" verdict instead.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct Budget {
    long long max_faces_per_dim = 2'000'000;
    long long max_facets = 2'000'000;
};

} // namespace fcx

#endif // FCX_LIMITS_HPP
