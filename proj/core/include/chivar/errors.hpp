#ifndef CHIVAR_ERRORS_HPP
#define CHIVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chivar {

// Instance exceeds a feasibility cap (exact enumeration, solver size guard).
class SizeError : public std::runtime_error {
public:
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// Inputs fall outside the regime in which a formula is meaningful
// (e.g. the large-p chromatic estimate when the boundary gap is too small).
class RegimeError : public std::domain_error {
public:
    explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

} // namespace chivar

#endif
