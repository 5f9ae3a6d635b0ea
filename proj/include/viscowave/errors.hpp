#pragma once

#include <stdexcept>
#include <string>

namespace viscowave {

/// Raised when a numerical procedure cannot reach its tolerance. Carries the
/// error estimate that was actually achieved.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace viscowave
