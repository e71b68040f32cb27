#pragma once

#include <stdexcept>
#include <string>

namespace holomux {

/// Failure of a numeric procedure (quadrature budget, root search without
/// sign information). Carries the best estimate obtained before giving up.
class numeric_error : public std::runtime_error {
public:
    numeric_error(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

}  // namespace holomux
