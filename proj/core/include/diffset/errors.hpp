#pragma once

#include <stdexcept>

namespace diffset {

/// A request exceeds a configured computation limit (exhaustive width,
/// fringe half-width, oracle scale).
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace diffset
