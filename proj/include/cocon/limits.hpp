#ifndef COCON_LIMITS_HPP
#define COCON_LIMITS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cocon {

/// Thrown whenever a configured size bound would be exceeded. Never caught silently.
class BoundExceeded : public std::runtime_error {
public:
    BoundExceeded(const std::string& what, std::size_t bound)
        : std::runtime_error(what + " exceeds configured bound " + std::to_string(bound)), bound_(bound)
    {
    }
    std::size_t bound() const { return bound_; }

private:
    std::size_t bound_;
};

/// Desk-scale bounds. All are overridable from the command line.
struct Limits {
    std::size_t max_faces = std::size_t{1} << 24;
    std::size_t max_shelling_facets = 30;
    int max_canonical_n = 9;
    std::size_t max_circuits = 10000;
    int max_leray_ground = 12;
};

}  // namespace cocon

#endif
