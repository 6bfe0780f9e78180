#include "beikit/field.hpp"

namespace beikit {

bool is_prime(std::int64_t p) {
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace beikit
