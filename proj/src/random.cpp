#include "antdoes/random.hpp"

#include <stdexcept>

namespace antdoes {

std::int64_t RandomSource::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi)
        throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == UINT64_MAX)
        return static_cast<std::int64_t>(engine_());
    const std::uint64_t range = span + 1;
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw > limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

} // namespace antdoes
