/**
 * rng.hpp — seeded substream derivation.
 *
 * Every random draw in the library flows from one master seed through named
 * substreams, so parallel and sequential schedules produce identical results.
 */

#ifndef SIGCX_RNG_HPP
#define SIGCX_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace sigcx {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derive a substream seed from (master, stream name, counter).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                                 std::uint64_t counter = 0) {
    std::uint64_t h = master;
    for (char c : stream) h = splitmix64(h ^ static_cast<std::uint64_t>(c));
    return splitmix64(h ^ counter);
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::string_view stream,
                                std::uint64_t counter = 0) {
    return std::mt19937_64(derive_seed(master, stream, counter));
}

}  // namespace sigcx

#endif
