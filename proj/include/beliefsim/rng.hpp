#pragma once

#include <cstdint>
#include <random>

namespace beliefsim {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives one engine seed per (run seed, path index, stream tag) so that a
// given path draws the same numbers no matter how many paths the run asks
// for, and independent noise sources never share a stream.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t path_index,
                                std::uint64_t stream) {
    std::uint64_t k = splitmix64(seed);
    k = splitmix64(k ^ splitmix64(path_index ^ 0xa5a5a5a5a5a5a5a5ULL));
    k = splitmix64(k ^ splitmix64(stream ^ 0x0123456789abcdefULL));
    return k;
}

// Standard-normal stream. mt19937_64 output is pinned by the standard and the
// Box-Muller transform below is explicit, so draws are reproducible bit for
// bit for a fixed (seed, path_index, stream).
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t path_index, std::uint64_t stream)
        : engine_(stream_key(seed, path_index, stream)) {}

    double next();

private:
    double uniform01();  // in (0, 1]

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Stream tags used across the simulators.
inline constexpr std::uint64_t kStreamBrownian = 0;
inline constexpr std::uint64_t kStreamObservation = 1;
inline constexpr std::uint64_t kStreamDrift = 2;
inline constexpr std::uint64_t kStreamInitial = 3;

}  // namespace beliefsim
