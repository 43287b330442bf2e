#ifndef RELAYSCHED_UTIL_HPP
#define RELAYSCHED_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace relaysched {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

// splitmix64 finalizer; used to derive independent seeds for parallel
// realizations and per-solver random streams from one base seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    return mix_seed(base ^ mix_seed(salt));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(base, a), b);
}

// Fixed-format double for CSV output; stable across runs for a given build.
inline std::string format_double(double v, int precision = 10) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

}  // namespace relaysched

#endif
