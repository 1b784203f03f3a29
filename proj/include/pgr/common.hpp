// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgr {

using Qudit = std::uint32_t;
using Position = std::uint32_t;
using GateId = std::uint32_t;
using TrapId = std::uint32_t;

inline constexpr Position kNoPosition = std::numeric_limits<Position>::max();
inline constexpr Qudit kNoQudit = std::numeric_limits<Qudit>::max();

/// Unreachable-distance sentinel. Never a large finite number.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

inline bool reachable(double d) { return d != kUnreachable; }

/// Malformed input text (QASM, JSON, arch strings). Carries a line number
/// when one is known (0 otherwise).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(msg)
                                      : std::move(msg)),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Bad configuration or an operation invoked outside its preconditions.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Routing cannot complete on this architecture (capacity or connectivity).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic RNG used everywhere a seed appears in a public interface.
using Rng = std::mt19937_64;

/// Draw from [0, n). Explicit modulo keeps the sequence identical across
/// standard libraries (uniform_int_distribution is implementation-defined).
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) { return rng() % n; }

/// Fisher-Yates with rng_below, for reproducible seeded permutations.
template <typename T>
void seeded_shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

/// FNV-1a over raw bytes; used for input digests in run reports.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::string to_hex(std::uint64_t v);

/// Shortest decimal form that round-trips an IEEE double exactly.
std::string format_double(double v);

}  // namespace pgr
