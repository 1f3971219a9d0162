#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tabgen/errors.hpp"

namespace tabgen {

inline constexpr const char* kVersionTag = "tabgen-0.1.0";

// Default scalar type of the generation pipeline. All persisted arrays are
// 32-bit floats, so training in float keeps save/load round-trips bit-exact.
using Real = float;

inline bool is_missing(double v) { return std::isnan(v); }
inline double missing_value() { return std::numeric_limits<double>::quiet_NaN(); }

// ---------------------------------------------------------------------------
// FNV-1a content hashing. Used for weight freezing checks, cache keys and
// file checksums.
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = kFnvOffset) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = kFnvOffset) {
    return fnv1a(s.data(), s.size(), h);
}

template <typename T>
std::uint64_t fnv1a_value(const T& v, std::uint64_t h = kFnvOffset) {
    static_assert(std::is_trivially_copyable_v<T>);
    return fnv1a(&v, sizeof(T), h);
}

// Hashes a span of arithmetic values through float32 so the result matches
// the persisted representation regardless of the in-memory scalar type.
template <typename T>
std::uint64_t fnv1a_floats(const T* data, std::size_t n, std::uint64_t h = kFnvOffset) {
    for (std::size_t i = 0; i < n; ++i) {
        float f = static_cast<float>(data[i]);
        h = fnv1a(&f, sizeof(float), h);
    }
    return h;
}

inline std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

// Derives an independent stream seed from a master seed and a purpose tag.
inline std::uint64_t derive_seed(std::uint64_t master, const std::string& purpose) {
    std::uint64_t h = fnv1a_value(master);
    return fnv1a(purpose, h);
}

// ---------------------------------------------------------------------------
// RandomStream: explicit, serialisable RNG stream.
//
// Normal draws use Box-Muller without caching the second value, so the full
// stream state is exactly the engine state (required for exact
// checkpoint/resume).
// ---------------------------------------------------------------------------

class RandomStream {
  public:
    RandomStream() : engine_(0) {}
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1].
    double uniform_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    double normal() {
        double u1 = uniform_pos();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n == 0) throw ArgumentError("uniform_int: n must be positive");
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    template <typename It>
    void shuffle(It first, It last) {
        auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            std::uint64_t j = uniform_int(i);
            std::swap(first[i - 1], first[j]);
        }
    }

    std::string serialize() const {
        std::ostringstream os;
        os << engine_;
        return os.str();
    }

    void deserialize(const std::string& s) {
        std::istringstream is(s);
        is >> engine_;
        if (!is) throw CorruptionError("RandomStream: malformed serialized state");
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace tabgen
