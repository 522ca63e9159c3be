#ifndef BILAT_COMMON_HPP
#define BILAT_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bilat {

// Error taxonomy shared by the library and the CLI exit codes.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A structural theorem failed to hold on concrete data.  This is never
// expected to fire on valid inputs; it is a hard error, kept distinct from
// usage errors so callers can tell the two apart.
struct theorem_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct guard_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic 64-bit PRNG (splitmix64).  Used everywhere randomness is
// needed so that seeded runs are reproducible across platforms; the
// standard distributions are implementation-defined and are avoided.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).  n must be positive.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  private:
    std::uint64_t state_;
};

// FNV-1a over a byte string, used for content fingerprints in reports.
inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string to_hex(std::uint64_t v);

} // namespace bilat

#endif
