#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace sboc {

/// Deterministic random stream addressed by (seed, label).
///
/// One master seed is split into independent sub-streams by hashing a text
/// label into the seed, so every consumer of randomness names its stream and
/// the draw order of unrelated components cannot affect each other.  All
/// variate generation is implemented on top of the raw 64-bit output of
/// std::mt19937_64, whose sequence is fixed by the standard, so identical
/// (seed, label, draw sequence) triples give identical results on every
/// platform.  The std::* distribution adapters are deliberately avoided
/// because their output is implementation-defined.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::string_view label);

    /// Child stream addressed by an additional label component.
    RngStream derive(std::string_view label) const;

    /// Child stream addressed by a label and an integer component, for
    /// per-candidate or per-restart sub-streams.
    RngStream derive(std::string_view label, std::uint64_t index) const;

    /// Next raw 64-bit word.
    std::uint64_t raw();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform integer in [0, n); n must be positive.  Uses rejection
    /// sampling so the result is exactly uniform and platform-independent.
    std::uint64_t uniform_int(std::uint64_t n);

    /// Standard normal deviate (Box-Muller on uniform01 draws).
    double normal01();

    std::uint64_t seed() const { return seed_; }
    const std::string& label() const { return label_; }

private:
    std::uint64_t seed_ = 0;
    std::string label_;
    std::mt19937_64 gen_;
    bool have_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

}  // namespace sboc
