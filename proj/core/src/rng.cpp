#include "sboc/rng.hpp"

#include <cmath>

namespace sboc {
namespace {

// FNV-1a over the label bytes; cheap, stable, and good enough to decorrelate
// stream labels before the splitmix finalizer.
std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// splitmix64 finalizer; turns correlated (seed, label-hash) pairs into
// well-mixed generator seeds.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::string_view label)
    : seed_(seed), label_(label), gen_(mix(seed ^ mix(fnv1a(label)))) {}

RngStream RngStream::derive(std::string_view label) const {
    std::string child = label_;
    child += '/';
    child += label;
    return RngStream(seed_, child);
}

RngStream RngStream::derive(std::string_view label, std::uint64_t index) const {
    std::string child = label_;
    child += '/';
    child += label;
    child += '#';
    child += std::to_string(index);
    return RngStream(seed_, child);
}

std::uint64_t RngStream::raw() { return gen_(); }

double RngStream::uniform01() {
    // Top 53 bits -> dyadic rational in [0, 1); exact in a double.
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_int(std::uint64_t n) {
    // Rejection sampling over the smallest covering power-of-two range.
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t draw;
    do {
        draw = gen_();
    } while (draw >= limit);
    return draw % n;
}

double RngStream::normal01() {
    if (have_spare_normal_) {
        have_spare_normal_ = false;
        return spare_normal_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_normal_ = radius * std::sin(angle);
    have_spare_normal_ = true;
    return radius * std::cos(angle);
}

}  // namespace sboc
