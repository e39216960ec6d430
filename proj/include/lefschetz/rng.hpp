#ifndef LEFSCHETZ_RNG_HPP
#define LEFSCHETZ_RNG_HPP

#include <cstdint>
#include <random>

namespace lefschetz {

/**
 * Seeded random source with portable output.
 *
 * std::mt19937_64 has a fully specified output sequence, so draws are
 * byte-identical across platforms as long as we avoid the (unspecified)
 * standard library distributions.  uniform_below implements rejection
 * sampling on the raw 64-bit stream instead.
 *
 * derive(i) yields an independent child stream; (seed, i) |-> stream is a
 * pure function, so per-trial and per-instance streams do not depend on
 * how much the parent has been consumed.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : material_(seed), engine_(mix(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, bound); bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        for (;;) {
            std::uint64_t v = engine_();
            if (v < limit) return v % bound;
        }
    }

    /// Child stream for trial/instance `index`.
    Rng derive(std::uint64_t index) const {
        return Rng(mix(material_ ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
    }

    std::uint64_t seed_material() const { return material_; }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t material_;
    std::mt19937_64 engine_;
};

}  // namespace lefschetz

#endif
