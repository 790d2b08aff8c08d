//
// pschur : small deterministic RNG (splitmix64) with derived substreams.
// Hand-rolled so generated instances reproduce from a seed regardless of
// standard-library distribution details.
//
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace pschur {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // inclusive bounds
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next() %
                                           static_cast<std::uint64_t>(hi - lo + 1));
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

    // independent deterministic substream for trial indices
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng mixer(seed ^ (0x632be59bd9b4e019ull * (index + 1)));
        return Rng(mixer.next());
    }

    std::uint64_t seed_value() const { return state_; }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace pschur
