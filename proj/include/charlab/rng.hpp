#pragma once

#include <cstdint>
#include <cmath>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace charlab {

// Deterministic RNG used everywhere. All distributions are implemented by
// hand on top of mt19937_64 so that streams are reproducible across standard
// library implementations, not just across runs.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : engine_(seed), seed_(seed) {}

    uint64_t u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    uint64_t uniform_int(uint64_t n) {
        const uint64_t limit = n * (UINT64_MAX / n);
        uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // standard normal via Box-Muller, no cached spare (keeps streams simple)
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[uniform_int(items.size())];
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[uniform_int(i)]);
        }
    }

    // Child stream keyed by a tag; independent of draws made on the parent.
    Rng derive(std::string_view tag) const {
        uint64_t h = 0xcbf29ce484222325ull ^ seed_;
        for (const char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return Rng(splitmix(h));
    }

    Rng derive(uint64_t tag) const { return Rng(splitmix(seed_ ^ splitmix(tag))); }

private:
    static uint64_t splitmix(uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
    uint64_t seed_;
};

}  // namespace charlab
