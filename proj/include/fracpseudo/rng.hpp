#ifndef FRACPSEUDO_RNG_HPP
#define FRACPSEUDO_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "fracpseudo/errors.hpp"

// Reproducible randomness plumbing.  Every Monte Carlo sample owns an engine
// derived from (seed, stream index), so estimates are bit-identical no matter
// how the sample loop is scheduled.  Uniforms come straight from the engine's
// high bits: distribution adapters in the standard library are
// implementation-defined and would break cross-toolchain reproducibility.

namespace fracpseudo::rng {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(mix64(seed ^ mix64(stream)));
}

// uniform on (0,1]: never returns 0, so negative-power transforms stay finite
inline double uniform01(std::mt19937_64& eng) {
    return (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;
}

// Exact Poisson sampling by inversion of a mode-anchored table.  Probabilities
// are built from pmf ratios p_{k+1}/p_k = m/(k+1), so no e^{-m} underflow for
// large means; entries below 1e-18 of the mode are dropped (total mass error
// < 1e-13 even with thousands of entries).
class poisson_table {
  public:
    explicit poisson_table(double mean) {
        if (!(mean >= 0.0)) throw domain_error("poisson mean must be nonnegative");
        if (mean == 0.0) {
            k0_ = 0;
            cdf_.assign(1, 1.0);
            return;
        }
        const long mode = static_cast<long>(mean);
        std::vector<double> left;  // mode-1 downward
        double p = 1.0;
        for (long k = mode; k > 0; --k) {
            p *= static_cast<double>(k) / mean;
            if (p < 1e-18) break;
            left.push_back(p);
        }
        std::vector<double> probs(left.rbegin(), left.rend());
        k0_ = mode - static_cast<long>(left.size());
        probs.push_back(1.0);
        p = 1.0;
        for (long k = mode;; ++k) {
            p *= mean / static_cast<double>(k + 1);
            if (p < 1e-18) break;
            probs.push_back(p);
        }
        cdf_.resize(probs.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            cdf_[i] = acc;
        }
        for (double& c : cdf_) c /= acc;
        cdf_.back() = 1.0;
    }

    long sample(double u) const {
        std::size_t lo = 0, hi = cdf_.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cdf_[mid] < u)
                lo = mid + 1;
            else
                hi = mid;
        }
        return k0_ + static_cast<long>(lo);
    }

  private:
    long k0_ = 0;
    std::vector<double> cdf_;
};

}

#endif
