#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qamgolay/constructions.hpp"

namespace qamgolay {

/// The project's one pseudorandom source, "qamgolay-splitmix64-v1". Fixed
/// constants, no platform dependence, so seeded runs are reproducible
/// byte for byte.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }
    int range(int lo, int hi) {   // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

using SpecVariant = std::variant<Theorem1Spec, Theorem2Spec>;

/// Draws spec ingredients from the seeded stream. Positions, permutations,
/// triples, pairs and affine parts are all uniform over their legal sets;
/// boundary placement can be forced for the pairing-difference branches.
class SpecSampler {
public:
    explicit SpecSampler(std::uint64_t seed) : rng_(seed) {}

    enum class Boundary { Free, AtZero, AtM };

    Theorem1Spec sample_t1(int m, const std::vector<int>& factorization,
                           MuSide side, Boundary boundary = Boundary::Free);
    Theorem2Spec sample_t2(int m, const std::vector<int>& factorization_with_leading,
                           CaseAB kase, MuSide side,
                           Boundary boundary = Boundary::Free);

    SplitMix64& rng() { return rng_; }

private:
    SplitMix64 rng_;

    Perm random_perm(int m);
    StandardGcsSpec random_base(int m, MuSide side);
    std::vector<int> random_positions(int t, int m, Boundary boundary);
    std::vector<std::vector<CTriple>> random_choices(const std::vector<int>& factors);
};

/// Deterministic seeded sweep covering both constructions, the factorization
/// grid, every feasible m in [2,6], both pairing-difference sides and the
/// boundary placements. At least 200 specs for any seed.
std::vector<SpecVariant> acceptance_sweep(std::uint64_t seed);

std::string describe(const SpecVariant& spec);

} // namespace qamgolay
