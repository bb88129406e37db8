#include "qamgolay/sampling.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qamgolay/offsets.hpp"

namespace qamgolay {

Perm SpecSampler::random_perm(int m) {
    Perm pi = identity_perm(m);
    for (int i = m - 1; i > 0; --i)
        std::swap(pi[i], pi[rng_.range(0, i)]);
    return pi;
}

StandardGcsSpec SpecSampler::random_base(int m, MuSide side) {
    StandardGcsSpec base;
    base.m = m;
    base.pi = random_perm(m);
    base.c.resize(m + 1);
    for (auto& c : base.c) c = Z4(rng_.range(0, 3));
    base.c_prime = Z4(rng_.range(0, 3));
    base.side = side;
    return base;
}

std::vector<int> SpecSampler::random_positions(int t, int m, Boundary boundary) {
    if (t > m + 1)
        throw std::invalid_argument("random_positions: more factors than positions");
    std::set<int> chosen;
    if (boundary == Boundary::AtZero) chosen.insert(0);
    if (boundary == Boundary::AtM) chosen.insert(m);
    while (static_cast<int>(chosen.size()) < t) chosen.insert(rng_.range(0, m));
    std::vector<int> omegas(chosen.begin(), chosen.end());
    for (int i = static_cast<int>(omegas.size()) - 1; i > 0; --i)
        std::swap(omegas[i], omegas[rng_.range(0, i)]);
    return omegas;
}

std::vector<std::vector<CTriple>>
SpecSampler::random_choices(const std::vector<int>& factors) {
    const auto& C = set_C();
    std::vector<std::vector<CTriple>> choices;
    for (int qk : factors) {
        std::vector<CTriple> row;
        for (int p = 1; p < qk; ++p)
            row.push_back(C[rng_.range(0, static_cast<int>(C.size()) - 1)]);
        choices.push_back(std::move(row));
    }
    return choices;
}

Theorem1Spec SpecSampler::sample_t1(int m, const std::vector<int>& factorization,
                                    MuSide side, Boundary boundary) {
    Theorem1Spec spec;
    spec.factorization = factorization;
    spec.q = 1;
    for (int f : factorization) spec.q *= f;
    spec.d_choices = random_choices(factorization);
    spec.omegas = random_positions(static_cast<int>(factorization.size()), m, boundary);
    spec.mu_side = side;
    spec.base = random_base(m, side);
    spec.validate();
    return spec;
}

Theorem2Spec SpecSampler::sample_t2(int m,
                                    const std::vector<int>& factorization_with_leading,
                                    CaseAB kase, MuSide side, Boundary boundary) {
    Theorem2Spec spec;
    spec.factorization = factorization_with_leading;
    spec.q = 1;
    for (int f : spec.factorization) spec.q *= f;
    const std::vector<int> rest(spec.factorization.begin() + 1,
                                spec.factorization.end());
    spec.d_choices = random_choices(rest);
    spec.omegas = random_positions(static_cast<int>(rest.size()), m, boundary);
    const auto pairs = enumerate_nsgip(spec.factorization[0]);
    if (pairs.empty())
        throw std::invalid_argument("sample_t2: no admissible pair for this leading factor");
    spec.nsgip = pairs[rng_.range(0, static_cast<int>(pairs.size()) - 1)];
    spec.kase = kase;
    if (kase == CaseAB::A) {
        if (m < 3) throw std::invalid_argument("sample_t2: case a needs m >= 3");
        spec.upsilon = rng_.range(2, m - 1);
    } else {
        if (m < 3) throw std::invalid_argument("sample_t2: case b needs m >= 3");
        spec.upsilon1 = rng_.range(1, m - 2);
        spec.upsilon2 = rng_.range(spec.upsilon1 + 2, m);
    }
    spec.mu_side = side;
    spec.base = random_base(m, side);
    spec.validate();
    return spec;
}

std::vector<SpecVariant> acceptance_sweep(std::uint64_t seed) {
    SpecSampler sampler(seed);
    std::vector<SpecVariant> specs;

    const std::vector<std::vector<int>> t1_factorizations = {
        {2, 2}, {3, 2}, {2, 3}, {2, 2, 2}};
    const std::vector<std::vector<int>> t2_factorizations = {{3}, {3, 2}, {3, 2, 2}};
    const MuSide sides[] = {MuSide::First, MuSide::Last};
    const SpecSampler::Boundary boundaries[] = {SpecSampler::Boundary::Free,
                                                SpecSampler::Boundary::AtZero,
                                                SpecSampler::Boundary::AtM};

    for (const auto& fact : t1_factorizations)
        for (int m = 2; m <= 6; ++m) {
            if (static_cast<int>(fact.size()) > m + 1) continue;
            for (MuSide side : sides)
                for (auto boundary : boundaries)
                    specs.emplace_back(sampler.sample_t1(m, fact, side, boundary));
        }

    for (const auto& fact : t2_factorizations)
        for (int m = 3; m <= 6; ++m) {
            const int t = static_cast<int>(fact.size()) - 1;
            if (t > m + 1) continue;
            for (CaseAB kase : {CaseAB::A, CaseAB::B})
                for (MuSide side : sides) {
                    specs.emplace_back(sampler.sample_t2(m, fact, kase, side,
                                                         SpecSampler::Boundary::Free));
                    if (t > 0) {
                        specs.emplace_back(sampler.sample_t2(
                            m, fact, kase, side, SpecSampler::Boundary::AtZero));
                        specs.emplace_back(sampler.sample_t2(
                            m, fact, kase, side, SpecSampler::Boundary::AtM));
                    }
                }
        }

    return specs;
}

std::string describe(const SpecVariant& spec) {
    std::ostringstream os;
    if (std::holds_alternative<Theorem1Spec>(spec)) {
        const auto& s = std::get<Theorem1Spec>(spec);
        os << "t1 q=" << s.q << " m=" << s.m() << " fact=";
        for (std::size_t i = 0; i < s.factorization.size(); ++i)
            os << (i ? "x" : "") << s.factorization[i];
        os << " omegas=";
        for (std::size_t i = 0; i < s.omegas.size(); ++i)
            os << (i ? "," : "") << s.omegas[i];
        os << (s.mu_side == MuSide::First ? " mu=first" : " mu=last");
    } else {
        const auto& s = std::get<Theorem2Spec>(spec);
        os << "t2 q=" << s.q << " m=" << s.m() << " fact=";
        for (std::size_t i = 0; i < s.factorization.size(); ++i)
            os << (i ? "x" : "") << s.factorization[i];
        os << " case=" << (s.kase == CaseAB::A ? 'a' : 'b');
        if (s.kase == CaseAB::A)
            os << " v=" << s.upsilon;
        else
            os << " v1=" << s.upsilon1 << " v2=" << s.upsilon2;
        os << (s.mu_side == MuSide::First ? " mu=first" : " mu=last");
    }
    return os.str();
}

} // namespace qamgolay
