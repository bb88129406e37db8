#include "qamgolay/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qamgolay/constructions.hpp"

namespace qamgolay {

std::string CountReport::csv_header() { return "family,q,m,formula,generated,match"; }

std::string CountReport::csv_row() const {
    std::ostringstream os;
    os << family << ',' << q << ',' << m << ',' << formula << ',' << generated << ','
       << (match() ? "true" : "false");
    return os.str();
}

std::int64_t count_standard_gcs(int m) {
    if (m < 1) throw std::out_of_range("count_standard_gcs: m must be >= 1");
    std::int64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    const std::int64_t half = m == 1 ? 1 : fact / 2;   // m=1 has a single chain
    return half * (std::int64_t(1) << (2 * (m + 1)));
}

std::int64_t count_standard_gcs_bruteforce(int m) {
    std::set<Gbf> seen;
    Perm pi = identity_perm(m);
    do {
        StandardGcsSpec spec;
        spec.m = m;
        spec.pi = pi;
        spec.c.assign(m + 1, Z4(0));
        const std::int64_t affine_total = std::int64_t(1) << (2 * (m + 1));
        for (std::int64_t code = 0; code < affine_total; ++code) {
            std::int64_t rest = code;
            for (int j = 0; j <= m; ++j) {
                spec.c[j] = Z4(static_cast<int>(rest & 3));
                rest >>= 2;
            }
            seen.insert(standard_gbf(spec));
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return static_cast<std::int64_t>(seen.size());
}

std::int64_t lower_bound_new_offsets(int m, const std::vector<int>& factorization) {
    const int t = static_cast<int>(factorization.size());
    if (m < 2 * t - 1)
        throw std::out_of_range("lower_bound_new_offsets: needs m >= 2t-1");
    std::int64_t positions = m + 1;
    // (m-t)! / (m-2t+1)! as a falling product.
    for (int v = m - t; v > m - 2 * t + 1; --v) positions *= v;
    std::int64_t choices = 1;
    for (int qk : factorization) {
        std::int64_t pow14 = 1;
        for (int i = 1; i < qk; ++i) pow14 *= 14;
        choices *= pow14 - 2 * (std::int64_t(1) << (qk - 1));
    }
    return positions * choices;
}

std::vector<CountReport> table1_row(int q, int m) {
    const std::int64_t quad = std::int64_t(m) * m - m - 2;
    std::vector<CountReport> rows;
    if (q == 4) {
        rows.push_back({"I-III", 4, m, 4032LL * m + 4040, 0});
        rows.push_back({"IV-V", 4, m, 14 * quad, 0});
        rows.push_back({"new-thm1", 4, m, 100 * quad, 0});
    } else if (q == 6) {
        rows.push_back({"I-III", 6, m, 1047552LL * m + 1047584, 0});
        rows.push_back({"IV-V", 6, m, 584 * quad, 0});
        rows.push_back({"new-thm2-cases", 6, m, (3700 + 20LL * m) * quad, 0});
    } else {
        throw std::invalid_argument("table1_row: published values cover q = 4 and 6 only");
    }
    return rows;
}

namespace {

/// Ordered positions for two factors: distance >= 2, never the {0,m} pair.
bool positions_ok(int w1, int w2, int m) {
    if (std::abs(w1 - w2) < 2) return false;
    if ((w1 == 0 && w2 == m) || (w1 == m && w2 == 0)) return false;
    return true;
}

CoefficientMatrix matrix_of_t1(int q, int m, const std::vector<int>& factorization,
                               std::vector<std::vector<CTriple>> choices,
                               std::vector<int> omegas) {
    Theorem1Spec spec;
    spec.q = q;
    spec.factorization = factorization;
    spec.d_choices = std::move(choices);
    spec.omegas = std::move(omegas);
    spec.base.m = m;
    spec.base.pi = identity_perm(m);
    spec.base.c.assign(m + 1, Z4(0));
    return coefficient_matrix(theorem1_offset(spec).s, spec.base.pi);
}

std::vector<CoefficientMatrix> sorted_unique(std::vector<CoefficientMatrix> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::vector<CoefficientMatrix> enumerate_new_offsets_q4(int m) {
    if (m < 3) throw std::out_of_range("enumerate_new_offsets_q4: needs m >= 3");
    const auto& c1 = class_members(CClass::C1);
    std::vector<CoefficientMatrix> out;
    for (int w1 = 0; w1 <= m; ++w1)
        for (int w2 = 0; w2 <= m; ++w2) {
            if (!positions_ok(w1, w2, m)) continue;
            for (const auto& da : c1)
                for (const auto& db : c1)
                    out.push_back(matrix_of_t1(4, m, {2, 2}, {{da}, {db}}, {w1, w2}));
        }
    return sorted_unique(std::move(out));
}

namespace {

/// Pairs over the nonzero classes that are not both in the d1-vanishing
/// class nor both in the d2-vanishing class.
std::vector<std::pair<CTriple, CTriple>> mixed_pairs() {
    std::vector<CTriple> nonzero;
    for (const auto& d : set_C())
        if (classify_C(d) != CClass::C4) nonzero.push_back(d);
    std::vector<std::pair<CTriple, CTriple>> out;
    for (const auto& a : nonzero)
        for (const auto& b : nonzero) {
            const CClass ca = classify_C(a), cb = classify_C(b);
            if (ca == CClass::C2 && cb == CClass::C2) continue;
            if (ca == CClass::C3 && cb == CClass::C3) continue;
            out.emplace_back(a, b);
        }
    return out;
}

CoefficientMatrix matrix_of_t2(const Theorem2Spec& base_spec) {
    return coefficient_matrix(theorem2_offset(base_spec).s, base_spec.base.pi);
}

} // namespace

Q6Cases enumerate_new_offsets_q6_cases(int m) {
    if (m < 3) throw std::out_of_range("enumerate_new_offsets_q6_cases: needs m >= 3");
    Q6Cases cases;
    const auto& c1 = class_members(CClass::C1);
    const auto pairs2 = mixed_pairs();

    // First construction, factorization 2 x 3: the 2-factor triple is doubly
    // nonvanishing, the 3-factor pair avoids the degenerate patterns.
    for (int w1 = 0; w1 <= m; ++w1)
        for (int w2 = 0; w2 <= m; ++w2) {
            if (!positions_ok(w1, w2, m)) continue;
            for (const auto& da : c1)
                for (const auto& [p1, p2] : pairs2)
                    cases.case1.push_back(
                        matrix_of_t1(6, m, {2, 3}, {{da}, {p1, p2}}, {w1, w2}));
        }

    // First construction, factorization 3 x 2, roles swapped.
    for (int w1 = 0; w1 <= m; ++w1)
        for (int w2 = 0; w2 <= m; ++w2) {
            if (!positions_ok(w1, w2, m)) continue;
            for (const auto& [p1, p2] : pairs2)
                for (const auto& db : c1)
                    cases.case2.push_back(
                        matrix_of_t1(6, m, {3, 2}, {{p1, p2}, {db}}, {w1, w2}));
        }

    // Second construction over 3 x 2, both cases, all ordered pairs.
    const auto nsgips = enumerate_nsgip(3);
    Theorem2Spec spec;
    spec.q = 6;
    spec.factorization = {3, 2};
    spec.base.m = m;
    spec.base.pi = identity_perm(m);
    spec.base.c.assign(m + 1, Z4(0));
    for (const auto& da : c1)
        for (const auto& pair : nsgips) {
            spec.d_choices = {{da}};
            spec.nsgip = pair;
            spec.kase = CaseAB::A;
            for (int v = 2; v <= m - 1; ++v)
                for (int w = 1; w <= m - 1; ++w) {
                    if (w == v || w == v - 1) continue;
                    spec.upsilon = v;
                    spec.omegas = {w};
                    cases.case3.push_back(matrix_of_t2(spec));
                }
            spec.kase = CaseAB::B;
            for (int v1 = 1; v1 <= m - 2; ++v1)
                for (int v2 = v1 + 2; v2 <= m; ++v2)
                    for (int w = 0; w <= m; ++w) {
                        if (w == v1 || w == v1 - 1 || w == v2 || w == v2 - 1) continue;
                        spec.upsilon1 = v1;
                        spec.upsilon2 = v2;
                        spec.omegas = {w};
                        cases.case4.push_back(matrix_of_t2(spec));
                    }
        }

    cases.case1 = sorted_unique(std::move(cases.case1));
    cases.case2 = sorted_unique(std::move(cases.case2));
    cases.case3 = sorted_unique(std::move(cases.case3));
    cases.case4 = sorted_unique(std::move(cases.case4));
    std::vector<CoefficientMatrix> all;
    for (const auto* part : {&cases.case1, &cases.case2, &cases.case3, &cases.case4})
        all.insert(all.end(), part->begin(), part->end());
    cases.all = sorted_unique(std::move(all));
    return cases;
}

std::vector<CoefficientMatrix> enumerate_new_offsets_q6(int m) {
    return enumerate_new_offsets_q6_cases(m).all;
}

std::vector<CoefficientMatrix> enumerate_thm1_family(int m,
                                                     const std::vector<int>& factorization) {
    const int t = static_cast<int>(factorization.size());
    if (m < 2 * t - 1)
        throw std::out_of_range("enumerate_thm1_family: needs m >= 2t-1");
    std::int64_t q = 1;
    for (int f : factorization) q *= f;

    // Per-factor tables: every triple outside the all-zero class, and the
    // table never entirely inside one of the single-vanishing classes.
    std::vector<std::vector<std::vector<CTriple>>> factor_tables(t);
    std::vector<CTriple> nonzero;
    for (const auto& d : set_C())
        if (classify_C(d) != CClass::C4) nonzero.push_back(d);
    for (int k = 0; k < t; ++k) {
        const int qk = factorization[k];
        std::vector<CTriple> current(qk - 1);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == qk - 1) {
                bool all2 = true, all3 = true;
                for (const auto& d : current) {
                    const CClass c = classify_C(d);
                    all2 = all2 && c == CClass::C2;
                    all3 = all3 && c == CClass::C3;
                }
                if (!all2 && !all3) factor_tables[k].push_back(current);
                return;
            }
            for (const auto& d : nonzero) {
                current[pos] = d;
                rec(pos + 1);
            }
        };
        rec(0);
    }

    // Ordered position tuples: pairwise distance >= 2, never 0 and m together.
    std::vector<std::vector<int>> position_tuples;
    std::vector<int> current;
    std::function<void()> pos_rec = [&]() {
        if (static_cast<int>(current.size()) == t) {
            position_tuples.push_back(current);
            return;
        }
        for (int w = 0; w <= m; ++w) {
            bool ok = true;
            for (int prev : current) {
                if (std::abs(prev - w) < 2) ok = false;
                if ((prev == 0 && w == m) || (prev == m && w == 0)) ok = false;
            }
            if (!ok) continue;
            current.push_back(w);
            pos_rec();
            current.pop_back();
        }
    };
    pos_rec();

    std::vector<CoefficientMatrix> out;
    std::vector<std::vector<CTriple>> chosen(t);
    std::function<void(int, const std::vector<int>&)> table_rec =
        [&](int k, const std::vector<int>& omegas) {
            if (k == t) {
                out.push_back(matrix_of_t1(static_cast<int>(q), m, factorization,
                                           chosen, omegas));
                return;
            }
            for (const auto& table : factor_tables[k]) {
                chosen[k] = table;
                table_rec(k + 1, omegas);
            }
        };
    for (const auto& omegas : position_tuples) table_rec(0, omegas);
    return sorted_unique(std::move(out));
}

} // namespace qamgolay
