#include "gog/oracle/enumerate.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "gog/errors.hpp"
#include "gog/oracle/hom_count.hpp"

using namespace gog::oracle;
using gog::Rational;

namespace {

bool jointly_transitive(const PermutationHom& ha, const PermutationHom& hb, long long s) {
    std::vector<char> seen(s, 0);
    std::vector<long long> queue = {0};
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        const long long x = queue[head];
        for (const PermutationHom* h : {&ha, &hb}) {
            const size_t rows = h->images.size() / s;
            for (size_t r = 0; r < rows; ++r) {
                const uint8_t y = h->images[r * s + x];
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
            }
        }
    }
    return queue.size() == static_cast<size_t>(s);
}

// Reference subgroup count: group all jointly transitive pairs by the
// exhaustive basepoint-fixing equivalence and count the classes.
long long pointed_class_count(const FiniteGroupTable& a, const FiniteGroupTable& b, long long s) {
    const auto homs_a = sym_homs(a, s);
    const auto homs_b = sym_homs(b, s);
    std::vector<std::pair<const PermutationHom*, const PermutationHom*>> reps;
    for (const auto& ha : homs_a)
        for (const auto& hb : homs_b) {
            if (!jointly_transitive(ha, hb, s)) continue;
            bool known = false;
            for (const auto& [ra, rb] : reps)
                if (same_pointed_pair(ha, hb, *ra, *rb, s)) {
                    known = true;
                    break;
                }
            if (!known) reps.emplace_back(&ha, &hb);
        }
    return static_cast<long long>(reps.size());
}

std::vector<std::string> cert_strings(const std::vector<SubgroupCertificate>& certs) {
    std::vector<std::string> out;
    for (const auto& c : certs) out.push_back(c.str());
    return out;
}

}  // namespace

TEST_CASE("permutation homomorphism counts") {
    const FiniteGroupTable c2 = build_group("cyclic2");
    const FiniteGroupTable c3 = build_group("cyclic3");
    const FiniteGroupTable s3 = build_group("sym3");
    CHECK(sym_homs(c2, 3).size() == 4);
    CHECK(sym_homs(c3, 3).size() == 3);
    CHECK(sym_homs(c2, 4).size() == 10);
    // Sym(3) is the sym3 table group, so this must agree with hom_count_to
    CHECK(sym_homs(s3, 3).size() == static_cast<size_t>(hom_count_to(s3, s3)));
    CHECK(sym_homs(s3, 3).size() == 10);
    CHECK(sym_homs(c3, 9, EnumerationBudget{.max_degree = 9}).size() == 5769);
    CHECK_THROWS_AS(sym_homs(c2, 8), gog::budget_error);
}

TEST_CASE("small subgroup certificate lists are exact") {
    const FiniteGroupTable c2 = build_group("cyclic2");

    const auto at1 = enumerate_subgroups(c2, c2, 1);
    REQUIRE(at1.size() == 1);
    CHECK(at1[0].str() == "index=1 orbitsA=2 orbitsB=2 free_rank=0 min_rank=2");
    CHECK(at1[0].total_kurosh_count() == 2);

    const auto at2 = enumerate_subgroups(c2, c2, 2);
    REQUIRE(at2.size() == 3);
    CHECK(at2[0].str() == "index=2 orbitsA=2,2 orbitsB=1 free_rank=0 min_rank=2");
    CHECK(at2[1].str() == "index=2 orbitsA=1 orbitsB=2,2 free_rank=0 min_rank=2");
    CHECK(at2[2].str() == "index=2 orbitsA=1 orbitsB=1 free_rank=1 min_rank=1");
    // the third is the translation subgroup: infinite cyclic, no torsion
    CHECK(at2[2].free_rank == 1);
    CHECK(at2[2].orbits_a[0].stabilizer_order == 1);
    CHECK(at2[2].orbits_b[0].stabilizer_order == 1);
}

TEST_CASE("subgroup counts match the exhaustive pairing") {
    const FiniteGroupTable c2 = build_group("cyclic2");
    const FiniteGroupTable c3 = build_group("cyclic3");
    for (long long s = 1; s <= 4; ++s) {
        CHECK(static_cast<long long>(enumerate_subgroups(c2, c3, s).size()) ==
              pointed_class_count(c2, c3, s));
        CHECK(static_cast<long long>(enumerate_subgroups(c2, c2, s).size()) ==
              pointed_class_count(c2, c2, s));
    }
}

TEST_CASE("subgroup census values") {
    const FiniteGroupTable c2 = build_group("cyclic2");
    const FiniteGroupTable c3 = build_group("cyclic3");
    const std::vector<size_t> modular = {1, 1, 4, 8, 5, 22};
    const std::vector<size_t> hecke33 = {1, 0, 4, 8, 5, 36};
    for (long long s = 1; s <= 6; ++s) {
        CHECK(enumerate_subgroups(c2, c3, s).size() == modular[s - 1]);
        CHECK(enumerate_subgroups(c3, c3, s).size() == hecke33[s - 1]);
    }
}

TEST_CASE("certificate structure invariants") {
    const FiniteGroupTable c2 = build_group("cyclic2");
    const FiniteGroupTable c3 = build_group("cyclic3");
    const FiniteGroupTable klein = build_group("klein4");

    auto check_family = [](const FiniteGroupTable& a, const FiniteGroupTable& b, long long max_s,
                           const Rational& base_chi) {
        for (long long s = 1; s <= max_s; ++s) {
            const auto certs = enumerate_subgroups(a, b, s);
            std::vector<std::vector<uint8_t>> forms;
            for (const auto& cert : certs) {
                CHECK(cert.index == s);
                CHECK(cert.total_kurosh_count() == s + 1);
                CHECK(cert.free_rank >= 0);
                long long rank = cert.free_rank;
                for (const auto* side : {&cert.orbits_a, &cert.orbits_b}) {
                    CHECK(std::is_sorted(side->begin(), side->end(),
                                         [](const OrbitFactor& x, const OrbitFactor& y) {
                                             return x.stabilizer_order > y.stabilizer_order;
                                         }));
                    for (const auto& f : *side) {
                        CHECK(static_cast<long long>(f.stabilizer_elements.size()) ==
                              f.stabilizer_order);
                        if (f.stabilizer_order == 1) CHECK(f.min_gens == 0);
                        rank += f.min_gens;
                    }
                }
                CHECK(rank == cert.min_rank);
                // orbit sizes |A| / |stab| partition the s points, per side
                long long points_a = 0, points_b = 0;
                for (const auto& f : cert.orbits_a) points_a += a.order() / f.stabilizer_order;
                for (const auto& f : cert.orbits_b) points_b += b.order() / f.stabilizer_order;
                CHECK(points_a == s);
                CHECK(points_b == s);
                // multiplicativity of the characteristic, on the real certificate
                CHECK(chi_of_decomposition(cert.decomposition(), {}) == base_chi * Rational(s));
                forms.push_back(cert.canonical_form);
            }
            CHECK(std::is_sorted(forms.begin(), forms.end()));
            CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
        }
    };

    check_family(c2, c3, 6, Rational(-1, 6));
    check_family(c2, klein, 4, Rational(-1, 4));
}

TEST_CASE("modular group contains a rank two free subgroup at index six") {
    const FiniteGroupTable c2 = build_group("cyclic2");
    const FiniteGroupTable c3 = build_group("cyclic3");
    const auto certs = enumerate_subgroups(c2, c3, 6);
    bool found = false;
    for (const auto& cert : certs) {
        bool all_trivial = true;
        for (const auto* side : {&cert.orbits_a, &cert.orbits_b})
            for (const auto& f : *side)
                if (f.stabilizer_order != 1) all_trivial = false;
        if (!all_trivial) continue;
        found = true;
        CHECK(cert.free_rank == 2);
        CHECK(cert.min_rank == 2);
        CHECK(cert.orbits_a.size() == 3);
        CHECK(cert.orbits_b.size() == 2);
    }
    CHECK(found);
}

TEST_CASE("enumeration is deterministic across thread counts") {
    const FiniteGroupTable c2 = build_group("cyclic2");
    const FiniteGroupTable c3 = build_group("cyclic3");
    const auto serial = enumerate_subgroups(c2, c3, 5, {}, 1);
    for (int threads : {2, 3}) {
        const auto parallel = enumerate_subgroups(c2, c3, 5, {}, threads);
        REQUIRE(parallel.size() == serial.size());
        CHECK(cert_strings(parallel) == cert_strings(serial));
        for (size_t i = 0; i < serial.size(); ++i)
            CHECK(parallel[i].canonical_form == serial[i].canonical_form);
    }
    set_default_threads(2);
    CHECK(default_threads() == 2);
    const auto defaulted = enumerate_subgroups(c2, c3, 5);  // threads = 0 uses the default
    CHECK(cert_strings(defaulted) == cert_strings(serial));
    set_default_threads(1);
    CHECK(default_threads() == 1);
}

TEST_CASE("enumeration budgets and argument validation") {
    const FiniteGroupTable c2 = build_group("cyclic2");
    CHECK_THROWS_AS(enumerate_subgroups(c2, c2, 8), gog::budget_error);
    CHECK_THROWS_AS(enumerate_subgroups(c2, c2, 2, EnumerationBudget{.max_degree = 7, .max_pairs = 1}),
                    gog::budget_error);
    CHECK_THROWS_AS(enumerate_subgroups(c2, c2, 0), gog::domain_error);
}

TEST_CASE("rank gradient estimates") {
    const FiniteGroupTable c2 = build_group("cyclic2");
    const FiniteGroupTable c3 = build_group("cyclic3");
    const std::vector<Rational> expected = {Rational(1),     Rational(1, 2), Rational(1, 3),
                                            Rational(1, 4),  Rational(1, 4), Rational(1, 6)};
    Rational prev = Rational(2);
    for (long long s = 1; s <= 6; ++s) {
        const Rational est = rank_gradient_estimate(c2, c3, s);
        CHECK(est == expected[s - 1]);
        CHECK(est <= prev);
        prev = est;
    }
    CHECK(rank_gradient_estimate(c2, c2, 1) == Rational(1));
    CHECK(rank_gradient_estimate(c2, c2, 2) == Rational(0));
    CHECK(rank_gradient_estimate(c2, c2, 4) == Rational(0));
}

TEST_CASE("growth rate witnesses") {
    const FiniteGroupTable c2 = build_group("cyclic2");
    const FiniteGroupTable c3 = build_group("cyclic3");

    const VcRateWitness w1 = vc_rate_witness(c2, c2, c2, 2);
    CHECK(w1.best_rate == Rational(1));
    CHECK(w1.witness_index == 1);

    const VcRateWitness w2 = vc_rate_witness(c2, c3, c2, 6);
    CHECK(w2.best_rate == Rational(2, 3));
    CHECK(w2.witness_index == 3);

    CHECK_THROWS_AS(vc_rate_witness(c2, c2, build_group("cyclic1"), 2), gog::domain_error);

    // recompute the witness from raw certificates to confirm the scoring
    Rational best = Rational(-1000);
    long long best_index = 0;
    for (long long s = 1; s <= 3; ++s)
        for (const auto& cert : enumerate_subgroups(c2, c3, s)) {
            long long homs = 1;
            for (const auto* side : {&cert.orbits_a, &cert.orbits_b}) {
                const FiniteGroupTable& parent = side == &cert.orbits_a ? c2 : c3;
                for (const auto& f : *side)
                    homs *= hom_count_to(subgroup_table(parent, f.stabilizer_elements), c2);
            }
            for (long long i = 0; i < cert.free_rank; ++i) homs *= 2;
            long long e = 0, cur = 1;
            while (cur * 2 <= homs) {
                cur *= 2;
                ++e;
            }
            const Rational rate(e - 1, s);
            if (rate > best) {
                best = rate;
                best_index = s;
            }
        }
    const VcRateWitness w3 = vc_rate_witness(c2, c3, c2, 3);
    CHECK(w3.best_rate == best);
    CHECK(w3.witness_index == best_index);
}

TEST_CASE("volume interval folding") {
    CHECK_THROWS_AS(volume_estimates({}), gog::domain_error);
    CHECK_THROWS_AS(volume_estimates({{Rational(1), 0}}), gog::domain_error);

    const VolumeEstimates single = volume_estimates({{Rational(1), 1}});
    CHECK(single.lower == Rational(1));
    CHECK(single.upper == Rational(1));

    const VolumeEstimates two = volume_estimates({{Rational(1), 2}, {Rational(1), 4}});
    CHECK(two.lower == Rational(1, 2));
    CHECK(two.upper == Rational(1, 4));

    // normalized free rank of modular group subgroups peaks at the index six
    // free subgroup
    const FiniteGroupTable c2 = build_group("cyclic2");
    const FiniteGroupTable c3 = build_group("cyclic3");
    std::vector<VolumeSample> samples;
    for (long long s = 1; s <= 6; ++s)
        for (const auto& cert : enumerate_subgroups(c2, c3, s))
            samples.push_back({Rational(cert.free_rank - 1), s});
    CHECK(volume_estimates(samples).lower == Rational(1, 6));
}
