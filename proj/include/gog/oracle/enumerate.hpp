#pragma once

#include <cstdint>
#include <vector>

#include "gog/decomposition.hpp"
#include "gog/oracle/group_table.hpp"
#include "gog/rational.hpp"

namespace gog::oracle {

// Hard limits for the brute-force enumerations.  Exceeding one throws
// budget_error; there is no silent truncation.  Callers that genuinely need
// a deeper search pass a larger budget explicitly.
struct EnumerationBudget {
    long long max_degree = 7;            // points the actions may move
    long long max_pairs = 200000000;     // |Hom(A,Sym(s))| * |Hom(B,Sym(s))|
};

// Default worker-thread count for the enumeration loops (1 = serial).
// Results are aggregated deterministically, so the thread count never
// changes any output, only wall time.
void set_default_threads(int threads);
int default_threads();

// A homomorphism from a table group into Sym(s), stored as the images of
// the group's minimal generators (flattened r x s, row per generator).
struct PermutationHom {
    std::vector<uint8_t> images;
};

// All homomorphisms G -> Sym(s), enumerated in a fixed deterministic order.
std::vector<PermutationHom> sym_homs(const FiniteGroupTable& g, long long s,
                                     const EnumerationBudget& budget = {});

// One free factor of an index-s subgroup: the point stabilizer of one orbit
// of a vertex-group action, as a concrete subgroup of that vertex group.
struct OrbitFactor {
    long long stabilizer_order;
    long long min_gens;
    std::vector<uint8_t> stabilizer_elements;
    bool operator==(const OrbitFactor&) const = default;
};

// Certificate for one conjugacy-representative subgroup of index s in A * B:
// a pair of actions on s points, jointly transitive, with the subgroup
// realized as the stabilizer of point 0.  The factors are one per A-orbit
// and one per B-orbit (trivial stabilizers included; they count toward the
// Kurosh factor total), plus a free group of rank
//   free_rank = s - #orbits(A) - #orbits(B) + 1.
// min_rank sums minimal generator counts over the nontrivial factors plus
// free_rank.
struct SubgroupCertificate {
    long long index = 1;
    std::vector<OrbitFactor> orbits_a;
    std::vector<OrbitFactor> orbits_b;
    long long free_rank = 0;
    long long min_rank = 0;
    // Relabel-canonical generator images (A rows then B rows); equal bytes
    // mean equal subgroups, and the certificate list is sorted by them.
    std::vector<uint8_t> canonical_form;

    long long total_kurosh_count() const {
        return static_cast<long long>(orbits_a.size() + orbits_b.size()) + free_rank;
    }
    FreeProductDecomposition decomposition() const;
    // "index=<s> orbitsA=<orders> orbitsB=<orders> free_rank=<f> min_rank=<r>"
    std::string str() const;
};

// One certificate per index-s subgroup of A * B, deduplicated by
// basepoint-fixing simultaneous relabeling of the two actions and sorted
// canonically.  Deterministic for any thread count.
std::vector<SubgroupCertificate> enumerate_subgroups(const FiniteGroupTable& a,
                                                     const FiniteGroupTable& b, long long s,
                                                     const EnumerationBudget& budget = {},
                                                     int threads = 0);

// Reference equality test used to validate the canonical relabeling: do the
// two action pairs agree after some bijection of the s points that fixes
// point 0?  Exhaustive over all (s-1)! candidates; test-scale only.
bool same_pointed_pair(const PermutationHom& a1, const PermutationHom& b1,
                       const PermutationHom& a2, const PermutationHom& b2, long long s);

// min over all subgroups of index <= max_index of (min_rank - 1) / index.
// Streams over all transitive action pairs; duplicates cannot change a min.
Rational rank_gradient_estimate(const FiniteGroupTable& a, const FiniteGroupTable& b,
                                long long max_index, const EnumerationBudget& budget = {},
                                int threads = 0);

// Growth-rate witness: over every subgroup H of index <= max_index, compute
// |Hom(H, C)| from its decomposition (product over stabilizer factors times
// |C|^free_rank), take the floor exponent e = max{ e : |C|^e <= |Hom| },
// and score the certificate (e - 1) / index.  Returns the best score and
// the smallest index attaining it.  Requires |C| >= 2.
struct VcRateWitness {
    Rational best_rate;
    long long witness_index = 1;
};
VcRateWitness vc_rate_witness(const FiniteGroupTable& a, const FiniteGroupTable& b,
                              const FiniteGroupTable& c, long long max_index,
                              const EnumerationBudget& budget = {}, int threads = 0);

// Fold finite-index samples of a normalized invariant into interval
// estimates: lower = max sigma/index, upper = min sigma/index.
struct VolumeSample {
    Rational sigma;
    long long index;
};
struct VolumeEstimates {
    Rational lower;
    Rational upper;
};
VolumeEstimates volume_estimates(const std::vector<VolumeSample>& samples);

}  // namespace gog::oracle
