#include "gog/oracle/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "gog/errors.hpp"
#include "gog/oracle/hom_count.hpp"

namespace gog::oracle {

namespace {

// Above this degree the all-permutations candidate pool itself is out of
// reach, independent of the configurable budget.
constexpr long long kHardDegreeCap = 10;

int g_default_threads = 1;

std::vector<std::vector<uint8_t>> perms_of(int s) {
    std::vector<std::vector<uint8_t>> out;
    std::vector<uint8_t> p(s);
    for (int i = 0; i < s; ++i) p[i] = static_cast<uint8_t>(i);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool perm_power_is_identity(const std::vector<uint8_t>& p, long long e) {
    const int s = static_cast<int>(p.size());
    for (int x = 0; x < s; ++x) {
        int y = x;
        for (long long i = 0; i < e; ++i) y = p[y];
        if (y != x) return false;
    }
    return true;
}

// Everything precomputed about the action homs of one vertex group at one
// degree.  stab_hom_product is only filled when a hom-count target group is
// supplied (the growth-rate path).
struct GroupActions {
    int r = 0;  // generator count
    int s = 1;
    std::vector<PermutationHom> homs;
    std::vector<int> orbit_count;
    std::vector<long long> min_gens_sum;
    std::vector<__int128> stab_hom_product;
};

struct SubgroupStatsMemo {
    std::unordered_map<uint64_t, long long> min_gens;
    std::unordered_map<uint64_t, long long> hom_count;
};

// Builds the full action of every group element from generator images by
// walking the Cayley graph, mirroring the extension logic used for finite
// targets.  Returns false when the images do not define a homomorphism.
bool extend_action(const FiniteGroupTable& g, const std::vector<uint8_t>& gens,
                   const uint8_t* images, int s, std::vector<uint8_t>& action) {
    const long long n = g.order();
    action.assign(n * s, 0);
    std::vector<char> known(n, 0);
    for (int x = 0; x < s; ++x) action[x] = static_cast<uint8_t>(x);
    known[0] = 1;
    std::vector<uint8_t> queue = {0};
    while (!queue.empty()) {
        uint8_t a = queue.back();
        queue.pop_back();
        for (size_t i = 0; i < gens.size(); ++i) {
            uint8_t b = g.mul(a, gens[i]);
            if (!known[b]) {
                known[b] = 1;
                const uint8_t* img = images + i * s;
                for (int x = 0; x < s; ++x) action[b * s + x] = action[a * s + img[x]];
                queue.push_back(b);
            }
        }
    }
    for (long long a = 0; a < n; ++a)
        for (size_t i = 0; i < gens.size(); ++i) {
            uint8_t b = g.mul(static_cast<uint8_t>(a), gens[i]);
            const uint8_t* img = images + i * s;
            for (int x = 0; x < s; ++x)
                if (action[b * s + x] != action[a * s + img[x]]) return false;
        }
    return true;
}

long long memo_min_gens(const FiniteGroupTable& g, uint64_t mask, SubgroupStatsMemo& memo) {
    auto it = memo.min_gens.find(mask);
    if (it != memo.min_gens.end()) return it->second;
    std::vector<uint8_t> elements;
    for (long long x = 0; x < g.order(); ++x)
        if (mask >> x & 1) elements.push_back(static_cast<uint8_t>(x));
    long long value = (elements.size() == 1) ? 0 : min_generators(subgroup_table(g, elements));
    memo.min_gens[mask] = value;
    return value;
}

long long memo_hom_count(const FiniteGroupTable& g, uint64_t mask, const FiniteGroupTable& target,
                         SubgroupStatsMemo& memo) {
    auto it = memo.hom_count.find(mask);
    if (it != memo.hom_count.end()) return it->second;
    std::vector<uint8_t> elements;
    for (long long x = 0; x < g.order(); ++x)
        if (mask >> x & 1) elements.push_back(static_cast<uint8_t>(x));
    long long value =
        (elements.size() == 1) ? 1 : hom_count_to(subgroup_table(g, elements), target);
    memo.hom_count[mask] = value;
    return value;
}

GroupActions build_actions(const FiniteGroupTable& g, long long s, const EnumerationBudget& budget,
                           SubgroupStatsMemo& memo, const FiniteGroupTable* hom_target) {
    if (s < 1) throw domain_error("degree must be >= 1");
    if (s > budget.max_degree)
        throw budget_error("degree " + std::to_string(s) + " exceeds budget max_degree " +
                           std::to_string(budget.max_degree));
    if (s > kHardDegreeCap)
        throw budget_error("degree " + std::to_string(s) + " exceeds the hard cap " +
                           std::to_string(kHardDegreeCap));
    if (g.order() > 64) throw domain_error("vertex group too large for the enumeration oracle");

    GroupActions out;
    out.s = static_cast<int>(s);
    const std::vector<uint8_t>& gens = g.minimal_generators();
    out.r = static_cast<int>(gens.size());

    const std::vector<std::vector<uint8_t>> pool = perms_of(out.s);
    std::vector<std::vector<uint32_t>> candidates(gens.size());
    __int128 tuple_count = 1;
    for (size_t i = 0; i < gens.size(); ++i) {
        long long d = g.element_order(gens[i]);
        for (uint32_t p = 0; p < pool.size(); ++p)
            if (perm_power_is_identity(pool[p], d)) candidates[i].push_back(p);
        tuple_count *= static_cast<long long>(candidates[i].size());
        if (tuple_count > budget.max_pairs)
            throw budget_error("candidate image tuples exceed budget max_pairs " +
                               std::to_string(budget.max_pairs));
    }

    std::vector<uint8_t> images(gens.size() * out.s);
    std::vector<uint8_t> action;
    std::vector<size_t> pick(gens.size(), 0);

    auto accept = [&](const std::vector<uint8_t>& act) {
        PermutationHom hom;
        hom.images = images;
        // orbits of the generated permutation group on the s points
        std::vector<int> orbit_of(out.s, -1);
        int orbits = 0;
        long long mg_sum = 0;
        __int128 hom_prod = 1;
        for (int p = 0; p < out.s; ++p) {
            if (orbit_of[p] >= 0) continue;
            std::vector<uint8_t> queue = {static_cast<uint8_t>(p)};
            orbit_of[p] = orbits;
            while (!queue.empty()) {
                uint8_t x = queue.back();
                queue.pop_back();
                for (int i = 0; i < out.r; ++i) {
                    uint8_t y = images[i * out.s + x];
                    if (orbit_of[y] < 0) {
                        orbit_of[y] = orbits;
                        queue.push_back(y);
                    }
                }
            }
            // stabilizer of the orbit representative p
            uint64_t mask = 0;
            for (long long a = 0; a < g.order(); ++a)
                if (act[a * out.s + p] == p) mask |= uint64_t{1} << a;
            mg_sum += memo_min_gens(g, mask, memo);
            if (hom_target) hom_prod *= memo_hom_count(g, mask, *hom_target, memo);
            ++orbits;
        }
        out.homs.push_back(std::move(hom));
        out.orbit_count.push_back(orbits);
        out.min_gens_sum.push_back(mg_sum);
        if (hom_target) out.stab_hom_product.push_back(hom_prod);
    };

    if (gens.empty()) {
        images.clear();
        action.assign(out.s, 0);
        for (int x = 0; x < out.s; ++x) action[x] = static_cast<uint8_t>(x);
        accept(action);
        return out;
    }

    while (true) {
        for (size_t i = 0; i < gens.size(); ++i) {
            const std::vector<uint8_t>& p = pool[candidates[i][pick[i]]];
            std::copy(p.begin(), p.end(), images.begin() + i * out.s);
        }
        if (extend_action(g, gens, images.data(), out.s, action)) accept(action);
        size_t level = gens.size();
        while (level > 0) {
            if (++pick[level - 1] < candidates[level - 1].size()) break;
            pick[level - 1] = 0;
            --level;
        }
        if (level == 0) break;
    }
    return out;
}

// Joint breadth-first labeling from point 0 across both generator image
// sets.  Returns the number of points reached; fills label with the
// discovery ranks (the canonical relabeling).  Two pointed action pairs are
// conjugate by a point-0-fixing bijection exactly when their relabeled
// images coincide, because the discovery walk is defined purely by the
// abstract pointed actions.
int joint_bfs_label(const uint8_t* rows_a, int ra, const uint8_t* rows_b, int rb, int s,
                    uint8_t* label) {
    uint8_t order[16];
    bool seen[16] = {false};
    order[0] = 0;
    seen[0] = true;
    int found = 1;
    for (int head = 0; head < found; ++head) {
        uint8_t p = order[head];
        for (int i = 0; i < ra; ++i) {
            uint8_t q = rows_a[i * s + p];
            if (!seen[q]) {
                seen[q] = true;
                order[found++] = q;
            }
        }
        for (int i = 0; i < rb; ++i) {
            uint8_t q = rows_b[i * s + p];
            if (!seen[q]) {
                seen[q] = true;
                order[found++] = q;
            }
        }
    }
    for (int k = 0; k < found; ++k) label[order[k]] = static_cast<uint8_t>(k);
    return found;
}

std::vector<uint8_t> canonical_bytes(const uint8_t* rows_a, int ra, const uint8_t* rows_b, int rb,
                                     int s, const uint8_t* label) {
    std::vector<uint8_t> bytes((ra + rb) * s);
    for (int i = 0; i < ra; ++i)
        for (int p = 0; p < s; ++p) bytes[i * s + label[p]] = label[rows_a[i * s + p]];
    for (int i = 0; i < rb; ++i)
        for (int p = 0; p < s; ++p) bytes[(ra + i) * s + label[p]] = label[rows_b[i * s + p]];
    return bytes;
}

void check_pair_budget(size_t na, size_t nb, const EnumerationBudget& budget) {
    if (static_cast<__int128>(na) * static_cast<__int128>(nb) > budget.max_pairs)
        throw budget_error("action pair count " + std::to_string(na) + " * " + std::to_string(nb) +
                           " exceeds budget max_pairs " + std::to_string(budget.max_pairs));
}

std::vector<OrbitFactor> orbit_factors(const FiniteGroupTable& g, const std::vector<uint8_t>& action,
                                       const uint8_t* rows, int r, int s,
                                       SubgroupStatsMemo& memo) {
    std::vector<int> orbit_of(s, -1);
    std::vector<OrbitFactor> factors;
    for (int p = 0; p < s; ++p) {
        if (orbit_of[p] >= 0) continue;
        std::vector<uint8_t> queue = {static_cast<uint8_t>(p)};
        orbit_of[p] = 1;
        while (!queue.empty()) {
            uint8_t x = queue.back();
            queue.pop_back();
            for (int i = 0; i < r; ++i) {
                uint8_t y = rows[i * s + x];
                if (orbit_of[y] < 0) {
                    orbit_of[y] = 1;
                    queue.push_back(y);
                }
            }
        }
        OrbitFactor f;
        for (long long a = 0; a < g.order(); ++a)
            if (action[a * s + p] == p) f.stabilizer_elements.push_back(static_cast<uint8_t>(a));
        f.stabilizer_order = static_cast<long long>(f.stabilizer_elements.size());
        uint64_t mask = 0;
        for (uint8_t e : f.stabilizer_elements) mask |= uint64_t{1} << e;
        f.min_gens = memo_min_gens(g, mask, memo);
        factors.push_back(std::move(f));
    }
    std::stable_sort(factors.begin(), factors.end(), [](const OrbitFactor& x, const OrbitFactor& y) {
        return x.stabilizer_order > y.stabilizer_order;
    });
    return factors;
}

}  // namespace

void set_default_threads(int threads) { g_default_threads = threads < 1 ? 1 : threads; }
int default_threads() { return g_default_threads; }

std::vector<PermutationHom> sym_homs(const FiniteGroupTable& g, long long s,
                                     const EnumerationBudget& budget) {
    SubgroupStatsMemo memo;
    return build_actions(g, s, budget, memo, nullptr).homs;
}

FreeProductDecomposition SubgroupCertificate::decomposition() const {
    FreeProductDecomposition d;
    d.index = index;
    for (size_t i = 0; i < orbits_a.size(); ++i)
        d.factors.push_back({"A" + std::to_string(i + 1), FactorKind::FiniteOrder,
                             orbits_a[i].stabilizer_order, 1});
    for (size_t i = 0; i < orbits_b.size(); ++i)
        d.factors.push_back({"B" + std::to_string(i + 1), FactorKind::FiniteOrder,
                             orbits_b[i].stabilizer_order, 1});
    d.free_rank = free_rank;
    return d;
}

std::string SubgroupCertificate::str() const {
    auto orders = [](const std::vector<OrbitFactor>& factors) {
        std::string s;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(factors[i].stabilizer_order);
        }
        return s;
    };
    return "index=" + std::to_string(index) + " orbitsA=" + orders(orbits_a) +
           " orbitsB=" + orders(orbits_b) + " free_rank=" + std::to_string(free_rank) +
           " min_rank=" + std::to_string(min_rank);
}

std::vector<SubgroupCertificate> enumerate_subgroups(const FiniteGroupTable& a,
                                                     const FiniteGroupTable& b, long long s,
                                                     const EnumerationBudget& budget, int threads) {
    SubgroupStatsMemo memo_a;
    SubgroupStatsMemo memo_b;
    const GroupActions da = build_actions(a, s, budget, memo_a, nullptr);
    const GroupActions db = build_actions(b, s, budget, memo_b, nullptr);
    check_pair_budget(da.homs.size(), db.homs.size(), budget);
    const int si = static_cast<int>(s);

    if (threads < 1) threads = default_threads();
    const size_t na = da.homs.size();
    size_t chunk_count = std::min<size_t>(threads, na);
    if (chunk_count == 0) chunk_count = 1;

    // Each worker collects the canonical forms for a contiguous slice of the
    // A side; set union afterwards is order-independent, so the thread count
    // cannot influence the result.
    std::vector<std::set<std::vector<uint8_t>>> partial(chunk_count);
    auto worker = [&](size_t w) {
        std::set<std::vector<uint8_t>>& forms = partial[w];
        uint8_t label[16];
        for (size_t i = w * na / chunk_count; i < (w + 1) * na / chunk_count; ++i) {
            for (size_t j = 0; j < db.homs.size(); ++j) {
                if (da.orbit_count[i] + db.orbit_count[j] > si + 1) continue;
                const uint8_t* ra = da.homs[i].images.data();
                const uint8_t* rb = db.homs[j].images.data();
                if (joint_bfs_label(ra, da.r, rb, db.r, si, label) != si) continue;
                forms.insert(canonical_bytes(ra, da.r, rb, db.r, si, label));
            }
        }
    };
    if (chunk_count == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < chunk_count; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    std::set<std::vector<uint8_t>> forms;
    for (auto& p : partial) forms.merge(p);

    std::vector<SubgroupCertificate> certs;
    std::vector<uint8_t> action;
    for (const std::vector<uint8_t>& form : forms) {
        SubgroupCertificate cert;
        cert.index = s;
        cert.canonical_form = form;
        const uint8_t* ra = form.data();
        const uint8_t* rb = form.data() + da.r * si;
        if (!extend_action(a, a.minimal_generators(), ra, si, action))
            throw domain_error("canonical form failed to rebuild an action");
        cert.orbits_a = orbit_factors(a, action, ra, da.r, si, memo_a);
        if (!extend_action(b, b.minimal_generators(), rb, si, action))
            throw domain_error("canonical form failed to rebuild an action");
        cert.orbits_b = orbit_factors(b, action, rb, db.r, si, memo_b);
        cert.free_rank =
            s + 1 - static_cast<long long>(cert.orbits_a.size() + cert.orbits_b.size());
        cert.min_rank = cert.free_rank;
        for (const auto& f : cert.orbits_a) cert.min_rank += f.min_gens;
        for (const auto& f : cert.orbits_b) cert.min_rank += f.min_gens;
        certs.push_back(std::move(cert));
    }
    // std::set already delivered the forms in lexicographic order
    return certs;
}

bool same_pointed_pair(const PermutationHom& a1, const PermutationHom& b1,
                       const PermutationHom& a2, const PermutationHom& b2, long long s) {
    const int si = static_cast<int>(s);
    const int ra = static_cast<int>(a1.images.size()) / si;
    const int rb = static_cast<int>(b1.images.size()) / si;
    if (a2.images.size() != a1.images.size() || b2.images.size() != b1.images.size()) return false;
    std::vector<uint8_t> sigma(si);
    std::iota(sigma.begin(), sigma.end(), 0);
    auto matches = [&]() {
        auto row_ok = [&](const uint8_t* p, const uint8_t* q) {
            for (int x = 0; x < si; ++x)
                if (sigma[p[x]] != q[sigma[x]]) return false;
            return true;
        };
        for (int i = 0; i < ra; ++i)
            if (!row_ok(a1.images.data() + i * si, a2.images.data() + i * si)) return false;
        for (int i = 0; i < rb; ++i)
            if (!row_ok(b1.images.data() + i * si, b2.images.data() + i * si)) return false;
        return true;
    };
    // all bijections fixing point 0
    do {
        if (matches()) return true;
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
    return false;
}

Rational rank_gradient_estimate(const FiniteGroupTable& a, const FiniteGroupTable& b,
                                long long max_index, const EnumerationBudget& budget,
                                int threads) {
    (void)threads;  // the pruned scan below is serial by design
    if (max_index < 1) throw domain_error("max_index must be >= 1");
    SubgroupStatsMemo memo_a;
    SubgroupStatsMemo memo_b;
    bool have_best = false;
    Rational best;
    for (long long s = 1; s <= max_index; ++s) {
        const GroupActions da = build_actions(a, s, budget, memo_a, nullptr);
        const GroupActions db = build_actions(b, s, budget, memo_b, nullptr);
        check_pair_budget(da.homs.size(), db.homs.size(), budget);
        const int si = static_cast<int>(s);
        // min_rank = dA[i] + dB[j] + s + 1 with d = min_gens_sum - orbit_count,
        // so scanning both sides in ascending d order lets the loop stop as
        // soon as no remaining pair can improve on the best found.
        auto deltas = [](const GroupActions& ga) {
            std::vector<std::pair<long long, size_t>> d(ga.homs.size());
            for (size_t i = 0; i < ga.homs.size(); ++i)
                d[i] = {ga.min_gens_sum[i] - ga.orbit_count[i], i};
            std::sort(d.begin(), d.end());
            return d;
        };
        const auto dA = deltas(da);
        const auto dB = deltas(db);
        long long best_m = LLONG_MAX;
        uint8_t label[16];
        for (const auto& [va, i] : dA) {
            if (va + dB[0].first >= best_m) break;
            for (const auto& [vb, j] : dB) {
                if (va + vb >= best_m) break;
                if (da.orbit_count[i] + db.orbit_count[j] > si + 1) continue;
                if (joint_bfs_label(da.homs[i].images.data(), da.r, db.homs[j].images.data(), db.r,
                                    si, label) != si)
                    continue;
                best_m = va + vb;
            }
        }
        if (best_m == LLONG_MAX) continue;  // no transitive pair at this degree
        Rational rate(best_m + s, s);       // (min_rank - 1) / s
        if (!have_best || rate < best) {
            best = rate;
            have_best = true;
        }
    }
    if (!have_best) throw domain_error("no finite-index subgroup found up to the given index");
    return best;
}

VcRateWitness vc_rate_witness(const FiniteGroupTable& a, const FiniteGroupTable& b,
                              const FiniteGroupTable& c, long long max_index,
                              const EnumerationBudget& budget, int threads) {
    (void)threads;
    if (c.order() < 2) throw domain_error("target group must be non-trivial");
    if (max_index < 1) throw domain_error("max_index must be >= 1");
    SubgroupStatsMemo memo_a;
    SubgroupStatsMemo memo_b;
    const long long cn = c.order();
    bool have_best = false;
    VcRateWitness result;
    for (long long s = 1; s <= max_index; ++s) {
        const GroupActions da = build_actions(a, s, budget, memo_a, &c);
        const GroupActions db = build_actions(b, s, budget, memo_b, &c);
        check_pair_budget(da.homs.size(), db.homs.size(), budget);
        const int si = static_cast<int>(s);
        uint8_t label[16];
        long long best_e = -1;
        for (size_t i = 0; i < da.homs.size(); ++i) {
            for (size_t j = 0; j < db.homs.size(); ++j) {
                if (da.orbit_count[i] + db.orbit_count[j] > si + 1) continue;
                if (joint_bfs_label(da.homs[i].images.data(), da.r, db.homs[j].images.data(), db.r,
                                    si, label) != si)
                    continue;
                long long free_rank = s + 1 - da.orbit_count[i] - db.orbit_count[j];
                __int128 hom = da.stab_hom_product[i] * db.stab_hom_product[j];
                for (long long k = 0; k < free_rank; ++k) hom *= cn;
                // floor exponent: largest e with |C|^e <= |Hom|
                long long e = 0;
                __int128 power = cn;
                while (power <= hom) {
                    ++e;
                    power *= cn;
                }
                best_e = std::max(best_e, e);
            }
        }
        if (best_e < 0) continue;
        Rational rate(best_e - 1, s);
        if (!have_best || rate > result.best_rate) {
            result.best_rate = rate;
            result.witness_index = s;
            have_best = true;
        }
    }
    if (!have_best) throw domain_error("no finite-index subgroup found up to the given index");
    return result;
}

VolumeEstimates volume_estimates(const std::vector<VolumeSample>& samples) {
    if (samples.empty()) throw domain_error("no samples");
    VolumeEstimates est;
    bool first = true;
    for (const auto& sample : samples) {
        if (sample.index < 1) throw domain_error("sample index must be >= 1");
        Rational value = sample.sigma / Rational(sample.index);
        if (first) {
            est.lower = est.upper = value;
            first = false;
        } else {
            if (value > est.lower) est.lower = value;
            if (value < est.upper) est.upper = value;
        }
    }
    return est;
}

}  // namespace gog::oracle
