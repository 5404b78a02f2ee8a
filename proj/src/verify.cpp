#include "gog/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gog/calculus.hpp"
#include "gog/decomposition.hpp"
#include "gog/errors.hpp"
#include "gog/graph.hpp"
#include "gog/oracle/enumerate.hpp"
#include "gog/oracle/hom_count.hpp"
#include "gog/oracle/irreps.hpp"

namespace gog {

namespace {

using oracle::EnumerationBudget;
using oracle::FiniteGroupTable;

void add(std::vector<CheckResult>& out, const std::string& suite, const std::string& check,
         bool pass, const std::string& detail) {
    out.push_back({suite, check, pass, detail});
}

// ---- mednykh: counting formula against exhaustive tuple search ----

std::vector<CheckResult> suite_mednykh() {
    std::vector<CheckResult> out;
    const std::string suite = "mednykh";
    for (const std::string& name : oracle::catalog_names()) {
        const FiniteGroupTable c = oracle::build_group(name);
        {
            const auto dims = oracle::irrep_dimensions(c);
            long long sq = 0, ones = 0;
            for (long long d : dims) {
                sq += d * d;
                if (d == 1) ++ones;
            }
            const long long classes = oracle::conjugacy_class_count(c);
            const long long linear = c.order() / oracle::commutator_subgroup_order(c);
            const bool ok = sq == c.order() && ones == linear &&
                            static_cast<long long>(dims.size()) == classes;
            std::ostringstream d;
            d << name << ": dims sum " << sq << "/" << c.order() << ", linear " << ones << "/"
              << linear << ", count " << dims.size() << "/" << classes;
            add(out, suite, "character dimensions of " + name, ok, d.str());
        }
        if (c.order() > 8) continue;
        for (long long g = 0; g <= 1; ++g) {
            const long long formula = oracle::mednykh_eval(g, c);
            const long long brute = oracle::hom_count_surface(g, c);
            std::ostringstream d;
            d << name << " genus " << g << ": formula " << formula << ", brute " << brute;
            add(out, suite, "genus " + std::to_string(g) + " count for " + name,
                formula == brute, d.str());
        }
        {
            const long long formula = oracle::mednykh_eval(1, c);
            const long long pairs = c.order() * oracle::conjugacy_class_count(c);
            std::ostringstream d;
            d << name << ": formula " << formula << ", |C| * classes " << pairs;
            add(out, suite, "genus 1 commuting-pair identity for " + name, formula == pairs,
                d.str());
        }
    }
    for (const std::string name : {"cyclic2", "cyclic3", "cyclic4", "klein4", "sym3"}) {
        const FiniteGroupTable c = oracle::build_group(name);
        const long long formula = oracle::mednykh_eval(2, c);
        const long long brute = oracle::hom_count_surface(2, c);
        std::ostringstream d;
        d << name << " genus 2: formula " << formula << ", brute " << brute;
        add(out, suite, "genus 2 count for " + name, formula == brute, d.str());
    }
    return out;
}

// ---- kurosh: enumeration against the transitive-pair recurrence ----

// Subgroups of index s in A * B correspond to jointly transitive action
// pairs on s points up to basepoint-fixing relabeling; with
// h_s = |Hom(A, Sym(s))| * |Hom(B, Sym(s))| the transitive pair counts obey
//   t_s = h_s - sum_{k=1}^{s-1} C(s-1, k-1) t_k h_{s-k}
// (split off the orbit of the basepoint) and the subgroup count is
// t_s / (s-1)!.  This counts the same objects by a wholly different route
// than the canonical-form enumeration, so agreement is a real cross-check.
std::vector<long long> census_by_recurrence(const FiniteGroupTable& a, const FiniteGroupTable& b,
                                            long long max_s, const EnumerationBudget& budget) {
    std::vector<long long> h = {1};  // h[0] = 1 by convention
    for (long long s = 1; s <= max_s; ++s)
        h.push_back(static_cast<long long>(oracle::sym_homs(a, s, budget).size()) *
                    static_cast<long long>(oracle::sym_homs(b, s, budget).size()));
    std::vector<std::vector<long long>> binom(max_s, std::vector<long long>(max_s, 0));
    for (long long i = 0; i < max_s; ++i) {
        binom[i][0] = 1;
        for (long long j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    std::vector<long long> t = {0};
    for (long long s = 1; s <= max_s; ++s) {
        long long v = h[s];
        for (long long k = 1; k < s; ++k) v -= binom[s - 1][k - 1] * t[k] * h[s - k];
        t.push_back(v);
    }
    std::vector<long long> counts = {0};
    long long fact = 1;
    for (long long s = 1; s <= max_s; ++s) {
        if (s > 1) fact *= s - 1;
        if (t[s] % fact != 0)
            throw domain_error("transitive pair count not divisible by (s-1)!");
        counts.push_back(t[s] / fact);
    }
    return counts;
}

void census_checks(std::vector<CheckResult>& out, const std::string& name_a,
                   const std::string& name_b, long long max_s) {
    const std::string suite = "kurosh";
    const FiniteGroupTable a = oracle::build_group(name_a);
    const FiniteGroupTable b = oracle::build_group(name_b);
    const EnumerationBudget budget;
    const std::vector<long long> counts = census_by_recurrence(a, b, max_s, budget);
    const std::string pair = name_a + " * " + name_b;
    for (long long s = 1; s <= max_s; ++s) {
        const auto certs = oracle::enumerate_subgroups(a, b, s, budget);
        {
            std::ostringstream d;
            d << pair << " index " << s << ": enumerated " << certs.size() << ", recurrence "
              << counts[s];
            add(out, suite, "subgroup count of " + pair + " at index " + std::to_string(s),
                static_cast<long long>(certs.size()) == counts[s], d.str());
        }
        bool kurosh_ok = true;
        bool trivial_ok = true;
        for (const auto& cert : certs) {
            if (cert.total_kurosh_count() != kurosh_rank_finite_index(2, s)) kurosh_ok = false;
            bool all_trivial = true;
            for (const auto& f : cert.orbits_a)
                if (f.stabilizer_order != 1) all_trivial = false;
            for (const auto& f : cert.orbits_b)
                if (f.stabilizer_order != 1) all_trivial = false;
            if (all_trivial) {
                const Rational expect =
                    Rational(1) - Rational(s) * (Rational(1, a.order()) + Rational(1, b.order()) -
                                                 Rational(1));
                if (Rational(cert.free_rank) != expect) trivial_ok = false;
            }
        }
        add(out, suite, "Kurosh factor total of " + pair + " at index " + std::to_string(s),
            kurosh_ok, pair + " index " + std::to_string(s) + ": every certificate totals " +
                           std::to_string(kurosh_rank_finite_index(2, s)));
        add(out, suite,
            "torsion-free free rank of " + pair + " at index " + std::to_string(s), trivial_ok,
            pair + " index " + std::to_string(s) +
                ": trivial-stabilizer certificates match 1 - s(1/|A| + 1/|B| - 1)");
    }
}

std::vector<CheckResult> suite_kurosh() {
    std::vector<CheckResult> out;
    census_checks(out, "cyclic2", "cyclic2", 6);
    census_checks(out, "cyclic2", "cyclic3", 6);
    census_checks(out, "cyclic3", "cyclic3", 6);
    census_checks(out, "cyclic2", "klein4", 4);
    return out;
}

// ---- rank-gradient: truncated estimates against the graph formula ----

GraphOfGroups one_edge_graph(long long order_a, long long order_b) {
    GraphOfGroups g;
    g.add_vertex("v1", Finite{order_a});
    g.add_vertex("v2", Finite{order_b});
    g.add_edge("e1", "v1", "v2", 1);
    return g;
}

void squeeze_check(std::vector<CheckResult>& out, const std::string& name_a,
                   const std::string& name_b, const EnumerationBudget& budget) {
    const std::string suite = "rank-gradient";
    const FiniteGroupTable a = oracle::build_group(name_a);
    const FiniteGroupTable b = oracle::build_group(name_b);
    const std::string pair = name_a + " * " + name_b;
    const Rational target = rank_gradient_graph(one_edge_graph(a.order(), b.order()));
    const Rational floor_value =
        Rational(1) - Rational(1, a.order()) - Rational(1, b.order());
    Rational previous;
    bool monotone = true;
    bool bounded = true;
    for (long long s = 1; s <= a.order() * b.order(); ++s) {
        const Rational estimate = oracle::rank_gradient_estimate(a, b, s, budget);
        if (s > 1 && estimate > previous) monotone = false;
        if (estimate < floor_value) bounded = false;
        previous = estimate;
    }
    add(out, suite, "estimate is nonincreasing for " + pair, monotone,
        pair + ": estimates at max index 1.." + std::to_string(a.order() * b.order()));
    add(out, suite, "estimate stays above the splitting value for " + pair, bounded,
        pair + ": every estimate >= " + floor_value.str());
    std::ostringstream d;
    d << pair << " at index " << a.order() * b.order() << ": estimate " << previous.str()
      << ", graph formula " << target.str();
    add(out, suite, "squeeze closes for " + pair, previous == target, d.str());
}

std::vector<CheckResult> suite_rank_gradient() {
    std::vector<CheckResult> out;
    const std::string suite = "rank-gradient";
    EnumerationBudget budget;
    squeeze_check(out, "cyclic2", "cyclic2", budget);
    squeeze_check(out, "cyclic2", "cyclic3", budget);
    budget.max_degree = 9;
    squeeze_check(out, "cyclic3", "cyclic3", budget);
    // finite groups: the infimum of (min_gens(H) - 1)/[G:H] over all
    // subgroups is -1/|G|, attained at the trivial subgroup
    for (const std::string name : {"sym3", "dihedral4", "alt4", "quaternion8"}) {
        const FiniteGroupTable g = oracle::build_group(name);
        Rational best(1);
        for (const auto& elements : oracle::all_subgroups(g)) {
            const FiniteGroupTable h = oracle::subgroup_table(g, elements);
            const Rational rate(oracle::min_generators(h) - 1,
                                g.order() / h.order());
            if (rate < best) best = rate;
        }
        std::ostringstream d;
        d << name << ": subgroup minimum " << best.str() << ", formula " << Rational(-1, g.order()).str();
        add(out, suite, "finite rank gradient of " + name, best == Rational(-1, g.order()),
            d.str());
    }
    return out;
}

// ---- decomposition-chi: multiplicativity sweep over the constructions ----

std::vector<CheckResult> suite_decomposition_chi() {
    std::vector<CheckResult> out;
    const std::string suite = "decomposition-chi";
    // chi values for the parent groups are arbitrary; the identity
    // index * chi(parent) = chi(subgroup decomposition) must hold for any
    // assignment with chi(H1) = m * chi(G1) etc, so two spot values are
    // used per shape
    const std::vector<std::pair<Rational, Rational>> spots = {
        {Rational(1, 2), Rational(1, 3)}, {Rational(-7, 5), Rational(11, 4)}};
    long long cases = 0, failures = 0;
    for (long long m = 1; m <= 8; ++m)
        for (long long n = 1; n <= 8; ++n) {
            const long long l = std::lcm(m, n);
            for (long long s = l; s <= 4 * m * n; s += l) {
                if (s + 1 - s / m - s / n < 0) continue;  // no such decomposition
                const FreeProductDecomposition d = free_product_finite_index(m, n, s);
                for (const auto& [chi1, chi2] : spots) {
                    const Rational parent = chi1 + chi2 - Rational(1);
                    const Rational sub = chi_of_decomposition(
                        d, {{"H1", Rational(m) * chi1}, {"H2", Rational(n) * chi2}});
                    ++cases;
                    if (sub != Rational(s) * parent) ++failures;
                }
            }
        }
    add(out, suite, "free product multiplicativity sweep", failures == 0,
        std::to_string(cases) + " cases over m,n <= 8, index <= 4mn, " +
            std::to_string(failures) + " failures");
    cases = failures = 0;
    for (long long k = 1; k <= 24; ++k)
        for (long long c = 1; c <= k; ++c) {
            if (k % c != 0) continue;
            const FreeProductDecomposition d = hnn_finite_index(k, c);
            for (const auto& [chi_g, unused] : spots) {
                const Rational parent = chi_g - Rational(1, c);
                const Rational sub = chi_of_decomposition(d, {{"K", Rational(k) * chi_g}});
                ++cases;
                if (sub != Rational(k) * parent) ++failures;
            }
        }
    add(out, suite, "stable letter multiplicativity sweep", failures == 0,
        std::to_string(cases) + " cases over c | k <= 24, " + std::to_string(failures) +
            " failures");
    cases = failures = 0;
    for (long long n1 = 1; n1 <= 12; ++n1)
        for (long long n2 = 1; n2 <= 12; ++n2)
            for (long long c = 1; c <= std::min(n1, n2); ++c) {
                if (n1 % c != 0 || n2 % c != 0) continue;
                const FreeProductDecomposition d = amalgam_finite_index(n1, n2, c);
                for (const auto& [chi1, chi2] : spots) {
                    const Rational parent = chi1 + chi2 - Rational(1, c);
                    const Rational sub = chi_of_decomposition(
                        d, {{"N1", Rational(n1) * chi1}, {"N2", Rational(n2) * chi2}});
                    ++cases;
                    if (sub != Rational(d.index) * parent) ++failures;
                }
            }
    add(out, suite, "amalgam multiplicativity sweep", failures == 0,
        std::to_string(cases) + " cases over c | n1,n2 <= 12, " + std::to_string(failures) +
            " failures");
    return out;
}

// ---- dihedral-count: the infinite dihedral group, checked by hand ----

std::vector<CheckResult> suite_dihedral_count() {
    std::vector<CheckResult> out;
    const std::string suite = "dihedral-count";
    const FiniteGroupTable c2 = oracle::build_group("cyclic2");
    const EnumerationBudget budget;
    // index 1: the whole group; index 2: two copies of the group itself and
    // the translation subgroup; index 3: three dihedral subgroups
    const std::vector<long long> expected = {0, 1, 3, 3};
    for (long long s = 1; s <= 3; ++s) {
        const auto certs = oracle::enumerate_subgroups(c2, c2, s, budget);
        std::ostringstream d;
        d << "index " << s << ": enumerated " << certs.size() << ", by hand " << expected[s];
        add(out, suite, "infinite dihedral count at index " + std::to_string(s),
            static_cast<long long>(certs.size()) == expected[s], d.str());
    }
    const auto certs = oracle::enumerate_subgroups(c2, c2, 2, budget);
    long long dihedral = 0, infinite_cyclic = 0;
    for (const auto& cert : certs) {
        if (cert.free_rank == 1 && cert.min_rank == 1) ++infinite_cyclic;
        if (cert.free_rank == 0 && cert.min_rank == 2) ++dihedral;
    }
    add(out, suite, "index 2 subgroup shapes", dihedral == 2 && infinite_cyclic == 1,
        "index 2: " + std::to_string(dihedral) + " two-generator reflection subgroups, " +
            std::to_string(infinite_cyclic) + " infinite cyclic");
    return out;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"mednykh", "kurosh", "rank-gradient", "decomposition-chi", "dihedral-count"};
}

std::vector<CheckResult> run_verify_suite(const std::string& name) {
    if (name == "mednykh") return suite_mednykh();
    if (name == "kurosh") return suite_kurosh();
    if (name == "rank-gradient") return suite_rank_gradient();
    if (name == "decomposition-chi") return suite_decomposition_chi();
    if (name == "dihedral-count") return suite_dihedral_count();
    throw domain_error("unknown verify suite \"" + name + "\"");
}

std::vector<CheckResult> run_all_verify_suites() {
    std::vector<CheckResult> out;
    for (const std::string& name : verify_suite_names())
        for (CheckResult& r : run_verify_suite(name)) out.push_back(std::move(r));
    return out;
}

}  // namespace gog
