#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gog::oracle {

// Finite group as an explicit multiplication table over element indices
// 0..n-1 with the identity at index 0.  The constructor verifies closure,
// identity, inverses and full associativity, so a malformed table never
// becomes a value of this type.  Intended for small groups (n <= 64); this
// is the ground-truth side of the calculator, so everything here favours
// directness over cleverness.
class FiniteGroupTable {
public:
    FiniteGroupTable(std::vector<std::vector<uint8_t>> table, std::string name);

    long long order() const { return n_; }
    const std::string& name() const { return name_; }
    uint8_t mul(uint8_t a, uint8_t b) const { return table_[a][b]; }
    uint8_t inverse(uint8_t a) const { return inverse_[a]; }
    uint8_t power(uint8_t a, long long e) const;
    long long element_order(uint8_t a) const;

    // A smallest generating set, found by exhaustive search over subsets in
    // lexicographic order (so it is deterministic).  Empty for the trivial
    // group.
    const std::vector<uint8_t>& minimal_generators() const { return min_gens_; }

private:
    long long n_;
    std::string name_;
    std::vector<std::vector<uint8_t>> table_;
    std::vector<uint8_t> inverse_;
    std::vector<uint8_t> min_gens_;
};

// Catalog constructor.  Accepted names: "cyclic<n>" for 1 <= n <= 12,
// "klein4", "dihedral<n>" for 2 <= n <= 6 (order 2n), "sym3", "sym4",
// "alt4", "quaternion8".  Throws domain_error for anything else.
FiniteGroupTable build_group(const std::string& name);

// All catalog names, in a fixed order (for help text and sweep tests).
std::vector<std::string> catalog_names();

// Number of conjugacy classes, by direct partitioning.
long long conjugacy_class_count(const FiniteGroupTable& g);

// Order of the commutator subgroup: closure of all [a,b] = a^-1 b^-1 a b.
long long commutator_subgroup_order(const FiniteGroupTable& g);

// Size of a smallest generating set (0 for the trivial group).
long long min_generators(const FiniteGroupTable& g);

// Closure of the given elements as a sorted element list (always contains 0).
std::vector<uint8_t> closure(const FiniteGroupTable& g, const std::vector<uint8_t>& elements);

// Table of the subgroup formed by `elements`, which must be closed under
// multiplication.  Element 0 of the result is the identity; the rest keep
// their relative order from the sorted input.
FiniteGroupTable subgroup_table(const FiniteGroupTable& g, std::vector<uint8_t> elements);

// Every subgroup, as sorted element lists, built by closing one added
// generator at a time until the lattice stops growing.  Sorted by (size,
// elements) so the output is deterministic.
std::vector<std::vector<uint8_t>> all_subgroups(const FiniteGroupTable& g);

}  // namespace gog::oracle
