#pragma once

#include <optional>
#include <string>
#include <variant>

#include "gog/rational.hpp"

namespace gog {

// Per-group invariant bundle.
//
// Conventions used throughout the library:
//   * omega is the Euler-characteristic-flavoured invariant; for a finite
//     group of order n we take omega = 1/n (the chi-compatible convention,
//     so that multiplicativity chi(H) = [G:H] * chi(G) holds verbatim).
//     A record may leave omega undeclared; consumers must then refuse to
//     guess and report the invariant as undefined.
//   * rank_gradient, l2_betti (first L2 Betti number) and betti_volume are
//     always present.
//   * vc_equals_rg records whether the homomorphism-growth volume is known
//     to coincide with the rank gradient for every finite target group.
//   * finite_order is set exactly for finite groups.
//   * max_finite_subgroup is the largest order of a finite subgroup;
//     nullopt means unbounded (or not known to be bounded).
struct InvariantRecord {
    std::optional<Rational> omega;
    Rational rank_gradient;
    Rational l2_betti;
    Rational betti_volume;
    bool vc_equals_rg = false;
    std::optional<long long> finite_order;
    std::optional<long long> max_finite_subgroup;
    bool hypothesis_ok = true;

    bool operator==(const InvariantRecord&) const = default;
};

struct Finite {
    long long order;  // >= 1
    bool operator==(const Finite&) const = default;
};

struct SurfaceGenus {
    long long genus;  // >= 1
    bool operator==(const SurfaceGenus&) const = default;
};

struct FreeOfRank {
    long long rank;  // >= 0; rank 0 is the trivial group
    bool operator==(const FreeOfRank&) const = default;
};

struct NilpotentInfinite {
    bool operator==(const NilpotentInfinite&) const = default;
};

struct PolycyclicInfinite {
    bool operator==(const PolycyclicInfinite&) const = default;
};

struct Custom {
    std::string name;
    InvariantRecord record;
    bool operator==(const Custom&) const = default;
};

using GroupDescriptor =
    std::variant<Finite, SurfaceGenus, FreeOfRank, NilpotentInfinite, PolycyclicInfinite, Custom>;

// Catalog of base invariant values per descriptor.  Throws domain_error on
// out-of-range parameters (order < 1, genus < 1, rank < 0).
//
// FreeOfRank{0} is the trivial group and therefore gets the finite record of
// order 1 (in particular l2_betti = 0, not the generic rank - 1 formula,
// which only applies to infinite free groups).
InvariantRecord base_invariants(const GroupDescriptor& d);

// Short human-readable tag, e.g. "finite:6", "surface:2", "custom:frob".
std::string descriptor_name(const GroupDescriptor& d);

// Checks the two record-level invariants:
//   * finite consistency: finite_order = n forces omega = 1/n,
//     rank_gradient = -1/n, l2_betti = 0, betti_volume = -1/n,
//     max_finite_subgroup = n;
//   * betti_volume <= rank_gradient.
// Returns an explanation of the first violation, or nullopt when clean.
std::optional<std::string> record_violation(const InvariantRecord& r);

}  // namespace gog
