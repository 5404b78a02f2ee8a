#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gog/rational.hpp"

namespace gog {

// A finite-index subgroup presented as a free product of named factors and
// a free group.  Factors either refer back to subgroups of the original
// vertex groups by label ("H1", "K", "N2", ...) or are concrete finite
// groups of known order (oracle certificates).  Trivial factors are kept:
// they still count toward the Kurosh factor total.
enum class FactorKind { BaseSubgroupRef, FiniteOrder };

struct Factor {
    std::string label;
    FactorKind kind;
    long long order;  // meaningful for FiniteOrder, 0 otherwise
    long long multiplicity;
    bool operator==(const Factor&) const = default;
};

struct FreeProductDecomposition {
    long long index = 1;
    std::vector<Factor> factors;
    long long free_rank = 0;
    // Advisory alternative free-rank count for the free-product construction
    // below; agrees with free_rank exactly when the chosen index is m*n.
    std::optional<long long> printed_free_rank;

    long long factor_count() const;
    long long total_kurosh_count() const { return factor_count() + free_rank; }
    // Stable one-line form: "index=<s> factors=<label>x<mult>,... free_rank=<d>".
    std::string str() const;
    bool operator==(const FreeProductDecomposition&) const = default;
};

// Index-s subgroup of a free product G1 * G2 built from subgroups
// H1 <= G1 of index m and H2 <= G2 of index n, where s is a common multiple
// of m and n.  The subgroup is H1^(s/m) * H2^(s/n) * F_d with the
// Euler-consistent free rank d = s + 1 - s/m - s/n; the coarser count
// (s/m - 1)(s/n - 1) is reported as printed_free_rank.
FreeProductDecomposition free_product_finite_index(long long m, long long n, long long s);

// Index-k subgroup of an HNN extension G*_C built from a normal subgroup
// K <= G of index k meeting the edge group subgroups trivially, where c
// divides k: the subgroup is K * F_{k/c}.
FreeProductDecomposition hnn_finite_index(long long k, long long c);

// Subgroup of an amalgam G1 *_C G2 built from normal subgroups N1, N2 of
// indices n1, n2 meeting the edge group trivially, with c = |C| dividing
// both: index n1*n2/c, factors N1^(n2/c) * N2^(n1/c) * F_d with
// d = (n1/c - 1)(n2/c - 1).
FreeProductDecomposition amalgam_finite_index(long long n1, long long n2, long long c);

// Kurosh factor total of an index-d subgroup of a free product with
// n_factors free factors: 1 + d * (n_factors - 1).
long long kurosh_rank_finite_index(long long n_factors, long long index);

// Characteristic of the decomposed subgroup:
//   sum over factors of multiplicity * chi(factor)  -  (#factors + free_rank - 1).
// chi values for BaseSubgroupRef factors come from factor_chi (missing label
// is an error); FiniteOrder factors default to 1/order unless overridden.
Rational chi_of_decomposition(const FreeProductDecomposition& d,
                              const std::map<std::string, Rational>& factor_chi);

}  // namespace gog
