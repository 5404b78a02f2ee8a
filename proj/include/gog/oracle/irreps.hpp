#pragma once

#include <vector>

#include "gog/oracle/group_table.hpp"
#include "gog/rational.hpp"

namespace gog::oracle {

// Multiset of complex irreducible representation dimensions, ascending.
// Found without character theory machinery: it is the unique multiset of
// k = (number of conjugacy classes) positive integers whose squares sum to
// |C| and which contains exactly |C| / |[C,C]| ones (the linear characters),
// each dimension at most sqrt(|C|).  A constrained exhaustive search counts
// the solutions; anything other than exactly one solution throws
// domain_error("ambiguous character data").
std::vector<long long> irrep_dimensions(const FiniteGroupTable& c);

// Character-formula count of surface-group homomorphisms:
//   |C|^(2g-1) * sum over irreducibles of (1/dim)^(2g-2),
// evaluated in exact rational arithmetic.  The result must be an integer
// (it counts homomorphisms); a non-integral value throws domain_error.
// Genus 0 is the trivial-group sanity value 1.
long long mednykh_eval(long long genus, const FiniteGroupTable& c);

}  // namespace gog::oracle
