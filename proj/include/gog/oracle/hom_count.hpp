#pragma once

#include "gog/oracle/group_table.hpp"

namespace gog::oracle {

// |Hom(from, to)| by exhaustive search over generator images.  A candidate
// assignment is extended over the whole of `from` by walking its Cayley
// graph and then verified edge by edge, so no presentation is trusted.
long long hom_count_to(const FiniteGroupTable& from, const FiniteGroupTable& to);

// |Hom(A * B, C)| = |Hom(A, C)| * |Hom(B, C)|.
long long hom_count_free_product(const FiniteGroupTable& a, const FiniteGroupTable& b,
                                 const FiniteGroupTable& c);

// Number of 2g-tuples (a1, b1, ..., ag, bg) in C^2g whose product of
// commutators [a1,b1]...[ag,bg] is the identity, i.e. the number of
// homomorphisms from a genus-g closed surface group to C, counted by direct
// enumeration of every tuple.  genus 0 gives 1.  Throws budget_error when
// |C|^2g exceeds the budget.
long long hom_count_surface(long long genus, const FiniteGroupTable& c,
                            long long budget = 100000000);

}  // namespace gog::oracle
