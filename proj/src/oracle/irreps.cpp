#include "gog/oracle/irreps.hpp"

#include "gog/errors.hpp"

namespace gog::oracle {

namespace {

// Count nondecreasing completions of the dimension profile and keep the
// first one found; used to certify uniqueness.
void search_profile(long long remaining_slots, long long remaining_sum, long long min_dim,
                    long long max_dim, std::vector<long long>& partial,
                    std::vector<long long>& first, long long& solutions) {
    if (remaining_slots == 0) {
        if (remaining_sum == 0) {
            if (solutions == 0) first = partial;
            ++solutions;
        }
        return;
    }
    for (long long d = min_dim; d <= max_dim && d * d <= remaining_sum; ++d) {
        // all remaining slots need at least d^2 each
        if (d * d * remaining_slots > remaining_sum) break;
        partial.push_back(d);
        search_profile(remaining_slots - 1, remaining_sum - d * d, d, max_dim, partial, first,
                       solutions);
        partial.pop_back();
        if (solutions > 1) return;  // already ambiguous
    }
}

}  // namespace

std::vector<long long> irrep_dimensions(const FiniteGroupTable& c) {
    const long long n = c.order();
    const long long k = conjugacy_class_count(c);
    const long long commutator = commutator_subgroup_order(c);
    if (n % commutator != 0) throw domain_error("ambiguous character data");
    const long long linear = n / commutator;
    if (linear > k) throw domain_error("ambiguous character data");
    long long max_dim = 1;
    while ((max_dim + 1) * (max_dim + 1) <= n) ++max_dim;

    // The `linear` ones are forced; the remaining slots start at dimension 2.
    std::vector<long long> dims(linear, 1);
    long long remaining_sum = n - linear;
    long long remaining_slots = k - linear;
    std::vector<long long> tail;
    std::vector<long long> partial;
    long long solutions = 0;
    if (remaining_slots == 0) {
        if (remaining_sum != 0) throw domain_error("ambiguous character data");
        return dims;
    }
    search_profile(remaining_slots, remaining_sum, 2, max_dim, partial, tail, solutions);
    if (solutions != 1) throw domain_error("ambiguous character data");
    dims.insert(dims.end(), tail.begin(), tail.end());
    return dims;
}

long long mednykh_eval(long long genus, const FiniteGroupTable& c) {
    if (genus < 0) throw domain_error("genus must be >= 0");
    const std::vector<long long> dims = irrep_dimensions(c);
    Rational sum(0);
    for (long long d : dims) sum += Rational(1, d).pow(2 * genus - 2);
    Rational value = Rational(c.order()).pow(2 * genus - 1) * sum;
    if (!value.is_integer() || value < Rational(0))
        throw domain_error("character formula produced a non-integral count");
    return value.num();
}

}  // namespace gog::oracle
