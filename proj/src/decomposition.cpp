#include "gog/decomposition.hpp"

#include "gog/errors.hpp"

namespace gog {

long long FreeProductDecomposition::factor_count() const {
    long long n = 0;
    for (const auto& f : factors) n += f.multiplicity;
    return n;
}

std::string FreeProductDecomposition::str() const {
    std::string s = "index=" + std::to_string(index) + " factors=";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += factors[i].label + "x" + std::to_string(factors[i].multiplicity);
    }
    if (factors.empty()) s += "-";
    s += " free_rank=" + std::to_string(free_rank);
    return s;
}

FreeProductDecomposition free_product_finite_index(long long m, long long n, long long s) {
    if (m < 1 || n < 1 || s < 1) throw domain_error("indices must be >= 1");
    if (s % m != 0 || s % n != 0)
        throw domain_error("index " + std::to_string(s) + " must be a common multiple of " +
                           std::to_string(m) + " and " + std::to_string(n));
    FreeProductDecomposition d;
    d.index = s;
    d.factors = {{"H1", FactorKind::BaseSubgroupRef, 0, s / m},
                 {"H2", FactorKind::BaseSubgroupRef, 0, s / n}};
    d.free_rank = s + 1 - s / m - s / n;
    if (d.free_rank < 0)
        throw domain_error("no decomposition at index " + std::to_string(s) +
                           ": free rank would be negative");
    d.printed_free_rank = (s / m - 1) * (s / n - 1);
    return d;
}

FreeProductDecomposition hnn_finite_index(long long k, long long c) {
    if (k < 1 || c < 1) throw domain_error("indices must be >= 1");
    if (k % c != 0)
        throw domain_error("edge order " + std::to_string(c) + " must divide index " + std::to_string(k));
    FreeProductDecomposition d;
    d.index = k;
    d.factors = {{"K", FactorKind::BaseSubgroupRef, 0, 1}};
    d.free_rank = k / c;
    return d;
}

FreeProductDecomposition amalgam_finite_index(long long n1, long long n2, long long c) {
    if (n1 < 1 || n2 < 1 || c < 1) throw domain_error("indices must be >= 1");
    if (n1 % c != 0 || n2 % c != 0)
        throw domain_error("edge order " + std::to_string(c) + " must divide both indices");
    FreeProductDecomposition d;
    d.index = n1 * n2 / c;
    d.factors = {{"N1", FactorKind::BaseSubgroupRef, 0, n2 / c},
                 {"N2", FactorKind::BaseSubgroupRef, 0, n1 / c}};
    d.free_rank = (n1 / c - 1) * (n2 / c - 1);
    return d;
}

long long kurosh_rank_finite_index(long long n_factors, long long index) {
    if (n_factors < 1 || index < 1) throw domain_error("factor count and index must be >= 1");
    return 1 + index * (n_factors - 1);
}

Rational chi_of_decomposition(const FreeProductDecomposition& d,
                              const std::map<std::string, Rational>& factor_chi) {
    Rational total(0);
    for (const auto& f : d.factors) {
        Rational chi;
        auto it = factor_chi.find(f.label);
        if (it != factor_chi.end()) {
            chi = it->second;
        } else if (f.kind == FactorKind::FiniteOrder) {
            chi = Rational(1, f.order);
        } else {
            throw domain_error("no chi value supplied for factor \"" + f.label + "\"");
        }
        total += Rational(f.multiplicity) * chi;
    }
    return total - Rational(d.total_kurosh_count() - 1);
}

}  // namespace gog
