#include "gog/oracle/hom_count.hpp"

#include "gog/errors.hpp"

namespace gog::oracle {

namespace {

// Try to extend gen -> image to a homomorphism from -> to.  The extension,
// if any, is unique because the generators generate; build it by walking the
// Cayley graph of `from`, then check every (element, generator) edge.  That
// check suffices: every element is a positive word in the generators, so the
// multiplicative property propagates word by word.
bool extends_to_hom(const FiniteGroupTable& from, const std::vector<uint8_t>& gens,
                    const std::vector<uint8_t>& images, const FiniteGroupTable& to) {
    const long long n = from.order();
    std::vector<int> f(n, -1);
    f[0] = 0;
    std::vector<uint8_t> queue = {0};
    while (!queue.empty()) {
        uint8_t a = queue.back();
        queue.pop_back();
        for (size_t i = 0; i < gens.size(); ++i) {
            uint8_t b = from.mul(a, gens[i]);
            if (f[b] < 0) {
                f[b] = to.mul(static_cast<uint8_t>(f[a]), images[i]);
                queue.push_back(b);
            }
        }
    }
    for (long long a = 0; a < n; ++a)
        for (size_t i = 0; i < gens.size(); ++i) {
            uint8_t b = from.mul(static_cast<uint8_t>(a), gens[i]);
            if (f[b] != to.mul(static_cast<uint8_t>(f[a]), images[i])) return false;
        }
    return true;
}

}  // namespace

long long hom_count_to(const FiniteGroupTable& from, const FiniteGroupTable& to) {
    const std::vector<uint8_t>& gens = from.minimal_generators();
    if (gens.empty()) return 1;  // trivial source group
    // Candidate images per generator: elements whose order divides the
    // generator's order.  This is pruning only; correctness rests on the
    // extension check.
    std::vector<std::vector<uint8_t>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        long long d = from.element_order(gens[i]);
        for (uint8_t y = 0; y < to.order(); ++y)
            if (d % to.element_order(y) == 0) candidates[i].push_back(y);
    }
    long long count = 0;
    std::vector<uint8_t> images(gens.size());
    std::vector<size_t> pick(gens.size(), 0);
    while (true) {
        for (size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pick[i]];
        if (extends_to_hom(from, gens, images, to)) ++count;
        size_t level = gens.size();
        while (level > 0) {
            if (++pick[level - 1] < candidates[level - 1].size()) break;
            pick[level - 1] = 0;
            --level;
        }
        if (level == 0) break;
    }
    return count;
}

long long hom_count_free_product(const FiniteGroupTable& a, const FiniteGroupTable& b,
                                 const FiniteGroupTable& c) {
    return hom_count_to(a, c) * hom_count_to(b, c);
}

long long hom_count_surface(long long genus, const FiniteGroupTable& c, long long budget) {
    if (genus < 0) throw domain_error("genus must be >= 0");
    if (genus == 0) return 1;
    const long long n = c.order();
    // budget gate on |C|^(2g)
    __int128 tuples = 1;
    for (long long i = 0; i < 2 * genus; ++i) {
        tuples *= n;
        if (tuples > budget)
            throw budget_error("surface hom enumeration needs |C|^" + std::to_string(2 * genus) +
                               " > budget " + std::to_string(budget) + " tuples");
    }
    // Walk every tuple, carrying the prefix product of commutators.
    long long count = 0;
    auto commutator = [&](uint8_t a, uint8_t b) {
        return c.mul(c.mul(c.inverse(a), c.inverse(b)), c.mul(a, b));
    };
    struct Level {
        uint8_t prefix;
        uint8_t a, b;
    };
    std::vector<Level> stack(genus + 1);
    long long depth = 0;
    stack[0] = {0, 0, 0};
    while (depth >= 0) {
        Level& cur = stack[depth];
        if (depth == genus) {
            if (cur.prefix == 0) ++count;
            --depth;
            continue;
        }
        if (cur.a >= n) {
            --depth;
            continue;
        }
        uint8_t a = cur.a;
        uint8_t b = cur.b;
        // advance the odometer at this level
        if (++cur.b >= n) {
            cur.b = 0;
            ++cur.a;
        }
        stack[depth + 1] = {c.mul(cur.prefix, commutator(a, b)), 0, 0};
        ++depth;
    }
    return count;
}

}  // namespace gog::oracle
