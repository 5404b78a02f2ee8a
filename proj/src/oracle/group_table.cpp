#include "gog/oracle/group_table.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gog/errors.hpp"

namespace gog::oracle {

namespace {

// Smallest generating set by exhaustive search over index subsets of each
// size in lexicographic order.  n is tiny (catalog tops out at 24).
std::vector<uint8_t> find_min_gens(const std::vector<std::vector<uint8_t>>& table) {
    const size_t n = table.size();
    if (n == 1) return {};
    auto generates = [&](const std::vector<uint8_t>& gens) {
        std::vector<bool> seen(n, false);
        std::vector<uint8_t> frontier = {0};
        seen[0] = true;
        size_t count = 1;
        while (!frontier.empty()) {
            uint8_t a = frontier.back();
            frontier.pop_back();
            for (uint8_t g : gens) {
                uint8_t b = table[a][g];
                if (!seen[b]) {
                    seen[b] = true;
                    ++count;
                    frontier.push_back(b);
                }
            }
        }
        return count == n;
    };
    for (size_t k = 1; k <= n; ++k) {
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i + 1;  // skip the identity
        while (true) {
            std::vector<uint8_t> gens(idx.begin(), idx.end());
            if (generates(gens)) return gens;
            // next k-combination of {1..n-1}
            size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw domain_error("no generating set found (corrupt table)");
}

}  // namespace

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<uint8_t>> table, std::string name)
    : n_(static_cast<long long>(table.size())), name_(std::move(name)), table_(std::move(table)) {
    if (n_ < 1 || n_ > 64) throw domain_error("group order out of range [1,64]");
    for (const auto& row : table_)
        if (static_cast<long long>(row.size()) != n_)
            throw domain_error("multiplication table is not square");
    for (uint8_t a = 0; a < n_; ++a) {
        if (table_[0][a] != a || table_[a][0] != a)
            throw domain_error("element 0 is not a two-sided identity");
        for (uint8_t b = 0; b < n_; ++b)
            if (table_[a][b] >= n_) throw domain_error("table entry out of range");
    }
    inverse_.assign(n_, 0);
    for (uint8_t a = 0; a < n_; ++a) {
        bool found = false;
        for (uint8_t b = 0; b < n_; ++b) {
            if (table_[a][b] == 0) {
                if (table_[b][a] != 0) throw domain_error("one-sided inverse found");
                inverse_[a] = b;
                found = true;
                break;
            }
        }
        if (!found) throw domain_error("element without inverse");
    }
    for (uint8_t a = 0; a < n_; ++a)
        for (uint8_t b = 0; b < n_; ++b)
            for (uint8_t c = 0; c < n_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw domain_error("table is not associative");
    min_gens_ = find_min_gens(table_);
}

uint8_t FiniteGroupTable::power(uint8_t a, long long e) const {
    if (e < 0) return power(inverse_[a], -e);
    uint8_t r = 0;
    for (long long i = 0; i < e; ++i) r = table_[r][a];
    return r;
}

long long FiniteGroupTable::element_order(uint8_t a) const {
    uint8_t x = a;
    long long k = 1;
    while (x != 0) {
        x = table_[x][a];
        ++k;
    }
    return k;
}

namespace {

using Table = std::vector<std::vector<uint8_t>>;

Table cyclic_table(long long n) {
    Table t(n, std::vector<uint8_t>(n));
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) t[a][b] = static_cast<uint8_t>((a + b) % n);
    return t;
}

Table klein_table() {
    Table t(4, std::vector<uint8_t>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = static_cast<uint8_t>(a ^ b);
    return t;
}

// Dihedral group of order 2n; element (rotation a, flip b) at index b*n + a,
// with (r^a s^b)(r^c s^d) = r^(a + c or a - c) s^(b xor d).
Table dihedral_table(long long n) {
    Table t(2 * n, std::vector<uint8_t>(2 * n));
    auto idx = [n](long long rot, long long flip) {
        return static_cast<uint8_t>(flip * n + ((rot % n) + n) % n);
    };
    for (long long b = 0; b < 2; ++b)
        for (long long a = 0; a < n; ++a)
            for (long long d = 0; d < 2; ++d)
                for (long long c = 0; c < n; ++c)
                    t[idx(a, b)][idx(c, d)] = idx(b ? a - c : a + c, b ^ d);
    return t;
}

// Symmetric or alternating group realized on the permutations themselves,
// listed in lexicographic order (the identity is lexicographically first).
Table perm_group_table(int degree, bool even_only) {
    std::vector<std::vector<uint8_t>> elems;
    std::vector<uint8_t> p(degree);
    for (int i = 0; i < degree; ++i) p[i] = static_cast<uint8_t>(i);
    do {
        if (even_only) {
            int inversions = 0;
            for (int i = 0; i < degree; ++i)
                for (int j = i + 1; j < degree; ++j)
                    if (p[i] > p[j]) ++inversions;
            if (inversions % 2) continue;
        }
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<uint8_t>, uint8_t> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<uint8_t>(i);
    Table t(elems.size(), std::vector<uint8_t>(elems.size()));
    std::vector<uint8_t> prod(degree);
    for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b) {
            for (int x = 0; x < degree; ++x) prod[x] = elems[a][elems[b][x]];
            t[a][b] = index[prod];
        }
    return t;
}

// Unit quaternions 1, i, j, k, -1, -i, -j, -k at indices 0..7.
Table quaternion_table() {
    // basis multiplication: sign and axis of e_a * e_b for a,b in {1,i,j,k}
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    Table t(8, std::vector<uint8_t>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int s = (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1) * sign[a % 4][b % 4];
            int ax = axis[a % 4][b % 4];
            t[a][b] = static_cast<uint8_t>(s > 0 ? ax : ax + 4);
        }
    return t;
}

}  // namespace

FiniteGroupTable build_group(const std::string& name) {
    auto parse_suffix = [&](const std::string& prefix) -> long long {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return -1;
        long long v = 0;
        for (size_t i = prefix.size(); i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') return -1;
            v = v * 10 + (name[i] - '0');
        }
        return v;
    };
    if (long long n = parse_suffix("cyclic"); n >= 1) {
        if (n > 12) throw domain_error("cyclic order out of catalog range (1..12)");
        return FiniteGroupTable(cyclic_table(n), name);
    }
    if (long long n = parse_suffix("dihedral"); n >= 1) {
        if (n < 2 || 2 * n > 12) throw domain_error("dihedral parameter out of catalog range (2..6)");
        return FiniteGroupTable(dihedral_table(n), name);
    }
    if (name == "klein4") return FiniteGroupTable(klein_table(), name);
    if (name == "sym3") return FiniteGroupTable(perm_group_table(3, false), name);
    if (name == "sym4") return FiniteGroupTable(perm_group_table(4, false), name);
    if (name == "alt4") return FiniteGroupTable(perm_group_table(4, true), name);
    if (name == "quaternion8") return FiniteGroupTable(quaternion_table(), name);
    throw domain_error("unknown group \"" + name +
                       "\" (catalog: cyclic1..cyclic12, klein4, dihedral2..dihedral6, sym3, sym4, alt4, "
                       "quaternion8)");
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 12; ++n) names.push_back("cyclic" + std::to_string(n));
    names.push_back("klein4");
    for (int n = 2; n <= 6; ++n) names.push_back("dihedral" + std::to_string(n));
    names.insert(names.end(), {"sym3", "sym4", "alt4", "quaternion8"});
    return names;
}

long long conjugacy_class_count(const FiniteGroupTable& g) {
    const long long n = g.order();
    std::vector<bool> seen(n, false);
    long long classes = 0;
    for (uint8_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        ++classes;
        for (uint8_t x = 0; x < n; ++x) seen[g.mul(g.mul(x, a), g.inverse(x))] = true;
    }
    return classes;
}

std::vector<uint8_t> closure(const FiniteGroupTable& g, const std::vector<uint8_t>& elements) {
    std::vector<bool> in(g.order(), false);
    std::vector<uint8_t> members = {0};
    in[0] = true;
    std::vector<uint8_t> frontier = {0};
    auto add = [&](uint8_t x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            frontier.push_back(x);
        }
    };
    for (uint8_t x : elements) add(x);
    while (!frontier.empty()) {
        uint8_t a = frontier.back();
        frontier.pop_back();
        for (size_t i = 0; i < members.size(); ++i) {
            add(g.mul(a, members[i]));
            add(g.mul(members[i], a));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

long long commutator_subgroup_order(const FiniteGroupTable& g) {
    std::vector<uint8_t> gens;
    for (uint8_t a = 0; a < g.order(); ++a)
        for (uint8_t b = 0; b < g.order(); ++b)
            gens.push_back(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
    return static_cast<long long>(closure(g, gens).size());
}

long long min_generators(const FiniteGroupTable& g) {
    return static_cast<long long>(g.minimal_generators().size());
}

FiniteGroupTable subgroup_table(const FiniteGroupTable& g, std::vector<uint8_t> elements) {
    std::sort(elements.begin(), elements.end());
    if (elements.empty() || elements[0] != 0)
        throw domain_error("subgroup must contain the identity");
    std::vector<int> pos(g.order(), -1);
    for (size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
    std::vector<std::vector<uint8_t>> t(elements.size(), std::vector<uint8_t>(elements.size()));
    for (size_t a = 0; a < elements.size(); ++a)
        for (size_t b = 0; b < elements.size(); ++b) {
            int p = pos[g.mul(elements[a], elements[b])];
            if (p < 0) throw domain_error("element set is not closed under multiplication");
            t[a][b] = static_cast<uint8_t>(p);
        }
    return FiniteGroupTable(std::move(t), g.name() + "-sub" + std::to_string(elements.size()));
}

std::vector<std::vector<uint8_t>> all_subgroups(const FiniteGroupTable& g) {
    std::set<std::vector<uint8_t>> known;
    known.insert({0});
    // Grow the lattice: adjoin a single generator to each known subgroup
    // until nothing new appears.  Every subgroup arises this way.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<uint8_t>> snapshot(known.begin(), known.end());
        for (const auto& sub : snapshot) {
            for (uint8_t x = 1; x < g.order(); ++x) {
                std::vector<uint8_t> gens = sub;
                gens.push_back(x);
                if (known.insert(closure(g, gens)).second) grew = true;
            }
        }
    }
    std::vector<std::vector<uint8_t>> result(known.begin(), known.end());
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return result;
}

}  // namespace gog::oracle
