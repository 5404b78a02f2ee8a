#include "gog/descriptor.hpp"

#include "gog/errors.hpp"

namespace gog {

namespace {

InvariantRecord finite_record(long long n) {
    InvariantRecord r;
    r.omega = Rational(1, n);
    r.rank_gradient = Rational(-1, n);
    r.l2_betti = Rational(0);
    r.betti_volume = Rational(-1, n);
    // For finite G the homomorphism-growth value is -1/n, which equals the
    // rank gradient, so the coincidence is established.
    r.vc_equals_rg = true;
    r.finite_order = n;
    r.max_finite_subgroup = n;
    r.hypothesis_ok = true;
    return r;
}

}  // namespace

InvariantRecord base_invariants(const GroupDescriptor& d) {
    struct Visitor {
        InvariantRecord operator()(const Finite& f) const {
            if (f.order < 1) throw domain_error("finite group order must be >= 1");
            return finite_record(f.order);
        }
        InvariantRecord operator()(const SurfaceGenus& s) const {
            if (s.genus < 1) throw domain_error("surface genus must be >= 1");
            InvariantRecord r;
            Rational v(2 * (s.genus - 1));
            r.omega = Rational(0);
            r.rank_gradient = v;
            r.l2_betti = v;
            r.betti_volume = v;
            r.vc_equals_rg = true;
            r.max_finite_subgroup = 1;  // torsion-free
            return r;
        }
        InvariantRecord operator()(const FreeOfRank& f) const {
            if (f.rank < 0) throw domain_error("free rank must be >= 0");
            if (f.rank == 0) return finite_record(1);  // trivial group
            InvariantRecord r;
            Rational v(f.rank - 1);
            r.omega = Rational(1 - f.rank);
            r.rank_gradient = v;
            r.l2_betti = v;
            r.betti_volume = v;
            r.vc_equals_rg = true;
            r.max_finite_subgroup = 1;  // torsion-free
            return r;
        }
        InvariantRecord operator()(const NilpotentInfinite&) const { return flat(); }
        InvariantRecord operator()(const PolycyclicInfinite&) const { return flat(); }
        InvariantRecord operator()(const Custom& c) const { return c.record; }

        static InvariantRecord flat() {
            // Infinite nilpotent and polycyclic groups: all the volume-type
            // invariants vanish; finite subgroup orders are not bounded by
            // the descriptor alone.
            InvariantRecord r;
            r.omega = Rational(0);
            r.rank_gradient = Rational(0);
            r.l2_betti = Rational(0);
            r.betti_volume = Rational(0);
            r.vc_equals_rg = true;
            r.max_finite_subgroup = std::nullopt;
            return r;
        }
    };
    return std::visit(Visitor{}, d);
}

std::string descriptor_name(const GroupDescriptor& d) {
    struct Visitor {
        std::string operator()(const Finite& f) const { return "finite:" + std::to_string(f.order); }
        std::string operator()(const SurfaceGenus& s) const { return "surface:" + std::to_string(s.genus); }
        std::string operator()(const FreeOfRank& f) const { return "free:" + std::to_string(f.rank); }
        std::string operator()(const NilpotentInfinite&) const { return "nilpotent"; }
        std::string operator()(const PolycyclicInfinite&) const { return "polycyclic"; }
        std::string operator()(const Custom& c) const { return "custom:" + c.name; }
    };
    return std::visit(Visitor{}, d);
}

std::optional<std::string> record_violation(const InvariantRecord& r) {
    if (r.finite_order) {
        long long n = *r.finite_order;
        if (n < 1) return "finite_order must be >= 1";
        if (!r.omega || *r.omega != Rational(1, n))
            return "finite group of order " + std::to_string(n) + " must have omega = 1/" + std::to_string(n);
        if (r.rank_gradient != Rational(-1, n))
            return "finite group of order " + std::to_string(n) + " must have rg = -1/" + std::to_string(n);
        if (r.l2_betti != Rational(0)) return "finite group must have b1l2 = 0";
        if (r.betti_volume != Rational(-1, n))
            return "finite group of order " + std::to_string(n) + " must have vb = -1/" + std::to_string(n);
        if (!r.max_finite_subgroup || *r.max_finite_subgroup != n)
            return "finite group of order " + std::to_string(n) + " must have norm " + std::to_string(n);
    }
    if (r.betti_volume > r.rank_gradient) return "vb must not exceed rg";
    return std::nullopt;
}

}  // namespace gog
