#pragma once

#include "qf/group.hpp"
#include "qf/lazy.hpp"
#include "qf/ordering.hpp"
#include "qf/quandle.hpp"
#include "qf/rational.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace qf {

// ---- fiber rings (endomorphisms of the abelian fiber are scalars) ----

struct RationalRing {
    using Elem = Rational;
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool is_unit(const Elem& e) const { return e != 0; }
    std::string show(const Elem& e) const { return show_rational(e); }
};

struct ModRing {
    long m = 2;
    using Elem = long;
    Elem norm(long v) const { v %= m; return v < 0 ? v + m : v; }
    Elem zero() const { return 0; }
    Elem one() const { return norm(1); }
    Elem add(Elem a, Elem b) const { return norm(a + b); }
    Elem sub(Elem a, Elem b) const { return norm(a - b); }
    Elem mul(Elem a, Elem b) const { return norm(a * b); }
    bool is_unit(Elem e) const { return std::gcd(norm(e), m) == 1; }
    std::string show(Elem e) const { return std::to_string(norm(e)); }
    std::vector<Elem> all() const {
        std::vector<Elem> v(m);
        for (long i = 0; i < m; ++i) v[i] = i;
        return v;
    }
};

// ---- dynamical cocycles over a finite fiber ----

struct DynamicalCocycle {
    FiniteQuandle base;
    int fiber_size = 0;
    // alpha[x][y][r][s] = alpha_{x,y}(r, s)
    std::vector<std::vector<std::vector<std::vector<int>>>> alpha;
};

struct DynViolation {
    int cond = 0; // 1..3
    int x = -1, y = -1, z = -1, r = -1, s = -1, t = -1;
    std::string describe() const;
};

std::optional<DynViolation> validate_dynamical(const DynamicalCocycle& c);

// Finite extension table on fiber x base; pair (s, x) gets index s*N + x.
// Refuses (input_error) when the cocycle fails validation.
FiniteQuandle build_extension(const DynamicalCocycle& c);

// ---- affine (module) cocycles ----

template <class R>
struct AffineCocycle {
    FiniteQuandle base;
    R ring;
    std::vector<std::vector<typename R::Elem>> eta, tau, kappa;

    typename R::Elem alpha(int x, int y, const typename R::Elem& a, const typename R::Elem& b) const {
        return ring.add(ring.add(ring.mul(eta[x][y], a), ring.mul(tau[x][y], b)), kappa[x][y]);
    }
};

using RationalAffine = AffineCocycle<RationalRing>;
using ModularAffine = AffineCocycle<ModRing>;

template <class R>
AffineCocycle<R> lambda_module_cocycle(FiniteQuandle base, R ring, const typename R::Elem& t) {
    const int n = base.size();
    AffineCocycle<R> c{std::move(base), ring, {}, {}, {}};
    c.eta.assign(n, std::vector<typename R::Elem>(n, t));
    c.tau.assign(n, std::vector<typename R::Elem>(n, ring.sub(ring.one(), t)));
    c.kappa.assign(n, std::vector<typename R::Elem>(n, ring.zero()));
    return c;
}

struct AffineViolation {
    int eq = 0; // 1..4
    int x = -1, y = -1, z = -1;
    std::string describe() const {
        return "Eq " + std::to_string(eq) + " fails at (a" + std::to_string(x + 1) + ",a" +
               std::to_string(y + 1) + (z >= 0 ? ",a" + std::to_string(z + 1) : "") + ")";
    }
};

// Checks Eqs (1)-(4) as scalar identities over all base triples and as map
// identities on the supplied fiber elements. Throws input_error when some
// eta entry is not invertible (structural, distinct from an equation
// failure).
template <class R>
std::optional<AffineViolation> validate_affine(const AffineCocycle<R>& c,
                                               const std::vector<typename R::Elem>& fiber_elems) {
    const int n = c.base.size();
    const R& ring = c.ring;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!ring.is_unit(c.eta[x][y]))
                throw input_error("eta at (a" + std::to_string(x + 1) + ",a" + std::to_string(y + 1) +
                                  ") = " + ring.show(c.eta[x][y]) + " is not an automorphism of the fiber");
    auto eq_elem = [&](const typename R::Elem& a, const typename R::Elem& b) { return a == b; };
    for (int x = 0; x < n; ++x) {
        // Eq 4: tau_{x,x} + eta_{x,x} = Id
        if (!eq_elem(ring.add(c.tau[x][x], c.eta[x][x]), ring.one())) return AffineViolation{4, x, x, -1};
        for (const auto& a : fiber_elems)
            if (!eq_elem(ring.add(ring.mul(c.tau[x][x], a), ring.mul(c.eta[x][x], a)), a))
                return AffineViolation{4, x, x, -1};
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xy = c.base.apply(x, y), xz = c.base.apply(x, z), yz = c.base.apply(y, z);
                auto lhs1 = ring.mul(c.eta[xy][z], c.eta[x][y]);
                auto rhs1 = ring.mul(c.eta[xz][yz], c.eta[x][z]);
                if (!eq_elem(lhs1, rhs1)) return AffineViolation{1, x, y, z};
                auto lhs2 = ring.mul(c.eta[xy][z], c.tau[x][y]);
                auto rhs2 = ring.mul(c.tau[xz][yz], c.eta[y][z]);
                if (!eq_elem(lhs2, rhs2)) return AffineViolation{2, x, y, z};
                auto lhs3 = c.tau[xy][z];
                auto rhs3 = ring.add(ring.mul(c.eta[xz][yz], c.tau[x][z]), ring.mul(c.tau[xz][yz], c.tau[y][z]));
                if (!eq_elem(lhs3, rhs3)) return AffineViolation{3, x, y, z};
                for (const auto& a : fiber_elems) {
                    if (!eq_elem(ring.mul(lhs1, a), ring.mul(rhs1, a))) return AffineViolation{1, x, y, z};
                    if (!eq_elem(ring.mul(lhs2, a), ring.mul(rhs2, a))) return AffineViolation{2, x, y, z};
                    if (!eq_elem(ring.mul(lhs3, a), ring.mul(rhs3, a))) return AffineViolation{3, x, y, z};
                }
            }
    return std::nullopt;
}

// Induced table cocycle of a finite-fiber affine cocycle.
DynamicalCocycle to_dynamical(const ModularAffine& c);

// ---- lazy extensions over the rational fiber ----

using RQPair = std::pair<Rational, int>;     // (fiber, finite base element)
using RRPair = std::pair<Rational, Rational>; // (fiber, circle base element)

LazyQuandle<RQPair> build_extension_lazy(const RationalAffine& c,
                                         std::function<Rational(Rng&)> fiber_sampler = {});

// Lambda-module extension over the circle quandle base.
LazyQuandle<RRPair> build_circle_extension(const Rational& t_fiber, const CircleQuandle& base);

// ---- lexicographic orderings ----

// (r,x) < (s,y) iff r <' s, or r = s and x < y.
std::function<int(const RQPair&, const RQPair&)> lex_order_fn(const TotalOrder& base_order);

// Total order on a finite extension built from fiber and base total orders.
TotalOrder lex_order(const TotalOrder& fiber_order, const TotalOrder& base_order);

// ---- ordering propositions on extensions ----

struct ExtensionOrderReport {
    bool refused = false;
    std::string refusal;
    bool base_order_invariant = false; // the base-order hypothesis of the proposition
    bool invariant = false;
    std::string violation;
    std::uint64_t seed = 0;
    long samples = 0;
};

// Lambda-module cocycle alpha(a,b) = ta + (1-t)b (+ kappa) over a finite
// right/left-ordered base. Hypotheses gate the construction unless force is
// set; the report then carries a sampled violation if one exists.
ExtensionOrderReport extension_total_order(const FiniteQuandle& base, const Rational& t,
                                           const std::optional<std::vector<std::vector<Rational>>>& kappa,
                                           const TotalOrder& base_order, Side side, const SampleSpec& spec,
                                           bool force = false);

// Three-case circular ordering on pairs over a circularly ordered base:
// distinct bases follow d, a repeated base compares fibers after cyclic
// rotation, equal bases use the secret ordering of the fiber.
template <class B>
CircularOrderFn<std::pair<Rational, B>> extension_circular_fn(CircularOrderFn<B> d) {
    using P = std::pair<Rational, B>;
    return [d](const P& p1, const P& p2, const P& p3) -> int {
        if (p1 == p2 || p2 == p3 || p1 == p3) return 0;
        const B &x = p1.second, &y = p2.second, &z = p3.second;
        if (x != y && y != z && x != z) return d(x, y, z);
        if (x == y && y == z) {
            const Rational &a = p1.first, &b = p2.first, &r = p3.first;
            if ((a < b && b < r) || (b < r && r < a) || (r < a && a < b)) return 1;
            return -1;
        }
        // exactly two equal bases: rotate the triple so they sit first
        P q1 = p1, q2 = p2, q3 = p3;
        if (y == z) { q1 = p2; q2 = p3; q3 = p1; }
        else if (x == z) { q1 = p3; q2 = p1; q3 = p2; }
        return q1.first < q2.first ? 1 : -1;
    };
}

struct ExtensionCircularReport {
    bool refused = false;
    std::string refusal;
    bool valid = false;
    bool invariant = false;
    std::string violation;
    std::uint64_t seed = 0;
    long samples = 0;
};

// Lambda-module circular extension over the circle quandle.
ExtensionCircularReport extension_circular_order(const Rational& t_fiber, const CircleQuandle& base,
                                                 Side side, const SampleSpec& spec, bool force = false);

// ---- order preservation (lemma and proposition directions) ----

struct PreservationReport {
    bool lex_invariant = false;
    bool pointwise_monotone = false; // alpha_{x,y}(-, s) order preserving
    bool joint_monotone = false;     // alpha_{-,y}(-, s) preserves the lex order
    bool lemma_ok = false;           // lex invariant => pointwise monotone
    bool prop_ok = false;            // joint monotone => lex invariant
    std::string note;
};

PreservationReport order_preservation_check(const RationalAffine& c, const TotalOrder& base_order,
                                            const SampleSpec& spec);
PreservationReport order_preservation_check(const DynamicalCocycle& c, const TotalOrder& fiber_order,
                                            const TotalOrder& base_order);

// ---- group extensions as quandle extensions ----

struct GroupCocycleData {
    FiniteGroupTable group;              // K
    std::vector<Rational> action;        // scalar automorphism of A per element of K
    std::optional<std::vector<std::vector<Rational>>> theta; // group 2-cocycle, zero when absent
};

// eta_{x,y}(a) = ya, tau_{x,y}(b) = b - (x*y)b,
// kappa_{x,y} = theta(y,x) - yx theta(y^-1,y) + theta(yx,y^-1),
// over the base Conj(K). The result must pass validate_affine; a failure
// raises input_error carrying the violated equation.
RationalAffine group_to_quandle_cocycle(const GroupCocycleData& data);

struct BridgeOrderReport {
    long samples = 0;
    long checked = 0;
    bool all_agree = false;
    std::string first_disagreement;
    std::string flag;
};

// proplo2 hypothesis z(a-b)+(y*z)c-(x*z)c <' 0 against the observed lex
// order comparison of the actual products.
BridgeOrderReport proplo2_check(const GroupCocycleData& data, const TotalOrder& base_order,
                                const SampleSpec& spec);

// proplo3 hypothesis a-b+(z*y)b-(z*x)a <' 0, implemented as written; the
// report is flagged "literal interpretation".
BridgeOrderReport proplo3_check(const GroupCocycleData& data, const TotalOrder& base_order,
                                const SampleSpec& spec);

} // namespace qf
