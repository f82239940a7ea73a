#pragma once

#include "qf/errors.hpp"
#include "qf/ordering.hpp"
#include "qf/rational.hpp"

#include <array>
#include <functional>
#include <sstream>
#include <utility>

namespace qf {

// Countable/parametric quandle given by an operation rule and a deterministic
// sampler. Sampled invariants are quandle axioms 1 and 3; the dual rule, when
// present, inverts the operation on sampled pairs.
template <class E>
struct LazyQuandle {
    std::string name;
    std::function<E(const E&, const E&)> op;
    std::function<E(const E&, const E&)> dual; // may be empty
    std::function<E(Rng&)> sample;
};

template <class E>
using CircularOrderFn = std::function<int(const E&, const E&, const E&)>;

struct SampleSpec {
    std::uint64_t seed = 0;
    long triples = 10000;
    long quadruples = 1000;
};

inline std::string show_elem(const Rational& r) { return show_rational(r); }
inline std::string show_elem(int e) { return "a" + std::to_string(e + 1); }
template <class A, class B>
std::string show_elem(const std::pair<A, B>& p) {
    return "(" + show_elem(p.first) + "," + show_elem(p.second) + ")";
}

struct LazyCheckResult {
    bool ok = true;
    std::string violation; // empty when ok
};

template <class E>
LazyCheckResult lazy_axioms_check(const LazyQuandle<E>& q, const SampleSpec& spec) {
    Rng rng(spec.seed);
    for (long i = 0; i < spec.triples; ++i) {
        E x = q.sample(rng), y = q.sample(rng), z = q.sample(rng);
        if (!(q.op(x, x) == x))
            return {false, "axiom 1 fails at " + show_elem(x)};
        E lhs = q.op(q.op(x, y), z);
        E rhs = q.op(q.op(x, z), q.op(y, z));
        if (!(lhs == rhs))
            return {false, "axiom 3 fails at (" + show_elem(x) + "," + show_elem(y) + "," + show_elem(z) + ")"};
        if (q.dual) {
            E back = q.dual(q.op(x, y), y);
            if (!(back == x))
                return {false, "dual rule fails at (" + show_elem(x) + "," + show_elem(y) + ")"};
        }
    }
    return {};
}

// Axioms (1) and (2) of a circular ordering on sampled data: degenerate
// triples must vanish, sampled distinct triples must not, and sampled
// quadruples must satisfy the cocycle identity.
template <class E>
LazyCheckResult is_valid_circular_sampled(const CircularOrderFn<E>& c,
                                          const std::function<E(Rng&)>& sample,
                                          const SampleSpec& spec) {
    Rng rng(spec.seed);
    for (long i = 0; i < spec.triples; ++i) {
        E x = sample(rng), y = sample(rng), z = sample(rng);
        int v = c(x, y, z);
        bool degenerate = x == y || y == z || x == z;
        if (degenerate && v != 0)
            return {false, "axiom (1): nonzero on degenerate (" + show_elem(x) + "," + show_elem(y) + "," +
                               show_elem(z) + ")"};
        if (!degenerate && v == 0)
            return {false, "axiom (1): zero on distinct (" + show_elem(x) + "," + show_elem(y) + "," +
                               show_elem(z) + ")"};
        if (c(x, x, y) != 0 || c(x, y, y) != 0 || c(y, x, y) != 0 || c(x, x, x) != 0)
            return {false, "axiom (1): nonzero on constructed degenerate triple at (" + show_elem(x) + "," +
                               show_elem(y) + ")"};
    }
    for (long i = 0; i < spec.quadruples; ++i) {
        E a = sample(rng), b = sample(rng), d = sample(rng), e = sample(rng);
        if (c(a, b, d) - c(a, b, e) + c(a, d, e) - c(b, d, e) != 0)
            return {false, "axiom (2): cocycle identity fails at (" + show_elem(a) + "," + show_elem(b) + "," +
                               show_elem(d) + "," + show_elem(e) + ")"};
    }
    return {};
}

template <class E>
LazyCheckResult invariance_check_sampled(const LazyQuandle<E>& q, const CircularOrderFn<E>& c, Side side,
                                         const SampleSpec& spec) {
    Rng rng(spec.seed);
    for (long i = 0; i < spec.triples; ++i) {
        E g = q.sample(rng), x = q.sample(rng), y = q.sample(rng), z = q.sample(rng);
        int lhs = c(x, y, z);
        int rhs = side == Side::right ? c(q.op(x, g), q.op(y, g), q.op(z, g))
                                      : c(q.op(g, x), q.op(g, y), q.op(g, z));
        if (lhs != rhs)
            return {false, std::string(side_name(side)) + " circular invariance fails at g=" + show_elem(g) +
                               " (" + show_elem(x) + "," + show_elem(y) + "," + show_elem(z) + ")"};
    }
    return {};
}

// Total-order invariance for a lazy carrier under a strict comparator
// (cmp < 0 means "precedes").
template <class E>
LazyCheckResult total_invariance_sampled(const LazyQuandle<E>& q,
                                         const std::function<int(const E&, const E&)>& cmp, Side side,
                                         const SampleSpec& spec) {
    Rng rng(spec.seed);
    for (long i = 0; i < spec.triples; ++i) {
        E r = q.sample(rng), s = q.sample(rng), t = q.sample(rng);
        if (cmp(s, t) >= 0) std::swap(s, t);
        if (cmp(s, t) >= 0) continue; // equal
        bool ok = side == Side::right ? cmp(q.op(s, r), q.op(t, r)) < 0 : cmp(q.op(r, s), q.op(r, t)) < 0;
        if (!ok)
            return {false, std::string(side_name(side)) + " order invariance fails at r=" + show_elem(r) +
                               " (" + show_elem(s) + "," + show_elem(t) + ")"};
    }
    return {};
}

// ---- circle quandle (angles as exact rational turns in [0,1)) ----

// Three-case rule on representatives.
inline int circle_order_eval(const Rational& th, const Rational& ph, const Rational& ps) {
    if ((th < ph && ph < ps) || (ph < ps && ps < th) || (ps < th && th < ph)) return 1;
    if ((th < ps && ps < ph) || (ps < ph && ph < th) || (ph < th && th < ps)) return -1;
    return 0;
}

struct CircleQuandle {
    Rational t;
    LazyQuandle<Rational> carrier;
    CircularOrderFn<Rational> order;
};

inline CircleQuandle circle_quandle(const Rational& t) {
    if (!(Rational(0) < t && t < Rational(1)))
        throw input_error("circle quandle requires 0 < t < 1, got " + show_rational(t));
    CircleQuandle cq;
    cq.t = t;
    cq.carrier.name = "circle(t=" + show_rational(t) + ")";
    // convex combination: stays inside [0,1), no reduction needed
    cq.carrier.op = [t](const Rational& lam, const Rational& mu) { return t * lam + (1 - t) * mu; };
    cq.carrier.dual = [t](const Rational& a, const Rational& mu) { return (a - (1 - t) * mu) / t; };
    cq.carrier.sample = [](Rng& rng) { return rng.unit_rational(); };
    cq.order = [](const Rational& a, const Rational& b, const Rational& c) { return circle_order_eval(a, b, c); };
    return cq;
}

// ---- recursion lemma ----

struct RecursionLemmaReport {
    bool constant_ok = true;
    int constant = 0;       // common value of c(x,y,chain_i)
    int break_index = -1;   // first i where the chain value changes
    bool nontrivial_at_pair = false;
    bool nonzero_ok = true; // constant != 0 whenever nontrivial at (x,y)
    bool ok() const { return constant_ok && nonzero_ok; }
    std::string describe() const {
        if (!constant_ok)
            return "chain value changes at i=" + std::to_string(break_index) +
                   " (contradiction with the recursion lemma)";
        if (!nonzero_ok) return "chain constant is 0 on a nontrivial pair";
        return "chain constant " + std::to_string(constant);
    }
};

// Checks c(x,y,y*_i x) (right) or c(x,y,L_x^i(y)) (left) for i = 1..depth.
template <class E, class Op, class CFn>
RecursionLemmaReport verify_recursion_lemma(const Op& op, const CFn& c, const E& x, const E& y, int depth,
                                            Side side) {
    RecursionLemmaReport rep;
    E z = side == Side::right ? op(y, x) : op(x, y);
    rep.nontrivial_at_pair = !(z == y);
    rep.constant = c(x, y, z);
    for (int i = 2; i <= depth; ++i) {
        z = side == Side::right ? op(z, x) : op(x, z);
        int v = c(x, y, z);
        if (v != rep.constant) {
            rep.constant_ok = false;
            rep.break_index = i;
            break;
        }
    }
    if (rep.constant_ok && rep.nontrivial_at_pair && rep.constant == 0) rep.nonzero_ok = false;
    return rep;
}

template <class CFn>
RecursionLemmaReport verify_recursion_lemma(const FiniteQuandle& q, const CFn& c, int x, int y, int depth,
                                            Side side) {
    auto op = [&q](int a, int b) { return q.apply(a, b); };
    return verify_recursion_lemma<int>(op, c, x, y, depth, side);
}

// ---- quandle actions ----

// rho(p) = R_p acting on the quandle's own carrier.
struct FiniteQuandleAction {
    std::vector<Permutation> rho;
    bool faithful = false;

    int act(int p, int point) const { return rho[p].map[point]; }

    // Paper's stabilizer Q_t: elements whose action on t collides with some
    // other element's action.
    std::vector<int> stabilizer_of(int t) const {
        const int n = static_cast<int>(rho.size());
        std::vector<int> out;
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q) {
                if (q != p && rho[q].map[t] == rho[p].map[t]) {
                    out.push_back(p);
                    break;
                }
            }
        }
        return out;
    }
};

inline FiniteQuandleAction rho_action(const FiniteQuandle& q) {
    FiniteQuandleAction a;
    const int n = q.size();
    a.rho.reserve(n);
    for (int p = 0; p < n; ++p) a.rho.push_back(right_translation(q, p));
    a.faithful = true;
    for (int p = 0; p < n && a.faithful; ++p)
        for (int r = p + 1; r < n && a.faithful; ++r)
            if (a.rho[p].map == a.rho[r].map) a.faithful = false;
    return a;
}

// Circular ordering pulled back through a faithful action with empty
// stabilizer at the base point; validity is re-checked by callers.
inline CircularFn circular_order_from_action(const FiniteQuandleAction& action, int base, const CircularFn& d) {
    auto stab = action.stabilizer_of(base);
    if (!stab.empty()) {
        int p = stab.front();
        int other = -1;
        for (int q2 = 0; q2 < static_cast<int>(action.rho.size()); ++q2)
            if (q2 != p && action.rho[q2].map[base] == action.rho[p].map[base]) { other = q2; break; }
        throw hypothesis_error("stabilizer at base " + show_elem(base) + " is nonempty: " + show_elem(p) +
                               " and " + show_elem(other) + " collide");
    }
    return [&action, base, d](int x, int y, int z) {
        int ix = action.act(x, base), iy = action.act(y, base), iz = action.act(z, base);
        if (d(ix, iy, iz) == 1) return 1;
        if (d(ix, iz, iy) == 1) return -1;
        return 0;
    };
}

// Lazy action by right translations. Faithfulness and the stabilizer test are
// sampled: pairs of sampled elements separated at sampled points.
template <class E>
struct LazyQuandleAction {
    const LazyQuandle<E>* q;

    E act(const E& p, const E& point) const { return q->op(point, p); }

    LazyCheckResult faithful_sampled(const SampleSpec& spec, int points_per_pair = 16) const {
        Rng rng(spec.seed);
        for (long i = 0; i < spec.triples; ++i) {
            E p = q->sample(rng), r = q->sample(rng);
            if (p == r) continue;
            bool separated = false;
            for (int k = 0; k < points_per_pair && !separated; ++k) {
                E pt = q->sample(rng);
                separated = !(act(p, pt) == act(r, pt));
            }
            if (!separated)
                return {false, "no sampled point separates " + show_elem(p) + " and " + show_elem(r)};
        }
        return {};
    }

    // first sampled collision at the base point, if any
    LazyCheckResult stabilizer_empty_sampled(const E& base, const SampleSpec& spec) const {
        Rng rng(spec.seed);
        for (long i = 0; i < spec.triples; ++i) {
            E p = q->sample(rng), r = q->sample(rng);
            if (p == r) continue;
            if (act(p, base) == act(r, base))
                return {false, "stabilizer collision at base " + show_elem(base) + ": " + show_elem(p) +
                                   " and " + show_elem(r)};
        }
        return {};
    }
};

template <class E>
CircularOrderFn<E> circular_order_from_action(const LazyQuandleAction<E>& action, const E& base,
                                              const CircularOrderFn<E>& d, const SampleSpec& spec) {
    auto stab = action.stabilizer_empty_sampled(base, spec);
    if (!stab.ok) throw hypothesis_error(stab.violation);
    const LazyQuandle<E>* q = action.q;
    return [q, base, d](const E& x, const E& y, const E& z) {
        E ix = q->op(base, x), iy = q->op(base, y), iz = q->op(base, z);
        if (d(ix, iy, iz) == 1) return 1;
        if (d(ix, iz, iy) == 1) return -1;
        return 0;
    };
}

} // namespace qf
