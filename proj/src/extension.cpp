#include "qf/extension.hpp"

#include "qf/errors.hpp"

namespace qf {

std::string DynViolation::describe() const {
    std::string out = "condition (" + std::to_string(cond) + ") fails at base (a" + std::to_string(x + 1);
    if (y >= 0) out += ",a" + std::to_string(y + 1);
    if (z >= 0) out += ",a" + std::to_string(z + 1);
    out += ") fiber (" + std::to_string(r);
    if (s >= 0) out += "," + std::to_string(s);
    if (t >= 0) out += "," + std::to_string(t);
    return out + ")";
}

std::optional<DynViolation> validate_dynamical(const DynamicalCocycle& c) {
    const int n = c.base.size();
    const int m = c.fiber_size;
    if (static_cast<int>(c.alpha.size()) != n) throw input_error("alpha tables do not match the base size");
    for (const auto& row : c.alpha) {
        if (static_cast<int>(row.size()) != n) throw input_error("alpha tables do not match the base size");
        for (const auto& tab : row) {
            if (static_cast<int>(tab.size()) != m) throw input_error("alpha table does not match the fiber size");
            for (const auto& r : tab) {
                if (static_cast<int>(r.size()) != m) throw input_error("alpha table does not match the fiber size");
                for (int v : r)
                    if (v < 0 || v >= m) throw input_error("alpha table entry out of fiber range");
            }
        }
    }
    // (1) alpha_{x,x}(s,s) = s
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < m; ++s)
            if (c.alpha[x][x][s][s] != s) return DynViolation{1, x, -1, -1, s, -1, -1};
    // (2) alpha_{x,y}(-, s) bijective
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int s = 0; s < m; ++s) {
                std::vector<bool> hit(m, false);
                for (int r = 0; r < m; ++r) {
                    int v = c.alpha[x][y][r][s];
                    if (hit[v]) return DynViolation{2, x, y, -1, r, s, -1};
                    hit[v] = true;
                }
            }
    // (3) alpha_{x*y,z}(alpha_{x,y}(r,s), t) = alpha_{x*z,y*z}(alpha_{x,z}(r,t), alpha_{y,z}(s,t))
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xy = c.base.apply(x, y), xz = c.base.apply(x, z), yz = c.base.apply(y, z);
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s < m; ++s)
                        for (int t = 0; t < m; ++t) {
                            int lhs = c.alpha[xy][z][c.alpha[x][y][r][s]][t];
                            int rhs = c.alpha[xz][yz][c.alpha[x][z][r][t]][c.alpha[y][z][s][t]];
                            if (lhs != rhs) return DynViolation{3, x, y, z, r, s, t};
                        }
            }
    return std::nullopt;
}

FiniteQuandle build_extension(const DynamicalCocycle& c) {
    if (auto v = validate_dynamical(c))
        throw input_error("refusing to build an extension from an invalid cocycle: " + v->describe());
    const int n = c.base.size();
    const int m = c.fiber_size;
    Table tab(n * m, std::vector<int>(n * m));
    for (int s = 0; s < m; ++s)
        for (int x = 0; x < n; ++x)
            for (int t = 0; t < m; ++t)
                for (int y = 0; y < n; ++y)
                    tab[s * n + x][t * n + y] = c.alpha[x][y][s][t] * n + c.base.apply(x, y);
    return FiniteQuandle::from_table(std::move(tab));
}

DynamicalCocycle to_dynamical(const ModularAffine& c) {
    const int n = c.base.size();
    const long m = c.ring.m;
    DynamicalCocycle d;
    d.base = c.base;
    d.fiber_size = static_cast<int>(m);
    d.alpha.assign(n, std::vector<std::vector<std::vector<int>>>(
                          n, std::vector<std::vector<int>>(m, std::vector<int>(m))));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (long a = 0; a < m; ++a)
                for (long b = 0; b < m; ++b)
                    d.alpha[x][y][a][b] = static_cast<int>(c.alpha(x, y, a, b));
    return d;
}

LazyQuandle<RQPair> build_extension_lazy(const RationalAffine& c, std::function<Rational(Rng&)> fiber_sampler) {
    if (!fiber_sampler) fiber_sampler = [](Rng& rng) { return rng.small_rational(); };
    const int n = c.base.size();
    LazyQuandle<RQPair> q;
    q.name = "affine extension over finite base (N=" + std::to_string(n) + ")";
    const RationalAffine cc = c;
    q.op = [cc](const RQPair& p1, const RQPair& p2) {
        return RQPair{cc.alpha(p1.second, p2.second, p1.first, p2.first),
                      cc.base.apply(p1.second, p2.second)};
    };
    q.dual = [cc](const RQPair& p1, const RQPair& p2) {
        // solve (r,x)*(s,y) = p1 with (s,y) = p2
        int x = cc.base.dual_apply(p1.second, p2.second);
        Rational r = (p1.first - cc.tau[x][p2.second] * p2.first - cc.kappa[x][p2.second]) / cc.eta[x][p2.second];
        return RQPair{r, x};
    };
    q.sample = [fiber_sampler, n](Rng& rng) {
        Rational f = fiber_sampler(rng);
        return RQPair{f, static_cast<int>(rng.below(n))};
    };
    return q;
}

LazyQuandle<RRPair> build_circle_extension(const Rational& t_fiber, const CircleQuandle& base) {
    LazyQuandle<RRPair> q;
    q.name = "affine extension (t=" + show_rational(t_fiber) + ") over " + base.carrier.name;
    Rational t = t_fiber;
    auto base_op = base.carrier.op;
    auto base_sample = base.carrier.sample;
    q.op = [t, base_op](const RRPair& p1, const RRPair& p2) {
        return RRPair{t * p1.first + (1 - t) * p2.first, base_op(p1.second, p2.second)};
    };
    auto base_dual = base.carrier.dual;
    q.dual = [t, base_dual](const RRPair& p1, const RRPair& p2) {
        return RRPair{(p1.first - (1 - t) * p2.first) / t, base_dual(p1.second, p2.second)};
    };
    q.sample = [base_sample](Rng& rng) {
        Rational f = rng.small_rational();
        return RRPair{f, base_sample(rng)};
    };
    return q;
}

std::function<int(const RQPair&, const RQPair&)> lex_order_fn(const TotalOrder& base_order) {
    TotalOrder bo = base_order;
    return [bo](const RQPair& a, const RQPair& b) {
        if (a.first != b.first) return a.first < b.first ? -1 : 1;
        return bo.cmp(a.second, b.second);
    };
}

TotalOrder lex_order(const TotalOrder& fiber_order, const TotalOrder& base_order) {
    const int m = fiber_order.size();
    const int n = base_order.size();
    std::vector<int> rank(m * n);
    for (int s = 0; s < m; ++s)
        for (int x = 0; x < n; ++x) rank[s * n + x] = fiber_order.rank[s] * n + base_order.rank[x];
    return TotalOrder::from_ranks(std::move(rank));
}

namespace {

bool kappa_constant(const std::vector<std::vector<Rational>>& kappa, Side side) {
    const int n = static_cast<int>(kappa.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // right: kappa_{x,z} = kappa_{y,z} (columns constant);
            // left: kappa_{z,x} = kappa_{z,y} (rows constant)
            const Rational& ref = side == Side::right ? kappa[0][j] : kappa[i][0];
            if (kappa[i][j] != ref) return false;
        }
    return true;
}

} // namespace

ExtensionOrderReport extension_total_order(const FiniteQuandle& base, const Rational& t,
                                           const std::optional<std::vector<std::vector<Rational>>>& kappa,
                                           const TotalOrder& base_order, Side side, const SampleSpec& spec,
                                           bool force) {
    ExtensionOrderReport rep;
    rep.seed = spec.seed;
    rep.samples = spec.triples;

    rep.base_order_invariant = invariance_check(base, base_order, side).ok;

    std::string refusal;
    if (t == 0) refusal = "t must be nonzero";
    else if (side == Side::right && !(t > 0)) refusal = "hypothesis t > 0 fails (t = " + show_rational(t) + ")";
    else if (side == Side::left && !(t < 1)) refusal = "hypothesis t < 1 fails (t = " + show_rational(t) + ")";
    else if (kappa && !kappa_constant(*kappa, side))
        refusal = side == Side::right ? "hypothesis kappa_{x,z} = kappa_{y,z} fails" :
                                        "hypothesis kappa_{z,x} = kappa_{z,y} fails";
    else if (side == Side::right && !rep.base_order_invariant)
        refusal = "base order is not right-invariant";
    if (!refusal.empty() && !force) {
        rep.refused = true;
        rep.refusal = refusal;
        return rep;
    }
    rep.refusal = refusal; // retained for forced runs

    RationalAffine c = lambda_module_cocycle(base, RationalRing{}, t);
    if (kappa) c.kappa = *kappa;
    auto ext = build_extension_lazy(c, [](Rng& rng) { return rng.big_rational(); });
    auto cmp = lex_order_fn(base_order);
    auto res = total_invariance_sampled<RQPair>(ext, cmp, side, spec);
    rep.invariant = res.ok;
    rep.violation = res.violation;
    return rep;
}

ExtensionCircularReport extension_circular_order(const Rational& t_fiber, const CircleQuandle& base,
                                                 Side side, const SampleSpec& spec, bool force) {
    ExtensionCircularReport rep;
    rep.seed = spec.seed;
    rep.samples = spec.triples;
    std::string refusal;
    if (side == Side::right && !(t_fiber > 0))
        refusal = "hypothesis t > 0 fails (t = " + show_rational(t_fiber) + ")";
    else if (side == Side::left && !(t_fiber < 1))
        refusal = "hypothesis t < 1 fails (t = " + show_rational(t_fiber) + ")";
    if (!refusal.empty() && !force) {
        rep.refused = true;
        rep.refusal = refusal;
        return rep;
    }
    rep.refusal = refusal;

    auto ext = build_circle_extension(t_fiber, base);
    auto c = extension_circular_fn<Rational>(base.order);
    auto validity = is_valid_circular_sampled<RRPair>(c, ext.sample, spec);
    rep.valid = validity.ok;
    if (!validity.ok) rep.violation = validity.violation;
    auto inv = invariance_check_sampled<RRPair>(ext, c, side, spec);
    rep.invariant = inv.ok;
    if (!inv.ok && rep.violation.empty()) rep.violation = inv.violation;
    return rep;
}

PreservationReport order_preservation_check(const RationalAffine& c, const TotalOrder& base_order,
                                            const SampleSpec& spec) {
    PreservationReport rep;
    const int n = c.base.size();

    // (a) lex order right-invariance on the sampled lazy extension
    auto ext = build_extension_lazy(c);
    auto cmp = lex_order_fn(base_order);
    rep.lex_invariant = total_invariance_sampled<RQPair>(ext, cmp, Side::right, spec).ok;

    // (b) each alpha_{x,y}(-, s) strictly order preserving
    rep.pointwise_monotone = true;
    {
        Rng rng(spec.seed);
        for (long i = 0; i < spec.triples && rep.pointwise_monotone; ++i) {
            int x = static_cast<int>(rng.below(n)), y = static_cast<int>(rng.below(n));
            Rational s = rng.small_rational();
            Rational r1 = rng.small_rational(), r2 = rng.small_rational();
            if (r1 == r2) continue;
            if (r1 > r2) std::swap(r1, r2);
            if (!(c.alpha(x, y, r1, s) < c.alpha(x, y, r2, s))) rep.pointwise_monotone = false;
        }
    }

    // (c) the joint map alpha_{-,y}(-, s) preserves the lex order strictly
    rep.joint_monotone = true;
    {
        Rng rng(spec.seed + 1);
        for (long i = 0; i < spec.triples && rep.joint_monotone; ++i) {
            int y = static_cast<int>(rng.below(n));
            Rational s = rng.small_rational();
            RQPair p1{rng.small_rational(), static_cast<int>(rng.below(n))};
            RQPair p2{rng.small_rational(), static_cast<int>(rng.below(n))};
            int d = p1.first != p2.first ? (p1.first < p2.first ? -1 : 1)
                                         : base_order.cmp(p1.second, p2.second);
            if (d == 0) continue;
            if (d > 0) std::swap(p1, p2);
            if (!(c.alpha(p1.second, y, p1.first, s) < c.alpha(p2.second, y, p2.first, s)))
                rep.joint_monotone = false;
        }
    }

    rep.lemma_ok = !(rep.lex_invariant && !rep.pointwise_monotone);
    rep.prop_ok = !(rep.joint_monotone && !rep.lex_invariant);
    if (!rep.lemma_ok) rep.note = "lemma direction fails: invariant lex order with non-monotone alpha(-,s)";
    else if (!rep.prop_ok) rep.note = "proposition direction fails: monotone joint map without invariance";
    return rep;
}

PreservationReport order_preservation_check(const DynamicalCocycle& c, const TotalOrder& fiber_order,
                                            const TotalOrder& base_order) {
    PreservationReport rep;
    const int n = c.base.size();
    const int m = c.fiber_size;

    FiniteQuandle ext = build_extension(c);
    TotalOrder lex = lex_order(fiber_order, base_order);
    rep.lex_invariant = invariance_check(ext, lex, Side::right).ok;

    rep.pointwise_monotone = true;
    for (int x = 0; x < n && rep.pointwise_monotone; ++x)
        for (int y = 0; y < n && rep.pointwise_monotone; ++y)
            for (int s = 0; s < m && rep.pointwise_monotone; ++s)
                for (int r1 = 0; r1 < m && rep.pointwise_monotone; ++r1)
                    for (int r2 = 0; r2 < m; ++r2) {
                        if (fiber_order.cmp(r1, r2) >= 0) continue;
                        if (fiber_order.cmp(c.alpha[x][y][r1][s], c.alpha[x][y][r2][s]) >= 0) {
                            rep.pointwise_monotone = false;
                            break;
                        }
                    }

    rep.joint_monotone = true;
    for (int y = 0; y < n && rep.joint_monotone; ++y)
        for (int s = 0; s < m && rep.joint_monotone; ++s)
            for (int r1 = 0; r1 < m && rep.joint_monotone; ++r1)
                for (int x1 = 0; x1 < n && rep.joint_monotone; ++x1)
                    for (int r2 = 0; r2 < m && rep.joint_monotone; ++r2)
                        for (int x2 = 0; x2 < n; ++x2) {
                            int d = fiber_order.cmp(r1, r2);
                            if (d == 0) d = base_order.cmp(x1, x2);
                            if (d >= 0) continue;
                            if (fiber_order.cmp(c.alpha[x1][y][r1][s], c.alpha[x2][y][r2][s]) >= 0) {
                                rep.joint_monotone = false;
                                break;
                            }
                        }

    rep.lemma_ok = !(rep.lex_invariant && !rep.pointwise_monotone);
    rep.prop_ok = !(rep.joint_monotone && !rep.lex_invariant);
    if (!rep.lemma_ok) rep.note = "lemma direction fails: invariant lex order with non-monotone alpha(-,s)";
    else if (!rep.prop_ok) rep.note = "proposition direction fails: monotone joint map without invariance";
    return rep;
}

RationalAffine group_to_quandle_cocycle(const GroupCocycleData& data) {
    const auto& k = data.group;
    const int n = k.size();
    if (static_cast<int>(data.action.size()) != n) throw input_error("action table size mismatch");
    if (data.action[k.id()] != 1) throw input_error("action does not fix the identity");
    for (int a = 0; a < n; ++a) {
        if (data.action[a] == 0) throw input_error("action of element " + std::to_string(a) + " is not invertible");
        for (int b = 0; b < n; ++b)
            if (data.action[k.mul(a, b)] != data.action[a] * data.action[b])
                throw input_error("action is not a group homomorphism at (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
    }
    if (data.theta) {
        if (static_cast<int>(data.theta->size()) != n) throw input_error("theta table size mismatch");
        for (const auto& row : *data.theta)
            if (static_cast<int>(row.size()) != n) throw input_error("theta table size mismatch");
    }
    auto theta = [&](int a, int b) { return data.theta ? (*data.theta)[a][b] : Rational(0); };

    RationalAffine c;
    c.base = conj_quandle(k);
    c.ring = RationalRing{};
    c.eta.assign(n, std::vector<Rational>(n));
    c.tau.assign(n, std::vector<Rational>(n));
    c.kappa.assign(n, std::vector<Rational>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            c.eta[x][y] = data.action[y];
            c.tau[x][y] = 1 - data.action[c.base.apply(x, y)];
            int yx = k.mul(y, x);
            c.kappa[x][y] = theta(y, x) - data.action[yx] * theta(k.inv(y), y) + theta(yx, k.inv(y));
        }
    // sampled fiber values for the map-level checks
    std::vector<Rational> samples;
    Rng rng(0);
    for (int i = 0; i < 32; ++i) samples.push_back(rng.integer_rational());
    if (auto v = validate_affine(c, samples))
        throw input_error("induced cocycle fails validation: " + v->describe());
    return c;
}

namespace {

BridgeOrderReport bridge_check(const GroupCocycleData& data, const TotalOrder& base_order,
                               const SampleSpec& spec, bool proplo3) {
    RationalAffine c = group_to_quandle_cocycle(data);
    const auto& k = data.group;
    const int n = k.size();
    auto ext = build_extension_lazy(c, [](Rng& rng) { return rng.integer_rational(); });
    auto cmp = lex_order_fn(base_order);

    BridgeOrderReport rep;
    rep.samples = spec.triples;
    if (proplo3) rep.flag = "literal interpretation";
    rep.all_agree = true;
    Rng rng(spec.seed);
    for (long i = 0; i < spec.triples; ++i) {
        RQPair p1{rng.integer_rational(), static_cast<int>(rng.below(n))};
        RQPair p2{rng.integer_rational(), static_cast<int>(rng.below(n))};
        Rational cc = rng.integer_rational();
        int z = static_cast<int>(rng.below(n));
        int d = cmp(p1, p2);
        if (d == 0) continue;
        if (d > 0) std::swap(p1, p2);
        const Rational &a = p1.first, &b = p2.first;
        const int x = p1.second, y = p2.second;
        ++rep.checked;

        Rational h;
        int observed;
        if (!proplo3) {
            // z(a-b) + (y*z)c - (x*z)c against (a,x)*(c,z) vs (b,y)*(c,z)
            h = data.action[z] * (a - b) + data.action[c.base.apply(y, z)] * cc -
                data.action[c.base.apply(x, z)] * cc;
            RQPair l = ext.op(p1, {cc, z});
            RQPair r = ext.op(p2, {cc, z});
            observed = cmp(l, r);
            bool agree;
            if (h < 0) agree = observed < 0;
            else if (h > 0) agree = observed >= 0;
            else agree = (observed < 0) == (base_order.cmp(c.base.apply(x, z), c.base.apply(y, z)) < 0);
            if (!agree) {
                rep.all_agree = false;
                if (rep.first_disagreement.empty())
                    rep.first_disagreement = "sample " + std::to_string(i) + ": h=" + show_rational(h) +
                                             " observed=" + std::to_string(observed);
            }
        } else {
            // a - b + (z*y)b - (z*x)a against (c,z)*(a,x) vs (c,z)*(b,y)
            h = a - b + data.action[c.base.apply(z, y)] * b - data.action[c.base.apply(z, x)] * a;
            RQPair l = ext.op({cc, z}, p1);
            RQPair r = ext.op({cc, z}, p2);
            observed = cmp(l, r);
            bool agree = (h < 0) == (observed < 0);
            if (!agree) {
                rep.all_agree = false;
                if (rep.first_disagreement.empty())
                    rep.first_disagreement = "sample " + std::to_string(i) + ": h=" + show_rational(h) +
                                             " observed=" + std::to_string(observed);
            }
        }
    }
    return rep;
}

} // namespace

BridgeOrderReport proplo2_check(const GroupCocycleData& data, const TotalOrder& base_order,
                                const SampleSpec& spec) {
    return bridge_check(data, base_order, spec, false);
}

BridgeOrderReport proplo3_check(const GroupCocycleData& data, const TotalOrder& base_order,
                                const SampleSpec& spec) {
    return bridge_check(data, base_order, spec, true);
}

} // namespace qf
