#include "doctest.h"

#include "qf/errors.hpp"
#include "qf/extension.hpp"

using namespace qf;

namespace {

DynamicalCocycle const_in_second_arg(const FiniteQuandle& base, int fiber) {
    DynamicalCocycle c;
    c.base = base;
    c.fiber_size = fiber;
    const int n = base.size();
    c.alpha.assign(n, std::vector<std::vector<std::vector<int>>>(
                          n, std::vector<std::vector<int>>(fiber, std::vector<int>(fiber))));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int r = 0; r < fiber; ++r)
                for (int s = 0; s < fiber; ++s) c.alpha[x][y][r][s] = r;
    return c;
}

} // namespace

TEST_CASE("validate_dynamical") {
    SUBCASE("alpha(a,b) = a over trivial(2) x {0,1} is valid") {
        auto c = const_in_second_arg(trivial_quandle(2), 2);
        CHECK(!validate_dynamical(c).has_value());
    }
    SUBCASE("lambda module over Z5 with t=2 induces a valid cocycle on any base") {
        for (const auto& base : {trivial_quandle(2), takasaki_cyclic(3)}) {
            auto aff = lambda_module_cocycle(base, ModRing{5}, 2);
            CHECK(!validate_affine(aff, aff.ring.all()).has_value());
            CHECK(!validate_dynamical(to_dynamical(aff)).has_value());
        }
    }
    SUBCASE("perturbing tau on one pair is caught") {
        auto aff = lambda_module_cocycle(takasaki_cyclic(3), ModRing{5}, 2);
        aff.tau[0][1] = 3; // was (1-2) mod 5 = 4
        bool affine_catches = validate_affine(aff, aff.ring.all()).has_value();
        bool dynamical_catches = validate_dynamical(to_dynamical(aff)).has_value();
        CHECK(affine_catches);
        CHECK(dynamical_catches);
    }
}

TEST_CASE("validate_affine") {
    SUBCASE("rational lambda module with t=2 over takasaki(Z3)") {
        auto aff = lambda_module_cocycle(takasaki_cyclic(3), RationalRing{}, Rational(2));
        Rng rng(0);
        std::vector<Rational> samples;
        for (int i = 0; i < 50; ++i) samples.push_back(rng.small_rational());
        CHECK(!validate_affine(aff, samples).has_value());
    }
    SUBCASE("trivial module eta=id tau=0 kappa=0") {
        auto base = takasaki_cyclic(3);
        AffineCocycle<ModRing> aff{base, ModRing{7}, {}, {}, {}};
        const int n = base.size();
        aff.eta.assign(n, std::vector<long>(n, 1));
        aff.tau.assign(n, std::vector<long>(n, 0));
        aff.kappa.assign(n, std::vector<long>(n, 0));
        CHECK(!validate_affine(aff, aff.ring.all()).has_value());
    }
    SUBCASE("t=0 over Z5: eta not an automorphism is a structural error") {
        auto aff = lambda_module_cocycle(trivial_quandle(2), ModRing{5}, 0);
        CHECK_THROWS_AS(validate_affine(aff, aff.ring.all()), input_error);
    }
    SUBCASE("validate_affine and validate_dynamical agree on every single-entry mutation") {
        // |A| * |Q| = 5 * 3 = 15 <= 20
        auto good = lambda_module_cocycle(takasaki_cyclic(3), ModRing{5}, 2);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                for (long v = 0; v < 5; ++v) {
                    auto mut = good;
                    mut.tau[x][y] = v;
                    bool affine_ok = !validate_affine(mut, mut.ring.all()).has_value();
                    bool dyn_ok = !validate_dynamical(to_dynamical(mut)).has_value();
                    CHECK(affine_ok == dyn_ok);
                }
    }
}

TEST_CASE("build_extension") {
    SUBCASE("rational affine t=2 over trivial(2): (1,0)*(3,1) = (-1,0)") {
        auto aff = lambda_module_cocycle(trivial_quandle(2), RationalRing{}, Rational(2));
        auto ext = build_extension_lazy(aff);
        RQPair out = ext.op({Rational(1), 0}, {Rational(3), 1});
        CHECK(out.first == Rational(-1));
        CHECK(out.second == 0);
    }
    SUBCASE("constant-in-second-argument alpha over trivial(2) gives the trivial 4-quandle") {
        auto ext = build_extension(const_in_second_arg(trivial_quandle(2), 2));
        CHECK(ext.size() == 4);
        CHECK(classify(ext).is_trivial);
    }
    SUBCASE("Z5 x takasaki(Z3) with t=2 is a valid 15-element quandle") {
        auto aff = lambda_module_cocycle(takasaki_cyclic(3), ModRing{5}, 2);
        auto ext = build_extension(to_dynamical(aff));
        CHECK(ext.size() == 15);
        CHECK(quandle_axiom_violations(ext.table()).empty());
    }
    SUBCASE("projection to the base is a quandle homomorphism") {
        auto aff = lambda_module_cocycle(takasaki_cyclic(3), ModRing{5}, 2);
        auto dyn = to_dynamical(aff);
        auto ext = build_extension(dyn);
        const int n = 3;
        auto proj = [n](int e) { return e % n; };
        for (int a = 0; a < ext.size(); ++a)
            for (int b = 0; b < ext.size(); ++b)
                CHECK(proj(ext.apply(a, b)) == dyn.base.apply(proj(a), proj(b)));
    }
    SUBCASE("an invalid cocycle is refused") {
        auto aff = lambda_module_cocycle(takasaki_cyclic(3), ModRing{5}, 2);
        aff.tau[1][2] = 1;
        CHECK_THROWS_AS(build_extension(to_dynamical(aff)), input_error);
    }
    SUBCASE("lazy extension satisfies sampled quandle axioms and dual rule") {
        auto aff = lambda_module_cocycle(takasaki_cyclic(3), RationalRing{}, Rational(2));
        auto ext = build_extension_lazy(aff);
        CHECK(lazy_axioms_check(ext, SampleSpec{0, 3000, 0}).ok);
    }
}

TEST_CASE("lexicographic order") {
    auto base_order = TotalOrder::from_ranks({0, 1});
    auto cmp = lex_order_fn(base_order);
    SUBCASE("fiber decides first") {
        CHECK(cmp({Rational(1), 0}, {Rational(3), 1}) < 0);
    }
    SUBCASE("base breaks fiber ties") {
        CHECK(cmp({Rational(2), 0}, {Rational(2), 1}) < 0);
    }
    SUBCASE("antisymmetry and transitivity on sampled pairs/triples") {
        Rng rng(3);
        for (int i = 0; i < 1000; ++i) {
            RQPair a{rng.small_rational(), static_cast<int>(rng.below(2))};
            RQPair b{rng.small_rational(), static_cast<int>(rng.below(2))};
            RQPair c{rng.small_rational(), static_cast<int>(rng.below(2))};
            CHECK(cmp(a, b) == -cmp(b, a));
            if (cmp(a, b) < 0 && cmp(b, c) < 0) CHECK(cmp(a, c) < 0);
        }
    }
    SUBCASE("finite lex order") {
        auto lex = lex_order(TotalOrder::from_ranks({0, 1, 2}), TotalOrder::from_ranks({0, 1}));
        CHECK(lex.size() == 6);
        CHECK(lex.cmp(0 * 2 + 0, 1 * 2 + 1) < 0);
    }
}

TEST_CASE("extension total orders (lambda module propositions)") {
    SampleSpec spec{0, 20000, 0};
    SUBCASE("t=2 over trivial(2) with 0<1: right-invariant lex order") {
        auto rep = extension_total_order(trivial_quandle(2), Rational(2), std::nullopt,
                                         TotalOrder::from_ranks({0, 1}), Side::right, spec);
        CHECK(!rep.refused);
        CHECK(rep.invariant);
    }
    SUBCASE("t=-1 left variant passes (t < 1); the base-order hypothesis flag is carried") {
        auto rep = extension_total_order(trivial_quandle(2), Rational(-1), std::nullopt,
                                         TotalOrder::from_ranks({0, 1}), Side::left, spec);
        CHECK(!rep.refused);
        CHECK(rep.invariant);
        CHECK(!rep.base_order_invariant); // trivial bases carry no left-invariant order
    }
    SUBCASE("right variant with a non-right-invariant base order is refused") {
        auto rep = extension_total_order(takasaki_cyclic(3), Rational(2), std::nullopt,
                                         TotalOrder::from_ranks({0, 1, 2}), Side::right, spec);
        CHECK(rep.refused);
        CHECK(rep.refusal.find("right-invariant") != std::string::npos);
    }
    SUBCASE("t=-1 right variant is refused naming the hypothesis") {
        auto rep = extension_total_order(trivial_quandle(2), Rational(-1), std::nullopt,
                                         TotalOrder::from_ranks({0, 1}), Side::right, spec);
        CHECK(rep.refused);
        CHECK(rep.refusal.find("t > 0") != std::string::npos);
    }
    SUBCASE("forcing past the gate exhibits a sampled violation") {
        auto rep = extension_total_order(trivial_quandle(2), Rational(-1), std::nullopt,
                                         TotalOrder::from_ranks({0, 1}), Side::right, spec, true);
        CHECK(!rep.refused);
        CHECK(!rep.invariant);
        CHECK(!rep.violation.empty());
    }
    SUBCASE("negative t values break right invariance on some sampled triple") {
        for (auto t : {Rational(-2), Rational(-1), Rational(-1, 2)}) {
            auto rep = extension_total_order(trivial_quandle(3), t, std::nullopt,
                                             TotalOrder::from_ranks({0, 1, 2}), Side::right, spec, true);
            CHECK(!rep.invariant);
        }
    }
    SUBCASE("positive t values keep right invariance") {
        for (auto t : {Rational(1, 2), Rational(1), Rational(3)}) {
            auto rep = extension_total_order(trivial_quandle(3), t, std::nullopt,
                                             TotalOrder::from_ranks({0, 1, 2}), Side::right, spec);
            CHECK(!rep.refused);
            CHECK(rep.invariant);
        }
    }
    SUBCASE("kappa constant in the first argument passes the gate, a varying one is refused") {
        std::vector<std::vector<Rational>> good{{Rational(1), Rational(2)}, {Rational(1), Rational(2)}};
        auto rep = extension_total_order(trivial_quandle(2), Rational(2), good,
                                         TotalOrder::from_ranks({0, 1}), Side::right, spec);
        CHECK(!rep.refused);
        CHECK(rep.invariant);
        std::vector<std::vector<Rational>> bad{{Rational(1), Rational(2)}, {Rational(3), Rational(2)}};
        auto rep2 = extension_total_order(trivial_quandle(2), Rational(2), bad,
                                          TotalOrder::from_ranks({0, 1}), Side::right, spec);
        CHECK(rep2.refused);
        CHECK(rep2.refusal.find("kappa") != std::string::npos);
    }
}

TEST_CASE("extension circular orders") {
    SUBCASE("three-case construction on a finite base") {
        auto d_base = CyclicOrder::from_arrangement({0, 1, 2});
        CircularOrderFn<int> d = [d_base](const int& x, const int& y, const int& z) {
            return d_base.eval(x, y, z);
        };
        auto c = extension_circular_fn<int>(d);
        // all bases equal: secret ordering of the fiber
        CHECK(c({Rational(0), 1}, {Rational(1), 1}, {Rational(2), 1}) == 1);
        CHECK(c({Rational(0), 1}, {Rational(2), 1}, {Rational(1), 1}) == -1);
        // two equal bases, fibers a < b
        CHECK(c({Rational(0), 0}, {Rational(1), 0}, {Rational(5), 2}) == 1);
        CHECK(c({Rational(1), 0}, {Rational(0), 0}, {Rational(5), 2}) == -1);
        // rotation cases: equal pair in positions (2,3) and (1,3)
        CHECK(c({Rational(5), 2}, {Rational(0), 0}, {Rational(1), 0}) == 1);
        CHECK(c({Rational(1), 0}, {Rational(5), 2}, {Rational(0), 0}) == 1);
        // distinct bases follow d
        CHECK(c({Rational(9), 0}, {Rational(-9), 1}, {Rational(0), 2}) == 1);
        // degenerate triples vanish
        CHECK(c({Rational(1), 0}, {Rational(1), 0}, {Rational(5), 2}) == 0);
    }
    SUBCASE("restriction to a single fiber copy is the secret order of the fiber") {
        auto d_base = CyclicOrder::from_arrangement({0, 1, 2});
        CircularOrderFn<int> d = [d_base](const int& x, const int& y, const int& z) {
            return d_base.eval(x, y, z);
        };
        auto c = extension_circular_fn<int>(d);
        Rng rng(5);
        for (int i = 0; i < 500; ++i) {
            Rational a = rng.small_rational(), b = rng.small_rational(), r = rng.small_rational();
            int expect;
            if (a == b || b == r || a == r) expect = 0;
            else if ((a < b && b < r) || (b < r && r < a) || (r < a && a < b)) expect = 1;
            else expect = -1;
            CHECK(c({a, 1}, {b, 1}, {r, 1}) == expect);
        }
    }
    SUBCASE("the construction over a finite base yields a valid circular ordering on sampled pairs") {
        auto d_base = CyclicOrder::from_arrangement({0, 1, 2, 3});
        CircularOrderFn<int> d = [d_base](const int& x, const int& y, const int& z) {
            return d_base.eval(x, y, z);
        };
        auto c = extension_circular_fn<int>(d);
        std::function<RQPair(Rng&)> sample = [](Rng& rng) {
            return RQPair{Rational(rng.range(-3, 3)), static_cast<int>(rng.below(4))};
        };
        CHECK(is_valid_circular_sampled<RQPair>(c, sample, SampleSpec{0, 5000, 2000}).ok);
    }
    SUBCASE("over the circle quandle base: valid right circular order on sampled data") {
        auto base = circle_quandle(Rational(1, 2));
        auto rep = extension_circular_order(Rational(2), base, Side::right, SampleSpec{0, 10000, 2000});
        CHECK(!rep.refused);
        CHECK(rep.valid);
        CHECK(rep.invariant);
    }
    SUBCASE("left variant with t=-1 (t < 1) passes") {
        auto base = circle_quandle(Rational(1, 3));
        auto rep = extension_circular_order(Rational(-1), base, Side::left, SampleSpec{0, 5000, 1000});
        CHECK(!rep.refused);
        CHECK(rep.valid);
        CHECK(rep.invariant);
    }
    SUBCASE("right variant with t=-1 is refused") {
        auto base = circle_quandle(Rational(1, 2));
        auto rep = extension_circular_order(Rational(-1), base, Side::right, SampleSpec{0, 1000, 100});
        CHECK(rep.refused);
    }
}

TEST_CASE("order preservation check") {
    SampleSpec spec{0, 5000, 0};
    SUBCASE("t=2: alpha(-,s) strictly increasing, both directions consistent") {
        auto aff = lambda_module_cocycle(trivial_quandle(2), RationalRing{}, Rational(2));
        auto rep = order_preservation_check(aff, TotalOrder::from_ranks({0, 1}), spec);
        CHECK(rep.pointwise_monotone);
        CHECK(rep.lex_invariant);
        CHECK(rep.lemma_ok);
        CHECK(rep.prop_ok);
    }
    SUBCASE("t=-1: alpha(-,s) decreasing and right lex invariance fails (lemma contrapositive)") {
        auto aff = lambda_module_cocycle(trivial_quandle(2), RationalRing{}, Rational(-1));
        auto rep = order_preservation_check(aff, TotalOrder::from_ranks({0, 1}), spec);
        CHECK(!rep.pointwise_monotone);
        CHECK(!rep.lex_invariant);
        CHECK(rep.lemma_ok);
    }
    SUBCASE("a valid table cocycle with non-monotone alpha(-,s) is flagged on the proposition side") {
        // alpha_{x,y}(r,s) = r + [x != y] over Z3, base trivial(2): a valid
        // cocycle whose fiber maps are non-monotone cyclic shifts
        DynamicalCocycle c;
        c.base = trivial_quandle(2);
        c.fiber_size = 3;
        c.alpha.assign(2, std::vector<std::vector<std::vector<int>>>(
                              2, std::vector<std::vector<int>>(3, std::vector<int>(3))));
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int r = 0; r < 3; ++r)
                    for (int s = 0; s < 3; ++s) c.alpha[x][y][r][s] = x == y ? r : (r + 1) % 3;
        REQUIRE(!validate_dynamical(c).has_value());
        auto rep = order_preservation_check(c, TotalOrder::from_ranks({0, 1, 2}),
                                            TotalOrder::from_ranks({0, 1}));
        CHECK(!rep.pointwise_monotone);
        CHECK(!rep.joint_monotone);
        CHECK(!rep.lex_invariant);
        CHECK(rep.lemma_ok);
        CHECK(rep.prop_ok);
    }
}

TEST_CASE("group cocycle bridge") {
    SUBCASE("K=Z2 with the trivial action: eta=id, tau=0, kappa=0") {
        GroupCocycleData data{cyclic_group(2), {Rational(1), Rational(1)}, std::nullopt};
        auto aff = group_to_quandle_cocycle(data);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                CHECK(aff.eta[x][y] == 1);
                CHECK(aff.tau[x][y] == 0);
                CHECK(aff.kappa[x][y] == 0);
            }
    }
    SUBCASE("K=Z4 acting on Z by sign") {
        GroupCocycleData data{cyclic_group(4), {Rational(1), Rational(-1), Rational(1), Rational(-1)},
                              std::nullopt};
        auto aff = group_to_quandle_cocycle(data);
        CHECK(classify(aff.base).is_trivial); // Conj of an abelian group
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                CHECK(aff.eta[x][y] == (y % 2 == 0 ? 1 : -1));
                CHECK(aff.tau[x][y] == 1 - (x % 2 == 0 ? Rational(1) : Rational(-1)));
            }
        Rng rng(0);
        std::vector<Rational> samples;
        for (int i = 0; i < 100; ++i) samples.push_back(rng.integer_rational());
        CHECK(!validate_affine(aff, samples).has_value());
    }
    SUBCASE("an invalid action is rejected") {
        GroupCocycleData bad{cyclic_group(4), {Rational(1), Rational(2), Rational(1), Rational(2)},
                             std::nullopt};
        CHECK_THROWS_AS(group_to_quandle_cocycle(bad), input_error);
    }
    SUBCASE("nonzero theta feeds kappa") {
        std::vector<std::vector<Rational>> theta(2, std::vector<Rational>(2, Rational(0)));
        theta[1][1] = Rational(3);
        GroupCocycleData data{cyclic_group(2), {Rational(1), Rational(1)}, theta};
        auto aff = group_to_quandle_cocycle(data);
        // kappa_{x,y} = theta(y,x) - yx.theta(y^-1,y) + theta(yx,y^-1)
        CHECK(aff.kappa[1][1] == theta[1][1] - theta[1][1] + theta[0][1]);
    }
    SUBCASE("proplo2 hypothesis evaluator agrees with observed invariance") {
        GroupCocycleData data{cyclic_group(4), {Rational(1), Rational(-1), Rational(1), Rational(-1)},
                              std::nullopt};
        auto rep = proplo2_check(data, TotalOrder::from_ranks({0, 1, 2, 3}), SampleSpec{0, 10000, 0});
        CHECK(rep.all_agree);
        CHECK(rep.checked > 1000);
    }
    SUBCASE("proplo3 runs literally and is flagged") {
        GroupCocycleData data{cyclic_group(2), {Rational(1), Rational(1)}, std::nullopt};
        auto rep = proplo3_check(data, TotalOrder::from_ranks({0, 1}), SampleSpec{0, 2000, 0});
        CHECK(rep.flag == "literal interpretation");
        CHECK(rep.checked > 0);
    }
}
