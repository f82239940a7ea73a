#include "qf/presentation.hpp"

#include "qf/errors.hpp"

#include <algorithm>
#include <string>

namespace qf {

QuandlePresentation torus_presentation(int m, int n) {
    if (m < 2 || n < 2) throw input_error("torus presentation requires m, n >= 2");
    auto reduce = [m](int idx) { return (idx - 1) % m; }; // 1-based index -> 0-based generator
    QuandlePresentation p;
    p.generators = m;
    for (int i = 1; i <= m; ++i) {
        QuandleWord rhs = QuandleWord::generator(reduce(n + i));
        for (int j = n; j >= 1; --j)
            rhs = QuandleWord::combine(rhs, QuandleWord::generator(reduce(j)), false);
        p.relations.emplace_back(QuandleWord::generator(i - 1), std::move(rhs));
    }
    return p;
}

QuandlePresentation pd_to_presentation(const PDCode& pd) {
    if (pd.crossings.empty()) {
        // 0-crossing unknot diagram
        QuandlePresentation p;
        p.generators = 1;
        return p;
    }
    int k = 0;
    for (const auto& x : pd.crossings) {
        for (int lab : {x.a, x.b, x.c, x.d})
            if (lab < 1) throw input_error("pd: arc labels are 1-based positive integers");
        if (x.b != x.d)
            throw input_error("pd: over-strand labels differ at a crossing (" + std::to_string(x.b) + " vs " +
                              std::to_string(x.d) + ")");
        k = std::max({k, x.a, x.b, x.c});
    }
    std::vector<int> in_count(k + 1, 0), out_count(k + 1, 0);
    for (const auto& x : pd.crossings) {
        ++in_count[x.a];
        ++out_count[x.c];
    }
    for (int lab = 1; lab <= k; ++lab) {
        if (in_count[lab] != 1 || out_count[lab] != 1)
            throw input_error("pd: arc " + std::to_string(lab) + " must enter exactly one crossing as " +
                              "understrand and leave exactly one (got " + std::to_string(in_count[lab]) +
                              " in, " + std::to_string(out_count[lab]) + " out)");
    }
    QuandlePresentation p;
    p.generators = k;
    for (const auto& x : pd.crossings) {
        QuandleWord rhs = QuandleWord::combine(QuandleWord::generator(x.a - 1),
                                               QuandleWord::generator(x.b - 1), !x.positive);
        p.relations.emplace_back(QuandleWord::generator(x.c - 1), std::move(rhs));
    }
    return p;
}

namespace {

int eval_node(const FiniteQuandle& q, const QuandleWord::Node& n, const std::vector<int>& assignment) {
    if (n.gen >= 0) return assignment[n.gen];
    int l = eval_node(q, *n.left, assignment);
    int r = eval_node(q, *n.right, assignment);
    return n.dual ? q.dual_apply(l, r) : q.apply(l, r);
}

} // namespace

int evaluate_word(const FiniteQuandle& q, const QuandleWord& w, const std::vector<int>& assignment) {
    return eval_node(q, w.node(), assignment);
}

} // namespace qf
