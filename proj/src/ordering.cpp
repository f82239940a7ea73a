#include "qf/ordering.hpp"

#include "qf/errors.hpp"

#include <algorithm>

namespace qf {

TotalOrder TotalOrder::from_ranks(std::vector<int> ranks) {
    const int n = static_cast<int>(ranks.size());
    std::vector<bool> seen(n, false);
    for (int r : ranks) {
        if (r < 0 || r >= n || seen[r]) throw input_error("ranks are not a bijection");
        seen[r] = true;
    }
    TotalOrder t;
    t.rank = std::move(ranks);
    return t;
}

TotalOrder TotalOrder::from_sequence(const std::vector<int>& ascending) {
    const int n = static_cast<int>(ascending.size());
    std::vector<int> ranks(n, -1);
    for (int i = 0; i < n; ++i) {
        int e = ascending[i];
        if (e < 0 || e >= n || ranks[e] >= 0) throw input_error("sequence is not a permutation");
        ranks[e] = i;
    }
    return from_ranks(std::move(ranks));
}

std::vector<int> TotalOrder::ascending() const {
    std::vector<int> seq(rank.size());
    for (int e = 0; e < size(); ++e) seq[rank[e]] = e;
    return seq;
}

CyclicOrder CyclicOrder::from_arrangement(std::vector<int> arr) {
    const int n = static_cast<int>(arr.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int e = arr[i];
        if (e < 0 || e >= n || pos[e] >= 0) throw input_error("arrangement is not a permutation");
        pos[e] = i;
    }
    // rotate so element 0 is first; cyclic evaluation is rotation-invariant
    std::rotate(arr.begin(), arr.begin() + pos[0], arr.end());
    for (int i = 0; i < n; ++i) pos[arr[i]] = i;
    CyclicOrder c;
    c.arrangement = std::move(arr);
    c.pos = std::move(pos);
    return c;
}

int secret_eval(const TotalOrder& o, int q1, int q2, int q3) {
    if (q1 == q2 || q2 == q3 || q1 == q3) return 0;
    const auto& r = o.rank;
    if ((r[q1] < r[q2] && r[q2] < r[q3]) || (r[q2] < r[q3] && r[q3] < r[q1]) ||
        (r[q3] < r[q1] && r[q1] < r[q2]))
        return 1;
    return -1;
}

CyclicOrder secret_circular(const TotalOrder& order) {
    return CyclicOrder::from_arrangement(order.ascending());
}

CheckResult is_valid_circular(int n, const CircularFn& c) {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int v = c(x, y, z);
                bool degenerate = x == y || y == z || x == z;
                if (degenerate && v != 0)
                    return {false, OrderViolation{"axiom (1): nonzero on degenerate triple", {x, y, z, -1}}};
                if (!degenerate && v == 0)
                    return {false, OrderViolation{"axiom (1): zero on distinct triple", {x, y, z, -1}}};
                if (v < -1 || v > 1)
                    return {false, OrderViolation{"value outside {-1,0,1}", {x, y, z, -1}}};
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
                for (int e = 0; e < n; ++e)
                    if (c(a, b, d) - c(a, b, e) + c(a, d, e) - c(b, d, e) != 0)
                        return {false, OrderViolation{"axiom (2): cocycle identity fails", {a, b, d, e}}};
    return {};
}

CheckResult invariance_check(const FiniteQuandle& q, const TotalOrder& order, Side side) {
    const int n = q.size();
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                if (order.cmp(s, t) >= 0) continue;
                bool ok = side == Side::right ? order.cmp(q.apply(s, r), q.apply(t, r)) < 0
                                              : order.cmp(q.apply(r, s), q.apply(r, t)) < 0;
                if (!ok)
                    return {false, OrderViolation{std::string(side_name(side)) + " order invariance fails",
                                                  {r, s, t, -1}}};
            }
    return {};
}

namespace {

CheckResult invariance_check_fn(const FiniteQuandle& q, const CircularFn& c, Side side) {
    const int n = q.size();
    for (int g = 0; g < n; ++g)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    int lhs = c(x, y, z);
                    int rhs = side == Side::right
                                  ? c(q.apply(x, g), q.apply(y, g), q.apply(z, g))
                                  : c(q.apply(g, x), q.apply(g, y), q.apply(g, z));
                    if (lhs != rhs)
                        return {false,
                                OrderViolation{std::string(side_name(side)) + " circular invariance fails",
                                               {g, x, y, z}}};
                }
    return {};
}

} // namespace

CheckResult invariance_check(const FiniteQuandle& q, const CyclicOrder& order, Side side) {
    return invariance_check_fn(q, [&order](int x, int y, int z) { return order.eval(x, y, z); }, side);
}

CheckResult invariance_check(const FiniteQuandle& q, const CircularFn& c, Side side) {
    return invariance_check_fn(q, c, side);
}

} // namespace qf
