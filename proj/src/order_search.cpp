#include "qf/order_search.hpp"

#include "qf/errors.hpp"

#include <string>

namespace qf {

namespace {

constexpr int kUnknown = 2; // sentinel outside {-1,0,1}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Shared DFS state. `seq` is the partial candidate: for circular searches an
// arrangement with seq[0] = 0 fixed, for total searches the elements in
// ascending order. `pos[e]` is the prefix position of e, -1 while unplaced.
struct SearchState {
    const FiniteQuandle* q;
    Side side;
    bool circular;
    bool prune;
    int n;
    std::vector<int> seq;
    std::vector<int> pos;
    int placed = 0;
    SearchCertificate cert;

    // Relative order of placed elements is final: later elements only enter
    // the cycle between seq[placed-1] and seq[0] / get larger ranks.
    int eval(int x, int y, int z) const {
        if (x == y || y == z || x == z) return 0;
        int px = pos[x], py = pos[y], pz = pos[z];
        if (px < 0 || py < 0 || pz < 0) return kUnknown;
        if (circular) {
            int dy = py - px, dz = pz - px;
            if (dy < 0) dy += placed;
            if (dz < 0) dz += placed;
            return dy < dz ? 1 : -1;
        }
        // secret circular ordering of the partial ranks
        if ((px < py && py < pz) || (py < pz && pz < px) || (pz < px && px < py)) return 1;
        return -1;
    }

    bool cmp_known(int a, int b, int& out) const {
        if (pos[a] < 0 || pos[b] < 0) return false;
        out = pos[a] < pos[b] ? -1 : (pos[a] > pos[b] ? 1 : 0);
        return true;
    }
};

// Partial invariance: any fully-determined tuple already violating the
// invariance condition rules out every completion.
bool partial_invariance_ok(const SearchState& st) {
    const auto& q = *st.q;
    const int n = st.n;
    if (st.circular) {
        for (int g = 0; g < n; ++g)
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    for (int z = y + 1; z < n; ++z) {
                        int lhs = st.eval(x, y, z);
                        if (lhs == kUnknown) continue;
                        int rhs = st.side == Side::right
                                      ? st.eval(q.apply(x, g), q.apply(y, g), q.apply(z, g))
                                      : st.eval(q.apply(g, x), q.apply(g, y), q.apply(g, z));
                        if (rhs != kUnknown && rhs != lhs) return false;
                    }
        return true;
    }
    for (int g = 0; g < n; ++g)
        for (int s = 0; s < n; ++s)
            for (int t = s + 1; t < n; ++t) {
                int st_cmp, img_cmp;
                if (!st.cmp_known(s, t, st_cmp)) continue;
                int s2 = st.side == Side::right ? q.apply(s, g) : q.apply(g, s);
                int t2 = st.side == Side::right ? q.apply(t, g) : q.apply(g, t);
                if (!st.cmp_known(s2, t2, img_cmp)) continue;
                if (img_cmp != st_cmp) return false;
            }
    return true;
}

// Chain rule: along the orbit y, y*x, y*2x, ... (right) or y, x*y, L_x^2(y),
// ... (left) every invariant circular ordering keeps c(x,y,.) constant, and
// entries landing on x or y force the constant to 0. Total orders are pruned
// through their secret circular ordering.
bool lemma_chain_ok(const SearchState& st) {
    const auto& q = *st.q;
    const int n = st.n;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            int z = st.side == Side::right ? q.apply(y, x) : q.apply(x, y);
            int constant = kUnknown;
            std::vector<bool> seen(n, false);
            for (int step = 0; step < 2 * n && !seen[z]; ++step) {
                seen[z] = true;
                int v = (z == x || z == y) ? 0 : st.eval(x, y, z);
                if (v != kUnknown) {
                    if (constant == kUnknown) constant = v;
                    else if (constant != v) return false;
                }
                z = st.side == Side::right ? q.apply(z, x) : q.apply(x, z);
            }
        }
    }
    return true;
}

template <class LeafCheck>
bool dfs(SearchState& st, const LeafCheck& leaf_ok) {
    const int n = st.n;
    if (st.placed == n) {
        ++st.cert.leaves;
        st.cert.covered += 1;
        return leaf_ok();
    }
    for (int e = (st.circular ? 1 : 0); e < n; ++e) {
        if (st.pos[e] >= 0) continue;
        st.seq[st.placed] = e;
        st.pos[e] = st.placed;
        ++st.placed;
        bool cut = st.prune && (!partial_invariance_ok(st) || !lemma_chain_ok(st));
        if (cut) {
            ++st.cert.pruned;
            st.cert.covered += factorial(n - st.placed);
        } else if (dfs(st, leaf_ok)) {
            return true;
        }
        --st.placed;
        st.pos[e] = -1;
    }
    return false;
}

SearchState make_state(const FiniteQuandle& q, Side side, bool circular, const SearchOptions& opts) {
    if (q.size() > opts.max_n)
        throw limit_error("quandle size " + std::to_string(q.size()) + " exceeds search bound " +
                          std::to_string(opts.max_n));
    SearchState st;
    st.q = &q;
    st.side = side;
    st.circular = circular;
    st.prune = opts.prune;
    st.n = q.size();
    st.seq.assign(st.n, -1);
    st.pos.assign(st.n, -1);
    st.cert.space_size = factorial(circular ? st.n - 1 : st.n);
    return st;
}

} // namespace

CircularSearchResult find_circular_order(const FiniteQuandle& q, Side side, const SearchOptions& opts) {
    SearchState st = make_state(q, side, /*circular=*/true, opts);
    st.seq[0] = 0;
    st.pos[0] = 0;
    st.placed = 1;

    CircularSearchResult result;
    auto leaf_ok = [&]() {
        CyclicOrder cand = CyclicOrder::from_arrangement(st.seq);
        if (!invariance_check(q, cand, side).ok) return false;
        result.witness = std::move(cand);
        return true;
    };
    dfs(st, leaf_ok);
    result.cert = st.cert;
    return result;
}

TotalSearchResult find_total_order(const FiniteQuandle& q, Side side, const SearchOptions& opts) {
    SearchState st = make_state(q, side, /*circular=*/false, opts);

    TotalSearchResult result;
    auto leaf_ok = [&]() {
        TotalOrder cand = TotalOrder::from_sequence(st.seq);
        if (!invariance_check(q, cand, side).ok) return false;
        result.witness = std::move(cand);
        return true;
    };
    dfs(st, leaf_ok);
    result.cert = st.cert;
    return result;
}

} // namespace qf
