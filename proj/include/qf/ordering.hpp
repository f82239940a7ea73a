#pragma once

#include "qf/quandle.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qf {

enum class Side { right, left };
inline const char* side_name(Side s) { return s == Side::right ? "right" : "left"; }

struct TotalOrder {
    std::vector<int> rank; // element -> rank, a bijection onto 0..N-1

    static TotalOrder from_ranks(std::vector<int> ranks);
    // elements listed in increasing order
    static TotalOrder from_sequence(const std::vector<int>& ascending);

    int size() const { return static_cast<int>(rank.size()); }
    int cmp(int a, int b) const { return rank[a] < rank[b] ? -1 : (rank[a] > rank[b] ? 1 : 0); }
    std::vector<int> ascending() const;
};

// Cyclic arrangement of all N elements, canonicalized to start at element 0.
// c(x,y,z) = +1 iff reading cyclically from x meets y strictly before z.
struct CyclicOrder {
    std::vector<int> arrangement;
    std::vector<int> pos;

    static CyclicOrder from_arrangement(std::vector<int> arr);

    int size() const { return static_cast<int>(arrangement.size()); }
    int eval(int x, int y, int z) const {
        if (x == y || y == z || x == z) return 0;
        int py = pos[y] - pos[x], pz = pos[z] - pos[x];
        const int n = size();
        if (py < 0) py += n;
        if (pz < 0) pz += n;
        return py < pz ? 1 : -1;
    }
};

// The circular ordering induced by a total ordering (three-case formula).
CyclicOrder secret_circular(const TotalOrder& order);
int secret_eval(const TotalOrder& order, int x, int y, int z);

using CircularFn = std::function<int(int, int, int)>;

struct OrderViolation {
    std::string what;
    std::array<int, 4> tuple{-1, -1, -1, -1};
};

struct CheckResult {
    bool ok = true;
    std::optional<OrderViolation> violation;
};

// Exhaustive check of circular-ordering axioms (1) and (2) on {0..n-1}.
CheckResult is_valid_circular(int n, const CircularFn& c);
inline CheckResult is_valid_circular(const CyclicOrder& c) {
    return is_valid_circular(c.size(), [&c](int x, int y, int z) { return c.eval(x, y, z); });
}

// Exhaustive invariance checks over all translators and tuples.
CheckResult invariance_check(const FiniteQuandle& q, const TotalOrder& order, Side side);
CheckResult invariance_check(const FiniteQuandle& q, const CyclicOrder& order, Side side);
CheckResult invariance_check(const FiniteQuandle& q, const CircularFn& c, Side side);

} // namespace qf
