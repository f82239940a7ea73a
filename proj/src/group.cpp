#include "qf/group.hpp"

#include "qf/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qf {

FiniteGroupTable FiniteGroupTable::from_table(std::vector<std::vector<int>> mul) {
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw input_error("empty group table");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n) throw input_error("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw input_error("group table entry out of range");
    }
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
        if (ok) { id = e; break; }
    }
    if (id < 0) throw input_error("group table has no identity");
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mul[a][b] == id && mul[b][a] == id) { inv[a] = b; break; }
        }
        if (inv[a] < 0) throw input_error("group element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw input_error("group table is not associative");
    FiniteGroupTable g;
    g.mul_ = std::move(mul);
    g.inv_ = std::move(inv);
    g.id_ = id;
    return g;
}

bool FiniteGroupTable::is_abelian() const {
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul_[a][b] != mul_[b][a]) return false;
    return true;
}

FiniteGroupTable cyclic_group(int n) {
    if (n < 1) throw input_error("cyclic group order must be positive");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return FiniteGroupTable::from_table(std::move(mul));
}

FiniteGroupTable symmetric_group(int n) {
    if (n < 1 || n > 6) throw input_error("symmetric group supported for 1 <= n <= 6");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            // (a·b)(i) = a(b(i))
            std::vector<int> q(n);
            for (int i = 0; i < n; ++i) q[i] = perms[a][perms[b][i]];
            mul[a][b] = index_of(q);
        }
    }
    return FiniteGroupTable::from_table(std::move(mul));
}

bool is_group_automorphism(const FiniteGroupTable& g, const std::vector<int>& phi) {
    const int n = g.size();
    if (static_cast<int>(phi.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : phi) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) return false;
    return true;
}

} // namespace qf
