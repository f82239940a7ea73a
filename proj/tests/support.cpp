#include "support.hpp"

#include <numeric>

namespace qf::testsupport {

namespace {

// permutations of {0..n-1} fixing `fixed`
std::vector<std::vector<int>> perms_fixing(int n, int fixed) {
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (i != fixed) rest.push_back(i);
    std::sort(rest.begin(), rest.end());
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> col(n);
        col[fixed] = fixed;
        int j = 0;
        for (int i = 0; i < n; ++i)
            if (i != fixed) col[i] = rest[j++];
        out.push_back(col);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::vector<std::vector<int>> involutions_fixing(int n, int fixed) {
    std::vector<std::vector<int>> all = perms_fixing(n, fixed);
    std::vector<std::vector<int>> out;
    for (auto& p : all) {
        bool inv = true;
        for (int i = 0; i < n && inv; ++i) inv = p[p[i]] == i;
        if (inv) out.push_back(std::move(p));
    }
    return out;
}

// Check every self-distributivity triple whose entries are fully determined
// by the first `cols` columns.
bool partial_sd_ok(const qf::Table& t, int n, int cols) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < cols; ++b)
            for (int c = 0; c < cols; ++c) {
                int bc = t[b][c];
                if (bc >= cols) continue;
                if (t[t[a][b]][c] != t[t[a][c]][bc]) return false;
            }
    return true;
}

void fill_columns(int n, int col, const std::vector<std::vector<std::vector<int>>>& options, qf::Table& t,
                  std::vector<qf::Table>& out) {
    if (col == n) {
        if (qf::quandle_axiom_violations(t).empty()) out.push_back(t);
        return;
    }
    for (const auto& perm : options[col]) {
        for (int x = 0; x < n; ++x) t[x][col] = perm[x];
        if (partial_sd_ok(t, n, col + 1)) fill_columns(n, col + 1, options, t, out);
    }
}

std::vector<qf::Table> enumerate_tables(int n, bool involutory) {
    std::vector<std::vector<std::vector<int>>> options(n);
    for (int y = 0; y < n; ++y) options[y] = involutory ? involutions_fixing(n, y) : perms_fixing(n, y);
    qf::Table t(n, std::vector<int>(n, 0));
    std::vector<qf::Table> out;
    fill_columns(n, 0, options, t, out);
    return out;
}

} // namespace

std::vector<qf::Table> all_quandle_tables(int n) { return enumerate_tables(n, false); }

std::vector<qf::Table> all_involutory_tables(int n) { return enumerate_tables(n, true); }

} // namespace qf::testsupport
