#include "qf/quandle.hpp"

#include "qf/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qf {

std::string AxiomViolation::describe() const {
    switch (axiom) {
    case 1: return "axiom 1 (idempotency) violated at x=a" + std::to_string(x + 1);
    case 2:
        return "axiom 2 (right translation not bijective) violated in column y=a" + std::to_string(y + 1) +
               ": rows a" + std::to_string(x + 1) + " and a" + std::to_string(z + 1) + " collide";
    default:
        return "axiom 3 (self-distributivity) violated at (a" + std::to_string(x + 1) + ",a" +
               std::to_string(y + 1) + ",a" + std::to_string(z + 1) + ")";
    }
}

std::vector<AxiomViolation> quandle_axiom_violations(const Table& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw input_error("empty operation table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw input_error("operation table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw input_error("operation table entry out of range");
    }
    std::vector<AxiomViolation> out;
    for (int x = 0; x < n; ++x)
        if (table[x][x] != x) out.push_back({1, x, -1, -1});
    for (int y = 0; y < n; ++y) {
        std::vector<int> hit(n, -1);
        for (int x = 0; x < n; ++x) {
            int v = table[x][y];
            if (hit[v] >= 0) out.push_back({2, hit[v], y, x});
            else hit[v] = x;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[table[x][z]][table[y][z]])
                    out.push_back({3, x, y, z});
    return out;
}

FiniteQuandle FiniteQuandle::from_table(Table table) {
    std::vector<AxiomViolation> violations;
    auto q = try_from_table(std::move(table), &violations);
    if (!q) {
        std::string msg = "not a quandle:";
        for (const auto& v : violations) msg += " [" + v.describe() + "]";
        throw input_error(msg);
    }
    return *q;
}

std::optional<FiniteQuandle> FiniteQuandle::try_from_table(Table table,
                                                           std::vector<AxiomViolation>* violations) {
    auto found = quandle_axiom_violations(table);
    if (violations) *violations = found;
    if (!found.empty()) return std::nullopt;
    const int n = static_cast<int>(table.size());
    Table dual(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) dual[table[x][y]][y] = x;
    FiniteQuandle q;
    q.table_ = std::move(table);
    q.dual_ = std::move(dual);
    return q;
}

FiniteQuandle trivial_quandle(int n) {
    if (n < 1) throw input_error("quandle size must be positive");
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = x;
    return FiniteQuandle::from_table(std::move(t));
}

FiniteQuandle conj_quandle(const FiniteGroupTable& g) {
    const int n = g.size();
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = g.mul(g.mul(b, a), g.inv(b));
    return FiniteQuandle::from_table(std::move(t));
}

FiniteQuandle core_quandle(const FiniteGroupTable& g) {
    const int n = g.size();
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = g.mul(g.mul(b, g.inv(a)), b);
    return FiniteQuandle::from_table(std::move(t));
}

FiniteQuandle takasaki_quandle(const FiniteGroupTable& g) {
    if (!g.is_abelian()) throw input_error("Takasaki quandle requires an abelian group");
    return core_quandle(g);
}

FiniteQuandle takasaki_cyclic(int n) { return takasaki_quandle(cyclic_group(n)); }

FiniteQuandle alexander_quandle(const FiniteGroupTable& g, const std::vector<int>& phi) {
    if (!is_group_automorphism(g, phi)) throw input_error("phi is not a group automorphism");
    const int n = g.size();
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = g.mul(phi[g.mul(a, g.inv(b))], b);
    return FiniteQuandle::from_table(std::move(t));
}

int Permutation::order() const {
    const int n = static_cast<int>(map.size());
    std::vector<bool> seen(n, false);
    long long ord = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = true; j = map[j]; ++len; }
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
}

bool Permutation::is_identity() const {
    for (int i = 0; i < static_cast<int>(map.size()); ++i)
        if (map[i] != i) return false;
    return true;
}

Permutation right_translation(const FiniteQuandle& q, int s) {
    const int n = q.size();
    Permutation p;
    p.map.resize(n);
    for (int x = 0; x < n; ++x) p.map[x] = q.apply(x, s);
    return p;
}

ClassificationReport classify(const FiniteQuandle& q) {
    const int n = q.size();
    ClassificationReport r;

    for (int e = 0; e < n; ++e) {
        bool stab = true;
        for (int s = 0; s < n && stab; ++s) stab = q.apply(s, e) == s;
        if (stab) r.stabilizer_elements.push_back(e);
    }
    r.is_trivial = static_cast<int>(r.stabilizer_elements.size()) == n;

    r.is_latin = true;
    r.is_semi_latin = true;
    for (int s = 0; s < n; ++s) {
        std::vector<bool> hit(n, false);
        bool inj = true;
        for (int t = 0; t < n; ++t) {
            int v = q.apply(s, t);
            if (hit[v]) inj = false;
            hit[v] = true;
        }
        if (!inj) { r.is_latin = false; r.is_semi_latin = false; }
    }

    long long ord = 1;
    for (int s = 0; s < n; ++s) ord = std::lcm(ord, static_cast<long long>(right_translation(q, s).order()));
    r.nq_order = static_cast<int>(ord);
    r.is_involutory = r.nq_order <= 2;

    // Orbits of the group generated by all right translations. The group is
    // closed under inverses, so the undirected reachability x ~ x*y suffices.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
        return a;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a = find(x), b = find(q.apply(x, y));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> orbits(n);
    for (int x = 0; x < n; ++x) orbits[find(x)].push_back(x);
    for (auto& o : orbits)
        if (!o.empty()) r.orbit_partition.push_back(std::move(o));
    r.is_connected = r.orbit_partition.size() == 1;
    return r;
}

namespace {

struct IsoContext {
    const FiniteQuandle* a;
    const FiniteQuandle* b;
    std::vector<long long> fp_a, fp_b; // per-element invariant fingerprints
    std::vector<int> image;            // image[x] in b, -1 undefined
    std::vector<bool> used;
};

// Invariant under isomorphism: (orbit size, R-order, L-image count, fixed diag).
std::vector<long long> fingerprints(const FiniteQuandle& q) {
    const int n = q.size();
    auto rep = classify(q);
    std::vector<int> orbit_size(n, 0);
    for (const auto& orb : rep.orbit_partition)
        for (int x : orb) orbit_size[x] = static_cast<int>(orb.size());
    std::vector<long long> fp(n);
    for (int x = 0; x < n; ++x) {
        int rord = right_translation(q, x).order();
        std::vector<bool> hit(n, false);
        int limg = 0;
        for (int t = 0; t < n; ++t) {
            int v = q.apply(x, t);
            if (!hit[v]) { hit[v] = true; ++limg; }
        }
        fp[x] = (static_cast<long long>(orbit_size[x]) << 40) | (static_cast<long long>(rord) << 20) | limg;
    }
    return fp;
}

bool consistent(const IsoContext& c, int x) {
    const int n = c.a->size();
    for (int y = 0; y < n; ++y) {
        if (c.image[y] < 0) continue;
        int xy = c.a->apply(x, y);
        if (c.image[xy] >= 0 && c.image[xy] != c.b->apply(c.image[x], c.image[y])) return false;
        int yx = c.a->apply(y, x);
        if (c.image[yx] >= 0 && c.image[yx] != c.b->apply(c.image[y], c.image[x])) return false;
    }
    return true;
}

bool extend(IsoContext& c, int x) {
    const int n = c.a->size();
    if (x == n) return true;
    for (int v = 0; v < n; ++v) {
        if (c.used[v] || c.fp_a[x] != c.fp_b[v]) continue;
        c.image[x] = v;
        c.used[v] = true;
        if (consistent(c, x) && extend(c, x + 1)) return true;
        c.image[x] = -1;
        c.used[v] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& a, const FiniteQuandle& b) {
    if (a.size() != b.size()) return std::nullopt;
    IsoContext c;
    c.a = &a;
    c.b = &b;
    c.fp_a = fingerprints(a);
    c.fp_b = fingerprints(b);
    {
        auto sa = c.fp_a, sb = c.fp_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    c.image.assign(a.size(), -1);
    c.used.assign(a.size(), false);
    // Images tried in ascending order for x = 0,1,...: the first full map is
    // the least one in the image-sequence order.
    if (extend(c, 0)) return c.image;
    return std::nullopt;
}

} // namespace qf
