#include "qf/envgroup.hpp"

#include "qf/errors.hpp"

#include <algorithm>

namespace qf {

std::vector<int> free_reduce(std::vector<int> word) {
    std::vector<int> out;
    for (int s : word) {
        if (!out.empty() && out.back() == -s) out.pop_back();
        else out.push_back(s);
    }
    return out;
}

namespace {

void push_relator(GroupPresentation& g, std::vector<int> rel) {
    rel = free_reduce(std::move(rel));
    if (!rel.empty()) g.relators.push_back(std::move(rel));
}

std::vector<int> inverse_word(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& s : out) s = -s;
    return out;
}

} // namespace

GroupPresentation env_presentation(const FiniteQuandle& q, int n) {
    if (n != 0 && n < 2) throw input_error("enveloping power must be 0 or >= 2");
    const int m = q.size();
    GroupPresentation g;
    g.generators = m;
    for (int p = 0; p < m; ++p) {
        for (int r = 0; r < m; ++r) {
            int pr = q.apply(p, r);
            // q^-1 p q ((p*q)~)^-1
            push_relator(g, {-(r + 1), p + 1, r + 1, -(pr + 1)});
        }
    }
    if (n >= 2) {
        for (int p = 0; p < m; ++p) {
            std::vector<int> rel(n, p + 1);
            push_relator(g, std::move(rel));
        }
    }
    return g;
}

GroupPresentation env_presentation(const QuandlePresentation& p, int n) {
    if (n != 0 && n < 2) throw input_error("enveloping power must be 0 or >= 2");
    GroupPresentation g;
    g.generators = p.generators;
    for (const auto& [lhs, rhs] : p.relations) {
        std::vector<int> rel = conjugation_word(lhs);
        std::vector<int> inv = inverse_word(conjugation_word(rhs));
        rel.insert(rel.end(), inv.begin(), inv.end());
        push_relator(g, std::move(rel));
    }
    if (n >= 2) {
        for (int i = 0; i < p.generators; ++i) {
            std::vector<int> rel(n, i + 1);
            push_relator(g, std::move(rel));
        }
    }
    return g;
}

BigInt exponent(const std::vector<int>& word, const ExponentMap& map) {
    BigInt sum = 0;
    for (int s : word) sum += s > 0 ? 1 : -1;
    if (map.modulus >= 2) {
        sum %= map.modulus;
        if (sum < 0) sum += map.modulus;
    }
    return sum;
}

ExponentCertificate exponent_certificate(const GroupPresentation& g, int n) {
    ExponentCertificate cert;
    cert.modulus = n;
    ExponentMap map{n};
    for (const auto& rel : g.relators) {
        if (exponent(rel, map) != 0) {
            cert.line = "exponent map not well defined: a relator has nonzero exponent";
            return cert;
        }
    }
    cert.ok = true;
    if (n >= 2)
        cert.line = "exponent: all relators 0 mod " + std::to_string(n) + "; exponent map onto Z_" +
                    std::to_string(n) + "; kernel E0_" + std::to_string(n) + " has index " + std::to_string(n);
    else
        cert.line = "exponent: all relators 0; exponent map onto Z";
    return cert;
}

std::vector<std::vector<BigInt>> smith_normal_form(std::vector<std::vector<BigInt>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero |value| in the submatrix, ties by position
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (pr < 0 || abs(m[i][j]) < abs(m[pr][pc])) { pr = i; pc = j; }
            }
        if (pr < 0) break;
        std::swap(m[t], m[pr]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                BigInt f = m[i][t] / m[t][t];
                for (int j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
                if (m[i][t] != 0) { std::swap(m[t], m[i]); clean = false; }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                BigInt f = m[t][j] / m[t][t];
                for (int i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
                if (m[t][j] != 0) {
                    for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every remaining entry
            for (int i = t + 1; i < rows && clean; ++i)
                for (int j = t + 1; j < cols && clean; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                        clean = false;
                    }
        }
        if (m[t][t] < 0)
            for (int j = t; j < cols; ++j) m[t][j] = -m[t][j];
        ++t;
    }
    return m;
}

AbelianInvariants abelianization(const GroupPresentation& g) {
    const int cols = g.generators;
    std::vector<std::vector<BigInt>> m;
    for (const auto& rel : g.relators) {
        std::vector<BigInt> row(cols, 0);
        for (int s : rel) row[std::abs(s) - 1] += s > 0 ? 1 : -1;
        m.push_back(std::move(row));
    }
    if (m.empty()) m.emplace_back(cols, 0);
    auto snf = smith_normal_form(std::move(m));
    int nonzero = 0;
    AbelianInvariants inv;
    const int bound = std::min(static_cast<int>(snf.size()), cols);
    for (int t = 0; t < bound; ++t) {
        if (snf[t][t] == 0) continue;
        ++nonzero;
        if (snf[t][t] != 1) inv.factors.push_back(snf[t][t]);
    }
    for (int i = 0; i < cols - nonzero; ++i) inv.factors.push_back(0);
    return inv;
}

std::string AbelianInvariants::display() const {
    int free_rank = 0;
    std::vector<BigInt> torsion;
    for (const auto& d : factors) {
        if (d == 0) ++free_rank;
        else torsion.push_back(d);
    }
    std::string out;
    if (free_rank == 1) out = "Z";
    else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion) {
        if (!out.empty()) out += " x ";
        out += "Z/" + d.str();
    }
    if (out.empty()) out = "0";
    return out;
}

} // namespace qf
