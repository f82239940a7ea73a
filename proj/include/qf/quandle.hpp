#pragma once

#include "qf/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qf {

using Table = std::vector<std::vector<int>>;

// Convention: table[x][y] = x*y, so columns are the right translations R_y.
struct AxiomViolation {
    int axiom; // 1 idempotency, 2 right-translation bijectivity, 3 self-distributivity
    int x = -1, y = -1, z = -1;
    std::string describe() const;
};

// Preconditions: table square with entries in range (input_error otherwise).
// Returns the axiom violations, empty iff the table is a quandle.
std::vector<AxiomViolation> quandle_axiom_violations(const Table& table);

class FiniteQuandle {
public:
    // Throws input_error listing the violations when the table is not a quandle.
    static FiniteQuandle from_table(Table table);
    static std::optional<FiniteQuandle> try_from_table(Table table,
                                                       std::vector<AxiomViolation>* violations = nullptr);

    int size() const { return static_cast<int>(table_.size()); }
    int apply(int x, int y) const { return table_[x][y]; }       // x*y
    int dual_apply(int x, int y) const { return dual_[x][y]; }   // unique t with t*y = x
    const Table& table() const { return table_; }
    const Table& dual_table() const { return dual_; }

    bool operator==(const FiniteQuandle& other) const { return table_ == other.table_; }

private:
    Table table_;
    Table dual_;
};

// Standard constructions.
FiniteQuandle trivial_quandle(int n);
FiniteQuandle conj_quandle(const FiniteGroupTable& g);            // g*h = hgh^-1
FiniteQuandle core_quandle(const FiniteGroupTable& g);            // g*h = hg^-1h
FiniteQuandle takasaki_quandle(const FiniteGroupTable& g);        // core of an abelian group
FiniteQuandle takasaki_cyclic(int n);                             // dihedral quandle R_n
FiniteQuandle alexander_quandle(const FiniteGroupTable& g, const std::vector<int>& phi); // g*h = phi(gh^-1)h

struct Permutation {
    std::vector<int> map;
    int order() const;
    bool is_identity() const;
};

// R_s together with its multiplicative order.
Permutation right_translation(const FiniteQuandle& q, int s);

struct ClassificationReport {
    bool is_trivial = false;
    std::vector<int> stabilizer_elements;
    bool is_latin = false;
    bool is_semi_latin = false;
    bool is_involutory = false;
    int nq_order = 1; // least n >= 1 with (R_x)^n = id for all x
    bool is_connected = false;
    std::vector<std::vector<int>> orbit_partition; // orbits of the inner translation group
};

ClassificationReport classify(const FiniteQuandle& q);

// Least isomorphism under the image-sequence order, or nullopt after an
// exhausted backtracking search.
std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& a, const FiniteQuandle& b);

} // namespace qf
