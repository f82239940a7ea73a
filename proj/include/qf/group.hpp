#pragma once

#include <vector>

namespace qf {

// Finite group as a multiplication table. Carrier for the Conj/Core/
// Takasaki/Alexander quandle constructions.
class FiniteGroupTable {
public:
    // Validates associativity, identity and inverses on construction.
    static FiniteGroupTable from_table(std::vector<std::vector<int>> mul);

    int size() const { return static_cast<int>(mul_.size()); }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int id() const { return id_; }
    bool is_abelian() const;

    const std::vector<std::vector<int>>& table() const { return mul_; }

private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    int id_ = 0;
};

FiniteGroupTable cyclic_group(int n);
// Symmetric group on n letters (n small); elements are the n! permutations
// in lexicographic order of their one-line notation.
FiniteGroupTable symmetric_group(int n);

// Checks that phi (as an index map) is a group automorphism.
bool is_group_automorphism(const FiniteGroupTable& g, const std::vector<int>& phi);

} // namespace qf
