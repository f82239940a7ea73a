#pragma once

#include "qf/quandle.hpp"

#include <vector>

namespace qf::testsupport {

// Every operation table of size n satisfying the quandle axioms: per column,
// permutations fixing the diagonal entry, filtered by self-distributivity.
std::vector<qf::Table> all_quandle_tables(int n);

// Every involutory quandle table of size n (columns are involutions fixing
// the diagonal entry), with partial self-distributivity pruning so n = 6
// stays cheap.
std::vector<qf::Table> all_involutory_tables(int n);

} // namespace qf::testsupport
