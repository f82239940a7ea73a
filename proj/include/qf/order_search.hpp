#pragma once

#include "qf/ordering.hpp"
#include "qf/rational.hpp"

#include <optional>

namespace qf {

struct SearchOptions {
    int max_n = 8;     // hard size bound; larger inputs raise limit_error
    bool prune = true; // lemma-chain and partial-invariance cuts
};

// Coverage accounting for "none" results: every leaf of the canonical search
// space is either visited or sits under a pruned subtree, and the weighted
// sum must reproduce the space size exactly.
struct SearchCertificate {
    BigInt space_size = 0;
    BigInt covered = 0;
    std::uint64_t leaves = 0;
    std::uint64_t pruned = 0;
    bool exhaustive() const { return covered == space_size; }
};

struct CircularSearchResult {
    std::optional<CyclicOrder> witness;
    SearchCertificate cert;
};

struct TotalSearchResult {
    std::optional<TotalOrder> witness;
    SearchCertificate cert;
};

// Exhaustive searches over (N-1)! arrangements / N! rank sequences in
// lexicographic order; the returned witness is the canonical least one.
CircularSearchResult find_circular_order(const FiniteQuandle& q, Side side, const SearchOptions& opts = {});
TotalSearchResult find_total_order(const FiniteQuandle& q, Side side, const SearchOptions& opts = {});

} // namespace qf
