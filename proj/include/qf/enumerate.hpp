#pragma once

#include "qf/presentation.hpp"
#include "qf/quandle.hpp"

#include <cstdint>
#include <optional>

namespace qf {

struct EnumerationStats {
    std::uint64_t cosets_defined = 0;
    std::uint64_t merges = 0;
    std::uint64_t passes = 0;
};

struct EnumerationResult {
    bool closed = false;
    std::optional<FiniteQuandle> quandle;  // set iff closed
    std::vector<int> generator_images;     // set iff closed
    EnumerationStats stats;
    int limit = 0;
};

// Coset enumeration of the n-quandle of a presented quandle, Winker style:
// a partial table of generator actions on cosets with a union-find over
// coset names. Actions of compound words expand through the conjugation
// rule R_{u*v} = R_v R_u R_v^-1 (self-distributivity). Rules run to a fixed
// point: idempotency at every coset, two-way (bijective) generator edges,
// the presentation relations traced at every coset, and (R_g)^n = id on
// every column. Deterministic: cosets are created in first-use order and
// the smaller name survives every merge.
EnumerationResult enumerate_n_quandle(const QuandlePresentation& p, int n, int max_elements = 10000);

} // namespace qf
