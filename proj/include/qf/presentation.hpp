#pragma once

#include "qf/quandle.hpp"
#include "qf/word.hpp"

#include <utility>
#include <vector>

namespace qf {

struct QuandlePresentation {
    int generators = 0;
    std::vector<std::pair<QuandleWord, QuandleWord>> relations;
};

// Torus link quandle: m generators, relation i reads
// a_i = a_{n+i}*a_n*a_{n-1}*...*a_2*a_1 left-associated, indices reduced by
// a_{mj+k} = a_k. No simplification is applied.
QuandlePresentation torus_presentation(int m, int n);

// Signed crossing with four 1-based arc labels (in-under, over, out-under,
// over again); the over-strand is not cut at the crossing, so both over
// slots carry the same arc.
struct PDCrossing {
    bool positive = true;
    int a = 0, b = 0, c = 0, d = 0;
};

struct PDCode {
    std::vector<PDCrossing> crossings;
};

// One generator per arc, one relation per crossing: out = in*over for
// positive crossings, out = in/over for negative ones.
QuandlePresentation pd_to_presentation(const PDCode& pd);

int evaluate_word(const FiniteQuandle& q, const QuandleWord& w, const std::vector<int>& assignment);

} // namespace qf
