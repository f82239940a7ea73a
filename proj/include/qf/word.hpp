#pragma once

#include <memory>
#include <string>
#include <vector>

namespace qf {

// Word over generators a1..ak with left-associative binary operators
// "*" and "/" (the dual operation) of equal precedence.
class QuandleWord {
public:
    struct Node {
        int gen = -1; // leaf when >= 0 (0-based generator index)
        bool dual = false;
        std::shared_ptr<const Node> left, right;
    };

    static QuandleWord generator(int g);
    static QuandleWord combine(const QuandleWord& l, const QuandleWord& r, bool dual);

    bool is_leaf() const { return root_->gen >= 0; }
    const Node& node() const { return *root_; }
    int leaf_count() const;
    int leading_generator() const; // leftmost leaf

    bool operator==(const QuandleWord& other) const;

private:
    std::shared_ptr<const Node> root_;
};

// Grammar: word := term { ("*"|"/") term }; term := generator | "(" word ")";
// generator := "a"<digits>, 1-based, must be <= k. Errors carry the column.
QuandleWord parse_word(const std::string& text, int k);

// Compound operands are parenthesized on both sides, so printing then
// parsing is the identity.
std::string print_word(const QuandleWord& w);

// Signed generator sequence (entries +-(g+1), applied left to right as right
// translations) realizing R_w through the conjugation expansion
// R_{u*v} = R_v R_u R_v^-1. Doubles as the group word of w in the enveloping
// group.
std::vector<int> conjugation_word(const QuandleWord& w);

} // namespace qf
