#include "qf/word.hpp"

#include "qf/errors.hpp"

#include <algorithm>
#include <cctype>

namespace qf {

QuandleWord QuandleWord::generator(int g) {
    QuandleWord w;
    auto n = std::make_shared<Node>();
    n->gen = g;
    w.root_ = std::move(n);
    return w;
}

QuandleWord QuandleWord::combine(const QuandleWord& l, const QuandleWord& r, bool dual) {
    QuandleWord w;
    auto n = std::make_shared<Node>();
    n->dual = dual;
    n->left = l.root_;
    n->right = r.root_;
    w.root_ = std::move(n);
    return w;
}

namespace {

int count_leaves(const QuandleWord::Node& n) {
    if (n.gen >= 0) return 1;
    return count_leaves(*n.left) + count_leaves(*n.right);
}

bool nodes_equal(const QuandleWord::Node& a, const QuandleWord::Node& b) {
    if (a.gen >= 0 || b.gen >= 0) return a.gen == b.gen;
    return a.dual == b.dual && nodes_equal(*a.left, *b.left) && nodes_equal(*a.right, *b.right);
}

} // namespace

int QuandleWord::leaf_count() const { return count_leaves(*root_); }

int QuandleWord::leading_generator() const {
    const Node* n = root_.get();
    while (n->gen < 0) n = n->left.get();
    return n->gen;
}

bool QuandleWord::operator==(const QuandleWord& other) const { return nodes_equal(*root_, *other.root_); }

namespace {

struct WordParser {
    const std::string& text;
    int k;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(1, static_cast<int>(i) + 1, msg);
    }

    void skip_ws() {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < text.size() && text[i] == c) { ++i; return true; }
        return false;
    }

    QuandleWord term() {
        skip_ws();
        if (i >= text.size()) fail("expected generator or '('");
        if (text[i] == '(') {
            ++i;
            QuandleWord w = word();
            skip_ws();
            if (i >= text.size() || text[i] != ')') fail("expected ')'");
            ++i;
            return w;
        }
        if (text[i] != 'a') fail("expected generator 'a<digits>'");
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("expected digits after 'a'");
        int idx = std::stoi(text.substr(start, i - start));
        if (idx < 1 || idx > k) {
            i = start - 1;
            fail("undeclared generator a" + std::to_string(idx) + " (have a1..a" + std::to_string(k) + ")");
        }
        return QuandleWord::generator(idx - 1);
    }

    QuandleWord word() {
        QuandleWord w = term();
        for (;;) {
            skip_ws();
            if (eat('*')) w = QuandleWord::combine(w, term(), false);
            else if (eat('/')) w = QuandleWord::combine(w, term(), true);
            else return w;
        }
    }
};

void print_node(const QuandleWord::Node& n, std::string& out, bool top) {
    if (n.gen >= 0) {
        out += "a" + std::to_string(n.gen + 1);
        return;
    }
    if (!top) out += "(";
    print_node(*n.left, out, false);
    out += n.dual ? "/" : "*";
    print_node(*n.right, out, false);
    if (!top) out += ")";
}

void conj_node(const QuandleWord::Node& n, std::vector<int>& out, bool invert) {
    if (n.gen >= 0) {
        out.push_back(invert ? -(n.gen + 1) : (n.gen + 1));
        return;
    }
    // R_{u*v} = R_v R_u R_v^-1, R_{u/v} = R_v^-1 R_u R_v. Sequences apply left
    // to right, so u*v emits seq(v)^-1, seq(u), seq(v); inverting the whole
    // word only inverts the middle segment.
    bool first_inverted = !n.dual;
    conj_node(*n.right, out, first_inverted);
    conj_node(*n.left, out, invert);
    conj_node(*n.right, out, !first_inverted);
}

} // namespace

QuandleWord parse_word(const std::string& text, int k) {
    WordParser p{text, k};
    QuandleWord w = p.word();
    p.skip_ws();
    if (p.i != text.size()) p.fail("unexpected trailing input");
    return w;
}

std::string print_word(const QuandleWord& w) {
    std::string out;
    print_node(w.node(), out, true);
    return out;
}

std::vector<int> conjugation_word(const QuandleWord& w) {
    std::vector<int> out;
    conj_node(w.node(), out, false);
    return out;
}

} // namespace qf
