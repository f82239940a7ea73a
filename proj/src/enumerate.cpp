#include "qf/enumerate.hpp"

#include "qf/errors.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace qf {

namespace {

class Winker {
public:
    Winker(const QuandlePresentation& p, int power, int limit)
        : pres_(p), ngens_(p.generators), power_(power), limit_(limit) {
        for (const auto& rel : p.relations)
            relseqs_.emplace_back(conjugation_word(rel.first), conjugation_word(rel.second));
        for (int g = 0; g < ngens_; ++g) {
            int c = create(-1, g, +1);
            set_edge(c, g, +1, c); // idempotency of the generator itself
        }
    }

    EnumerationResult run() {
        EnumerationResult out;
        out.limit = limit_;
        while (!overflow_) {
            std::uint64_t before = dirty_;
            ++stats_.passes;
            pass();
            if (overflow_) break;
            if (dirty_ == before) break;
        }
        stats_.cosets_defined = created_;
        out.stats = stats_;
        if (overflow_) return out;
        extract(out);
        return out;
    }

private:
    struct Def {
        int base; // -1 for generator cosets
        int gen;
        int sign; // +1: base*g, -1: base/g
    };

    const QuandlePresentation& pres_;
    int ngens_;
    int power_;
    int limit_;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> relseqs_;

    std::vector<int> parent_;
    std::vector<std::vector<int>> act_pos_, act_neg_; // per coset, per generator; -1 undefined
    std::vector<Def> defs_;
    std::deque<std::pair<int, int>> merge_queue_;
    std::uint64_t created_ = 0;
    std::uint64_t dirty_ = 0;
    bool overflow_ = false;
    EnumerationStats stats_;

    int find(int c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    int create(int base, int gen, int sign) {
        if (created_ >= static_cast<std::uint64_t>(limit_)) {
            overflow_ = true;
            return -1;
        }
        int id = static_cast<int>(parent_.size());
        parent_.push_back(id);
        act_pos_.emplace_back(ngens_, -1);
        act_neg_.emplace_back(ngens_, -1);
        defs_.push_back({base, gen, sign});
        ++created_;
        ++dirty_;
        return id;
    }

    // c*g = d (dir=+1) or c/g = d (dir=-1), kept consistent in both
    // directions; conflicts become merges.
    void set_edge(int c, int g, int dir, int d) {
        c = find(c);
        d = find(d);
        auto& fwd = dir > 0 ? act_pos_ : act_neg_;
        auto& bwd = dir > 0 ? act_neg_ : act_pos_;
        int cur = fwd[c][g] < 0 ? -1 : find(fwd[c][g]);
        if (cur == d) {
            fwd[c][g] = d;
        } else if (cur < 0) {
            fwd[c][g] = d;
            ++dirty_;
        } else {
            merge_queue_.emplace_back(cur, d);
        }
        int back = bwd[d][g] < 0 ? -1 : find(bwd[d][g]);
        if (back == c) {
            bwd[d][g] = c;
        } else if (back < 0) {
            bwd[d][g] = c;
            ++dirty_;
        } else {
            merge_queue_.emplace_back(back, c);
        }
    }

    int apply(int c, int g, int dir, bool define) {
        c = find(c);
        auto& fwd = dir > 0 ? act_pos_ : act_neg_;
        int t = fwd[c][g];
        if (t >= 0) {
            t = find(t);
            fwd[c][g] = t;
            return t;
        }
        if (!define) return -1;
        int d = create(c, g, dir);
        if (d < 0) return -1;
        set_edge(c, g, dir, d);
        return d;
    }

    // Scan start --seq--> target. Completes by merging, closes a single gap
    // by deduction, and defines a new coset only when the gap spans two or
    // more edges.
    void scan(int start, const std::vector<int>& seq, int target) {
        const int len = static_cast<int>(seq.size());
        for (;;) {
            if (overflow_) return;
            int i = 0;
            int cf = find(start);
            while (i < len) {
                int t = apply(cf, std::abs(seq[i]) - 1, seq[i] > 0 ? +1 : -1, false);
                if (t < 0) break;
                cf = t;
                ++i;
            }
            if (i == len) {
                merge(cf, find(target));
                return;
            }
            int j = len;
            int cb = find(target);
            while (j > i + 1) {
                int t = apply(cb, std::abs(seq[j - 1]) - 1, seq[j - 1] > 0 ? -1 : +1, false);
                if (t < 0) break;
                cb = t;
                --j;
            }
            if (j == i + 1) {
                set_edge(cf, std::abs(seq[i]) - 1, seq[i] > 0 ? +1 : -1, cb);
                process_merges();
                return;
            }
            if (apply(cf, std::abs(seq[i]) - 1, seq[i] > 0 ? +1 : -1, true) < 0) return;
        }
    }

    int apply_seq(int c, const std::vector<int>& seq, bool define) {
        for (int s : seq) {
            c = apply(c, std::abs(s) - 1, s > 0 ? +1 : -1, define);
            if (c < 0) return -1;
        }
        return c;
    }

    void merge(int a, int b) {
        if (a < 0 || b < 0) return;
        merge_queue_.emplace_back(a, b);
        process_merges();
    }

    void process_merges() {
        while (!merge_queue_.empty()) {
            auto [a, b] = merge_queue_.front();
            merge_queue_.pop_front();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            if (a > b) std::swap(a, b); // smaller coset name survives
            parent_[b] = a;
            ++stats_.merges;
            ++dirty_;
            for (int g = 0; g < ngens_; ++g) {
                if (act_pos_[b][g] >= 0) set_edge(a, g, +1, act_pos_[b][g]);
                if (act_neg_[b][g] >= 0) set_edge(a, g, -1, act_neg_[b][g]);
            }
        }
    }

    // Conjugation action sequence of the coset's defining word.
    std::vector<int> def_seq(int c) {
        std::vector<std::pair<int, int>> wraps; // outermost first
        while (defs_[c].base >= 0) {
            wraps.emplace_back(defs_[c].gen, defs_[c].sign);
            c = defs_[c].base;
        }
        std::vector<int> seq{defs_[c].gen + 1};
        for (auto it = wraps.rbegin(); it != wraps.rend(); ++it) {
            auto [g, sign] = *it;
            std::vector<int> next;
            next.reserve(seq.size() + 2);
            next.push_back(sign > 0 ? -(g + 1) : (g + 1));
            next.insert(next.end(), seq.begin(), seq.end());
            next.push_back(sign > 0 ? (g + 1) : -(g + 1));
            seq = std::move(next);
        }
        return seq;
    }

    int eval_element(const QuandleWord::Node& n) {
        if (n.gen >= 0) return find(n.gen); // generator cosets are 0..ngens-1
        int l = eval_element(*n.left);
        if (l < 0 || overflow_) return -1;
        auto seq = conjugation_word_of(*n.right);
        if (n.dual) invert_seq(seq);
        return apply_seq(l, seq, true);
    }

    static std::vector<int> conjugation_word_of(const QuandleWord::Node& n) {
        QuandleWord w = rebuild(n);
        return conjugation_word(w);
    }

    static QuandleWord rebuild(const QuandleWord::Node& n) {
        if (n.gen >= 0) return QuandleWord::generator(n.gen);
        return QuandleWord::combine(rebuild(*n.left), rebuild(*n.right), n.dual);
    }

    static void invert_seq(std::vector<int>& seq) {
        std::reverse(seq.begin(), seq.end());
        for (int& s : seq) s = -s;
    }

    bool live(int c) { return parent_[c] == c; }

    void pass() {
        // cosets created during this pass are traced in the next one
        const std::size_t snapshot = parent_.size();
        // primary relations
        for (const auto& rel : pres_.relations) {
            int l = eval_element(rel.first.node());
            int r = eval_element(rel.second.node());
            if (overflow_) return;
            merge(l, r);
        }
        // secondary relations at every coset: c . R_{w_l} . R_{w_r}^-1 = c
        for (std::size_t c = 0; c < snapshot; ++c) {
            if (!live(static_cast<int>(c))) continue;
            for (const auto& [ls, rs] : relseqs_) {
                std::vector<int> seq = ls;
                for (auto it = rs.rbegin(); it != rs.rend(); ++it) seq.push_back(-*it);
                scan(static_cast<int>(c), seq, static_cast<int>(c));
                if (overflow_) return;
            }
        }
        // idempotency at every coset: c * c = c
        for (std::size_t c = 0; c < snapshot; ++c) {
            if (!live(static_cast<int>(c))) continue;
            scan(static_cast<int>(c), def_seq(static_cast<int>(c)), static_cast<int>(c));
            if (overflow_) return;
        }
        // (R_g)^n = id on every column
        for (std::size_t c = 0; c < snapshot; ++c) {
            if (!live(static_cast<int>(c))) continue;
            for (int g = 0; g < ngens_; ++g) {
                std::vector<int> seq(power_, g + 1);
                scan(static_cast<int>(c), seq, static_cast<int>(c));
                if (overflow_) return;
            }
        }
    }

    void extract(EnumerationResult& out) {
        std::vector<int> number(parent_.size(), -1);
        std::vector<int> roots;
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (live(static_cast<int>(c))) {
                number[c] = static_cast<int>(roots.size());
                roots.push_back(static_cast<int>(c));
            }
        }
        const int m = static_cast<int>(roots.size());
        Table table(m, std::vector<int>(m, -1));
        for (int yi = 0; yi < m; ++yi) {
            auto seq = def_seq(roots[yi]);
            for (int xi = 0; xi < m; ++xi) {
                int v = apply_seq(roots[xi], seq, false);
                if (v < 0) throw std::logic_error("enumeration closed with undefined action");
                table[xi][yi] = number[find(v)];
            }
        }
        std::vector<AxiomViolation> violations;
        auto q = FiniteQuandle::try_from_table(std::move(table), &violations);
        if (!q) throw std::logic_error("enumeration produced a non-quandle table");
        out.closed = true;
        out.quandle = std::move(q);
        out.generator_images.resize(ngens_);
        for (int g = 0; g < ngens_; ++g) out.generator_images[g] = number[find(g)];
    }
};

} // namespace

EnumerationResult enumerate_n_quandle(const QuandlePresentation& p, int n, int max_elements) {
    if (n < 2) throw input_error("n-quandle enumeration requires n >= 2");
    if (p.generators < 1) throw input_error("presentation needs at least one generator");
    if (max_elements < p.generators) throw input_error("max_elements smaller than generator count");
    Winker w(p, n, max_elements);
    return w.run();
}

} // namespace qf
