#include "qf/io.hpp"

#include "qf/errors.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace qf {

namespace {

struct Token {
    std::string text;
    int line = 0;
    int col = 0;
};

// Line-oriented token reader with positions for diagnostics.
class Reader {
public:
    explicit Reader(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines_.push_back(line);
        }
    }

    // next nonblank, non-comment line split into tokens; empty at EOF
    std::vector<Token> next_line(bool skip_comments = true) {
        while (row_ < lines_.size()) {
            const std::string& l = lines_[row_];
            ++row_;
            std::vector<Token> toks;
            std::size_t i = 0;
            while (i < l.size()) {
                while (i < l.size() && std::isspace(static_cast<unsigned char>(l[i]))) ++i;
                if (i >= l.size()) break;
                std::size_t start = i;
                while (i < l.size() && !std::isspace(static_cast<unsigned char>(l[i]))) ++i;
                toks.push_back({l.substr(start, i - start), static_cast<int>(row_), static_cast<int>(start) + 1});
            }
            if (toks.empty()) continue;
            if (skip_comments && toks[0].text[0] == '#') continue;
            return toks;
        }
        return {};
    }

    void push_back_line() { if (row_ > 0) --row_; }

    int current_line() const { return static_cast<int>(row_); }

    std::string raw_line(int idx) const { return lines_[idx]; }

private:
    std::vector<std::string> lines_;
    std::size_t row_ = 0;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw parse_error(t.line, t.col, msg + " (got '" + t.text + "')");
}

[[noreturn]] void fail_eof(int line, const std::string& msg) { throw parse_error(line + 1, 1, msg); }

int parse_int(const Token& t, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(t.text, &pos);
        if (pos != t.text.size()) fail(t, std::string("expected ") + what);
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (...) {
        fail(t, std::string("expected ") + what);
    }
}

void expect_header(Reader& r, const std::string& kind) {
    auto toks = r.next_line();
    if (toks.empty()) fail_eof(0, "empty input, expected '" + kind + " 1' header");
    if (toks[0].text != kind) fail(toks[0], "expected '" + kind + "' header");
    if (toks.size() != 2 || toks[1].text != "1") fail(toks[0], "expected format version 1");
}

} // namespace

Table parse_qnd_table(std::istream& in) {
    Reader r(in);
    expect_header(r, "qnd");
    auto toks = r.next_line();
    if (toks.empty()) fail_eof(r.current_line(), "expected 'size N'");
    if (toks[0].text != "size" || toks.size() != 2) fail(toks[0], "expected 'size N'");
    int n = parse_int(toks[1], "size");
    if (n < 1) fail(toks[1], "size must be positive");
    Table table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        toks = r.next_line();
        if (toks.empty()) fail_eof(r.current_line(), "expected table row " + std::to_string(x + 1));
        if (static_cast<int>(toks.size()) != n)
            fail(toks[0], "row " + std::to_string(x + 1) + " must have " + std::to_string(n) + " entries, has " +
                              std::to_string(toks.size()));
        for (int y = 0; y < n; ++y) {
            int v = parse_int(toks[y], "table entry");
            if (v < 1 || v > n) fail(toks[y], "entry out of range 1.." + std::to_string(n));
            table[x][y] = v - 1;
        }
    }
    // tolerated trailers: mapping lines and comments
    for (;;) {
        toks = r.next_line();
        if (toks.empty()) break;
        if (toks[0].text == "gen") continue;
        fail(toks[0], "unexpected content after the table");
    }
    return table;
}

FiniteQuandle parse_qnd(std::istream& in) {
    Table t = parse_qnd_table(in);
    auto violations = quandle_axiom_violations(t);
    if (!violations.empty()) {
        std::string msg = "table is not a quandle:";
        for (const auto& v : violations) msg += " [" + v.describe() + "]";
        throw input_error(msg);
    }
    return FiniteQuandle::from_table(std::move(t));
}

std::string emit_qnd(const FiniteQuandle& q) {
    std::ostringstream os;
    const int n = q.size();
    os << "qnd 1\nsize " << n << "\n";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) os << (y ? " " : "") << q.apply(x, y) + 1;
        os << "\n";
    }
    return os.str();
}

QuandlePresentation parse_qpres(std::istream& in) {
    Reader r(in);
    expect_header(r, "qpres");
    auto toks = r.next_line();
    if (toks.empty()) fail_eof(r.current_line(), "expected 'gens k'");
    if (toks[0].text != "gens" || toks.size() != 2) fail(toks[0], "expected 'gens k'");
    int k = parse_int(toks[1], "generator count");
    if (k < 1) fail(toks[1], "generator count must be positive");
    QuandlePresentation p;
    p.generators = k;
    for (;;) {
        toks = r.next_line();
        if (toks.empty()) break;
        if (toks[0].text != "rel") fail(toks[0], "expected 'rel <word> = <word>'");
        // words may contain spaces; rebuild from the raw line
        std::string raw = r.raw_line(toks[0].line - 1);
        auto rel_pos = raw.find("rel");
        std::string rest = raw.substr(rel_pos + 3);
        auto eq = rest.find('=');
        if (eq == std::string::npos) fail(toks[0], "relation is missing '='");
        std::string lhs = rest.substr(0, eq), rhs = rest.substr(eq + 1);
        try {
            p.relations.emplace_back(parse_word(lhs, k), parse_word(rhs, k));
        } catch (const parse_error& e) {
            throw parse_error(toks[0].line, e.col, e.what());
        }
    }
    return p;
}

std::string emit_qpres(const QuandlePresentation& p) {
    std::ostringstream os;
    os << "qpres 1\ngens " << p.generators << "\n";
    for (const auto& [l, rgt] : p.relations) os << "rel " << print_word(l) << " = " << print_word(rgt) << "\n";
    return os.str();
}

PDCode parse_pd(std::istream& in) {
    Reader r(in);
    expect_header(r, "pd");
    PDCode pd;
    for (;;) {
        auto toks = r.next_line();
        if (toks.empty()) break;
        if (toks[0].text != "X+" && toks[0].text != "X-")
            fail(toks[0], "expected crossing record 'X+ a b c d' or 'X- a b c d'");
        if (toks.size() != 5) fail(toks[0], "crossing record needs four arc labels");
        PDCrossing x;
        x.positive = toks[0].text == "X+";
        x.a = parse_int(toks[1], "arc label");
        x.b = parse_int(toks[2], "arc label");
        x.c = parse_int(toks[3], "arc label");
        x.d = parse_int(toks[4], "arc label");
        pd.crossings.push_back(x);
    }
    return pd;
}

std::string emit_pd(const PDCode& pd) {
    std::ostringstream os;
    os << "pd 1\n";
    for (const auto& x : pd.crossings)
        os << (x.positive ? "X+" : "X-") << " " << x.a << " " << x.b << " " << x.c << " " << x.d << "\n";
    return os.str();
}

GroupPresentation parse_gpres(std::istream& in) {
    Reader r(in);
    expect_header(r, "gpres");
    auto toks = r.next_line();
    if (toks.empty()) fail_eof(r.current_line(), "expected 'gens k'");
    if (toks[0].text != "gens" || toks.size() != 2) fail(toks[0], "expected 'gens k'");
    int k = parse_int(toks[1], "generator count");
    if (k < 1) fail(toks[1], "generator count must be positive");
    GroupPresentation g;
    g.generators = k;
    for (;;) {
        toks = r.next_line();
        if (toks.empty()) break;
        if (toks[0].text != "rel") fail(toks[0], "expected 'rel <signed word>'");
        std::vector<int> word;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            const std::string& s = toks[i].text;
            if (s.empty() || s[0] != 'g') fail(toks[i], "expected generator token g<i>[^<e>]");
            std::size_t caret = s.find('^');
            int idx = 0, exp = 1;
            try {
                idx = std::stoi(s.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
                if (caret != std::string::npos) exp = std::stoi(s.substr(caret + 1));
            } catch (...) {
                fail(toks[i], "malformed generator token");
            }
            if (idx < 1 || idx > k) fail(toks[i], "generator index out of range");
            for (int j = 0; j < std::abs(exp); ++j) word.push_back(exp >= 0 ? idx : -idx);
        }
        word = free_reduce(std::move(word));
        if (!word.empty()) g.relators.push_back(std::move(word));
    }
    return g;
}

std::string emit_gpres(const GroupPresentation& g, const std::vector<std::string>& comments) {
    std::ostringstream os;
    os << "gpres 1\ngens " << g.generators << "\n";
    for (const auto& rel : g.relators) {
        os << "rel";
        for (int s : rel) {
            os << " g" << std::abs(s);
            if (s < 0) os << "^-1";
        }
        os << "\n";
    }
    for (const auto& c : comments) os << "# " << c << "\n";
    return os.str();
}

CocycleSpec parse_cocycle(std::istream& in, const QndLoader& load_qnd) {
    Reader r(in);
    expect_header(r, "cocycle");
    CocycleSpec spec;

    auto toks = r.next_line();
    if (toks.empty()) fail_eof(r.current_line(), "expected 'base ...'");
    if (toks[0].text != "base") fail(toks[0], "expected 'base trivial|takasaki|circle|file ...'");
    if (toks.size() < 2) fail(toks[0], "base needs an argument");
    const std::string& bk = toks[1].text;
    if (bk == "trivial" || bk == "takasaki") {
        if (toks.size() != 3) fail(toks[1], "expected 'base " + bk + " N'");
        spec.base_kind = bk == "trivial" ? CocycleSpec::Base::trivial : CocycleSpec::Base::takasaki;
        spec.base_n = parse_int(toks[2], "base size");
        if (spec.base_n < 1) fail(toks[2], "base size must be positive");
        spec.base = bk == "trivial" ? trivial_quandle(spec.base_n) : takasaki_cyclic(spec.base_n);
    } else if (bk == "circle") {
        if (toks.size() != 3) fail(toks[1], "expected 'base circle t'");
        spec.base_kind = CocycleSpec::Base::circle;
        try {
            spec.circle_t = parse_rational(toks[2].text);
        } catch (const input_error& e) {
            fail(toks[2], e.what());
        }
    } else if (bk == "file") {
        if (toks.size() != 3) fail(toks[1], "expected 'base file <path>'");
        spec.base_kind = CocycleSpec::Base::file;
        spec.base_path = toks[2].text;
        if (!load_qnd) fail(toks[2], "file bases are not available here");
        spec.base = load_qnd(spec.base_path);
        spec.base_n = spec.base.size();
    } else {
        fail(toks[1], "unknown base kind");
    }
    if (spec.base_kind != CocycleSpec::Base::circle) spec.base_n = spec.base.size();

    toks = r.next_line();
    if (toks.empty()) fail_eof(r.current_line(), "expected 'fiber ...'");
    if (toks[0].text != "fiber") fail(toks[0], "expected 'fiber rational|zmod|set ...'");
    if (toks.size() < 2) fail(toks[0], "fiber needs an argument");
    const std::string& fk = toks[1].text;
    if (fk == "rational") {
        if (toks.size() != 2) fail(toks[1], "expected 'fiber rational'");
        spec.fiber_kind = CocycleSpec::Fiber::rational;
    } else if (fk == "zmod" || fk == "set") {
        if (toks.size() != 3) fail(toks[1], "expected 'fiber " + fk + " m'");
        spec.fiber_kind = fk == "zmod" ? CocycleSpec::Fiber::zmod : CocycleSpec::Fiber::finite_set;
        spec.fiber_m = parse_int(toks[2], "fiber size");
        if (spec.fiber_m < 1) fail(toks[2], "fiber size must be positive");
    } else {
        fail(toks[1], "unknown fiber kind");
    }

    toks = r.next_line();
    if (toks.empty()) fail_eof(r.current_line(), "expected 'affine ...' or 'alpha'");
    if (toks[0].text == "affine") {
        spec.affine = true;
        if (spec.fiber_kind == CocycleSpec::Fiber::finite_set)
            fail(toks[0], "affine cocycles need a 'rational' or 'zmod' fiber");
        bool have_t = false;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            const std::string& s = toks[i].text;
            if (s.rfind("t=", 0) == 0) {
                try {
                    spec.t = parse_rational(s.substr(2));
                } catch (const input_error& e) {
                    fail(toks[i], e.what());
                }
                have_t = true;
            } else if (s == "kappa=0") {
                spec.kappa_zero = true;
            } else if (s == "kappa=table") {
                spec.kappa_zero = false;
            } else {
                fail(toks[i], "expected 't=<rational>' and 'kappa=<0|table>'");
            }
        }
        if (!have_t) fail(toks[0], "affine cocycle needs t=<rational>");
        if (spec.base_kind == CocycleSpec::Base::circle && !spec.kappa_zero)
            fail(toks[0], "kappa tables need a finite base");
        if (!spec.kappa_zero) {
            const int n = spec.base_n;
            spec.kappa.assign(n, std::vector<Rational>(n));
            for (int x = 0; x < n; ++x) {
                toks = r.next_line();
                if (toks.empty()) fail_eof(r.current_line(), "expected kappa row " + std::to_string(x + 1));
                if (static_cast<int>(toks.size()) != n) fail(toks[0], "kappa row has wrong length");
                for (int y = 0; y < n; ++y) {
                    try {
                        spec.kappa[x][y] = parse_rational(toks[y].text);
                    } catch (const input_error& e) {
                        fail(toks[y], e.what());
                    }
                }
            }
        }
    } else if (toks[0].text == "alpha") {
        spec.affine = false;
        if (spec.fiber_kind == CocycleSpec::Fiber::rational)
            fail(toks[0], "explicit alpha tables need a finite fiber");
        if (spec.base_kind == CocycleSpec::Base::circle)
            fail(toks[0], "explicit alpha tables need a finite base");
        const int n = spec.base_n;
        const int m = static_cast<int>(spec.fiber_m);
        spec.alpha.assign(n, std::vector<std::vector<std::vector<int>>>(
                                 n, std::vector<std::vector<int>>(m, std::vector<int>(m, -1))));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                toks = r.next_line();
                if (toks.empty()) fail_eof(r.current_line(), "expected 'pair x y' block");
                if (toks[0].text != "pair" || toks.size() != 3) fail(toks[0], "expected 'pair x y'");
                if (parse_int(toks[1], "pair index") != x + 1 || parse_int(toks[2], "pair index") != y + 1)
                    fail(toks[1], "pair blocks must appear in row-major order");
                for (int rr = 0; rr < m; ++rr) {
                    toks = r.next_line();
                    if (toks.empty()) fail_eof(r.current_line(), "expected alpha row");
                    if (static_cast<int>(toks.size()) != m) fail(toks[0], "alpha row has wrong length");
                    for (int ss = 0; ss < m; ++ss) {
                        int v = parse_int(toks[ss], "fiber index");
                        if (v < 1 || v > m) fail(toks[ss], "fiber index out of range");
                        spec.alpha[x][y][rr][ss] = v - 1;
                    }
                }
            }
    } else {
        fail(toks[0], "expected 'affine ...' or 'alpha'");
    }
    toks = r.next_line();
    if (!toks.empty()) fail(toks[0], "unexpected content after the cocycle spec");
    return spec;
}

std::string detect_format(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok) return tok;
    }
    return "";
}

} // namespace qf
