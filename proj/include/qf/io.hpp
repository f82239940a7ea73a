#pragma once

#include "qf/envgroup.hpp"
#include "qf/extension.hpp"
#include "qf/presentation.hpp"
#include "qf/quandle.hpp"

#include <functional>
#include <iosfwd>
#include <string>

namespace qf {

// QND: "qnd 1", "size N", N rows of N whitespace-separated 1-based entries.
// Trailing blank lines, "# ..." comments and "gen a<i> -> <j>" mapping lines
// are tolerated so enumeration output can be piped back in.
Table parse_qnd_table(std::istream& in);
FiniteQuandle parse_qnd(std::istream& in); // validates the table
std::string emit_qnd(const FiniteQuandle& q);

// qpres: "qpres 1", "gens k", lines "rel <word> = <word>".
QuandlePresentation parse_qpres(std::istream& in);
std::string emit_qpres(const QuandlePresentation& p);

// pd: "pd 1", lines "X+ a b c d" / "X- a b c d".
PDCode parse_pd(std::istream& in);
std::string emit_pd(const PDCode& pd);

// gpres: "gpres 1", "gens k", lines "rel g2 g1^-1 ..." ("#" comments allowed).
GroupPresentation parse_gpres(std::istream& in);
std::string emit_gpres(const GroupPresentation& g, const std::vector<std::string>& comments = {});

// cocycle spec, see README for the grammar.
struct CocycleSpec {
    enum class Base { trivial, takasaki, circle, file };
    enum class Fiber { rational, zmod, finite_set };

    Base base_kind = Base::trivial;
    int base_n = 0;
    Rational circle_t;
    std::string base_path;
    FiniteQuandle base; // resolved finite base (unset for circle)

    Fiber fiber_kind = Fiber::rational;
    long fiber_m = 0;

    bool affine = true;
    Rational t;
    bool kappa_zero = true;
    std::vector<std::vector<Rational>> kappa;

    std::vector<std::vector<std::vector<std::vector<int>>>> alpha; // explicit tables
};

using QndLoader = std::function<FiniteQuandle(const std::string& path)>;
CocycleSpec parse_cocycle(std::istream& in, const QndLoader& load_qnd);

// First whitespace-separated token of the first nonblank line ("qnd",
// "qpres", "pd", "gpres", "cocycle", "order").
std::string detect_format(const std::string& content);

} // namespace qf
