// qf — finite quandles, orderability search, cocycle extensions, and
// enveloping groups. See README.md for the file formats.

#include "CLI11.hpp"

#include "qf/enumerate.hpp"
#include "qf/envgroup.hpp"
#include "qf/errors.hpp"
#include "qf/extension.hpp"
#include "qf/io.hpp"
#include "qf/order_search.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNone = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in.good()) throw qf::input_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

qf::FiniteQuandle load_qnd(const std::string& path) {
    std::istringstream in(slurp(path));
    return qf::parse_qnd(in);
}

// capped by QF_THREADS; the search engine currently runs one worker
int worker_cap() {
    const char* env = std::getenv("QF_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v >= 1 ? std::min(v, 1) : 1;
}

std::string join_elems(const std::vector<int>& xs, bool named) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " ";
        out += named ? "a" + std::to_string(xs[i] + 1) : std::to_string(xs[i] + 1);
    }
    return out;
}

int cmd_check(const std::string& path) {
    std::istringstream in(slurp(path));
    qf::Table table = qf::parse_qnd_table(in);
    auto violations = qf::quandle_axiom_violations(table);
    if (violations.empty()) {
        std::cout << "qnd ok size=" << table.size() << "\n";
        return kExitOk;
    }
    std::cout << "invalid quandle:\n";
    for (const auto& v : violations) std::cout << "  " << v.describe() << "\n";
    return kExitInput;
}

int cmd_classify(const std::string& path) {
    auto q = load_qnd(path);
    auto rep = qf::classify(q);
    std::cout << "classify size=" << q.size() << "\n";
    std::cout << "trivial: " << (rep.is_trivial ? "yes" : "no") << "\n";
    std::cout << "stabilizers:"
              << (rep.stabilizer_elements.empty() ? " (none)" : " " + join_elems(rep.stabilizer_elements, true))
              << "\n";
    std::cout << "latin: " << (rep.is_latin ? "yes" : "no") << "\n";
    std::cout << "semi_latin: " << (rep.is_semi_latin ? "yes" : "no") << "\n";
    std::cout << "involutory: " << (rep.is_involutory ? "yes" : "no") << "\n";
    std::cout << "nq_order: " << rep.nq_order << "\n";
    std::cout << "connected: " << (rep.is_connected ? "yes" : "no") << "\n";
    std::cout << "orbits:";
    for (const auto& orb : rep.orbit_partition) std::cout << " {" << join_elems(orb, true) << "}";
    std::cout << "\n";
    return kExitOk;
}

int cmd_order(const std::string& path, const std::string& side_s, const std::string& kind_s, int max_n,
              bool no_prune) {
    auto q = load_qnd(path);
    qf::Side side = side_s == "left" ? qf::Side::left : qf::Side::right;
    qf::SearchOptions opts;
    opts.max_n = max_n;
    opts.prune = !no_prune;
    (void)worker_cap();
    std::cout << "order 1\n";
    if (kind_s == "total") {
        auto res = qf::find_total_order(q, side, opts);
        if (res.witness) {
            if (!qf::invariance_check(q, *res.witness, side).ok)
                throw std::logic_error("witness failed re-validation");
            std::cout << "total ranks:";
            for (int e = 0; e < q.size(); ++e) std::cout << " " << res.witness->rank[e] + 1;
            std::cout << "\n";
            return kExitOk;
        }
        if (!res.cert.exhaustive()) throw std::logic_error("incomplete search coverage");
        std::cout << "none exhaustive leaves=" << res.cert.leaves << " pruned=" << res.cert.pruned << "\n";
        return kExitNone;
    }
    auto res = qf::find_circular_order(q, side, opts);
    if (res.witness) {
        if (!qf::is_valid_circular(*res.witness).ok || !qf::invariance_check(q, *res.witness, side).ok)
            throw std::logic_error("witness failed re-validation");
        std::cout << "cyclic: " << join_elems(res.witness->arrangement, false) << "\n";
        return kExitOk;
    }
    if (!res.cert.exhaustive()) throw std::logic_error("incomplete search coverage");
    std::cout << "none exhaustive leaves=" << res.cert.leaves << " pruned=" << res.cert.pruned << "\n";
    return kExitNone;
}

int cmd_iso(const std::string& p1, const std::string& p2) {
    auto a = load_qnd(p1);
    auto b = load_qnd(p2);
    std::cout << "iso 1\n";
    if (a.size() != b.size()) {
        std::cout << "none size-mismatch " << a.size() << " vs " << b.size() << "\n";
        return kExitNone;
    }
    auto iso = qf::find_isomorphism(a, b);
    if (iso) {
        std::cout << "map: " << join_elems(*iso, false) << "\n";
        return kExitOk;
    }
    std::cout << "none exhaustive\n";
    return kExitNone;
}

int cmd_torus(int m, int n) {
    std::cout << qf::emit_qpres(qf::torus_presentation(m, n));
    return kExitOk;
}

int cmd_pd2pres(const std::string& path) {
    std::istringstream in(slurp(path));
    auto pd = qf::parse_pd(in);
    std::cout << qf::emit_qpres(qf::pd_to_presentation(pd));
    return kExitOk;
}

int cmd_nquandle(const std::string& path, int n, int max_elements) {
    std::istringstream in(slurp(path));
    auto p = qf::parse_qpres(in);
    auto res = qf::enumerate_n_quandle(p, n, max_elements);
    if (!res.closed) {
        std::cerr << "overflow limit=" << res.limit << " cosets=" << res.stats.cosets_defined
                  << " merges=" << res.stats.merges << "\n";
        return kExitLimit;
    }
    std::cout << qf::emit_qnd(*res.quandle);
    for (int g = 0; g < p.generators; ++g)
        std::cout << "gen a" << g + 1 << " -> " << res.generator_images[g] + 1 << "\n";
    std::cout << "# cosets=" << res.stats.cosets_defined << " merges=" << res.stats.merges << "\n";
    return kExitOk;
}

int cmd_env(const std::string& path, int n) {
    std::string content = slurp(path);
    std::string fmt = qf::detect_format(content);
    qf::GroupPresentation g;
    if (fmt == "qnd") {
        std::istringstream in(content);
        g = qf::env_presentation(qf::parse_qnd(in), n);
    } else if (fmt == "qpres") {
        std::istringstream in(content);
        g = qf::env_presentation(qf::parse_qpres(in), n);
    } else {
        throw qf::input_error("env expects a qnd or qpres input, got '" + fmt + "'");
    }
    auto cert = qf::exponent_certificate(g, n);
    if (!cert.ok) throw std::logic_error("a relator has nonzero exponent");
    std::cout << qf::emit_gpres(g, {cert.line});
    return kExitOk;
}

int cmd_abel(const std::string& path) {
    std::istringstream in(slurp(path));
    auto g = qf::parse_gpres(in);
    std::cout << qf::abelianization(g).display() << "\n";
    return kExitOk;
}

int cmd_extend(const std::string& path, bool want_order, bool want_circular, const std::string& side_s,
               std::uint64_t seed, long samples, bool no_gate) {
    std::istringstream in(slurp(path));
    auto spec = qf::parse_cocycle(in, load_qnd);
    qf::Side side = side_s == "left" ? qf::Side::left : qf::Side::right;
    qf::SampleSpec sample_spec{seed, samples, std::max(1L, samples / 10)}; // 10^4 triples, 10^3 quadruples


    auto print_header = [&]() {
        std::cout << "extend 1\nseed " << seed << "\nsamples " << samples << "\n";
    };

    if (spec.base_kind == qf::CocycleSpec::Base::circle) {
        auto base = qf::circle_quandle(spec.circle_t);
        if (want_order) throw qf::input_error("--order needs a finite base; use --circular over the circle");
        if (want_circular) {
            auto rep = qf::extension_circular_order(spec.t, base, side, sample_spec, no_gate);
            print_header();
            if (rep.refused) {
                std::cout << "refused: " << rep.refusal << "\n";
                return kExitInput;
            }
            std::cout << "circular order: validity " << (rep.valid ? "ok" : "FAIL") << ", "
                      << qf::side_name(side) << " invariance " << (rep.invariant ? "ok" : "FAIL") << "\n";
            if (!rep.violation.empty()) std::cout << "violation: " << rep.violation << "\n";
            return rep.valid && rep.invariant ? kExitOk : kExitNone;
        }
        auto ext = qf::build_circle_extension(spec.t, base);
        auto ax = qf::lazy_axioms_check(ext, sample_spec);
        print_header();
        std::cout << "lazy extension over " << base.carrier.name << ": axioms " << (ax.ok ? "ok" : "FAIL")
                  << "\n";
        if (!ax.ok) std::cout << "violation: " << ax.violation << "\n";
        return ax.ok ? kExitOk : kExitInput;
    }

    if (!spec.affine) {
        qf::DynamicalCocycle c{spec.base, static_cast<int>(spec.fiber_m), spec.alpha};
        if (auto v = qf::validate_dynamical(c)) throw qf::input_error("invalid cocycle: " + v->describe());
        if (want_order || want_circular)
            throw qf::input_error("order constructions need an affine cocycle over a rational fiber");
        std::cout << qf::emit_qnd(qf::build_extension(c));
        return kExitOk;
    }
    if (spec.fiber_kind == qf::CocycleSpec::Fiber::zmod) {
        qf::ModRing ring{spec.fiber_m};
        if (spec.t.sign() < 0 || denominator(spec.t) != 1)
            throw qf::input_error("zmod fibers need a nonnegative integer t");
        long tval = ring.norm(static_cast<long>(numerator(spec.t).convert_to<long long>()));
        auto aff = qf::lambda_module_cocycle(spec.base, ring, tval);
        if (auto v = qf::validate_affine(aff, ring.all()))
            throw qf::input_error("invalid cocycle: " + v->describe());
        if (want_order || want_circular) throw qf::input_error("order constructions need a rational fiber");
        std::cout << qf::emit_qnd(qf::build_extension(qf::to_dynamical(aff)));
        return kExitOk;
    }

    // rational fiber over a finite base
    if (want_circular)
        throw qf::input_error("--circular needs the circle base; use --order on finite bases");
    std::vector<int> id_ranks(spec.base.size());
    for (int i = 0; i < spec.base.size(); ++i) id_ranks[i] = i;
    auto base_order = qf::TotalOrder::from_ranks(id_ranks);
    std::optional<std::vector<std::vector<qf::Rational>>> kappa;
    if (!spec.kappa_zero) kappa = spec.kappa;
    if (want_order) {
        auto rep = qf::extension_total_order(spec.base, spec.t, kappa, base_order, side, sample_spec, no_gate);
        print_header();
        if (rep.refused) {
            std::cout << "refused: " << rep.refusal << "\n";
            return kExitInput;
        }
        std::cout << "base order " << qf::side_name(side) << "-invariant: "
                  << (rep.base_order_invariant ? "yes" : "no") << "\n";
        std::cout << "lex order: " << qf::side_name(side) << " invariance " << (rep.invariant ? "ok" : "FAIL")
                  << "\n";
        if (!rep.violation.empty()) std::cout << "violation: " << rep.violation << "\n";
        return rep.invariant ? kExitOk : kExitNone;
    }
    auto aff = qf::lambda_module_cocycle(spec.base, qf::RationalRing{}, spec.t);
    if (!spec.kappa_zero) aff.kappa = spec.kappa;
    qf::Rng rng(seed);
    std::vector<qf::Rational> fiber_samples;
    for (int i = 0; i < 64; ++i) fiber_samples.push_back(rng.small_rational());
    if (auto v = qf::validate_affine(aff, fiber_samples))
        throw qf::input_error("invalid cocycle: " + v->describe());
    auto ext = qf::build_extension_lazy(aff);
    auto ax = qf::lazy_axioms_check(ext, sample_spec);
    print_header();
    std::cout << "lazy extension over finite base: axioms " << (ax.ok ? "ok" : "FAIL") << "\n";
    if (!ax.ok) std::cout << "violation: " << ax.violation << "\n";
    return ax.ok ? kExitOk : kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quandle toolkit: construction, orderability, extensions, enveloping groups"};
    app.require_subcommand(1);

    std::string file, file2, side = "right", kind = "circular";
    int max_n = 8, torus_m = 2, torus_n = 3, power = 2, max_elements = 10000, env_n = 0;
    bool no_prune = false, want_order = false, want_circular = false, no_gate = false;
    std::uint64_t seed = 0;
    long samples = 10000;

    auto* c_check = app.add_subcommand("check", "validate a QND operation table");
    c_check->add_option("file", file, "QND file or -")->required();

    auto* c_classify = app.add_subcommand("classify", "classification report of a quandle");
    c_classify->add_option("file", file, "QND file or -")->required();

    auto* c_order = app.add_subcommand("order", "search for an invariant (circular) ordering");
    c_order->add_option("file", file, "QND file or -")->required();
    c_order->add_option("--side", side, "right|left")->check(CLI::IsMember({"right", "left"}));
    c_order->add_option("--kind", kind, "total|circular")->check(CLI::IsMember({"total", "circular"}));
    c_order->add_option("--max", max_n, "size bound for the exhaustive search");
    c_order->add_flag("--no-prune", no_prune, "disable theorem-derived pruning");

    auto* c_iso = app.add_subcommand("iso", "isomorphism witness between two quandles");
    c_iso->add_option("file1", file, "QND file or -")->required();
    c_iso->add_option("file2", file2, "QND file")->required();

    auto* c_torus = app.add_subcommand("torus", "torus link quandle presentation");
    c_torus->add_option("m", torus_m, "strand count")->required();
    c_torus->add_option("n", torus_n, "twist count")->required();

    auto* c_pd = app.add_subcommand("pd2pres", "presentation from a signed PD code");
    c_pd->add_option("file", file, "PD file or -")->required();

    auto* c_nq = app.add_subcommand("nquandle", "coset enumeration of the n-quandle");
    c_nq->add_option("file", file, "qpres file or -")->required();
    c_nq->add_option("-n", power, "power of the right translations")->required();
    c_nq->add_option("--max", max_elements, "coset limit");

    auto* c_env = app.add_subcommand("env", "enveloping group presentation");
    c_env->add_option("file", file, "qnd or qpres file or -")->required();
    c_env->add_option("-n", env_n, "0 for Env, n >= 2 for Env_n");

    auto* c_abel = app.add_subcommand("abel", "abelianization via integer Smith normal form");
    c_abel->add_option("file", file, "gpres file or -")->required();

    auto* c_ext = app.add_subcommand("extend", "build/validate a cocycle extension");
    c_ext->add_option("file", file, "cocycle spec file or -")->required();
    c_ext->add_flag("--order", want_order, "construct and check the lexicographic order");
    c_ext->add_flag("--circular", want_circular, "construct and check the circular ordering");
    c_ext->add_option("--side", side, "right|left")->check(CLI::IsMember({"right", "left"}));
    c_ext->add_option("--seed", seed, "sampling seed");
    c_ext->add_option("--samples", samples, "sample count");
    c_ext->add_flag("--no-gate", no_gate, "run even when a hypothesis fails");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (c_check->parsed()) return cmd_check(file);
        if (c_classify->parsed()) return cmd_classify(file);
        if (c_order->parsed()) return cmd_order(file, side, kind, max_n, no_prune);
        if (c_iso->parsed()) return cmd_iso(file, file2);
        if (c_torus->parsed()) return cmd_torus(torus_m, torus_n);
        if (c_pd->parsed()) return cmd_pd2pres(file);
        if (c_nq->parsed()) return cmd_nquandle(file, power, max_elements);
        if (c_env->parsed()) return cmd_env(file, env_n);
        if (c_abel->parsed()) return cmd_abel(file);
        if (c_ext->parsed()) return cmd_extend(file, want_order, want_circular, side, seed, samples, no_gate);
    } catch (const qf::limit_error& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kExitLimit;
    } catch (const qf::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
