// Command-line front end: edge weight tables, verification suites,
// measure tables, and seeded path sampling.  All numbers are exact
// rationals rendered as "num/den"; exit codes: 0 ok, 1 verification
// failure, 2 usage error.
#include <hlb/ffield.hpp>
#include <hlb/graphs.hpp>
#include <hlb/hl.hpp>
#include <hlb/measures.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

using namespace hlb;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --output is resolved against $HLB_OUTPUT_DIR when relative.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (path.empty()) return;
        std::string full = path;
        if (path[0] != '/') {
            if (const char* dir = std::getenv("HLB_OUTPUT_DIR"))
                full = std::string(dir) + "/" + path;
        }
        file_ = std::make_unique<std::ofstream>(full);
        if (!*file_) throw UsageError("cannot open output file: " + full);
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

Rational parse_param(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw UsageError("cannot parse rational: " + s);
    }
}

std::vector<Rational> parse_list(const std::vector<std::string>& in) {
    std::vector<Rational> out;
    for (const auto& s : in) out.push_back(parse_param(s));
    return out;
}

ordered_json partition_json(const Partition& p) { return ordered_json(p.parts()); }

BranchingGraph build_graph(const std::string& kind_s, int lmax, const std::string& t_s, int q,
                           bool force) {
    GraphKind kind = kind_from_name(kind_s);
    bool two = kind_is_two_step(kind);
    int cap = two ? 4 : 8;
    if (lmax > cap && !force)
        throw UsageError("lmax " + std::to_string(lmax) + " exceeds the desk-scale cap " +
                         std::to_string(cap) + " for kind " + kind_s + " (use --force)");
    Rational param(0);
    switch (kind) {
        case GraphKind::Young: break;
        case GraphKind::HL:
        case GraphKind::HLEven:
        case GraphKind::HLOdd:
            if (t_s.empty()) throw UsageError("kind " + kind_s + " requires --t");
            param = parse_param(t_s);
            break;
        default:
            if (q == 0) throw UsageError("kind " + kind_s + " requires --q");
            param = q;
    }
    try {
        return BranchingGraph::build(kind, lmax, param);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// ---- weights ----------------------------------------------------------

int cmd_weights(const std::string& kind, int lmax, const std::string& t_s, int q,
                const std::string& format, const std::string& output, bool force) {
    BranchingGraph g = build_graph(kind, lmax, t_s, q, force);
    OutputSink sink(output);
    auto& os = sink.stream();
    if (format == "json") {
        os << g.export_json();
    } else if (format == "dot") {
        os << g.export_dot();
    } else if (format == "csv") {
        os << "level,from,to,weight\n";
        for (const auto& e : g.edges())
            os << e.level << ",\"" << g.vertex(e, false).str() << "\",\""
               << g.vertex(e, true).str() << "\"," << rat_str(g.weight_value(e)) << "\n";
    } else {
        throw UsageError("unsupported format: " + format);
    }
    return 0;
}

// ---- verify -----------------------------------------------------------

struct Reporter {
    std::ostream& os;
    bool all_ok = true;
    void report(const std::string& name, bool ok) {
        os << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_ok &= ok;
    }
};

void guard(int value, int cap, const std::string& what, bool force) {
    if (value > cap && !force)
        throw UsageError(what + " " + std::to_string(value) + " exceeds the desk-scale cap " +
                         std::to_string(cap) + " (use --force)");
}

int cmd_verify(const std::string& suite, int q, int max_size, int max_m,
               const std::string& output, bool force) {
    OutputSink sink(output);
    Reporter rep{sink.stream()};

    if (suite == "gl-oracle") {
        guard(max_size, 4, "--max-size", force);
        for (int n = 0; n <= max_size; ++n)
            for (const auto& mu : enumerate_partitions(n)) {
                bool ok = true;
                long long total = 0;
                for (const auto& lam : enumerate_partitions(n + 1)) {
                    long long b = count_L_bruteforce(mu, lam, q);
                    ok &= b == L_formula(mu, lam, q);
                    total += b;
                }
                Integer expect = boost::multiprecision::pow(Integer(q), n);
                ok &= Integer(total) == expect;
                rep.report("gl-oracle q=" + std::to_string(q) + " mu=" + mu.str(), ok);
            }
    } else if (suite == "u-oracle") {
        guard(max_size, 3, "--max-size", force);
        for (int n = 0; n <= max_size; ++n)
            for (const auto& mu : enumerate_partitions(n)) {
                bool ok = true;
                long long total = 0;
                for (const auto& lam : enumerate_partitions(n + 2)) {
                    long long b = count_Ltilde_bruteforce(mu, lam, q);
                    ok &= b == Ltilde_formula(mu, lam, q);
                    total += b;
                }
                Integer expect = boost::multiprecision::pow(Integer(q), 2 * n + 1);
                ok &= Integer(total) == expect;
                rep.report("u-oracle q=" + std::to_string(q) + " mu=" + mu.str(), ok);
            }
    } else if (suite == "pieri") {
        guard(max_size, 6, "--max-size", force);
        for (int n = 0; n <= max_size; ++n)
            for (const auto& mu : enumerate_partitions(n)) {
                rep.report("pieri-p1 mu=" + mu.str(), verify_pieri_p1(mu));
                rep.report("pieri-p2 mu=" + mu.str(), verify_pieri_p2(mu));
            }
    } else if (suite == "gauge") {
        auto f = counting_gauge(q);
        auto ggl = BranchingGraph::build(GraphKind::GL, 5, Rational(q));
        auto ghl = BranchingGraph::build(GraphKind::HL, 5, Rational(1, q));
        rep.report("gauge gl", check_similarity(ggl, ghl, f));
        auto gue = BranchingGraph::build(GraphKind::UEven, 2, Rational(q));
        auto ghe = BranchingGraph::build(GraphKind::HLEven, 2, Rational(-1, q));
        rep.report("gauge u-even", check_similarity(gue, ghe, f));
        auto guo = BranchingGraph::build(GraphKind::UOdd, 2, Rational(q));
        auto gho = BranchingGraph::build(GraphKind::HLOdd, 2, Rational(-1, q));
        rep.report("gauge u-odd", check_similarity(guo, gho, f));
    } else if (suite == "harmonic") {
        Rational t(1, q), tn(-1, q);
        auto g = BranchingGraph::build(GraphKind::HL, 5, t);
        auto harm = [&](const OmegaPoint& w) {
            return [&g, w](const Partition& lam) { return gl_harmonic(lam, w); };
        };
        rep.report("harmonic gl haar", is_harmonic(g, harm(OmegaPoint::haar(t))));
        rep.report("harmonic gl plancherel", is_harmonic(g, harm(OmegaPoint::plancherel(t))));
        rep.report("harmonic gl generic",
                   is_harmonic(g, harm(OmegaPoint({Rational(1, 2)}, {Rational(1, 8)}, t))));
        rep.report("harmonic gl dirac", is_harmonic(g, [](const Partition& lam) {
                       return Rational(lam == Partition(std::vector<int>(lam.size(), 1)) ? 1 : 0);
                   }));
        for (bool odd : {false, true}) {
            auto gu = BranchingGraph::build(odd ? GraphKind::HLOdd : GraphKind::HLEven, 2, tn);
            std::string tag = odd ? " odd" : " even";
            auto uharm = [&](const HLFunctional& f) {
                return [f, tn](const Partition& lam) { return unitary_harmonic(lam, f, tn); };
            };
            rep.report("harmonic u plancherel" + tag,
                       is_harmonic(gu, uharm(plancherel_functional(
                                           odd ? HLFunctional::Odd : HLFunctional::Even, tn))));
            rep.report("harmonic u principal-inf" + tag,
                       is_harmonic(gu, uharm(principal_functional(0, tn))));
            rep.report("harmonic u principal-2" + tag,
                       is_harmonic(gu, uharm(principal_functional(2, tn))));
            rep.report("harmonic u two-point" + tag,
                       is_harmonic(gu, uharm(two_point_functional(Rational(4, 5), Rational(-3, 5),
                                                                  tn))));
        }
    } else if (suite == "c0") {
        guard(max_m, 3, "--max-m", force);
        for (int m = 1; m <= max_m; ++m)
            rep.report("c0 m=" + std::to_string(m) + " q=" + std::to_string(q),
                       c0_bruteforce(m, q) == c0_formula(m, q));
    } else if (suite == "census") {
        guard(max_size, 3, "--max-size", force);
        for (int n = 1; n <= max_size; ++n) {
            auto census = nilpotent_census(n, q);
            bool ok = true;
            Integer total = 0;
            for (const auto& [lam, cnt] : census) {
                ok &= Integer(cnt) == class_size(lam, q);
                total += cnt;
            }
            ok &= total == boost::multiprecision::pow(Integer(q), (long)n * (n - 1));
            rep.report("census n=" + std::to_string(n) + " q=" + std::to_string(q), ok);
        }
    } else {
        throw UsageError("unknown suite: " + suite);
    }
    return rep.all_ok ? 0 : 1;
}

// ---- measure ----------------------------------------------------------

struct MeasureFamily {
    bool unitary = false;
    bool odd = false;
    std::function<Rational(const Partition&)> mass; // cylinder mass
    std::function<Rational(int)> level_mass;        // GL only; empty otherwise
};

MeasureFamily make_family(const std::string& family, int q, const std::vector<Rational>& alpha,
                          const std::vector<Rational>& beta, int m, const Rational& a1,
                          const Rational& a2) {
    MeasureFamily out;
    Rational t(1, q), tn(-1, q);
    auto gl = [&](const OmegaPoint& w) {
        out.mass = [w, q](const Partition& lam) { return gl_cylinder_mass(lam, w, q); };
        out.level_mass = [w, q](int n) { return gl_level_mass(n, w, q); };
    };
    if (family == "gl-haar") {
        gl(OmegaPoint::haar(t));
    } else if (family == "gl-planch") {
        gl(OmegaPoint::plancherel(t));
    } else if (family == "gl-omega") {
        gl(OmegaPoint(alpha, beta, t));
    } else {
        out.unitary = true;
        if (family.rfind("u-even-", 0) == 0) {
            out.odd = false;
        } else if (family.rfind("u-odd-", 0) == 0) {
            out.odd = true;
        } else {
            throw UsageError("unknown family: " + family);
        }
        std::string tail = family.substr(family.find('-', 2) + 1);
        HLFunctional f = [&] {
            if (tail == "planch")
                return plancherel_functional(out.odd ? HLFunctional::Odd : HLFunctional::Even, tn);
            if (tail == "haar") return principal_functional(0, tn);
            if (tail == "principal") return principal_functional(m, tn);
            if (tail == "twopoint") return two_point_functional(a1, a2, tn);
            throw UsageError("unknown family: " + family);
        }();
        out.mass = [f, q](const Partition& lam) { return unitary_cylinder_mass(lam, f, q); };
    }
    return out;
}

int cmd_measure(const std::string& family, int q, int lmax, const std::vector<std::string>& alpha_s,
                const std::vector<std::string>& beta_s, int m, const std::string& a1_s,
                const std::string& a2_s, const std::string& format, const std::string& output,
                bool force) {
    if (q == 0) throw UsageError("measure requires --q");
    MeasureFamily fam;
    try {
        fam = make_family(family, q, parse_list(alpha_s), parse_list(beta_s), m,
                          a1_s.empty() ? Rational(4, 5) : parse_param(a1_s),
                          a2_s.empty() ? Rational(-3, 5) : parse_param(a2_s));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    guard(lmax, fam.unitary ? 4 : 8, "--lmax", force);

    int root = fam.unitary && fam.odd ? 1 : 0, step = fam.unitary ? 2 : 1;
    OutputSink sink(output);
    auto& os = sink.stream();
    ordered_json jlevels = ordered_json::array();
    bool csv = format == "csv";
    if (format != "csv" && format != "json") throw UsageError("unsupported format: " + format);
    if (csv) {
        os << "level,partition,n_stat,mass_num,mass_den";
        if (fam.level_mass) os << ",level_mass_num,level_mass_den";
        os << "\n";
    }
    for (int l = 0; l <= lmax; ++l) {
        int n = root + step * l;
        ordered_json jlevel;
        jlevel["level"] = l;
        if (fam.level_mass) {
            Rational lm = fam.level_mass(n);
            jlevel["level_mass"] = rat_str(lm);
        }
        auto jrows = ordered_json::array();
        for (const auto& lam : enumerate_partitions(n)) {
            Rational mass = fam.mass(lam);
            if (csv) {
                os << l << ",\"" << lam.str() << "\"," << lam.n_stat() << ","
                   << numerator(mass).str() << "," << denominator(mass).str();
                if (fam.level_mass) {
                    Rational lm = fam.level_mass(n);
                    os << "," << numerator(lm).str() << "," << denominator(lm).str();
                }
                os << "\n";
            } else {
                ordered_json row;
                row["partition"] = partition_json(lam);
                row["n_stat"] = lam.n_stat();
                row["mass"] = rat_str(mass);
                jrows.push_back(row);
            }
        }
        jlevel["rows"] = jrows;
        jlevels.push_back(jlevel);
    }
    if (!csv) {
        ordered_json doc;
        doc["family"] = family;
        doc["q"] = q;
        doc["levels"] = jlevels;
        os << doc.dump(2) << "\n";
    }
    return 0;
}

// ---- sample -----------------------------------------------------------

int cmd_sample(const std::string& kind_s, const std::string& family, const std::string& t_s,
               int q, int steps, long long count, uint64_t seed, const std::vector<std::string>& alpha_s,
               const std::vector<std::string>& beta_s, int m, const std::string& a1_s,
               const std::string& a2_s, const std::string& output, bool force) {
    GraphKind kind = kind_from_name(kind_s);
    if (kind == GraphKind::Young) throw UsageError("sampling needs a weighted kind");
    if (count < 0 || steps < 0) throw UsageError("negative count/steps");
    if (count * (steps + 1) > 2000000 && !force)
        throw UsageError("count*steps exceeds the desk-scale cap (use --force)");
    BranchingGraph g = build_graph(kind_s, steps, t_s, q, force);

    // The harmonic function, built at the graph's own t (or gauge-lifted
    // to the integer-weighted kinds at t = +-1/q).
    bool counting = kind == GraphKind::GL || kind == GraphKind::UEven || kind == GraphKind::UOdd;
    bool unitary = kind_is_two_step(kind);
    Rational t = counting ? (unitary ? Rational(-1, q) : Rational(1, q)) : g.param();
    std::function<Rational(const Partition&)> base;
    try {
        if (!unitary) {
            OmegaPoint w = [&] {
                if (family == "haar") return OmegaPoint::haar(t);
                if (family == "planch") return OmegaPoint::plancherel(t);
                if (family == "omega") return OmegaPoint(parse_list(alpha_s), parse_list(beta_s), t);
                throw UsageError("unknown family: " + family);
            }();
            base = [w](const Partition& lam) { return gl_harmonic(lam, w); };
        } else {
            bool odd = kind_is_odd(kind);
            HLFunctional f = [&] {
                if (family == "planch")
                    return plancherel_functional(odd ? HLFunctional::Odd : HLFunctional::Even, t);
                if (family == "haar") return principal_functional(0, t);
                if (family == "principal") return principal_functional(m, t);
                if (family == "twopoint")
                    return two_point_functional(a1_s.empty() ? Rational(4, 5) : parse_param(a1_s),
                                                a2_s.empty() ? Rational(-3, 5) : parse_param(a2_s),
                                                t);
                throw UsageError("unknown family: " + family);
            }();
            base = [f, t](const Partition& lam) { return unitary_harmonic(lam, f, t); };
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    VertexFunction phi = base;
    if (counting) {
        auto gauge = counting_gauge(q);
        phi = [base, gauge](const Partition& lam) { return base(lam) * gauge(lam); };
    }

    OutputSink sink(output);
    auto& os = sink.stream();
    for (long long i = 0; i < count; ++i) {
        auto path = markov_growth(g, phi, steps, seed + (uint64_t)i);
        for (size_t s = 0; s < path.size(); ++s) {
            ordered_json rec;
            rec["path"] = i;
            rec["step"] = (int)s;
            rec["partition"] = partition_json(path[s]);
            os << rec.dump() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for deformed branching graphs and nilpotent counting"};
    app.require_subcommand(1);

    std::string kind, t_s, format, output, suite, family, a1_s, a2_s;
    std::vector<std::string> alpha_s, beta_s;
    int q = 0, lmax = 0, max_size = -1, max_m = 3, m = 1, steps = 1;
    long long count = 1;
    uint64_t seed = 0;
    bool force = false;

    auto* w = app.add_subcommand("weights", "Edge weight table for a branching graph");
    w->add_option("--kind", kind, "young|hl|gl|hl-even|hl-odd|u-even|u-odd")->required();
    w->add_option("--lmax", lmax, "levels to build")->required();
    w->add_option("--t", t_s, "deformation parameter as num/den");
    w->add_option("--q", q, "odd prime");
    w->add_option("--format", format, "csv|json|dot")->default_val("csv");
    w->add_option("--output", output, "output file (default stdout)");
    w->add_flag("--force", force, "override desk-scale caps");

    auto* v = app.add_subcommand("verify", "Run a verification suite");
    v->add_option("--suite", suite, "gl-oracle|u-oracle|pieri|gauge|harmonic|c0|census")
        ->required();
    v->add_option("--q", q, "odd prime")->default_val(3);
    v->add_option("--max-size", max_size, "partition size bound");
    v->add_option("--max-m", max_m, "dimension bound for c0");
    v->add_option("--output", output, "output file (default stdout)");
    v->add_flag("--force", force, "override desk-scale caps");

    auto* me = app.add_subcommand("measure", "Cylinder-mass table for a measure family");
    me->add_option("--family", family,
                   "gl-haar|gl-planch|gl-omega|u-{even,odd}-{planch,haar,principal,twopoint}")
        ->required();
    me->add_option("--q", q, "odd prime")->required();
    me->add_option("--lmax", lmax, "levels")->required();
    me->add_option("--alpha", alpha_s, "alpha entries as num/den");
    me->add_option("--beta", beta_s, "beta entries as num/den");
    me->add_option("--m", m, "rank for principal families (0 = infinite)");
    me->add_option("--a1", a1_s, "two-point a1");
    me->add_option("--a2", a2_s, "two-point a2");
    me->add_option("--format", format, "csv|json")->default_val("csv");
    me->add_option("--output", output, "output file (default stdout)");
    me->add_flag("--force", force, "override desk-scale caps");

    auto* sa = app.add_subcommand("sample", "Sample growth paths (JSON lines)");
    sa->add_option("--kind", kind, "hl|gl|hl-even|hl-odd|u-even|u-odd")->required();
    sa->add_option("--family", family, "haar|planch|omega|principal|twopoint")->required();
    sa->add_option("--t", t_s, "deformation parameter as num/den");
    sa->add_option("--q", q, "odd prime");
    sa->add_option("--steps", steps, "path length")->required();
    sa->add_option("--count", count, "number of paths")->default_val(1);
    sa->add_option("--seed", seed, "base seed; path i uses seed+i")->default_val(0);
    sa->add_option("--alpha", alpha_s, "alpha entries as num/den");
    sa->add_option("--beta", beta_s, "beta entries as num/den");
    sa->add_option("--m", m, "rank for principal families (0 = infinite)");
    sa->add_option("--a1", a1_s, "two-point a1");
    sa->add_option("--a2", a2_s, "two-point a2");
    sa->add_option("--output", output, "output file (default stdout)");
    sa->add_flag("--force", force, "override desk-scale caps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help counts as success
    }

    try {
        if (*w) return cmd_weights(kind, lmax, t_s, q, format, output, force);
        if (*v) {
            if (max_size < 0)
                max_size = suite == "u-oracle" ? 3 : suite == "census" ? 3
                                               : suite == "gl-oracle"  ? 4
                                                                       : 6;
            return cmd_verify(suite, q, max_size, max_m, output, force);
        }
        if (*me)
            return cmd_measure(family, q, lmax, alpha_s, beta_s, m, a1_s, a2_s, format, output,
                               force);
        if (*sa)
            return cmd_sample(kind, family, t_s, q, steps, count, seed, alpha_s, beta_s, m, a1_s,
                              a2_s, output, force);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
