#include "hlb/graphs.hpp"

#include "hlb/ffield.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hlb {

bool kind_is_two_step(GraphKind k) {
    return k == GraphKind::HLEven || k == GraphKind::HLOdd || k == GraphKind::UEven ||
           k == GraphKind::UOdd;
}

bool kind_is_odd(GraphKind k) { return k == GraphKind::HLOdd || k == GraphKind::UOdd; }

std::string kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::Young: return "young";
        case GraphKind::HL: return "hl";
        case GraphKind::GL: return "gl";
        case GraphKind::HLEven: return "hl-even";
        case GraphKind::HLOdd: return "hl-odd";
        case GraphKind::UEven: return "u-even";
        case GraphKind::UOdd: return "u-odd";
    }
    throw std::logic_error("unknown kind");
}

GraphKind kind_from_name(const std::string& name) {
    for (GraphKind k : {GraphKind::Young, GraphKind::HL, GraphKind::GL, GraphKind::HLEven,
                        GraphKind::HLOdd, GraphKind::UEven, GraphKind::UOdd})
        if (kind_name(k) == name) return k;
    throw std::invalid_argument("unknown graph kind: " + name);
}

namespace {
int require_odd_prime(const Rational& param) {
    if (denominator(param) != 1) throw std::invalid_argument("q must be an integer");
    Integer qi = numerator(param);
    if (qi < 3 || qi > 1000000) throw std::invalid_argument("q out of range");
    int q = (int)qi;
    (void)FieldCtx(q); // validates primality/oddness
    return q;
}
} // namespace

BranchingGraph BranchingGraph::build(GraphKind kind, int lmax, const Rational& param) {
    if (lmax < 0) throw std::invalid_argument("lmax must be >= 0");
    BranchingGraph g;
    g.kind_ = kind;
    g.param_ = param;
    g.lmax_ = lmax;

    int q = 0;
    switch (kind) {
        case GraphKind::Young: break;
        case GraphKind::HL:
            if (!(param > 0 && param < 1)) throw std::invalid_argument("need t in (0,1)");
            break;
        case GraphKind::HLEven:
        case GraphKind::HLOdd:
            if (!(param > -1 && param < 0)) throw std::invalid_argument("need t in (-1,0)");
            break;
        case GraphKind::GL:
        case GraphKind::UEven:
        case GraphKind::UOdd:
            q = require_odd_prime(param);
            break;
    }

    bool two = kind_is_two_step(kind);
    int root = kind_is_odd(kind) ? 1 : 0;
    for (int l = 0; l <= lmax; ++l)
        g.levels_.push_back(enumerate_partitions(root + (two ? 2 * l : l)));

    for (int l = 0; l < lmax; ++l) {
        const auto& next = g.levels_[l + 1];
        for (int i = 0; i < (int)g.levels_[l].size(); ++i) {
            const Partition& mu = g.levels_[l][i];
            auto add_edge = [&](const Partition& lam, RatFun w) {
                if (w.is_zero()) return;
                auto it = std::find(next.begin(), next.end(), lam);
                g.edges_.push_back({l, i, (int)(it - next.begin()), std::move(w)});
            };
            switch (kind) {
                case GraphKind::Young:
                    for (const auto& [lam, k] : single_covers(mu)) {
                        (void)k;
                        add_edge(lam, RatFun(1L));
                    }
                    break;
                case GraphKind::HL:
                    for (const auto& [lam, k] : single_covers(mu)) {
                        (void)k;
                        add_edge(lam, psi_single(mu, lam));
                    }
                    break;
                case GraphKind::GL:
                    for (const auto& [lam, k] : single_covers(mu)) {
                        (void)k;
                        add_edge(lam, RatFun(Rational(L_formula(mu, lam, q))));
                    }
                    break;
                case GraphKind::HLEven:
                case GraphKind::HLOdd:
                    for (const auto& [lam, dc] : double_covers(mu)) {
                        (void)dc;
                        add_edge(lam, xi_double(mu, lam));
                    }
                    break;
                case GraphKind::UEven:
                case GraphKind::UOdd:
                    for (const auto& [lam, dc] : double_covers(mu)) {
                        (void)dc;
                        add_edge(lam, RatFun(Rational(Ltilde_formula(mu, lam, q))));
                    }
                    break;
            }
        }
    }

    // every edge weight must be strictly positive at the parameter
    for (const auto& e : g.edges_)
        if (g.weight_value(e) <= 0) throw std::logic_error("nonpositive edge weight");
    return g;
}

Rational BranchingGraph::weight_value(const GraphEdge& e) const {
    switch (kind_) {
        case GraphKind::HL:
        case GraphKind::HLEven:
        case GraphKind::HLOdd:
            return e.weight.eval(param_);
        default:
            return e.weight.eval(Rational(0)); // constant
    }
}

bool BranchingGraph::check_predecessors() const {
    for (int l = 1; l <= lmax_; ++l) {
        std::vector<bool> has(levels_[l].size(), false);
        for (const auto& e : edges_)
            if (e.level == l - 1 && weight_value(e) != 0) has[e.to] = true;
        if (!std::all_of(has.begin(), has.end(), [](bool b) { return b; })) return false;
    }
    return true;
}

RatFun BranchingGraph::weighted_path_sum(const Partition& lam) const {
    std::vector<std::vector<RatFun>> acc;
    for (const auto& lvl : levels_) acc.emplace_back(lvl.size());
    acc[0][0] = RatFun(1L);
    for (const auto& e : edges_)
        acc[e.level + 1][e.to] += acc[e.level][e.from] * e.weight;
    for (int l = 0; l <= lmax_; ++l) {
        auto it = std::find(levels_[l].begin(), levels_[l].end(), lam);
        if (it != levels_[l].end()) return acc[l][it - levels_[l].begin()];
    }
    throw std::invalid_argument("partition is not a vertex of this graph");
}

std::string BranchingGraph::export_dot() const {
    std::string s = "digraph \"" + kind_name(kind_) + "\" {\n  rankdir=LR;\n";
    for (int l = 0; l <= lmax_; ++l)
        for (const auto& v : levels_[l])
            s += "  \"" + std::to_string(l) + ":" + v.str() + "\" [label=\"" + v.str() + "\"];\n";
    for (const auto& e : edges_) {
        s += "  \"" + std::to_string(e.level) + ":" + vertex(e, false).str() + "\" -> \"" +
             std::to_string(e.level + 1) + ":" + vertex(e, true).str() + "\" [label=\"" +
             e.weight.str() + "\"];\n";
    }
    return s + "}\n";
}

std::string BranchingGraph::export_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(kind_);
    j["param"] = rat_str(param_);
    auto levels = nlohmann::ordered_json::array();
    for (const auto& lvl : levels_) {
        auto jl = nlohmann::ordered_json::array();
        for (const auto& v : lvl) jl.push_back(v.parts());
        levels.push_back(jl);
    }
    j["levels"] = levels;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : edges_) {
        nlohmann::ordered_json je;
        je["from"] = vertex(e, false).parts();
        je["to"] = vertex(e, true).parts();
        je["weight"] = e.weight.str();
        edges.push_back(je);
    }
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

bool check_similarity(const BranchingGraph& gprime, const BranchingGraph& g,
                      const VertexFunction& gauge) {
    if (gprime.levels() != g.levels() || gprime.edges().size() != g.edges().size())
        return false;
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const auto &e = g.edges()[i], &ep = gprime.edges()[i];
        if (e.level != ep.level || e.from != ep.from || e.to != ep.to) return false;
        const Partition &mu = g.vertex(e, false), &lam = g.vertex(e, true);
        if (gprime.weight_value(ep) != g.weight_value(e) * gauge(mu) / gauge(lam))
            return false;
    }
    return true;
}

bool is_harmonic(const BranchingGraph& g, const VertexFunction& phi) {
    for (int l = 0; l < g.lmax(); ++l) {
        std::vector<Rational> sums(g.levels()[l].size(), Rational(0));
        for (const auto& e : g.edges())
            if (e.level == l)
                sums[e.from] += g.weight_value(e) * phi(g.vertex(e, true));
        for (size_t i = 0; i < sums.size(); ++i)
            if (sums[i] != phi(g.levels()[l][i])) return false;
    }
    return true;
}

VertexFunction counting_gauge(int q) {
    return [q](const Partition& lam) {
        long n = lam.size();
        return rat_pow(Rational(q), lam.n_stat() - n * (n - 1) / 2);
    };
}

} // namespace hlb
