#pragma once
#include "hlb/hl.hpp"
#include "hlb/partition.hpp"
#include "hlb/poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hlb {

// The seven graded graphs.  Young: plain Young lattice, unit weights.
// HL: single-box growth with psi weights, t in (0,1).
// GL: single-box growth with integer augmentation counts, odd prime q.
// HLEven/HLOdd: two-box growth with xi weights, t in (-1,0), rooted at
// the empty partition / the one-box partition.
// UEven/UOdd: two-box growth with integer augmentation counts, odd prime q.
enum class GraphKind { Young, HL, GL, HLEven, HLOdd, UEven, UOdd };

bool kind_is_two_step(GraphKind k);
bool kind_is_odd(GraphKind k);
std::string kind_name(GraphKind k);
GraphKind kind_from_name(const std::string& name);

struct GraphEdge {
    int level;   // level of the source vertex
    int from;    // index into levels[level]
    int to;      // index into levels[level+1]
    RatFun weight;
};

class BranchingGraph {
public:
    static BranchingGraph build(GraphKind kind, int lmax, const Rational& param);

    GraphKind kind() const { return kind_; }
    const Rational& param() const { return param_; }
    int lmax() const { return lmax_; }
    const std::vector<std::vector<Partition>>& levels() const { return levels_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const Partition& vertex(const GraphEdge& e, bool target) const {
        return levels_[e.level + (target ? 1 : 0)][target ? e.to : e.from];
    }

    // Edge weight specialized at the graph parameter (t, or q for the
    // integer-weighted kinds, whose weights are already constants).
    Rational weight_value(const GraphEdge& e) const;

    bool check_predecessors() const;
    RatFun weighted_path_sum(const Partition& lam) const;

    std::string export_dot() const;
    std::string export_json() const;

private:
    BranchingGraph() = default;
    GraphKind kind_{};
    Rational param_;
    int lmax_ = 0;
    std::vector<std::vector<Partition>> levels_;
    std::vector<GraphEdge> edges_;
};

using VertexFunction = std::function<Rational(const Partition&)>;

// W'(lam, mu) = W(lam, mu) f(mu) / f(lam) on every edge.
bool check_similarity(const BranchingGraph& gprime, const BranchingGraph& g,
                      const VertexFunction& gauge);

// phi(mu) = sum over edges mu -> lam of W(lam, mu) phi(lam), below the top level.
bool is_harmonic(const BranchingGraph& g, const VertexFunction& phi);

// The gauge q^{n(lam) - |lam|(|lam|-1)/2} relating the formula graphs to
// their integer-counting counterparts.
VertexFunction counting_gauge(int q);

} // namespace hlb
