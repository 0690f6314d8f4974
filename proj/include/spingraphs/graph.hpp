#ifndef SPINGRAPHS_GRAPH_HPP
#define SPINGRAPHS_GRAPH_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "classes.hpp"
#include "divisor.hpp"
#include "point.hpp"

namespace spingraphs {

enum class GraphKind { Standard, Weierstrass, Exceptional };

inline const char* kind_name(GraphKind k) {
    switch (k) {
    case GraphKind::Standard:
        return "standard";
    case GraphKind::Weierstrass:
        return "weierstrass";
    case GraphKind::Exceptional:
        return "exceptional";
    }
    return "unknown";
}

struct GraphVertex {
    PointLabel id;
    Divisor divisor; // A_id, degree g

    friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

/// Oriented arc decoration on an edge, labelled by the exponent difference.
struct Arc {
    PointLabel from;
    int label = 0; // k >= 1

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Undirected edge between distinct epsilon-connected vertices. The straight
/// multiplicity is the smaller of the two incidence exponents; when they
/// differ, an arc leaves the endpoint carrying the larger exponent in the
/// opposite divisor, labelled by the difference.
struct Edge {
    PointLabel u;
    PointLabel v;
    int multiplicity = 0; // n1 >= 1
    std::optional<Arc> arc;

    PointLabel other(const PointLabel& x) const { return x == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Derives the edge list from the vertex divisors. For each unordered pair
/// (Q, R) with R in A_Q: n1 = mult of Q in A_R, n2 = mult of R in A_Q; the
/// edge gets multiplicity min(n1, n2) and, when n1 != n2, an arc from the
/// endpoint with the larger exponent labelled |n1 - n2|.
/// Throws std::logic_error when incidence is asymmetric, when a divisor
/// mentions a point that is not a vertex, or when a divisor contains its
/// own vertex.
inline std::vector<Edge> edges_from_divisors(const DivisorFamily& family) {
    for (const auto& [q, aq] : family) {
        if (aq.contains(q))
            throw std::logic_error("divisor of " + q.name() + " contains its own vertex");
        for (const auto& [x, m] : aq.terms())
            if (!family.contains(x))
                throw std::logic_error("divisor of " + q.name() + " mentions non-vertex " +
                                       x.name());
    }
    std::vector<Edge> edges;
    for (auto qu = family.begin(); qu != family.end(); ++qu) {
        for (auto rv = std::next(qu); rv != family.end(); ++rv) {
            const auto& [q, aq] = *qu;
            const auto& [r, ar] = *rv;
            const int r_in_q = aq.multiplicity(r);
            const int q_in_r = ar.multiplicity(q);
            if ((r_in_q == 0) != (q_in_r == 0))
                throw std::logic_error("asymmetric incidence between " + q.name() + " and " +
                                       r.name());
            if (r_in_q == 0)
                continue;
            Edge e{q, r, std::min(r_in_q, q_in_r), std::nullopt};
            if (r_in_q != q_in_r)
                e.arc = Arc{r_in_q > q_in_r ? r : q, std::abs(r_in_q - q_in_r)};
            edges.push_back(std::move(e));
        }
    }
    return edges;
}

/// One leaf of the epsilon-foliation together with its graph structure.
/// Immutable after construction; the factory functions below are the normal
/// way to build one. The raw constructor accepts arbitrary parts so that
/// untrusted assemblies can be run through validate().
class SpinGraph {
public:
    SpinGraph(Genus genus, GraphKind kind, std::optional<ExceptionalClass> cls,
              std::vector<GraphVertex> vertices, std::vector<Edge> edges)
        : genus_(genus.value()), kind_(kind), class_(std::move(cls)),
          vertices_(std::move(vertices)), edges_(std::move(edges)) {}

    int genus() const { return genus_; }
    GraphKind kind() const { return kind_; }
    const std::optional<ExceptionalClass>& exceptional_class() const { return class_; }
    const std::vector<GraphVertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const PointLabel& v) const {
        return std::any_of(vertices_.begin(), vertices_.end(),
                           [&](const GraphVertex& gv) { return gv.id == v; });
    }

    const Divisor& divisor_of(const PointLabel& v) const {
        for (const auto& gv : vertices_)
            if (gv.id == v)
                return gv.divisor;
        throw std::invalid_argument("unknown vertex " + v.name());
    }

    /// The degree-(g+1) fiber divisor through v: v * A_{conj(v)}. Its exponent
    /// multiset is the khat tuple of the graph; the exponent of v itself is
    /// the head statistic k0(v).
    Divisor fiber_divisor(const PointLabel& v) const {
        return Divisor().mul(v) * divisor_of(v.conjugate());
    }

    /// k0(v): exponent of v in its own fiber divisor.
    int self_exponent(const PointLabel& v) const {
        return fiber_divisor(v).multiplicity(v);
    }

private:
    int genus_;
    GraphKind kind_;
    std::optional<ExceptionalClass> class_;
    std::vector<GraphVertex> vertices_;
    std::vector<Edge> edges_;
};

namespace detail {

inline SpinGraph graph_from_family(Genus genus, GraphKind kind,
                                   std::optional<ExceptionalClass> cls,
                                   const DivisorFamily& family) {
    std::vector<GraphVertex> vertices;
    vertices.reserve(family.size());
    for (const auto& [id, divisor] : family)
        vertices.push_back({id, divisor});
    return SpinGraph(genus, kind, std::move(cls), std::move(vertices),
                     edges_from_divisors(family));
}

} // namespace detail

/// The generic leaf: vertices P, conj(P), P_k, conj(P_k) for k = 1..g with
///   A_P     = P_1 ... P_g
///   A_{P_k} = P * prod_{l != k} conj(P_l)
/// and conjugates. All edges simple with no arcs; the result is the complete
/// bipartite graph on the two fibers minus the conjugation matching.
inline SpinGraph standard_graph(int g) {
    Genus genus(g);
    const PointLabel p = PointLabel::base();
    DivisorFamily family;
    Divisor ap;
    for (int k = 1; k <= g; ++k)
        ap.mul(PointLabel::indexed(k));
    family[p] = ap;
    family[p.conjugate()] = ap.conjugate();
    for (int k = 1; k <= g; ++k) {
        Divisor d;
        d.mul(p);
        for (int l = 1; l <= g; ++l)
            if (l != k)
                d.mul(PointLabel::indexed(l, true));
        family[PointLabel::indexed(k)] = d;
        family[PointLabel::indexed(k, true)] = d.conjugate();
    }
    return detail::graph_from_family(genus, GraphKind::Standard, std::nullopt, family);
}

/// One of the two Weierstrass leaves: the complete simple graph on g+1
/// self-conjugate labels, A_{W_j} = prod_{l != j} W_l.
inline SpinGraph weierstrass_graph(int g) {
    Genus genus(g);
    DivisorFamily family;
    for (int j = 0; j <= g; ++j) {
        Divisor d;
        for (int l = 0; l <= g; ++l)
            if (l != j)
                d.mul(PointLabel::weierstrass(l));
        family[PointLabel::weierstrass(j)] = d;
    }
    return detail::graph_from_family(genus, GraphKind::Weierstrass, std::nullopt, family);
}

/// The exceptional leaf of a class with khat = (k0, ..., kr):
///   A_P     = conj(P)^(k0-1) * prod_j P_j^(k_j)
///   A_{P_j} = P^(k0) * conj(P_j)^(k_j - 1) * prod_{l != j} conj(P_l)^(k_l)
/// and conjugates. The second formula is forced by the two-fiber relation:
/// every vertex fiber must coincide with the fiber of P or of conj(P).
/// For r = 0 the graph is the single edge (P, conj(P)) of multiplicity g.
inline SpinGraph exceptional_graph(const ExceptionalClass& c) {
    const Genus genus(c.genus());
    const Partition& khat = c.khat();
    const int r = c.order();
    const PointLabel p = PointLabel::base();
    DivisorFamily family;
    Divisor ap;
    ap.mul(p.conjugate(), khat[0] - 1);
    for (int j = 1; j <= r; ++j)
        ap.mul(PointLabel::indexed(j), khat[j]);
    family[p] = ap;
    family[p.conjugate()] = ap.conjugate();
    for (int j = 1; j <= r; ++j) {
        Divisor d;
        d.mul(p, khat[0]);
        d.mul(PointLabel::indexed(j, true), khat[j] - 1);
        for (int l = 1; l <= r; ++l)
            if (l != j)
                d.mul(PointLabel::indexed(l, true), khat[l]);
        family[PointLabel::indexed(j)] = d;
        family[PointLabel::indexed(j, true)] = d.conjugate();
    }
    return detail::graph_from_family(genus, GraphKind::Exceptional, c, family);
}

/// Convenience overload for a raw khat tuple.
inline SpinGraph exceptional_graph(int g, Partition khat) {
    return exceptional_graph(ExceptionalClass(Genus(g), std::move(khat)));
}

/// Divisor of the section with a single simple pole at the vertex:
/// pole^(-1) * zeros.
struct SectionDivisor {
    PointLabel pole;
    Divisor zeros;
};

inline SectionDivisor section_divisor(const SpinGraph& graph, const PointLabel& vertex) {
    return {vertex, graph.divisor_of(vertex)};
}

/// Total ramification carried by the graph, read off one fiber divisor as
/// 2 * sum (exponent - 1). Every witness vertex gives the same value;
/// validate() checks that. Standard and Weierstrass graphs give 0,
/// exceptional graphs 2(g - r).
inline int graph_branch_number(const SpinGraph& graph) {
    const Divisor fiber = graph.fiber_divisor(graph.vertices().front().id);
    int b = 0;
    for (const auto& [x, m] : fiber.terms())
        b += m - 1;
    return 2 * b;
}

/// Vertices minimizing their own fiber exponent k0(V).
inline std::vector<PointLabel> head_vertices(const SpinGraph& graph) {
    if (graph.kind() != GraphKind::Exceptional)
        throw std::invalid_argument("heads are defined for exceptional graphs only");
    int best = 0;
    std::vector<PointLabel> heads;
    for (const auto& gv : graph.vertices()) {
        const int k0 = graph.self_exponent(gv.id);
        if (heads.empty() || k0 < best) {
            best = k0;
            heads.assign(1, gv.id);
        } else if (k0 == best) {
            heads.push_back(gv.id);
        }
    }
    return heads;
}

/// Reads the ascending khat tuple off a head's fiber divisor.
inline ExceptionalClass canonical_class(const SpinGraph& graph) {
    const auto heads = head_vertices(graph);
    const Divisor fiber = graph.fiber_divisor(heads.front());
    Partition khat;
    for (const auto& [x, m] : fiber.terms())
        khat.push_back(m);
    std::sort(khat.begin(), khat.end());
    return ExceptionalClass(Genus(graph.genus()), std::move(khat));
}

/// Distinct points of the vertex divisor A_v.
inline int epsilon_degree_of_vertex(const SpinGraph& graph, const PointLabel& v) {
    return epsilon_degree(graph.divisor_of(v));
}

/// Structural audit. Returns human-readable violations; empty means the
/// graph satisfies every construction invariant. Never throws: findings are
/// data, and later checks are skipped when their prerequisites fail.
inline std::vector<std::string> validate(const SpinGraph& graph) {
    std::vector<std::string> bad;
    const int g = graph.genus();
    const auto& vertices = graph.vertices();

    if (vertices.empty()) {
        bad.push_back("graph has no vertices");
        return bad;
    }

    DivisorFamily family;
    for (const auto& gv : vertices) {
        if (!family.emplace(gv.id, gv.divisor).second)
            bad.push_back("duplicate vertex " + gv.id.name());
    }

    int expected = 0;
    switch (graph.kind()) {
    case GraphKind::Standard:
        expected = 2 * g + 2;
        break;
    case GraphKind::Weierstrass:
        expected = g + 1;
        break;
    case GraphKind::Exceptional:
        if (!graph.exceptional_class()) {
            bad.push_back("exceptional graph carries no class");
        } else {
            expected = graph.exceptional_class()->vertex_count();
            if (graph.exceptional_class()->genus() != g)
                bad.push_back("class genus differs from graph genus");
        }
        break;
    }
    if (expected > 0 && static_cast<int>(vertices.size()) != expected)
        bad.push_back("expected " + std::to_string(expected) + " vertices, found " +
                      std::to_string(vertices.size()));

    for (const auto& [id, divisor] : family) {
        if (divisor.degree() != g)
            bad.push_back("divisor of " + id.name() + " has degree " +
                          std::to_string(divisor.degree()) + ", expected " + std::to_string(g));
        const bool self_conj = id.is_self_conjugate();
        if (graph.kind() == GraphKind::Weierstrass ? !self_conj : self_conj)
            bad.push_back("vertex " + id.name() + " has the wrong label family for " +
                          kind_name(graph.kind()) + " kind");
    }

    bool closed = true;
    for (const auto& [id, divisor] : family) {
        if (!family.contains(id.conjugate())) {
            bad.push_back("conjugate of vertex " + id.name() + " is missing");
            closed = false;
        }
    }

    bool supports_ok = true;
    for (const auto& [q, aq] : family) {
        if (aq.contains(q)) {
            bad.push_back("divisor of " + q.name() + " contains its own vertex");
            supports_ok = false;
        }
        for (const auto& [x, m] : aq.terms()) {
            if (!family.contains(x)) {
                bad.push_back("divisor of " + q.name() + " mentions non-vertex " + x.name());
                supports_ok = false;
            }
        }
    }
    if (supports_ok && !mutual_incidence(family)) {
        for (const auto& [q, aq] : family)
            for (const auto& [r, ar] : family)
                if (q < r && aq.contains(r) != ar.contains(q))
                    bad.push_back("incidence between " + q.name() + " and " + r.name() +
                                  " is one-sided");
    }

    if (supports_ok && mutual_incidence(family)) {
        const auto normalized = [](std::vector<Edge> edges) {
            for (Edge& e : edges)
                if (e.v < e.u)
                    std::swap(e.u, e.v);
            std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
                return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
            });
            return edges;
        };
        if (normalized(edges_from_divisors(family)) != normalized(graph.edges()))
            bad.push_back("edge list does not match the divisor-derived edges");
    }

    if (!closed)
        return bad;

    // Fiber checks need conjugation closure.
    const PointLabel v0 = vertices.front().id;
    const Divisor fiber0 = graph.fiber_divisor(v0);
    const Divisor fiber0c = graph.fiber_divisor(v0.conjugate());
    int witness_branch = -1;
    Partition khat0;
    for (const auto& gv : vertices) {
        const Divisor fiber = graph.fiber_divisor(gv.id);
        if (fiber != fiber0 && fiber != fiber0c)
            bad.push_back("fiber of " + gv.id.name() +
                          " matches neither reference fiber (two-fiber property)");
        int b = 0;
        Partition khat;
        for (const auto& [x, m] : fiber.terms()) {
            b += m - 1;
            khat.push_back(m);
        }
        std::sort(khat.begin(), khat.end());
        if (witness_branch < 0) {
            witness_branch = 2 * b;
            khat0 = khat;
        } else {
            if (2 * b != witness_branch)
                bad.push_back("branch number at " + gv.id.name() + " disagrees with witness");
            if (khat != khat0)
                bad.push_back("khat at " + gv.id.name() + " disagrees with witness");
        }
    }

    if (graph.kind() == GraphKind::Exceptional && graph.exceptional_class()) {
        const auto& cls = *graph.exceptional_class();
        if (khat0 != cls.khat())
            bad.push_back("fiber khat does not match the declared class");
        if (witness_branch != cls.branch_number())
            bad.push_back("branch number does not match the declared class");
    } else if (graph.kind() != GraphKind::Exceptional && witness_branch != 0) {
        bad.push_back("non-exceptional graph carries ramification");
    }

    return bad;
}

} // namespace spingraphs

#endif
