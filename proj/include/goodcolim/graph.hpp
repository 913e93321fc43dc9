#ifndef GOODCOLIM_GRAPH_HPP
#define GOODCOLIM_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace goodcolim {

/// Rejected input: a precondition of an operation does not hold.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// Explicit refusal: an enumeration bound would be exceeded. Never silently truncates.
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant broke. Indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// A finite directed multigraph. Vertices and edges carry opaque string ids,
/// unique per sort; all structural data is stored positionally and ids only
/// matter at the JSON boundary.
struct Graph {
    std::vector<std::string> vnames;
    std::vector<std::string> enames;
    std::vector<std::size_t> esrc;  // per edge, index into vnames
    std::vector<std::size_t> etgt;

    std::size_t vcount() const { return vnames.size(); }
    std::size_t ecount() const { return enames.size(); }

    std::size_t add_vertex(std::string name);
    std::size_t add_edge(std::string name, std::size_t src, std::size_t tgt);

    std::optional<std::size_t> vertex_index(const std::string& name) const;
    std::optional<std::size_t> edge_index(const std::string& name) const;

    /// Checks id uniqueness per sort and src/tgt totality.
    void validate() const;

    bool operator==(const Graph& other) const = default;

    static Graph empty();
    /// n isolated vertices named v0..v{n-1}.
    static Graph discrete(std::size_t n);
    /// Two vertices a, b and a single edge e : a -> b.
    static Graph single_edge();
    /// One vertex v with one loop edge e.
    static Graph loop();
};

/// Renames ids to the canonical dense numbering v0..,e0.. keeping positions.
Graph canonical(const Graph& g);

/// A morphism of directed multigraphs: total vertex/edge maps commuting with
/// src and tgt. Domain and codomain are stored by value; everything is
/// immutable after construction.
struct GraphMorphism {
    Graph dom;
    Graph cod;
    std::vector<std::size_t> vmap;  // dom vertex index -> cod vertex index
    std::vector<std::size_t> emap;

    void validate() const;

    bool operator==(const GraphMorphism& other) const = default;
};

GraphMorphism identity(const Graph& g);

/// g after f; requires f.cod == g.dom structurally.
GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f);

struct MorphismAnalysis {
    bool is_mono = false;
    bool is_epi = false;
    bool is_iso = false;
};

MorphismAnalysis analyze_morphism(const GraphMorphism& f);

/// Inverse of an isomorphism.
GraphMorphism invert(const GraphMorphism& f);

/// Renames dom/cod of a morphism canonically (structure unchanged).
GraphMorphism canonical(const GraphMorphism& f);

}  // namespace goodcolim

#endif
