#ifndef GOODCOLIM_COLIMITS_HPP
#define GOODCOLIM_COLIMITS_HPP

#include <map>
#include <optional>
#include <vector>

#include "goodcolim/graph.hpp"
#include "goodcolim/homs.hpp"
#include "goodcolim/poset.hpp"

namespace goodcolim {

/// A poset-indexed diagram of graphs: one object per shape element, one
/// morphism per cover. Arrows for arbitrary x <= y are composites along
/// covers; functor_check verifies they are path-independent.
struct PosetDiagram {
    FinitePoset shape;
    std::vector<Graph> objects;
    std::map<std::pair<std::size_t, std::size_t>, GraphMorphism> steps;  // keyed by cover

    /// Composite morphism for x <= y. Requires a successful functor_check.
    GraphMorphism arrow(std::size_t x, std::size_t y) const;

    void basic_validate() const;  // shapes of steps match objects
};

struct FunctorCheck {
    bool ok = false;
    std::string violation;  // empty when ok; names the offending pair otherwise
};

FunctorCheck functor_check(const PosetDiagram& d);

/// A cocone over a poset diagram: one leg per shape element.
struct Cocone {
    Graph apex;
    std::vector<GraphMorphism> legs;
};

/// Colimit over the whole shape: quotient of the coproduct of all objects by
/// the relations generated by the covers, computed with a union-find and
/// canonical smallest-generator representatives. Rejects non-functorial
/// input.
Cocone colimit_over_poset(const PosetDiagram& d);

/// Restriction of a diagram to an initial segment (indices compacted,
/// original order kept). Returns the restriction and the index translation
/// old -> new.
struct Restriction {
    PosetDiagram diagram;
    std::vector<std::size_t> old_to_new;  // size of original shape; undefined outside
    std::vector<std::size_t> new_to_old;
};

Restriction restrict_diagram(const PosetDiagram& d, const std::vector<bool>& members);

/// The unique morphism apex -> z with med . legs[i] = targets[i], when the
/// targets form a commuting cocone map (legs must be jointly surjective,
/// which colimit legs are). Returns nullopt when the data is inconsistent.
std::optional<GraphMorphism> mediating_morphism(const Graph& apex,
                                                const std::vector<GraphMorphism>& legs,
                                                const std::vector<GraphMorphism>& targets,
                                                const Graph& z);

// ---------------------------------------------------------------------------
// pushouts and coproducts

struct ProbeBound {
    std::size_t max_vertices = 2;
    std::size_t max_edges = 1;
};

/// Deterministic enumeration of all directed multigraphs with at most maxv
/// vertices and maxe edges (edge multisets in nondecreasing (src,tgt) order).
std::vector<Graph> enumerate_small_graphs(std::size_t maxv, std::size_t maxe);

struct MediatingWitness {
    Graph test;
    GraphMorphism u;          // cod(f) -> test
    GraphMorphism v;          // cod(g) -> test
    GraphMorphism mediating;  // apex -> test
};

/// Certificate for a computed pushout square. Validation recomputes the apex
/// and every witness; the witness list is the complete family of commuting
/// cocones into the declared probe family.
struct PushoutCertificate {
    GraphMorphism f;  // A -> B
    GraphMorphism g;  // A -> C
    GraphMorphism leg_left;   // B -> P
    GraphMorphism leg_right;  // C -> P
    ProbeBound probe;
    std::vector<MediatingWitness> witnesses;
};

struct PushoutResult {
    Graph apex;
    GraphMorphism leg_left;
    GraphMorphism leg_right;
    PushoutCertificate cert;
};

/// Pushout of the span B <-f- A -g-> C. Rejects a domain mismatch.
PushoutResult pushout(const GraphMorphism& f, const GraphMorphism& g,
                      const ProbeBound& probe = {});

/// Throws InvalidInput naming the first failing witness.
void validate_pushout_certificate(const PushoutCertificate& cert);

struct CoproductResult {
    Graph apex;
    std::vector<GraphMorphism> injections;
};

CoproductResult coproduct(const std::vector<Graph>& parts);

// ---------------------------------------------------------------------------

struct StageFactorization {
    std::size_t stage;
    GraphMorphism through;  // dom(m) -> objects[stage]
};

/// Factors m : A -> apex through a diagram stage. The shape must be directed
/// (rejected otherwise) and the cocone legs jointly surjective; scans stages
/// in linear-extension order and returns the first admitting a lift.
StageFactorization factor_through_stage(const GraphMorphism& m, const PosetDiagram& d,
                                        const Cocone& cocone);

// ---------------------------------------------------------------------------
// subgraphs

struct Subgraph {
    Graph graph;
    GraphMorphism inclusion;  // graph -> ambient
};

/// Subgraph spanned by the given vertex/edge masks; requires edge endpoints
/// to be included.
Subgraph subgraph(const Graph& ambient, const std::vector<bool>& vmask,
                  const std::vector<bool>& emask);

/// Image of a morphism as a subgraph of its codomain, with the corestriction
/// dom -> image.
struct ImageFactorization {
    Graph image;
    GraphMorphism corestriction;  // dom -> image
    GraphMorphism inclusion;      // image -> cod
};

ImageFactorization image_factorization(const GraphMorphism& f);

}  // namespace goodcolim

#endif
