#ifndef GOODCOLIM_DIAGRAM_HPP
#define GOODCOLIM_DIAGRAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "goodcolim/colimits.hpp"
#include "goodcolim/lifting.hpp"
#include "goodcolim/poset.hpp"

namespace goodcolim {

struct LinkEntry {
    std::size_t element;  // isolated shape element
    GraphMorphism link;   // D(pred -> element)
};

struct SmoothReport {
    bool ok = false;
    std::vector<LinkEntry> links;
    std::vector<std::string> violations;  // offending limit element or composition pair
};

/// Functoriality plus the colimit condition at every limit element. The shape
/// must be good (rejected otherwise); everything else is reported, not thrown.
SmoothReport validate_smooth(const PosetDiagram& d);

/// The canonical map colim_Q D -> colim D for a nonempty initial segment Q.
/// Q = {bottom} is the composite of the diagram.
GraphMorphism relative_composite(const PosetDiagram& d, const std::vector<bool>& segment);

/// Colimit cocone of the restriction to a segment, in restricted indexing.
struct SegmentColimit {
    Restriction restriction;
    Cocone cocone;
};

SegmentColimit segment_colimit(const PosetDiagram& d, const std::vector<bool>& segment);

// ---------------------------------------------------------------------------
// chains

struct CellAttachment {
    std::size_t generator = 0;  // index into the declared generator set
    std::string generator_name;
    GraphMorphism attach;    // dom(gen) -> stage i
    GraphMorphism coattach;  // cod(gen) -> stage i+1
};

struct ChainStep {
    bool is_iso = false;
    std::vector<CellAttachment> cells;  // empty = identity-like step (still a pushout)
};

/// A staged factorization: stages[0] -> ... -> stages[n-1], each step either
/// a flagged isomorphism or the pushout of the coproduct of its cells'
/// generators. Isomorphism steps are retained, never contracted.
struct ChainPresentation {
    std::vector<Graph> stages;
    std::vector<GraphMorphism> steps;
    std::vector<ChainStep> certs;

    GraphMorphism composite() const;  // stages.front() -> stages.back()
};

/// Recomputes every step: iso steps must analyze as isomorphisms; cell steps
/// must be the computed pushout up to the forced mediating comparison.
/// Throws InvalidInput naming the first failing step.
void validate_chain(const ChainPresentation& chain, const GeneratorSet& gens);

/// Proposition-style linearization of a smooth diagram along the
/// deterministic linear extension: stage k is the colimit over the first
/// k+1 elements; isolated elements contribute certified generator pushouts,
/// limit elements isomorphism steps.
ChainPresentation linearize(const PosetDiagram& d, const GeneratorSet& gens,
                            const HomBounds& bounds = {});

// ---------------------------------------------------------------------------

struct StarExtension {
    PosetDiagram diagram;
    std::optional<std::size_t> added_top;
    GraphMorphism colim_comparison;  // colim D -> colim D*, an isomorphism
};

/// Extends a smooth diagram over the directed completion of its shape; the
/// added element (if any) carries the computed colimit and is limit, so the
/// link set is untouched.
StarExtension star_extend(const PosetDiagram& d);

struct LimitExtensionCheck {
    bool all_limit = false;
    bool iso = false;
};

/// all_limit: every element outside the segment is limit; iso: the relative
/// composite is an isomorphism. all_limit implies iso for smooth diagrams and
/// the implication is asserted.
LimitExtensionCheck limit_extension_check(const PosetDiagram& d, const std::vector<bool>& segment);

}  // namespace goodcolim

#endif
