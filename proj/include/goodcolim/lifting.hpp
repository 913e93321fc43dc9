#ifndef GOODCOLIM_LIFTING_HPP
#define GOODCOLIM_LIFTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "goodcolim/colimits.hpp"
#include "goodcolim/graph.hpp"
#include "goodcolim/homs.hpp"

namespace goodcolim {

struct Generator {
    std::string name;
    GraphMorphism morphism;
};

/// A named set of generating morphisms with small domains and codomains.
struct GeneratorSet {
    std::string name;
    std::vector<Generator> members;

    void validate(const HomBounds& bounds = {}) const;
};

/// The standard generators over graphs: x1 = (empty -> point) and
/// x2 = (two points -> single edge).
GeneratorSet x_std();

/// One commuting square u,v against a generator, with its diagonal when the
/// search found one.
struct LiftingSquare {
    std::size_t generator = 0;
    GraphMorphism u;  // dom(gen) -> dom(p)
    GraphMorphism v;  // cod(gen) -> cod(p)
    std::optional<GraphMorphism> diagonal;
};

struct RlpReport {
    bool holds = false;
    /// complete diagonal table when holds; the squares solved before the
    /// counterexample otherwise
    std::vector<LiftingSquare> squares;
    std::optional<LiftingSquare> counterexample;
};

/// Exhaustive right-lifting-property check of p against every generator.
/// Diagonal searches for independent squares run in parallel; results are
/// merged in enumeration order, so reports are deterministic.
RlpReport rlp_check(const GraphMorphism& p, const GeneratorSet& gens,
                    const HomBounds& bounds = {});

/// Membership certificate for Po(X): an isomorphism witness, or a generator
/// with attaching data whose computed pushout maps isomorphically onto f.
struct PoCertificate {
    GraphMorphism f;
    bool via_iso = false;
    std::optional<GraphMorphism> iso_inverse;
    std::optional<std::size_t> generator;
    std::string generator_name;
    std::optional<GraphMorphism> attach;     // dom(gen) -> dom(f)
    std::optional<GraphMorphism> coattach;   // cod(gen) -> cod(f)
    std::optional<GraphMorphism> mediating;  // computed pushout apex -> cod(f), iso
};

/// Exhaustive search within bounds; nullopt means the search completed
/// without finding a certificate.
std::optional<PoCertificate> po_membership(const GraphMorphism& f, const GeneratorSet& gens,
                                           const HomBounds& bounds = {});

/// Recomputes the embedded witness; throws InvalidInput naming the failure.
void validate_po_certificate(const PoCertificate& cert, const GeneratorSet& gens);

}  // namespace goodcolim

#endif
