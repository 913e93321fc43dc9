#ifndef GOODCOLIM_HOMS_HPP
#define GOODCOLIM_HOMS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "goodcolim/graph.hpp"

namespace goodcolim {

/// A homomorphism candidate between two fixed graphs, stored without the
/// graphs themselves. The kernel currency of all lifting searches.
struct Hom {
    std::vector<std::size_t> vmap;
    std::vector<std::size_t> emap;

    bool operator==(const Hom& other) const = default;
    bool operator<(const Hom& other) const;
};

GraphMorphism to_morphism(const Graph& dom, const Graph& cod, const Hom& h);
Hom to_hom(const GraphMorphism& m);

struct HomBounds {
    std::size_t max_vertices = 8;     // refuse when either graph is bigger
    std::size_t max_homs = 500000;    // refuse when the result set would be bigger
};

/// Search constraints. Empty candidate lists mean "unconstrained"; a forced
/// assignment is a singleton list. Lists must be sorted ascending.
struct HomConstraints {
    std::vector<std::vector<std::size_t>> vcand;  // per dom vertex; empty = all
    std::vector<std::vector<std::size_t>> ecand;  // per dom edge; empty = all
    bool injective = false;
};

/// Complete, deterministically ordered (lexicographic on vmap then emap)
/// enumeration of morphisms dom -> cod subject to the constraints.
/// Serial reference implementation.
std::vector<Hom> enumerate_homs_serial(const Graph& dom, const Graph& cod,
                                       const HomBounds& bounds = {},
                                       const HomConstraints& constraints = {});

/// Same contract and same output as the serial kernel; splits the search on
/// the first vertex assignment across OpenMP threads and splices the partial
/// results back in candidate order.
std::vector<Hom> enumerate_homs_parallel(const Graph& dom, const Graph& cod,
                                         const HomBounds& bounds = {},
                                         const HomConstraints& constraints = {});

/// Dispatches to the parallel kernel when the estimated search space is large
/// enough to amortize thread startup, otherwise runs serially.
std::vector<Hom> enumerate_homs(const Graph& dom, const Graph& cod,
                                const HomBounds& bounds = {},
                                const HomConstraints& constraints = {});

/// First hom in the enumeration order, if any.
std::optional<Hom> find_first_hom(const Graph& dom, const Graph& cod,
                                  const HomBounds& bounds = {},
                                  const HomConstraints& constraints = {});

/// Lift search: the lexicographically least d : cod(g) -> dom(p) with
/// d . g = u and p . d = v, if one exists.
std::optional<GraphMorphism> find_lift(const GraphMorphism& g, const GraphMorphism& u,
                                       const GraphMorphism& p, const GraphMorphism& v,
                                       const HomBounds& bounds = {});

/// Isomorphism search with degree-sequence pruning; lexicographically least
/// witness. Desk scale only.
std::optional<GraphMorphism> find_isomorphism(const Graph& a, const Graph& b,
                                              const HomBounds& bounds = {});

bool is_isomorphic(const Graph& a, const Graph& b, const HomBounds& bounds = {});

/// Iso phi : Y1 -> Y2 with phi . i1 = i2 (isomorphism under a shared base).
std::optional<GraphMorphism> find_iso_under(const GraphMorphism& i1, const GraphMorphism& i2,
                                            const HomBounds& bounds = {});

/// Iso phi : Y1 -> Y2 with phi . i1 = i2 and p2 . phi = p1 (under the base
/// and over the target).
std::optional<GraphMorphism> find_iso_under_over(const GraphMorphism& i1, const GraphMorphism& p1,
                                                 const GraphMorphism& i2, const GraphMorphism& p2,
                                                 const HomBounds& bounds = {});

}  // namespace goodcolim

#endif
