#include "goodcolim/homs.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace goodcolim {

bool Hom::operator<(const Hom& other) const {
    if (vmap != other.vmap) return vmap < other.vmap;
    return emap < other.emap;
}

GraphMorphism to_morphism(const Graph& dom, const Graph& cod, const Hom& h) {
    return GraphMorphism{dom, cod, h.vmap, h.emap};
}

Hom to_hom(const GraphMorphism& m) { return Hom{m.vmap, m.emap}; }

namespace {

struct PairIndex {
    // sorted edge indices of cod per (src,tgt) pair
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_pair;

    explicit PairIndex(const Graph& g) {
        for (std::size_t e = 0; e < g.ecount(); ++e)
            by_pair[{g.esrc[e], g.etgt[e]}].push_back(e);
    }

    const std::vector<std::size_t>* at(std::size_t s, std::size_t t) const {
        auto it = by_pair.find({s, t});
        return it == by_pair.end() ? nullptr : &it->second;
    }
};

struct SearchState {
    const Graph& dom;
    const Graph& cod;
    const HomConstraints& cons;
    const PairIndex& pairs;
    std::size_t cap;
    std::size_t stop_after = static_cast<std::size_t>(-1);

    std::vector<std::size_t> vm;
    std::vector<std::size_t> em;
    std::vector<bool> vused;
    std::vector<bool> eused;
    // edges of dom grouped by the last endpoint index, for incremental pruning
    std::vector<std::vector<std::size_t>> edges_ready_at;

    std::vector<Hom>* out = nullptr;
    std::atomic<bool>* overflow = nullptr;

    SearchState(const Graph& d, const Graph& c, const HomConstraints& k, const PairIndex& p,
                std::size_t cap_)
        : dom(d), cod(c), cons(k), pairs(p), cap(cap_) {
        vm.assign(d.vcount(), 0);
        em.assign(d.ecount(), 0);
        if (k.injective) {
            vused.assign(c.vcount(), false);
            eused.assign(c.ecount(), false);
        }
        edges_ready_at.assign(d.vcount(), {});
        for (std::size_t e = 0; e < d.ecount(); ++e) {
            std::size_t last = std::max(d.esrc[e], d.etgt[e]);
            edges_ready_at[last].push_back(e);
        }
    }

    bool edge_feasible(std::size_t e) const {
        const auto* cands = pairs.at(vm[dom.esrc[e]], vm[dom.etgt[e]]);
        if (cands == nullptr) return false;
        if (cons.ecand.size() > e && !cons.ecand[e].empty()) {
            for (std::size_t c : *cands)
                if (std::binary_search(cons.ecand[e].begin(), cons.ecand[e].end(), c)) return true;
            return false;
        }
        return !cands->empty();
    }

    bool emit() {
        if (out->size() >= cap) {
            if (overflow != nullptr) {
                overflow->store(true);
                return false;
            }
            throw BoundExceeded("enumerate_homs: more than " + std::to_string(cap) +
                                " morphisms; raise --max-homs to enumerate them");
        }
        out->push_back(Hom{vm, em});
        return out->size() < stop_after;
    }

    bool assign_edges(std::size_t e) {
        if (overflow != nullptr && overflow->load()) return false;
        if (e == dom.ecount()) return emit();
        const auto* cands = pairs.at(vm[dom.esrc[e]], vm[dom.etgt[e]]);
        if (cands == nullptr) return true;
        for (std::size_t c : *cands) {
            if (cons.ecand.size() > e && !cons.ecand[e].empty() &&
                !std::binary_search(cons.ecand[e].begin(), cons.ecand[e].end(), c))
                continue;
            if (cons.injective && eused[c]) continue;
            em[e] = c;
            if (cons.injective) eused[c] = true;
            bool go = assign_edges(e + 1);
            if (cons.injective) eused[c] = false;
            if (!go) return false;
        }
        return true;
    }

    bool assign_vertices(std::size_t v) {
        if (overflow != nullptr && overflow->load()) return false;
        if (v == dom.vcount()) return assign_edges(0);
        auto try_one = [&](std::size_t c) -> bool {
            if (cons.injective && vused[c]) return true;
            vm[v] = c;
            for (std::size_t e : edges_ready_at[v])
                if (!edge_feasible(e)) return true;
            if (cons.injective) vused[c] = true;
            bool go = assign_vertices(v + 1);
            if (cons.injective) vused[c] = false;
            return go;
        };
        if (cons.vcand.size() > v && !cons.vcand[v].empty()) {
            for (std::size_t c : cons.vcand[v]) {
                if (c >= cod.vcount()) continue;
                if (!try_one(c)) return false;
            }
        } else {
            for (std::size_t c = 0; c < cod.vcount(); ++c)
                if (!try_one(c)) return false;
        }
        return true;
    }
};

void check_bounds(const Graph& dom, const Graph& cod, const HomBounds& bounds) {
    if (dom.vcount() > bounds.max_vertices || cod.vcount() > bounds.max_vertices)
        throw BoundExceeded("hom enumeration refused: a graph has more than " +
                            std::to_string(bounds.max_vertices) +
                            " vertices; raise --max-vertices to proceed");
}

std::vector<std::size_t> first_vertex_candidates(const Graph& cod, const HomConstraints& cons) {
    if (!cons.vcand.empty() && !cons.vcand[0].empty()) {
        std::vector<std::size_t> c;
        for (std::size_t x : cons.vcand[0])
            if (x < cod.vcount()) c.push_back(x);
        return c;
    }
    std::vector<std::size_t> all(cod.vcount());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
}

}  // namespace

std::vector<Hom> enumerate_homs_serial(const Graph& dom, const Graph& cod, const HomBounds& bounds,
                                       const HomConstraints& constraints) {
    check_bounds(dom, cod, bounds);
    PairIndex pairs(cod);
    SearchState st(dom, cod, constraints, pairs, bounds.max_homs);
    std::vector<Hom> out;
    st.out = &out;
    st.assign_vertices(0);
    return out;
}

std::vector<Hom> enumerate_homs_parallel(const Graph& dom, const Graph& cod,
                                         const HomBounds& bounds,
                                         const HomConstraints& constraints) {
    check_bounds(dom, cod, bounds);
    if (dom.vcount() == 0) return enumerate_homs_serial(dom, cod, bounds, constraints);

    PairIndex pairs(cod);
    std::vector<std::size_t> firsts = first_vertex_candidates(cod, constraints);
    std::vector<std::vector<Hom>> parts(firsts.size());
    std::atomic<bool> overflow{false};

    // Each branch enumerates with the first vertex pinned; branch outputs are
    // already in lexicographic order, and so is the concatenation.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < firsts.size(); ++i) {
        if (overflow.load()) continue;
        HomConstraints branch = constraints;
        branch.vcand.resize(std::max<std::size_t>(1, branch.vcand.size()));
        branch.vcand[0] = {firsts[i]};
        SearchState st(dom, cod, branch, pairs, bounds.max_homs);
        st.out = &parts[i];
        st.overflow = &overflow;
        st.assign_vertices(0);
    }

    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    if (overflow.load() || total > bounds.max_homs)
        throw BoundExceeded("enumerate_homs: more than " + std::to_string(bounds.max_homs) +
                            " morphisms; raise --max-homs to enumerate them");
    std::vector<Hom> out;
    out.reserve(total);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<Hom> enumerate_homs(const Graph& dom, const Graph& cod, const HomBounds& bounds,
                                const HomConstraints& constraints) {
    // Rough size estimate: |V(cod)|^|V(dom)|; anything small is not worth a team.
    double est = 1.0;
    for (std::size_t v = 0; v < dom.vcount() && est < 1e6; ++v)
        est *= static_cast<double>(std::max<std::size_t>(1, cod.vcount()));
    if (est >= 4096.0 && dom.vcount() > 0 && cod.vcount() > 1)
        return enumerate_homs_parallel(dom, cod, bounds, constraints);
    return enumerate_homs_serial(dom, cod, bounds, constraints);
}

std::optional<Hom> find_first_hom(const Graph& dom, const Graph& cod, const HomBounds& bounds,
                                  const HomConstraints& constraints) {
    check_bounds(dom, cod, bounds);
    PairIndex pairs(cod);
    SearchState st(dom, cod, constraints, pairs, bounds.max_homs);
    st.stop_after = 1;
    std::vector<Hom> out;
    st.out = &out;
    st.assign_vertices(0);
    if (out.empty()) return std::nullopt;
    return out.front();
}

std::optional<GraphMorphism> find_lift(const GraphMorphism& g, const GraphMorphism& u,
                                       const GraphMorphism& p, const GraphMorphism& v,
                                       const HomBounds& bounds) {
    // d : cod(g) -> dom(p), d.g = u, p.d = v
    const Graph& y = g.cod;
    const Graph& c = p.dom;
    HomConstraints cons;
    cons.vcand.assign(y.vcount(), {});
    cons.ecand.assign(y.ecount(), {});

    // fibers from the postcomposition constraint p.d = v
    for (std::size_t yv = 0; yv < y.vcount(); ++yv) {
        std::vector<std::size_t> fiber;
        for (std::size_t cv = 0; cv < c.vcount(); ++cv)
            if (p.vmap[cv] == v.vmap[yv]) fiber.push_back(cv);
        if (fiber.empty()) return std::nullopt;
        cons.vcand[yv] = std::move(fiber);
    }
    for (std::size_t ye = 0; ye < y.ecount(); ++ye) {
        std::vector<std::size_t> fiber;
        for (std::size_t ce = 0; ce < c.ecount(); ++ce)
            if (p.emap[ce] == v.emap[ye]) fiber.push_back(ce);
        if (fiber.empty()) return std::nullopt;
        cons.ecand[ye] = std::move(fiber);
    }
    // forced values from the precomposition constraint d.g = u
    for (std::size_t xv = 0; xv < g.dom.vcount(); ++xv) {
        std::size_t yv = g.vmap[xv];
        std::size_t want = u.vmap[xv];
        if (!std::binary_search(cons.vcand[yv].begin(), cons.vcand[yv].end(), want))
            return std::nullopt;
        cons.vcand[yv] = {want};
    }
    for (std::size_t xe = 0; xe < g.dom.ecount(); ++xe) {
        std::size_t ye = g.emap[xe];
        std::size_t want = u.emap[xe];
        if (!std::binary_search(cons.ecand[ye].begin(), cons.ecand[ye].end(), want))
            return std::nullopt;
        cons.ecand[ye] = {want};
    }
    auto h = find_first_hom(y, c, bounds, cons);
    if (!h) return std::nullopt;
    return to_morphism(y, c, *h);
}

namespace {

struct DegreeKey {
    std::size_t out_deg = 0, in_deg = 0, loops = 0;
    bool operator==(const DegreeKey&) const = default;
    bool operator<(const DegreeKey& o) const {
        return std::tie(out_deg, in_deg, loops) < std::tie(o.out_deg, o.in_deg, o.loops);
    }
};

std::vector<DegreeKey> degree_keys(const Graph& g) {
    std::vector<DegreeKey> ks(g.vcount());
    for (std::size_t e = 0; e < g.ecount(); ++e) {
        ks[g.esrc[e]].out_deg++;
        ks[g.etgt[e]].in_deg++;
        if (g.esrc[e] == g.etgt[e]) ks[g.esrc[e]].loops++;
    }
    return ks;
}

std::optional<GraphMorphism> iso_search(const Graph& a, const Graph& b, const HomBounds& bounds,
                                        HomConstraints cons) {
    if (a.vcount() != b.vcount() || a.ecount() != b.ecount()) return std::nullopt;
    auto ka = degree_keys(a);
    auto kb = degree_keys(b);
    {
        auto sa = ka;
        auto sb = kb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    cons.injective = true;
    if (cons.vcand.empty()) cons.vcand.assign(a.vcount(), {});
    for (std::size_t v = 0; v < a.vcount(); ++v) {
        std::vector<std::size_t> fiber;
        auto base = cons.vcand[v];
        for (std::size_t w = 0; w < b.vcount(); ++w) {
            if (!(ka[v] == kb[w])) continue;
            if (!base.empty() && !std::binary_search(base.begin(), base.end(), w)) continue;
            fiber.push_back(w);
        }
        if (fiber.empty()) return std::nullopt;
        cons.vcand[v] = std::move(fiber);
    }
    auto h = find_first_hom(a, b, bounds, cons);
    if (!h) return std::nullopt;
    GraphMorphism m = to_morphism(a, b, *h);
    // injective + equal counts = bijective on both sorts
    return m;
}

}  // namespace

std::optional<GraphMorphism> find_isomorphism(const Graph& a, const Graph& b,
                                              const HomBounds& bounds) {
    return iso_search(a, b, bounds, HomConstraints{});
}

bool is_isomorphic(const Graph& a, const Graph& b, const HomBounds& bounds) {
    return find_isomorphism(a, b, bounds).has_value();
}

std::optional<GraphMorphism> find_iso_under(const GraphMorphism& i1, const GraphMorphism& i2,
                                            const HomBounds& bounds) {
    if (i1.dom != i2.dom) throw InvalidInput("find_iso_under: bases disagree");
    const Graph& y1 = i1.cod;
    const Graph& y2 = i2.cod;
    HomConstraints cons;
    cons.vcand.assign(y1.vcount(), {});
    cons.ecand.assign(y1.ecount(), {});
    for (std::size_t av = 0; av < i1.dom.vcount(); ++av) cons.vcand[i1.vmap[av]] = {i2.vmap[av]};
    for (std::size_t ae = 0; ae < i1.dom.ecount(); ++ae) cons.ecand[i1.emap[ae]] = {i2.emap[ae]};
    return iso_search(y1, y2, bounds, std::move(cons));
}

std::optional<GraphMorphism> find_iso_under_over(const GraphMorphism& i1, const GraphMorphism& p1,
                                                 const GraphMorphism& i2, const GraphMorphism& p2,
                                                 const HomBounds& bounds) {
    if (i1.dom != i2.dom) throw InvalidInput("find_iso_under_over: bases disagree");
    if (p1.cod != p2.cod) throw InvalidInput("find_iso_under_over: targets disagree");
    const Graph& y1 = i1.cod;
    const Graph& y2 = i2.cod;
    HomConstraints cons;
    cons.vcand.assign(y1.vcount(), {});
    cons.ecand.assign(y1.ecount(), {});
    for (std::size_t v = 0; v < y1.vcount(); ++v) {
        std::vector<std::size_t> fiber;
        for (std::size_t w = 0; w < y2.vcount(); ++w)
            if (p2.vmap[w] == p1.vmap[v]) fiber.push_back(w);
        if (fiber.empty()) return std::nullopt;
        cons.vcand[v] = std::move(fiber);
    }
    for (std::size_t e = 0; e < y1.ecount(); ++e) {
        std::vector<std::size_t> fiber;
        for (std::size_t w = 0; w < y2.ecount(); ++w)
            if (p2.emap[w] == p1.emap[e]) fiber.push_back(w);
        if (fiber.empty()) return std::nullopt;
        cons.ecand[e] = std::move(fiber);
    }
    for (std::size_t av = 0; av < i1.dom.vcount(); ++av) {
        std::size_t at = i1.vmap[av];
        std::size_t want = i2.vmap[av];
        if (!std::binary_search(cons.vcand[at].begin(), cons.vcand[at].end(), want))
            return std::nullopt;
        cons.vcand[at] = {want};
    }
    for (std::size_t ae = 0; ae < i1.dom.ecount(); ++ae) {
        std::size_t at = i1.emap[ae];
        std::size_t want = i2.emap[ae];
        if (!std::binary_search(cons.ecand[at].begin(), cons.ecand[at].end(), want))
            return std::nullopt;
        cons.ecand[at] = {want};
    }
    return iso_search(y1, y2, bounds, std::move(cons));
}

}  // namespace goodcolim
