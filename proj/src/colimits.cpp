#include "goodcolim/colimits.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <string>

namespace goodcolim {

namespace {

const HomBounds kInternalBounds{64, 1u << 21};

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }

    // representative is the smallest member
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

/// Quotient of a disjoint union of graphs by generating relations between
/// (part, vertex) and (part, edge) pairs; canonical representatives are the
/// smallest generators in part-major order.
struct QuotientResult {
    Graph apex;
    std::vector<GraphMorphism> legs;
};

QuotientResult quotient(const std::vector<Graph>& parts,
                        const std::vector<std::array<std::size_t, 4>>& vrel,  // p1,v1,p2,v2
                        const std::vector<std::array<std::size_t, 4>>& erel) {
    const std::size_t n = parts.size();
    std::vector<std::size_t> voff(n + 1, 0), eoff(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        voff[i + 1] = voff[i] + parts[i].vcount();
        eoff[i + 1] = eoff[i] + parts[i].ecount();
    }
    UnionFind vuf(voff[n]), euf(eoff[n]);
    for (const auto& r : vrel) vuf.unite(voff[r[0]] + r[1], voff[r[2]] + r[3]);
    for (const auto& r : erel) euf.unite(eoff[r[0]] + r[1], eoff[r[2]] + r[3]);

    std::vector<std::size_t> vclass(voff[n], 0), eclass(eoff[n], 0);
    std::size_t nv = 0, ne = 0;
    std::vector<std::size_t> vroots, eroots;
    for (std::size_t i = 0; i < voff[n]; ++i)
        if (vuf.find(i) == i) {
            vclass[i] = nv++;
            vroots.push_back(i);
        }
    for (std::size_t i = 0; i < voff[n]; ++i) vclass[i] = vclass[vuf.find(i)];
    for (std::size_t i = 0; i < eoff[n]; ++i)
        if (euf.find(i) == i) {
            eclass[i] = ne++;
            eroots.push_back(i);
        }
    for (std::size_t i = 0; i < eoff[n]; ++i) eclass[i] = eclass[euf.find(i)];

    auto part_of = [](const std::vector<std::size_t>& off, std::size_t g) {
        std::size_t p = 0;
        while (off[p + 1] <= g) ++p;
        return p;
    };

    QuotientResult out;
    for (std::size_t c = 0; c < nv; ++c) out.apex.add_vertex("v" + std::to_string(c));
    for (std::size_t c = 0; c < ne; ++c) {
        std::size_t root = eroots[c];
        std::size_t p = part_of(eoff, root);
        std::size_t e = root - eoff[p];
        std::size_t s = vclass[voff[p] + parts[p].esrc[e]];
        std::size_t t = vclass[voff[p] + parts[p].etgt[e]];
        out.apex.add_edge("e" + std::to_string(c), s, t);
    }
    for (std::size_t p = 0; p < n; ++p) {
        GraphMorphism leg{parts[p], out.apex, {}, {}};
        for (std::size_t v = 0; v < parts[p].vcount(); ++v) leg.vmap.push_back(vclass[voff[p] + v]);
        for (std::size_t e = 0; e < parts[p].ecount(); ++e) leg.emap.push_back(eclass[eoff[p] + e]);
        out.legs.push_back(std::move(leg));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PosetDiagram

void PosetDiagram::basic_validate() const {
    if (objects.size() != shape.size())
        throw InvalidInput("diagram: one object per shape element required");
    for (const auto& [cover, step] : steps) {
        auto [a, b] = cover;
        if (a >= shape.size() || b >= shape.size()) throw InvalidInput("diagram: step outside shape");
        if (step.dom != objects[a] || step.cod != objects[b])
            throw InvalidInput("diagram: step endpoints disagree with objects at cover " +
                               shape.name(a) + " < " + shape.name(b));
        step.validate();
    }
    for (auto [a, b] : shape.covers())
        if (steps.find({a, b}) == steps.end())
            throw InvalidInput("diagram: missing step for cover " + shape.name(a) + " < " +
                               shape.name(b));
}

GraphMorphism PosetDiagram::arrow(std::size_t x, std::size_t y) const {
    if (!shape.leq(x, y)) throw InvalidInput("arrow: elements are not comparable");
    GraphMorphism acc = identity(objects[x]);
    std::size_t cur = x;
    while (cur != y) {
        std::size_t next = shape.size();
        for (const auto& [cover, step] : steps) {
            if (cover.first != cur) continue;
            if (!shape.leq(cover.second, y)) continue;
            next = std::min(next, cover.second);
        }
        if (next == shape.size()) throw InternalError("arrow: no cover path");
        acc = compose(steps.at({cur, next}), acc);
        cur = next;
    }
    return acc;
}

FunctorCheck functor_check(const PosetDiagram& d) {
    FunctorCheck r;
    d.basic_validate();
    const std::size_t n = d.shape.size();
    auto order = d.shape.linear_extension();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    // arrows[x][y]
    std::vector<std::vector<std::optional<GraphMorphism>>> arrows(
        n, std::vector<std::optional<GraphMorphism>>(n));
    for (std::size_t x = 0; x < n; ++x) arrows[x][x] = identity(d.objects[x]);
    for (std::size_t yi = 0; yi < n; ++yi) {
        std::size_t y = order[yi];
        for (std::size_t x = 0; x < n; ++x) {
            if (!d.shape.lt(x, y)) continue;
            std::optional<GraphMorphism> found;
            for (const auto& [cover, step] : d.steps) {
                if (cover.second != y) continue;
                std::size_t w = cover.first;
                if (!d.shape.leq(x, w)) continue;
                if (!arrows[x][w])
                    throw InternalError("functor_check: missing intermediate arrow");
                GraphMorphism cand = compose(step, *arrows[x][w]);
                if (!found) {
                    found = std::move(cand);
                } else if (!(*found == cand)) {
                    r.violation = "composition pair (" + d.shape.name(x) + ", " +
                                  d.shape.name(y) + ")";
                    return r;
                }
            }
            if (!found) throw InternalError("functor_check: closure without cover path");
            arrows[x][y] = std::move(found);
        }
    }
    r.ok = true;
    return r;
}

Cocone colimit_over_poset(const PosetDiagram& d) {
    auto fc = functor_check(d);
    if (!fc.ok) throw InvalidInput("colimit_over_poset: diagram is not a functor at " + fc.violation);
    std::vector<std::array<std::size_t, 4>> vrel, erel;
    for (const auto& [cover, step] : d.steps) {
        auto [a, b] = cover;
        for (std::size_t v = 0; v < step.dom.vcount(); ++v) vrel.push_back({a, v, b, step.vmap[v]});
        for (std::size_t e = 0; e < step.dom.ecount(); ++e) erel.push_back({a, e, b, step.emap[e]});
    }
    auto q = quotient(d.objects, vrel, erel);
    return Cocone{std::move(q.apex), std::move(q.legs)};
}

Restriction restrict_diagram(const PosetDiagram& d, const std::vector<bool>& members) {
    if (!d.shape.is_initial_segment(members))
        throw InvalidInput("restrict_diagram: not an initial segment");
    Restriction out;
    out.old_to_new.assign(d.shape.size(), static_cast<std::size_t>(-1));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d.shape.size(); ++i) {
        if (!members[i]) continue;
        out.old_to_new[i] = names.size();
        out.new_to_old.push_back(i);
        names.push_back(d.shape.name(i));
        out.diagram.objects.push_back(d.objects[i]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (auto [a, b] : d.shape.covers())
        if (members[a] && members[b]) covers.emplace_back(out.old_to_new[a], out.old_to_new[b]);
    out.diagram.shape = FinitePoset::make(std::move(names), std::move(covers));
    for (const auto& [cover, step] : d.steps) {
        auto [a, b] = cover;
        if (members[a] && members[b])
            out.diagram.steps.emplace(std::make_pair(out.old_to_new[a], out.old_to_new[b]), step);
    }
    return out;
}

std::optional<GraphMorphism> mediating_morphism(const Graph& apex,
                                                const std::vector<GraphMorphism>& legs,
                                                const std::vector<GraphMorphism>& targets,
                                                const Graph& z) {
    if (legs.size() != targets.size()) throw InvalidInput("mediating_morphism: arity mismatch");
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> vm(apex.vcount(), none), em(apex.ecount(), none);
    for (std::size_t i = 0; i < legs.size(); ++i) {
        for (std::size_t v = 0; v < legs[i].vmap.size(); ++v) {
            std::size_t at = legs[i].vmap[v];
            std::size_t want = targets[i].vmap[v];
            if (vm[at] == none)
                vm[at] = want;
            else if (vm[at] != want)
                return std::nullopt;
        }
        for (std::size_t e = 0; e < legs[i].emap.size(); ++e) {
            std::size_t at = legs[i].emap[e];
            std::size_t want = targets[i].emap[e];
            if (em[at] == none)
                em[at] = want;
            else if (em[at] != want)
                return std::nullopt;
        }
    }
    for (std::size_t v : vm)
        if (v == none) throw InvalidInput("mediating_morphism: legs are not jointly surjective");
    for (std::size_t e : em)
        if (e == none) throw InvalidInput("mediating_morphism: legs are not jointly surjective");
    GraphMorphism med{apex, z, std::move(vm), std::move(em)};
    // src/tgt compatibility can still fail when the targets are not a cocone
    for (std::size_t e = 0; e < apex.ecount(); ++e)
        if (z.esrc[med.emap[e]] != med.vmap[apex.esrc[e]] ||
            z.etgt[med.emap[e]] != med.vmap[apex.etgt[e]])
            return std::nullopt;
    return med;
}

// ---------------------------------------------------------------------------
// small graph enumeration

std::vector<Graph> enumerate_small_graphs(std::size_t maxv, std::size_t maxe) {
    std::vector<Graph> out;
    for (std::size_t v = 0; v <= maxv; ++v) {
        std::size_t pair_count = v * v;
        std::size_t top_e = v == 0 ? 0 : maxe;
        for (std::size_t e = 0; e <= top_e; ++e) {
            // nondecreasing sequences of pair codes, length e
            std::vector<std::size_t> codes(e, 0);
            std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                                    std::size_t start) {
                if (i == e) {
                    Graph g = Graph::discrete(v);
                    for (std::size_t k = 0; k < e; ++k)
                        g.add_edge("e" + std::to_string(k), codes[k] / v, codes[k] % v);
                    out.push_back(std::move(g));
                    return;
                }
                for (std::size_t c = start; c < pair_count; ++c) {
                    codes[i] = c;
                    rec(i + 1, c);
                }
            };
            if (e == 0)
                out.push_back(Graph::discrete(v));
            else if (pair_count > 0)
                rec(0, 0);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// pushout / coproduct

PushoutResult pushout(const GraphMorphism& f, const GraphMorphism& g, const ProbeBound& probe) {
    if (f.dom != g.dom) throw InvalidInput("pushout: the two morphisms have different domains");
    f.validate();
    g.validate();
    std::vector<Graph> parts{f.cod, g.cod};
    std::vector<std::array<std::size_t, 4>> vrel, erel;
    for (std::size_t v = 0; v < f.dom.vcount(); ++v) vrel.push_back({0, f.vmap[v], 1, g.vmap[v]});
    for (std::size_t e = 0; e < f.dom.ecount(); ++e) erel.push_back({0, f.emap[e], 1, g.emap[e]});
    auto q = quotient(parts, vrel, erel);

    PushoutResult out;
    out.apex = q.apex;
    out.leg_left = q.legs[0];
    out.leg_right = q.legs[1];
    out.cert = PushoutCertificate{f, g, out.leg_left, out.leg_right, probe, {}};
    for (const Graph& z : enumerate_small_graphs(probe.max_vertices, probe.max_edges)) {
        auto us = enumerate_homs(f.cod, z, kInternalBounds);
        auto vs = enumerate_homs(g.cod, z, kInternalBounds);
        for (const Hom& uh : us) {
            GraphMorphism u = to_morphism(f.cod, z, uh);
            GraphMorphism uf = compose(u, f);
            for (const Hom& vh : vs) {
                GraphMorphism v = to_morphism(g.cod, z, vh);
                if (!(uf == compose(v, g))) continue;
                auto med = mediating_morphism(out.apex, {out.leg_left, out.leg_right}, {u, v}, z);
                if (!med)
                    throw InternalError("pushout: commuting cocone without a mediating morphism");
                out.cert.witnesses.push_back(MediatingWitness{z, u, v, *med});
            }
        }
    }
    return out;
}

void validate_pushout_certificate(const PushoutCertificate& cert) {
    cert.f.validate();
    cert.g.validate();
    cert.leg_left.validate();
    cert.leg_right.validate();
    if (!(compose(cert.leg_left, cert.f) == compose(cert.leg_right, cert.g)))
        throw InvalidInput("pushout certificate: square does not commute");
    PushoutResult fresh = pushout(cert.f, cert.g, cert.probe);
    if (!(fresh.leg_left == cert.leg_left))
        throw InvalidInput("pushout certificate: left leg disagrees with recomputation");
    if (!(fresh.leg_right == cert.leg_right))
        throw InvalidInput("pushout certificate: right leg disagrees with recomputation");
    if (fresh.cert.witnesses.size() != cert.witnesses.size())
        throw InvalidInput("pushout certificate: probe witness family is incomplete");
    for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
        const auto& a = fresh.cert.witnesses[i];
        const auto& b = cert.witnesses[i];
        if (!(a.test == b.test && a.u == b.u && a.v == b.v && a.mediating == b.mediating))
            throw InvalidInput("pushout certificate: witness " + std::to_string(i) +
                               " disagrees with recomputation");
    }
}

CoproductResult coproduct(const std::vector<Graph>& parts) {
    for (const auto& p : parts) p.validate();
    auto q = quotient(parts, {}, {});
    return CoproductResult{std::move(q.apex), std::move(q.legs)};
}

// ---------------------------------------------------------------------------

StageFactorization factor_through_stage(const GraphMorphism& m, const PosetDiagram& d,
                                        const Cocone& cocone) {
    if (!is_kappa_good_and_directed(d.shape, Kappa::w()).kappa_directed)
        throw InvalidInput("factor_through_stage: diagram shape is not directed");
    if (!(m.cod == cocone.apex)) throw InvalidInput("factor_through_stage: codomain is not the apex");
    // joint surjectivity of the cocone
    {
        std::vector<bool> vhit(cocone.apex.vcount(), false), ehit(cocone.apex.ecount(), false);
        for (const auto& leg : cocone.legs) {
            for (std::size_t v : leg.vmap) vhit[v] = true;
            for (std::size_t e : leg.emap) ehit[e] = true;
        }
        if (!std::all_of(vhit.begin(), vhit.end(), [](bool b) { return b; }) ||
            !std::all_of(ehit.begin(), ehit.end(), [](bool b) { return b; }))
            throw InvalidInput("factor_through_stage: cocone legs are not jointly surjective");
    }
    for (std::size_t x : d.shape.linear_extension()) {
        const GraphMorphism& leg = cocone.legs[x];
        const Graph& stage = d.objects[x];
        HomConstraints cons;
        cons.vcand.assign(m.dom.vcount(), {});
        cons.ecand.assign(m.dom.ecount(), {});
        bool feasible = true;
        for (std::size_t a = 0; a < m.dom.vcount() && feasible; ++a) {
            for (std::size_t w = 0; w < stage.vcount(); ++w)
                if (leg.vmap[w] == m.vmap[a]) cons.vcand[a].push_back(w);
            feasible = !cons.vcand[a].empty();
        }
        for (std::size_t a = 0; a < m.dom.ecount() && feasible; ++a) {
            for (std::size_t w = 0; w < stage.ecount(); ++w)
                if (leg.emap[w] == m.emap[a]) cons.ecand[a].push_back(w);
            feasible = !cons.ecand[a].empty();
        }
        if (!feasible) continue;
        auto h = find_first_hom(m.dom, stage, kInternalBounds, cons);
        if (h) return StageFactorization{x, to_morphism(m.dom, stage, *h)};
    }
    throw InternalError("factor_through_stage: no stage admits a lift");
}

// ---------------------------------------------------------------------------

Subgraph subgraph(const Graph& ambient, const std::vector<bool>& vmask,
                  const std::vector<bool>& emask) {
    Subgraph out;
    std::vector<std::size_t> vidx(ambient.vcount(), 0);
    for (std::size_t v = 0; v < ambient.vcount(); ++v) {
        if (!vmask[v]) continue;
        vidx[v] = out.graph.add_vertex(ambient.vnames[v]);
    }
    std::vector<std::size_t> eidx(ambient.ecount(), 0);
    for (std::size_t e = 0; e < ambient.ecount(); ++e) {
        if (!emask[e]) continue;
        if (!vmask[ambient.esrc[e]] || !vmask[ambient.etgt[e]])
            throw InvalidInput("subgraph: edge endpoint outside the vertex mask");
        eidx[e] = out.graph.add_edge(ambient.enames[e], vidx[ambient.esrc[e]],
                                     vidx[ambient.etgt[e]]);
    }
    out.inclusion = GraphMorphism{out.graph, ambient, {}, {}};
    for (std::size_t v = 0; v < ambient.vcount(); ++v)
        if (vmask[v]) out.inclusion.vmap.push_back(v);
    for (std::size_t e = 0; e < ambient.ecount(); ++e)
        if (emask[e]) out.inclusion.emap.push_back(e);
    return out;
}

ImageFactorization image_factorization(const GraphMorphism& f) {
    std::vector<bool> vmask(f.cod.vcount(), false), emask(f.cod.ecount(), false);
    for (std::size_t v : f.vmap) vmask[v] = true;
    for (std::size_t e : f.emap) emask[e] = true;
    Subgraph sub = subgraph(f.cod, vmask, emask);
    // index of each ambient vertex/edge inside the subgraph
    std::vector<std::size_t> vback(f.cod.vcount(), 0), eback(f.cod.ecount(), 0);
    for (std::size_t i = 0; i < sub.inclusion.vmap.size(); ++i) vback[sub.inclusion.vmap[i]] = i;
    for (std::size_t i = 0; i < sub.inclusion.emap.size(); ++i) eback[sub.inclusion.emap[i]] = i;
    ImageFactorization out;
    out.image = sub.graph;
    out.inclusion = sub.inclusion;
    out.corestriction = GraphMorphism{f.dom, sub.graph, {}, {}};
    for (std::size_t v : f.vmap) out.corestriction.vmap.push_back(vback[v]);
    for (std::size_t e : f.emap) out.corestriction.emap.push_back(eback[e]);
    return out;
}

}  // namespace goodcolim
