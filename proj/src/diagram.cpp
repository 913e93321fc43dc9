#include "goodcolim/diagram.hpp"

#include <algorithm>

namespace goodcolim {

SmoothReport validate_smooth(const PosetDiagram& d) {
    if (!is_good(d.shape).good) throw InvalidInput("validate_smooth: shape poset is not good");
    SmoothReport report;
    auto fc = functor_check(d);
    if (!fc.ok) {
        report.violations.push_back(fc.violation);
        return report;
    }
    for (std::size_t x = 0; x < d.shape.size(); ++x) {
        ElementClass cls = classify_element(d.shape, x);
        if (cls.kind == ElementKind::isolated) {
            report.links.push_back(LinkEntry{x, d.arrow(*cls.predecessor, x)});
            continue;
        }
        if (cls.kind != ElementKind::limit) continue;
        std::vector<bool> below(d.shape.size(), false);
        for (std::size_t y : d.shape.strict_down_set(x)) below[y] = true;
        auto seg = segment_colimit(d, below);
        std::vector<GraphMorphism> targets;
        for (std::size_t yi : seg.restriction.new_to_old) targets.push_back(d.arrow(yi, x));
        auto med = mediating_morphism(seg.cocone.apex, seg.cocone.legs, targets, d.objects[x]);
        if (!med || !analyze_morphism(*med).is_iso)
            report.violations.push_back("limit element " + d.shape.name(x));
    }
    report.ok = report.violations.empty();
    return report;
}

SegmentColimit segment_colimit(const PosetDiagram& d, const std::vector<bool>& segment) {
    SegmentColimit out;
    out.restriction = restrict_diagram(d, segment);
    out.cocone = colimit_over_poset(out.restriction.diagram);
    return out;
}

GraphMorphism relative_composite(const PosetDiagram& d, const std::vector<bool>& segment) {
    if (std::none_of(segment.begin(), segment.end(), [](bool b) { return b; }))
        throw InvalidInput("relative_composite: segment is empty");
    auto seg = segment_colimit(d, segment);  // rejects non-initial segments
    Cocone full = colimit_over_poset(d);
    std::vector<GraphMorphism> targets;
    for (std::size_t yi : seg.restriction.new_to_old) targets.push_back(full.legs[yi]);
    auto med = mediating_morphism(seg.cocone.apex, seg.cocone.legs, targets, full.apex);
    if (!med) throw InternalError("relative_composite: restriction cocone is inconsistent");
    return *med;
}

// ---------------------------------------------------------------------------

GraphMorphism ChainPresentation::composite() const {
    if (stages.empty()) throw InvalidInput("chain has no stages");
    GraphMorphism acc = identity(stages.front());
    for (const auto& step : steps) acc = compose(step, acc);
    return acc;
}

namespace {

/// Recompute the pushout of a cell step and compare against the stored step
/// through the forced mediating morphism.
void validate_cell_step(const Graph& from, const Graph& to, const GraphMorphism& step,
                        const ChainStep& cert, const GeneratorSet& gens, std::size_t index) {
    auto fail = [&](const std::string& why) {
        throw InvalidInput("chain step " + std::to_string(index) + ": " + why);
    };
    if (!(step.dom == from) || !(step.cod == to)) fail("step endpoints disagree with stages");
    if (cert.is_iso) {
        if (!analyze_morphism(step).is_iso) fail("flagged isomorphism step is not an isomorphism");
        return;
    }
    std::vector<Graph> doms, cods;
    for (const auto& cell : cert.cells) {
        if (cell.generator >= gens.members.size()) fail("generator index out of range");
        const Generator& g = gens.members[cell.generator];
        if (!(cell.attach.dom == g.morphism.dom) || !(cell.attach.cod == from))
            fail("characteristic map endpoints are wrong");
        if (!(cell.coattach.dom == g.morphism.cod) || !(cell.coattach.cod == to))
            fail("co-characteristic map endpoints are wrong");
        cell.attach.validate();
        cell.coattach.validate();
        if (!(compose(step, cell.attach) == compose(cell.coattach, g.morphism)))
            fail("cell square does not commute");
        doms.push_back(g.morphism.dom);
        cods.push_back(g.morphism.cod);
    }
    CoproductResult cd = coproduct(doms);
    CoproductResult cc = coproduct(cods);
    // coproduct of the generators and the tuple maps
    GraphMorphism big_gen{cd.apex, cc.apex, std::vector<std::size_t>(cd.apex.vcount()),
                          std::vector<std::size_t>(cd.apex.ecount())};
    GraphMorphism attach{cd.apex, from, std::vector<std::size_t>(cd.apex.vcount()),
                         std::vector<std::size_t>(cd.apex.ecount())};
    GraphMorphism coattach{cc.apex, to, std::vector<std::size_t>(cc.apex.vcount()),
                           std::vector<std::size_t>(cc.apex.ecount())};
    for (std::size_t j = 0; j < cert.cells.size(); ++j) {
        const auto& cell = cert.cells[j];
        const GraphMorphism& g = gens.members[cell.generator].morphism;
        const GraphMorphism& injd = cd.injections[j];
        const GraphMorphism& injc = cc.injections[j];
        for (std::size_t v = 0; v < g.dom.vcount(); ++v) {
            big_gen.vmap[injd.vmap[v]] = injc.vmap[g.vmap[v]];
            attach.vmap[injd.vmap[v]] = cell.attach.vmap[v];
        }
        for (std::size_t e = 0; e < g.dom.ecount(); ++e) {
            big_gen.emap[injd.emap[e]] = injc.emap[g.emap[e]];
            attach.emap[injd.emap[e]] = cell.attach.emap[e];
        }
        for (std::size_t v = 0; v < g.cod.vcount(); ++v)
            coattach.vmap[injc.vmap[v]] = cell.coattach.vmap[v];
        for (std::size_t e = 0; e < g.cod.ecount(); ++e)
            coattach.emap[injc.emap[e]] = cell.coattach.emap[e];
    }
    big_gen.validate();
    attach.validate();
    coattach.validate();
    PushoutResult po = pushout(attach, big_gen);
    auto med = mediating_morphism(po.apex, {po.leg_left, po.leg_right}, {step, coattach}, to);
    if (!med) fail("step does not cocone over the recomputed pushout");
    if (!analyze_morphism(*med).is_iso) fail("step is not the pushout of its cells");
}

}  // namespace

void validate_chain(const ChainPresentation& chain, const GeneratorSet& gens) {
    if (chain.stages.empty()) throw InvalidInput("chain has no stages");
    if (chain.steps.size() + 1 != chain.stages.size() || chain.certs.size() != chain.steps.size())
        throw InvalidInput("chain arity mismatch");
    for (std::size_t i = 0; i < chain.steps.size(); ++i)
        validate_cell_step(chain.stages[i], chain.stages[i + 1], chain.steps[i], chain.certs[i],
                           gens, i);
}

ChainPresentation linearize(const PosetDiagram& d, const GeneratorSet& gens,
                            const HomBounds& bounds) {
    SmoothReport smooth = validate_smooth(d);
    if (!smooth.ok)
        throw InvalidInput("linearize: diagram is not smooth at " + smooth.violations.front());
    // Po(X) certificates for all links, up front
    std::vector<std::optional<PoCertificate>> link_certs(d.shape.size());
    for (const auto& entry : smooth.links) {
        auto cert = po_membership(entry.link, gens, bounds);
        if (!cert)
            throw InvalidInput("linearize: link at element " + d.shape.name(entry.element) +
                               " fails Po(" + gens.name + ") certification");
        link_certs[entry.element] = std::move(cert);
    }

    auto order = d.shape.linear_extension();
    ChainPresentation chain;
    std::vector<bool> members(d.shape.size(), false);

    std::vector<Cocone> cocones;   // per stage, in restricted indexing
    std::vector<Restriction> restrictions;
    for (std::size_t k = 0; k < order.size(); ++k) {
        members[order[k]] = true;
        auto seg = segment_colimit(d, members);
        chain.stages.push_back(seg.cocone.apex);
        cocones.push_back(seg.cocone);
        restrictions.push_back(seg.restriction);
    }
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        const Cocone& prev = cocones[k];
        const Cocone& next = cocones[k + 1];
        std::vector<GraphMorphism> targets;
        for (std::size_t yi : restrictions[k].new_to_old)
            targets.push_back(next.legs[restrictions[k + 1].old_to_new[yi]]);
        auto med = mediating_morphism(prev.apex, prev.legs, targets, next.apex);
        if (!med) throw InternalError("linearize: stage map is inconsistent");
        chain.steps.push_back(*med);

        std::size_t x = order[k + 1];
        ElementClass cls = classify_element(d.shape, x);
        ChainStep cert;
        if (cls.kind == ElementKind::limit || link_certs[x]->via_iso) {
            cert.is_iso = true;
            if (!analyze_morphism(chain.steps.back()).is_iso)
                throw InternalError("linearize: expected an isomorphism step at " +
                                    d.shape.name(x));
        } else {
            const PoCertificate& pc = *link_certs[x];
            CellAttachment cell;
            cell.generator = *pc.generator;
            cell.generator_name = pc.generator_name;
            std::size_t pred = *cls.predecessor;
            cell.attach = compose(prev.legs[restrictions[k].old_to_new[pred]], *pc.attach);
            cell.coattach = compose(next.legs[restrictions[k + 1].old_to_new[x]], *pc.coattach);
            cert.cells.push_back(std::move(cell));
        }
        chain.certs.push_back(std::move(cert));
    }
    validate_chain(chain, gens);

    // end-to-end composite agrees with the diagram composite
    std::vector<bool> bottom_only(d.shape.size(), false);
    bottom_only[order.front()] = true;
    GraphMorphism delta = relative_composite(d, bottom_only);
    if (!(compose(chain.composite(), identity(chain.stages.front())) == delta))
        throw InternalError("linearize: chain composite disagrees with the diagram composite");
    return chain;
}

// ---------------------------------------------------------------------------

StarExtension star_extend(const PosetDiagram& d) {
    SmoothReport smooth = validate_smooth(d);
    if (!smooth.ok)
        throw InvalidInput("star_extend: diagram is not smooth at " + smooth.violations.front());
    CompletionResult comp = directed_completion(d.shape);
    StarExtension out;
    if (!comp.added_top) {
        out.diagram = d;
        out.colim_comparison = identity(colimit_over_poset(d).apex);
        return out;
    }
    Cocone full = colimit_over_poset(d);
    out.diagram.shape = comp.poset;
    out.diagram.objects = d.objects;
    out.diagram.objects.push_back(full.apex);
    out.diagram.steps = d.steps;
    std::size_t top = *comp.added_top;
    for (auto [a, b] : comp.poset.covers())
        if (b == top) out.diagram.steps.emplace(std::make_pair(a, b), full.legs[a]);
    out.added_top = top;

    Cocone extended = colimit_over_poset(out.diagram);
    std::vector<GraphMorphism> targets(extended.legs.begin(), extended.legs.end() - 1);
    auto med = mediating_morphism(full.apex, full.legs, targets, extended.apex);
    if (!med) throw InternalError("star_extend: comparison map is inconsistent");
    if (!analyze_morphism(*med).is_iso)
        throw InternalError("star_extend: colimit comparison is not an isomorphism");
    out.colim_comparison = *med;
    return out;
}

LimitExtensionCheck limit_extension_check(const PosetDiagram& d,
                                          const std::vector<bool>& segment) {
    LimitExtensionCheck out;
    out.all_limit = true;
    for (std::size_t x = 0; x < d.shape.size(); ++x) {
        if (segment[x]) continue;
        if (classify_element(d.shape, x).kind != ElementKind::limit) {
            out.all_limit = false;
            break;
        }
    }
    out.iso = analyze_morphism(relative_composite(d, segment)).is_iso;
    if (out.all_limit && !out.iso)
        throw InternalError("limit_extension_check: limit-only extension failed to be an iso");
    return out;
}

}  // namespace goodcolim
