#include "goodcolim/lifting.hpp"

#include <algorithm>

namespace goodcolim {

void GeneratorSet::validate(const HomBounds& bounds) const {
    for (const auto& g : members) {
        g.morphism.validate();
        if (g.morphism.dom.vcount() > bounds.max_vertices ||
            g.morphism.cod.vcount() > bounds.max_vertices)
            throw InvalidInput("generator " + g.name + " exceeds the enumeration bound");
    }
}

GeneratorSet x_std() {
    GeneratorSet x;
    x.name = "X_std";
    {
        Generator g;
        g.name = "x1";
        g.morphism = GraphMorphism{Graph::empty(), Graph::discrete(1), {}, {}};
        x.members.push_back(std::move(g));
    }
    {
        Generator g;
        g.name = "x2";
        Graph v2;
        v2.add_vertex("a");
        v2.add_vertex("b");
        g.morphism = GraphMorphism{v2, Graph::single_edge(), {0, 1}, {}};
        x.members.push_back(std::move(g));
    }
    return x;
}

RlpReport rlp_check(const GraphMorphism& p, const GeneratorSet& gens, const HomBounds& bounds) {
    p.validate();
    gens.validate(bounds);
    RlpReport report;

    std::vector<LiftingSquare> squares;
    for (std::size_t gi = 0; gi < gens.members.size(); ++gi) {
        const GraphMorphism& g = gens.members[gi].morphism;
        auto us = enumerate_homs(g.dom, p.dom, bounds);
        auto vs = enumerate_homs(g.cod, p.cod, bounds);
        for (const Hom& uh : us) {
            GraphMorphism u = to_morphism(g.dom, p.dom, uh);
            GraphMorphism pu = compose(p, u);
            for (const Hom& vh : vs) {
                GraphMorphism v = to_morphism(g.cod, p.cod, vh);
                if (!(pu == compose(v, g))) continue;
                squares.push_back(LiftingSquare{gi, u, v, std::nullopt});
            }
        }
    }

    // independent diagonal searches; merged back in enumeration order
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < squares.size(); ++i) {
        LiftingSquare& sq = squares[i];
        sq.diagonal =
            find_lift(gens.members[sq.generator].morphism, sq.u, p, sq.v, bounds);
    }

    for (std::size_t i = 0; i < squares.size(); ++i) {
        if (!squares[i].diagonal) {
            report.holds = false;
            report.counterexample = squares[i];
            report.squares.assign(squares.begin(), squares.begin() + static_cast<long>(i));
            return report;
        }
    }
    report.holds = true;
    report.squares = std::move(squares);
    return report;
}

std::optional<PoCertificate> po_membership(const GraphMorphism& f, const GeneratorSet& gens,
                                           const HomBounds& bounds) {
    f.validate();
    gens.validate(bounds);
    if (analyze_morphism(f).is_iso) {
        PoCertificate cert;
        cert.f = f;
        cert.via_iso = true;
        cert.iso_inverse = invert(f);
        return cert;
    }
    for (std::size_t gi = 0; gi < gens.members.size(); ++gi) {
        const GraphMorphism& g = gens.members[gi].morphism;
        auto us = enumerate_homs(g.dom, f.dom, bounds);
        auto vs = enumerate_homs(g.cod, f.cod, bounds);
        for (const Hom& uh : us) {
            GraphMorphism u = to_morphism(g.dom, f.dom, uh);
            GraphMorphism fu = compose(f, u);
            for (const Hom& vh : vs) {
                GraphMorphism v = to_morphism(g.cod, f.cod, vh);
                if (!(fu == compose(v, g))) continue;
                PushoutResult po = pushout(u, g);
                auto med = mediating_morphism(po.apex, {po.leg_left, po.leg_right}, {f, v}, f.cod);
                if (!med) continue;
                if (!analyze_morphism(*med).is_iso) continue;
                PoCertificate cert;
                cert.f = f;
                cert.generator = gi;
                cert.generator_name = gens.members[gi].name;
                cert.attach = u;
                cert.coattach = v;
                cert.mediating = *med;
                return cert;
            }
        }
    }
    return std::nullopt;
}

void validate_po_certificate(const PoCertificate& cert, const GeneratorSet& gens) {
    cert.f.validate();
    if (cert.via_iso) {
        if (!cert.iso_inverse) throw InvalidInput("po certificate: missing inverse witness");
        if (!(compose(*cert.iso_inverse, cert.f) == identity(cert.f.dom)) ||
            !(compose(cert.f, *cert.iso_inverse) == identity(cert.f.cod)))
            throw InvalidInput("po certificate: inverse witness fails");
        return;
    }
    if (!cert.generator || !cert.attach || !cert.coattach || !cert.mediating)
        throw InvalidInput("po certificate: missing attaching data");
    if (*cert.generator >= gens.members.size())
        throw InvalidInput("po certificate: generator index out of range");
    const GraphMorphism& g = gens.members[*cert.generator].morphism;
    if (!(compose(cert.f, *cert.attach) == compose(*cert.coattach, g)))
        throw InvalidInput("po certificate: attaching square does not commute");
    PushoutResult po = pushout(*cert.attach, g);
    auto med = mediating_morphism(po.apex, {po.leg_left, po.leg_right},
                                  {cert.f, *cert.coattach}, cert.f.cod);
    if (!med || !(*med == *cert.mediating) || !analyze_morphism(*med).is_iso)
        throw InvalidInput("po certificate: mediating witness fails recomputation");
}

}  // namespace goodcolim
