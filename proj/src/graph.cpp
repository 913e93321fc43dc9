#include "goodcolim/graph.hpp"

#include <algorithm>
#include <set>

namespace goodcolim {

std::size_t Graph::add_vertex(std::string name) {
    vnames.push_back(std::move(name));
    return vnames.size() - 1;
}

std::size_t Graph::add_edge(std::string name, std::size_t src, std::size_t tgt) {
    if (src >= vcount() || tgt >= vcount())
        throw InvalidInput("edge endpoints out of range");
    enames.push_back(std::move(name));
    esrc.push_back(src);
    etgt.push_back(tgt);
    return enames.size() - 1;
}

std::optional<std::size_t> Graph::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vnames.size(); ++i)
        if (vnames[i] == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> Graph::edge_index(const std::string& name) const {
    for (std::size_t i = 0; i < enames.size(); ++i)
        if (enames[i] == name) return i;
    return std::nullopt;
}

void Graph::validate() const {
    if (esrc.size() != enames.size() || etgt.size() != enames.size())
        throw InvalidInput("edge table sizes disagree");
    std::set<std::string> seen;
    for (const auto& n : vnames)
        if (!seen.insert(n).second) throw InvalidInput("duplicate vertex id: " + n);
    seen.clear();
    for (const auto& n : enames)
        if (!seen.insert(n).second) throw InvalidInput("duplicate edge id: " + n);
    for (std::size_t e = 0; e < ecount(); ++e)
        if (esrc[e] >= vcount() || etgt[e] >= vcount())
            throw InvalidInput("edge " + enames[e] + " has endpoint outside the vertex set");
}

Graph Graph::empty() { return Graph{}; }

Graph Graph::discrete(std::size_t n) {
    Graph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    return g;
}

Graph Graph::single_edge() {
    Graph g;
    std::size_t a = g.add_vertex("a");
    std::size_t b = g.add_vertex("b");
    g.add_edge("e", a, b);
    return g;
}

Graph Graph::loop() {
    Graph g;
    std::size_t v = g.add_vertex("v");
    g.add_edge("e", v, v);
    return g;
}

Graph canonical(const Graph& g) {
    Graph out = g;
    for (std::size_t i = 0; i < out.vnames.size(); ++i) out.vnames[i] = "v" + std::to_string(i);
    for (std::size_t i = 0; i < out.enames.size(); ++i) out.enames[i] = "e" + std::to_string(i);
    return out;
}

void GraphMorphism::validate() const {
    dom.validate();
    cod.validate();
    if (vmap.size() != dom.vcount() || emap.size() != dom.ecount())
        throw InvalidInput("morphism maps are not total");
    for (std::size_t v : vmap)
        if (v >= cod.vcount()) throw InvalidInput("vmap lands outside the codomain");
    for (std::size_t e : emap)
        if (e >= cod.ecount()) throw InvalidInput("emap lands outside the codomain");
    for (std::size_t e = 0; e < dom.ecount(); ++e) {
        if (cod.esrc[emap[e]] != vmap[dom.esrc[e]] || cod.etgt[emap[e]] != vmap[dom.etgt[e]])
            throw InvalidInput("emap does not commute with src/tgt at edge " + dom.enames[e]);
    }
}

GraphMorphism identity(const Graph& g) {
    GraphMorphism m{g, g, {}, {}};
    m.vmap.resize(g.vcount());
    m.emap.resize(g.ecount());
    for (std::size_t i = 0; i < g.vcount(); ++i) m.vmap[i] = i;
    for (std::size_t i = 0; i < g.ecount(); ++i) m.emap[i] = i;
    return m;
}

GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f) {
    if (f.cod != g.dom) throw InvalidInput("compose: middle objects disagree");
    GraphMorphism out{f.dom, g.cod, {}, {}};
    out.vmap.reserve(f.vmap.size());
    out.emap.reserve(f.emap.size());
    for (std::size_t v : f.vmap) out.vmap.push_back(g.vmap[v]);
    for (std::size_t e : f.emap) out.emap.push_back(g.emap[e]);
    return out;
}

MorphismAnalysis analyze_morphism(const GraphMorphism& f) {
    auto injective = [](const std::vector<std::size_t>& m, std::size_t n) {
        std::vector<bool> hit(n, false);
        for (std::size_t x : m) {
            if (hit[x]) return false;
            hit[x] = true;
        }
        return true;
    };
    auto surjective = [](const std::vector<std::size_t>& m, std::size_t n) {
        std::vector<bool> hit(n, false);
        for (std::size_t x : m) hit[x] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    };
    MorphismAnalysis a;
    a.is_mono = injective(f.vmap, f.cod.vcount()) && injective(f.emap, f.cod.ecount());
    a.is_epi = surjective(f.vmap, f.cod.vcount()) && surjective(f.emap, f.cod.ecount());
    a.is_iso = a.is_mono && a.is_epi;
    return a;
}

GraphMorphism invert(const GraphMorphism& f) {
    if (!analyze_morphism(f).is_iso) throw InvalidInput("invert: morphism is not an isomorphism");
    GraphMorphism out{f.cod, f.dom, std::vector<std::size_t>(f.cod.vcount()),
                      std::vector<std::size_t>(f.cod.ecount())};
    for (std::size_t v = 0; v < f.vmap.size(); ++v) out.vmap[f.vmap[v]] = v;
    for (std::size_t e = 0; e < f.emap.size(); ++e) out.emap[f.emap[e]] = e;
    return out;
}

GraphMorphism canonical(const GraphMorphism& f) {
    GraphMorphism out = f;
    out.dom = canonical(f.dom);
    out.cod = canonical(f.cod);
    return out;
}

}  // namespace goodcolim
