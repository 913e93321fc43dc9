#include "goodcolim/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace goodcolim {

FinitePoset FinitePoset::make(std::vector<std::string> names,
                              std::vector<std::pair<std::size_t, std::size_t>> covers) {
    FinitePoset p;
    p.names_ = std::move(names);
    p.covers_ = std::move(covers);
    std::set<std::string> seen;
    for (const auto& n : p.names_)
        if (!seen.insert(n).second) throw InvalidInput("duplicate poset element id: " + n);
    const std::size_t n = p.names_.size();
    for (auto [a, b] : p.covers_) {
        if (a >= n || b >= n) throw InvalidInput("cover endpoint out of range");
        if (a == b) throw InvalidInput("reflexive cover " + p.names_[a]);
    }
    // transitive closure by DFS along covers, cycle detection via Kahn
    std::vector<std::vector<std::size_t>> up(n);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [a, b] : p.covers_) {
        up[a].push_back(b);
        indeg[b]++;
    }
    {
        std::queue<std::size_t> q;
        std::size_t done = 0;
        auto d = indeg;
        for (std::size_t i = 0; i < n; ++i)
            if (d[i] == 0) q.push(i);
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop();
            ++done;
            for (std::size_t y : up[x])
                if (--d[y] == 0) q.push(y);
        }
        if (done != n) throw InvalidInput("covering relation has a cycle; not a partial order");
    }
    p.leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        // DFS from i
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            if (p.leq_[i][x]) continue;
            p.leq_[i][x] = true;
            for (std::size_t y : up[x]) stack.push_back(y);
        }
    }
    return p;
}

FinitePoset FinitePoset::make_named(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& covers) {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    FinitePoset tmp;
    tmp.names_ = names;
    for (const auto& [a, b] : covers) {
        auto ia = tmp.index_of(a);
        auto ib = tmp.index_of(b);
        if (!ia || !ib) throw InvalidInput("cover references unknown element: " + a + " < " + b);
        idx.emplace_back(*ia, *ib);
    }
    return make(names, idx);
}

std::optional<std::size_t> FinitePoset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool FinitePoset::well_founded() const {
    // Finite posets validated on construction are always well-founded; verify
    // anyway so lazily-presented backends inherit a real check.
    std::vector<bool> alive(size(), true);
    std::size_t remaining = size();
    while (remaining > 0) {
        bool found = false;
        for (std::size_t x = 0; x < size() && !found; ++x) {
            if (!alive[x]) continue;
            bool minimal = true;
            for (std::size_t y = 0; y < size(); ++y)
                if (alive[y] && lt(y, x)) {
                    minimal = false;
                    break;
                }
            if (minimal) {
                alive[x] = false;
                --remaining;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::optional<std::size_t> FinitePoset::least() const {
    for (std::size_t x = 0; x < size(); ++x) {
        bool ok = true;
        for (std::size_t y = 0; y < size(); ++y)
            if (!leq(x, y)) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return std::nullopt;
}

std::optional<std::size_t> FinitePoset::greatest() const {
    for (std::size_t x = 0; x < size(); ++x) {
        bool ok = true;
        for (std::size_t y = 0; y < size(); ++y)
            if (!leq(y, x)) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return std::nullopt;
}

std::vector<std::size_t> FinitePoset::down_set(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y)
        if (leq(y, x)) out.push_back(y);
    return out;
}

std::vector<std::size_t> FinitePoset::strict_down_set(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y)
        if (lt(y, x)) out.push_back(y);
    return out;
}

std::vector<std::size_t> FinitePoset::up_set(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y)
        if (leq(x, y)) out.push_back(y);
    return out;
}

bool FinitePoset::is_initial_segment(const std::vector<bool>& members) const {
    if (members.size() != size()) return false;
    for (std::size_t x = 0; x < size(); ++x) {
        if (!members[x]) continue;
        for (std::size_t y = 0; y < size(); ++y)
            if (lt(y, x) && !members[y]) return false;
    }
    return true;
}

std::vector<std::vector<bool>> FinitePoset::initial_segments() const {
    std::vector<std::size_t> order = linear_extension();
    std::vector<std::vector<bool>> out;
    std::vector<bool> current(size(), false);
    // choose include/exclude along a topological order; include allowed only
    // when all strict predecessors are in
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) {
            out.push_back(current);
            return;
        }
        std::size_t x = order[i];
        rec(i + 1);
        bool ok = true;
        for (std::size_t y = 0; y < size(); ++y)
            if (lt(y, x) && !current[y]) {
                ok = false;
                break;
            }
        if (ok) {
            current[x] = true;
            rec(i + 1);
            current[x] = false;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const std::vector<bool>& a, const std::vector<bool>& b) {
        std::size_t ca = std::count(a.begin(), a.end(), true);
        std::size_t cb = std::count(b.begin(), b.end(), true);
        if (ca != cb) return ca < cb;
        return a > b;  // among equal sizes, earlier elements first
    });
    return out;
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
    const std::size_t n = size();
    std::vector<std::vector<std::size_t>> up(n);
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (lt(x, y)) {
                up[x].push_back(y);
                indeg[y]++;
            }
    auto cmp = [&](std::size_t a, std::size_t b) { return names_[a] > names_[b]; };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        std::size_t x = ready.top();
        ready.pop();
        order.push_back(x);
        for (std::size_t y : up[x])
            if (--indeg[y] == 0) ready.push(y);
    }
    if (order.size() != n) throw InternalError("linear_extension: order relation is cyclic");
    return order;
}

GoodnessReport is_good(const FinitePoset& p) {
    GoodnessReport r;
    if (!p.well_founded()) return r;
    auto l = p.least();
    r.good = l.has_value();
    r.least = l;
    return r;
}

ElementClass classify_element(const FinitePoset& p, std::size_t x) {
    if (x >= p.size()) throw InvalidInput("classify_element: element out of range");
    auto least = p.least();
    if (!least) throw InvalidInput("classify_element: poset is not good");
    ElementClass c;
    if (x == *least) {
        c.kind = ElementKind::bottom;
        return c;
    }
    auto below = p.strict_down_set(x);
    for (std::size_t t : below) {
        bool top = true;
        for (std::size_t y : below)
            if (!p.leq(y, t)) {
                top = false;
                break;
            }
        if (top) {
            c.kind = ElementKind::isolated;
            c.predecessor = t;
            return c;
        }
    }
    c.kind = ElementKind::limit;
    return c;
}

KappaReport is_kappa_good_and_directed(const FinitePoset& p, const Kappa& kappa) {
    KappaReport r;
    r.kappa_good = true;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (!kappa.admits(p.down_set(x).size())) {
            r.kappa_good = false;
            break;
        }
    if (kappa.omega) {
        // every finite subset of a finite poset has an upper bound iff the
        // whole poset does
        r.kappa_directed = p.size() > 0 && p.greatest().has_value();
        return r;
    }
    // check all subsets of cardinality < kappa
    std::size_t limit = kappa.finite == 0 ? 0 : kappa.finite - 1;
    limit = std::min(limit, p.size());
    std::vector<std::size_t> subset;
    bool ok = true;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!ok) return;
        if (!subset.empty() || kappa.finite > 0) {
            bool has_bound = false;
            for (std::size_t b = 0; b < p.size() && !has_bound; ++b) {
                bool bound = true;
                for (std::size_t s : subset)
                    if (!p.leq(s, b)) {
                        bound = false;
                        break;
                    }
                has_bound = bound;
            }
            if (!has_bound) {
                ok = false;
                return;
            }
        }
        if (subset.size() == limit) return;
        for (std::size_t x = start; x < p.size(); ++x) {
            subset.push_back(x);
            rec(x + 1);
            subset.pop_back();
        }
    };
    rec(0);
    r.kappa_directed = ok;
    return r;
}

namespace {

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
    std::string name = base;
    std::size_t k = 0;
    while (std::find(taken.begin(), taken.end(), name) != taken.end())
        name = base + "_" + std::to_string(k++);
    return name;
}

bool segment_has_greatest(const FinitePoset& p, const std::vector<std::size_t>& members) {
    for (std::size_t t : members) {
        bool top = true;
        for (std::size_t y : members)
            if (!p.leq(y, t)) {
                top = false;
                break;
            }
        if (top) return true;
    }
    return false;
}

}  // namespace

PlusStepResult plus_step(const FinitePoset& p, const Kappa& kappa) {
    if (!is_good(p).good) throw InvalidInput("plus_step: poset is not good");
    std::vector<std::vector<std::size_t>> segments;
    for (const auto& mask : p.initial_segments()) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask[i]) members.push_back(i);
        if (members.empty()) continue;  // the empty segment is excluded
        if (!kappa.admits(members.size())) continue;
        if (segment_has_greatest(p, members)) continue;
        segments.push_back(std::move(members));
    }
    std::vector<std::string> names = p.names();
    std::vector<std::pair<std::size_t, std::size_t>> covers = p.covers();
    PlusStepResult out;
    for (const auto& seg : segments) {
        std::string label = "p(";
        for (std::size_t i = 0; i < seg.size(); ++i) {
            if (i > 0) label += ",";
            label += p.name(seg[i]);
        }
        label += ")";
        std::string nm = fresh_name(label, names);
        std::size_t idx = names.size();
        names.push_back(nm);
        // cover from every maximal element of the segment
        for (std::size_t s : seg) {
            bool maximal = true;
            for (std::size_t t : seg)
                if (p.lt(s, t)) {
                    maximal = false;
                    break;
                }
            if (maximal) covers.emplace_back(s, idx);
        }
        out.markers[idx] = seg;
    }
    out.poset = FinitePoset::make(std::move(names), std::move(covers));
    return out;
}

CompletionResult directed_completion(const FinitePoset& p) {
    if (!is_good(p).good) throw InvalidInput("directed_completion: poset is not good");
    CompletionResult out;
    if (p.greatest().has_value()) {
        out.poset = p;
        return out;
    }
    std::vector<std::string> names = p.names();
    std::vector<std::pair<std::size_t, std::size_t>> covers = p.covers();
    std::string nm = fresh_name("top", names);
    std::size_t idx = names.size();
    names.push_back(nm);
    for (std::size_t x = 0; x < p.size(); ++x) {
        bool maximal = true;
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.lt(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) covers.emplace_back(x, idx);
    }
    out.poset = FinitePoset::make(std::move(names), std::move(covers));
    out.added_top = idx;
    return out;
}

StrongClosureResult strong_closure(const FinitePoset& p, const std::vector<bool>& segment) {
    if (!p.is_initial_segment(segment))
        throw InvalidInput("strong_closure: input is not an initial segment");
    StrongClosureResult out;
    out.closure.assign(p.size(), false);
    for (std::size_t x = 0; x < p.size(); ++x) {
        // x joins iff every element of down(x) \ Q is limit; the witness is
        // R = down(x) intersect Q
        bool ok = true;
        for (std::size_t y : p.down_set(x)) {
            if (segment[y]) continue;
            if (classify_element(p, y).kind != ElementKind::limit) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        out.closure[x] = true;
        if (!segment[x]) {
            std::vector<std::size_t> witness;
            for (std::size_t y : p.down_set(x))
                if (segment[y]) witness.push_back(y);
            out.strong_bounds[x] = std::move(witness);
        }
    }
    return out;
}

}  // namespace goodcolim
