#ifndef GOODCOLIM_POSET_HPP
#define GOODCOLIM_POSET_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goodcolim/graph.hpp"

namespace goodcolim {

/// kappa marker for size conditions: omega, or a finite cardinal.
struct Kappa {
    bool omega = true;
    std::size_t finite = 0;

    static Kappa w() { return Kappa{true, 0}; }
    static Kappa fin(std::size_t n) { return Kappa{false, n}; }

    /// cardinality < kappa
    bool admits(std::size_t card) const { return omega || card < finite; }
};

/// A finite poset stored as a covering relation plus its computed
/// reflexive-transitive closure. Construction validates that the covers form
/// a DAG, which at finite scale is the generic well-foundedness check.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Throws InvalidInput on duplicate ids, unknown cover endpoints, or a
    /// cycle in the covering relation.
    static FinitePoset make(std::vector<std::string> names,
                            std::vector<std::pair<std::size_t, std::size_t>> covers);
    static FinitePoset make_named(const std::vector<std::string>& names,
                                  const std::vector<std::pair<std::string, std::string>>& covers);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    bool lt(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }

    /// Every nonempty subset has a minimal element. Always true for validated
    /// finite posets; kept as a real check for lazily-presented backends.
    bool well_founded() const;

    std::optional<std::size_t> least() const;
    std::optional<std::size_t> greatest() const;

    std::vector<std::size_t> down_set(std::size_t x) const;         // { y | y <= x }
    std::vector<std::size_t> strict_down_set(std::size_t x) const;  // { y | y < x }
    std::vector<std::size_t> up_set(std::size_t x) const;

    bool is_initial_segment(const std::vector<bool>& members) const;

    /// All downward-closed subsets, as membership masks, in a deterministic
    /// order. Exponential; desk scale only.
    std::vector<std::vector<bool>> initial_segments() const;

    /// Stable topological order refining leq, ties broken lexicographically
    /// on element ids.
    std::vector<std::size_t> linear_extension() const;

private:
    std::vector<std::string> names_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::vector<std::vector<bool>> leq_;
};

enum class ElementKind { bottom, isolated, limit };

struct ElementClass {
    ElementKind kind = ElementKind::bottom;
    std::optional<std::size_t> predecessor;  // present iff isolated
};

struct GoodnessReport {
    bool good = false;
    std::optional<std::size_t> least;
};

GoodnessReport is_good(const FinitePoset& p);

/// Requires p good; x in range.
ElementClass classify_element(const FinitePoset& p, std::size_t x);

struct KappaReport {
    bool kappa_good = false;
    bool kappa_directed = false;
};

KappaReport is_kappa_good_and_directed(const FinitePoset& p, const Kappa& kappa);

/// Result of one plus-construction step: for every initial segment S of
/// cardinality < kappa without a greatest element (the empty segment is
/// excluded), a fresh element p_S above exactly S; the new elements are
/// mutually incomparable and all limit.
struct PlusStepResult {
    FinitePoset poset;
    /// index of each added element in the new poset -> members of its segment
    /// as indices into the old poset
    std::map<std::size_t, std::vector<std::size_t>> markers;
};

PlusStepResult plus_step(const FinitePoset& p, const Kappa& kappa = Kappa::w());

/// Finite directed completion: identity when a greatest element exists,
/// otherwise adds a single top. The added element is limit and the input is
/// an initial segment of the output.
struct CompletionResult {
    FinitePoset poset;
    std::optional<std::size_t> added_top;  // index in the new poset
};

CompletionResult directed_completion(const FinitePoset& p);

/// Strong-upper-bound closure of an initial segment: x joins the closure iff
/// every element of (down-set of x) outside Q is limit. strong_bounds maps
/// each new member to its witness subset R = down(x) intersect Q.
struct StrongClosureResult {
    std::vector<bool> closure;
    std::map<std::size_t, std::vector<std::size_t>> strong_bounds;
};

StrongClosureResult strong_closure(const FinitePoset& p, const std::vector<bool>& segment);

}  // namespace goodcolim

#endif
