#ifndef GAT_GAUTOMATON_HPP
#define GAT_GAUTOMATON_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gat/group.hpp"
#include "gat/machine.hpp"

namespace gat {

struct GEdge {
    int src = 0;
    std::optional<std::string> letter;  // nullopt = epsilon
    GroupElement weight;
    int dst = 0;

    bool operator==(const GEdge&) const = default;
};

/// A group-labeled automaton: a finite directed graph with edges labeled
/// by (letter-or-epsilon, group element). A word is accepted when some
/// path from the start vertex to an accept vertex spells it and the path
/// weight multiplies out to the group identity.
///
/// The letter alphabet is a plain token set with no inverse semantics on
/// the input side; `x` and `x^-1` are distinct letters. The declared
/// alphabet is kept closed under formal inversion.
struct GAutomaton {
    GroupSpec group;
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    int start = 0;
    std::vector<int> accepts;
    std::vector<GEdge> edges;

    int add_state(const std::string& name);
    int state_index(const std::string& name) const;
    bool is_accept(int state) const;

    bool operator==(const GAutomaton&) const = default;
};

/// Adds missing formal inverses so the token set satisfies the alphabet
/// closure invariant. Rejects tokens that do not parse as generators.
std::vector<std::string> close_alphabet(std::vector<std::string> tokens);

/// Caps for the bounded membership search. Defaults, derived from the
/// automaton and the word:
///   norm cap   = (|word|+1) * max generator image norm * 4  (at least 4)
///   eps cap    = |states| * (|word|+1)
///   max configurations = 10^6
struct SearchBudget {
    std::optional<Integer> norm_cap;
    std::optional<std::uint64_t> eps_cap;
    std::uint64_t max_configurations = 1'000'000;
};

enum class GVerdict { Accept, RejectWithinBudget, BudgetExhausted };

std::string_view g_verdict_name(GVerdict verdict);

struct GMembershipResult {
    GVerdict verdict = GVerdict::RejectWithinBudget;
    std::uint64_t configurations = 0;
    std::vector<int> path_edges;  // accepting path, verified before return
};

/// Structural validation plus the epsilon-cycle weight analysis: when the
/// epsilon subgraph contains a cycle whose weight is not the identity,
/// reject verdicts are only sound within budget and the report says so.
struct GValidation {
    std::vector<Diagnostic> diagnostics;
    bool weighted_eps_cycle = false;  // automaton is bounded-semantics only
};

GValidation validate_gautomaton(const GAutomaton& a);

/// True when every edge weight is a single generator image or the identity.
bool is_normalized(const GAutomaton& a);

/// Splits every edge whose weight is a longer product of generator images
/// into a chain through fresh states; the letter stays on the first edge
/// and the rest are epsilon. The accepted language is unchanged. Throws
/// when a weight is not expressible over the declared generators.
GAutomaton normalize(const GAutomaton& a);

GMembershipResult g_membership(const GAutomaton& a, std::span<const std::string> word,
                               const SearchBudget& budget = {});

/// The one-state automaton with a loop (g, image(g)) per generator: it
/// accepts exactly the word problem of `spec` over its generators.
GAutomaton wp_automaton(const GroupSpec& spec);

/// Convenience constructor for blind-counter automata: a rank-k
/// free-abelian automaton whose edge weights are arbitrary integer
/// vectors (normalize splits them into standard-generator steps).
struct CounterEdge {
    std::string src;
    std::optional<std::string> letter;
    std::vector<Integer> weight;
    std::string dst;
};
GAutomaton counter_automaton(int k, const std::vector<std::string>& states,
                             const std::vector<CounterEdge>& edges, const std::string& start,
                             const std::vector<std::string>& accepts);

/// Product with an epsilon-free fsa over the same alphabet; accepts the
/// intersection of the two languages. Epsilon edges of `a` move only the
/// automaton coordinate.
GAutomaton intersect_regular(const GAutomaton& a, const Machine& fsa);

/// No epsilon-letter edges and no state with two outgoing edges sharing
/// a letter.
bool gautomaton_is_deterministic(const GAutomaton& a);

/// No state has two outgoing edges carrying the same group element.
bool gautomaton_has_unique_weights(const GAutomaton& a);

/// Preprocessed membership decider; immutable and thread-safe. decide()
/// takes letter ids into `alphabet()` (sorted tokens).
class GaRunner {
public:
    explicit GaRunner(GAutomaton automaton, SearchBudget budget = {});
    ~GaRunner();
    GaRunner(GaRunner&&) noexcept;

    const std::vector<std::string>& alphabet() const;
    const GAutomaton& automaton() const;
    GVerdict decide_ids(std::span<const int> letters) const;
    GMembershipResult run(std::span<const std::string> word) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace gat

#endif
