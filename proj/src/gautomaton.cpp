#include "gat/gautomaton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace gat {

int GAutomaton::add_state(const std::string& name) {
    states.push_back(name);
    return static_cast<int>(states.size()) - 1;
}

int GAutomaton::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] == name) return static_cast<int>(i);
    }
    return -1;
}

bool GAutomaton::is_accept(int state) const {
    return std::find(accepts.begin(), accepts.end(), state) != accepts.end();
}

std::string_view g_verdict_name(GVerdict verdict) {
    switch (verdict) {
        case GVerdict::Accept: return "accept";
        case GVerdict::RejectWithinBudget: return "reject-within-budget";
        case GVerdict::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

std::vector<std::string> close_alphabet(std::vector<std::string> tokens) {
    std::set<std::string> have(tokens.begin(), tokens.end());
    std::vector<std::string> out = std::move(tokens);
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto sym = parse_generator_token(out[i]);
        if (!sym) throw Error("alphabet token '" + out[i] + "' is not a generator token");
        std::string inv = sym->inverse().token();
        if (have.insert(inv).second) out.push_back(inv);
    }
    return out;
}

namespace {

bool alphabet_contains(const std::vector<std::string>& alphabet, const std::string& token) {
    return std::find(alphabet.begin(), alphabet.end(), token) != alphabet.end();
}

// Strongly connected components of the epsilon subgraph (iterative Tarjan).
std::vector<int> eps_sccs(int nstates, const std::vector<const GEdge*>& eps_edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nstates));
    for (const GEdge* e : eps_edges) adj[static_cast<std::size_t>(e->src)].push_back(e->dst);

    std::vector<int> comp(static_cast<std::size_t>(nstates), -1);
    std::vector<int> index(static_cast<std::size_t>(nstates), -1);
    std::vector<int> low(static_cast<std::size_t>(nstates), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(nstates), false);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < nstates; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child < adj[static_cast<std::size_t>(v)].size()) {
                int w = adj[static_cast<std::size_t>(v)][child++];
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] =
                        next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        comp[static_cast<std::size_t>(w)] = next_comp;
                        if (w == v) break;
                    }
                    ++next_comp;
                }
                int done = v;
                frames.pop_back();
                if (!frames.empty()) {
                    low[static_cast<std::size_t>(frames.back().v)] =
                        std::min(low[static_cast<std::size_t>(frames.back().v)],
                                 low[static_cast<std::size_t>(done)]);
                }
            }
        }
    }
    return comp;
}

// A group-labeled subgraph has only identity-weight cycles iff a
// consistent potential exists on every strongly connected part.
bool has_weighted_eps_cycle(const GAutomaton& a, const std::vector<const GEdge*>& eps_edges) {
    const int n = static_cast<int>(a.states.size());
    auto comp = eps_sccs(n, eps_edges);
    std::vector<std::vector<const GEdge*>> internal(
        static_cast<std::size_t>(*std::max_element(comp.begin(), comp.end()) + 1));
    for (const GEdge* e : eps_edges) {
        if (comp[static_cast<std::size_t>(e->src)] == comp[static_cast<std::size_t>(e->dst)])
            internal[static_cast<std::size_t>(comp[static_cast<std::size_t>(e->src)])].push_back(e);
    }
    for (const auto& edges : internal) {
        if (edges.empty()) continue;
        std::map<int, GroupElement> potential;
        const int root = edges.front()->src;
        potential.emplace(root, identity(a.group));
        std::vector<int> queue{root};
        std::vector<std::vector<const GEdge*>> out(static_cast<std::size_t>(n));
        for (const GEdge* e : edges) out[static_cast<std::size_t>(e->src)].push_back(e);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const GEdge* e : out[static_cast<std::size_t>(v)]) {
                GroupElement next = multiply(a.group, potential.at(v), e->weight);
                auto [it, inserted] = potential.emplace(e->dst, std::move(next));
                if (inserted) queue.push_back(e->dst);
            }
        }
        for (const GEdge* e : edges) {
            if (!(multiply(a.group, potential.at(e->src), e->weight) == potential.at(e->dst)))
                return true;
        }
    }
    return false;
}

}  // namespace

GValidation validate_gautomaton(const GAutomaton& a) {
    GValidation result;
    auto bad = [&](std::string subject, std::string message) {
        result.diagnostics.push_back({std::move(subject), std::move(message)});
    };

    for (auto& d : validate_group(a.group)) {
        result.diagnostics.push_back({"group " + d.subject, d.message});
    }

    std::set<std::string> seen;
    for (const auto& t : a.alphabet) {
        if (!parse_generator_token(t)) bad("alphabet", "token '" + t + "' is not a generator token");
        if (!seen.insert(t).second) bad("alphabet", "duplicate token '" + t + "'");
    }
    for (const auto& t : a.alphabet) {
        if (parse_generator_token(t) && !alphabet_contains(a.alphabet, inverse_token(t)))
            bad("alphabet", "token '" + t + "' has no formal inverse in the alphabet");
    }

    const int n = static_cast<int>(a.states.size());
    if (n == 0) bad("states", "automaton has no states");
    if (a.start < 0 || a.start >= n) bad("start", "start vertex out of range");
    for (int acc : a.accepts) {
        if (acc < 0 || acc >= n)
            bad("accepts", "accept vertex " + std::to_string(acc) + " not in the state set");
    }

    std::vector<const GEdge*> eps_edges;
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const auto& e = a.edges[i];
        const std::string subject = "edge " + std::to_string(i);
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
            bad(subject, "endpoint out of range");
            continue;
        }
        if (e.letter && !alphabet_contains(a.alphabet, *e.letter))
            bad(subject, "letter '" + *e.letter + "' not in the alphabet");
        if (!element_fits(a.group, e.weight)) {
            bad(subject, "weight is not a valid element of the group");
            continue;
        }
        if (!e.letter) eps_edges.push_back(&e);
    }

    if (result.diagnostics.empty() && !eps_edges.empty())
        result.weighted_eps_cycle = has_weighted_eps_cycle(a, eps_edges);
    return result;
}

bool is_normalized(const GAutomaton& a) {
    for (const auto& e : a.edges) {
        if (is_identity(a.group, e.weight)) continue;
        bool single = false;
        for (const auto& g : a.group.generators) {
            if (g.image == e.weight) {
                single = true;
                break;
            }
        }
        if (!single) return false;
    }
    return true;
}

namespace {

// Writes `weight` as a product of declared generator images.
std::vector<const Generator*> decompose_weight(const GroupSpec& spec, const GroupElement& weight) {
    switch (spec.family) {
        case GroupFamily::Finite: {
            // Shortest product via breadth-first search on the Cayley graph.
            std::vector<int> parent(static_cast<std::size_t>(spec.order), -1);
            std::vector<const Generator*> via(static_cast<std::size_t>(spec.order), nullptr);
            std::vector<int> queue{0};
            parent[0] = 0;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                int cur = queue[qi];
                if (cur == weight.finite_index) break;
                for (const auto& g : spec.generators) {
                    int next = spec.cayley[static_cast<std::size_t>(cur)]
                                          [static_cast<std::size_t>(g.image.finite_index)];
                    if (parent[static_cast<std::size_t>(next)] != -1) continue;
                    parent[static_cast<std::size_t>(next)] = cur;
                    via[static_cast<std::size_t>(next)] = &g;
                    queue.push_back(next);
                }
            }
            if (parent[static_cast<std::size_t>(weight.finite_index)] == -1)
                throw Error("normalize: weight not expressible in the declared generators");
            std::vector<const Generator*> path;
            for (int cur = weight.finite_index; cur != 0;
                 cur = parent[static_cast<std::size_t>(cur)]) {
                path.push_back(via[static_cast<std::size_t>(cur)]);
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        case GroupFamily::FreeAbelian: {
            std::vector<const Generator*> steps;
            for (int i = 0; i < spec.rank; ++i) {
                const Integer& c = weight.coords[static_cast<std::size_t>(i)];
                if (c == 0) continue;
                std::vector<Integer> unit(static_cast<std::size_t>(spec.rank), 0);
                unit[static_cast<std::size_t>(i)] = c > 0 ? 1 : -1;
                const GroupElement target = GroupElement::vector(std::move(unit));
                const Generator* gen = nullptr;
                for (const auto& g : spec.generators) {
                    if (g.image == target) {
                        gen = &g;
                        break;
                    }
                }
                if (gen == nullptr)
                    throw Error("normalize: weight not expressible in the declared generators");
                Integer mag = c < 0 ? Integer(-c) : c;
                if (mag > 4096) throw Error("normalize: weight magnitude too large to split");
                for (Integer step = 0; step < mag; ++step) steps.push_back(gen);
            }
            return steps;
        }
        case GroupFamily::Free: {
            std::vector<const Generator*> steps;
            for (int letter : weight.word) {
                const GroupElement target = GroupElement::free_word({letter});
                const Generator* gen = nullptr;
                for (const auto& g : spec.generators) {
                    if (g.image == target) {
                        gen = &g;
                        break;
                    }
                }
                if (gen == nullptr)
                    throw Error("normalize: weight not expressible in the declared generators");
                steps.push_back(gen);
            }
            return steps;
        }
    }
    throw Error("normalize: unknown family");
}

}  // namespace

GAutomaton normalize(const GAutomaton& a) {
    auto validation = validate_gautomaton(a);
    if (!validation.diagnostics.empty())
        throw Error("normalize: invalid automaton\n" + format_diagnostics(validation.diagnostics));

    GAutomaton out = a;
    out.edges.clear();
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const auto& e = a.edges[i];
        bool single = is_identity(a.group, e.weight);
        for (const auto& g : a.group.generators) {
            if (g.image == e.weight) single = true;
        }
        if (single) {
            out.edges.push_back(e);
            continue;
        }
        auto steps = decompose_weight(a.group, e.weight);
        int cur = e.src;
        for (std::size_t s = 0; s < steps.size(); ++s) {
            int dst = e.dst;
            if (s + 1 != steps.size()) {
                dst = out.add_state(a.states[static_cast<std::size_t>(e.src)] + "~" +
                                    std::to_string(i) + "." + std::to_string(s + 1));
            }
            GEdge part;
            part.src = cur;
            part.letter = s == 0 ? e.letter : std::nullopt;
            part.weight = steps[s]->image;
            part.dst = dst;
            out.edges.push_back(std::move(part));
            cur = dst;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// membership

struct GaRunner::Impl {
    GAutomaton automaton;
    SearchBudget budget;
    std::vector<std::string> sorted_alphabet;
    Integer max_gen_norm = 1;
    // per state: (letter id, edge index) and epsilon edge indices
    std::vector<std::vector<std::pair<int, int>>> letter_out;
    std::vector<std::vector<int>> eps_out;

    Impl(GAutomaton a, SearchBudget b) : automaton(std::move(a)), budget(std::move(b)) {
        auto validation = validate_gautomaton(automaton);
        if (!validation.diagnostics.empty())
            throw Error("g_membership: invalid automaton\n" +
                        format_diagnostics(validation.diagnostics));
        if (!is_normalized(automaton))
            throw Error("g_membership: automaton is not normalized");

        sorted_alphabet = automaton.alphabet;
        std::sort(sorted_alphabet.begin(), sorted_alphabet.end());
        std::unordered_map<std::string, int> letter_ids;
        for (std::size_t i = 0; i < sorted_alphabet.size(); ++i)
            letter_ids[sorted_alphabet[i]] = static_cast<int>(i);

        for (const auto& g : automaton.group.generators) {
            Integer norm = element_norm(automaton.group, g.image);
            if (norm > max_gen_norm) max_gen_norm = norm;
        }
        letter_out.resize(automaton.states.size());
        eps_out.resize(automaton.states.size());
        for (std::size_t i = 0; i < automaton.edges.size(); ++i) {
            const auto& e = automaton.edges[i];
            if (e.letter) {
                letter_out[static_cast<std::size_t>(e.src)].push_back(
                    {letter_ids.at(*e.letter), static_cast<int>(i)});
            } else {
                eps_out[static_cast<std::size_t>(e.src)].push_back(static_cast<int>(i));
            }
        }
    }

    GMembershipResult search(std::span<const int> letters) const {
        const auto& a = automaton;
        const int n = static_cast<int>(letters.size());
        const Integer norm_cap = budget.norm_cap
                                     ? *budget.norm_cap
                                     : Integer(n + 1) * max_gen_norm * 4;
        const std::uint64_t eps_cap =
            budget.eps_cap ? *budget.eps_cap : a.states.size() * static_cast<std::uint64_t>(n + 1);

        struct Config {
            int state;
            GroupElement element;
            int parent;
            int edge;
        };
        std::vector<Config> configs;
        GMembershipResult result;
        bool exhausted = false;

        // One visited map per input position; the frontier holds config ids.
        std::vector<int> frontier;
        std::map<std::pair<int, GroupElement>, int> layer;

        const auto push = [&](int pos, int state, GroupElement element, int parent,
                              int edge) -> bool {
            (void)pos;
            if (configs.size() >= budget.max_configurations) {
                exhausted = true;
                return false;
            }
            if (element_norm(a.group, element) > norm_cap) return false;
            auto key = std::make_pair(state, element);
            if (layer.find(key) != layer.end()) return false;
            configs.push_back({state, std::move(element), parent, edge});
            const int id = static_cast<int>(configs.size()) - 1;
            layer.emplace(std::move(key), id);
            frontier.push_back(id);
            return true;
        };

        const auto close_epsilon = [&](int pos) {
            std::size_t round_begin = 0;
            for (std::uint64_t round = 0; round < eps_cap; ++round) {
                const std::size_t round_end = frontier.size();
                if (round_begin == round_end) break;
                for (std::size_t fi = round_begin; fi < round_end; ++fi) {
                    const int id = frontier[fi];
                    for (int ei : eps_out[static_cast<std::size_t>(configs[
                             static_cast<std::size_t>(id)].state)]) {
                        const auto& e = a.edges[static_cast<std::size_t>(ei)];
                        GroupElement next = multiply(
                            a.group, configs[static_cast<std::size_t>(id)].element, e.weight);
                        push(pos, e.dst, std::move(next), id, ei);
                        if (exhausted) return;
                    }
                }
                round_begin = round_end;
            }
        };

        layer.clear();
        frontier.clear();
        push(0, a.start, identity(a.group), -1, -1);
        close_epsilon(0);

        for (int pos = 0; pos < n && !exhausted; ++pos) {
            const std::vector<int> current = std::move(frontier);
            frontier.clear();
            layer.clear();
            const int want = letters[static_cast<std::size_t>(pos)];
            for (int id : current) {
                for (auto [letter, ei] : letter_out[static_cast<std::size_t>(
                         configs[static_cast<std::size_t>(id)].state)]) {
                    if (letter != want) continue;
                    const auto& e = a.edges[static_cast<std::size_t>(ei)];
                    GroupElement next =
                        multiply(a.group, configs[static_cast<std::size_t>(id)].element, e.weight);
                    push(pos + 1, e.dst, std::move(next), id, ei);
                    if (exhausted) break;
                }
                if (exhausted) break;
            }
            if (!exhausted) close_epsilon(pos + 1);
        }

        result.configurations = configs.size();
        if (exhausted) {
            result.verdict = GVerdict::BudgetExhausted;
            return result;
        }

        int accept_id = -1;
        for (int id : frontier) {
            const auto& c = configs[static_cast<std::size_t>(id)];
            if (a.is_accept(c.state) && is_identity(a.group, c.element)) {
                accept_id = id;
                break;
            }
        }
        if (accept_id < 0) {
            result.verdict = GVerdict::RejectWithinBudget;
            return result;
        }

        for (int cur = accept_id; configs[static_cast<std::size_t>(cur)].parent != -1;
             cur = configs[static_cast<std::size_t>(cur)].parent) {
            result.path_edges.push_back(configs[static_cast<std::size_t>(cur)].edge);
        }
        std::reverse(result.path_edges.begin(), result.path_edges.end());

        // Re-verify the accepting path with plain group arithmetic.
        GroupElement weight = identity(a.group);
        std::size_t pos = 0;
        int state = a.start;
        for (int ei : result.path_edges) {
            const auto& e = a.edges[static_cast<std::size_t>(ei)];
            if (e.src != state) throw Error("g_membership: path replay diverged");
            if (e.letter) {
                if (pos >= letters.size() ||
                    sorted_alphabet[static_cast<std::size_t>(letters[pos])] != *e.letter)
                    throw Error("g_membership: path does not spell the word");
                ++pos;
            }
            weight = multiply(a.group, weight, e.weight);
            state = e.dst;
        }
        if (pos != letters.size() || !a.is_accept(state) || !is_identity(a.group, weight))
            throw Error("g_membership: accepting path failed re-verification");
        result.verdict = GVerdict::Accept;
        return result;
    }
};

GaRunner::GaRunner(GAutomaton automaton, SearchBudget budget)
    : impl_(std::make_unique<Impl>(std::move(automaton), std::move(budget))) {}
GaRunner::~GaRunner() = default;
GaRunner::GaRunner(GaRunner&&) noexcept = default;

const std::vector<std::string>& GaRunner::alphabet() const { return impl_->sorted_alphabet; }
const GAutomaton& GaRunner::automaton() const { return impl_->automaton; }

GVerdict GaRunner::decide_ids(std::span<const int> letters) const {
    return impl_->search(letters).verdict;
}

GMembershipResult GaRunner::run(std::span<const std::string> word) const {
    std::vector<int> ids(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto it = std::lower_bound(impl_->sorted_alphabet.begin(), impl_->sorted_alphabet.end(),
                                   word[i]);
        if (it == impl_->sorted_alphabet.end() || *it != word[i]) {
            // Token outside the alphabet: nothing can spell it.
            GMembershipResult r;
            r.verdict = GVerdict::RejectWithinBudget;
            return r;
        }
        ids[i] = static_cast<int>(it - impl_->sorted_alphabet.begin());
    }
    return impl_->search(ids);
}

GMembershipResult g_membership(const GAutomaton& a, std::span<const std::string> word,
                               const SearchBudget& budget) {
    return GaRunner(a, budget).run(word);
}

// ---------------------------------------------------------------------------
// constructions

GAutomaton wp_automaton(const GroupSpec& spec) {
    auto diags = validate_group(spec);
    if (!diags.empty()) throw Error("wp_automaton: invalid group\n" + format_diagnostics(diags));
    GAutomaton a;
    a.group = spec;
    a.alphabet = spec.generator_tokens();
    a.add_state("wp");
    a.start = 0;
    a.accepts = {0};
    for (const auto& g : spec.generators) {
        a.edges.push_back({0, g.symbol.token(), g.image, 0});
    }
    return a;
}

GAutomaton counter_automaton(int k, const std::vector<std::string>& states,
                             const std::vector<CounterEdge>& edges, const std::string& start,
                             const std::vector<std::string>& accepts) {
    GAutomaton a;
    a.group = GroupSpec::free_abelian(k);
    a.states = states;

    std::vector<std::string> letters;
    for (const auto& e : edges) {
        if (static_cast<int>(e.weight.size()) != k)
            throw Error("counter_automaton: weight vector length differs from rank");
        if (e.letter && !alphabet_contains(letters, *e.letter)) letters.push_back(*e.letter);
    }
    a.alphabet = close_alphabet(std::move(letters));

    const auto index_of = [&](const std::string& name) {
        int idx = a.state_index(name);
        if (idx < 0) throw Error("counter_automaton: unknown state '" + name + "'");
        return idx;
    };
    a.start = index_of(start);
    for (const auto& name : accepts) a.accepts.push_back(index_of(name));
    for (const auto& e : edges) {
        a.edges.push_back(
            {index_of(e.src), e.letter, GroupElement::vector(e.weight), index_of(e.dst)});
    }
    return a;
}

GAutomaton intersect_regular(const GAutomaton& a, const Machine& fsa) {
    if (fsa.cls != MachineClass::Fsa) throw Error("intersect_regular: machine is not an fsa");
    if (!is_normalized(a)) throw Error("intersect_regular: automaton must be normalized");
    for (const auto& e : fsa.edges) {
        if (!e.input) throw Error("intersect_regular: fsa must be epsilon-free");
    }
    {
        std::set<std::string> left(a.alphabet.begin(), a.alphabet.end());
        std::set<std::string> right(fsa.input_alphabet.begin(), fsa.input_alphabet.end());
        if (left != right) throw Error("intersect_regular: alphabet mismatch");
    }

    GAutomaton out;
    out.group = a.group;
    out.alphabet = a.alphabet;

    std::map<std::pair<int, int>, int> pair_index;
    std::vector<std::pair<int, int>> pairs;
    const auto state_of = [&](int p, int q) {
        auto key = std::make_pair(p, q);
        auto it = pair_index.find(key);
        if (it != pair_index.end()) return it->second;
        int idx = out.add_state(a.states[static_cast<std::size_t>(p)] + "|" +
                                fsa.states[static_cast<std::size_t>(q)]);
        pair_index.emplace(key, idx);
        pairs.push_back(key);
        return idx;
    };

    out.start = state_of(a.start, fsa.start);
    for (std::size_t qi = 0; qi < pairs.size(); ++qi) {
        const auto [p, q] = pairs[qi];
        const int src = static_cast<int>(qi);
        for (const auto& ae : a.edges) {
            if (ae.src != p) continue;
            if (!ae.letter) {
                out.edges.push_back({src, std::nullopt, ae.weight, state_of(ae.dst, q)});
                continue;
            }
            for (const auto& fe : fsa.edges) {
                if (fe.src != q || !fe.input || *fe.input != *ae.letter) continue;
                out.edges.push_back({src, ae.letter, ae.weight, state_of(ae.dst, fe.dst)});
            }
        }
    }
    for (std::size_t qi = 0; qi < pairs.size(); ++qi) {
        const auto [p, q] = pairs[qi];
        if (a.is_accept(p) && fsa.is_accept(q)) out.accepts.push_back(static_cast<int>(qi));
    }
    return out;
}

bool gautomaton_is_deterministic(const GAutomaton& a) {
    for (const auto& e : a.edges) {
        if (!e.letter) return false;
    }
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < a.edges.size(); ++j) {
            if (a.edges[i].src == a.edges[j].src && a.edges[i].letter == a.edges[j].letter)
                return false;
        }
    }
    return true;
}

bool gautomaton_has_unique_weights(const GAutomaton& a) {
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < a.edges.size(); ++j) {
            if (a.edges[i].src == a.edges[j].src && a.edges[i].weight == a.edges[j].weight)
                return false;
        }
    }
    return true;
}

}  // namespace gat
