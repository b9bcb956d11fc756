// Independent oracles for cross-checking the deciders. These stay naive
// on purpose: plain path enumeration and bounded configuration search,
// sharing no code with the implementation paths they check.

#ifndef GAT_TESTS_ORACLES_HPP
#define GAT_TESTS_ORACLES_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gat/gautomaton.hpp"
#include "gat/group.hpp"
#include "gat/machine.hpp"

namespace gat::testing {

/// Word-problem oracle: the word's generator images multiply to 1.
inline bool oracle_wp(const GroupSpec& spec, const std::vector<std::string>& word) {
    std::vector<GeneratorSymbol> symbols;
    for (const auto& token : word) {
        auto sym = parse_generator_token(token);
        if (!sym) throw Error("oracle_wp: bad token " + token);
        symbols.push_back(*sym);
    }
    return is_identity(spec, evaluate_word(spec, symbols));
}

/// Accepts iff some path of at most |word| letter moves and
/// |states|*(|word|+1) epsilon moves spells the word into an accept state.
inline bool naive_fsa_accepts(const Machine& m, const std::vector<std::string>& word) {
    const std::uint64_t eps_budget = m.states.size() * (word.size() + 1);
    bool found = false;
    std::function<void(int, std::size_t, std::uint64_t)> walk = [&](int state, std::size_t pos,
                                                                    std::uint64_t eps_used) {
        if (found) return;
        if (pos == word.size() && m.is_accept(state)) {
            found = true;
            return;
        }
        for (const auto& e : m.edges) {
            if (e.src != state || found) continue;
            if (!e.input) {
                if (eps_used < eps_budget) walk(e.dst, pos, eps_used + 1);
            } else if (pos < word.size() && word[pos] == *e.input) {
                walk(e.dst, pos + 1, eps_used);
            }
        }
    };
    walk(m.start, 0, 0);
    return found;
}

/// Configuration search over (position, state, stack) with the stack
/// depth capped; exact for runs that stay within the cap.
inline bool bounded_pda_search(const Machine& m, const std::vector<std::string>& word,
                               std::size_t depth_cap) {
    const auto& instr_of = [](const MachineEdge& e) { return std::get<PdaInstr>(e.instr); };
    std::set<std::tuple<std::size_t, int, std::string>> visited;
    std::deque<std::tuple<std::size_t, int, std::string>> queue;

    const auto sym_char = [&](const std::string& sym) {
        for (std::size_t i = 0; i < m.tape_alphabet.size(); ++i) {
            if (m.tape_alphabet[i] == sym) return static_cast<char>('A' + i);
        }
        throw Error("bounded_pda_search: unknown stack symbol " + sym);
    };
    const auto push_config = [&](std::size_t pos, int state, std::string stack) {
        auto key = std::make_tuple(pos, state, std::move(stack));
        if (visited.insert(key).second) queue.push_back(std::move(key));
    };

    push_config(0, m.start, std::string(1, sym_char(m.bottom_marker)));
    while (!queue.empty()) {
        auto [pos, state, stack] = queue.front();
        queue.pop_front();
        if (pos == word.size() && m.is_accept(state)) return true;
        for (const auto& e : m.edges) {
            if (e.src != state) continue;
            std::size_t npos = pos;
            if (e.input) {
                if (pos >= word.size() || word[pos] != *e.input) continue;
                npos = pos + 1;
            }
            const auto instr = instr_of(e);
            if (instr.guard && (stack.empty() || stack.back() != sym_char(*instr.guard))) continue;
            std::string next = stack;
            switch (instr.op) {
                case StackOp::Pop:
                    if (next.empty()) continue;
                    next.pop_back();
                    break;
                case StackOp::Push:
                    if (next.size() >= depth_cap) continue;
                    next.push_back(sym_char(instr.symbol));
                    break;
                case StackOp::Stay: break;
            }
            push_config(npos, e.dst, std::move(next));
        }
    }
    return false;
}

/// Exact language slice of a G-automaton by exhaustive path enumeration,
/// with a per-path epsilon allowance of |states|*(max_length+1).
inline std::set<std::vector<std::string>> gaut_language_slice(const GAutomaton& a,
                                                              int max_length) {
    std::set<std::vector<std::string>> slice;
    const std::uint64_t eps_budget = a.states.size() * static_cast<std::uint64_t>(max_length + 1);
    std::vector<std::string> word;
    std::function<void(int, const GroupElement&, std::uint64_t)> walk =
        [&](int state, const GroupElement& element, std::uint64_t eps_used) {
            if (a.is_accept(state) && is_identity(a.group, element)) slice.insert(word);
            for (const auto& e : a.edges) {
                if (e.src != state) continue;
                GroupElement next = multiply(a.group, element, e.weight);
                if (!e.letter) {
                    if (eps_used < eps_budget) walk(e.dst, next, eps_used + 1);
                } else if (static_cast<int>(word.size()) < max_length) {
                    word.push_back(*e.letter);
                    walk(e.dst, next, eps_used);
                    word.pop_back();
                }
            }
        };
    walk(a.start, identity(a.group), 0);
    return slice;
}

}  // namespace gat::testing

#endif
