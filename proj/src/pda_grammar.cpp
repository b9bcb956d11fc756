// Exact pda membership: convert the machine to a context-free grammar by
// the triple construction and recognize words with an Earley chart. This
// route terminates on every input, including machines whose epsilon-push
// cycles make plain configuration search diverge.

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "gat/machine.hpp"

namespace gat {

namespace {

// A normalized pda move: pop exactly one symbol, push back zero, one or
// two (push[0] becomes the new top). `orig` is the machine edge behind it,
// -1 for synthetic drain moves.
struct Move {
    int src = 0;
    int token = -1;  // -1 epsilon
    int pop = 0;
    int push[2] = {-1, -1};
    int dst = 0;
    int orig = -1;
};

// Grammar symbols: values >= 0 are variables, value -(t+1) is terminal t.
struct Production {
    int lhs = 0;
    std::vector<int> rhs;
    int move = -1;
};

constexpr int kStartVar = 0;

struct Grammar {
    Machine machine;
    std::unordered_map<std::string, int> token_ids;
    std::vector<Move> moves;
    std::vector<Production> prods;
    std::vector<std::vector<int>> prods_by_lhs;
    std::vector<bool> nullable;
    int num_vars = 0;

    explicit Grammar(const Machine& m) : machine(m) {
        if (m.cls != MachineClass::Pda) throw Error("pda_accepts: machine class is not pda");
        auto diags = validate_machine(m);
        if (!diags.empty()) throw Error("pda_accepts: invalid machine\n" + format_diagnostics(diags));

        for (std::size_t i = 0; i < m.input_alphabet.size(); ++i)
            token_ids[m.input_alphabet[i]] = static_cast<int>(i);
        std::unordered_map<std::string, int> gamma;
        for (std::size_t i = 0; i < m.tape_alphabet.size(); ++i)
            gamma[m.tape_alphabet[i]] = static_cast<int>(i);
        const int nsyms = static_cast<int>(m.tape_alphabet.size());
        const int drain = static_cast<int>(m.states.size());
        const int nstates = drain + 1;
        const int bottom = gamma.at(m.bottom_marker);

        for (std::size_t i = 0; i < m.edges.size(); ++i) {
            const auto& e = m.edges[i];
            const auto& instr = std::get<PdaInstr>(e.instr);
            std::vector<int> guards;
            if (instr.guard) {
                guards.push_back(gamma.at(*instr.guard));
            } else {
                for (int g = 0; g < nsyms; ++g) guards.push_back(g);
            }
            for (int g : guards) {
                Move move;
                move.src = e.src;
                move.token = e.input ? token_ids.at(*e.input) : -1;
                move.pop = g;
                move.dst = e.dst;
                move.orig = static_cast<int>(i);
                switch (instr.op) {
                    case StackOp::Pop: break;
                    case StackOp::Stay: move.push[0] = g; break;
                    case StackOp::Push:
                        move.push[0] = gamma.at(instr.symbol);
                        move.push[1] = g;
                        break;
                }
                moves.push_back(move);
            }
        }
        // Acceptance is by final state with any stack above the bottom
        // marker: a synthetic drain state consumes the remaining stack,
        // reducing acceptance to empty-stack-in-drain.
        for (int f : m.accepts) {
            for (int g = 0; g < nsyms; ++g) moves.push_back({f, -1, g, {-1, -1}, drain, -1});
        }
        for (int g = 0; g < nsyms; ++g) moves.push_back({drain, -1, g, {-1, -1}, drain, -1});

        const auto var = [&](int p, int a, int q) {
            return 1 + (p * nsyms + a) * nstates + q;
        };
        num_vars = 1 + nstates * nsyms * nstates;

        std::vector<Production> all;
        all.push_back({kStartVar, {var(m.start, bottom, drain)}, -1});
        for (std::size_t mi = 0; mi < moves.size(); ++mi) {
            const Move& mv = moves[mi];
            std::vector<int> prefix;
            if (mv.token >= 0) prefix.push_back(-(mv.token + 1));
            if (mv.push[0] < 0) {
                all.push_back({var(mv.src, mv.pop, mv.dst), prefix, static_cast<int>(mi)});
            } else if (mv.push[1] < 0) {
                for (int r = 0; r < nstates; ++r) {
                    auto rhs = prefix;
                    rhs.push_back(var(mv.dst, mv.push[0], r));
                    all.push_back({var(mv.src, mv.pop, r), std::move(rhs), static_cast<int>(mi)});
                }
            } else {
                for (int s = 0; s < nstates; ++s) {
                    for (int r = 0; r < nstates; ++r) {
                        auto rhs = prefix;
                        rhs.push_back(var(mv.dst, mv.push[0], s));
                        rhs.push_back(var(s, mv.push[1], r));
                        all.push_back(
                            {var(mv.src, mv.pop, r), std::move(rhs), static_cast<int>(mi)});
                    }
                }
            }
        }

        // Keep only productions that are generating and reachable; the
        // raw triple grammar is quadratically padded with dead variables.
        std::vector<bool> generating(static_cast<std::size_t>(num_vars), false);
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& p : all) {
                if (generating[static_cast<std::size_t>(p.lhs)]) continue;
                bool all_gen = true;
                for (int sym : p.rhs) {
                    if (sym >= 0 && !generating[static_cast<std::size_t>(sym)]) {
                        all_gen = false;
                        break;
                    }
                }
                if (all_gen) {
                    generating[static_cast<std::size_t>(p.lhs)] = true;
                    changed = true;
                }
            }
        }
        std::vector<bool> reachable(static_cast<std::size_t>(num_vars), false);
        std::vector<int> stack{kStartVar};
        reachable[kStartVar] = true;
        std::vector<std::vector<const Production*>> by_lhs_all(
            static_cast<std::size_t>(num_vars));
        for (const auto& p : all) by_lhs_all[static_cast<std::size_t>(p.lhs)].push_back(&p);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Production* p : by_lhs_all[static_cast<std::size_t>(v)]) {
                bool all_gen = true;
                for (int sym : p->rhs)
                    if (sym >= 0 && !generating[static_cast<std::size_t>(sym)]) all_gen = false;
                if (!all_gen) continue;
                for (int sym : p->rhs) {
                    if (sym >= 0 && !reachable[static_cast<std::size_t>(sym)]) {
                        reachable[static_cast<std::size_t>(sym)] = true;
                        stack.push_back(sym);
                    }
                }
            }
        }
        for (auto& p : all) {
            if (!reachable[static_cast<std::size_t>(p.lhs)]) continue;
            bool all_gen = generating[static_cast<std::size_t>(p.lhs)];
            for (int sym : p.rhs)
                if (sym >= 0 && !generating[static_cast<std::size_t>(sym)]) all_gen = false;
            if (all_gen) prods.push_back(std::move(p));
        }

        prods_by_lhs.resize(static_cast<std::size_t>(num_vars));
        for (std::size_t i = 0; i < prods.size(); ++i)
            prods_by_lhs[static_cast<std::size_t>(prods[i].lhs)].push_back(static_cast<int>(i));

        nullable.assign(static_cast<std::size_t>(num_vars), false);
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& p : prods) {
                if (nullable[static_cast<std::size_t>(p.lhs)]) continue;
                bool all_null = true;
                for (int sym : p.rhs) {
                    if (sym < 0 || !nullable[static_cast<std::size_t>(sym)]) {
                        all_null = false;
                        break;
                    }
                }
                if (all_null) {
                    nullable[static_cast<std::size_t>(p.lhs)] = true;
                    changed = true;
                }
            }
        }
    }
};

}  // namespace

struct PdaRunner::Impl {
    Grammar grammar;
    explicit Impl(const Machine& m) : grammar(m) {}
};

PdaRunner::PdaRunner(const Machine& m) : impl_(std::make_unique<Impl>(m)) {}
PdaRunner::~PdaRunner() = default;
PdaRunner::PdaRunner(PdaRunner&&) noexcept = default;

namespace {

struct Item {
    int prod, dot, origin;
};

struct Chart {
    const Grammar* g;
    int n = 0;
    std::vector<int> word;
    std::vector<std::vector<Item>> sets;
    std::vector<std::unordered_set<std::uint64_t>> seen;
    std::vector<std::unordered_map<int, std::vector<int>>> waiting;
    std::unordered_set<std::uint64_t> completed;
    std::uint64_t items = 0;

    std::uint64_t item_key(const Item& it) const {
        return (static_cast<std::uint64_t>(it.prod) * 8 + static_cast<std::uint64_t>(it.dot)) *
                   static_cast<std::uint64_t>(n + 2) +
               static_cast<std::uint64_t>(it.origin);
    }
    std::uint64_t span_key(int lhs, int i, int j) const {
        return (static_cast<std::uint64_t>(lhs) * static_cast<std::uint64_t>(n + 2) +
                static_cast<std::uint64_t>(i)) *
                   static_cast<std::uint64_t>(n + 2) +
               static_cast<std::uint64_t>(j);
    }

    void add(int set, Item it) {
        if (!seen[static_cast<std::size_t>(set)].insert(item_key(it)).second) return;
        sets[static_cast<std::size_t>(set)].push_back(it);
        ++items;
    }

    bool run() {
        for (int p : g->prods_by_lhs[kStartVar]) add(0, {p, 0, 0});
        for (int j = 0; j <= n; ++j) {
            auto& set = sets[static_cast<std::size_t>(j)];
            for (std::size_t idx = 0; idx < set.size(); ++idx) {
                const Item it = set[idx];
                const auto& prod = g->prods[static_cast<std::size_t>(it.prod)];
                if (it.dot == static_cast<int>(prod.rhs.size())) {
                    completed.insert(span_key(prod.lhs, it.origin, j));
                    for (int widx :
                         waiting[static_cast<std::size_t>(it.origin)][prod.lhs]) {
                        const Item& w = sets[static_cast<std::size_t>(it.origin)]
                                            [static_cast<std::size_t>(widx)];
                        add(j, {w.prod, w.dot + 1, w.origin});
                    }
                    continue;
                }
                const int sym = prod.rhs[static_cast<std::size_t>(it.dot)];
                if (sym < 0) {
                    const int tok = -(sym + 1);
                    if (j < n && word[static_cast<std::size_t>(j)] == tok)
                        add(j + 1, {it.prod, it.dot + 1, it.origin});
                } else {
                    waiting[static_cast<std::size_t>(j)][sym].push_back(static_cast<int>(idx));
                    for (int p : g->prods_by_lhs[static_cast<std::size_t>(sym)]) add(j, {p, 0, j});
                    if (g->nullable[static_cast<std::size_t>(sym)])
                        add(j, {it.prod, it.dot + 1, it.origin});
                }
            }
        }
        return completed.count(span_key(kStartVar, 0, n)) > 0;
    }
};

// Rebuilds one derivation from the chart and flattens it into the move
// sequence of an accepting run (pre-order: a production's own move comes
// before the moves of its children).
struct Extractor {
    const Grammar* g;
    const Chart* chart;
    std::unordered_set<std::uint64_t> on_path;
    std::unordered_map<std::uint64_t, std::vector<int>> success;

    bool spans(int sym, int i, int j) const {
        if (sym < 0) {
            return j == i + 1 && i < chart->n &&
                   chart->word[static_cast<std::size_t>(i)] == -(sym + 1);
        }
        return chart->completed.count(chart->span_key(sym, i, j)) > 0;
    }

    bool derive(int var, int i, int j, std::vector<int>& out) {
        const auto key = chart->span_key(var, i, j);
        if (auto it = success.find(key); it != success.end()) {
            out.insert(out.end(), it->second.begin(), it->second.end());
            return true;
        }
        if (!on_path.insert(key).second) return false;
        bool found = false;
        std::vector<int> local;
        for (int pidx : g->prods_by_lhs[static_cast<std::size_t>(var)]) {
            const auto& prod = g->prods[static_cast<std::size_t>(pidx)];
            local.clear();
            if (prod.move >= 0) local.push_back(prod.move);
            if (match(prod, 0, i, j, local)) {
                found = true;
                break;
            }
        }
        on_path.erase(key);
        if (!found) return false;
        success[key] = local;
        out.insert(out.end(), local.begin(), local.end());
        return true;
    }

    bool match(const Production& prod, std::size_t idx, int pos, int end, std::vector<int>& out) {
        if (idx == prod.rhs.size()) return pos == end;
        const int sym = prod.rhs[idx];
        if (sym < 0) {
            if (pos + 1 > end || !spans(sym, pos, pos + 1)) return false;
            return match(prod, idx + 1, pos + 1, end, out);
        }
        for (int q = pos; q <= end; ++q) {
            if (!spans(sym, pos, q)) continue;
            const std::size_t mark = out.size();
            if (!derive(sym, pos, q, out)) continue;
            if (match(prod, idx + 1, q, end, out)) return true;
            out.resize(mark);
        }
        return false;
    }
};

}  // namespace

RunResult PdaRunner::run(std::span<const std::string> word) const {
    const Grammar& g = impl_->grammar;
    Chart chart;
    chart.g = &g;
    chart.n = static_cast<int>(word.size());
    chart.word.resize(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto it = g.token_ids.find(word[i]);
        chart.word[i] = it == g.token_ids.end() ? -2 : it->second;
    }
    chart.sets.resize(word.size() + 1);
    chart.seen.resize(word.size() + 1);
    chart.waiting.resize(word.size() + 1);

    RunResult result;
    const bool accepted = chart.run();
    result.configurations = chart.items;
    if (!accepted) {
        result.verdict = RunVerdict::Reject;
        return result;
    }

    Extractor ex{&g, &chart, {}, {}};
    std::vector<int> move_seq;
    if (!ex.derive(kStartVar, 0, chart.n, move_seq))
        throw Error("pda_accepts: recognized word has no extractable derivation");

    // Replay the move sequence on a real stack; this both verifies the
    // run and yields the depth statistic.
    const Machine& m = g.machine;
    std::unordered_map<std::string, int> gamma;
    for (std::size_t i = 0; i < m.tape_alphabet.size(); ++i)
        gamma[m.tape_alphabet[i]] = static_cast<int>(i);
    std::vector<int> stack{gamma.at(m.bottom_marker)};
    int state = m.start;
    std::size_t pos = 0;
    result.max_stack = stack.size();
    const int drain = static_cast<int>(m.states.size());
    for (int mi : move_seq) {
        const Move& mv = g.moves[static_cast<std::size_t>(mi)];
        if (mv.src != state) throw Error("pda_accepts: trace replay diverged");
        if (mv.token >= 0) {
            if (pos >= word.size() || chart.word[pos] != mv.token)
                throw Error("pda_accepts: trace does not spell the word");
            ++pos;
        }
        if (stack.empty() || stack.back() != mv.pop)
            throw Error("pda_accepts: trace replay stack mismatch");
        stack.pop_back();
        if (mv.push[1] >= 0) stack.push_back(mv.push[1]);
        if (mv.push[0] >= 0) stack.push_back(mv.push[0]);
        result.max_stack = std::max(result.max_stack, stack.size());
        state = mv.dst;
        if (mv.orig >= 0) result.trace.push_back(mv.orig);
    }
    if (pos != word.size() || state != drain || !stack.empty())
        throw Error("pda_accepts: trace replay diverged");
    result.verdict = RunVerdict::Accept;
    return result;
}

RunResult pda_accepts(const Machine& m, std::span<const std::string> word) {
    return PdaRunner(m).run(word);
}

}  // namespace gat
