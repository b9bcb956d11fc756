#include "gat/machine.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace gat {

std::string_view machine_class_name(MachineClass cls) {
    switch (cls) {
        case MachineClass::Fsa: return "fsa";
        case MachineClass::Pda: return "pda";
        case MachineClass::Lba: return "lba";
        case MachineClass::Stack: return "stack";
        case MachineClass::NestedStack: return "nested-stack";
        case MachineClass::Turing: return "turing";
    }
    return "?";
}

std::optional<MachineClass> parse_machine_class(std::string_view name) {
    for (MachineClass cls : {MachineClass::Fsa, MachineClass::Pda, MachineClass::Lba,
                             MachineClass::Stack, MachineClass::NestedStack, MachineClass::Turing}) {
        if (machine_class_name(cls) == name) return cls;
    }
    return std::nullopt;
}

bool machine_class_executable(MachineClass cls) {
    return cls == MachineClass::Fsa || cls == MachineClass::Pda || cls == MachineClass::Lba;
}

Instruction neutral_instruction(MachineClass cls) {
    switch (cls) {
        case MachineClass::Fsa: return NoOp{};
        case MachineClass::Pda: return PdaInstr{std::nullopt, StackOp::Stay, ""};
        case MachineClass::Lba: return LbaInstr{std::nullopt, std::nullopt, HeadMove::Stay};
        default: throw Error("neutral_instruction: unimplemented machine class");
    }
}

std::int64_t ceil_mul(Rational r, std::int64_t n) {
    if (r.num <= 0 || r.den <= 0) throw Error("space multiplier must be positive");
    return (r.num * n + r.den - 1) / r.den;
}

int Machine::add_state(const std::string& name) {
    states.push_back(name);
    return static_cast<int>(states.size()) - 1;
}

int Machine::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] == name) return static_cast<int>(i);
    }
    return -1;
}

bool Machine::is_accept(int state) const {
    return std::find(accepts.begin(), accepts.end(), state) != accepts.end();
}

std::string_view run_verdict_name(RunVerdict verdict) {
    switch (verdict) {
        case RunVerdict::Accept: return "accept";
        case RunVerdict::Reject: return "reject";
        case RunVerdict::ResourceExceeded: return "resource-exceeded";
    }
    return "?";
}

namespace {

std::string edge_label(const Machine& m, std::size_t i) {
    const auto& e = m.edges[i];
    std::string src = e.src >= 0 && e.src < static_cast<int>(m.states.size())
                          ? m.states[static_cast<std::size_t>(e.src)]
                          : "#" + std::to_string(e.src);
    std::string dst = e.dst >= 0 && e.dst < static_cast<int>(m.states.size())
                          ? m.states[static_cast<std::size_t>(e.dst)]
                          : "#" + std::to_string(e.dst);
    return "edge " + std::to_string(i) + " (" + src + " -" + (e.input ? *e.input : "eps") + "-> " +
           dst + ")";
}

bool contains(const std::vector<std::string>& set, const std::string& s) {
    return std::find(set.begin(), set.end(), s) != set.end();
}

}  // namespace

std::vector<Diagnostic> validate_machine(const Machine& m) {
    std::vector<Diagnostic> diags;
    auto bad = [&](std::string subject, std::string message) {
        diags.push_back({std::move(subject), std::move(message)});
    };

    const int n = static_cast<int>(m.states.size());
    if (n == 0) bad("states", "machine has no states");
    if (m.start < 0 || m.start >= n) bad("start", "start state out of range");
    for (int a : m.accepts) {
        if (a < 0 || a >= n) bad("accepts", "accept state " + std::to_string(a) + " out of range");
    }
    for (const auto& alphabet : {&m.input_alphabet, &m.tape_alphabet}) {
        std::set<std::string> seen;
        for (const auto& t : *alphabet) {
            if (t.empty()) bad("alphabet", "empty token");
            if (!seen.insert(t).second) bad("alphabet", "duplicate token '" + t + "'");
        }
    }

    const bool executable = machine_class_executable(m.cls);
    if (m.cls == MachineClass::Pda) {
        if (m.bottom_marker.empty() || !contains(m.tape_alphabet, m.bottom_marker))
            bad("bottom_marker", "must name a tape alphabet symbol");
    }
    if (m.cls == MachineClass::Lba) {
        for (const auto& [field, value] :
             {std::pair<const char*, const std::string*>{"left_marker", &m.left_marker},
              {"right_marker", &m.right_marker},
              {"blank", &m.blank}}) {
            if (value->empty() || !contains(m.tape_alphabet, *value))
                bad(field, "must name a tape alphabet symbol");
        }
        if (m.left_marker == m.right_marker || m.left_marker == m.blank ||
            m.right_marker == m.blank)
            bad("markers", "left marker, right marker and blank must be distinct");
        if (m.space_multiplier.num <= 0 || m.space_multiplier.den <= 0)
            bad("space_multiplier", "must be positive");
    }

    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        const auto& e = m.edges[i];
        const std::string subject = edge_label(m, i);
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
            bad(subject, "endpoint out of range");
            continue;
        }
        if (e.input && !contains(m.input_alphabet, *e.input))
            bad(subject, "input token '" + *e.input + "' not in the input alphabet");
        if (!executable) continue;

        switch (m.cls) {
            case MachineClass::Fsa:
                if (!std::holds_alternative<NoOp>(e.instr))
                    bad(subject, "fsa edges carry no tape instruction");
                break;
            case MachineClass::Pda: {
                const auto* instr = std::get_if<PdaInstr>(&e.instr);
                if (instr == nullptr) {
                    bad(subject, "pda edge without a pda instruction");
                    break;
                }
                if (instr->guard && !contains(m.tape_alphabet, *instr->guard))
                    bad(subject, "guard symbol not in the tape alphabet");
                if (instr->op == StackOp::Push) {
                    if (!contains(m.tape_alphabet, instr->symbol))
                        bad(subject, "push symbol not in the tape alphabet");
                    if (instr->symbol == m.bottom_marker)
                        bad(subject, "pushes the bottom marker");
                }
                if (instr->op == StackOp::Pop) {
                    if (!instr->guard)
                        bad(subject, "pop with a wildcard guard could pop the bottom marker");
                    else if (*instr->guard == m.bottom_marker)
                        bad(subject, "pops the bottom marker");
                }
                break;
            }
            case MachineClass::Lba: {
                const auto* instr = std::get_if<LbaInstr>(&e.instr);
                if (instr == nullptr) {
                    bad(subject, "lba edge without an lba instruction");
                    break;
                }
                if (instr->guard && !contains(m.tape_alphabet, *instr->guard))
                    bad(subject, "guard symbol not in the tape alphabet");
                if (instr->write && !contains(m.tape_alphabet, *instr->write))
                    bad(subject, "write symbol not in the tape alphabet");
                if (instr->move == HeadMove::Left &&
                    (!instr->guard || *instr->guard == m.left_marker))
                    bad(subject, "left move must be guarded by a symbol other than the left marker");
                if (instr->move == HeadMove::Right &&
                    (!instr->guard || *instr->guard == m.right_marker))
                    bad(subject,
                        "right move must be guarded by a symbol other than the right marker");
                if (instr->write) {
                    if (!instr->guard || *instr->guard == m.left_marker ||
                        *instr->guard == m.right_marker)
                        bad(subject, "write must be guarded by a non-marker symbol");
                    if (*instr->write == m.left_marker || *instr->write == m.right_marker)
                        bad(subject, "writes an end marker");
                }
                break;
            }
            default: break;
        }
    }
    return diags;
}

namespace {

bool guards_overlap(const Instruction& a, const Instruction& b) {
    const auto guard_of = [](const Instruction& instr) -> std::optional<std::string> {
        if (const auto* p = std::get_if<PdaInstr>(&instr)) return p->guard;
        if (const auto* l = std::get_if<LbaInstr>(&instr)) return l->guard;
        return std::nullopt;  // NoOp: unguarded, overlaps everything
    };
    auto ga = guard_of(a);
    auto gb = guard_of(b);
    if (!ga || !gb) return true;
    return *ga == *gb;
}

}  // namespace

bool is_deterministic(const Machine& m) {
    std::unordered_map<int, std::vector<const MachineEdge*>> by_state;
    for (const auto& e : m.edges) {
        if (!e.input) return false;
        by_state[e.src].push_back(&e);
    }
    for (const auto& [state, edges] : by_state) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                if (*edges[i]->input != *edges[j]->input) continue;
                if (guards_overlap(edges[i]->instr, edges[j]->instr)) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// fsa

struct FsaRunner::Impl {
    const Machine machine;
    std::unordered_map<std::string, int> token_ids;
    // per state: (token id or -1 for epsilon, edge index)
    std::vector<std::vector<std::pair<int, int>>> out;

    explicit Impl(const Machine& m) : machine(m) {
        if (m.cls != MachineClass::Fsa) throw Error("fsa_accepts: machine class is not fsa");
        auto diags = validate_machine(m);
        if (!diags.empty()) throw Error("fsa_accepts: invalid machine\n" + format_diagnostics(diags));
        for (std::size_t i = 0; i < m.input_alphabet.size(); ++i)
            token_ids[m.input_alphabet[i]] = static_cast<int>(i);
        out.resize(m.states.size());
        for (std::size_t i = 0; i < m.edges.size(); ++i) {
            const auto& e = m.edges[i];
            int tok = e.input ? token_ids.at(*e.input) : -1;
            out[static_cast<std::size_t>(e.src)].push_back({tok, static_cast<int>(i)});
        }
    }
};

FsaRunner::FsaRunner(const Machine& m) : impl_(std::make_unique<Impl>(m)) {}
FsaRunner::~FsaRunner() = default;
FsaRunner::FsaRunner(FsaRunner&&) noexcept = default;

RunResult FsaRunner::run(std::span<const std::string> word) const {
    const Machine& m = impl_->machine;
    const int nstates = static_cast<int>(m.states.size());
    const int n = static_cast<int>(word.size());

    std::vector<int> ids(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto it = impl_->token_ids.find(word[i]);
        ids[i] = it == impl_->token_ids.end() ? -2 : it->second;
    }

    // Breadth-first epsilon-closure simulation over (position, state),
    // with parents kept for trace reconstruction.
    const auto node = [&](int pos, int state) { return pos * nstates + state; };
    std::vector<int> parent(static_cast<std::size_t>((n + 1) * nstates), -2);  // -2 unvisited
    std::vector<int> via(parent.size(), -1);
    std::vector<int> queue;
    RunResult result;

    parent[static_cast<std::size_t>(node(0, m.start))] = -1;
    queue.push_back(node(0, m.start));
    int accept_node = -1;
    for (std::size_t qi = 0; qi < queue.size() && accept_node < 0; ++qi) {
        const int cur = queue[qi];
        ++result.configurations;
        const int pos = cur / nstates;
        const int state = cur % nstates;
        if (pos == n && m.is_accept(state)) {
            accept_node = cur;
            break;
        }
        for (auto [tok, edge] : impl_->out[static_cast<std::size_t>(state)]) {
            int npos = pos;
            if (tok != -1) {
                if (pos >= n || ids[static_cast<std::size_t>(pos)] != tok) continue;
                npos = pos + 1;
            }
            const int next = node(npos, m.edges[static_cast<std::size_t>(edge)].dst);
            if (parent[static_cast<std::size_t>(next)] != -2) continue;
            parent[static_cast<std::size_t>(next)] = cur;
            via[static_cast<std::size_t>(next)] = edge;
            queue.push_back(next);
        }
    }

    if (accept_node < 0) {
        result.verdict = RunVerdict::Reject;
        return result;
    }
    for (int cur = accept_node; parent[static_cast<std::size_t>(cur)] != -1;
         cur = parent[static_cast<std::size_t>(cur)]) {
        result.trace.push_back(via[static_cast<std::size_t>(cur)]);
    }
    std::reverse(result.trace.begin(), result.trace.end());

    // Replay the trace so an accept verdict is backed by a verified run.
    int state = m.start;
    std::size_t pos = 0;
    for (int edge : result.trace) {
        const auto& e = m.edges[static_cast<std::size_t>(edge)];
        if (e.src != state) throw Error("fsa_accepts: trace replay diverged");
        if (e.input) {
            if (pos >= word.size() || word[pos] != *e.input)
                throw Error("fsa_accepts: trace does not spell the word");
            ++pos;
        }
        state = e.dst;
    }
    if (pos != word.size() || !m.is_accept(state)) throw Error("fsa_accepts: trace replay diverged");
    result.verdict = RunVerdict::Accept;
    return result;
}

// ---------------------------------------------------------------------------
// lba

struct LbaRunner::Impl {
    const Machine machine;
    MachineRunLimits limits;
    std::unordered_map<std::string, int> token_ids;
    std::unordered_map<std::string, char> sym_ids;
    char left = 0, right = 0, blank = 0;

    struct CompiledEdge {
        int token = -1;  // -1 epsilon
        int guard = -1;  // -1 wildcard
        int write = -1;  // -1 keep
        int move = 0;    // -1, 0, +1
        int dst = 0;
        int orig = 0;
    };
    std::vector<std::vector<CompiledEdge>> out;

    Impl(const Machine& m, const MachineRunLimits& lim) : machine(m), limits(lim) {
        if (m.cls != MachineClass::Lba) throw Error("lba_accepts: machine class is not lba");
        auto diags = validate_machine(m);
        if (!diags.empty()) throw Error("lba_accepts: invalid machine\n" + format_diagnostics(diags));
        if (m.tape_alphabet.size() > 120) throw Error("lba_accepts: tape alphabet too large");
        for (std::size_t i = 0; i < m.input_alphabet.size(); ++i)
            token_ids[m.input_alphabet[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < m.tape_alphabet.size(); ++i)
            sym_ids[m.tape_alphabet[i]] = static_cast<char>(i);
        left = sym_ids.at(m.left_marker);
        right = sym_ids.at(m.right_marker);
        blank = sym_ids.at(m.blank);
        out.resize(m.states.size());
        for (std::size_t i = 0; i < m.edges.size(); ++i) {
            const auto& e = m.edges[i];
            const auto& instr = std::get<LbaInstr>(e.instr);
            CompiledEdge ce;
            ce.token = e.input ? token_ids.at(*e.input) : -1;
            ce.guard = instr.guard ? static_cast<int>(sym_ids.at(*instr.guard)) : -1;
            ce.write = instr.write ? static_cast<int>(sym_ids.at(*instr.write)) : -1;
            ce.move = instr.move == HeadMove::Left ? -1 : instr.move == HeadMove::Right ? 1 : 0;
            ce.dst = e.dst;
            ce.orig = static_cast<int>(i);
            out[static_cast<std::size_t>(e.src)].push_back(ce);
        }
    }
};

LbaRunner::LbaRunner(const Machine& m, const MachineRunLimits& limits)
    : impl_(std::make_unique<Impl>(m, limits)) {}
LbaRunner::~LbaRunner() = default;
LbaRunner::LbaRunner(LbaRunner&&) noexcept = default;

std::int64_t LbaRunner::work_cells(std::size_t word_length) const {
    return ceil_mul(impl_->machine.space_multiplier, static_cast<std::int64_t>(word_length) + 1);
}

RunResult LbaRunner::run(std::span<const std::string> word) const {
    const Machine& m = impl_->machine;
    const int n = static_cast<int>(word.size());
    const std::int64_t work = work_cells(word.size());
    const int tape_len = static_cast<int>(work) + 2;

    std::vector<int> ids(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto it = impl_->token_ids.find(word[i]);
        ids[i] = it == impl_->token_ids.end() ? -2 : it->second;
    }

    std::string initial_tape(static_cast<std::size_t>(tape_len), impl_->blank);
    initial_tape.front() = impl_->left;
    initial_tape.back() = impl_->right;

    struct Config {
        int pos, state, head, parent, edge;
    };
    std::vector<Config> configs;
    std::vector<std::string> tapes;
    std::unordered_set<std::string> visited;
    RunResult result;

    const auto key_of = [](int pos, int state, int head, const std::string& tape) {
        std::string key;
        key.reserve(6 + tape.size());
        key.push_back(static_cast<char>(pos & 0xff));
        key.push_back(static_cast<char>(pos >> 8));
        key.push_back(static_cast<char>(state & 0xff));
        key.push_back(static_cast<char>(state >> 8));
        key.push_back(static_cast<char>(head & 0xff));
        key.push_back(static_cast<char>(head >> 8));
        key += tape;
        return key;
    };

    int accept_at = -1;
    const auto push_config = [&](int pos, int state, int head, std::string tape, int parent,
                                 int edge) {
        auto key = key_of(pos, state, head, tape);
        if (!visited.insert(std::move(key)).second) return;
        if (head >= 1 && head <= static_cast<int>(work))
            result.max_cells = std::max(result.max_cells, static_cast<std::size_t>(head));
        configs.push_back({pos, state, head, parent, edge});
        tapes.push_back(std::move(tape));
        if (pos == n && m.is_accept(state) && accept_at < 0)
            accept_at = static_cast<int>(configs.size()) - 1;
    };

    push_config(0, m.start, 1, initial_tape, -1, -1);

    for (std::size_t qi = 0; qi < configs.size() && accept_at < 0; ++qi) {
        if (visited.size() >= impl_->limits.max_visited) {
            result.verdict = RunVerdict::ResourceExceeded;
            result.configurations = visited.size();
            return result;
        }
        const Config cur = configs[qi];
        const char scanned = tapes[qi][static_cast<std::size_t>(cur.head)];
        for (const auto& e : impl_->out[static_cast<std::size_t>(cur.state)]) {
            int npos = cur.pos;
            if (e.token != -1) {
                if (cur.pos >= n || ids[static_cast<std::size_t>(cur.pos)] != e.token) continue;
                npos = cur.pos + 1;
            }
            if (e.guard != -1 && e.guard != static_cast<int>(scanned)) continue;
            int nhead = cur.head + e.move;
            if (nhead < 0 || nhead >= tape_len) continue;
            if (e.write != -1 && (scanned == impl_->left || scanned == impl_->right)) continue;
            std::string tape = tapes[qi];
            if (e.write != -1) tape[static_cast<std::size_t>(cur.head)] = static_cast<char>(e.write);
            push_config(npos, e.dst, nhead, std::move(tape), static_cast<int>(qi), e.orig);
        }
    }

    result.configurations = visited.size();
    if (accept_at < 0) {
        result.verdict = RunVerdict::Reject;
        return result;
    }
    for (int cur = accept_at; configs[static_cast<std::size_t>(cur)].parent != -1;
         cur = configs[static_cast<std::size_t>(cur)].parent) {
        result.trace.push_back(configs[static_cast<std::size_t>(cur)].edge);
    }
    std::reverse(result.trace.begin(), result.trace.end());

    // Replay and verify the accepting run.
    {
        std::string tape = initial_tape;
        int state = m.start, head = 1, pos = 0;
        for (int edge : result.trace) {
            const auto& e = m.edges[static_cast<std::size_t>(edge)];
            const auto& instr = std::get<LbaInstr>(e.instr);
            if (e.src != state) throw Error("lba_accepts: trace replay diverged");
            if (e.input) {
                if (pos >= n || word[static_cast<std::size_t>(pos)] != *e.input)
                    throw Error("lba_accepts: trace does not spell the word");
                ++pos;
            }
            const char scanned = tape[static_cast<std::size_t>(head)];
            if (instr.guard && impl_->sym_ids.at(*instr.guard) != scanned)
                throw Error("lba_accepts: trace replay guard mismatch");
            if (instr.write) tape[static_cast<std::size_t>(head)] = impl_->sym_ids.at(*instr.write);
            head += instr.move == HeadMove::Left ? -1 : instr.move == HeadMove::Right ? 1 : 0;
            if (head < 0 || head >= tape_len) throw Error("lba_accepts: trace ran off the tape");
            state = e.dst;
        }
        if (pos != n || !m.is_accept(state)) throw Error("lba_accepts: trace replay diverged");
    }
    result.verdict = RunVerdict::Accept;
    return result;
}

// ---------------------------------------------------------------------------
// dispatch

RunResult fsa_accepts(const Machine& m, std::span<const std::string> word) {
    return FsaRunner(m).run(word);
}

RunResult lba_accepts(const Machine& m, std::span<const std::string> word,
                      const MachineRunLimits& limits) {
    return LbaRunner(m, limits).run(word);
}

RunResult machine_accepts(const Machine& m, std::span<const std::string> word,
                          const MachineRunLimits& limits) {
    switch (m.cls) {
        case MachineClass::Fsa: return fsa_accepts(m, word);
        case MachineClass::Pda: return pda_accepts(m, word);
        case MachineClass::Lba: return lba_accepts(m, word, limits);
        default:
            throw Error("unimplemented machine class: " +
                        std::string(machine_class_name(m.cls)));
    }
}

}  // namespace gat
