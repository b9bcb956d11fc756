#include "gat/transfer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gat {

namespace {

std::string instruction_key(const Instruction& instr) {
    std::ostringstream out;
    if (std::holds_alternative<NoOp>(instr)) {
        out << "noop";
    } else if (const auto* p = std::get_if<PdaInstr>(&instr)) {
        out << "pda:" << (p->guard ? *p->guard : "*") << ":";
        switch (p->op) {
            case StackOp::Push: out << "push:" << p->symbol; break;
            case StackOp::Pop: out << "pop"; break;
            case StackOp::Stay: out << "stay"; break;
        }
    } else if (const auto* l = std::get_if<LbaInstr>(&instr)) {
        out << "lba:" << (l->guard ? *l->guard : "*") << ":" << (l->write ? *l->write : "=")
            << ":" << (l->move == HeadMove::Left ? "L" : l->move == HeadMove::Right ? "R" : "S");
    }
    return out.str();
}

}  // namespace

ProductMachine product(const GAutomaton& p, const WordProblemMachine& n) {
    if (!is_normalized(p)) throw Error("product: G-automaton must be normalized");
    {
        auto validation = validate_gautomaton(p);
        if (!validation.diagnostics.empty())
            throw Error("product: invalid G-automaton\n" +
                        format_diagnostics(validation.diagnostics));
        auto mdiags = validate_machine(n.machine);
        if (!mdiags.empty())
            throw Error("product: invalid word-problem machine\n" + format_diagnostics(mdiags));
        std::set<std::string> want;
        for (const auto& t : p.group.generator_tokens()) want.insert(t);
        std::set<std::string> have(n.machine.input_alphabet.begin(),
                                   n.machine.input_alphabet.end());
        if (want != have)
            throw Error("product: word-problem machine tokens do not match the group generators");
        if (n.machine.cls != n.certificate)
            throw Error("product: word-problem machine class differs from its certificate");
    }

    const Machine& nm = n.machine;

    // N edges grouped by the group element their token evaluates to.
    std::map<GroupElement, std::vector<int>> n_edges_by_element;
    std::vector<int> n_eps_edges;
    for (std::size_t i = 0; i < nm.edges.size(); ++i) {
        const auto& e = nm.edges[i];
        if (!e.input) {
            n_eps_edges.push_back(static_cast<int>(i));
            continue;
        }
        auto sym = parse_generator_token(*e.input);
        const Generator* gen = sym ? p.group.find_generator(*sym) : nullptr;
        if (gen == nullptr)
            throw Error("product: word-problem machine reads unknown token '" + *e.input + "'");
        n_edges_by_element[gen->image].push_back(static_cast<int>(i));
    }

    ProductMachine result;
    Machine& m = result.machine;
    m.cls = nm.cls;
    m.input_alphabet = p.alphabet;
    m.tape_alphabet = nm.tape_alphabet;
    m.bottom_marker = nm.bottom_marker;
    m.left_marker = nm.left_marker;
    m.right_marker = nm.right_marker;
    m.blank = nm.blank;
    m.space_multiplier = nm.space_multiplier;

    std::map<std::pair<int, int>, int> pair_index;
    std::vector<std::pair<int, int>> pairs;
    const auto state_of = [&](int ps, int qs) {
        auto key = std::make_pair(ps, qs);
        auto it = pair_index.find(key);
        if (it != pair_index.end()) return it->second;
        int idx = m.add_state(p.states[static_cast<std::size_t>(ps)] + "|" +
                              nm.states[static_cast<std::size_t>(qs)]);
        pair_index.emplace(key, idx);
        pairs.push_back(key);
        result.provenance.state_factors.push_back({p.states[static_cast<std::size_t>(ps)],
                                                   nm.states[static_cast<std::size_t>(qs)]});
        return idx;
    };

    const Instruction neutral = neutral_instruction(nm.cls);
    std::set<std::string> edge_keys;
    const auto add_edge = [&](int src, std::optional<std::string> input, Instruction instr,
                              int dst, int p_edge, int n_edge, const char* rule) {
        std::string key = std::to_string(src) + "\x1f" + (input ? *input : "\x1e") + "\x1f" +
                          instruction_key(instr) + "\x1f" + std::to_string(dst);
        if (!edge_keys.insert(std::move(key)).second) return;
        m.edges.push_back({src, std::move(input), std::move(instr), dst});
        result.provenance.edge_origins.push_back({p_edge, n_edge, rule});
    };

    state_of(p.start, nm.start);
    m.start = 0;
    for (std::size_t qi = 0; qi < pairs.size(); ++qi) {
        const auto [ps, qs] = pairs[qi];
        const int src = static_cast<int>(qi);
        for (std::size_t pe = 0; pe < p.edges.size(); ++pe) {
            const auto& edge = p.edges[pe];
            if (edge.src != ps) continue;
            if (is_identity(p.group, edge.weight)) {
                add_edge(src, edge.letter, neutral, state_of(edge.dst, qs),
                         static_cast<int>(pe), -1, "identity-lift");
                continue;
            }
            auto it = n_edges_by_element.find(edge.weight);
            if (it == n_edges_by_element.end()) continue;
            for (int ne : it->second) {
                const auto& nedge = nm.edges[static_cast<std::size_t>(ne)];
                if (nedge.src != qs) continue;
                add_edge(src, edge.letter, nedge.instr, state_of(edge.dst, nedge.dst),
                         static_cast<int>(pe), ne, edge.letter ? "pair" : "p-eps-pair");
            }
        }
        for (int ne : n_eps_edges) {
            const auto& nedge = nm.edges[static_cast<std::size_t>(ne)];
            if (nedge.src != qs) continue;
            add_edge(src, std::nullopt, nedge.instr, state_of(ps, nedge.dst), -1, ne,
                     "n-eps-lift");
        }
    }
    for (std::size_t qi = 0; qi < pairs.size(); ++qi) {
        const auto [ps, qs] = pairs[qi];
        if (p.is_accept(ps) && nm.is_accept(qs)) m.accepts.push_back(static_cast<int>(qi));
    }
    return result;
}

WordProblemMachine wp_machine_finite(const GroupSpec& spec) {
    if (spec.family != GroupFamily::Finite)
        throw Error("wp_machine_finite: group family is not finite");
    auto diags = validate_group(spec);
    if (!diags.empty())
        throw Error("wp_machine_finite: invalid group\n" + format_diagnostics(diags));

    WordProblemMachine wp;
    wp.group = spec;
    wp.certificate = MachineClass::Fsa;
    Machine& m = wp.machine;
    m.cls = MachineClass::Fsa;
    m.input_alphabet = spec.generator_tokens();
    for (int i = 0; i < spec.order; ++i) m.add_state("g" + std::to_string(i));
    m.start = 0;
    m.accepts = {0};
    for (int h = 0; h < spec.order; ++h) {
        for (const auto& g : spec.generators) {
            const int target = spec.cayley[static_cast<std::size_t>(h)]
                                          [static_cast<std::size_t>(g.image.finite_index)];
            m.edges.push_back({h, g.symbol.token(), NoOp{}, target});
        }
    }
    return wp;
}

WordProblemMachine wp_machine_free(const GroupSpec& spec) {
    if (spec.family != GroupFamily::Free)
        throw Error("wp_machine_free: group family is not free");
    auto diags = validate_group(spec);
    if (!diags.empty()) throw Error("wp_machine_free: invalid group\n" + format_diagnostics(diags));

    WordProblemMachine wp;
    wp.group = spec;
    wp.certificate = MachineClass::Pda;
    Machine& m = wp.machine;
    m.cls = MachineClass::Pda;
    m.input_alphabet = spec.generator_tokens();
    m.bottom_marker = "$";
    m.tape_alphabet.push_back("$");
    for (const auto& t : m.input_alphabet) m.tape_alphabet.push_back(t);

    const int work = m.add_state("w");
    const int acc = m.add_state("acc");
    m.start = work;
    m.accepts = {acc};

    for (const auto& g : spec.generators) {
        const std::string token = g.symbol.token();
        const std::string inverse = g.symbol.inverse().token();
        // Reading g cancels a top g^-1 and stacks g on anything else.
        m.edges.push_back({work, token, PdaInstr{inverse, StackOp::Pop, ""}, work});
        for (const auto& top : m.tape_alphabet) {
            if (top == inverse) continue;
            m.edges.push_back({work, token, PdaInstr{top, StackOp::Push, token}, work});
        }
    }
    m.edges.push_back({work, std::nullopt, PdaInstr{std::string("$"), StackOp::Stay, ""}, acc});
    return wp;
}

// ---------------------------------------------------------------------------
// Z^k counter tape machine

namespace {

// Assembles the counter-zone lba. Tape layout after initialization:
//   < #s(1^m) #s(1^m) ... #s(1^m) _ ... _ >
// one zone per counter, each a separator '#', a sign cell in {0,+,-} and
// a unary block whose length is the counter magnitude. Zones stay
// adjacent: growing a block shifts the suffix right cell by cell, and
// shrinking shifts it back left.
struct ZnBuilder {
    Machine m;
    int k;
    const std::vector<std::string> content_syms{"#", "0", "+", "-", "1"};

    explicit ZnBuilder(int rank) : k(rank) {
        m.cls = MachineClass::Lba;
        m.tape_alphabet = {"<", ">", "_", "#", "0", "+", "-", "1"};
        m.left_marker = "<";
        m.right_marker = ">";
        m.blank = "_";
        m.space_multiplier = {2 * static_cast<std::int64_t>(k) + 3, 1};
    }

    int state(const std::string& name) {
        int idx = m.state_index(name);
        return idx >= 0 ? idx : m.add_state(name);
    }

    void edge(int src, std::optional<std::string> input, std::optional<std::string> guard,
              std::optional<std::string> write, HeadMove move, int dst) {
        m.edges.push_back({src, std::move(input), LbaInstr{std::move(guard), std::move(write), move},
                           dst});
    }

    // Rewind to the left marker, then step onto the first work cell.
    void add_rewind(int self, int next) {
        for (const auto& sym : m.tape_alphabet) {
            if (sym == "<") continue;
            edge(self, std::nullopt, sym, std::nullopt, HeadMove::Left, self);
        }
        edge(self, std::nullopt, std::string("<"), std::nullopt, HeadMove::Right, next);
    }

    // Shared insert: write '1' under the head and carry the previous
    // symbols rightwards until a blank absorbs the tail.
    void add_insert_program() {
        const int ins = state("ins");
        const int ready = state("ready");
        edge(ins, std::nullopt, std::string("_"), std::string("1"), HeadMove::Stay, ready);
        for (const auto& y : content_syms) {
            edge(ins, std::nullopt, y, std::string("1"), HeadMove::Right, state("ca:" + y));
        }
        for (const auto& x : content_syms) {
            const int carry = state("ca:" + x);
            edge(carry, std::nullopt, std::string("_"), x, HeadMove::Stay, ready);
            for (const auto& y : content_syms) {
                edge(carry, std::nullopt, y, x, HeadMove::Right, state("ca:" + y));
            }
        }
    }

    // Shared delete: erase the cell under the head by pulling every
    // symbol to its right one cell leftwards.
    void add_pull_program() {
        const int pull_a = state("pl:A");
        const int pull_b = state("pl:B");
        const int ready = state("ready");
        for (const auto& z : content_syms) {
            edge(pull_a, std::nullopt, z, std::nullopt, HeadMove::Right, pull_b);
        }
        for (const auto& y : content_syms) {
            edge(pull_b, std::nullopt, y, std::nullopt, HeadMove::Left, state("pc:" + y));
        }
        edge(pull_b, std::nullopt, std::string("_"), std::nullopt, HeadMove::Left, state("pc:_"));
        for (const auto& y : content_syms) {
            const int copy = state("pc:" + y);
            for (const auto& z : content_syms) {
                edge(copy, std::nullopt, z, y, HeadMove::Right, pull_a);
            }
        }
        const int blank_copy = state("pc:_");
        for (const auto& z : content_syms) {
            edge(blank_copy, std::nullopt, z, std::string("_"), HeadMove::Stay, ready);
        }
    }

    // The update program for one generator token: rewind, walk to the
    // token's zone, then grow or shrink its unary block.
    void add_token_program(const std::string& token, int zone, bool increment) {
        const int ready = state("ready");
        const int rewind = state("rw:" + token);
        edge(ready, token, std::nullopt, std::nullopt, HeadMove::Stay, rewind);

        const int first_sep = state("sep:" + token + ":1");
        add_rewind(rewind, first_sep);
        for (int j = 1; j < zone; ++j) {
            const int sep = state("sep:" + token + ":" + std::to_string(j));
            const int sign = state("sk+:" + token + ":" + std::to_string(j));
            const int ones = state("sk1:" + token + ":" + std::to_string(j));
            const int next = state("sep:" + token + ":" + std::to_string(j + 1));
            edge(sep, std::nullopt, std::string("#"), std::nullopt, HeadMove::Right, sign);
            for (const auto& s : {"0", "+", "-"}) {
                edge(sign, std::nullopt, std::string(s), std::nullopt, HeadMove::Right, ones);
            }
            edge(ones, std::nullopt, std::string("1"), std::nullopt, HeadMove::Right, ones);
            edge(ones, std::nullopt, std::string("#"), std::nullopt, HeadMove::Stay, next);
        }
        const int zone_sep = state("sep:" + token + ":" + std::to_string(zone));
        const int sign = state("sign:" + token);
        edge(zone_sep, std::nullopt, std::string("#"), std::nullopt, HeadMove::Right, sign);

        const std::string grow = increment ? "+" : "-";
        const std::string shrink = increment ? "-" : "+";
        const int ins = state("ins");
        // Empty or same-sign counter: stamp the sign and insert a mark.
        edge(sign, std::nullopt, std::string("0"), grow, HeadMove::Right, ins);
        edge(sign, std::nullopt, grow, std::nullopt, HeadMove::Right, ins);
        // Opposite sign: remove one mark, zeroing the sign cell when the
        // block had exactly one.
        const int peek1 = state("p1:" + token);
        const int peek2 = state("p2:" + token);
        const int lone1 = state("q1:" + token);
        const int lone2 = state("q2:" + token);
        const int pull = state("pl:A");
        edge(sign, std::nullopt, shrink, std::nullopt, HeadMove::Right, peek1);
        edge(peek1, std::nullopt, std::string("1"), std::nullopt, HeadMove::Right, peek2);
        edge(peek2, std::nullopt, std::string("1"), std::nullopt, HeadMove::Left, pull);
        edge(peek2, std::nullopt, std::string("#"), std::nullopt, HeadMove::Left, lone1);
        edge(peek2, std::nullopt, std::string("_"), std::nullopt, HeadMove::Left, lone1);
        edge(lone1, std::nullopt, std::string("1"), std::nullopt, HeadMove::Left, lone2);
        edge(lone2, std::nullopt, shrink, std::string("0"), HeadMove::Right, pull);
    }

    // Writes the zone skeleton #0#0...#0 on the blank tape.
    void add_init_program() {
        int cur = state("boot");
        for (int j = 0; j < k; ++j) {
            const int after_sep = state("init" + std::to_string(2 * j + 1));
            edge(cur, std::nullopt, std::string("_"), std::string("#"), HeadMove::Right, after_sep);
            const int after_sign =
                j + 1 == k ? state("ready") : state("init" + std::to_string(2 * j + 2));
            edge(after_sep, std::nullopt, std::string("_"), std::string("0"), HeadMove::Right,
                 after_sign);
            cur = after_sign;
        }
    }

    // The zero check: every zone must read sign 0 and nothing after the
    // last zone; reachable from ready by a silent guess that the input
    // has ended.
    void add_check_program() {
        const int ready = state("ready");
        const int rewind = state("chk");
        edge(ready, std::nullopt, std::nullopt, std::nullopt, HeadMove::Stay, rewind);
        const int first = state("csep:1");
        add_rewind(rewind, first);
        for (int j = 1; j <= k; ++j) {
            const int sep = state("csep:" + std::to_string(j));
            const int sign = state("csign:" + std::to_string(j));
            const int next = j == k ? state("cend") : state("csep:" + std::to_string(j + 1));
            edge(sep, std::nullopt, std::string("#"), std::nullopt, HeadMove::Right, sign);
            edge(sign, std::nullopt, std::string("0"), std::nullopt, HeadMove::Right, next);
        }
        edge(state("cend"), std::nullopt, std::string("_"), std::nullopt, HeadMove::Stay,
             state("acc"));
    }
};

}  // namespace

WordProblemMachine wp_machine_zn(int k) {
    if (k < 1) throw Error("wp_machine_zn: rank must be at least 1");
    WordProblemMachine wp;
    wp.group = GroupSpec::free_abelian(k);
    wp.certificate = MachineClass::Lba;

    ZnBuilder b(k);
    b.state("boot");  // start state first
    b.state("ready");
    b.add_init_program();
    b.add_insert_program();
    b.add_pull_program();
    for (const auto& g : wp.group.generators) {
        const int zone = [&] {
            for (int i = 0; i < k; ++i) {
                if (wp.group.generators[static_cast<std::size_t>(2 * i)].symbol.name ==
                    g.symbol.name)
                    return i + 1;
            }
            throw Error("wp_machine_zn: generator not found");
        }();
        b.add_token_program(g.symbol.token(), zone, g.symbol.exponent > 0);
    }
    b.add_check_program();

    b.m.start = b.m.state_index("boot");
    b.m.accepts = {b.state("acc")};
    b.m.input_alphabet = wp.group.generator_tokens();
    wp.machine = std::move(b.m);

    auto diags = validate_machine(wp.machine);
    if (!diags.empty())
        throw Error("wp_machine_zn: built an invalid machine\n" + format_diagnostics(diags));
    return wp;
}

bool product_preserves_determinism(const GAutomaton& p, const WordProblemMachine& n) {
    return is_deterministic(n.machine) && gautomaton_is_deterministic(p) &&
           gautomaton_has_unique_weights(p);
}

}  // namespace gat
