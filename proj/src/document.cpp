#include "gat/document.hpp"

#include <fstream>
#include <sstream>

namespace gat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& ctx, const std::string& message) {
    throw Error(ctx + ": " + message);
}

const json& require(const json& j, const char* key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) fail(ctx, std::string("missing field '") + key + "'");
    return *it;
}

std::string require_string(const json& j, const char* key, const std::string& ctx) {
    const json& v = require(j, key, ctx);
    if (!v.is_string()) fail(ctx, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

int require_int(const json& j, const char* key, const std::string& ctx) {
    const json& v = require(j, key, ctx);
    if (!v.is_number_integer()) fail(ctx, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<std::string> string_list(const json& j, const char* key, const std::string& ctx) {
    const json& v = require(j, key, ctx);
    if (!v.is_array()) fail(ctx, std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& item : v) {
        if (!item.is_string()) fail(ctx, std::string("field '") + key + "' must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

json integer_to_json(const Integer& value) {
    static const Integer min64 = std::numeric_limits<std::int64_t>::min();
    static const Integer max64 = std::numeric_limits<std::int64_t>::max();
    if (value >= min64 && value <= max64) return static_cast<std::int64_t>(value);
    return value.str();
}

Integer integer_from_json(const json& j, const std::string& ctx) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            fail(ctx, "not a valid integer literal");
        }
    }
    fail(ctx, "expected an integer or a decimal string");
}

json element_to_json(const GroupSpec& spec, const GroupElement& e) {
    switch (spec.family) {
        case GroupFamily::Finite: return e.finite_index;
        case GroupFamily::FreeAbelian: {
            json arr = json::array();
            for (const auto& c : e.coords) arr.push_back(integer_to_json(c));
            return arr;
        }
        case GroupFamily::Free: {
            json arr = json::array();
            for (int letter : e.word) arr.push_back(letter);
            return arr;
        }
    }
    throw Error("element_to_json: unknown family");
}

GroupElement element_from_json(const GroupSpec& spec, const json& j, const std::string& ctx) {
    switch (spec.family) {
        case GroupFamily::Finite:
            if (!j.is_number_integer()) fail(ctx, "finite element must be an index");
            return GroupElement::finite(j.get<int>());
        case GroupFamily::FreeAbelian: {
            if (!j.is_array()) fail(ctx, "free-abelian element must be a vector");
            std::vector<Integer> coords;
            for (const auto& item : j) coords.push_back(integer_from_json(item, ctx));
            return GroupElement::vector(std::move(coords));
        }
        case GroupFamily::Free: {
            if (!j.is_array()) fail(ctx, "free element must be a letter array");
            std::vector<int> word;
            for (const auto& item : j) {
                if (!item.is_number_integer()) fail(ctx, "free letters must be signed indices");
                word.push_back(item.get<int>());
            }
            return GroupElement::free_word(std::move(word));
        }
    }
    fail(ctx, "unknown group family");
}

int state_index_or_fail(const std::vector<std::string>& states, const std::string& name,
                        const std::string& ctx) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] == name) return static_cast<int>(i);
    }
    fail(ctx, "unknown state '" + name + "'");
}

json instruction_to_json(const Instruction& instr) {
    json j;
    if (std::holds_alternative<NoOp>(instr)) {
        j["op"] = "noop";
    } else if (const auto* p = std::get_if<PdaInstr>(&instr)) {
        j["guard"] = p->guard ? json(*p->guard) : json(nullptr);
        switch (p->op) {
            case StackOp::Push:
                j["op"] = "push";
                j["symbol"] = p->symbol;
                break;
            case StackOp::Pop: j["op"] = "pop"; break;
            case StackOp::Stay: j["op"] = "stay"; break;
        }
    } else if (const auto* l = std::get_if<LbaInstr>(&instr)) {
        j["guard"] = l->guard ? json(*l->guard) : json(nullptr);
        j["write"] = l->write ? json(*l->write) : json(nullptr);
        j["move"] = l->move == HeadMove::Left ? "L" : l->move == HeadMove::Right ? "R" : "S";
    }
    return j;
}

Instruction instruction_from_json(MachineClass cls, const json& j, const std::string& ctx) {
    const auto optional_string = [&](const char* key) -> std::optional<std::string> {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) return std::nullopt;
        if (!it->is_string()) fail(ctx, std::string("field '") + key + "' must be a string or null");
        return it->get<std::string>();
    };
    switch (cls) {
        case MachineClass::Fsa: return NoOp{};
        case MachineClass::Pda: {
            PdaInstr instr;
            instr.guard = optional_string("guard");
            const std::string op = require_string(j, "op", ctx);
            if (op == "push") {
                instr.op = StackOp::Push;
                instr.symbol = require_string(j, "symbol", ctx);
            } else if (op == "pop") {
                instr.op = StackOp::Pop;
            } else if (op == "stay") {
                instr.op = StackOp::Stay;
            } else {
                fail(ctx, "unknown pda op '" + op + "'");
            }
            return instr;
        }
        case MachineClass::Lba: {
            LbaInstr instr;
            instr.guard = optional_string("guard");
            instr.write = optional_string("write");
            const std::string move = require_string(j, "move", ctx);
            if (move == "L") {
                instr.move = HeadMove::Left;
            } else if (move == "R") {
                instr.move = HeadMove::Right;
            } else if (move == "S") {
                instr.move = HeadMove::Stay;
            } else {
                fail(ctx, "unknown move '" + move + "'");
            }
            return instr;
        }
        default:
            // Reserved classes parse edges with the neutral representation.
            return NoOp{};
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// group

nlohmann::json group_to_json(const GroupSpec& spec) {
    json j;
    j["kind"] = "group";
    j["family"] = std::string(family_name(spec.family));
    if (spec.family == GroupFamily::Finite) {
        j["order"] = spec.order;
        j["cayley"] = spec.cayley;
    } else {
        j["rank"] = spec.rank;
    }
    json gens = json::array();
    for (const auto& g : spec.generators) {
        gens.push_back({{"name", g.symbol.name},
                        {"exponent", g.symbol.exponent},
                        {"image", element_to_json(spec, g.image)}});
    }
    j["generators"] = std::move(gens);
    return j;
}

GroupSpec group_from_json(const nlohmann::json& j, const std::string& ctx) {
    GroupSpec spec;
    const std::string family = require_string(j, "family", ctx);
    if (family == "finite") {
        spec.family = GroupFamily::Finite;
        spec.order = require_int(j, "order", ctx);
        const json& table = require(j, "cayley", ctx);
        if (!table.is_array()) fail(ctx, "cayley must be an array of rows");
        for (const auto& row : table) {
            if (!row.is_array()) fail(ctx, "cayley rows must be arrays");
            std::vector<int> r;
            for (const auto& cell : row) {
                if (!cell.is_number_integer()) fail(ctx, "cayley entries must be integers");
                r.push_back(cell.get<int>());
            }
            spec.cayley.push_back(std::move(r));
        }
    } else if (family == "free-abelian") {
        spec.family = GroupFamily::FreeAbelian;
        spec.rank = require_int(j, "rank", ctx);
    } else if (family == "free") {
        spec.family = GroupFamily::Free;
        spec.rank = require_int(j, "rank", ctx);
    } else {
        fail(ctx, "unknown family '" + family + "'");
    }
    const json& gens = require(j, "generators", ctx);
    if (!gens.is_array()) fail(ctx, "generators must be an array");
    for (const auto& g : gens) {
        Generator gen;
        gen.symbol.name = require_string(g, "name", ctx + ".generators");
        gen.symbol.exponent = require_int(g, "exponent", ctx + ".generators");
        gen.image = element_from_json(spec, require(g, "image", ctx + ".generators"),
                                      ctx + ".generators." + gen.symbol.name);
        spec.generators.push_back(std::move(gen));
    }
    return spec;
}

// ---------------------------------------------------------------------------
// gautomaton

nlohmann::json gautomaton_to_json(const GAutomaton& a) {
    json j;
    j["kind"] = "gautomaton";
    j["group"] = group_to_json(a.group);
    j["group"].erase("kind");
    j["alphabet"] = a.alphabet;
    j["states"] = a.states;
    j["start"] = a.states.at(static_cast<std::size_t>(a.start));
    json accepts = json::array();
    for (int acc : a.accepts) accepts.push_back(a.states.at(static_cast<std::size_t>(acc)));
    j["accepts"] = std::move(accepts);
    json edges = json::array();
    for (const auto& e : a.edges) {
        edges.push_back({{"from", a.states.at(static_cast<std::size_t>(e.src))},
                         {"letter", e.letter ? json(*e.letter) : json(nullptr)},
                         {"weight", element_to_json(a.group, e.weight)},
                         {"to", a.states.at(static_cast<std::size_t>(e.dst))}});
    }
    j["edges"] = std::move(edges);
    return j;
}

GAutomaton gautomaton_from_json(const nlohmann::json& j, const std::string& ctx,
                                const std::filesystem::path& base_dir) {
    GAutomaton a;
    const json& group = require(j, "group", ctx);
    if (group.is_string()) {
        const auto path = base_dir / group.get<std::string>();
        Document doc = load_document(path);
        const auto* spec = std::get_if<GroupSpec>(&doc.payload);
        if (spec == nullptr) fail(ctx, "group reference '" + path.string() + "' is not a group");
        a.group = *spec;
    } else {
        a.group = group_from_json(group, ctx + ".group");
    }
    a.alphabet = string_list(j, "alphabet", ctx);
    a.states = string_list(j, "states", ctx);
    a.start = state_index_or_fail(a.states, require_string(j, "start", ctx), ctx + ".start");
    for (const auto& name : string_list(j, "accepts", ctx)) {
        a.accepts.push_back(state_index_or_fail(a.states, name, ctx + ".accepts"));
    }
    const json& edges = require(j, "edges", ctx);
    if (!edges.is_array()) fail(ctx, "edges must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string ectx = ctx + ".edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        GEdge edge;
        edge.src = state_index_or_fail(a.states, require_string(e, "from", ectx), ectx);
        edge.dst = state_index_or_fail(a.states, require_string(e, "to", ectx), ectx);
        const json& letter = require(e, "letter", ectx);
        if (!letter.is_null()) {
            if (!letter.is_string()) fail(ectx, "letter must be a string or null");
            edge.letter = letter.get<std::string>();
        }
        edge.weight = element_from_json(a.group, require(e, "weight", ectx), ectx + ".weight");
        a.edges.push_back(std::move(edge));
    }
    return a;
}

// ---------------------------------------------------------------------------
// machine

nlohmann::json machine_doc_to_json(const MachineDocument& doc) {
    const Machine& m = doc.machine;
    json j;
    j["kind"] = "machine";
    j["class"] = std::string(machine_class_name(m.cls));
    j["input_alphabet"] = m.input_alphabet;
    j["tape_alphabet"] = m.tape_alphabet;
    j["states"] = m.states;
    j["start"] = m.states.at(static_cast<std::size_t>(m.start));
    json accepts = json::array();
    for (int acc : m.accepts) accepts.push_back(m.states.at(static_cast<std::size_t>(acc)));
    j["accepts"] = std::move(accepts);
    if (m.cls == MachineClass::Pda) j["bottom_marker"] = m.bottom_marker;
    if (m.cls == MachineClass::Lba) {
        j["left_marker"] = m.left_marker;
        j["right_marker"] = m.right_marker;
        j["blank"] = m.blank;
        j["space_multiplier"] = {{"num", m.space_multiplier.num}, {"den", m.space_multiplier.den}};
    }
    json edges = json::array();
    for (const auto& e : m.edges) {
        edges.push_back({{"from", m.states.at(static_cast<std::size_t>(e.src))},
                         {"input", e.input ? json(*e.input) : json(nullptr)},
                         {"instr", instruction_to_json(e.instr)},
                         {"to", m.states.at(static_cast<std::size_t>(e.dst))}});
    }
    j["edges"] = std::move(edges);
    if (doc.wp_group) {
        json wp;
        wp["group"] = group_to_json(*doc.wp_group);
        wp["group"].erase("kind");
        wp["certificate"] = std::string(machine_class_name(
            doc.wp_certificate.value_or(m.cls)));
        j["word_problem"] = std::move(wp);
    }
    if (doc.provenance) {
        json prov;
        prov["states"] = json::array();
        for (const auto& [p, q] : doc.provenance->state_factors) {
            prov["states"].push_back({p, q});
        }
        prov["edges"] = json::array();
        for (const auto& origin : doc.provenance->edge_origins) {
            prov["edges"].push_back(
                {{"p_edge", origin.p_edge}, {"n_edge", origin.n_edge}, {"rule", origin.rule}});
        }
        j["provenance"] = std::move(prov);
    }
    return j;
}

MachineDocument machine_doc_from_json(const nlohmann::json& j, const std::string& ctx) {
    MachineDocument doc;
    Machine& m = doc.machine;
    const std::string cls = require_string(j, "class", ctx);
    auto parsed = parse_machine_class(cls);
    if (!parsed) fail(ctx, "unknown machine class '" + cls + "'");
    m.cls = *parsed;
    m.input_alphabet = string_list(j, "input_alphabet", ctx);
    m.tape_alphabet = string_list(j, "tape_alphabet", ctx);
    m.states = string_list(j, "states", ctx);
    m.start = state_index_or_fail(m.states, require_string(j, "start", ctx), ctx + ".start");
    for (const auto& name : string_list(j, "accepts", ctx)) {
        m.accepts.push_back(state_index_or_fail(m.states, name, ctx + ".accepts"));
    }
    if (m.cls == MachineClass::Pda) m.bottom_marker = require_string(j, "bottom_marker", ctx);
    if (m.cls == MachineClass::Lba) {
        m.left_marker = require_string(j, "left_marker", ctx);
        m.right_marker = require_string(j, "right_marker", ctx);
        m.blank = require_string(j, "blank", ctx);
        const json& mult = require(j, "space_multiplier", ctx);
        m.space_multiplier.num = require_int(mult, "num", ctx + ".space_multiplier");
        m.space_multiplier.den = require_int(mult, "den", ctx + ".space_multiplier");
    }
    const json& edges = require(j, "edges", ctx);
    if (!edges.is_array()) fail(ctx, "edges must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string ectx = ctx + ".edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        MachineEdge edge;
        edge.src = state_index_or_fail(m.states, require_string(e, "from", ectx), ectx);
        edge.dst = state_index_or_fail(m.states, require_string(e, "to", ectx), ectx);
        const json& input = require(e, "input", ectx);
        if (!input.is_null()) {
            if (!input.is_string()) fail(ectx, "input must be a string or null");
            edge.input = input.get<std::string>();
        }
        edge.instr = instruction_from_json(m.cls, require(e, "instr", ectx), ectx + ".instr");
        m.edges.push_back(std::move(edge));
    }
    if (auto it = j.find("word_problem"); it != j.end()) {
        doc.wp_group = group_from_json(require(*it, "group", ctx + ".word_problem"),
                                       ctx + ".word_problem.group");
        const std::string cert = require_string(*it, "certificate", ctx + ".word_problem");
        auto parsed_cert = parse_machine_class(cert);
        if (!parsed_cert) fail(ctx, "unknown certificate class '" + cert + "'");
        doc.wp_certificate = *parsed_cert;
    }
    if (auto it = j.find("provenance"); it != j.end()) {
        ProductProvenance prov;
        const json& states = require(*it, "states", ctx + ".provenance");
        for (const auto& pair : states) {
            if (!pair.is_array() || pair.size() != 2) fail(ctx, "provenance states must be pairs");
            prov.state_factors.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
        }
        const json& pedges = require(*it, "edges", ctx + ".provenance");
        for (const auto& e : pedges) {
            prov.edge_origins.push_back({require_int(e, "p_edge", ctx + ".provenance"),
                                         require_int(e, "n_edge", ctx + ".provenance"),
                                         require_string(e, "rule", ctx + ".provenance")});
        }
        doc.provenance = std::move(prov);
    }
    return doc;
}

MachineDocument to_document(const WordProblemMachine& wp) {
    MachineDocument doc;
    doc.machine = wp.machine;
    doc.wp_group = wp.group;
    doc.wp_certificate = wp.certificate;
    return doc;
}

MachineDocument to_document(const ProductMachine& pm) {
    MachineDocument doc;
    doc.machine = pm.machine;
    doc.provenance = pm.provenance;
    return doc;
}

WordProblemMachine wp_from_document(const MachineDocument& doc) {
    if (!doc.wp_group)
        throw Error("machine document has no word_problem section");
    WordProblemMachine wp;
    wp.machine = doc.machine;
    wp.group = *doc.wp_group;
    wp.certificate = doc.wp_certificate.value_or(doc.machine.cls);
    return wp;
}

// ---------------------------------------------------------------------------
// fixture

nlohmann::json fixture_to_json(const Fixture& fixture) {
    json j;
    j["kind"] = "fixture";
    j["name"] = fixture.name;
    j["notes"] = fixture.notes;
    if (fixture.gautomaton) {
        j["gautomaton"] = gautomaton_to_json(*fixture.gautomaton);
        j["gautomaton"].erase("kind");
    }
    if (fixture.machine) {
        j["machine"] = machine_doc_to_json({*fixture.machine, std::nullopt, std::nullopt,
                                            std::nullopt});
        j["machine"].erase("kind");
    }
    json slices = json::array();
    for (const auto& slice : fixture.slices) {
        slices.push_back({{"max_length", slice.max_length},
                          {"words", slice.words},
                          {"oracle", slice.oracle}});
    }
    j["slices"] = std::move(slices);
    return j;
}

Fixture fixture_from_json(const nlohmann::json& j, const std::string& ctx,
                          const std::filesystem::path& base_dir) {
    Fixture fixture;
    fixture.name = require_string(j, "name", ctx);
    fixture.notes = require_string(j, "notes", ctx);
    if (auto it = j.find("gautomaton"); it != j.end()) {
        fixture.gautomaton = gautomaton_from_json(*it, ctx + ".gautomaton", base_dir);
    }
    if (auto it = j.find("machine"); it != j.end()) {
        fixture.machine = machine_doc_from_json(*it, ctx + ".machine").machine;
    }
    const json& slices = require(j, "slices", ctx);
    for (const auto& s : slices) {
        LanguageSlice slice;
        slice.max_length = require_int(s, "max_length", ctx + ".slices");
        slice.words = string_list(s, "words", ctx + ".slices");
        slice.oracle = require_string(s, "oracle", ctx + ".slices");
        fixture.slices.push_back(std::move(slice));
    }
    return fixture;
}

// ---------------------------------------------------------------------------
// dispatch

std::string Document::kind() const {
    if (std::holds_alternative<GroupSpec>(payload)) return "group";
    if (std::holds_alternative<GAutomaton>(payload)) return "gautomaton";
    if (std::holds_alternative<MachineDocument>(payload)) return "machine";
    return "fixture";
}

nlohmann::json document_to_json(const Document& doc) {
    if (const auto* g = std::get_if<GroupSpec>(&doc.payload)) return group_to_json(*g);
    if (const auto* a = std::get_if<GAutomaton>(&doc.payload)) return gautomaton_to_json(*a);
    if (const auto* m = std::get_if<MachineDocument>(&doc.payload)) return machine_doc_to_json(*m);
    return fixture_to_json(std::get<Fixture>(doc.payload));
}

Document document_from_string(const std::string& text, const std::string& name,
                              const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(name + ": " + e.what());
    }
    if (!j.is_object()) throw Error(name + ": document must be a JSON object");
    const std::string kind = require_string(j, "kind", name);
    if (kind == "group") return {group_from_json(j, name)};
    if (kind == "gautomaton") return {gautomaton_from_json(j, name, base_dir)};
    if (kind == "machine") return {machine_doc_from_json(j, name)};
    if (kind == "fixture") return {fixture_from_json(j, name, base_dir)};
    throw Error(name + ": unknown document kind '" + kind + "'");
}

std::string document_to_string(const Document& doc) { return document_to_json(doc).dump(2) + "\n"; }

Document load_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return document_from_string(buffer.str(), path.string(), path.parent_path());
}

void save_document(const std::filesystem::path& path, const Document& doc) {
    std::ofstream out(path);
    if (!out) throw Error(path.string() + ": cannot open file for writing");
    out << document_to_string(doc);
}

}  // namespace gat
