// ga -- build, run, compile and compare group-labeled automata.

#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gat/document.hpp"
#include "gat/fixtures.hpp"
#include "gat/harness.hpp"
#include "gat/transfer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitFailure = 2;      // validation, comparison or document errors
constexpr int kExitExhausted = 3;    // budget / resource limits hit

struct BudgetFlags {
    std::int64_t norm = -1;
    std::int64_t eps = -1;
    std::int64_t configs = -1;

    gat::SearchBudget budget() const {
        gat::SearchBudget b;
        if (norm >= 0) b.norm_cap = gat::Integer(norm);
        if (eps >= 0) b.eps_cap = static_cast<std::uint64_t>(eps);
        if (configs > 0) b.max_configurations = static_cast<std::uint64_t>(configs);
        return b;
    }
    gat::MachineRunLimits limits() const {
        gat::MachineRunLimits l;
        if (configs > 0) l.max_visited = static_cast<std::uint64_t>(configs);
        return l;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
    cmd->add_option("--budget-norm", flags.norm, "norm cap for the bounded search");
    cmd->add_option("--budget-eps", flags.eps, "epsilon-moves cap per input position");
    cmd->add_option("--budget-configs", flags.configs,
                    "max configurations (also the lba visited-set cap)");
}

void emit(const gat::Document& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << gat::document_to_string(doc);
    } else {
        gat::save_document(out_path, doc);
    }
}

std::unique_ptr<gat::Acceptor> make_acceptor(const gat::Document& doc, const BudgetFlags& flags,
                                             gat::LbaSpaceAudit* audit = nullptr) {
    if (const auto* spec = std::get_if<gat::GroupSpec>(&doc.payload)) {
        return std::make_unique<gat::GroupOracleAcceptor>(*spec);
    }
    if (const auto* aut = std::get_if<gat::GAutomaton>(&doc.payload)) {
        return std::make_unique<gat::GAutomatonAcceptor>(*aut, flags.budget());
    }
    if (const auto* mdoc = std::get_if<gat::MachineDocument>(&doc.payload)) {
        return std::make_unique<gat::MachineAcceptor>(mdoc->machine, flags.limits(), audit);
    }
    throw gat::Error("fixture documents cannot be compared directly");
}

int do_validate(const std::string& path) {
    gat::Document doc = gat::load_document(path);
    std::vector<gat::Diagnostic> diags;
    bool bounded_only = false;
    if (const auto* spec = std::get_if<gat::GroupSpec>(&doc.payload)) {
        diags = gat::validate_group(*spec);
    } else if (const auto* aut = std::get_if<gat::GAutomaton>(&doc.payload)) {
        auto validation = gat::validate_gautomaton(*aut);
        diags = validation.diagnostics;
        bounded_only = validation.weighted_eps_cycle;
    } else if (const auto* mdoc = std::get_if<gat::MachineDocument>(&doc.payload)) {
        diags = gat::validate_machine(mdoc->machine);
    } else {
        const auto& fixture = std::get<gat::Fixture>(doc.payload);
        if (fixture.gautomaton) diags = gat::validate_gautomaton(*fixture.gautomaton).diagnostics;
        if (fixture.machine) {
            auto mdiags = gat::validate_machine(*fixture.machine);
            diags.insert(diags.end(), mdiags.begin(), mdiags.end());
        }
    }
    if (!diags.empty()) {
        std::cout << gat::format_diagnostics(diags);
        std::cout << "invalid: " << diags.size() << " diagnostic(s)\n";
        return kExitFailure;
    }
    std::cout << "valid " << doc.kind() << " document\n";
    if (bounded_only)
        std::cout << "note: weighted epsilon cycle present; reject verdicts are "
                     "bounded-semantics only\n";
    return kExitOk;
}

int do_run(const std::string& path, const std::string& word_line, const BudgetFlags& flags,
           const std::string& report) {
    gat::Document doc = gat::load_document(path);
    const std::vector<std::string> word = gat::split_tokens(word_line);
    const bool json_out = report == "json";

    if (const auto* aut = std::get_if<gat::GAutomaton>(&doc.payload)) {
        gat::GAutomaton normalized = gat::is_normalized(*aut) ? *aut : gat::normalize(*aut);
        auto result = gat::g_membership(normalized, word, flags.budget());
        if (json_out) {
            nlohmann::json j;
            j["verdict"] = std::string(gat::g_verdict_name(result.verdict));
            j["configurations"] = result.configurations;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "verdict: " << gat::g_verdict_name(result.verdict) << "\n"
                      << "configurations: " << result.configurations << "\n";
        }
        switch (result.verdict) {
            case gat::GVerdict::Accept: return kExitOk;
            case gat::GVerdict::RejectWithinBudget: return kExitReject;
            case gat::GVerdict::BudgetExhausted: return kExitExhausted;
        }
    }
    if (const auto* mdoc = std::get_if<gat::MachineDocument>(&doc.payload)) {
        auto result = gat::machine_accepts(mdoc->machine, word, flags.limits());
        if (json_out) {
            nlohmann::json j;
            j["verdict"] = std::string(gat::run_verdict_name(result.verdict));
            j["configurations"] = result.configurations;
            if (mdoc->machine.cls == gat::MachineClass::Lba) j["max_cells"] = result.max_cells;
            if (mdoc->machine.cls == gat::MachineClass::Pda) j["max_stack"] = result.max_stack;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "verdict: " << gat::run_verdict_name(result.verdict) << "\n"
                      << "configurations: " << result.configurations << "\n";
            if (mdoc->machine.cls == gat::MachineClass::Lba)
                std::cout << "max cells: " << result.max_cells << "\n";
            if (mdoc->machine.cls == gat::MachineClass::Pda)
                std::cout << "max stack: " << result.max_stack << "\n";
        }
        switch (result.verdict) {
            case gat::RunVerdict::Accept: return kExitOk;
            case gat::RunVerdict::Reject: return kExitReject;
            case gat::RunVerdict::ResourceExceeded: return kExitExhausted;
        }
    }
    throw gat::Error(path + ": run needs a gautomaton or machine document");
}

gat::GroupSpec parse_group_arg(const std::string& arg) {
    const auto colon = arg.find(':');
    if (colon == std::string::npos)
        throw gat::Error("--group must be finite:<file>, zn:<k> or free:<k>");
    const std::string head = arg.substr(0, colon);
    const std::string tail = arg.substr(colon + 1);
    if (head == "finite") {
        gat::Document doc = gat::load_document(tail);
        const auto* spec = std::get_if<gat::GroupSpec>(&doc.payload);
        if (spec == nullptr) throw gat::Error(tail + ": not a group document");
        return *spec;
    }
    const int k = std::stoi(tail);
    if (head == "zn") return gat::GroupSpec::free_abelian(k);
    if (head == "free") return gat::GroupSpec::free_group(k);
    throw gat::Error("--group must be finite:<file>, zn:<k> or free:<k>");
}

int do_wp(const std::string& group_arg, const std::string& cls, const std::string& out_path) {
    const gat::GroupSpec spec = parse_group_arg(group_arg);
    if (cls.empty()) {
        emit({gat::wp_automaton(spec)}, out_path);
        return kExitOk;
    }
    std::string effective = cls;
    if (cls == "auto") {
        switch (spec.family) {
            case gat::GroupFamily::Finite: effective = "fsa"; break;
            case gat::GroupFamily::FreeAbelian: effective = "lba"; break;
            case gat::GroupFamily::Free: effective = "pda"; break;
        }
    }
    gat::WordProblemMachine wp;
    if (effective == "fsa") {
        wp = gat::wp_machine_finite(spec);
    } else if (effective == "pda") {
        wp = gat::wp_machine_free(spec);
    } else if (effective == "lba") {
        if (spec.family != gat::GroupFamily::FreeAbelian)
            throw gat::Error("lba word-problem machines are built for zn groups only");
        wp = gat::wp_machine_zn(spec.rank);
    } else {
        throw gat::Error("--class must be auto, fsa, pda or lba");
    }
    emit({gat::to_document(wp)}, out_path);
    return kExitOk;
}

int do_product(const std::string& p_path, const std::string& n_path, const std::string& out_path) {
    gat::Document p_doc = gat::load_document(p_path);
    const auto* aut = std::get_if<gat::GAutomaton>(&p_doc.payload);
    if (aut == nullptr) throw gat::Error(p_path + ": product needs a gautomaton document");
    gat::Document n_doc = gat::load_document(n_path);
    const auto* mdoc = std::get_if<gat::MachineDocument>(&n_doc.payload);
    if (mdoc == nullptr) throw gat::Error(n_path + ": product needs a machine document");
    gat::WordProblemMachine wp = gat::wp_from_document(*mdoc);

    gat::GAutomaton normalized = gat::is_normalized(*aut) ? *aut : gat::normalize(*aut);
    gat::ProductMachine pm = gat::product(normalized, wp);
    emit({gat::to_document(pm)}, out_path);
    return kExitOk;
}

int report_exit(const gat::ComparisonReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << gat::report_to_json(report);
    } else {
        std::cout << gat::report_to_text(report);
    }
    if (!report.disagreements.empty()) return kExitFailure;
    if (!report.budget_exhausted.empty()) return kExitExhausted;
    return kExitOk;
}

int do_compare(const std::string& left_path, const std::string& right_path, int max_len,
               const BudgetFlags& flags, const std::string& format, unsigned jobs) {
    gat::Document left_doc = gat::load_document(left_path);
    gat::Document right_doc = gat::load_document(right_path);
    auto left = make_acceptor(left_doc, flags);
    auto right = make_acceptor(right_doc, flags);
    return report_exit(gat::compare_languages(*left, *right, max_len, jobs), format);
}

int do_enumerate(const std::string& path, const std::string& alphabet_line, int max_len) {
    std::vector<std::string> alphabet;
    if (!alphabet_line.empty()) {
        alphabet = gat::split_tokens(alphabet_line);
    } else if (!path.empty()) {
        gat::Document doc = gat::load_document(path);
        if (const auto* spec = std::get_if<gat::GroupSpec>(&doc.payload)) {
            alphabet = spec->generator_tokens();
        } else if (const auto* aut = std::get_if<gat::GAutomaton>(&doc.payload)) {
            alphabet = aut->alphabet;
        } else if (const auto* mdoc = std::get_if<gat::MachineDocument>(&doc.payload)) {
            alphabet = mdoc->machine.input_alphabet;
        } else {
            throw gat::Error(path + ": cannot take an alphabet from a fixture document");
        }
    } else {
        throw gat::Error("enumerate needs a document or --alphabet");
    }
    std::sort(alphabet.begin(), alphabet.end());
    for (const auto& word : gat::enumerate_words(alphabet, max_len)) {
        std::cout << gat::join_tokens(word) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-labeled automata toolkit"};
    app.require_subcommand(1);

    std::string path, word_line, out_path, group_arg, cls, left_path, right_path, alphabet_line;
    std::string report = "text";
    int max_len = 0;
    unsigned jobs = 0;
    BudgetFlags flags;

    auto* validate = app.add_subcommand("validate", "check a document's structural invariants");
    validate->add_option("file", path)->required();

    auto* run = app.add_subcommand("run", "decide one word");
    run->add_option("file", path)->required();
    run->add_option("--word", word_line, "space-separated input tokens")->required();
    run->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
    add_budget_flags(run, flags);

    auto* wp = app.add_subcommand("wp",
                                  "emit the one-state word-problem automaton, or with --class a "
                                  "word-problem machine");
    wp->add_option("--group", group_arg, "finite:<file>, zn:<k> or free:<k>")->required();
    wp->add_option("--class", cls, "auto, fsa, pda or lba");
    wp->add_option("-o,--output", out_path);

    auto* product = app.add_subcommand("product", "compile a G-automaton against a word-problem "
                                                  "machine");
    product->add_option("gautomaton", left_path)->required();
    product->add_option("machine", right_path)->required();
    product->add_option("-o,--output", out_path);

    auto* compare = app.add_subcommand("compare", "exhaustive language comparison");
    compare->add_option("left", left_path)->required();
    compare->add_option("right", right_path)->required();
    compare->add_option("--max-len", max_len)->required();
    compare->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
    compare->add_option("--jobs", jobs);
    add_budget_flags(compare, flags);

    auto* enumerate = app.add_subcommand("enumerate", "list words in length-then-lex order");
    enumerate->add_option("file", path);
    enumerate->add_option("--alphabet", alphabet_line, "space-separated tokens");
    enumerate->add_option("--max-len", max_len)->required();

    auto* conjecture = app.add_subcommand("conjecture", "check the explorer language identity");
    conjecture->add_option("--max-len", max_len)->required();
    conjecture->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
    conjecture->add_option("--jobs", jobs);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return do_validate(path);
        if (run->parsed()) return do_run(path, word_line, flags, report);
        if (wp->parsed()) return do_wp(group_arg, cls, out_path);
        if (product->parsed()) return do_product(left_path, right_path, out_path);
        if (compare->parsed()) return do_compare(left_path, right_path, max_len, flags, report,
                                                 jobs);
        if (enumerate->parsed()) return do_enumerate(path, alphabet_line, max_len);
        if (conjecture->parsed()) return report_exit(gat::conjecture_check(max_len, jobs), report);
    } catch (const gat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
