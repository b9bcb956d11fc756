#include "gat/harness.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "gat/transfer.hpp"

namespace gat {

std::uint64_t word_count(std::size_t size, int max_length) {
    std::uint64_t total = 0, layer = 1;
    for (int len = 0; len <= max_length; ++len) {
        total += layer;
        layer *= size;
    }
    return total;
}

WordEnumerator::WordEnumerator(std::size_t alphabet_size, int max_length)
    : size_(alphabet_size), max_length_(max_length) {
    if (size_ == 0) throw Error("enumerate_words: alphabet is empty");
    if (max_length_ < 0) done_ = true;
}

void WordEnumerator::seek(std::uint64_t rank) {
    std::uint64_t layer = 1;
    int len = 0;
    while (len <= max_length_ && rank >= layer) {
        rank -= layer;
        layer *= size_;
        ++len;
    }
    if (len > max_length_) {
        done_ = true;
        return;
    }
    done_ = false;
    current_.assign(static_cast<std::size_t>(len), 0);
    for (int i = len - 1; i >= 0; --i) {
        current_[static_cast<std::size_t>(i)] = static_cast<int>(rank % size_);
        rank /= size_;
    }
}

bool WordEnumerator::next(std::vector<int>& word) {
    if (done_) return false;
    word = current_;
    // Advance the odometer, rolling over into the next length.
    int i = static_cast<int>(current_.size()) - 1;
    while (i >= 0 && current_[static_cast<std::size_t>(i)] == static_cast<int>(size_) - 1) {
        current_[static_cast<std::size_t>(i)] = 0;
        --i;
    }
    if (i >= 0) {
        ++current_[static_cast<std::size_t>(i)];
    } else {
        if (static_cast<int>(current_.size()) == max_length_) {
            done_ = true;
        } else {
            current_.assign(current_.size() + 1, 0);
        }
    }
    return true;
}

std::vector<std::vector<std::string>> enumerate_words(const std::vector<std::string>& alphabet,
                                                      int max_length) {
    std::vector<std::vector<std::string>> out;
    WordEnumerator stream(alphabet.size(), max_length);
    std::vector<int> ids;
    while (stream.next(ids)) {
        std::vector<std::string> word;
        word.reserve(ids.size());
        for (int id : ids) word.push_back(alphabet[static_cast<std::size_t>(id)]);
        out.push_back(std::move(word));
    }
    return out;
}

// ---------------------------------------------------------------------------
// acceptors

GAutomatonAcceptor::GAutomatonAcceptor(GAutomaton automaton, SearchBudget budget)
    : runner_(is_normalized(automaton) ? std::move(automaton) : normalize(automaton),
              std::move(budget)) {}

const std::vector<std::string>& GAutomatonAcceptor::alphabet() const { return runner_.alphabet(); }

Outcome GAutomatonAcceptor::decide(std::span<const int> letters) const {
    switch (runner_.decide_ids(letters)) {
        case GVerdict::Accept: return Outcome::Accept;
        case GVerdict::RejectWithinBudget: return Outcome::Reject;
        case GVerdict::BudgetExhausted: return Outcome::Budget;
    }
    return Outcome::Reject;
}

MachineAcceptor::MachineAcceptor(Machine machine, MachineRunLimits limits, LbaSpaceAudit* audit)
    : machine_(std::move(machine)), audit_(audit) {
    sorted_alphabet_ = machine_.input_alphabet;
    std::sort(sorted_alphabet_.begin(), sorted_alphabet_.end());
    switch (machine_.cls) {
        case MachineClass::Fsa: fsa_ = std::make_unique<FsaRunner>(machine_); break;
        case MachineClass::Pda: pda_ = std::make_unique<PdaRunner>(machine_); break;
        case MachineClass::Lba: lba_ = std::make_unique<LbaRunner>(machine_, limits); break;
        default:
            throw Error("unimplemented machine class: " +
                        std::string(machine_class_name(machine_.cls)));
    }
}

const std::vector<std::string>& MachineAcceptor::alphabet() const { return sorted_alphabet_; }

Outcome MachineAcceptor::decide(std::span<const int> letters) const {
    std::vector<std::string> word;
    word.reserve(letters.size());
    for (int id : letters) word.push_back(sorted_alphabet_[static_cast<std::size_t>(id)]);
    RunResult run;
    if (fsa_) {
        run = fsa_->run(word);
    } else if (pda_) {
        run = pda_->run(word);
    } else {
        run = lba_->run(word);
        if (audit_ != nullptr) {
            audit_->runs.fetch_add(1, std::memory_order_relaxed);
            const auto bound = static_cast<std::uint64_t>(lba_->work_cells(word.size()));
            if (run.max_cells > bound) audit_->violations.fetch_add(1, std::memory_order_relaxed);
            std::uint64_t seen = audit_->max_cells.load(std::memory_order_relaxed);
            while (seen < run.max_cells &&
                   !audit_->max_cells.compare_exchange_weak(seen, run.max_cells,
                                                            std::memory_order_relaxed)) {
            }
        }
    }
    switch (run.verdict) {
        case RunVerdict::Accept: return Outcome::Accept;
        case RunVerdict::Reject: return Outcome::Reject;
        case RunVerdict::ResourceExceeded: return Outcome::Budget;
    }
    return Outcome::Reject;
}

GroupOracleAcceptor::GroupOracleAcceptor(GroupSpec spec) : spec_(std::move(spec)) {
    auto diags = validate_group(spec_);
    if (!diags.empty()) throw Error("group oracle: invalid group\n" + format_diagnostics(diags));
    sorted_alphabet_ = spec_.generator_tokens();
    std::sort(sorted_alphabet_.begin(), sorted_alphabet_.end());
    for (const auto& token : sorted_alphabet_) {
        const Generator* gen = spec_.find_generator(*parse_generator_token(token));
        images_.push_back(gen->image);
    }
}

const std::vector<std::string>& GroupOracleAcceptor::alphabet() const { return sorted_alphabet_; }

Outcome GroupOracleAcceptor::decide(std::span<const int> letters) const {
    GroupElement acc = identity(spec_);
    for (int id : letters) acc = multiply(spec_, acc, images_[static_cast<std::size_t>(id)]);
    return is_identity(spec_, acc) ? Outcome::Accept : Outcome::Reject;
}

namespace {

std::string encode_ids(std::span<const int> letters) {
    std::string key;
    key.reserve(letters.size());
    for (int id : letters) key.push_back(static_cast<char>(id + 1));
    return key;
}

}  // namespace

WordSetAcceptor::WordSetAcceptor(std::vector<std::string> alphabet,
                                 const std::vector<std::vector<std::string>>& words)
    : sorted_alphabet_(std::move(alphabet)) {
    std::sort(sorted_alphabet_.begin(), sorted_alphabet_.end());
    if (sorted_alphabet_.size() > 200) throw Error("word set acceptor: alphabet too large");
    for (const auto& word : words) {
        std::vector<int> ids;
        ids.reserve(word.size());
        for (const auto& token : word) {
            auto it = std::lower_bound(sorted_alphabet_.begin(), sorted_alphabet_.end(), token);
            if (it == sorted_alphabet_.end() || *it != token)
                throw Error("word set acceptor: token '" + token + "' not in the alphabet");
            ids.push_back(static_cast<int>(it - sorted_alphabet_.begin()));
        }
        encoded_.push_back(encode_ids(ids));
    }
    std::sort(encoded_.begin(), encoded_.end());
    encoded_.erase(std::unique(encoded_.begin(), encoded_.end()), encoded_.end());
}

const std::vector<std::string>& WordSetAcceptor::alphabet() const { return sorted_alphabet_; }

Outcome WordSetAcceptor::decide(std::span<const int> letters) const {
    return std::binary_search(encoded_.begin(), encoded_.end(), encode_ids(letters))
               ? Outcome::Accept
               : Outcome::Reject;
}

// ---------------------------------------------------------------------------
// comparison

namespace {

std::string render_word(const std::vector<std::string>& alphabet, std::span<const int> ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ' ';
        out += alphabet[static_cast<std::size_t>(ids[i])];
    }
    return out;
}

struct Partial {
    std::uint64_t total = 0;
    std::uint64_t agreements = 0;
    std::vector<Disagreement> disagreements;
    std::vector<std::string> budget_exhausted;
};

Partial compare_range(const Acceptor& left, const Acceptor& right,
                      const std::vector<std::string>& alphabet, int max_length,
                      std::uint64_t begin, std::uint64_t end) {
    Partial part;
    WordEnumerator stream(alphabet.size(), max_length);
    stream.seek(begin);
    std::vector<int> ids;
    for (std::uint64_t rank = begin; rank < end && stream.next(ids); ++rank) {
        const Outcome l = left.decide(ids);
        const Outcome r = right.decide(ids);
        ++part.total;
        if (l == Outcome::Budget || r == Outcome::Budget) {
            part.budget_exhausted.push_back(render_word(alphabet, ids));
        } else if (l == r) {
            ++part.agreements;
        } else {
            part.disagreements.push_back({render_word(alphabet, ids), l, r});
        }
    }
    return part;
}

}  // namespace

ComparisonReport compare_languages(const Acceptor& left, const Acceptor& right, int max_length,
                                   unsigned jobs) {
    if (left.alphabet() != right.alphabet())
        throw Error("compare_languages: acceptor alphabet mismatch");
    const auto& alphabet = left.alphabet();

    ComparisonReport report;
    report.max_length = max_length;
    const std::uint64_t total = word_count(alphabet.size(), max_length);

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t chunk = std::max<std::uint64_t>(1024, total / (jobs * 8) + 1);
    std::vector<std::future<Partial>> futures;
    for (std::uint64_t begin = 0; begin < total; begin += chunk) {
        const std::uint64_t end = std::min(total, begin + chunk);
        futures.push_back(std::async(std::launch::async, [&, begin, end] {
            return compare_range(left, right, alphabet, max_length, begin, end);
        }));
    }
    for (auto& f : futures) {
        Partial part = f.get();
        report.total += part.total;
        report.agreements += part.agreements;
        report.disagreements.insert(report.disagreements.end(), part.disagreements.begin(),
                                    part.disagreements.end());
        report.budget_exhausted.insert(report.budget_exhausted.end(),
                                       part.budget_exhausted.begin(),
                                       part.budget_exhausted.end());
    }
    return report;
}

namespace {

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Accept: return "accept";
        case Outcome::Reject: return "reject";
        case Outcome::Budget: return "budget-exhausted";
    }
    return "?";
}

}  // namespace

std::string report_to_text(const ComparisonReport& report) {
    std::ostringstream out;
    out << "max length:       " << report.max_length << '\n';
    out << "words tested:     " << report.total << '\n';
    out << "agreements:       " << report.agreements << '\n';
    out << "disagreements:    " << report.disagreements.size() << '\n';
    out << "budget exhausted: " << report.budget_exhausted.size() << '\n';
    for (const auto& d : report.disagreements) {
        out << "  disagree on \"" << d.word << "\": left " << outcome_name(d.left) << ", right "
            << outcome_name(d.right) << '\n';
    }
    for (const auto& w : report.budget_exhausted) {
        out << "  budget exhausted on \"" << w << "\"\n";
    }
    out << (report.passed() ? "result: languages agree" : "result: MISMATCH") << '\n';
    return out.str();
}

std::string report_to_json(const ComparisonReport& report) {
    nlohmann::json j;
    j["max_length"] = report.max_length;
    j["total"] = report.total;
    j["agreements"] = report.agreements;
    j["disagreements"] = nlohmann::json::array();
    for (const auto& d : report.disagreements) {
        j["disagreements"].push_back({{"word", d.word},
                                      {"left", std::string(outcome_name(d.left))},
                                      {"right", std::string(outcome_name(d.right))}});
    }
    j["budget_exhausted"] = report.budget_exhausted;
    j["passed"] = report.passed();
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// conjecture apparatus

std::vector<std::vector<std::string>> ln_words(int n, const std::string& y, const std::string& z) {
    if (n < 0) throw Error("ln_words: n must be nonnegative");
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> word;
    // Lexicographic order, y before z.
    const auto gen = [&](auto&& self, int ys, int zs) -> void {
        if (ys == 0 && zs == 0) {
            out.push_back(word);
            return;
        }
        if (ys > 0) {
            word.push_back(y);
            self(self, ys - 1, zs);
            word.pop_back();
        }
        if (zs > 0) {
            word.push_back(z);
            self(self, ys, zs - 1);
            word.pop_back();
        }
    };
    gen(gen, n, n);
    return out;
}

std::vector<std::vector<std::string>> conjecture_language(int n_max) {
    if (n_max < 0) throw Error("conjecture_language: n_max must be nonnegative");
    std::vector<std::vector<std::string>> out;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::string> prefix;
        for (int i = 0; i < n; ++i) {
            prefix.push_back("a");
            prefix.push_back("b");
        }
        for (auto& suffix : ln_words(n, "a^-1", "b^-1")) {
            std::vector<std::string> word = prefix;
            word.insert(word.end(), suffix.begin(), suffix.end());
            out.push_back(std::move(word));
        }
    }
    return out;
}

Machine conjecture_filter() {
    Machine m;
    m.cls = MachineClass::Fsa;
    m.input_alphabet = {"a", "b", "a^-1", "b^-1"};
    const int shell = m.add_state("shell");
    const int mid = m.add_state("mid");
    const int tail = m.add_state("tail");
    m.start = shell;
    m.accepts = {shell, tail};
    m.edges.push_back({shell, "a", NoOp{}, mid});
    m.edges.push_back({mid, "b", NoOp{}, shell});
    m.edges.push_back({shell, "a^-1", NoOp{}, tail});
    m.edges.push_back({shell, "b^-1", NoOp{}, tail});
    m.edges.push_back({tail, "a^-1", NoOp{}, tail});
    m.edges.push_back({tail, "b^-1", NoOp{}, tail});
    return m;
}

ComparisonReport conjecture_check(int max_length, unsigned jobs) {
    GAutomatonAcceptor left(intersect_regular(wp_automaton(GroupSpec::free_abelian(2)),
                                              conjecture_filter()));
    WordSetAcceptor right({"a", "b", "a^-1", "b^-1"},
                          conjecture_language((max_length + 1) / 2));
    return compare_languages(left, right, max_length, jobs);
}

}  // namespace gat
