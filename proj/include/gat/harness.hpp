#ifndef GAT_HARNESS_HPP
#define GAT_HARNESS_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gat/gautomaton.hpp"
#include "gat/group.hpp"
#include "gat/machine.hpp"

namespace gat {

/// Number of words over an alphabet of `size` tokens up to `max_length`.
std::uint64_t word_count(std::size_t size, int max_length);

/// Lazy stream of all words of length 0..max_length in
/// length-then-lexicographic order over the alphabet as given.
/// Letters are produced as indices into the alphabet.
class WordEnumerator {
public:
    WordEnumerator(std::size_t alphabet_size, int max_length);

    /// Positions the enumerator at the word with this rank (0 = empty word).
    void seek(std::uint64_t rank);

    /// Writes the current word and advances. Returns false when done.
    bool next(std::vector<int>& word);

private:
    std::size_t size_;
    int max_length_;
    bool done_ = false;
    std::vector<int> current_;
};

/// Materialized enumeration with rendered tokens, for the CLI and tests.
std::vector<std::vector<std::string>> enumerate_words(const std::vector<std::string>& alphabet,
                                                      int max_length);

enum class Outcome { Accept, Reject, Budget };

/// A language decider over a fixed, sorted token alphabet. decide() takes
/// letter ids into alphabet(). Implementations are immutable and safe to
/// call from several threads.
class Acceptor {
public:
    virtual ~Acceptor() = default;
    virtual const std::vector<std::string>& alphabet() const = 0;
    virtual Outcome decide(std::span<const int> letters) const = 0;
};

class GAutomatonAcceptor : public Acceptor {
public:
    /// Normalizes the automaton when needed.
    explicit GAutomatonAcceptor(GAutomaton automaton, SearchBudget budget = {});
    const std::vector<std::string>& alphabet() const override;
    Outcome decide(std::span<const int> letters) const override;
    const GaRunner& runner() const { return runner_; }

private:
    GaRunner runner_;
};

/// Space accounting across the lba runs of a sweep.
struct LbaSpaceAudit {
    std::atomic<std::uint64_t> runs{0};
    std::atomic<std::uint64_t> violations{0};
    std::atomic<std::uint64_t> max_cells{0};
};

class MachineAcceptor : public Acceptor {
public:
    explicit MachineAcceptor(Machine machine, MachineRunLimits limits = {},
                             LbaSpaceAudit* audit = nullptr);
    const std::vector<std::string>& alphabet() const override;
    Outcome decide(std::span<const int> letters) const override;

private:
    Machine machine_;
    std::vector<std::string> sorted_alphabet_;
    std::unique_ptr<FsaRunner> fsa_;
    std::unique_ptr<PdaRunner> pda_;
    std::unique_ptr<LbaRunner> lba_;
    LbaSpaceAudit* audit_ = nullptr;
};

/// The word-problem oracle as an acceptor: a word is in the language iff
/// its generator images multiply to the identity.
class GroupOracleAcceptor : public Acceptor {
public:
    explicit GroupOracleAcceptor(GroupSpec spec);
    const std::vector<std::string>& alphabet() const override;
    Outcome decide(std::span<const int> letters) const override;

private:
    GroupSpec spec_;
    std::vector<std::string> sorted_alphabet_;
    std::vector<GroupElement> images_;
};

/// Membership in a finite word list.
class WordSetAcceptor : public Acceptor {
public:
    WordSetAcceptor(std::vector<std::string> alphabet,
                    const std::vector<std::vector<std::string>>& words);
    const std::vector<std::string>& alphabet() const override;
    Outcome decide(std::span<const int> letters) const override;

private:
    std::vector<std::string> sorted_alphabet_;
    std::vector<std::string> encoded_;  // sorted encoded id strings
};

struct Disagreement {
    std::string word;
    Outcome left = Outcome::Reject;
    Outcome right = Outcome::Reject;

    bool operator==(const Disagreement&) const = default;
};

/// The empirical witness of a language comparison. Every enumerated word
/// lands in exactly one bucket; a budget-exhausted verdict on either side
/// never counts as agreement.
struct ComparisonReport {
    int max_length = 0;
    std::uint64_t total = 0;
    std::uint64_t agreements = 0;
    std::vector<Disagreement> disagreements;
    std::vector<std::string> budget_exhausted;

    bool passed() const { return disagreements.empty() && budget_exhausted.empty(); }
};

std::string report_to_text(const ComparisonReport& report);
std::string report_to_json(const ComparisonReport& report);

/// Compares two acceptors on every word up to max_length. Words may be
/// decided concurrently (`jobs` threads, 0 = hardware concurrency); the
/// report is assembled in enumeration order either way.
ComparisonReport compare_languages(const Acceptor& left, const Acceptor& right, int max_length,
                                   unsigned jobs = 0);

/// All words over {y, z} with exactly n of each, lexicographic (y first).
std::vector<std::vector<std::string>> ln_words(int n, const std::string& y, const std::string& z);

/// All words (ab)^n w_n for n <= n_max, w_n over {a^-1, b^-1} with n of
/// each; the concrete reading of the two-sided balanced language over
/// the rank-2 free abelian generators.
std::vector<std::vector<std::string>> conjecture_language(int n_max);

/// Deterministic fsa for the regular shell (ab)* {a^-1, b^-1}*.
Machine conjecture_filter();

/// Compares membership in intersect_regular(wp_automaton(Z^2), filter)
/// against presence in conjecture_language(ceil(max_length / 2)) on all
/// words up to max_length.
ComparisonReport conjecture_check(int max_length, unsigned jobs = 0);

}  // namespace gat

#endif
