#ifndef GAT_MACHINE_HPP
#define GAT_MACHINE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gat/base.hpp"

namespace gat {

/// Machine classes of the restricted-Turing-machine ladder. Only fsa,
/// pda and lba have deciders; the remaining tags parse but any attempt
/// to run them raises an "unimplemented machine class" Error.
enum class MachineClass { Fsa, Pda, Lba, Stack, NestedStack, Turing };

std::string_view machine_class_name(MachineClass cls);
std::optional<MachineClass> parse_machine_class(std::string_view name);
bool machine_class_executable(MachineClass cls);

struct NoOp {
    bool operator==(const NoOp&) const = default;
};

enum class StackOp { Push, Pop, Stay };

/// One pushdown step. `guard` is the required top-of-stack symbol;
/// nullopt is a wildcard. `symbol` is only meaningful for Push.
struct PdaInstr {
    std::optional<std::string> guard;
    StackOp op = StackOp::Stay;
    std::string symbol;

    bool operator==(const PdaInstr&) const = default;
};

enum class HeadMove { Left, Right, Stay };

/// One tape step: optional scanned-symbol guard (nullopt = wildcard),
/// optional write (nullopt = keep), and a head move.
struct LbaInstr {
    std::optional<std::string> guard;
    std::optional<std::string> write;
    HeadMove move = HeadMove::Stay;

    bool operator==(const LbaInstr&) const = default;
};

using Instruction = std::variant<NoOp, PdaInstr, LbaInstr>;

/// The neutral instruction of a class: what an edge does when it must
/// not touch the tape at all.
Instruction neutral_instruction(MachineClass cls);

struct MachineEdge {
    int src = 0;
    std::optional<std::string> input;  // nullopt = epsilon
    Instruction instr;
    int dst = 0;

    bool operator==(const MachineEdge&) const = default;
};

struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;

    bool operator==(const Rational&) const = default;
};

/// ceil(r * n) for nonnegative n.
std::int64_t ceil_mul(Rational r, std::int64_t n);

/// A class-tagged instruction-edge machine: a finite state control whose
/// edges carry an input token (or epsilon) and one tape instruction.
///
/// Conventions fixed here and relied on by the deciders:
///   pda -- acceptance by final state; the stack starts as [bottom_marker]
///          and the bottom marker is never popped by machine edges.
///   lba -- the input is read through the control, not written on the
///          tape. The work tape holds ceil(space_multiplier * (|word|+1))
///          blank cells between left_marker and right_marker; the head
///          starts on the first work cell. Markers are read-only.
struct Machine {
    MachineClass cls = MachineClass::Fsa;
    std::vector<std::string> input_alphabet;
    std::vector<std::string> tape_alphabet;
    std::vector<std::string> states;
    int start = 0;
    std::vector<int> accepts;
    std::vector<MachineEdge> edges;

    std::string bottom_marker;  // pda
    std::string left_marker;    // lba
    std::string right_marker;   // lba
    std::string blank;          // lba
    Rational space_multiplier{1, 1};  // lba

    int add_state(const std::string& name);
    int state_index(const std::string& name) const;  // -1 when absent
    bool is_accept(int state) const;

    bool operator==(const Machine&) const = default;
};

enum class RunVerdict { Accept, Reject, ResourceExceeded };

std::string_view run_verdict_name(RunVerdict verdict);

/// Outcome of one decider call. On Accept, `trace` lists machine edge
/// indices of one accepting run (for the pda grammar route the drain
/// moves appended after the last machine edge are omitted); the decider
/// replays the trace before returning, so an Accept verdict always has a
/// concrete verified run behind it.
struct RunResult {
    RunVerdict verdict = RunVerdict::Reject;
    std::uint64_t configurations = 0;
    std::size_t max_cells = 0;  // lba: highest work-cell index the head reached (1-based)
    std::size_t max_stack = 0;  // pda: deepest stack incl. bottom marker
    std::vector<int> trace;
};

struct MachineRunLimits {
    std::uint64_t max_visited = 10'000'000;
};

std::vector<Diagnostic> validate_machine(const Machine& m);

/// True iff the machine has no epsilon-input edges and no state has two
/// outgoing edges with the same input token and overlapping guards.
bool is_deterministic(const Machine& m);

RunResult fsa_accepts(const Machine& m, std::span<const std::string> word);
RunResult pda_accepts(const Machine& m, std::span<const std::string> word);
RunResult lba_accepts(const Machine& m, std::span<const std::string> word,
                      const MachineRunLimits& limits = {});

/// Class-dispatching convenience used by the harness and the CLI.
RunResult machine_accepts(const Machine& m, std::span<const std::string> word,
                          const MachineRunLimits& limits = {});

/// Reusable deciders: validate and preprocess once, run many words.
/// All runners are immutable after construction and safe to share
/// between threads.
class FsaRunner {
public:
    explicit FsaRunner(const Machine& m);
    ~FsaRunner();
    FsaRunner(FsaRunner&&) noexcept;
    RunResult run(std::span<const std::string> word) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

class PdaRunner {
public:
    explicit PdaRunner(const Machine& m);
    ~PdaRunner();
    PdaRunner(PdaRunner&&) noexcept;
    RunResult run(std::span<const std::string> word) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

class LbaRunner {
public:
    explicit LbaRunner(const Machine& m, const MachineRunLimits& limits = {});
    ~LbaRunner();
    LbaRunner(LbaRunner&&) noexcept;
    RunResult run(std::span<const std::string> word) const;

    /// ceil(space_multiplier * (|word|+1)): the work-tape size and the
    /// bound every run's max_cells must respect.
    std::int64_t work_cells(std::size_t word_length) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace gat

#endif
