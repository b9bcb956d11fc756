#include <doctest.h>

#include "gat/fixtures.hpp"
#include "gat/harness.hpp"
#include "gat/machine.hpp"
#include "gat/transfer.hpp"
#include "support/oracles.hpp"

using namespace gat;

namespace {

Machine parity_fsa() {
    Machine m;
    m.cls = MachineClass::Fsa;
    m.input_alphabet = {"a"};
    m.add_state("even");
    m.add_state("odd");
    m.start = 0;
    m.accepts = {0};
    m.edges.push_back({0, "a", NoOp{}, 1});
    m.edges.push_back({1, "a", NoOp{}, 0});
    return m;
}

Machine eps_fsa() {
    // epsilon cycle between p and q, letter edge out of q
    Machine m;
    m.cls = MachineClass::Fsa;
    m.input_alphabet = {"a", "b"};
    m.add_state("p");
    m.add_state("q");
    m.add_state("r");
    m.start = 0;
    m.accepts = {2};
    m.edges.push_back({0, std::nullopt, NoOp{}, 1});
    m.edges.push_back({1, std::nullopt, NoOp{}, 0});
    m.edges.push_back({1, "a", NoOp{}, 2});
    m.edges.push_back({2, "b", NoOp{}, 1});
    return m;
}

std::vector<std::string> toks(const char* line) { return split_tokens(line); }

}  // namespace

TEST_CASE("validate_machine") {
    CHECK(validate_machine(parity_fsa()).empty());

    SUBCASE("pda edge popping the bottom marker") {
        Machine m = wp_machine_free(fixtures::f1()).machine;
        m.edges.push_back({0, "a", PdaInstr{std::string("$"), StackOp::Pop, ""}, 0});
        auto diags = validate_machine(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].message.find("bottom marker") != std::string::npos);
        CHECK(diags[0].subject.find("edge") != std::string::npos);
    }

    SUBCASE("pda pop with a wildcard guard") {
        Machine m = wp_machine_free(fixtures::f1()).machine;
        m.edges.push_back({0, "a", PdaInstr{std::nullopt, StackOp::Pop, ""}, 0});
        CHECK(validate_machine(m).size() == 1);
    }

    SUBCASE("lba left move without a boundary guard") {
        Machine m = wp_machine_zn(1).machine;
        m.edges.push_back(
            {0, std::nullopt, LbaInstr{std::nullopt, std::nullopt, HeadMove::Left}, 0});
        auto diags = validate_machine(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].message.find("left move") != std::string::npos);
    }

    SUBCASE("lba write on a marker guard") {
        Machine m = wp_machine_zn(1).machine;
        m.edges.push_back(
            {0, std::nullopt, LbaInstr{std::string("<"), std::string("1"), HeadMove::Stay}, 0});
        CHECK_FALSE(validate_machine(m).empty());
    }
}

TEST_CASE("reserved machine classes parse but do not run") {
    Machine m = parity_fsa();
    m.cls = MachineClass::Stack;
    CHECK_THROWS_WITH_AS(machine_accepts(m, toks("a a")),
                         doctest::Contains("unimplemented machine class"), Error);
    m.cls = MachineClass::NestedStack;
    CHECK_THROWS_AS(machine_accepts(m, toks("a")), Error);
    m.cls = MachineClass::Turing;
    CHECK_THROWS_AS(machine_accepts(m, toks("a")), Error);
}

TEST_CASE("fsa_accepts") {
    const Machine m = parity_fsa();
    CHECK(fsa_accepts(m, toks("a a")).verdict == RunVerdict::Accept);
    CHECK(fsa_accepts(m, toks("a")).verdict == RunVerdict::Reject);
    CHECK(fsa_accepts(m, {}).verdict == RunVerdict::Accept);  // start is accepting

    const Machine eps = eps_fsa();
    CHECK(fsa_accepts(eps, toks("a")).verdict == RunVerdict::Accept);
    CHECK(fsa_accepts(eps, toks("a b a")).verdict == RunVerdict::Accept);
    CHECK(fsa_accepts(eps, toks("b")).verdict == RunVerdict::Reject);
}

TEST_CASE("fsa_accepts matches naive path enumeration") {
    for (const Machine& m : {parity_fsa(), eps_fsa(), conjecture_filter(),
                             wp_machine_finite(fixtures::s3()).machine}) {
        auto alphabet = m.input_alphabet;
        std::sort(alphabet.begin(), alphabet.end());
        for (const auto& word : enumerate_words(alphabet, 6)) {
            const bool fast = fsa_accepts(m, word).verdict == RunVerdict::Accept;
            const bool naive = testing::naive_fsa_accepts(m, word);
            REQUIRE_MESSAGE(fast == naive, "word: ", join_tokens(word));
        }
    }
}

TEST_CASE("pda_accepts on the free word problem") {
    const Machine m = wp_machine_free(fixtures::f1()).machine;
    CHECK(pda_accepts(m, toks("a a^-1")).verdict == RunVerdict::Accept);
    CHECK(pda_accepts(m, toks("a")).verdict == RunVerdict::Reject);
    CHECK(pda_accepts(m, {}).verdict == RunVerdict::Accept);

    auto accepted = pda_accepts(m, toks("a a a^-1 a^-1"));
    CHECK(accepted.verdict == RunVerdict::Accept);
    CHECK(accepted.max_stack >= 2);
    CHECK_FALSE(accepted.trace.empty());
}

TEST_CASE("balanced-count pda built from the product") {
    // The equal-counts automaton over letters l and r, compiled against
    // the F_1 stack machine.
    GAutomaton p;
    p.group = fixtures::f1();
    p.alphabet = close_alphabet({"l", "r"});
    p.add_state("s");
    p.start = 0;
    p.accepts = {0};
    p.edges.push_back({0, "l", GroupElement::free_word({1}), 0});
    p.edges.push_back({0, "r", GroupElement::free_word({-1}), 0});

    const Machine m = product(p, wp_machine_free(fixtures::f1())).machine;
    REQUIRE(m.cls == MachineClass::Pda);

    const auto grammar_says = pda_accepts(m, toks("l l r r"));
    CHECK(grammar_says.verdict == RunVerdict::Accept);
    const bool search_says = testing::bounded_pda_search(m, toks("l l r r"), 4 + 1);
    CHECK(search_says);
    CHECK(pda_accepts(m, toks("l r l")).verdict == RunVerdict::Reject);
}

TEST_CASE("pda grammar route agrees with bounded configuration search") {
    std::vector<Machine> machines;
    machines.push_back(wp_machine_free(fixtures::f1()).machine);
    machines.push_back(wp_machine_free(fixtures::f2()).machine);
    machines.push_back(product(fixtures::aeq_f1(), wp_machine_free(fixtures::f1())).machine);
    const int max_len = 4;
    for (const Machine& m : machines) {
        PdaRunner runner(m);
        auto alphabet = m.input_alphabet;
        std::sort(alphabet.begin(), alphabet.end());
        const std::size_t cap = max_len + m.states.size() + 2;
        for (const auto& word : enumerate_words(alphabet, max_len)) {
            const bool grammar = runner.run(word).verdict == RunVerdict::Accept;
            const bool search = testing::bounded_pda_search(m, word, cap);
            REQUIRE_MESSAGE(grammar == search, "word: ", join_tokens(word));
        }
    }
}

TEST_CASE("lba_accepts on the Z^2 word problem") {
    const auto wp = wp_machine_zn(2);
    LbaRunner runner(wp.machine);
    CHECK(runner.run(toks("a b a^-1 b^-1")).verdict == RunVerdict::Accept);
    CHECK(runner.run(toks("a b a^-1")).verdict == RunVerdict::Reject);

    const auto word = toks("a a b b a^-1 a^-1 b^-1 b^-1");
    const auto result = runner.run(word);
    CHECK(result.verdict == RunVerdict::Accept);
    CHECK(testing::oracle_wp(wp.group, word));
    // space multiplier 2k+3 = 7, so at most 7 * 9 cells
    CHECK(result.max_cells <= static_cast<std::size_t>(7 * (word.size() + 1)));
}

TEST_CASE("lba verdicts agree with the group oracle up to length 5") {
    const auto wp = wp_machine_zn(2);
    LbaRunner runner(wp.machine);
    auto alphabet = wp.machine.input_alphabet;
    std::sort(alphabet.begin(), alphabet.end());
    const auto bound = [&](std::size_t len) {
        return static_cast<std::size_t>(ceil_mul(wp.machine.space_multiplier,
                                                 static_cast<std::int64_t>(len) + 1));
    };
    for (const auto& word : enumerate_words(alphabet, 5)) {
        const auto result = runner.run(word);
        REQUIRE(result.verdict != RunVerdict::ResourceExceeded);
        const bool accepted = result.verdict == RunVerdict::Accept;
        REQUIRE_MESSAGE(accepted == testing::oracle_wp(wp.group, word),
                        "word: ", join_tokens(word));
        REQUIRE(result.max_cells <= bound(word.size()));
    }
}

TEST_CASE("lba visited-set cap yields resource-exceeded, not a verdict") {
    const auto wp = wp_machine_zn(1);
    LbaRunner runner(wp.machine, MachineRunLimits{20});
    CHECK(runner.run(toks("a a a^-1 a^-1")).verdict == RunVerdict::ResourceExceeded);
}

TEST_CASE("is_deterministic") {
    CHECK(is_deterministic(parity_fsa()));

    Machine with_eps = parity_fsa();
    with_eps.edges.push_back({0, std::nullopt, NoOp{}, 1});
    CHECK_FALSE(is_deterministic(with_eps));

    Machine pda = wp_machine_free(fixtures::f1()).machine;
    // two a-edges from the working state with overlapping guards
    Machine overlapping = pda;
    overlapping.edges.push_back({0, "a", PdaInstr{std::nullopt, StackOp::Stay, ""}, 0});
    CHECK_FALSE(is_deterministic(overlapping));

    // distinct concrete guards on the same token stay deterministic
    Machine split;
    split.cls = MachineClass::Pda;
    split.input_alphabet = {"x"};
    split.tape_alphabet = {"$", "g"};
    split.bottom_marker = "$";
    split.add_state("s");
    split.start = 0;
    split.edges.push_back({0, "x", PdaInstr{std::string("$"), StackOp::Push, "g"}, 0});
    split.edges.push_back({0, "x", PdaInstr{std::string("g"), StackOp::Pop, ""}, 0});
    CHECK(is_deterministic(split));
}

TEST_CASE("deciders are pure") {
    const Machine m = wp_machine_zn(1).machine;
    LbaRunner runner(m);
    const auto first = runner.run(toks("a a^-1"));
    const auto second = runner.run(toks("a a^-1"));
    CHECK(first.verdict == second.verdict);
    CHECK(first.configurations == second.configurations);
    CHECK(first.max_cells == second.max_cells);
    CHECK(first.trace == second.trace);

    const Machine pda = wp_machine_free(fixtures::f2()).machine;
    PdaRunner pruner(pda);
    const auto p1 = pruner.run(toks("a b b^-1 a^-1"));
    const auto p2 = pruner.run(toks("a b b^-1 a^-1"));
    CHECK(p1.verdict == p2.verdict);
    CHECK(p1.configurations == p2.configurations);
    CHECK(p1.max_stack == p2.max_stack);
}

TEST_CASE("class mismatch is rejected") {
    CHECK_THROWS_AS(fsa_accepts(wp_machine_free(fixtures::f1()).machine, toks("a")), Error);
    CHECK_THROWS_AS(pda_accepts(parity_fsa(), toks("a")), Error);
    CHECK_THROWS_AS(lba_accepts(parity_fsa(), toks("a")), Error);
}
