#include "gat/fixtures.hpp"

#include <algorithm>
#include <array>

#include "gat/harness.hpp"

namespace gat {
namespace fixtures {

GroupSpec z_mod_2() {
    return GroupSpec::finite_group({{0, 1}, {1, 0}}, {{"t", 1}});
}

GroupSpec s3() {
    // Permutations of {0,1,2} in lexicographic order; index 0 is the
    // identity. Composition p*q means "apply p, then q".
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> base{0, 1, 2};
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));

    const auto index_of = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i) {
            if (perms[i] == p) return static_cast<int>(i);
        }
        throw Error("s3: permutation not found");
    };

    std::vector<std::vector<int>> cayley(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> composed;
            for (int x = 0; x < 3; ++x) {
                composed[static_cast<std::size_t>(x)] =
                    perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(
                        perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)])];
            }
            cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = index_of(composed);
        }
    }
    const int cycle = index_of({1, 2, 0});
    const int swap01 = index_of({1, 0, 2});
    return GroupSpec::finite_group(std::move(cayley), {{"c", cycle}, {"t", swap01}});
}

GroupSpec z1() { return GroupSpec::free_abelian(1); }
GroupSpec z2() { return GroupSpec::free_abelian(2); }
GroupSpec f1() { return GroupSpec::free_group(1); }
GroupSpec f2() { return GroupSpec::free_group(2); }

GAutomaton aeq() {
    GAutomaton a;
    a.group = z1();
    a.alphabet = close_alphabet({"a", "b"});
    a.add_state("s");
    a.start = 0;
    a.accepts = {0};
    a.edges.push_back({0, "a", GroupElement::vector({1}), 0});
    a.edges.push_back({0, "b", GroupElement::vector({-1}), 0});
    return a;
}

GAutomaton aeq_f1() {
    GAutomaton a;
    a.group = f1();
    a.alphabet = close_alphabet({"a", "b"});
    a.add_state("s");
    a.start = 0;
    a.accepts = {0};
    a.edges.push_back({0, "a", GroupElement::free_word({1}), 0});
    a.edges.push_back({0, "b", GroupElement::free_word({-1}), 0});
    return a;
}

GAutomaton anbn() {
    GAutomaton a;
    a.group = z1();
    a.alphabet = close_alphabet({"a", "b"});
    a.add_state("s");
    a.add_state("t");
    a.start = 0;
    a.accepts = {1};
    a.edges.push_back({0, "a", GroupElement::vector({1}), 0});
    a.edges.push_back({0, "b", GroupElement::vector({-1}), 1});
    a.edges.push_back({1, "b", GroupElement::vector({-1}), 1});
    return a;
}

GAutomaton anbncn() {
    return counter_automaton(
        2, {"sa", "sb", "sc"},
        {
            {"sa", "a", {1, 0}, "sa"},
            {"sa", "b", {-1, 1}, "sb"},
            {"sb", "b", {-1, 1}, "sb"},
            {"sb", "c", {0, -1}, "sc"},
            {"sc", "c", {0, -1}, "sc"},
        },
        "sa", {"sa", "sc"});
}

GAutomaton parity_z2() {
    GAutomaton a;
    a.group = z_mod_2();
    a.alphabet = close_alphabet({"a"});
    a.add_state("s");
    a.start = 0;
    a.accepts = {0};
    a.edges.push_back({0, "a", GroupElement::finite(1), 0});
    return a;
}

namespace {

std::vector<Fixture> build_all() {
    std::vector<Fixture> out;

    {
        Fixture f;
        f.name = "aeq";
        f.notes = "words over {a,b} with equal a and b counts; blind Z counter";
        f.gautomaton = aeq();
        f.slices.push_back(
            {4,
             {"", "a b", "b a", "a a b b", "a b a b", "a b b a", "b a a b", "b a b a", "b b a a"},
             "enumerate the alphabet up to length 4 and keep words whose a-count equals their "
             "b-count"});
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "aeq_f1";
        f.notes = "the aeq language with free-group weights over F_1";
        f.gautomaton = aeq_f1();
        f.slices.push_back(
            {4,
             {"", "a b", "b a", "a a b b", "a b a b", "a b b a", "b a a b", "b a b a", "b b a a"},
             "enumerate the alphabet up to length 4 and keep words whose a-count equals their "
             "b-count"});
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "anbn";
        f.notes = "a^n b^n, n >= 1; not regular, accepted with one blind counter";
        f.gautomaton = anbn();
        f.slices.push_back({6,
                            {"a b", "a a b b", "a a a b b b"},
                            "exhaustive path enumeration up to length 6"});
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "anbncn";
        f.notes = "eps plus a^n b^n c^n, n >= 1; not context-free, two blind counters";
        f.gautomaton = anbncn();
        f.slices.push_back(
            {6, {"", "a b c", "a a b b c c"}, "exhaustive path enumeration up to length 6"});
        out.push_back(std::move(f));
    }
    {
        Fixture f;
        f.name = "parity_z2";
        f.notes = "even-length words over {a}; Z/2 weights";
        f.gautomaton = parity_z2();
        f.slices.push_back({5, {"", "a a", "a a a a"}, "even lengths up to 5"});
        out.push_back(std::move(f));
    }

    const auto lemma = [&](const std::string& name, const GroupSpec& spec,
                           const std::string& group_label) {
        Fixture f;
        f.name = name;
        f.notes = "one-state word-problem automaton for " + group_label +
                  ": a loop (g, g) per generator";
        f.gautomaton = wp_automaton(spec);
        return f;
    };
    {
        Fixture f = lemma("lemma_zmod2", z_mod_2(), "Z/2");
        f.slices.push_back({4, {"", "t t", "t t^-1", "t^-1 t", "t^-1 t^-1",
                                "t t t t", "t t t t^-1", "t t t^-1 t", "t t t^-1 t^-1",
                                "t t^-1 t t", "t t^-1 t t^-1", "t t^-1 t^-1 t",
                                "t t^-1 t^-1 t^-1", "t^-1 t t t", "t^-1 t t t^-1",
                                "t^-1 t t^-1 t", "t^-1 t t^-1 t^-1", "t^-1 t^-1 t t",
                                "t^-1 t^-1 t t^-1", "t^-1 t^-1 t^-1 t", "t^-1 t^-1 t^-1 t^-1"},
                            "all even-length words over {t, t^-1} up to length 4"});
        out.push_back(std::move(f));
    }
    out.push_back(lemma("lemma_s3", s3(), "S_3"));
    out.push_back(lemma("lemma_f1", f1(), "F_1"));
    out.push_back(lemma("lemma_f2", f2(), "F_2"));
    {
        Fixture f = lemma("lemma_z1", z1(), "Z");
        f.slices.push_back({4,
                            {"", "a a^-1", "a^-1 a", "a a a^-1 a^-1", "a a^-1 a a^-1",
                             "a a^-1 a^-1 a", "a^-1 a a a^-1", "a^-1 a a^-1 a", "a^-1 a^-1 a a"},
                            "words over {a, a^-1} with balanced exponent sum, up to length 4"});
        out.push_back(std::move(f));
    }
    out.push_back(lemma("lemma_z2", z2(), "Z^2"));

    {
        Fixture f;
        f.name = "conjecture_filter";
        f.notes = "regular shell (ab)* {a^-1,b^-1}*; intersect with the Z^2 word problem to get "
                  "the explorer language";
        f.machine = conjecture_filter();
        f.slices.push_back({3,
                            {"", "a b", "a^-1", "b^-1", "a^-1 a^-1", "a^-1 b^-1", "b^-1 a^-1",
                             "b^-1 b^-1", "a b a^-1", "a b b^-1", "a^-1 a^-1 a^-1",
                             "a^-1 a^-1 b^-1", "a^-1 b^-1 a^-1", "a^-1 b^-1 b^-1",
                             "b^-1 a^-1 a^-1", "b^-1 a^-1 b^-1", "b^-1 b^-1 a^-1",
                             "b^-1 b^-1 b^-1"},
                            "prefix in (ab)* followed by any word over the inverse letters, up to "
                            "length 3"});
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

const std::vector<Fixture>& all() {
    static const std::vector<Fixture> fixtures = build_all();
    return fixtures;
}

const Fixture& by_name(const std::string& name) {
    for (const auto& f : all()) {
        if (f.name == name) return f;
    }
    throw Error("unknown fixture '" + name + "'");
}

}  // namespace fixtures
}  // namespace gat
