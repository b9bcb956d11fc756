#include <doctest.h>

#include <random>

#include "gat/fixtures.hpp"
#include "gat/group.hpp"

using namespace gat;

namespace {

GroupElement random_element(const GroupSpec& spec, std::mt19937& rng) {
    switch (spec.family) {
        case GroupFamily::Finite: {
            std::uniform_int_distribution<int> dist(0, spec.order - 1);
            return GroupElement::finite(dist(rng));
        }
        case GroupFamily::FreeAbelian: {
            std::uniform_int_distribution<int> dist(-10, 10);
            std::vector<Integer> coords;
            for (int i = 0; i < spec.rank; ++i) coords.push_back(dist(rng));
            return GroupElement::vector(std::move(coords));
        }
        case GroupFamily::Free: {
            std::uniform_int_distribution<int> len(0, 8);
            std::uniform_int_distribution<int> letter(1, spec.rank);
            std::uniform_int_distribution<int> sign(0, 1);
            std::vector<int> word;
            const int target = len(rng);
            while (static_cast<int>(word.size()) < target) {
                int next = letter(rng) * (sign(rng) ? 1 : -1);
                if (!word.empty() && word.back() == -next) continue;
                word.push_back(next);
            }
            return GroupElement::free_word(std::move(word));
        }
    }
    throw Error("random_element: unknown family");
}

std::vector<GeneratorSymbol> random_word(const GroupSpec& spec, std::mt19937& rng, int length) {
    std::uniform_int_distribution<std::size_t> pick(0, spec.generators.size() - 1);
    std::vector<GeneratorSymbol> word;
    for (int i = 0; i < length; ++i) word.push_back(spec.generators[pick(rng)].symbol);
    return word;
}

}  // namespace

TEST_CASE("identity elements per family") {
    CHECK(identity(fixtures::z2()) == GroupElement::vector({0, 0}));
    CHECK(identity(fixtures::f2()) == GroupElement::free_word({}));
    CHECK(identity(fixtures::s3()) == GroupElement::finite(0));
}

TEST_CASE("multiply") {
    const auto z2 = fixtures::z2();
    CHECK(multiply(z2, GroupElement::vector({1, 0}), GroupElement::vector({0, 1})) ==
          GroupElement::vector({1, 1}));

    const auto f2 = fixtures::f2();
    // (a b) * (b^-1) = a
    CHECK(multiply(f2, GroupElement::free_word({1, 2}), GroupElement::free_word({-2})) ==
          GroupElement::free_word({1}));

    const auto zmod2 = fixtures::z_mod_2();
    CHECK(multiply(zmod2, GroupElement::finite(1), GroupElement::finite(1)) ==
          GroupElement::finite(0));
}

TEST_CASE("multiply rejects family and rank mismatches") {
    CHECK_THROWS_AS(multiply(fixtures::z2(), GroupElement::vector({1}),
                             GroupElement::vector({0, 1})),
                    Error);
    CHECK_THROWS_AS(multiply(fixtures::f1(), GroupElement::vector({1}),
                             GroupElement::vector({1})),
                    Error);
}

TEST_CASE("invert") {
    CHECK(invert(fixtures::z2(), GroupElement::vector({3, -1})) == GroupElement::vector({-3, 1}));
    CHECK(invert(fixtures::f2(), GroupElement::free_word({1, 2})) ==
          GroupElement::free_word({-2, -1}));
    const auto s3 = fixtures::s3();
    for (int i = 0; i < s3.order; ++i) {
        CHECK(multiply(s3, GroupElement::finite(i), invert(s3, GroupElement::finite(i))) ==
              identity(s3));
    }
}

TEST_CASE("is_identity") {
    CHECK(is_identity(fixtures::z2(), GroupElement::vector({0, 0})));
    CHECK_FALSE(is_identity(fixtures::f2(), GroupElement::free_word({1, 2, -1, -2})));
    CHECK(is_identity(fixtures::s3(), GroupElement::finite(0)));
    CHECK_FALSE(is_identity(fixtures::s3(), GroupElement::finite(3)));
}

TEST_CASE("evaluate_word") {
    const auto z2 = fixtures::z2();
    const std::vector<GeneratorSymbol> commutator{{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}};
    CHECK(is_identity(z2, evaluate_word(z2, commutator)));

    const auto f2 = fixtures::f2();
    CHECK(evaluate_word(f2, commutator) == GroupElement::free_word({1, 2, -1, -2}));

    const auto zmod2 = fixtures::z_mod_2();
    const std::vector<GeneratorSymbol> ttt{{"t", 1}, {"t", 1}, {"t", 1}};
    CHECK(evaluate_word(zmod2, ttt) == GroupElement::finite(1));

    CHECK_THROWS_AS(evaluate_word(z2, {{"zz", 1}}), Error);
}

TEST_CASE("element_norm") {
    CHECK(element_norm(fixtures::z2(), GroupElement::vector({2, -5})) == 5);
    CHECK(element_norm(fixtures::f2(), GroupElement::free_word({1, 2, 1})) == 3);
    CHECK(element_norm(fixtures::s3(), GroupElement::finite(0)) == 0);
    CHECK(element_norm(fixtures::s3(), GroupElement::finite(2)) == 1);
}

TEST_CASE("group axioms hold on random triples") {
    std::mt19937 rng(20240817);
    for (const GroupSpec& spec : {fixtures::s3(), fixtures::z2(), fixtures::f2()}) {
        for (int i = 0; i < 200; ++i) {
            const auto a = random_element(spec, rng);
            const auto b = random_element(spec, rng);
            const auto c = random_element(spec, rng);
            CHECK(multiply(spec, multiply(spec, a, b), c) ==
                  multiply(spec, a, multiply(spec, b, c)));
            CHECK(multiply(spec, identity(spec), a) == a);
            CHECK(multiply(spec, a, identity(spec)) == a);
            CHECK(multiply(spec, a, invert(spec, a)) == identity(spec));
        }
    }
}

TEST_CASE("free reduction is canonical under inverse-pair insertion") {
    std::mt19937 rng(7);
    const auto f2 = fixtures::f2();
    for (int i = 0; i < 200; ++i) {
        auto word = random_word(f2, rng, 6);
        std::uniform_int_distribution<std::size_t> at(0, word.size());
        std::uniform_int_distribution<std::size_t> pick(0, f2.generators.size() - 1);
        const auto& gen = f2.generators[pick(rng)];
        auto padded = word;
        const auto where = at(rng);
        padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(where),
                      {gen.symbol, gen.symbol.inverse()});
        CHECK(evaluate_word(f2, word) == evaluate_word(f2, padded));
    }
}

TEST_CASE("free-abelian evaluation equals independent coordinate sums") {
    std::mt19937 rng(99);
    const auto z2 = fixtures::z2();
    for (int i = 0; i < 200; ++i) {
        auto word = random_word(z2, rng, 10);
        Integer a = 0, b = 0;
        for (const auto& sym : word) {
            (sym.name == "a" ? a : b) += sym.exponent;
        }
        CHECK(evaluate_word(z2, word) == GroupElement::vector({a, b}));
    }
}

TEST_CASE("validate_group flags broken tables") {
    CHECK(validate_group(fixtures::s3()).empty());
    CHECK(validate_group(fixtures::z_mod_2()).empty());
    CHECK(validate_group(fixtures::z2()).empty());
    CHECK(validate_group(fixtures::f2()).empty());

    GroupSpec broken = fixtures::z_mod_2();
    broken.cayley = {{0, 1}, {1, 1}};  // repeated entry
    CHECK_FALSE(validate_group(broken).empty());

    GroupSpec shifted = fixtures::z_mod_2();
    shifted.cayley = {{1, 0}, {0, 1}};  // row 0 is not the identity row
    CHECK_FALSE(validate_group(shifted).empty());

    GroupSpec open = fixtures::z2();
    open.generators.pop_back();  // drops b^-1
    CHECK_FALSE(validate_group(open).empty());

    GroupSpec lying = fixtures::z2();
    lying.generators[1].image = GroupElement::vector({1, 1});  // not the inverse of a
    CHECK_FALSE(validate_group(lying).empty());
}

TEST_CASE("generator tokens render with the caret form") {
    CHECK(GeneratorSymbol{"a", -1}.token() == "a^-1");
    CHECK(parse_generator_token("a^-1") == GeneratorSymbol{"a", -1});
    CHECK(parse_generator_token("a") == GeneratorSymbol{"a", 1});
    CHECK_FALSE(parse_generator_token("").has_value());
    CHECK_FALSE(parse_generator_token("a b").has_value());
    CHECK_FALSE(parse_generator_token("a^b").has_value());
}
