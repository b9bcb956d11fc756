#include "gat/group.hpp"

#include <algorithm>
#include <set>

namespace gat {

std::string_view family_name(GroupFamily family) {
    switch (family) {
        case GroupFamily::Finite: return "finite";
        case GroupFamily::FreeAbelian: return "free-abelian";
        case GroupFamily::Free: return "free";
    }
    return "?";
}

GroupElement GroupElement::finite(int index) {
    GroupElement e;
    e.family = GroupFamily::Finite;
    e.finite_index = index;
    return e;
}

GroupElement GroupElement::vector(std::vector<Integer> coords) {
    GroupElement e;
    e.family = GroupFamily::FreeAbelian;
    e.coords = std::move(coords);
    return e;
}

GroupElement GroupElement::free_word(std::vector<int> letters) {
    GroupElement e;
    e.family = GroupFamily::Free;
    e.word = std::move(letters);
    return e;
}

bool GroupElement::operator<(const GroupElement& o) const {
    if (family != o.family) return family < o.family;
    if (finite_index != o.finite_index) return finite_index < o.finite_index;
    if (coords != o.coords) return coords < o.coords;
    return word < o.word;
}

namespace {

std::vector<std::string> default_names(int k) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        if (i < 26) {
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        } else {
            names.push_back("g" + std::to_string(i + 1));
        }
    }
    return names;
}

bool reduced(const std::vector<int>& word) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] == -word[i + 1]) return false;
    }
    return true;
}

}  // namespace

GroupSpec GroupSpec::finite_group(std::vector<std::vector<int>> cayley,
                                  const std::vector<std::pair<std::string, int>>& gens) {
    GroupSpec spec;
    spec.family = GroupFamily::Finite;
    spec.order = static_cast<int>(cayley.size());
    spec.cayley = std::move(cayley);
    for (const auto& [name, index] : gens) {
        spec.generators.push_back({GeneratorSymbol{name, 1}, GroupElement::finite(index)});
        spec.generators.push_back(
            {GeneratorSymbol{name, -1}, invert(spec, GroupElement::finite(index))});
    }
    return spec;
}

GroupSpec GroupSpec::free_abelian(int k) { return free_abelian(k, default_names(k)); }

GroupSpec GroupSpec::free_abelian(int k, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != k) throw Error("free_abelian: need one name per rank");
    GroupSpec spec;
    spec.family = GroupFamily::FreeAbelian;
    spec.rank = k;
    for (int i = 0; i < k; ++i) {
        std::vector<Integer> plus(static_cast<std::size_t>(k), 0);
        plus[static_cast<std::size_t>(i)] = 1;
        std::vector<Integer> minus(static_cast<std::size_t>(k), 0);
        minus[static_cast<std::size_t>(i)] = -1;
        spec.generators.push_back({GeneratorSymbol{names[static_cast<std::size_t>(i)], 1},
                                   GroupElement::vector(std::move(plus))});
        spec.generators.push_back({GeneratorSymbol{names[static_cast<std::size_t>(i)], -1},
                                   GroupElement::vector(std::move(minus))});
    }
    return spec;
}

GroupSpec GroupSpec::free_group(int k) { return free_group(k, default_names(k)); }

GroupSpec GroupSpec::free_group(int k, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != k) throw Error("free_group: need one name per rank");
    GroupSpec spec;
    spec.family = GroupFamily::Free;
    spec.rank = k;
    for (int i = 0; i < k; ++i) {
        spec.generators.push_back({GeneratorSymbol{names[static_cast<std::size_t>(i)], 1},
                                   GroupElement::free_word({i + 1})});
        spec.generators.push_back({GeneratorSymbol{names[static_cast<std::size_t>(i)], -1},
                                   GroupElement::free_word({-(i + 1)})});
    }
    return spec;
}

const Generator* GroupSpec::find_generator(const GeneratorSymbol& symbol) const {
    for (const auto& g : generators) {
        if (g.symbol == symbol) return &g;
    }
    return nullptr;
}

std::vector<std::string> GroupSpec::generator_tokens() const {
    std::vector<std::string> tokens;
    tokens.reserve(generators.size());
    for (const auto& g : generators) tokens.push_back(g.symbol.token());
    return tokens;
}

std::vector<Diagnostic> validate_group(const GroupSpec& spec) {
    std::vector<Diagnostic> diags;
    auto bad = [&](std::string subject, std::string message) {
        diags.push_back({std::move(subject), std::move(message)});
    };

    switch (spec.family) {
        case GroupFamily::Finite: {
            const int n = spec.order;
            if (n <= 0) {
                bad("order", "finite group order must be positive");
                return diags;
            }
            if (static_cast<int>(spec.cayley.size()) != n) {
                bad("cayley", "table must have `order` rows");
                return diags;
            }
            for (int i = 0; i < n; ++i) {
                if (static_cast<int>(spec.cayley[static_cast<std::size_t>(i)].size()) != n) {
                    bad("cayley row " + std::to_string(i), "row length differs from order");
                    return diags;
                }
            }
            for (int i = 0; i < n; ++i) {
                std::set<int> row, col;
                for (int j = 0; j < n; ++j) {
                    int r = spec.cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    int c = spec.cayley[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                    if (r < 0 || r >= n || c < 0 || c >= n) {
                        bad("cayley entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
                            "index out of range");
                        return diags;
                    }
                    row.insert(r);
                    col.insert(c);
                }
                if (static_cast<int>(row.size()) != n)
                    bad("cayley row " + std::to_string(i), "not a Latin square row");
                if (static_cast<int>(col.size()) != n)
                    bad("cayley column " + std::to_string(i), "not a Latin square column");
            }
            for (int j = 0; j < n; ++j) {
                if (spec.cayley[0][static_cast<std::size_t>(j)] != j)
                    bad("cayley row 0", "row 0 must be the identity row");
                if (spec.cayley[static_cast<std::size_t>(j)][0] != j)
                    bad("cayley column 0", "column 0 must be the identity column");
            }
            break;
        }
        case GroupFamily::FreeAbelian:
        case GroupFamily::Free:
            if (spec.rank <= 0) bad("rank", "rank must be positive");
            break;
    }

    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        const auto& g = spec.generators[i];
        const std::string subject = "generator '" + g.symbol.token() + "'";
        if (!parse_generator_token(g.symbol.name)) {
            bad(subject, "invalid generator name");
            continue;
        }
        if (g.symbol.exponent != 1 && g.symbol.exponent != -1) {
            bad(subject, "exponent must be +1 or -1");
            continue;
        }
        if (!element_fits(spec, g.image)) {
            bad(subject, "image does not fit the group");
            continue;
        }
        const Generator* inv = spec.find_generator(g.symbol.inverse());
        if (inv == nullptr) {
            bad(subject, "generator list is not closed under formal inversion");
        } else if (!(inv->image == invert(spec, g.image))) {
            bad(subject, "image of formal inverse is not the inverse image");
        }
    }
    return diags;
}

bool element_fits(const GroupSpec& spec, const GroupElement& a) {
    if (a.family != spec.family) return false;
    switch (spec.family) {
        case GroupFamily::Finite:
            return a.finite_index >= 0 && a.finite_index < spec.order && a.coords.empty() &&
                   a.word.empty();
        case GroupFamily::FreeAbelian:
            return static_cast<int>(a.coords.size()) == spec.rank && a.word.empty() &&
                   a.finite_index == 0;
        case GroupFamily::Free: {
            if (static_cast<int>(a.coords.size()) != 0 || a.finite_index != 0) return false;
            for (int letter : a.word) {
                if (letter == 0 || letter > spec.rank || letter < -spec.rank) return false;
            }
            return reduced(a.word);
        }
    }
    return false;
}

GroupElement identity(const GroupSpec& spec) {
    switch (spec.family) {
        case GroupFamily::Finite: return GroupElement::finite(0);
        case GroupFamily::FreeAbelian:
            return GroupElement::vector(std::vector<Integer>(static_cast<std::size_t>(spec.rank), 0));
        case GroupFamily::Free: return GroupElement::free_word({});
    }
    throw Error("identity: unknown family");
}

namespace {

void require_fits(const GroupSpec& spec, const GroupElement& a, const char* op) {
    if (!element_fits(spec, a)) {
        throw Error(std::string(op) + ": element does not belong to " +
                    std::string(family_name(spec.family)) + " group");
    }
}

}  // namespace

GroupElement multiply(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    require_fits(spec, a, "multiply");
    require_fits(spec, b, "multiply");
    switch (spec.family) {
        case GroupFamily::Finite:
            return GroupElement::finite(
                spec.cayley[static_cast<std::size_t>(a.finite_index)]
                           [static_cast<std::size_t>(b.finite_index)]);
        case GroupFamily::FreeAbelian: {
            std::vector<Integer> sum = a.coords;
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.coords[i];
            return GroupElement::vector(std::move(sum));
        }
        case GroupFamily::Free: {
            std::vector<int> out = a.word;
            for (int letter : b.word) {
                if (!out.empty() && out.back() == -letter) {
                    out.pop_back();
                } else {
                    out.push_back(letter);
                }
            }
            return GroupElement::free_word(std::move(out));
        }
    }
    throw Error("multiply: unknown family");
}

GroupElement invert(const GroupSpec& spec, const GroupElement& a) {
    require_fits(spec, a, "invert");
    switch (spec.family) {
        case GroupFamily::Finite: {
            const auto& row = spec.cayley[static_cast<std::size_t>(a.finite_index)];
            for (int j = 0; j < spec.order; ++j) {
                if (row[static_cast<std::size_t>(j)] == 0) return GroupElement::finite(j);
            }
            throw Error("invert: Cayley row has no identity entry");
        }
        case GroupFamily::FreeAbelian: {
            std::vector<Integer> neg = a.coords;
            for (auto& c : neg) c = -c;
            return GroupElement::vector(std::move(neg));
        }
        case GroupFamily::Free: {
            std::vector<int> rev(a.word.rbegin(), a.word.rend());
            for (int& letter : rev) letter = -letter;
            return GroupElement::free_word(std::move(rev));
        }
    }
    throw Error("invert: unknown family");
}

bool is_identity(const GroupSpec& spec, const GroupElement& a) {
    require_fits(spec, a, "is_identity");
    switch (spec.family) {
        case GroupFamily::Finite: return a.finite_index == 0;
        case GroupFamily::FreeAbelian:
            return std::all_of(a.coords.begin(), a.coords.end(),
                               [](const Integer& c) { return c == 0; });
        case GroupFamily::Free: return a.word.empty();
    }
    return false;
}

GroupElement evaluate_word(const GroupSpec& spec, const std::vector<GeneratorSymbol>& word) {
    GroupElement acc = identity(spec);
    for (const auto& symbol : word) {
        const Generator* gen = spec.find_generator(symbol);
        if (gen == nullptr) throw Error("evaluate_word: unknown generator '" + symbol.token() + "'");
        acc = multiply(spec, acc, gen->image);
    }
    return acc;
}

Integer element_norm(const GroupSpec& spec, const GroupElement& a) {
    require_fits(spec, a, "element_norm");
    switch (spec.family) {
        case GroupFamily::Finite: return a.finite_index == 0 ? 0 : 1;
        case GroupFamily::FreeAbelian: {
            Integer best = 0;
            for (const auto& c : a.coords) {
                Integer mag = c < 0 ? Integer(-c) : c;
                if (mag > best) best = mag;
            }
            return best;
        }
        case GroupFamily::Free: return Integer(a.word.size());
    }
    throw Error("element_norm: unknown family");
}

}  // namespace gat
