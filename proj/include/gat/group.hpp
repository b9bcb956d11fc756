#ifndef GAT_GROUP_HPP
#define GAT_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "gat/base.hpp"

namespace gat {

using Integer = boost::multiprecision::cpp_int;

enum class GroupFamily { Finite, FreeAbelian, Free };

std::string_view family_name(GroupFamily family);

/// One element of a concrete group. Exactly one payload is meaningful,
/// selected by `family`:
///   Finite      -- index into the Cayley table, identity is index 0
///   FreeAbelian -- integer vector of length rank
///   Free        -- reduced word over formal letters, +i / -i for the
///                  i-th letter (1-based) and its inverse
struct GroupElement {
    GroupFamily family = GroupFamily::Finite;
    int finite_index = 0;
    std::vector<Integer> coords;
    std::vector<int> word;

    static GroupElement finite(int index);
    static GroupElement vector(std::vector<Integer> coords);
    static GroupElement free_word(std::vector<int> letters);

    bool operator==(const GroupElement&) const = default;
    bool operator<(const GroupElement& o) const;
};

struct Generator {
    GeneratorSymbol symbol;
    GroupElement image;

    bool operator==(const Generator&) const = default;
};

/// A concrete group: a finite group given by its full multiplication
/// table, the free abelian group of rank k, or the free group of rank k.
/// The generator list is ordered and closed under formal inversion.
struct GroupSpec {
    GroupFamily family = GroupFamily::Finite;
    int order = 0;                         // Finite
    int rank = 0;                          // FreeAbelian / Free
    std::vector<std::vector<int>> cayley;  // Finite, order x order, row-major
    std::vector<Generator> generators;

    /// Finite group from a Cayley table plus (name, element index) pairs.
    /// Formal inverses of the named generators are added automatically.
    static GroupSpec finite_group(std::vector<std::vector<int>> cayley,
                                  const std::vector<std::pair<std::string, int>>& gens);

    /// Z^k with the standard generators e_1..e_k named a, b, c, ... and
    /// their formal inverses.
    static GroupSpec free_abelian(int k);
    static GroupSpec free_abelian(int k, const std::vector<std::string>& names);

    /// F_k with free-basis generators named a, b, c, ... and inverses.
    static GroupSpec free_group(int k);
    static GroupSpec free_group(int k, const std::vector<std::string>& names);

    const Generator* find_generator(const GeneratorSymbol& symbol) const;
    std::vector<std::string> generator_tokens() const;

    bool operator==(const GroupSpec&) const = default;
};

std::vector<Diagnostic> validate_group(const GroupSpec& spec);

GroupElement identity(const GroupSpec& spec);
GroupElement multiply(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupSpec& spec, const GroupElement& a);
bool is_identity(const GroupSpec& spec, const GroupElement& a);

/// Left-to-right product of the images of `word`. Unknown symbols throw.
GroupElement evaluate_word(const GroupSpec& spec, const std::vector<GeneratorSymbol>& word);

/// Search-budget metric: 0/1 for finite elements, max |coordinate| for
/// free abelian, reduced word length for free. Zero exactly on identity.
Integer element_norm(const GroupSpec& spec, const GroupElement& a);

/// True when `a` belongs to `spec`'s family with matching order/rank
/// and, for Free, a reduced payload.
bool element_fits(const GroupSpec& spec, const GroupElement& a);

}  // namespace gat

#endif
