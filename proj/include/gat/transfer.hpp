#ifndef GAT_TRANSFER_HPP
#define GAT_TRANSFER_HPP

#include <string>
#include <vector>

#include "gat/gautomaton.hpp"
#include "gat/group.hpp"
#include "gat/machine.hpp"

namespace gat {

/// A machine recognizing the word problem of `group` over its generator
/// tokens, together with the class it certifies for that word problem.
struct WordProblemMachine {
    Machine machine;
    GroupSpec group;
    MachineClass certificate = MachineClass::Fsa;

    bool operator==(const WordProblemMachine&) const = default;
};

/// Where a product state/edge came from. Rules:
///   "pair"          -- letter edge of P composed with a token edge of N
///   "identity-lift" -- identity-weight edge of P, N coordinate unchanged
///   "n-eps-lift"    -- epsilon-input edge of N, P coordinate unchanged
///   "p-eps-pair"    -- epsilon-letter edge of P composed with a token
///                      edge of N
struct ProductProvenance {
    std::vector<std::pair<std::string, std::string>> state_factors;
    struct EdgeOrigin {
        int p_edge = -1;
        int n_edge = -1;
        std::string rule;

        bool operator==(const EdgeOrigin&) const = default;
    };
    std::vector<EdgeOrigin> edge_origins;

    bool operator==(const ProductProvenance&) const = default;
};

struct ProductMachine {
    Machine machine;
    ProductProvenance provenance;

    bool operator==(const ProductMachine&) const = default;
};

/// The product construction: states are reachable pairs (p, q), the start
/// pair is (start, start), accept pairs are exactly pairs of factor accept
/// states, and each P edge (x, g) composes with each N edge reading a
/// token whose generator image is g into an edge (x, instruction).
/// Unreachable pairs are pruned during construction.
///
/// `p` must be normalized and N's input tokens must be exactly the
/// generator tokens of P's group.
ProductMachine product(const GAutomaton& p, const WordProblemMachine& n);

/// Finite group: states are the group elements, the identity is both
/// start and accept, and reading a generator token multiplies on the
/// right. No tape.
WordProblemMachine wp_machine_finite(const GroupSpec& spec);

/// Free group: a pushdown machine whose stack holds the reduced word.
/// Reading g pops a top g^-1 and pushes g otherwise; acceptance via a
/// guard edge that sees the bottom marker.
WordProblemMachine wp_machine_free(const GroupSpec& spec);

/// Free abelian Z^k: a linear bounded machine with k signed-unary counter
/// zones on the tape, separated by dedicated separator symbols, each zone
/// a sign cell plus a unary magnitude block. Every generator token runs
/// an increment/decrement program over epsilon-input edges; acceptance
/// checks that every zone reads zero. Space multiplier 2k+3.
WordProblemMachine wp_machine_zn(int k);

/// True iff N is deterministic, P has no epsilon-letter edges, no state
/// of P has two outgoing edges sharing a letter, and no state of P has
/// two outgoing edges with the same group element. When true, the built
/// product is deterministic as well.
bool product_preserves_determinism(const GAutomaton& p, const WordProblemMachine& n);

}  // namespace gat

#endif
