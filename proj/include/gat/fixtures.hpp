#ifndef GAT_FIXTURES_HPP
#define GAT_FIXTURES_HPP

#include "gat/document.hpp"

namespace gat {
namespace fixtures {

/// Z/2 = {e, t} with generator t.
GroupSpec z_mod_2();
/// The symmetric group on three points, generated by a 3-cycle c and a
/// transposition t; the Cayley table is built from permutation
/// composition with the identity at index 0.
GroupSpec s3();
GroupSpec z1();
GroupSpec z2();
GroupSpec f1();
GroupSpec f2();

/// Words over {a, b} with equally many a and b, as a Z-automaton.
GAutomaton aeq();
/// The same language with free-group weights over F_1.
GAutomaton aeq_f1();
/// { a^n b^n : n >= 1 } as a Z-automaton.
GAutomaton anbn();
/// { eps } + { a^n b^n c^n : n >= 1 } as a Z^2 counter automaton.
GAutomaton anbncn();
/// { a^(2n) } as a Z/2-automaton (one state, one loop weighted t).
GAutomaton parity_z2();

const std::vector<Fixture>& all();
const Fixture& by_name(const std::string& name);

}  // namespace fixtures
}  // namespace gat

#endif
