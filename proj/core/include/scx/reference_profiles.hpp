#pragma once

// Fixed profiles reproduced verbatim from the worked examples the library is
// validated against.

#include "scx/profile.hpp"

namespace scx::reference {

/// Three alternatives x1, x2, x3 over five states; plurality (least index)
/// picks x1 in r1 and x2 in r2 while the {x1, x2} restrictions agree.
Profile example2_r1();
Profile example2_r2();

/// First-somewhere rule: {x, y} on a profile whose top two are always x, y.
Profile note_pair_profile();
/// GIIA pair for the first-somewhere rule on {x, z}.
Profile note_giia_r();
Profile note_giia_r_prime();

/// Weak-Condorcet rule: {x} then {x, w}.
Profile example3_r();
Profile example3_r_prime();

/// Unique weak winners x then y with equal {x, y} restrictions (m = 3, n = 6).
Profile prop2_r1();
Profile prop2_r2();

/// Plurality {x} then {y} with equal {x, y} restrictions (m = 3, n = 7).
Profile example4_r();
Profile example4_r_prime();

/// Plurality picks the Condorcet loser x; Borda 11/14/13/12.
Profile example5();
/// Strict winner x; Borda winner y; Borda 14/15/9/12.
Profile example6();

}  // namespace scx::reference
