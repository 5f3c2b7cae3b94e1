#pragma once

#include "convcode/equivalence.hpp"
#include "convcode/polymatrix.hpp"
#include "convcode/statespace.hpp"
#include "convcode/wam.hpp"

namespace convcode::examples {

// Built-in gallery of small encoders and systems with wired-in expected
// results.  The self-test replays these against the library and the
// sample files ship the same objects in text form.

// Degree-2 rate 2/4 binary encoder with Forney indices (2, 0):
// [[z, 1+z^2, 1+z, z+z^2], [1, 0, 1, 1]].
PolyMatrix rate24_encoder();
// Its controller form and weight adjacency matrix.
StateSpace rate24_controller();
Wam rate24_wam();

// Unit-memory rate 2/3 binary encoder [[1, z, 1+z], [0, 1, z]] used by
// the feedback walkthrough.
PolyMatrix rate23_encoder();
StateSpace rate23_controller();
// Feedback move (I, I, M) that abandons reducedness but keeps the code:
// the moved system realizes [[1, z, 1+z], [z, 1+z^2, z^2]].
FeedbackWitness rate23_feedback();
PolyMatrix rate23_moved_encoder();

// Canonical order-one ternary system whose encoder [[0, 1, 1+2z],
// [1, 0, z]] is semi-reduced but not reduced.
StateSpace order_one_system();
PolyMatrix order_one_encoder();

// Canonical system realizing the catastrophic encoder (1+z, 1+z^2): the
// rank condition fails exactly at the nonzero-lambda pencil clause.
StateSpace nonbasic_system();

// Two inequivalent [6,3] binary block codes sharing the weight
// enumerator 1+3W^2+3W^4+W^6.
Mat block_code_pair(bool second);
WeightEnum block_code_enumerator();

// Two inequivalent binary codes with a zero Forney index whose
// controller forms share the weight adjacency matrix.
PolyMatrix zero_index_pair(bool second);
Wam zero_index_wam();

}  // namespace convcode::examples
