#pragma once

#include "circuit.hpp"

namespace randcliff {

/// A fixed 5-qubit encoder (k = 1) whose code has distance 3, the smallest
/// parameters at which a single error is correctable. Used as a known-answer
/// fixture for the distance engines.
Circuit five_qubit_code_circuit();

} // namespace randcliff
