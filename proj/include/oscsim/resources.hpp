#pragma once

#include "oscsim/circuit.hpp"

namespace oscsim {

/// Deterministic circuit metrics over the decomposed gate stream.
/// total_gates counts single-qubit unitaries plus CX; depth is ASAP-scheduled
/// per qubit over the same stream; width includes scratch ancillas used by
/// multi-controlled decompositions.
struct ResourceReport {
    int width = 0;
    long long depth = 0;
    long long total_gates = 0;
    long long one_qubit_gates = 0;
    long long cx_gates = 0;
};

/// Fixed decomposition table (documented in resources.cpp):
///   CCX = 6 CX + 9 1q; MCX with c >= 3 controls = (2c-3) CCX on c-2 clean
///   ancillas; controlled single-qubit unitaries = 2 CX + 3 1q; Ry/Rz/Phase/H
///   count as one 1q gate; adders and comparators expand to staircase /
///   borrow-chain CCX networks.
ResourceReport resource_report(const Circuit& c);

}  // namespace oscsim
