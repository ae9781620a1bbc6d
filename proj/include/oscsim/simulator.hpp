#pragma once

#include <Eigen/Dense>

#include "oscsim/circuit.hpp"

namespace oscsim {

using Vec = Eigen::VectorXcd;

inline std::uint64_t qubit_stride(int qubit, int width) {
    return std::uint64_t(1) << (width - 1 - qubit);
}

Vec zero_state(int width);
Vec basis_state(int width, std::uint64_t index);

void apply_gate(Vec& psi, const Gate& g, int width);

/// Applies the circuit in order. Statevector dimension must be 2^width.
Vec run_circuit(const Circuit& c, const Vec& psi_in);

struct Projection {
    Vec state;           ///< renormalized; zero vector when probability == 0
    double probability;  ///< sum of |amplitude|^2 over the matching subspace
};

/// Projects a register onto a basis value, renormalizing the remainder.
Projection project(const Vec& psi, const QubitSpan& reg, std::uint64_t value, int width);

/// Projects the listed qubits onto |0>.
Projection project_zero(const Vec& psi, const std::vector<int>& qubits, int width);

/// Register value read out of a basis index.
std::uint64_t extract_value(std::uint64_t index, const std::vector<int>& qubits, int width);

/// Reconstructs the full unitary by running every basis state (small widths).
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

}  // namespace oscsim
