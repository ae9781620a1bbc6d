#include "oscsim/simulator.hpp"

#include <cmath>

namespace oscsim {

namespace {

struct FixedBits {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;
};

FixedBits control_bits(const Gate& g, int width) {
    FixedBits f;
    for (const auto& c : g.controls) {
        const std::uint64_t s = qubit_stride(c.qubit, width);
        f.mask |= s;
        if (c.value) f.value |= s;
    }
    return f;
}

/// Calls fn(idx) for every index with idx & mask == value.
template <typename Fn>
void for_each_matching(std::uint64_t dim, FixedBits f, Fn&& fn) {
    const std::uint64_t free_mask = (dim - 1) & ~f.mask;
    std::uint64_t s = 0;
    while (true) {
        fn(f.value | s);
        s = (s - free_mask) & free_mask;
        if (s == 0) break;
    }
}

void apply_1q(Vec& psi, const Gate& g, int width, const cplx m00, const cplx m01, const cplx m10,
              const cplx m11) {
    const std::uint64_t dim = std::uint64_t(1) << width;
    const std::uint64_t ts = qubit_stride(g.targets[0], width);
    FixedBits f = control_bits(g, width);
    f.mask |= ts;  // enumerate the target-0 half of each pair
    cplx* a = psi.data();
    for_each_matching(dim, f, [&](std::uint64_t i) {
        const cplx a0 = a[i];
        const cplx a1 = a[i | ts];
        a[i] = m00 * a0 + m01 * a1;
        a[i | ts] = m10 * a0 + m11 * a1;
    });
}

void apply_diag(Vec& psi, const Gate& g, int width, const cplx d0, const cplx d1) {
    const std::uint64_t dim = std::uint64_t(1) << width;
    const std::uint64_t ts = qubit_stride(g.targets[0], width);
    const FixedBits f = control_bits(g, width);
    cplx* a = psi.data();
    for_each_matching(dim, f, [&](std::uint64_t i) { a[i] *= (i & ts) ? d1 : d0; });
}

}  // namespace

Vec zero_state(int width) { return basis_state(width, 0); }

Vec basis_state(int width, std::uint64_t index) {
    Vec v = Vec::Zero(std::int64_t(1) << width);
    v[Eigen::Index(index)] = 1.0;
    return v;
}

std::uint64_t extract_value(std::uint64_t index, const std::vector<int>& qubits, int width) {
    std::uint64_t v = 0;
    for (int q : qubits) v = (v << 1) | ((index >> (width - 1 - q)) & 1);
    return v;
}

void apply_gate(Vec& psi, const Gate& g, int width) {
    const std::uint64_t dim = std::uint64_t(1) << width;
    cplx* a = psi.data();
    switch (g.kind) {
        case GateKind::X: {
            const std::uint64_t ts = qubit_stride(g.targets[0], width);
            FixedBits f = control_bits(g, width);
            f.mask |= ts;
            for_each_matching(dim, f, [&](std::uint64_t i) { std::swap(a[i], a[i | ts]); });
            break;
        }
        case GateKind::Z:
            apply_diag(psi, g, width, 1.0, -1.0);
            break;
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            apply_1q(psi, g, width, r, r, r, -r);
            break;
        }
        case GateKind::Ry: {
            const double c = std::cos(g.param / 2), s = std::sin(g.param / 2);
            apply_1q(psi, g, width, c, -s, s, c);
            break;
        }
        case GateKind::Rz:
            apply_diag(psi, g, width, std::exp(cplx(0, -g.param / 2)), std::exp(cplx(0, g.param / 2)));
            break;
        case GateKind::Phase:
            apply_diag(psi, g, width, 1.0, std::exp(cplx(0, g.param)));
            break;
        case GateKind::GPhase: {
            const cplx ph = std::exp(cplx(0, g.param));
            const FixedBits f = control_bits(g, width);
            for_each_matching(dim, f, [&](std::uint64_t i) { a[i] *= ph; });
            break;
        }
        case GateKind::Swap: {
            const std::uint64_t s0 = qubit_stride(g.targets[0], width);
            const std::uint64_t s1 = qubit_stride(g.targets[1], width);
            FixedBits f = control_bits(g, width);
            f.mask |= s0 | s1;
            f.value |= s0;  // first target 1, second 0
            for_each_matching(dim, f, [&](std::uint64_t i) { std::swap(a[i], a[i ^ (s0 | s1)]); });
            break;
        }
        case GateKind::AddConst: {
            const int m = int(g.targets.size());
            const std::uint64_t vals = std::uint64_t(1) << m;
            const std::uint64_t k = g.constant & (vals - 1);
            if (k == 0) break;
            std::vector<std::uint64_t> offset(vals, 0);
            for (std::uint64_t v = 0; v < vals; ++v)
                for (int b = 0; b < m; ++b)
                    if ((v >> (m - 1 - b)) & 1) offset[v] |= qubit_stride(g.targets[b], width);
            FixedBits f = control_bits(g, width);
            f.mask |= register_mask(g.targets, width);
            std::vector<cplx> tmp(vals);
            for_each_matching(dim, f, [&](std::uint64_t base) {
                for (std::uint64_t v = 0; v < vals; ++v) tmp[(v + k) & (vals - 1)] = a[base | offset[v]];
                for (std::uint64_t v = 0; v < vals; ++v) a[base | offset[v]] = tmp[v];
            });
            break;
        }
        case GateKind::CmpGeConst: {
            const std::uint64_t fs = qubit_stride(g.flag, width);
            FixedBits f = control_bits(g, width);
            f.mask |= fs;
            for_each_matching(dim, f, [&](std::uint64_t i) {
                if (extract_value(i, g.targets, width) >= g.constant) std::swap(a[i], a[i | fs]);
            });
            break;
        }
        case GateKind::CmpGeReg: {
            const std::uint64_t fs = qubit_stride(g.flag, width);
            FixedBits f = control_bits(g, width);
            f.mask |= fs;
            for_each_matching(dim, f, [&](std::uint64_t i) {
                if (extract_value(i, g.targets, width) >= extract_value(i, g.rhs, width))
                    std::swap(a[i], a[i | fs]);
            });
            break;
        }
    }
}

Vec run_circuit(const Circuit& c, const Vec& psi_in) {
    const std::int64_t dim = std::int64_t(1) << c.width();
    if (psi_in.size() != dim) throw std::invalid_argument("statevector dimension mismatch");
    Vec psi = psi_in;
    for (const auto& g : c.gates()) apply_gate(psi, g, c.width());
    return psi;
}

Projection project(const Vec& psi, const QubitSpan& reg, std::uint64_t value, int width) {
    const auto qubits = reg.qubits();
    Vec out = Vec::Zero(psi.size());
    double p = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        if (extract_value(std::uint64_t(i), qubits, width) == value) {
            p += std::norm(psi[i]);
            out[i] = psi[i];
        }
    }
    if (p > 0.0) out /= std::sqrt(p);
    return {std::move(out), p};
}

Projection project_zero(const Vec& psi, const std::vector<int>& qubits, int width) {
    std::uint64_t mask = 0;
    for (int q : qubits) mask |= qubit_stride(q, width);
    Vec out = Vec::Zero(psi.size());
    double p = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        if ((std::uint64_t(i) & mask) == 0) {
            p += std::norm(psi[i]);
            out[i] = psi[i];
        }
    }
    if (p > 0.0) out /= std::sqrt(p);
    return {std::move(out), p};
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
    const Eigen::Index dim = Eigen::Index(1) << c.width();
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) u.col(j) = run_circuit(c, basis_state(c.width(), j));
    return u;
}

}  // namespace oscsim
