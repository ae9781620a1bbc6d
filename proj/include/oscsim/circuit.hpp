#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscsim {

using cplx = std::complex<double>;

/// Contiguous range of qubits belonging to one named register.
/// Qubit 0 is the most significant bit of the statevector index, and the
/// first qubit of a register is the most significant bit of its value.
struct QubitSpan {
    int first = 0;
    int width = 0;

    std::vector<int> qubits() const {
        std::vector<int> q(width);
        for (int i = 0; i < width; ++i) q[i] = first + i;
        return q;
    }
    bool contains(int qubit) const { return qubit >= first && qubit < first + width; }
};

/// Named registers with widths. Total width is capped so that dense
/// simulation stays within memory bounds.
class RegisterLayout {
public:
    static constexpr int kDefaultCap = 26;

    RegisterLayout() = default;
    explicit RegisterLayout(int cap) : cap_(cap) {}

    QubitSpan add(const std::string& name, int width) {
        if (width < 1) throw std::invalid_argument("register width must be >= 1");
        for (const auto& r : regs_)
            if (r.first == name) throw std::invalid_argument("duplicate register name: " + name);
        if (total_ + width > cap_)
            throw std::length_error("register layout exceeds qubit cap (" + std::to_string(cap_) + ")");
        QubitSpan span{total_, width};
        regs_.emplace_back(name, span);
        total_ += width;
        return span;
    }

    QubitSpan reg(const std::string& name) const {
        for (const auto& r : regs_)
            if (r.first == name) return r.second;
        throw std::out_of_range("no register named " + name);
    }
    bool has(const std::string& name) const {
        for (const auto& r : regs_)
            if (r.first == name) return true;
        return false;
    }

    int total() const { return total_; }
    int cap() const { return cap_; }
    const std::vector<std::pair<std::string, QubitSpan>>& registers() const { return regs_; }

private:
    std::vector<std::pair<std::string, QubitSpan>> regs_;
    int total_ = 0;
    int cap_ = kDefaultCap;
};

enum class GateKind {
    X,
    Z,
    H,
    Ry,          // exp(-i theta Y / 2)
    Rz,          // diag(e^{-i theta/2}, e^{+i theta/2})
    Phase,       // diag(1, e^{i phi})
    GPhase,      // e^{i phi} on every amplitude matching the controls
    Swap,
    AddConst,    // |v> -> |v + k mod 2^m> on a register
    CmpGeConst,  // flag ^= [x >= k]
    CmpGeReg,    // flag ^= [x >= y]
};

/// Control satisfied when the qubit reads `value`.
struct Control {
    int qubit;
    bool value;
};

struct Gate {
    GateKind kind;
    std::vector<int> targets;        // register qubits, MSB first
    std::vector<int> rhs;            // CmpGeReg right-hand register
    int flag = -1;                   // comparator output qubit
    double param = 0.0;              // rotation angle / phase
    std::uint64_t constant = 0;      // AddConst / CmpGeConst immediate
    std::vector<Control> controls;
};

Gate adjoint_gate(const Gate& g);

/// Ordered gate list over a fixed register layout.
class Circuit {
public:
    Circuit() = default;
    explicit Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

    const RegisterLayout& layout() const { return layout_; }
    const std::vector<Gate>& gates() const { return gates_; }
    int width() const { return layout_.total(); }
    std::size_t size() const { return gates_.size(); }

    void append(Gate g);

    // Single-gate helpers. `ctrls` are appended verbatim.
    void x(int q, std::vector<Control> ctrls = {});
    void z(int q, std::vector<Control> ctrls = {});
    void h(int q, std::vector<Control> ctrls = {});
    void ry(int q, double theta, std::vector<Control> ctrls = {});
    void rz(int q, double theta, std::vector<Control> ctrls = {});
    void phase(int q, double phi, std::vector<Control> ctrls = {});
    void gphase(double phi, std::vector<Control> ctrls = {});
    void swap(int a, int b, std::vector<Control> ctrls = {});
    void add_const(const QubitSpan& reg, std::uint64_t k, std::vector<Control> ctrls = {});
    void cmp_ge_const(const QubitSpan& x, std::uint64_t k, int flag, std::vector<Control> ctrls = {});
    void cmp_ge_reg(const QubitSpan& x, const QubitSpan& y, int flag, std::vector<Control> ctrls = {});

    /// Multi-controlled X writing to `target`.
    void mcx(const std::vector<Control>& ctrls, int target);
    /// Phase flip (-1) on the subspace where all controls match.
    void mcz(const std::vector<Control>& ctrls);

    /// Gates of `frag` appended in order. Layouts must have equal width.
    void extend(const Circuit& frag);
    /// Gates of `frag` appended with extra controls on each gate.
    void extend_controlled(const Circuit& frag, const std::vector<Control>& ctrls);
    /// Inverse circuit (reversed order, each gate inverted).
    Circuit adjoint() const;

    /// Line-oriented text form, one gate per line; stable across runs.
    std::string dump() const;

private:
    void validate(const Gate& g) const;

    RegisterLayout layout_;
    std::vector<Gate> gates_;
};

std::uint64_t register_mask(const std::vector<int>& qubits, int width);

}  // namespace oscsim
