#include "oscsim/circuit.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <set>
#include <sstream>

namespace oscsim {

namespace {

const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::Ry: return "RY";
        case GateKind::Rz: return "RZ";
        case GateKind::Phase: return "PHASE";
        case GateKind::GPhase: return "GPHASE";
        case GateKind::Swap: return "SWAP";
        case GateKind::AddConst: return "ADD";
        case GateKind::CmpGeConst: return "CMPGE";
        case GateKind::CmpGeReg: return "CMPGER";
    }
    return "?";
}

std::string fmt_param(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Gate adjoint_gate(const Gate& g) {
    Gate inv = g;
    switch (g.kind) {
        case GateKind::X:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::Swap:
        case GateKind::CmpGeConst:
        case GateKind::CmpGeReg:
            break;  // self-inverse
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::Phase:
        case GateKind::GPhase:
            inv.param = -g.param;
            break;
        case GateKind::AddConst: {
            const std::uint64_t mod = std::uint64_t(1) << g.targets.size();
            inv.constant = (mod - (g.constant % mod)) % mod;
            break;
        }
    }
    return inv;
}

void Circuit::validate(const Gate& g) const {
    const int w = layout_.total();
    std::set<int> seen;
    auto check = [&](int q, const char* what) {
        if (q < 0 || q >= w)
            throw std::out_of_range(std::string(what) + " qubit out of layout range");
        if (!seen.insert(q).second)
            throw std::invalid_argument(std::string("qubit used twice in one gate: ") + std::to_string(q));
    };
    for (int q : g.targets) check(q, "target");
    for (int q : g.rhs) check(q, "rhs");
    if (g.flag >= 0) check(g.flag, "flag");
    for (const auto& c : g.controls) check(c.qubit, "control");

    switch (g.kind) {
        case GateKind::X:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::Phase:
            if (g.targets.size() != 1) throw std::invalid_argument("expected one target qubit");
            break;
        case GateKind::Swap:
            if (g.targets.size() != 2) throw std::invalid_argument("swap expects two targets");
            break;
        case GateKind::GPhase:
            if (!g.targets.empty()) throw std::invalid_argument("gphase takes no targets");
            break;
        case GateKind::AddConst:
            if (g.targets.empty()) throw std::invalid_argument("add needs a register");
            break;
        case GateKind::CmpGeConst:
            if (g.targets.empty() || g.flag < 0) throw std::invalid_argument("comparator needs register and flag");
            break;
        case GateKind::CmpGeReg:
            if (g.targets.empty() || g.rhs.size() != g.targets.size() || g.flag < 0)
                throw std::invalid_argument("register comparator needs equal-width registers and flag");
            break;
    }
    if (!std::isfinite(g.param)) throw std::invalid_argument("non-finite gate parameter");
}

void Circuit::append(Gate g) {
    validate(g);
    gates_.push_back(std::move(g));
}

void Circuit::x(int q, std::vector<Control> c) { append({GateKind::X, {q}, {}, -1, 0.0, 0, std::move(c)}); }
void Circuit::z(int q, std::vector<Control> c) { append({GateKind::Z, {q}, {}, -1, 0.0, 0, std::move(c)}); }
void Circuit::h(int q, std::vector<Control> c) { append({GateKind::H, {q}, {}, -1, 0.0, 0, std::move(c)}); }
void Circuit::ry(int q, double t, std::vector<Control> c) { append({GateKind::Ry, {q}, {}, -1, t, 0, std::move(c)}); }
void Circuit::rz(int q, double t, std::vector<Control> c) { append({GateKind::Rz, {q}, {}, -1, t, 0, std::move(c)}); }
void Circuit::phase(int q, double p, std::vector<Control> c) { append({GateKind::Phase, {q}, {}, -1, p, 0, std::move(c)}); }
void Circuit::gphase(double p, std::vector<Control> c) { append({GateKind::GPhase, {}, {}, -1, p, 0, std::move(c)}); }
void Circuit::swap(int a, int b, std::vector<Control> c) { append({GateKind::Swap, {a, b}, {}, -1, 0.0, 0, std::move(c)}); }

void Circuit::add_const(const QubitSpan& r, std::uint64_t k, std::vector<Control> c) {
    append({GateKind::AddConst, r.qubits(), {}, -1, 0.0, k, std::move(c)});
}
void Circuit::cmp_ge_const(const QubitSpan& x, std::uint64_t k, int flag, std::vector<Control> c) {
    if (x.contains(flag)) throw std::invalid_argument("comparator flag lies inside compared register");
    append({GateKind::CmpGeConst, x.qubits(), {}, flag, 0.0, k, std::move(c)});
}
void Circuit::cmp_ge_reg(const QubitSpan& x, const QubitSpan& y, int flag, std::vector<Control> c) {
    if (x.contains(flag) || y.contains(flag))
        throw std::invalid_argument("comparator flag lies inside compared register");
    append({GateKind::CmpGeReg, x.qubits(), y.qubits(), flag, 0.0, 0, std::move(c)});
}

void Circuit::mcx(const std::vector<Control>& ctrls, int target) {
    append({GateKind::X, {target}, {}, -1, 0.0, 0, ctrls});
}

void Circuit::mcz(const std::vector<Control>& ctrls) {
    if (ctrls.empty()) throw std::invalid_argument("mcz needs at least one qubit");
    // Z on the last qubit of the pattern, controlled on the rest.
    std::vector<Control> rest(ctrls.begin(), ctrls.end() - 1);
    const Control last = ctrls.back();
    if (last.value) {
        append({GateKind::Z, {last.qubit}, {}, -1, 0.0, 0, rest});
    } else {
        x(last.qubit);
        append({GateKind::Z, {last.qubit}, {}, -1, 0.0, 0, rest});
        x(last.qubit);
    }
}

void Circuit::extend(const Circuit& frag) {
    if (frag.width() != width()) throw std::invalid_argument("fragment width mismatch");
    for (const auto& g : frag.gates_) append(g);
}

void Circuit::extend_controlled(const Circuit& frag, const std::vector<Control>& ctrls) {
    if (frag.width() != width()) throw std::invalid_argument("fragment width mismatch");
    for (const auto& g : frag.gates_) {
        Gate gc = g;
        for (const auto& c : ctrls) gc.controls.push_back(c);
        append(gc);
    }
}

Circuit Circuit::adjoint() const {
    Circuit inv(layout_);
    inv.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) inv.gates_.push_back(adjoint_gate(*it));
    return inv;
}

std::string Circuit::dump() const {
    std::ostringstream os;
    for (const auto& g : gates_) {
        os << kind_name(g.kind);
        for (std::size_t i = 0; i < g.targets.size(); ++i) os << (i ? "," : " ") << g.targets[i];
        if (!g.rhs.empty()) {
            os << "|";
            for (std::size_t i = 0; i < g.rhs.size(); ++i) os << (i ? "," : "") << g.rhs[i];
        }
        if (g.flag >= 0) os << " flag:" << g.flag;
        for (const auto& c : g.controls) os << " c:" << c.qubit << (c.value ? "+" : "-");
        switch (g.kind) {
            case GateKind::Ry:
            case GateKind::Rz:
            case GateKind::Phase:
            case GateKind::GPhase:
                os << " p:" << fmt_param(g.param);
                break;
            case GateKind::AddConst:
            case GateKind::CmpGeConst:
                os << " k:" << g.constant;
                break;
            default:
                break;
        }
        os << "\n";
    }
    return os.str();
}

std::uint64_t register_mask(const std::vector<int>& qubits, int width) {
    std::uint64_t m = 0;
    for (int q : qubits) m |= std::uint64_t(1) << (width - 1 - q);
    return m;
}

}  // namespace oscsim
