#include "vqr/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "vqr/rng.hpp"

namespace vqr {

namespace {

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("statevector needs at least one qubit, got " +
                                std::to_string(num_qubits));
  }
  if (num_qubits > 30) {
    throw std::invalid_argument("statevector of " + std::to_string(num_qubits) +
                                " qubits exceeds the dense-array ceiling");
  }
}

}  // namespace

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  amplitudes_ = Amplitudes::Zero(Eigen::Index(1) << num_qubits);
  amplitudes_[0] = Complex(1.0, 0.0);
}

Statevector::Statevector(int num_qubits, std::uint64_t index)
    : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  const auto dim = std::uint64_t(1) << num_qubits;
  if (index >= dim) {
    throw std::invalid_argument("basis index " + std::to_string(index) +
                                " out of range for " + std::to_string(num_qubits) +
                                " qubits");
  }
  amplitudes_ = Amplitudes::Zero(Eigen::Index(dim));
  amplitudes_[Eigen::Index(index)] = Complex(1.0, 0.0);
}

bool gate_is_two_qubit(GateKind kind) {
  return kind == GateKind::CX || kind == GateKind::CZ;
}

bool gate_takes_angle(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::P:
      return true;
    default:
      return false;
  }
}

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:  return "h";
    case GateKind::X:  return "x";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::P:  return "p";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
  }
  return "?";
}

Eigen::Matrix2cd gate_matrix(GateKind kind, double angle) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (kind) {
    case GateKind::H:
      m << 1, 1, 1, -1;
      m *= 1.0 / std::sqrt(2.0);
      return m;
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::RX: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      m << c, -i * s, -i * s, c;
      return m;
    }
    case GateKind::RY: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      m << c, -s, s, c;
      return m;
    }
    case GateKind::RZ:
      m << std::exp(-i * (angle / 2)), 0, 0, std::exp(i * (angle / 2));
      return m;
    case GateKind::P:
      m << 1, 0, 0, std::exp(i * angle);
      return m;
    default:
      throw std::invalid_argument("gate_matrix: not a single-qubit gate");
  }
}

AngleExpr AngleExpr::literal(double value) {
  AngleExpr e;
  e.scale = value;
  return e;
}

AngleExpr AngleExpr::linear(int param, double scale) {
  AngleExpr e;
  e.scale = scale;
  e.terms.push_back({param, 0.0, 1.0});
  return e;
}

AngleExpr AngleExpr::affine_product(double scale, AngleTerm a, AngleTerm b) {
  AngleExpr e;
  e.scale = scale;
  e.terms = {a, b};
  return e;
}

double AngleExpr::evaluate(std::span<const double> values) const {
  double v = scale;
  for (const AngleTerm& t : terms) {
    if (t.param < 0 || t.param >= static_cast<int>(values.size())) {
      throw std::invalid_argument("angle expression references parameter " +
                                  std::to_string(t.param) +
                                  " outside the bound value table");
    }
    v *= t.offset + t.coeff * values[static_cast<std::size_t>(t.param)];
  }
  return v;
}

Gate make_gate(GateKind kind, int qubit) {
  if (gate_is_two_qubit(kind)) {
    throw std::invalid_argument("two-qubit gate requires control and target");
  }
  Gate g;
  g.kind = kind;
  g.qubits = {qubit, qubit};
  return g;
}

Gate make_gate(GateKind kind, int qubit, AngleExpr angle) {
  Gate g = make_gate(kind, qubit);
  if (!gate_takes_angle(kind)) {
    throw std::invalid_argument(std::string(gate_name(kind)) +
                                " gate takes no angle");
  }
  g.angle = std::move(angle);
  return g;
}

Gate make_two_qubit_gate(GateKind kind, int control, int target) {
  if (!gate_is_two_qubit(kind)) {
    throw std::invalid_argument("expected cx or cz");
  }
  if (control == target) {
    throw std::invalid_argument("control and target qubits must be distinct");
  }
  Gate g;
  g.kind = kind;
  g.qubits = {control, target};
  return g;
}

namespace {

void check_target(int qubit, int num_qubits) {
  if (qubit < 0 || qubit >= num_qubits) {
    throw std::out_of_range("gate targets qubit " + std::to_string(qubit) +
                            " on a " + std::to_string(num_qubits) +
                            "-qubit register");
  }
}

// Applies a 2x2 unitary to the target qubit over all amplitude pairs whose
// indices differ only in that bit.
void apply_single_qubit(Amplitudes& amps, int qubit, const Eigen::Matrix2cd& m) {
  const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
  const std::uint64_t step = std::uint64_t(1) << qubit;
  for (std::uint64_t base = 0; base < dim; base += 2 * step) {
    for (std::uint64_t offset = 0; offset < step; ++offset) {
      const std::uint64_t i0 = base + offset;
      const std::uint64_t i1 = i0 + step;
      const Complex a0 = amps[Eigen::Index(i0)];
      const Complex a1 = amps[Eigen::Index(i1)];
      amps[Eigen::Index(i0)] = m(0, 0) * a0 + m(0, 1) * a1;
      amps[Eigen::Index(i1)] = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
}

}  // namespace

void apply_gate_in_place(Statevector& state, const Gate& gate) {
  if (!gate.angle.is_literal()) {
    throw std::invalid_argument("gate has an unbound symbolic angle");
  }
  const int n = state.num_qubits();
  Amplitudes& amps = state.amplitudes();
  const double angle = gate.angle.scale;
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("gate angle is not finite");
  }

  if (gate_is_two_qubit(gate.kind)) {
    const int control = gate.qubits[0];
    const int target = gate.qubits[1];
    check_target(control, n);
    check_target(target, n);
    if (control == target) {
      throw std::invalid_argument("control and target qubits must be distinct");
    }
    const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
    const std::uint64_t cbit = std::uint64_t(1) << control;
    const std::uint64_t tbit = std::uint64_t(1) << target;
    if (gate.kind == GateKind::CX) {
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cbit) && !(i & tbit)) {
          std::swap(amps[Eigen::Index(i)], amps[Eigen::Index(i | tbit)]);
        }
      }
    } else {  // CZ
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cbit) && (i & tbit)) {
          amps[Eigen::Index(i)] = -amps[Eigen::Index(i)];
        }
      }
    }
    return;
  }

  const int qubit = gate.qubits[0];
  check_target(qubit, n);
  apply_single_qubit(amps, qubit, gate_matrix(gate.kind, angle));
}

Statevector apply_gate(Statevector state, const Gate& gate) {
  apply_gate_in_place(state, gate);
  return state;
}

Observable::Observable(int num_qubits, std::uint64_t z_mask)
    : num_qubits_(num_qubits), z_mask_(z_mask) {
  check_qubit_count(num_qubits);
  if (z_mask == 0) {
    throw std::invalid_argument("observable needs at least one Z factor");
  }
  if (z_mask >> num_qubits) {
    throw std::invalid_argument("observable Z mask exceeds qubit count");
  }
}

Observable Observable::all_z(int num_qubits) {
  check_qubit_count(num_qubits);
  return Observable(num_qubits, (std::uint64_t(1) << num_qubits) - 1);
}

double expectation(const Statevector& state, const Observable& obs) {
  if (obs.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("observable is on " +
                                std::to_string(obs.num_qubits()) +
                                " qubits, state on " +
                                std::to_string(state.num_qubits()));
  }
  const Amplitudes& amps = state.amplitudes();
  const std::uint64_t mask = obs.z_mask();
  double value = 0.0;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amps.size()); ++i) {
    const double p = std::norm(amps[Eigen::Index(i)]);
    value += (std::popcount(i & mask) & 1) ? -p : p;
  }
  return value;
}

std::string index_to_bitstring(std::uint64_t index, int num_qubits) {
  std::string s(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q) {
    if ((index >> q) & 1) {
      s[static_cast<std::size_t>(num_qubits - 1 - q)] = '1';
    }
  }
  return s;
}

std::map<std::string, std::int64_t> sample_counts(const Statevector& state,
                                                  std::int64_t shots,
                                                  std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("shots must be >= 1");
  }
  const Amplitudes& amps = state.amplitudes();
  const auto dim = static_cast<std::uint64_t>(amps.size());

  std::vector<double> cumulative(dim);
  double acc = 0.0;
  for (std::uint64_t i = 0; i < dim; ++i) {
    acc += std::norm(amps[Eigen::Index(i)]);
    cumulative[i] = acc;
  }
  // Guard the final bucket so u < acc always lands inside the table even
  // when the norm is 1 - epsilon.
  cumulative[dim - 1] = std::max(acc, 1.0);

  Rng rng(seed);
  std::map<std::string, std::int64_t> counts;
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto index =
        static_cast<std::uint64_t>(std::distance(cumulative.begin(), it));
    counts[index_to_bitstring(index, state.num_qubits())] += 1;
  }
  return counts;
}

}  // namespace vqr
