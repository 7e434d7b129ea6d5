#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace vqr {

using Complex = std::complex<double>;
using Amplitudes = Eigen::VectorXcd;

// Dense statevector of an n-qubit register, 2^n complex amplitudes.
// Qubit ordering is little-endian throughout: qubit 0 is the least
// significant bit of the amplitude index, so the ket |q_{n-1} ... q_0>
// written MSB-first corresponds to index sum(q_k * 2^k).
class Statevector {
 public:
  // |0...0>
  explicit Statevector(int num_qubits);

  // Computational basis state |index>.
  Statevector(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index size() const { return amplitudes_.size(); }

  const Amplitudes& amplitudes() const { return amplitudes_; }
  Amplitudes& amplitudes() { return amplitudes_; }

  double norm_sq() const { return amplitudes_.squaredNorm(); }

 private:
  int num_qubits_;
  Amplitudes amplitudes_;
};

enum class GateKind { H, X, RX, RY, RZ, P, CX, CZ };

bool gate_is_two_qubit(GateKind kind);
bool gate_takes_angle(GateKind kind);
const char* gate_name(GateKind kind);

// 2x2 unitary for a single-qubit gate kind (angle ignored for H and X).
Eigen::Matrix2cd gate_matrix(GateKind kind, double angle);

// Angle of a parametrized gate: scale * product of affine terms
// (offset + coeff * value[param]).  Zero terms means a literal angle equal
// to scale.  Feature maps need the two-term form for their pair phases.
struct AngleTerm {
  int param = -1;
  double offset = 0.0;
  double coeff = 1.0;
};

struct AngleExpr {
  double scale = 1.0;
  std::vector<AngleTerm> terms;

  static AngleExpr literal(double value);
  static AngleExpr linear(int param, double scale = 1.0);
  static AngleExpr affine_product(double scale, AngleTerm a, AngleTerm b);

  bool is_literal() const { return terms.empty(); }
  double evaluate(std::span<const double> values) const;
};

struct Gate {
  GateKind kind;
  // Single-qubit gates use qubits[0]; CX/CZ use {control, target}.
  std::array<int, 2> qubits{0, 0};
  AngleExpr angle = AngleExpr::literal(0.0);
};

Gate make_gate(GateKind kind, int qubit);
Gate make_gate(GateKind kind, int qubit, AngleExpr angle);
Gate make_two_qubit_gate(GateKind kind, int control, int target);

// Applies a literal-angle gate; throws if the gate still references a
// symbolic parameter or targets an out-of-range qubit.
void apply_gate_in_place(Statevector& state, const Gate& gate);
Statevector apply_gate(Statevector state, const Gate& gate);

// Tensor product of Z and I factors, one flag per qubit.  Diagonal, so the
// expectation reduces to a signed sum of probabilities.
class Observable {
 public:
  // z_mask bit q set means a Z factor on qubit q; at least one is required.
  Observable(int num_qubits, std::uint64_t z_mask);

  static Observable all_z(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t z_mask() const { return z_mask_; }

 private:
  int num_qubits_;
  std::uint64_t z_mask_;
};

// <state|obs|state> in [-1, 1]: sum over i of (-1)^parity(i & mask) |c_i|^2.
double expectation(const Statevector& state, const Observable& obs);

// Measurement simulation: `shots` draws from |c_i|^2, keyed by the bitstring
// of the outcome written MSB-first (q_{n-1} ... q_0).  Deterministic for a
// fixed seed.
std::map<std::string, std::int64_t> sample_counts(const Statevector& state,
                                                  std::int64_t shots,
                                                  std::uint64_t seed);

std::string index_to_bitstring(std::uint64_t index, int num_qubits);

}  // namespace vqr
