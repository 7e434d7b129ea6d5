#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "vqr/statevector.hpp"

namespace vqr {

enum class ParamRole { Encoding, Trainable };

struct ParamInfo {
  std::string name;
  ParamRole role;
};

// Ordered gate list over a fixed register, with a declared parameter table.
// Encoding parameters are bound once per data sample, trainable parameters
// once per optimizer step; declaration order is the binding order.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<ParamInfo>& parameters() const { return params_; }

  int declare_parameter(std::string name, ParamRole role);
  int parameter_count() const { return static_cast<int>(params_.size()); }
  int count_parameters(ParamRole role) const;

  void add(Gate gate);
  void add_h(int qubit) { add(make_gate(GateKind::H, qubit)); }
  void add_x(int qubit) { add(make_gate(GateKind::X, qubit)); }
  void add_rotation(GateKind kind, int qubit, AngleExpr angle) {
    add(make_gate(kind, qubit, std::move(angle)));
  }
  void add_cx(int control, int target) {
    add(make_two_qubit_gate(GateKind::CX, control, target));
  }
  void add_cz(int control, int target) {
    add(make_two_qubit_gate(GateKind::CZ, control, target));
  }

  // Appends another circuit on the same register; its parameters are
  // re-indexed after this circuit's table.
  void append(const Circuit& other);

  // Resolves named bindings into a value vector in declaration order.
  // Every declared parameter must be bound, every binding must be declared,
  // and all values must be finite.
  std::vector<double> resolve_bindings(
      const std::map<std::string, double>& bindings) const;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
  std::vector<ParamInfo> params_;
};

// Runs the circuit on |0...0> with parameter values given in declaration
// order.  The result stays normalized to within 1e-10.
Statevector run_circuit(const Circuit& circuit, std::span<const double> values);

Statevector run_circuit(const Circuit& circuit,
                        const std::map<std::string, double>& bindings);

Statevector run_circuit(const Circuit& circuit);

}  // namespace vqr
