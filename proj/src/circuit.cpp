#include "vqr/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace vqr {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
}

int Circuit::declare_parameter(std::string name, ParamRole role) {
  for (const ParamInfo& p : params_) {
    if (p.name == name) {
      throw std::invalid_argument("parameter '" + name + "' declared twice");
    }
  }
  params_.push_back({std::move(name), role});
  return static_cast<int>(params_.size()) - 1;
}

int Circuit::count_parameters(ParamRole role) const {
  int count = 0;
  for (const ParamInfo& p : params_) {
    if (p.role == role) ++count;
  }
  return count;
}

void Circuit::add(Gate gate) {
  for (int k = 0; k < (gate_is_two_qubit(gate.kind) ? 2 : 1); ++k) {
    const int q = gate.qubits[static_cast<std::size_t>(k)];
    if (q < 0 || q >= num_qubits_) {
      throw std::out_of_range("gate qubit " + std::to_string(q) +
                              " out of range for " +
                              std::to_string(num_qubits_) + "-qubit circuit");
    }
  }
  for (const AngleTerm& t : gate.angle.terms) {
    if (t.param < 0 || t.param >= parameter_count()) {
      throw std::invalid_argument(
          "gate angle references undeclared parameter index " +
          std::to_string(t.param));
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("cannot append a circuit on " +
                                std::to_string(other.num_qubits_) +
                                " qubits to one on " +
                                std::to_string(num_qubits_));
  }
  const int offset = parameter_count();
  for (const ParamInfo& p : other.params_) {
    declare_parameter(p.name, p.role);
  }
  for (Gate g : other.gates_) {
    for (AngleTerm& t : g.angle.terms) {
      t.param += offset;
    }
    gates_.push_back(std::move(g));
  }
}

std::vector<double> Circuit::resolve_bindings(
    const std::map<std::string, double>& bindings) const {
  std::vector<double> values(params_.size());
  for (std::size_t i = 0; i < params_.size(); ++i) {
    const auto it = bindings.find(params_[i].name);
    if (it == bindings.end()) {
      throw std::invalid_argument("missing binding for parameter '" +
                                  params_[i].name + "'");
    }
    values[i] = it->second;
  }
  if (bindings.size() != params_.size()) {
    for (const auto& [name, value] : bindings) {
      bool known = false;
      for (const ParamInfo& p : params_) {
        if (p.name == name) {
          known = true;
          break;
        }
      }
      if (!known) {
        throw std::invalid_argument("binding for unknown parameter '" + name +
                                    "'");
      }
    }
  }
  return values;
}

Statevector run_circuit(const Circuit& circuit, std::span<const double> values) {
  if (static_cast<int>(values.size()) != circuit.parameter_count()) {
    throw std::invalid_argument(
        "circuit declares " + std::to_string(circuit.parameter_count()) +
        " parameters but " + std::to_string(values.size()) +
        " values were bound");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("parameter binding is not finite");
    }
  }

  Statevector state(circuit.num_qubits());
  Gate bound;
  for (const Gate& gate : circuit.gates()) {
    if (gate.angle.is_literal()) {
      apply_gate_in_place(state, gate);
    } else {
      bound = gate;
      bound.angle = AngleExpr::literal(gate.angle.evaluate(values));
      apply_gate_in_place(state, bound);
    }
  }
  return state;
}

Statevector run_circuit(const Circuit& circuit,
                        const std::map<std::string, double>& bindings) {
  const std::vector<double> values = circuit.resolve_bindings(bindings);
  return run_circuit(circuit, std::span<const double>(values.data(), values.size()));
}

Statevector run_circuit(const Circuit& circuit) {
  return run_circuit(circuit, std::span<const double>());
}

}  // namespace vqr
