// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "pairq/errors.hpp"

namespace pairq {

namespace {

std::string fmt_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double read_real(const std::string& s) {
  double v = 0.0;
  const char* b = s.data();
  if (!s.empty() && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("bad number '" + s + "' in circuit text");
  return v;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  });
}

}  // namespace

double Param::value(const ParamMap& values) const {
  if (name.empty()) return offset;
  auto it = values.find(name);
  if (it == values.end()) throw std::invalid_argument("parameter '" + name + "' is not assigned");
  return scale * it->second + offset;
}

std::string Param::to_string() const {
  if (name.empty()) return fmt_real(offset);
  std::string s;
  if (scale != 1.0) s = fmt_real(scale) + "*";
  s += name;
  if (offset != 0.0) s += (offset > 0 ? "+" : "") + fmt_real(offset);
  return s;
}

Param Param::parse(const std::string& token) {
  Param p;
  std::string rest = token;
  const auto star = rest.find('*');
  if (star == std::string::npos) {
    if (!rest.empty() && (std::isdigit(static_cast<unsigned char>(rest[0])) || rest[0] == '-' ||
                          rest[0] == '+' || rest[0] == '.'))
      return fixed(read_real(rest));
  } else {
    p.scale = read_real(rest.substr(0, star));
    rest = rest.substr(star + 1);
  }
  std::size_t cut = std::string::npos;
  for (std::size_t i = 1; i < rest.size(); ++i)
    if ((rest[i] == '+' || rest[i] == '-') && rest[i - 1] != 'e' && rest[i - 1] != 'E') {
      cut = i;
      break;
    }
  p.name = rest.substr(0, cut);
  if (cut != std::string::npos) p.offset = read_real(rest.substr(cut));
  if (!valid_name(p.name)) throw InputError("bad parameter token '" + token + "'");
  return p;
}

Gate Gate::pauli_rotation(PauliSum generator, Param p) {
  Gate g;
  g.kind = GateKind::PauliRotation;
  for (const auto& t : generator.terms()) {
    if (std::abs(t.coeff.imag()) > 1e-12)
      throw std::invalid_argument("Pauli rotation generator must be Hermitian");
    for (const auto& [q, a] : t.word.factors()) g.qubits.push_back(q);
  }
  for (std::size_t i = 0; i < generator.size(); ++i)
    for (std::size_t j = i + 1; j < generator.size(); ++j)
      if (!generator.terms()[i].word.commutes_with(generator.terms()[j].word))
        throw std::invalid_argument("Pauli rotation generator terms must commute");
  std::sort(g.qubits.begin(), g.qubits.end());
  g.qubits.erase(std::unique(g.qubits.begin(), g.qubits.end()), g.qubits.end());
  g.generator = std::move(generator);
  g.param = std::move(p);
  return g;
}

Gate Gate::excite(ExcitationType type, const std::vector<int>& creators,
                  const std::vector<int>& annihilators, Param p) {
  if (creators.empty() || creators.size() != annihilators.size())
    throw std::invalid_argument("excitation needs equal, non-zero numbers of indices");
  if (type == ExcitationType::Hcb && creators.size() != 1)
    throw std::invalid_argument("HCB excitations move one pair");
  Gate g;
  g.kind = GateKind::Excitation;
  g.excitation = type;
  g.qubits = creators;
  g.qubits.insert(g.qubits.end(), annihilators.begin(), annihilators.end());
  if (std::set<int>(g.qubits.begin(), g.qubits.end()).size() != g.qubits.size())
    throw std::invalid_argument("excitation indices must be distinct");
  g.param = std::move(p);
  return g;
}

bool Gate::parametrized() const {
  return kind == GateKind::Ry || kind == GateKind::Rz || kind == GateKind::CRy ||
         kind == GateKind::PauliRotation || kind == GateKind::Excitation;
}

std::vector<int> Gate::creators() const {
  return {qubits.begin(), qubits.begin() + static_cast<std::ptrdiff_t>(qubits.size() / 2)};
}

std::vector<int> Gate::annihilators() const {
  return {qubits.begin() + static_cast<std::ptrdiff_t>(qubits.size() / 2), qubits.end()};
}

PauliSum Gate::generator_sum() const {
  auto single = [](int q, Axis a) {
    PauliWord w;
    w.set(q, a);
    return PauliSum({{w, 1.0}});
  };
  switch (kind) {
    case GateKind::Ry: return single(qubits[0], Axis::Y);
    case GateKind::Rz: return single(qubits[0], Axis::Z);
    case GateKind::CRy: {
      // |1><1|_c (x) Y_t = (Y_t - Z_c Y_t)/2
      PauliWord y, zy;
      y.set(qubits[1], Axis::Y);
      zy.set(qubits[0], Axis::Z);
      zy.set(qubits[1], Axis::Y);
      return PauliSum({{y, 0.5}, {zy, -0.5}});
    }
    case GateKind::PauliRotation: return generator;
    case GateKind::Excitation:
      switch (excitation) {
        case ExcitationType::Fermionic: {
          int top = 0;
          for (int q : qubits) top = std::max(top, q);
          return jordan_wigner(excitation_generator(creators(), annihilators()), top + 1);
        }
        case ExcitationType::Hcb:
        case ExcitationType::Qubit: return qubit_excitation_generator(creators(), annihilators());
      }
      break;
    default: break;
  }
  throw std::invalid_argument("gate has no rotation generator");
}

std::string kind_name(const Gate& g) {
  switch (g.kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::Ry: return "RY";
    case GateKind::Rz: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CRy: return "CRY";
    case GateKind::PauliRotation: return "PROT";
    case GateKind::Excitation:
      switch (g.excitation) {
        case ExcitationType::Hcb: return "HEXC";
        case ExcitationType::Fermionic: return "FEXC";
        case ExcitationType::Qubit: return "QEXC";
      }
  }
  return "?";
}

// ---------------------------------------------------------------------------

Circuit::Circuit(int n_qubits, Register reg, SpinLayout layout)
    : n_qubits_(n_qubits), register_(reg), layout_(layout) {
  if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
  if (reg == Register::JordanWigner && n_qubits % 2 != 0)
    throw std::invalid_argument("JW register needs an even qubit count");
}

int Circuit::n_orbitals() const {
  return register_ == Register::JordanWigner ? n_qubits_ / 2 : n_qubits_;
}

void Circuit::add(Gate g) {
  std::size_t arity = 0;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Ry:
    case GateKind::Rz: arity = 1; break;
    case GateKind::CNOT:
    case GateKind::CRy: arity = 2; break;
    default: arity = g.qubits.size(); break;
  }
  if (g.qubits.size() != arity || (arity == 0 && g.kind != GateKind::PauliRotation))
    throw std::invalid_argument("gate " + kind_name(g) + " has wrong arity");
  for (int q : g.qubits)
    if (q < 0 || q >= n_qubits_)
      throw std::out_of_range("gate qubit " + std::to_string(q) + " outside register of " +
                              std::to_string(n_qubits_));
  if (arity == 2 && g.qubits[0] == g.qubits[1])
    throw std::invalid_argument("control and target coincide");
  if (g.parametrized() && g.param.symbolic() && !has_parameter(g.param.name))
    params_.push_back(g.param.name);
  if (!g.parametrized()) g.param = Param{};
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits_ > n_qubits_) throw std::invalid_argument("appended circuit is wider");
  for (const auto& g : other.gates_) add(g);
}

bool Circuit::has_parameter(const std::string& name) const {
  return std::find(params_.begin(), params_.end(), name) != params_.end();
}

ParamMap Circuit::assign(const std::vector<double>& values) const {
  if (values.size() != params_.size())
    throw std::invalid_argument("expected " + std::to_string(params_.size()) + " parameter values");
  ParamMap m;
  for (std::size_t i = 0; i < values.size(); ++i) m[params_[i]] = values[i];
  return m;
}

std::vector<double> Circuit::values(const ParamMap& m) const {
  std::vector<double> v;
  v.reserve(params_.size());
  for (const auto& p : params_) {
    auto it = m.find(p);
    if (it == m.end()) throw std::invalid_argument("parameter '" + p + "' is not assigned");
    v.push_back(it->second);
  }
  return v;
}

bool Circuit::has_bridge() const {
  return std::any_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return g.role == GateRole::Bridge; });
}

ResourceReport resources(const Circuit& c) {
  ResourceReport r;
  r.n_qubits = c.n_qubits();
  std::set<std::string> names;
  std::vector<int> free(c.n_qubits(), 0);
  for (const auto& g : c.gates()) {
    if (!g.primitive())
      throw std::invalid_argument("resources() needs a compiled circuit; found " + kind_name(g));
    if (g.kind == GateKind::CNOT) r.n_cnot += 1;
    if (g.kind == GateKind::CRy) r.n_cnot += 2;
    if (g.parametrized() && g.param.symbolic()) names.insert(g.param.name);
    int start = 0;
    for (int q : g.qubits) start = std::max(start, free[q]);
    const int span = g.kind == GateKind::CRy ? 4 : 1;
    for (int q : g.qubits) free[q] = start + span;
    r.depth = std::max(r.depth, start + span);
  }
  r.n_params = static_cast<int>(names.size());
  return r;
}

// ---------------------------------------------------------------------------
// Text format

void write_circuit(std::ostream& out, const Circuit& c) {
  out << "QUBITS " << c.n_qubits() << "\n";
  const char* reg = c.register_kind() == Register::Hcb            ? "hcb"
                    : c.register_kind() == Register::JordanWigner ? "jw"
                                                                  : "qubit";
  out << "REGISTER " << reg << "\n";
  out << "LAYOUT " << to_string(c.layout()) << "\n";
  for (const auto& g : c.gates()) {
    out << kind_name(g);
    if (g.kind == GateKind::PauliRotation) {
      out << ' ' << g.param.to_string();
      for (const auto& t : g.generator.terms()) {
        out << ' ' << fmt_real(t.coeff.real()) << ':';
        std::string w = t.word.to_string();
        w.erase(std::remove(w.begin(), w.end(), ' '), w.end());
        out << w;
      }
    } else {
      for (int q : g.qubits) out << ' ' << q;
      if (g.parametrized()) out << ' ' << g.param.to_string();
    }
    if (g.role == GateRole::Reference) out << " @ref";
    if (g.role == GateRole::Bridge) out << " @bridge";
    out << "\n";
  }
}

Circuit read_circuit(std::istream& in) {
  std::string line;
  int n = -1;
  Register reg = Register::Qubit;
  SpinLayout layout = SpinLayout::Interleaved;
  std::vector<Gate> gates;
  int lineno = 0;
  auto qubit = [&](const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw InputError("line " + std::to_string(lineno) + ": bad qubit '" + s + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<std::string> t;
    for (std::string s; ls >> s;) t.push_back(s);
    if (t.empty()) continue;
    GateRole role = GateRole::Body;
    if (t.back() == "@ref" || t.back() == "@bridge") {
      role = t.back() == "@ref" ? GateRole::Reference : GateRole::Bridge;
      t.pop_back();
    }
    const std::string& k = t[0];
    const std::size_t na = t.size() - 1;
    auto need = [&](std::size_t m) {
      if (na != m) throw InputError("line " + std::to_string(lineno) + ": " + k + " takes " +
                                    std::to_string(m) + " fields");
    };
    if (k == "QUBITS") {
      need(1);
      n = qubit(t[1]);
      continue;
    } else if (k == "REGISTER") {
      need(1);
      if (t[1] == "hcb") reg = Register::Hcb;
      else if (t[1] == "jw") reg = Register::JordanWigner;
      else if (t[1] == "qubit") reg = Register::Qubit;
      else throw InputError("unknown register '" + t[1] + "'");
      continue;
    } else if (k == "LAYOUT") {
      need(1);
      layout = parse_spin_layout(t[1]);
      continue;
    } else if (k == "X" || k == "H") {
      need(1);
      Gate g = k == "X" ? Gate::x(qubit(t[1]), role) : Gate::h(qubit(t[1]));
      gates.push_back(g);
    } else if (k == "RY" || k == "RZ") {
      need(2);
      gates.push_back(k == "RY" ? Gate::ry(qubit(t[1]), Param::parse(t[2]))
                                : Gate::rz(qubit(t[1]), Param::parse(t[2])));
    } else if (k == "CNOT") {
      need(2);
      gates.push_back(Gate::cnot(qubit(t[1]), qubit(t[2]), role));
    } else if (k == "CRY") {
      need(3);
      gates.push_back(Gate::cry(qubit(t[1]), qubit(t[2]), Param::parse(t[3])));
    } else if (k == "HEXC" || k == "FEXC" || k == "QEXC") {
      if (na < 3 || (na - 1) % 2 != 0)
        throw InputError("line " + std::to_string(lineno) + ": excitation needs 2m qubits and a parameter");
      std::vector<int> q;
      for (std::size_t i = 1; i < na; ++i) q.push_back(qubit(t[i]));
      const std::size_t m = q.size() / 2;
      const ExcitationType ty = k == "HEXC"   ? ExcitationType::Hcb
                                : k == "FEXC" ? ExcitationType::Fermionic
                                              : ExcitationType::Qubit;
      gates.push_back(Gate::excite(ty, {q.begin(), q.begin() + m}, {q.begin() + m, q.end()},
                                   Param::parse(t[na])));
    } else if (k == "PROT") {
      if (na < 2) throw InputError("line " + std::to_string(lineno) + ": PROT needs terms");
      std::vector<PauliString> terms;
      for (std::size_t i = 2; i <= na; ++i) {
        const auto colon = t[i].find(':');
        if (colon == std::string::npos) throw InputError("bad PROT term '" + t[i] + "'");
        std::string w = t[i].substr(colon + 1), spaced;
        for (std::size_t j = 0; j < w.size(); ++j) {
          if (j && std::isalpha(static_cast<unsigned char>(w[j]))) spaced += ' ';
          spaced += w[j];
        }
        terms.push_back(PauliString::parse(spaced, read_real(t[i].substr(0, colon))));
      }
      gates.push_back(Gate::pauli_rotation(PauliSum(terms), Param::parse(t[1])));
    } else {
      throw InputError("line " + std::to_string(lineno) + ": unknown gate '" + k + "'");
    }
    gates.back().role = role;
  }
  if (n < 0) throw InputError("circuit text lacks a QUBITS line");
  Circuit c(n, reg, layout);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    try {
      c.add(std::move(gates[i]));
    } catch (const std::exception& e) {
      throw InputError("gate " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return c;
}

}  // namespace pairq
