// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/ansatz.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "pairq/errors.hpp"

namespace pairq {

std::string to_string(Arrangement a) { return a == Arrangement::Ladder ? "ladder" : "canonical"; }

Arrangement parse_arrangement(const std::string& s) {
  if (s == "ladder") return Arrangement::Ladder;
  if (s == "canonical") return Arrangement::Canonical;
  throw GrammarError("unknown arrangement '" + s + "' (expected ladder or canonical)");
}

namespace {

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

ExcitationFlags parse_letters(const std::string& token, const std::string& whole) {
  std::string t = upper(token);
  if (t.rfind("UPCC", 0) == 0) t = t.substr(4);
  if (t.empty()) throw GrammarError("'" + whole + "': no excitation letters after UpCC");
  ExcitationFlags f;
  const std::string order = "GASD";
  std::size_t pos = 0;
  for (char c : t) {
    const auto at = order.find(c, pos);
    if (at == std::string::npos)
      throw GrammarError("'" + whole + "': unexpected '" + std::string(1, c) +
                         "' (letters must follow the order G, A, S, D)");
    pos = at + 1;
    if (c == 'G') f.g = true;
    if (c == 'A') f.a = true;
    if (c == 'S') f.s = true;
    if (c == 'D') f.d = true;
  }
  return f;
}

std::string letters(const ExcitationFlags& f) {
  std::string s;
  if (f.g) s += 'G';
  if (f.a) s += 'A';
  if (f.s) s += 'S';
  if (f.d) s += 'D';
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

void check_flags(const ExcitationFlags& f, bool hcb, const std::string& what) {
  if (f.a && !f.s) throw GrammarError(what + ": A (approximate singles) needs S");
  if (f.g && !f.s && !f.d) throw GrammarError(what + ": G needs S or D");
  if (hcb && f.s) throw GrammarError(what + ": HCB cannot be combined with singles");
}

}  // namespace

void AnsatzSpec::validate() const {
  if (k < 1) throw GrammarError("layer count must be at least 1");
  check_flags(flags, hcb, "'" + name() + "'");
  if (!spa && !flags.d && !flags.s) throw GrammarError("'" + name() + "' has no excitations");
  for (const auto& e : extra) {
    check_flags(e, hcb, "'" + name() + "'");
    if (!e.d && !e.s) throw GrammarError("'" + name() + "': empty '+' block");
  }
}

std::string AnsatzSpec::name() const {
  std::string s;
  if (k > 1) s += std::to_string(k) + "-";
  if (hcb) s += "HCB-";
  if (spa) s += "SPA-";
  const std::string l = letters(flags);
  if (!l.empty()) s += "UpCC" + l;
  else if (!s.empty()) s.pop_back();
  for (const auto& e : extra) s += "+" + letters(e);
  return s;
}

AnsatzSpec parse_ansatz(const std::string& name) {
  if (name.empty()) throw GrammarError("empty ansatz name");
  const auto parts = split(name, '+');
  AnsatzSpec spec;
  const auto toks = split(parts[0], '-');
  std::size_t i = 0;
  if (i < toks.size() && !toks[i].empty() &&
      std::all_of(toks[i].begin(), toks[i].end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    spec.k = std::stoi(toks[i]);
    ++i;
  }
  if (i < toks.size() && upper(toks[i]) == "HCB") {
    spec.hcb = true;
    ++i;
  }
  if (i < toks.size() && upper(toks[i]) == "SPA") {
    spec.spa = true;
    ++i;
  }
  if (i < toks.size()) {
    if (toks[i].empty()) throw GrammarError("'" + name + "': empty token");
    spec.flags = parse_letters(toks[i], name);
    ++i;
  }
  if (i != toks.size()) throw GrammarError("'" + name + "': unexpected token '" + toks[i] + "'");
  for (std::size_t p = 1; p < parts.size(); ++p) {
    if (parts[p].empty()) throw GrammarError("'" + name + "': empty '+' block");
    spec.extra.push_back(parse_letters(parts[p], name));
  }
  spec.validate();
  return spec;
}

Circuit hcb_to_jw_bridge(int n_orbitals, SpinLayout layout) {
  Circuit c(2 * n_orbitals, Register::JordanWigner, layout);
  for (int p = 0; p < n_orbitals; ++p)
    c.add(Gate::cnot(spin_orbital(p, Spin::Up, n_orbitals, layout),
                     spin_orbital(p, Spin::Down, n_orbitals, layout), GateRole::Bridge));
  return c;
}

namespace {

struct Move {
  int from;
  int to;
};

class Builder {
 public:
  Builder(const PairStructure& ps, const AnsatzSpec& spec)
      : ps_(ps),
        spec_(spec),
        n_(ps.n_orbitals),
        circ_(spec.hcb ? n_ : 2 * n_, spec.hcb ? Register::Hcb : Register::JordanWigner,
              spec.layout) {
    if (ps.pair_sets.empty()) throw InputError("no pair sets to build an ansatz from");
    std::set<int> seen;
    for (const auto& s : ps.pair_sets) {
      if (s.empty()) throw InputError("empty pair set");
      for (int p : s) {
        if (p < 0 || p >= n_) throw InputError("pair set orbital out of range");
        if (!seen.insert(p).second) throw InputError("pair sets overlap");
      }
      occupied_.push_back(s.front());
    }
    std::sort(occupied_.begin(), occupied_.end());
    for (int p = 0; p < n_; ++p)
      if (!std::binary_search(occupied_.begin(), occupied_.end(), p)) virtual_.push_back(p);
  }

  Circuit build() {
    // layer 1: HF, pair doubles on the HCB register, bridge, singles
    for (int p : occupied_) circ_.add(Gate::x(hq(p), GateRole::Reference));
    if (spec_.spa) add_spa();
    if (spec_.flags.d) {
      for (const auto& m : double_moves(spec_.flags, spec_.spa))
        if (!taken(m)) circ_.add(Gate::excite(ExcitationType::Hcb, {hq(m.to)}, {hq(m.from)},
                                              Param::symbol(pname("d1", m))));
    }
    if (!spec_.hcb) circ_.append(hcb_to_jw_bridge(n_, spec_.layout));
    if (spec_.flags.s) add_singles(spec_.flags, spec_.spa, "s1");

    for (int layer = 2; layer <= spec_.k; ++layer) {
      const std::string tag = std::to_string(layer);
      std::vector<Move> moves;
      if (spec_.spa) moves = spa_moves();
      if (spec_.flags.d)
        for (const auto& m : double_moves(spec_.flags, spec_.spa))
          if (std::none_of(moves.begin(), moves.end(), [&](const Move& x) { return same(x, m); }))
            moves.push_back(m);
      for (const auto& m : moves) add_double(m, "d" + tag);
      if (spec_.flags.s) add_singles(spec_.flags, spec_.spa, "s" + tag);
    }
    for (std::size_t b = 0; b < spec_.extra.size(); ++b) {
      const auto& f = spec_.extra[b];
      const std::string tag = "x" + std::to_string(b + 1);
      if (f.d)
        for (const auto& m : double_moves(f, false)) add_double(m, tag + "d");
      if (f.s) add_singles(f, false, tag + "s");
    }
    return circ_;
  }

 private:
  int hq(int p) const {
    return spec_.hcb ? p : spin_orbital(p, Spin::Up, n_, spec_.layout);
  }
  int sq(int p, Spin s) const { return spin_orbital(p, s, n_, spec_.layout); }

  static bool same(const Move& a, const Move& b) {
    return (a.from == b.from && a.to == b.to) || (a.from == b.to && a.to == b.from);
  }
  bool taken(const Move& m) const {
    return std::any_of(spa_.begin(), spa_.end(), [&](const Move& x) { return same(x, m); });
  }
  static std::string pname(const std::string& prefix, const Move& m) {
    return prefix + "_" + std::to_string(m.from) + "_" + std::to_string(m.to);
  }

  std::vector<Move> spa_moves() const {
    std::vector<Move> out;
    for (const auto& s : ps_.pair_sets)
      for (std::size_t l = 1; l < s.size(); ++l)
        out.push_back({spec_.arrangement == Arrangement::Ladder ? s[l - 1] : s[0], s[l]});
    return out;
  }

  void add_spa() {
    for (std::size_t k = 0; k < ps_.pair_sets.size(); ++k) {
      const auto& s = ps_.pair_sets[k];
      for (std::size_t l = 1; l < s.size(); ++l) {
        const Move m{spec_.arrangement == Arrangement::Ladder ? s[l - 1] : s[0], s[l]};
        spa_.push_back(m);
        circ_.add(Gate::excite(ExcitationType::Hcb, {hq(m.to)}, {hq(m.from)},
                               Param::symbol("t_" + std::to_string(k) + "_" + std::to_string(l - 1))));
      }
    }
  }

  // Orbital pairs (from, to) for doubles or singles.
  std::vector<Move> moves(const ExcitationFlags& f, bool restrict_to_pairs) const {
    std::vector<Move> out;
    if (restrict_to_pairs) {
      for (const auto& s : ps_.pair_sets) {
        if (f.g) {
          std::vector<int> sorted = s;
          std::sort(sorted.begin(), sorted.end());
          for (std::size_t i = 0; i < sorted.size(); ++i)
            for (std::size_t j = i + 1; j < sorted.size(); ++j) out.push_back({sorted[i], sorted[j]});
        } else {
          for (std::size_t l = 1; l < s.size(); ++l) out.push_back({s[0], s[l]});
        }
      }
      return out;
    }
    if (f.g) {
      for (int p = 0; p < n_; ++p)
        for (int q = p + 1; q < n_; ++q) out.push_back({p, q});
    } else {
      for (int i : occupied_)
        for (int a : virtual_) out.push_back({i, a});
    }
    return out;
  }
  std::vector<Move> double_moves(const ExcitationFlags& f, bool restrict_to_pairs) const {
    return moves(f, restrict_to_pairs);
  }

  void add_double(const Move& m, const std::string& prefix) {
    const Param p = Param::symbol(pname(prefix, m));
    if (spec_.hcb) {
      circ_.add(Gate::excite(ExcitationType::Hcb, {m.to}, {m.from}, p));
    } else {
      circ_.add(Gate::excite(ExcitationType::Fermionic, {sq(m.to, Spin::Up), sq(m.to, Spin::Down)},
                             {sq(m.from, Spin::Up), sq(m.from, Spin::Down)}, p));
    }
  }

  void add_singles(const ExcitationFlags& f, bool restrict_to_pairs, const std::string& prefix) {
    const ExcitationType ty = f.a ? ExcitationType::Qubit : ExcitationType::Fermionic;
    for (const auto& m : moves(f, restrict_to_pairs)) {
      for (Spin s : {Spin::Up, Spin::Down}) {
        const std::string name = spec_.shared_spin_singles
                                     ? pname(prefix, m)
                                     : pname(prefix, m) + (s == Spin::Up ? "_u" : "_d");
        circ_.add(Gate::excite(ty, {sq(m.to, s)}, {sq(m.from, s)}, Param::symbol(name)));
      }
    }
  }

  const PairStructure& ps_;
  const AnsatzSpec& spec_;
  int n_;
  Circuit circ_;
  std::vector<int> occupied_;
  std::vector<int> virtual_;
  std::vector<Move> spa_;
};

}  // namespace

Circuit build_ansatz(const PairStructure& pairs, const AnsatzSpec& spec) {
  spec.validate();
  return Builder(pairs, spec).build();
}

Circuit build_ansatz(const MolecularSystem& sys, const AnsatzSpec& spec) {
  if (static_cast<int>(sys.pair_sets.size()) != sys.n_pairs())
    throw InputError("pair sets do not match the number of electron pairs");
  return build_ansatz(sys.pair_structure(), spec);
}

Circuit build_spa(const PairStructure& pairs, Arrangement arrangement, SpinLayout layout, bool hcb) {
  AnsatzSpec spec;
  spec.spa = true;
  spec.hcb = hcb;
  spec.arrangement = arrangement;
  spec.layout = layout;
  return build_ansatz(pairs, spec);
}

Circuit build_spa(const MolecularSystem& sys, Arrangement arrangement, SpinLayout layout) {
  AnsatzSpec spec;
  spec.spa = true;
  spec.arrangement = arrangement;
  spec.layout = layout;
  return build_ansatz(sys, spec);
}

}  // namespace pairq
