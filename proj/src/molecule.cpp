// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/molecule.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unsupported/Eigen/MatrixFunctions>

#include "pairq/errors.hpp"

namespace pairq {

MolecularSystem MolecularSystem::zeros(int n_orbitals, int n_electrons) {
  MolecularSystem s;
  s.n_orbitals = n_orbitals;
  s.n_electrons = n_electrons;
  s.h = Eigen::MatrixXd::Zero(n_orbitals, n_orbitals);
  const std::size_t n = n_orbitals;
  s.g.assign(n * n * n * n, 0.0);
  s.orbital_labels.resize(n_orbitals);
  std::iota(s.orbital_labels.begin(), s.orbital_labels.end(), 0);
  s.orbsym.assign(n_orbitals, 1);
  return s;
}

void MolecularSystem::set_eri(int p, int q, int r, int s, double v) {
  const std::size_t n = n_orbitals;
  auto at = [&](int a, int b, int c, int d) -> double& {
    return g[((a * n + b) * n + c) * n + d];
  };
  at(p, q, r, s) = v;
  at(q, p, r, s) = v;
  at(p, q, s, r) = v;
  at(q, p, s, r) = v;
  at(r, s, p, q) = v;
  at(s, r, p, q) = v;
  at(r, s, q, p) = v;
  at(s, r, q, p) = v;
}

void MolecularSystem::validate(double tol) const {
  if (n_electrons < 0 || n_electrons % 2 != 0)
    throw InputError("electron count must be even and non-negative");
  if (n_electrons > 2 * n_orbitals) throw InputError("more electrons than spin orbitals");
  if (h.rows() != n_orbitals || h.cols() != n_orbitals) throw InputError("h has wrong shape");
  const std::size_t n = n_orbitals;
  if (g.size() != n * n * n * n) throw InputError("g has wrong size");
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > tol && n > 0)
    throw InputError("one-electron integrals are not symmetric");
  for (int p = 0; p < n_orbitals; ++p)
    for (int q = 0; q < n_orbitals; ++q)
      for (int r = 0; r < n_orbitals; ++r)
        for (int s = 0; s < n_orbitals; ++s) {
          const double v = eri(p, q, r, s);
          if (std::abs(v - eri(q, p, r, s)) > tol || std::abs(v - eri(p, q, s, r)) > tol ||
              std::abs(v - eri(r, s, p, q)) > tol)
            throw InputError("two-electron integrals lack 8-fold symmetry");
        }
  std::set<int> seen;
  for (const auto& s : pair_sets) {
    if (s.empty()) throw InputError("empty pair set");
    for (int p : s) {
      if (p < 0 || p >= n_orbitals) throw InputError("pair set orbital out of range");
      if (!seen.insert(p).second) throw InputError("pair sets overlap");
    }
  }
}

// ---------------------------------------------------------------------------
// FCIDUMP

namespace {

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

double parse_real(std::string tok) {
  for (auto& c : tok)
    if (c == 'D' || c == 'd') c = 'E';
  double v = 0.0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  if (!tok.empty() && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) throw InputError("FCIDUMP: bad number '" + tok + "'");
  return v;
}

int parse_int(const std::string& tok) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InputError("FCIDUMP: bad integer '" + tok + "'");
  return v;
}

// Splits "NORB=2,NELEC=2,MS2=0,ORBSYM=1,1,ISYM=1" into key -> value tokens.
std::unordered_map<std::string, std::vector<std::string>> parse_namelist(const std::string& body) {
  std::string text = body;
  for (auto& c : text)
    if (c == ',' || c == '\n' || c == '\r' || c == '\t') c = ' ';
  std::string spaced;
  for (char c : text) {
    if (c == '=') spaced += " = ";
    else spaced += c;
  }
  std::istringstream in(spaced);
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  std::unordered_map<std::string, std::vector<std::string>> out;
  std::string key;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i + 1 < toks.size() && toks[i + 1] == "=") {
      key = upper(toks[i]);
      out[key];
      ++i;
      continue;
    }
    if (key.empty()) throw InputError("FCIDUMP: malformed header near '" + toks[i] + "'");
    out[key].push_back(toks[i]);
  }
  return out;
}

void write_real(std::ostream& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, ptr - buf);
}

}  // namespace

MolecularSystem parse_fcidump(std::istream& in) {
  std::string line;
  std::string header;
  bool started = false;
  bool ended = false;
  while (std::getline(in, line)) {
    const std::string u = upper(line);
    if (!started) {
      const auto pos = u.find("&FCI");
      if (pos == std::string::npos) {
        if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw InputError("FCIDUMP: missing &FCI header");
      }
      started = true;
      line = line.substr(pos + 4);
    }
    const std::string u2 = upper(line);
    auto end = u2.find("&END");
    if (end == std::string::npos) {
      const auto slash = u2.find('/');
      if (slash != std::string::npos) end = slash;
    }
    if (end != std::string::npos) {
      header += line.substr(0, end);
      ended = true;
      break;
    }
    header += line + " ";
  }
  if (!ended) throw InputError("FCIDUMP: header not terminated");

  const auto kv = parse_namelist(header);
  auto get_int = [&](const std::string& key, int fallback, bool required) {
    auto it = kv.find(key);
    if (it == kv.end() || it->second.empty()) {
      if (required) throw InputError("FCIDUMP: header lacks " + key);
      return fallback;
    }
    return parse_int(it->second.front());
  };
  const int norb = get_int("NORB", 0, true);
  const int nelec = get_int("NELEC", 0, true);
  const int ms2 = get_int("MS2", 0, false);
  if (norb <= 0) throw InputError("FCIDUMP: NORB must be positive");
  if (nelec % 2 != 0) throw InputError("FCIDUMP: odd NELEC is not supported (closed shells only)");
  if (ms2 != 0) throw InputError("FCIDUMP: MS2 must be 0 (closed shells only)");
  if (auto it = kv.find("UHF"); it != kv.end() && !it->second.empty() &&
                                upper(it->second.front()).find('T') != std::string::npos)
    throw InputError("FCIDUMP: UHF integrals are not supported");

  MolecularSystem sys = MolecularSystem::zeros(norb, nelec);
  if (auto it = kv.find("ORBSYM"); it != kv.end() && !it->second.empty()) {
    if (static_cast<int>(it->second.size()) != norb)
      throw InputError("FCIDUMP: ORBSYM length differs from NORB");
    for (int i = 0; i < norb; ++i) sys.orbsym[i] = parse_int(it->second[i]);
  }

  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() != 5)
      throw InputError("FCIDUMP: record " + std::to_string(lineno) + " needs 5 fields");
    const double v = parse_real(toks[0]);
    int idx[4];
    for (int k = 0; k < 4; ++k) {
      idx[k] = parse_int(toks[k + 1]);
      if (idx[k] < 0 || idx[k] > norb)
        throw InputError("FCIDUMP: index " + std::to_string(idx[k]) + " outside 0.." +
                         std::to_string(norb));
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      sys.e_nuclear = v;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      sys.set_eri(i - 1, j - 1, k - 1, l - 1, v);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      sys.h(i - 1, j - 1) = v;
      sys.h(j - 1, i - 1) = v;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy record, not part of the data model
    } else {
      throw InputError("FCIDUMP: record " + std::to_string(lineno) + " has an invalid index pattern");
    }
  }
  sys.pair_sets = default_pair_sets(sys.h, sys.n_pairs());
  sys.validate();
  return sys;
}

MolecularSystem parse_fcidump(const std::string& text) {
  std::istringstream in(text);
  return parse_fcidump(in);
}

MolecularSystem read_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_fcidump(in);
}

void write_fcidump(std::ostream& out, const MolecularSystem& sys) {
  const int n = sys.n_orbitals;
  out << " &FCI NORB=" << n << ",NELEC=" << sys.n_electrons << ",MS2=0,\n  ORBSYM=";
  for (int i = 0; i < n; ++i) out << (sys.orbsym.empty() ? 1 : sys.orbsym[i]) << ",";
  out << "\n  ISYM=1,\n &END\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = sys.eri(i, j, k, l);
          if (v == 0.0) continue;
          write_real(out, v);
          out << ' ' << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << l + 1 << '\n';
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      if (sys.h(i, j) == 0.0) continue;
      write_real(out, sys.h(i, j));
      out << ' ' << i + 1 << ' ' << j + 1 << " 0 0\n";
    }
  write_real(out, sys.constant_energy());
  out << " 0 0 0 0\n";
}

PairSets default_pair_sets(const Eigen::MatrixXd& h, int n_pairs) {
  const int n = static_cast<int>(h.rows());
  if (n_pairs > n) throw InputError("more electron pairs than orbitals");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h(a, a) < h(b, b); });
  PairSets sets(n_pairs);
  if (n_pairs == 0) return sets;
  for (int k = 0; k < n_pairs; ++k) sets[k].push_back(order[k]);
  for (int i = n_pairs; i < n; ++i) sets[(i - n_pairs) % n_pairs].push_back(order[i]);
  return sets;
}

// ---------------------------------------------------------------------------
// Hamiltonians

PauliSum build_qubit_hamiltonian(const MolecularSystem& sys, SpinLayout layout) {
  const int n = sys.n_orbitals;
  const int nq = 2 * n;
  std::vector<std::array<PauliString, 2>> cre(nq), ann(nq);
  for (int j = 0; j < nq; ++j) {
    const auto c = jw_ladder(j, true).terms();
    const auto a = jw_ladder(j, false).terms();
    cre[j] = {c[0], c[1]};
    ann[j] = {a[0], a[1]};
  }
  std::unordered_map<PauliWord, cplx, PauliWordHash> acc;
  acc[PauliWord{}] += sys.constant_energy();
  constexpr double kSkip = 1e-14;

  auto so = [&](int p, int s) { return spin_orbital(p, static_cast<Spin>(s), n, layout); };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const double v = sys.h(p, q);
      if (std::abs(v) < kSkip) continue;
      for (int s = 0; s < 2; ++s)
        for (const auto& x : cre[so(p, s)])
          for (const auto& y : ann[so(q, s)]) {
            const PauliString t = multiply(x, y);
            acc[t.word] += v * t.coeff;
          }
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double v = 0.5 * sys.eri(p, q, r, s);
          if (std::abs(v) < kSkip) continue;
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
              const int i = so(p, a), j = so(r, b), k = so(s, b), l = so(q, a);
              if (i == j || k == l) continue;
              for (const auto& w : cre[i])
                for (const auto& x : cre[j]) {
                  const PauliString wx = multiply(w, x);
                  for (const auto& y : ann[k]) {
                    const PauliString wxy = multiply(wx, y);
                    for (const auto& z : ann[l]) {
                      const PauliString t = multiply(wxy, z);
                      acc[t.word] += v * t.coeff;
                    }
                  }
                }
            }
        }
  std::vector<PauliString> terms;
  terms.reserve(acc.size());
  for (const auto& [w, c] : acc) terms.emplace_back(w, c);
  return PauliSum(terms);
}

PauliSum build_hcb_hamiltonian(const MolecularSystem& sys) {
  const int n = sys.n_orbitals;
  std::vector<PauliString> terms;
  terms.emplace_back(PauliWord{}, sys.constant_energy());
  auto z = [](int p) {
    PauliWord w;
    w.set(p, Axis::Z);
    return w;
  };
  for (int p = 0; p < n; ++p) {
    // (2 h_pp + (pp|pp)) (1 - Z_p)/2
    const double e = 2.0 * sys.h(p, p) + sys.eri(p, p, p, p);
    terms.emplace_back(PauliWord{}, 0.5 * e);
    terms.emplace_back(z(p), -0.5 * e);
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      // both orderings of the pair: 2 (2 J - K) n_p n_q
      const double c = 2.0 * (2.0 * sys.eri(p, p, q, q) - sys.eri(p, q, q, p));
      PauliWord zz = z(p);
      zz.set(q, Axis::Z);
      terms.emplace_back(PauliWord{}, 0.25 * c);
      terms.emplace_back(z(p), -0.25 * c);
      terms.emplace_back(z(q), -0.25 * c);
      terms.emplace_back(zz, 0.25 * c);
      // K_pq (b+_p b_q + b+_q b_p) = K_pq (X_p X_q + Y_p Y_q)/2
      const double k = sys.eri(p, q, p, q);
      PauliWord xx, yy;
      xx.set(p, Axis::X);
      xx.set(q, Axis::X);
      yy.set(p, Axis::Y);
      yy.set(q, Axis::Y);
      terms.emplace_back(xx, 0.5 * k);
      terms.emplace_back(yy, 0.5 * k);
    }
  return PauliSum(terms);
}

// ---------------------------------------------------------------------------
// Active space and rotations

MolecularSystem apply_active_space(const MolecularSystem& sys, const std::vector<int>& active,
                                   const std::vector<int>& frozen) {
  const int n = sys.n_orbitals;
  std::set<int> act(active.begin(), active.end());
  std::set<int> frz(frozen.begin(), frozen.end());
  if (act.size() != active.size() || frz.size() != frozen.size())
    throw InputError("active/frozen lists contain duplicates");
  for (int p : active)
    if (p < 0 || p >= n) throw InputError("active orbital " + std::to_string(p) + " out of range");
  for (int p : frozen) {
    if (p < 0 || p >= n) throw InputError("frozen orbital " + std::to_string(p) + " out of range");
    if (act.count(p)) throw InputError("orbital " + std::to_string(p) + " is both active and frozen");
  }
  const int ne = sys.n_electrons - 2 * static_cast<int>(frozen.size());
  if (ne < 0) throw InputError("more frozen orbitals than electron pairs");
  if (ne > 2 * static_cast<int>(active.size()))
    throw InputError("active space too small for the remaining electrons");

  if (!sys.default_pairs)
    for (const auto& s : sys.pair_sets)
      for (std::size_t i = 1; i < s.size(); ++i)
        if (frz.count(s[i]))
          throw InputError("frozen orbital " + std::to_string(s[i]) +
                           " sits in a non-reference slot of a pair set");

  const int m = static_cast<int>(active.size());
  MolecularSystem out = MolecularSystem::zeros(m, ne);
  out.e_nuclear = sys.e_nuclear;
  double ecore = sys.e_core;
  for (int c : frozen) {
    ecore += 2.0 * sys.h(c, c);
    for (int d : frozen) ecore += 2.0 * sys.eri(c, c, d, d) - sys.eri(c, d, d, c);
  }
  out.e_core = ecore;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int p = active[i], q = active[j];
      double v = sys.h(p, q);
      for (int c : frozen) v += 2.0 * sys.eri(p, q, c, c) - sys.eri(p, c, c, q);
      out.h(i, j) = v;
    }
  const std::size_t mm = m;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out.g[((i * mm + j) * mm + k) * mm + l] = sys.eri(active[i], active[j], active[k], active[l]);
  for (int i = 0; i < m; ++i) {
    out.orbital_labels[i] = sys.orbital_labels.empty() ? active[i] : sys.orbital_labels[active[i]];
    out.orbsym[i] = sys.orbsym.empty() ? 1 : sys.orbsym[active[i]];
  }
  out.frozen = sys.frozen;
  for (int c : frozen) out.frozen.push_back(sys.orbital_labels.empty() ? c : sys.orbital_labels[c]);

  if (sys.default_pairs) {
    out.pair_sets = default_pair_sets(out.h, out.n_pairs());
  } else {
    std::vector<int> index(n, -1);
    for (int i = 0; i < m; ++i) index[active[i]] = i;
    out.default_pairs = false;
    for (const auto& s : sys.pair_sets) {
      if (frz.count(s.front())) continue;
      std::vector<int> r;
      for (int p : s)
        if (index[p] >= 0) r.push_back(index[p]);
      if (index[s.front()] < 0)
        throw InputError("reference orbital " + std::to_string(s.front()) + " is not active");
      out.pair_sets.push_back(std::move(r));
    }
    if (static_cast<int>(out.pair_sets.size()) != out.n_pairs())
      throw InputError("pair sets do not match the number of active electron pairs");
  }
  out.validate();
  return out;
}

OrbitalRotation OrbitalRotation::from_lower_triangle(int n, const std::vector<double>& values) {
  if (values.size() != static_cast<std::size_t>(n * (n - 1) / 2))
    throw std::invalid_argument("kappa needs n(n-1)/2 entries");
  OrbitalRotation r = zero(n);
  std::size_t k = 0;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      r.kappa(i, j) = values[k];
      r.kappa(j, i) = -values[k];
      ++k;
    }
  return r;
}

Eigen::MatrixXd OrbitalRotation::unitary() const {
  if ((kappa + kappa.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("kappa is not antisymmetric");
  return kappa.exp();
}

MolecularSystem transform_orbitals(const MolecularSystem& sys, const Eigen::MatrixXd& c) {
  const int n = sys.n_orbitals;
  if (c.rows() != n || c.cols() != n) throw std::invalid_argument("rotation has wrong shape");
  MolecularSystem out = sys;
  out.h = c.transpose() * sys.h * c;
  const std::size_t nn = n;
  const std::size_t n3 = nn * nn * nn;
  std::vector<double> cur = sys.g, next(cur.size());
  // Transform the leading index, then rotate (a,b,c,d) -> (b,c,d,a); four passes.
  for (int pass = 0; pass < 4; ++pass) {
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> in(
        cur.data(), n, n3);
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> t = c.transpose() * in;
    for (std::size_t p = 0; p < nn; ++p)
      for (std::size_t rest = 0; rest < n3; ++rest) next[rest * nn + p] = t(p, rest);
    std::swap(cur, next);
  }
  out.g = std::move(cur);
  // Restore exact symmetry lost to rounding.
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          out.set_eri(p, q, r, s, out.eri(p, q, r, s));
        }
  out.h = 0.5 * (out.h + out.h.transpose()).eval();
  return out;
}

MolecularSystem rotate_orbitals(const MolecularSystem& sys, const OrbitalRotation& rot) {
  return transform_orbitals(sys, rot.unitary());
}

}  // namespace pairq
