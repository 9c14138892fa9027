// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pairq {

namespace {

void check_qubit(int q) {
  if (q < 0 || q >= PauliWord::kMaxQubits)
    throw std::out_of_range("qubit index " + std::to_string(q) + " outside [0, 128)");
}

cplx i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

using Accumulator = std::unordered_map<PauliWord, cplx, PauliWordHash>;

std::vector<PauliString> collect(const Accumulator& acc, double drop_tol) {
  std::vector<PauliString> out;
  out.reserve(acc.size());
  for (const auto& [w, c] : acc)
    if (!(std::abs(c) <= drop_tol)) out.emplace_back(w, c);  // NaN survives
  std::sort(out.begin(), out.end(),
            [](const PauliString& a, const PauliString& b) { return a.word < b.word; });
  return out;
}

}  // namespace

char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    default: return 'Z';
  }
}

void PauliWord::set(int qubit, Axis axis) {
  check_qubit(qubit);
  const int w = qubit / 64;
  const std::uint64_t bit = std::uint64_t{1} << (qubit % 64);
  x_[w] &= ~bit;
  z_[w] &= ~bit;
  if (axis != Axis::Z) x_[w] |= bit;
  if (axis != Axis::X) z_[w] |= bit;
}

void PauliWord::clear(int qubit) {
  check_qubit(qubit);
  const std::uint64_t bit = std::uint64_t{1} << (qubit % 64);
  x_[qubit / 64] &= ~bit;
  z_[qubit / 64] &= ~bit;
}

std::optional<Axis> PauliWord::axis(int qubit) const {
  check_qubit(qubit);
  const int w = qubit / 64;
  const int b = qubit % 64;
  const bool x = (x_[w] >> b) & 1;
  const bool z = (z_[w] >> b) & 1;
  if (x && z) return Axis::Y;
  if (x) return Axis::X;
  if (z) return Axis::Z;
  return std::nullopt;
}

int PauliWord::weight() const {
  return std::popcount(x_[0] | z_[0]) + std::popcount(x_[1] | z_[1]);
}

int PauliWord::y_count() const {
  return std::popcount(x_[0] & z_[0]) + std::popcount(x_[1] & z_[1]);
}

bool PauliWord::has_z() const { return ((z_[0] & ~x_[0]) | (z_[1] & ~x_[1])) != 0; }

int PauliWord::max_qubit() const {
  for (int w = 1; w >= 0; --w) {
    const std::uint64_t m = x_[w] | z_[w];
    if (m) return 64 * w + 63 - std::countl_zero(m);
  }
  return -1;
}

std::map<int, Axis> PauliWord::factors() const {
  std::map<int, Axis> out;
  for (int w = 0; w < 2; ++w) {
    std::uint64_t m = x_[w] | z_[w];
    while (m) {
      const int b = std::countr_zero(m);
      m &= m - 1;
      out.emplace(64 * w + b, *axis(64 * w + b));
    }
  }
  return out;
}

std::string PauliWord::to_string() const {
  if (is_identity()) return "I";
  std::string s;
  for (const auto& [q, a] : factors()) {
    if (!s.empty()) s += ' ';
    s += axis_char(a);
    s += std::to_string(q);
  }
  return s;
}

bool PauliWord::commutes_with(const PauliWord& o) const {
  int anti = 0;
  for (int w = 0; w < 2; ++w)
    anti += std::popcount((x_[w] & o.z_[w]) ^ (z_[w] & o.x_[w]));
  return anti % 2 == 0;
}

std::size_t PauliWordHash::operator()(const PauliWord& w) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < 2; ++i) {
    h ^= w.x_[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= w.z_[i] * 0xff51afd7ed558ccdULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

PauliString PauliString::parse(const std::string& text, cplx coeff) {
  PauliString out;
  out.coeff = coeff;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "I") continue;
    if (tok.size() < 2) throw std::invalid_argument("bad Pauli token '" + tok + "'");
    Axis a;
    switch (tok[0]) {
      case 'X': a = Axis::X; break;
      case 'Y': a = Axis::Y; break;
      case 'Z': a = Axis::Z; break;
      default: throw std::invalid_argument("bad Pauli token '" + tok + "'");
    }
    const int q = std::stoi(tok.substr(1));
    if (out.word.axis(q)) throw std::invalid_argument("qubit repeated in '" + text + "'");
    out.word.set(q, a);
  }
  return out;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  PauliWord w;
  int pos = 0;
  int neg = 0;
  std::array<std::uint64_t, 2> x{}, z{};
  for (int i = 0; i < 2; ++i) {
    const std::uint64_t ax = a.word.x_bits(i), az = a.word.z_bits(i);
    const std::uint64_t bx = b.word.x_bits(i), bz = b.word.z_bits(i);
    const std::uint64_t aX = ax & ~az, aY = ax & az, aZ = ~ax & az;
    const std::uint64_t bX = bx & ~bz, bY = bx & bz, bZ = ~bx & bz;
    pos += std::popcount((aX & bY) | (aY & bZ) | (aZ & bX));
    neg += std::popcount((aY & bX) | (aZ & bY) | (aX & bZ));
    x[i] = ax ^ bx;
    z[i] = az ^ bz;
  }
  w = PauliWord::from_bits(x, z);
  return {w, a.coeff * b.coeff * i_power(pos - neg)};
}

PauliSum::PauliSum(const std::vector<PauliString>& terms, double drop_tol) {
  Accumulator acc;
  acc.reserve(terms.size());
  for (const auto& t : terms) acc[t.word] += t.coeff;
  terms_ = collect(acc, drop_tol);
}

PauliSum PauliSum::constant(cplx c) { return PauliSum({PauliString(PauliWord{}, c)}); }

int PauliSum::n_qubits() const {
  int m = -1;
  for (const auto& t : terms_) m = std::max(m, t.word.max_qubit());
  return m + 1;
}

cplx PauliSum::coefficient(const PauliWord& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const PauliString& t, const PauliWord& v) { return t.word < v; });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return 0.0;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out = *this;
  for (auto& t : out.terms_) t.coeff = std::conj(t.coeff);
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const PauliString& t) { return std::abs(t.coeff.imag()) <= tol; });
}

double PauliSum::distance(const PauliSum& other) const {
  double d = 0.0;
  for (const auto& t : (*this - other).terms_) d = std::max(d, std::abs(t.coeff));
  return d;
}

std::uint64_t PauliSum::fingerprint() const {
  std::uint64_t h = terms_.size();
  PauliWordHash wh;
  for (const auto& t : terms_) {
    std::uint64_t v = wh(t.word);
    const double re = t.coeff.real(), im = t.coeff.imag();
    v ^= std::bit_cast<std::uint64_t>(re) * 0x100000001b3ULL;
    v ^= std::bit_cast<std::uint64_t>(im) * 0xc2b2ae3d27d4eb4fULL;
    h = (h ^ v) * 0x9e3779b97f4a7c15ULL + (h >> 29);
  }
  return h;
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(12);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << terms_[i].coeff.real() << (terms_[i].coeff.imag() < 0 ? "" : "+")
       << terms_[i].coeff.imag() << "j) " << terms_[i].word.to_string();
  }
  return os.str();
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  std::vector<PauliString> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  *this = PauliSum(all);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) { return *this += (-1.0) * o; }

PauliSum& PauliSum::operator*=(cplx c) {
  std::vector<PauliString> all = terms_;
  for (auto& t : all) t.coeff *= c;
  *this = PauliSum(all);
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  Accumulator acc;
  acc.reserve(a.size() * b.size() / 2 + 1);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      const PauliString p = multiply(x, y);
      acc[p.word] += p.coeff;
    }
  PauliSum out;
  out.terms_ = collect(acc, PauliSum::kDropTolerance);
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) { return a * b - b * a; }

}  // namespace pairq
