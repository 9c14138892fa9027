// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pairq {

using cplx = std::complex<double>;

enum class Axis : std::uint8_t { X, Y, Z };

char axis_char(Axis a);

// Tensor product of single-qubit Paulis stored as x/z bit masks.
// A qubit with both bits set carries Y.
class PauliWord {
 public:
  static constexpr int kMaxQubits = 128;

  PauliWord() = default;
  static PauliWord from_bits(std::array<std::uint64_t, 2> x, std::array<std::uint64_t, 2> z) {
    PauliWord w;
    w.x_ = x;
    w.z_ = z;
    return w;
  }

  void set(int qubit, Axis axis);
  void clear(int qubit);
  std::optional<Axis> axis(int qubit) const;

  int weight() const;
  // Largest qubit index with a non-identity factor, -1 for the identity.
  int max_qubit() const;
  bool is_identity() const { return x_ == kZero && z_ == kZero; }
  bool is_diagonal() const { return x_ == kZero; }
  bool has_z() const;

  std::uint64_t x_bits(int word = 0) const { return x_[word]; }
  std::uint64_t z_bits(int word = 0) const { return z_[word]; }
  // Number of Y factors.
  int y_count() const;

  std::map<int, Axis> factors() const;
  std::string to_string() const;

  bool commutes_with(const PauliWord& other) const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
  friend auto operator<=>(const PauliWord&, const PauliWord&) = default;
  friend struct PauliWordHash;

 private:
  static constexpr std::array<std::uint64_t, 2> kZero{};
  std::array<std::uint64_t, 2> x_{};
  std::array<std::uint64_t, 2> z_{};
};

struct PauliWordHash {
  std::size_t operator()(const PauliWord& w) const noexcept;
};

struct PauliString {
  PauliWord word;
  cplx coeff{1.0, 0.0};

  PauliString() = default;
  PauliString(PauliWord w, cplx c) : word(w), coeff(c) {}
  // Parses "X0 Y3 Z5" (empty or "I" for the identity).
  static PauliString parse(const std::string& text, cplx coeff = 1.0);

  std::map<int, Axis> factors() const { return word.factors(); }
};

PauliString multiply(const PauliString& a, const PauliString& b);

class PauliSum {
 public:
  static constexpr double kDropTolerance = 1e-12;

  PauliSum() = default;
  // Combines equal words and drops small coefficients.
  explicit PauliSum(const std::vector<PauliString>& terms, double drop_tol = kDropTolerance);
  static PauliSum constant(cplx c);
  static PauliSum single(const PauliString& s) { return PauliSum({s}); }

  const std::vector<PauliString>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  // Minimum register size the operator acts on.
  int n_qubits() const;

  cplx coefficient(const PauliWord& w) const;
  PauliSum adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;
  PauliSum simplified(double drop_tol) const { return PauliSum(terms_, drop_tol); }
  // Largest coefficient magnitude of (this - other).
  double distance(const PauliSum& other) const;
  std::uint64_t fingerprint() const;
  std::string to_string() const;

  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(cplx c);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(cplx c, PauliSum a) { return a *= c; }
  friend PauliSum operator*(PauliSum a, cplx c) { return a *= c; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

 private:
  std::vector<PauliString> terms_;  // sorted by word
};

PauliSum commutator(const PauliSum& a, const PauliSum& b);

}  // namespace pairq
