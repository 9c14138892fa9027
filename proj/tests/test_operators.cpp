// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>

#include "pairq/fermion.hpp"
#include "pairq/pauli.hpp"
#include "support.hpp"

using namespace pairq;
using support::dense;
using support::Mat;

namespace {

// Fock-space ladder matrix from occupation bitstrings; sign counts occupied
// modes below j.
Mat fock_ladder(int j, bool creation, int n) {
  const auto dim = Eigen::Index{1} << n;
  Mat m = Mat::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const bool occ = (b >> j) & 1;
    if (occ == creation) continue;
    const int sign = (std::popcount(static_cast<std::uint64_t>(b) & ((1ull << j) - 1)) & 1) ? -1 : 1;
    m(b ^ (Eigen::Index{1} << j), b) = sign;
  }
  return m;
}

}  // namespace

TEST_CASE("Pauli products follow the single-qubit multiplication table") {
  const cplx i(0, 1);
  auto prod = [](const char* a, const char* b) {
    return multiply(PauliString::parse(a), PauliString::parse(b));
  };
  CHECK(prod("X0", "Y0").word == PauliString::parse("Z0").word);
  CHECK(prod("X0", "Y0").coeff == i);
  CHECK(prod("Y0", "X0").coeff == -i);
  CHECK(prod("Z0", "X0").coeff == i);
  CHECK(prod("Y0", "Z0").coeff == i);
  CHECK(prod("X0", "X0").word.is_identity());
  // two anticommuting positions commute overall
  CHECK(PauliString::parse("X0 Y1").word.commutes_with(PauliString::parse("Y0 X1").word));
  CHECK_FALSE(PauliString::parse("X0 Z1").word.commutes_with(PauliString::parse("Z0 Z1").word));
}

TEST_CASE("PauliSum arithmetic agrees with dense matrices") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1, 1);
  const char* axes = "IXYZ";
  auto random_sum = [&] {
    std::vector<PauliString> terms;
    for (int k = 0; k < 6; ++k) {
      PauliWord w;
      for (int q = 0; q < 3; ++q) {
        const char c = axes[std::uniform_int_distribution<int>(0, 3)(rng)];
        if (c != 'I') w.set(q, c == 'X' ? Axis::X : c == 'Y' ? Axis::Y : Axis::Z);
      }
      terms.push_back({w, cplx(d(rng), d(rng))});
    }
    return PauliSum(terms);
  };
  for (int trial = 0; trial < 5; ++trial) {
    const PauliSum a = random_sum(), b = random_sum();
    CHECK((dense(a * b, 3) - dense(a, 3) * dense(b, 3)).norm() < 1e-12);
    CHECK((dense(a + b, 3) - dense(a, 3) - dense(b, 3)).norm() < 1e-12);
    CHECK((dense(a.adjoint(), 3) - dense(a, 3).adjoint()).norm() < 1e-12);
    CHECK((dense(commutator(a, b), 3) - (dense(a, 3) * dense(b, 3) - dense(b, 3) * dense(a, 3))).norm() < 1e-12);
  }
}

TEST_CASE("Jordan-Wigner ladder operators match the Fock-space construction") {
  const int n = 4;
  for (int j = 0; j < n; ++j)
    for (bool c : {true, false}) CHECK((dense(jw_ladder(j, c), n) - fock_ladder(j, c, n)).norm() < 1e-12);
  // canonical anticommutation
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const PauliSum a = jw_ladder(j, false), ad = jw_ladder(k, true);
      const PauliSum anti = a * ad + ad * a;
      const PauliSum expected = j == k ? PauliSum::single({PauliWord{}, 1.0}) : PauliSum{};
      CHECK(anti.distance(expected) < 1e-12);
      CHECK((jw_ladder(j, false) * jw_ladder(k, false) + jw_ladder(k, false) * jw_ladder(j, false)).terms().empty());
    }
}

TEST_CASE("creation operator maps |0> to |1> with a positive amplitude") {
  const Mat ad = dense(jw_ladder(0, true), 1);
  CHECK(std::abs(ad(1, 0) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(ad(0, 1)) < 1e-15);
}

TEST_CASE("excitation generators are Hermitian with spectrum in {-1,0,1}") {
  const int n = 6;
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
      {{2}, {0}}, {{4, 5}, {0, 1}}, {{3, 5}, {0, 2}}, {{1, 4}, {0, 3}}};
  for (const auto& [cr, an] : cases) {
    for (int kind = 0; kind < 2; ++kind) {
      const PauliSum g = kind == 0 ? jordan_wigner(excitation_generator(cr, an), n) : qubit_excitation_generator(cr, an);
      CHECK(g.is_hermitian());
      const Mat m = dense(g, n);
      CHECK((m * m * m - m).norm() < 1e-12);
      const Mat p = dense(nullspace_projector(g), n);
      CHECK((p * p - p).norm() < 1e-12);
      CHECK((p * m).norm() < 1e-12);
      CHECK(std::abs((m * m).trace().real() - 2.0 * double(1 << (n - 2 * cr.size()))) < 1e-9);
    }
  }
  CHECK_THROWS(excitation_generator({1, 2}, {2, 3}));
}

TEST_CASE("generator sign: exp(-i pi/2 G) moves the annihilated orbital's particle") {
  // G = i(a+_1 a_0 - h.c.) on |01> (qubit 0 filled)
  const PauliSum g = jordan_wigner(excitation_generator({1}, {0}), 2);
  const Mat u = support::expm_herm(dense(g, 2), M_PI / 2);
  CHECK(std::abs(u(2, 1) - cplx(1.0)) < 1e-12);
  CHECK(std::abs(u(1, 2) - cplx(-1.0)) < 1e-12);
}

TEST_CASE("paired generators: JW form equals the ladder expression, HCB form is (YX - XY)/2") {
  for (auto layout : {SpinLayout::Interleaved, SpinLayout::Blocked}) {
    const int n = 3;
    const int pu = spin_orbital(2, Spin::Up, n, layout), pd = spin_orbital(2, Spin::Down, n, layout);
    const int qu = spin_orbital(0, Spin::Up, n, layout), qd = spin_orbital(0, Spin::Down, n, layout);
    const PauliSum ref = jordan_wigner(excitation_generator({pu, pd}, {qu, qd}), 2 * n);
    CHECK(paired_generator_jw(2, 0, n, layout).distance(ref) < 1e-12);
  }
  const PauliSum hcb = paired_generator_hcb(1, 0);
  const PauliSum expected = PauliSum({{PauliString::parse("Y1 X0").word, 0.5}, {PauliString::parse("X1 Y0").word, -0.5}});
  CHECK(hcb.distance(expected) < 1e-12);
}

TEST_CASE("spin orbital layouts") {
  CHECK(spin_orbital(3, Spin::Up, 5, SpinLayout::Interleaved) == 6);
  CHECK(spin_orbital(3, Spin::Down, 5, SpinLayout::Interleaved) == 7);
  CHECK(spin_orbital(3, Spin::Up, 5, SpinLayout::Blocked) == 3);
  CHECK(spin_orbital(3, Spin::Down, 5, SpinLayout::Blocked) == 8);
  CHECK(parse_spin_layout(to_string(SpinLayout::Blocked)) == SpinLayout::Blocked);
}
