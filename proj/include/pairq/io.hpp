// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairq/molecule.hpp"

namespace pairq {

// Contents of the <tag>.ref.json file next to a fixture FCIDUMP.
struct ReferenceData {
  std::string molecule;
  std::string geometry_tag;
  std::string basis;
  std::vector<int> frozen;
  std::vector<int> active;
  std::optional<double> e_scf;
  std::optional<double> e_fci;
};

// <dir>/<stem>.ref.json for <dir>/<stem>.fcidump.
std::string reference_path(const std::string& fcidump_path);
std::optional<ReferenceData> read_reference(const std::string& fcidump_path);

struct LoadedSystem {
  MolecularSystem full;
  MolecularSystem active;  // after folding; equal to full when nothing is frozen or dropped
  std::vector<int> frozen;
  std::vector<int> active_orbitals;
  std::optional<ReferenceData> reference;
};

// Reads an FCIDUMP and applies the active space from explicit lists or, when
// both are empty, from the sidecar reference file. Throws InputError.
LoadedSystem load_system(const std::string& fcidump_path, std::vector<int> frozen = {},
                         std::vector<int> active = {});

}  // namespace pairq
