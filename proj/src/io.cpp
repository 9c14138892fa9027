// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/io.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "pairq/errors.hpp"

namespace pairq {

namespace fs = std::filesystem;

std::string reference_path(const std::string& fcidump_path) {
  fs::path p(fcidump_path);
  p.replace_extension(".ref.json");
  return p.string();
}

std::optional<ReferenceData> read_reference(const std::string& fcidump_path) {
  const std::string path = reference_path(fcidump_path);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    ReferenceData r;
    r.molecule = j.value("molecule", "");
    r.geometry_tag = j.value("geometry_tag", "");
    r.basis = j.value("basis", "");
    r.frozen = j.value("frozen", std::vector<int>{});
    r.active = j.value("active", std::vector<int>{});
    if (j.contains("e_scf") && j["e_scf"].is_number()) r.e_scf = j["e_scf"].get<double>();
    if (j.contains("e_fci") && j["e_fci"].is_number()) r.e_fci = j["e_fci"].get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("bad reference file '" + path + "': " + e.what());
  }
}

LoadedSystem load_system(const std::string& fcidump_path, std::vector<int> frozen, std::vector<int> active) {
  LoadedSystem out;
  out.full = read_fcidump(fcidump_path);
  out.reference = read_reference(fcidump_path);
  if (frozen.empty() && active.empty() && out.reference) {
    frozen = out.reference->frozen;
    active = out.reference->active;
  }
  if (active.empty()) {
    std::vector<bool> is_frozen(static_cast<std::size_t>(out.full.n_orbitals), false);
    for (int f : frozen) {
      if (f < 0 || f >= out.full.n_orbitals) throw InputError("frozen orbital out of range");
      is_frozen[static_cast<std::size_t>(f)] = true;
    }
    for (int p = 0; p < out.full.n_orbitals; ++p)
      if (!is_frozen[static_cast<std::size_t>(p)]) active.push_back(p);
  }
  out.frozen = frozen;
  out.active_orbitals = active;
  out.active = apply_active_space(out.full, active, frozen);
  return out;
}

}  // namespace pairq
