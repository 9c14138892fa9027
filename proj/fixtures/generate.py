# Copyright 2026 The pairq Authors.
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the FCIDUMP fixtures and their reference energies.

Writes <out>/<molecule>/<tag>.fcidump (RHF canonical orbitals, all orbitals)
and <tag>.ref.json with SCF and CASCI energies in the listed frozen/active
space. Needs pyscf; the test suites only read the checked-in outputs.
"""

import argparse
import json
from pathlib import Path

from pyscf import gto, mcscf, scf
from pyscf.tools import fcidump

ETHANE = """C 0 0 0.7635; C 0 0 -0.7635;
H 1.0192 0 1.1573; H -0.5096 0.8826 1.1573; H -0.5096 -0.8826 1.1573;
H -1.0192 0 -1.1573; H 0.5096 -0.8826 -1.1573; H 0.5096 0.8826 -1.1573"""


def h2(r):
    return f"H 0 0 0; H 0 0 {r}"


def lih(r):
    return f"Li 0 0 0; H 0 0 {r}"


def beh2(r):
    return f"Be 0 0 0; H 0 0 {r}; H 0 0 {-r}"


def n2(r):
    return f"N 0 0 0; N 0 0 {r}"


def manifest():
    """(directory, basis, atoms, tag, frozen, active, note) for every fixture."""
    rows = []
    for r in (0.74, 1.5, 2.5):
        rows.append(("h2_sto-3g", "sto-3g", h2(r), f"r{r:.2f}", [], [0, 1], ""))
        rows.append(("h2_6-31g", "6-31g", h2(r), f"r{r:.2f}", [], [0, 1, 2, 3], ""))
    for r in (1.6, 2.4, 3.2):
        rows.append(("lih_sto-3g", "sto-3g", lih(r), f"r{r:.2f}", [0], [1, 2, 3, 4, 5], ""))
    for r in (1.3, 2.5, 5.0):
        rows.append(("beh2_sto-3g", "sto-3g", beh2(r), f"r{r:.2f}", [0], [1, 2, 3, 4], ""))
    for r in (1.1, 1.6, 2.2):
        rows.append(("n2_sto-3g", "sto-3g", n2(r), f"r{r:.2f}", [0, 1, 2, 3], [4, 5, 6, 7, 8, 9], ""))
    rows.append(("c2h6_sto-3g", "sto-3g", ETHANE, "eq", list(range(8)), [8, 9, 10, 11, 12, 13],
                 "staggered ethane, standard geometry; (2,12) active space = HOMO + 5 lowest virtuals"))
    return rows


def generate(out, name, basis, atoms, tag, frozen, active, note=""):
    mol = gto.M(atom=atoms, basis=basis, unit="Angstrom", verbose=0, symmetry=False)
    mf = scf.RHF(mol).run(conv_tol=1e-12)
    norb = mf.mo_coeff.shape[1]
    d = out / name
    d.mkdir(parents=True, exist_ok=True)
    fcidump.from_scf(mf, str(d / f"{tag}.fcidump"), tol=1e-14)

    nelec_act = mol.nelectron - 2 * len(frozen)
    mc = mcscf.CASCI(mf, len(active), nelec_act)
    # frozen orbitals must be exactly the lowest ones for sort_mo to keep them in place
    mo = mcscf.sort_mo(mc, mf.mo_coeff, [a + 1 for a in active], base=1)
    mc.fcisolver.conv_tol = 1e-12
    e_cas = mc.kernel(mo)[0]

    ref = {
        "molecule": name.split("_")[0],
        "geometry_tag": tag,
        "basis": basis,
        "atoms": atoms,
        "n_electrons": int(mol.nelectron),
        "n_orbitals": int(norb),
        "frozen": [int(i) for i in frozen],
        "active": [int(i) for i in active],
        "n_electrons_active": int(nelec_act),
        "n_qubits": 2 * len(active),
        "e_nuclear": float(mol.energy_nuc()),
        "e_scf": float(mf.e_tot),
        "e_fci": float(e_cas),
    }
    if note:
        ref["note"] = note
    with open(d / f"{tag}.ref.json", "w", encoding="utf-8") as f:
        json.dump(ref, f, indent=2)
        f.write("\n")
    print(name, tag, norb, ref["e_scf"], ref["e_fci"])


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("out", nargs="?", default=Path(__file__).resolve().parent, type=Path)
    parser.add_argument("--only", help="generate only this molecule directory, e.g. lih_sto-3g")
    args = parser.parse_args()
    for row in manifest():
        if args.only and row[0] != args.only:
            continue
        generate(args.out, *row)


if __name__ == "__main__":
    main()
