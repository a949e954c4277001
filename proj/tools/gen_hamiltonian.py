#!/usr/bin/env python3
# Copyright 2026 The zne-pqe Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generate a qubit Hamiltonian file (.ham) from an RHF/STO-3G calculation.

Spin-orbitals are blocked: qubits [0, n) carry the alpha orbitals and
[n, 2n) the beta orbitals. The Jordan-Wigner image is obtained by building the
dense second-quantized Hamiltonian and projecting onto the Pauli basis, so it
does not share any code path with the C++ library.

    python3 tools/gen_hamiltonian.py --atoms "H 0 0 0; H 0 0 2.25" --charge 0 -o data/h2_2.25.ham
"""
import argparse
import functools
import itertools

import numpy as np
from pyscf import ao2mo, fci, gto, scf

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = {"I": I2, "X": X, "Y": Y, "Z": Z}


def kron_all(mats):
    return functools.reduce(np.kron, mats)


def annihilator(j, n):
    # qubit 0 is the leftmost tensor factor; |1> means occupied
    lower = np.array([[0, 1], [0, 0]], dtype=complex)
    return kron_all([Z] * j + [lower] + [I2] * (n - j - 1))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--atoms", required=True)
    ap.add_argument("--charge", type=int, default=0)
    ap.add_argument("--label", default="")
    ap.add_argument("-o", "--output", required=True)
    args = ap.parse_args()

    mol = gto.M(atom=args.atoms, basis="sto-3g", charge=args.charge, unit="Angstrom")
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    norb = mf.mo_coeff.shape[1]
    h1 = mf.mo_coeff.T @ mf.get_hcore() @ mf.mo_coeff
    eri = ao2mo.restore(1, ao2mo.kernel(mol, mf.mo_coeff), norb)  # (pq|rs)
    e_nuc = mol.energy_nuc()
    e_fci = fci.FCI(mf).kernel()[0]

    nq = 2 * norb
    spatial = lambda p: p % norb
    spin = lambda p: p // norb
    a = [annihilator(j, nq) for j in range(nq)]
    ad = [m.conj().T for m in a]
    dim = 2 ** nq
    H = e_nuc * np.eye(dim, dtype=complex)
    for p, q in itertools.product(range(nq), repeat=2):
        if spin(p) == spin(q):
            H += h1[spatial(p), spatial(q)] * ad[p] @ a[q]
    for p, q, r, s in itertools.product(range(nq), repeat=4):
        # 1/2 sum <pq|rs> a+_p a+_q a_s a_r, <pq|rs> = (pr|qs)
        if spin(p) == spin(r) and spin(q) == spin(s):
            v = eri[spatial(p), spatial(r), spatial(q), spatial(s)]
            if abs(v) > 0:
                H += 0.5 * v * ad[p] @ ad[q] @ a[s] @ a[r]

    terms = []
    for labels in itertools.product("IXYZ", repeat=nq):
        c = np.trace(kron_all([PAULI[l] for l in labels]) @ H) / dim
        if abs(c) > 1e-12:
            assert abs(c.imag) < 1e-12
            terms.append(("".join(labels), c.real))

    nelec = mol.nelectron
    n_alpha, n_beta = (nelec + 1) // 2, nelec // 2
    ref = list(range(n_alpha)) + [norb + k for k in range(n_beta)]
    eps = list(mf.mo_energy) * 2

    # ground energy in the fixed-particle-number sector must match FCI
    occ_ok = [k for k in range(dim) if bin(k).count("1") == nelec]
    w = np.linalg.eigvalsh(H[np.ix_(occ_ok, occ_ok)])
    assert abs(w[0] - e_fci) < 1e-9, (w[0], e_fci)
    e_ground = np.linalg.eigvalsh(H)[0]

    with open(args.output, "w", encoding="utf-8") as f:
        f.write(f"# {args.label or args.atoms} RHF/STO-3G, Jordan-Wigner, generated by tools/gen_hamiltonian.py (pyscf)\n")
        f.write("# ordering=blocked (qubits 0..n/2-1 alpha, n/2..n-1 beta)\n")
        f.write(f"# n_qubits={nq}\n")
        f.write(f"# n_electrons={nelec}\n")
        f.write("# orbital_energies=" + ",".join(f"{e:.15g}" for e in eps) + "\n")
        f.write("# reference=" + ",".join(str(k) for k in ref) + "\n")
        f.write(f"# hf_energy={mf.e_tot:.15g}\n")
        f.write(f"# fci_energy={e_fci:.15g}\n")
        f.write(f"# ground_energy={e_ground:.15g}\n")
        for label, c in terms:
            f.write(f"{c:.17g} {label}\n")
    print(args.output, len(terms), "terms; HF", mf.e_tot, "FCI", e_fci, "ground(all sectors)", e_ground)


if __name__ == "__main__":
    main()
