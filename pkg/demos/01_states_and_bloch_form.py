"""Tour of the state layer: families, validation, and the Bloch form.

Every two-qubit density matrix is equivalent to the real triple (x, y, T):
the two local Bloch vectors and the 3x3 joint correlation matrix. The
discord computation downstream runs entirely on that triple.
"""

import numpy as np

from ggqd import (
    StateFamilySpec,
    correlation_matrix,
    generate_state,
    pauli_decompose,
    trace_cc,
    validate_density,
)

np.set_printoptions(precision=4, suppress=True)

print("=== maximally mixed state ===")
mixed = validate_density(np.eye(4) / 4)
corr = pauli_decompose(mixed)
print("x =", corr.x, " y =", corr.y)
print("T =\n", corr.T)
print("trace_cc =", trace_cc(corr), "(bare 1/4: no correlations at all)\n")

print("=== Bell state (|00> + |11>) / sqrt(2) ===")
bell = generate_state(StateFamilySpec("bell_phi_plus"))
corr = pauli_decompose(bell)
print("T =\n", corr.T)
print("trace_cc =", trace_cc(corr), "(maximal for two qubits)\n")

print("=== singlet-based Werner state, p = 0.7 ===")
werner = generate_state(StateFamilySpec("werner", {"p": 0.7}))
corr = pauli_decompose(werner)
print("T =\n", corr.T, "\n")

print("=== Bell mixture 1/4 (IxI - sy x sy + C3 sz x sz), C3 = 0.5 ===")
print("This family is only positive semidefinite at C3 = 0; its smallest")
print("eigenvalue is -|C3|/4, so constructing it needs an explicit waiver.")
bm = generate_state(StateFamilySpec("bell_mixture", {"c3": 0.5}), allow_nonphysical=True)
print("physical_flag =", bm.physical_flag, "|", bm.diagnostic)
corr = pauli_decompose(bm)
print("4x4 coefficient matrix C:\n", correlation_matrix(corr))
print("trace_cc =", trace_cc(corr), "= (C3^2 + 2)/4 =", (0.5**2 + 2) / 4)
