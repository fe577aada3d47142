import itertools

import pytest

from domkit.cnf import parse_dimacs

# the worked example instance: C1 = {u1, u2, -u3}, C2 = {-u1, u2, u4}, C3 = {-u2, u3, u4}
FIG_DIMACS = "p cnf 4 3\n1 2 -3 0\n-1 2 4 0\n-2 3 4 0\n"

# variant used by the total reinforcement example:
# C1 = {u1, u2, -u3}, C2 = {u1, -u2, u4}, C3 = {-u2, -u3, u4}
FIG4_DIMACS = "p cnf 4 3\n1 2 -3 0\n1 -2 4 0\n-2 -3 4 0\n"

# all eight sign patterns over three variables: unsatisfiable by construction
UNSAT8_DIMACS = "p cnf 3 8\n" + "\n".join(
    " ".join(str(s * v) for s, v in zip(signs, (1, 2, 3))) + " 0"
    for signs in itertools.product((1, -1), repeat=3)
) + "\n"


@pytest.fixture
def fig_instance():
    return parse_dimacs(FIG_DIMACS)


@pytest.fixture
def fig4_instance():
    return parse_dimacs(FIG4_DIMACS)


@pytest.fixture
def unsat8_instance():
    return parse_dimacs(UNSAT8_DIMACS)
