import pytest

from ppring import (alternating, cyclic, dihedral, quaternion8, symmetric)

CORPUS = [
    ("C2", lambda: cyclic(2)),
    ("C3", lambda: cyclic(3)),
    ("C4", lambda: cyclic(4)),
    ("C6", lambda: cyclic(6)),
    ("S3", lambda: symmetric(3)),
    ("D8", lambda: dihedral(8)),
    ("Q8", lambda: quaternion8()),
    ("A4", lambda: alternating(4)),
    ("D12", lambda: dihedral(12)),
    ("S4", lambda: symmetric(4)),
]


@pytest.fixture(scope="session")
def corpus():
    return [(name, build()) for name, build in CORPUS]
