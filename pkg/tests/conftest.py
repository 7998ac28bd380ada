import pytest

from cascade_lab.cascade import compute_cascade
from cascade_lab.nilradical import build_nilradical
from cascade_lab.rootsys import SimpleType, build_root_system


def setup(name):
    rs = build_root_system(SimpleType.parse(name))
    return rs, compute_cascade(rs)


def nil(name, t):
    rs, c = setup(name)
    return rs, c, build_nilradical(rs, c, t)


def small_types(max_rank=5):
    out = []
    for f in "ABCD":
        for r in range(1, max_rank + 1):
            if (f == "B" and r < 2) or (f == "D" and r < 4):
                continue
            out.append(f"{f}{r}")
    return out + ["G2", "F4"]


@pytest.fixture
def a6():
    return setup("A6")
