from __future__ import annotations

import pytest

from degeis.forms import AffineForm
from degeis.rootdata import build_system
from degeis.zetas import ZetaExpr


@pytest.fixture(scope="session")
def quasi():
    return build_system("quasi_D4")


@pytest.fixture(scope="session")
def split():
    return build_system("split_D4")


@pytest.fixture(scope="session")
def tri():
    return build_system("tri_D4")


@pytest.fixture(scope="session")
def g2():
    return build_system("G2")


@pytest.fixture(scope="session")
def a1():
    return build_system("A1")


def af(a, b=0, name="s"):
    """Affine form a*name + b."""
    return AffineForm.of(b, **{name: a})


def xi(label, a, b=0):
    """xi_label(a s + b) as a ZetaExpr."""
    return ZetaExpr.atom(label, af(a, b))


def xir(label, *linear):
    """Ratio prod xi(label, a, b) / xi(label, a, b+1) over (a, b) pairs."""
    e = ZetaExpr.one()
    for a, b in linear:
        e = e * xi(label, a, b) / xi(label, a, b + 1)
    return e
