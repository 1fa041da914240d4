from fractions import Fraction as Q

from hypothesis import given, settings
from hypothesis import strategies as st

from degeis.forms import AffineForm
from degeis.localint import LocalFactor, ShellFunction, local_zeta, tate_integral

Z = AffineForm.of(3, s=2)


def test_lattice_zero_is_local_zeta():
    value = tate_integral(ShellFunction.lattice(0), Z)
    assert value.is_local_zeta()
    assert value.equals(local_zeta(Z))
    assert "1 - q^(-(2s+3))" in str(value)
    assert value.convergence == "Re(z) > 0"


def test_single_shell_has_unit_volume():
    for k in (-2, 0, 1, 5):
        value = tate_integral(ShellFunction.shell(k), Z)
        assert value.num == ((k, Q(1)),)
        assert value.den == ((0, Q(1)),)


def test_lattice_one_by_summing_shells():
    # derived oracle: sum the shell values for k >= 1
    expected = tate_integral(ShellFunction.lattice(1), Z)
    acc = tate_integral(ShellFunction.shell(1), Z)
    partial = acc
    for k in range(2, 30):
        partial = partial + tate_integral(ShellFunction.shell(k), Z)
    # the tail is lattice(30)
    total = partial + tate_integral(ShellFunction.lattice(30), Z)
    assert total.equals(expected)


def test_functional_identity():
    one = LocalFactor.build({0: Q(1)}, {0: Q(1)}, Z)
    zeta = tate_integral(ShellFunction.lattice(0), Z)
    product = LocalFactor.build(
        dict(zeta.num), {0: Q(1)}, Z)
    # zeta * (1 - X) == 1 by cross-multiplied equality
    lhs = LocalFactor.build({0: Q(1), 1: Q(-1)}, dict(zeta.den), Z)
    assert lhs.equals(one)


@settings(max_examples=60, deadline=None)
@given(st.integers(-6, 6), st.integers(0, 12))
def test_shell_additivity_property(k, span):
    # lattice(k) = sum_{j=k}^{k+span} shell(j) + lattice(k+span+1)
    total = tate_integral(ShellFunction.lattice(k + span + 1), Z)
    for j in range(k, k + span + 1):
        total = total + tate_integral(ShellFunction.shell(j), Z)
    assert total.equals(tate_integral(ShellFunction.lattice(k), Z))
