"""The non-archimedean Tate-type integral on the line, evaluated formally.

With multiplicative Haar measure normalized so the unit group has volume 1,

    integral over F_v^x of |t|^z phi(t e0) d^x t

is a rational function in X = q^{-z}: the characteristic function of the
lattice pi^k O gives X^k / (1 - X) (a geometric series, convergent for
Re z > 0), a single valuation shell gives X^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .forms import AffineForm, Q

Poly = dict[int, Q]


def _poly(d: Mapping[int, Q]) -> Poly:
    return {k: Q(v) for k, v in d.items() if v != 0}


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, Q(0)) + x * y
    return _poly(out)


def _padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for j, y in b.items():
        out[j] = out.get(j, Q(0)) + y
    return _poly(out)


@dataclass(frozen=True)
class ShellFunction:
    """lattice(k): indicator of pi^k O;  shell(k): indicator of valuation exactly k."""

    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in ("lattice", "shell"):
            raise ValueError("kind must be 'lattice' or 'shell'")

    @staticmethod
    def lattice(k: int) -> "ShellFunction":
        return ShellFunction("lattice", k)

    @staticmethod
    def shell(k: int) -> "ShellFunction":
        return ShellFunction("shell", k)


@dataclass(frozen=True)
class LocalFactor:
    """num/den in X = q^{-z}, with the exponent form carried for printing."""

    num: tuple[tuple[int, Q], ...]
    den: tuple[tuple[int, Q], ...]
    z: AffineForm
    convergence: str = "Re(z) > 0"

    @staticmethod
    def build(num: Poly, den: Poly, z: AffineForm) -> "LocalFactor":
        return LocalFactor(tuple(sorted(num.items())), tuple(sorted(den.items())), z)

    def _num(self) -> Poly:
        return dict(self.num)

    def _den(self) -> Poly:
        return dict(self.den)

    def equals(self, other: "LocalFactor") -> bool:
        """Exact equality of rational functions (cross multiplication)."""
        return _pmul(self._num(), other._den()) == _pmul(other._num(), self._den())

    def __add__(self, other: "LocalFactor") -> "LocalFactor":
        num = _padd(_pmul(self._num(), other._den()), _pmul(other._num(), self._den()))
        den = _pmul(self._den(), other._den())
        return LocalFactor.build(num, den, self.z)

    def is_local_zeta(self) -> bool:
        """Whether this equals zeta_v(z) = 1/(1 - q^{-z})."""
        return self.equals(LocalFactor.build({0: Q(1)}, {0: Q(1), 1: Q(-1)}, self.z))

    def __str__(self) -> str:
        def side(poly: tuple[tuple[int, Q], ...]) -> str:
            parts = []
            for k, c in poly:
                if k == 0:
                    term = str(abs(c))
                else:
                    mono = f"q^(-{k}({self.z}))" if k != 1 else f"q^(-({self.z}))"
                    term = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
                if not parts:
                    parts.append(term if c > 0 else f"-{term}")
                else:
                    parts.append(f"+ {term}" if c > 0 else f"- {term}")
            return " ".join(parts) if parts else "0"

        text = side(self.num)
        if self.den != ((0, Q(1)),):
            text = f"({text}) / ({side(self.den)})"
        return text

    def to_json(self) -> dict:
        return {"variable": f"q^(-({self.z}))",
                "num": {str(k): str(c) for k, c in self.num},
                "den": {str(k): str(c) for k, c in self.den},
                "convergence": self.convergence}


def tate_integral(f: ShellFunction, z: AffineForm) -> LocalFactor:
    """Formal value of the shell/lattice integral as a rational function in q^{-z}."""
    if f.kind == "shell":
        return LocalFactor.build({f.k: Q(1)}, {0: Q(1)}, z)
    return LocalFactor.build({f.k: Q(1)}, {0: Q(1), 1: Q(-1)}, z)


def local_zeta(z: AffineForm) -> LocalFactor:
    """zeta_v(z) = 1/(1 - q^{-z}) = tate_integral(lattice(0), z)."""
    return tate_integral(ShellFunction.lattice(0), z)
