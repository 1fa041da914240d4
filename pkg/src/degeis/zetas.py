"""Formal products of completed Dedekind zeta atoms with exact Laurent analysis.

A :class:`ZetaExpr` is

    scalar * prod(num forms) / prod(den forms) * prod xi_L(arg)^e * prod R_L^m

where the forms and atom arguments are affine in formal parameters, xi_L is
the completed zeta function of the field labelled L (xi_L(s) = xi_L(1-s),
simple poles at 0 and 1 with residues -R_L and R_L), and R_L is the residue
symbol of xi_L at 1.  Expressions are kept in a canonical form:

* affine factors are primitive (integer coprime coefficients, positive
  leading coefficient) with the scale folded into ``scalar``;
* atom arguments are rewritten through the functional equation to the
  representative of {x, 1-x} whose leading parameter coefficient is positive
  (for constants: the larger of the two), and atoms with equal (label, arg)
  merge by adding exponents.

Two expressions are equal as functions iff their canonical forms coincide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import HyperplaneDegeneracyError, IndeterminateZeroRegionError
from .forms import AffineForm, Q, Rat, _q


def _primitive(f: AffineForm) -> tuple[AffineForm, Q]:
    """Rescale f to integer coprime coefficients with positive lead.

    Returns (primitive form, factor) with f == factor * primitive.
    """
    if f.is_zero():
        raise ValueError("zero form has no primitive representative")
    values = [c for _, c in f.coeffs] + ([f.const] if f.const != 0 else [])
    denom_lcm = 1
    for v in values:
        denom_lcm = denom_lcm * v.denominator // _gcd(denom_lcm, v.denominator)
    nums = [abs(int(v * denom_lcm)) for v in values]
    g = 0
    for n in nums:
        g = _gcd(g, n)
    scale = Q(denom_lcm, g)
    lead = f.leading_coeff() if f.coeffs else f.const
    if lead < 0:
        scale = -scale
    return f * scale, 1 / scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def canonical_arg(arg: AffineForm) -> tuple[AffineForm, bool]:
    """Representative of {arg, 1-arg} under the functional equation.

    Picks the one with positive leading parameter coefficient; for constant
    arguments the larger of the two.  Returns (canonical, flipped).
    """
    if arg.coeffs:
        return (arg, False) if arg.leading_coeff() > 0 else (1 - arg, True)
    return (arg, False) if arg.const >= 1 - arg.const else (1 - arg, True)


@dataclass(frozen=True, order=True)
class ZetaAtom:
    label: str
    arg: AffineForm
    exp: int = 1

    def __str__(self) -> str:
        base = f"xi_{self.label}({self.arg})"
        return base if self.exp == 1 else f"{base}^{self.exp}"

    def to_json(self) -> dict:
        return {"label": self.label, "arg": self.arg.to_json(), "exp": self.exp}


@dataclass(frozen=True)
class ZetaExpr:
    scalar: Q = Q(1)
    num: tuple[AffineForm, ...] = ()
    den: tuple[AffineForm, ...] = ()
    atoms: tuple[ZetaAtom, ...] = ()
    residues: tuple[tuple[str, int], ...] = ()

    @staticmethod
    def build(scalar: Rat = 1,
              num: Iterable[AffineForm] = (),
              den: Iterable[AffineForm] = (),
              atoms: Iterable[ZetaAtom] = (),
              residues: Iterable[tuple[str, int]] = ()) -> "ZetaExpr":
        sc = _q(scalar)
        if sc == 0:
            return ZetaExpr(Q(0))
        nn: list[AffineForm] = []
        dd: list[AffineForm] = []
        for f in num:
            if f.is_constant():
                sc *= f.const
                continue
            p, fac = _primitive(f)
            sc *= fac
            nn.append(p)
        for f in den:
            if f.is_constant():
                sc /= f.const
                continue
            p, fac = _primitive(f)
            sc /= fac
            dd.append(p)
        if sc == 0:
            return ZetaExpr(Q(0))
        # cancel common affine factors
        for f in list(nn):
            if f in dd:
                nn.remove(f)
                dd.remove(f)
        merged: dict[tuple[str, AffineForm], int] = {}
        for a in atoms:
            arg, _ = canonical_arg(a.arg)
            key = (a.label, arg)
            merged[key] = merged.get(key, 0) + a.exp
        at = tuple(sorted(ZetaAtom(l, g, e) for (l, g), e in merged.items() if e != 0))
        res: dict[str, int] = {}
        for l, m in residues:
            res[l] = res.get(l, 0) + m
        rr = tuple(sorted((l, m) for l, m in res.items() if m != 0))
        return ZetaExpr(sc, tuple(sorted(nn)), tuple(sorted(dd)), at, rr)

    @staticmethod
    def one() -> "ZetaExpr":
        return ZetaExpr()

    @staticmethod
    def atom(label: str, arg: AffineForm, exp: int = 1) -> "ZetaExpr":
        return ZetaExpr.build(atoms=[ZetaAtom(label, arg, exp)])

    @staticmethod
    def residue_symbol(label: str, power: int = 1) -> "ZetaExpr":
        return ZetaExpr.build(residues=[(label, power)])

    def is_zero(self) -> bool:
        return self.scalar == 0

    def __mul__(self, other: "ZetaExpr | Rat") -> "ZetaExpr":
        if not isinstance(other, ZetaExpr):
            return ZetaExpr.build(self.scalar * _q(other), self.num, self.den,
                                  self.atoms, self.residues)
        return ZetaExpr.build(self.scalar * other.scalar,
                              self.num + other.num, self.den + other.den,
                              self.atoms + other.atoms,
                              self.residues + other.residues)

    __rmul__ = __mul__

    def inverse(self) -> "ZetaExpr":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero ZetaExpr")
        return ZetaExpr.build(1 / self.scalar, self.den, self.num,
                              tuple(ZetaAtom(a.label, a.arg, -a.exp) for a in self.atoms),
                              tuple((l, -m) for l, m in self.residues))

    def __truediv__(self, other: "ZetaExpr | Rat") -> "ZetaExpr":
        if not isinstance(other, ZetaExpr):
            return self * (Q(1) / _q(other))
        return self * other.inverse()

    def __neg__(self) -> "ZetaExpr":
        return self * Q(-1)

    def subs(self, assignment: Mapping[str, AffineForm | Rat]) -> "ZetaExpr":
        return ZetaExpr.build(
            self.scalar,
            [f.subs(assignment) for f in self.num],
            [f.subs(assignment) for f in self.den],
            [ZetaAtom(a.label, a.arg.subs(assignment), a.exp) for a in self.atoms],
            self.residues)

    @property
    def params(self) -> tuple[str, ...]:
        names: set[str] = set()
        for f in itertools.chain(self.num, self.den, (a.arg for a in self.atoms)):
            names.update(f.params)
        return tuple(sorted(names))

    def is_monomial(self) -> bool:
        """True when no formal parameters remain (pure constant monomial)."""
        return not self.params

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        top: list[str] = []
        bot: list[str] = []
        for l, m in self.residues:
            name = "R" if l == "F" else f"R_{l}"
            (top if m > 0 else bot).append(name if abs(m) == 1 else f"{name}^{abs(m)}")
        for f in self.num:
            top.append(f"({f})")
        for f in self.den:
            bot.append(f"({f})")
        for a in self.atoms:
            s = f"xi_{a.label}({a.arg})"
            (top if a.exp > 0 else bot).append(s if abs(a.exp) == 1 else f"{s}^{abs(a.exp)}")
        if self.scalar != 1 or not top:
            top.insert(0, str(self.scalar))
        expr = "*".join(top)
        if bot:
            expr += "/" + ("*".join(bot) if len(bot) == 1 else "(" + "*".join(bot) + ")")
        return expr

    def to_json(self) -> dict:
        return {
            "scalar": str(self.scalar),
            "num": [str(f) for f in self.num],
            "den": [str(f) for f in self.den],
            "atoms": [a.to_json() for a in self.atoms],
            "residues": [{"label": l, "power": m} for l, m in self.residues],
        }


def canonicalize(expr: ZetaExpr) -> ZetaExpr:
    """Idempotent canonical form; ZetaExpr.build already enforces it."""
    return ZetaExpr.build(expr.scalar, expr.num, expr.den, expr.atoms, expr.residues)


@dataclass(frozen=True)
class LaurentData:
    """Order of vanishing (negative = pole) and the leading coefficient.

    ``leading`` is a ZetaExpr; when the expansion point is fully numeric it is
    a monomial: rational * prod xi_L(q)^e * prod R_L^m.
    """

    order: int
    leading: ZetaExpr

    def __str__(self) -> str:
        return f"order {self.order}, leading {self.leading}"


def expand_in(expr: ZetaExpr, var: str, *,
              assume_no_real_zeros: bool = False) -> LaurentData:
    """Laurent order and leading coefficient of expr as var -> 0.

    Other parameters are treated as generic; an atom is polar only when its
    argument restricted to var=0 is identically 0 or 1.  An argument that is
    identically 0 or 1 with no var dependence at all cannot be expanded and
    raises hyperplane-degeneracy; a constant argument strictly inside (0,1)
    raises indeterminate-zero-region unless assume_no_real_zeros is set
    (completed zetas may vanish there).
    """
    if expr.is_zero():
        raise ValueError("Laurent expansion of the zero expression")
    order = 0
    lead = ZetaExpr.build(expr.scalar, residues=expr.residues)

    def polynomial_part(f: AffineForm, inverted: bool) -> tuple[int, ZetaExpr]:
        a = f.coeff(var)
        g = f.drop(var)
        if g.is_zero():
            if a == 0:
                raise ValueError("zero affine factor")
            return (-1, ZetaExpr.build(1 / a)) if inverted else (1, ZetaExpr.build(a))
        piece = ZetaExpr.build(num=[g]) if not inverted else ZetaExpr.build(den=[g])
        return 0, piece

    for f in expr.num:
        d, piece = polynomial_part(f, False)
        order += d
        lead = lead * piece
    for f in expr.den:
        d, piece = polynomial_part(f, True)
        order += d
        lead = lead * piece

    for a in expr.atoms:
        slope = a.arg.coeff(var)
        g = a.arg.drop(var)
        if g.is_constant() and g.const in (0, 1):
            if slope == 0:
                raise HyperplaneDegeneracyError(
                    f"xi_{a.label} argument identically {g.const}", atom=str(a))
            # xi(eps) ~ -R/eps, xi(1+eps) ~ R/eps with eps = slope*var
            sign = Q(-1) if g.const == 0 else Q(1)
            order -= a.exp
            lead = lead * ZetaExpr.build((sign / slope) ** a.exp,
                                         residues=[(a.label, a.exp)])
            continue
        if g.is_constant() and 0 < g.const < 1 and not assume_no_real_zeros:
            raise IndeterminateZeroRegionError(
                f"xi_{a.label}({g.const}) lies in (0,1); possible real zero",
                atom=str(a))
        lead = lead * ZetaExpr.atom(a.label, g, a.exp)
    return LaurentData(order, lead)


def _shift_to_point(expr: ZetaExpr, point: Mapping[str, Rat], var: str) -> ZetaExpr:
    subs = {name: AffineForm.var(var) + _q(value) for name, value in point.items()}
    return expr.subs(subs)


_EPS = "_eps"


def laurent_at(expr: ZetaExpr, point: Mapping[str, Rat], *,
               assume_no_real_zeros: bool = False) -> LaurentData:
    """Laurent data of expr at a full rational parameter assignment.

    The expansion variable is the common offset delta with point + delta
    substituted for every parameter; for single-parameter expressions (every
    use in the calculator) this is the ordinary expansion in s - s0.
    """
    free = set(expr.params) - set(point)
    if free:
        raise ValueError(f"point does not assign parameters: {sorted(free)}")
    shifted = _shift_to_point(expr, point, _EPS)
    return expand_in(shifted, _EPS, assume_no_real_zeros=assume_no_real_zeros)


def order_at(expr: ZetaExpr, point: Mapping[str, Rat], *,
             assume_no_real_zeros: bool = False) -> int:
    """Order of vanishing at the point (negative = pole order)."""
    return laurent_at(expr, point, assume_no_real_zeros=assume_no_real_zeros).order


def leading_coeff_at(expr: ZetaExpr, point: Mapping[str, Rat], *,
                     assume_no_real_zeros: bool = False) -> LaurentData:
    return laurent_at(expr, point, assume_no_real_zeros=assume_no_real_zeros)
