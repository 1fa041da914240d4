"""Labeled relative root systems and their Weyl groups.

Presets cover the groups used in the calculator: split D4, quasi-split 2D4
(relative type B3, quadratic label K), triality 3D4 (relative type G2, cubic
label E), split G2 and A1.  Custom systems are built from a Cartan matrix and
a label map on simple roots.

Conventions
-----------
Roots are stored in simple-root coordinates.  The Cartan matrix ``A`` follows
the row convention  w_i(alpha_j) = alpha_j - A[i][j] alpha_i,  so a root ``c``
reflects to ``c - (row_i . c) e_i``.

For the quasi-split (folded) presets the character-side pairing is inherited
from the simply-laced cover: coordinates of torus characters are taken with
respect to the norms |.|_{F_alpha} of the root fields, which makes the
coroot-pairing vector of every root equal to its own root coordinates, and
makes simple reflections act on fundamental-weight coordinates through the
transpose of ``A``.  For split systems everything is classical (pairing
matrix = A, coroots by reflection transport from simple coroots).

The norm character of a root (its fundamental-weight coordinate vector as an
absolute-value character of the torus) is

    nchar(alpha) = sum_i c_i * (deg_alpha / deg_i) * pairing-column_i

which for split systems is plain linearity and for folded systems carries the
field-degree bookkeeping of restricted roots.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (LabelInconsistencyError, NotFiniteTypeError,
                     UnknownRootError, UnsupportedGroupError)
from .forms import Q

_MAX_HEIGHT = 64


@dataclass(frozen=True, order=True)
class FieldLabel:
    symbol: str
    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("field degree must be >= 1")
        if self.symbol == "F" and self.degree != 1:
            raise ValueError("label F must have degree 1")


LABEL_F = FieldLabel("F", 1)
LABEL_K = FieldLabel("K", 2)
LABEL_E = FieldLabel("E", 3)


@dataclass(frozen=True, order=True)
class Root:
    coords: tuple[int, ...]

    def __post_init__(self):
        if all(c == 0 for c in self.coords):
            raise ValueError("zero vector is not a root")
        if not (all(c >= 0 for c in self.coords) or all(c <= 0 for c in self.coords)):
            raise ValueError(f"mixed-sign coordinates: {self.coords}")

    @property
    def positive(self) -> bool:
        return any(c > 0 for c in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class WeylWord:
    """Word in simple reflections; letters are 1-based simple-root indices."""

    letters: tuple[int, ...] = ()

    @staticmethod
    def of(*letters: int) -> "WeylWord":
        return WeylWord(tuple(letters))

    def __mul__(self, other: "WeylWord") -> "WeylWord":
        return WeylWord(self.letters + other.letters)

    def inverse(self) -> "WeylWord":
        return WeylWord(tuple(reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "1" if not self.letters else "w[" + "".join(str(i) for i in self.letters) + "]"


_PRESET_DATA = {
    # name: (cartan rows, folded, nonsplit label)
    "split_D4": ([[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
                 False, None),
    "quasi_D4": ([[2, -1, 0], [-1, 2, -1], [0, -2, 2]], True, LABEL_K),
    "tri_D4": ([[2, -3], [-1, 2]], True, LABEL_E),
    "G2": ([[2, -3], [-1, 2]], False, None),
    "A1": ([[2]], False, None),
}

# absolute simple-root letters of the folded presets map to relative letters
_LETTER_ALIASES = {
    "quasi_D4": {1: 1, 2: 2, 3: 3, 4: 3},
    "tri_D4": {1: 1, 2: 2, 3: 1, 4: 1},
}


class RootSystem:
    """Immutable labeled root system; all operations are pure."""

    def __init__(self, name: str, cartan: Sequence[Sequence[int]], *,
                 folded: bool, labels: Mapping[int, FieldLabel]):
        self.name = name
        self.rank = len(cartan)
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.folded = folded
        _validate_cartan(self.cartan)
        self.symmetrizer = _symmetrizer(self.cartan)
        # pairing matrix: column i = fundamental-weight coords of alpha_i
        rows = self.cartan
        self.pairing = tuple(tuple(rows[j][i] for j in range(self.rank)) for i in range(self.rank)) \
            if not folded else rows
        # self.pairing[i] is the vector subtracted (times s_i) by reflection i
        self._simple_labels = {i: labels[i] for i in range(1, self.rank + 1)}
        self._generate()
        self._weyl_cache: list[tuple[tuple[int, ...], WeylWord]] | None = None
        self._inversion_cache: dict[tuple[int, ...], tuple[Root, ...]] = {}

    # -- construction -----------------------------------------------------

    def _generate(self) -> None:
        simples = [Root(tuple(1 if j == i else 0 for j in range(self.rank)))
                   for i in range(self.rank)]
        seen: set[Root] = set(simples)
        frontier = list(simples)
        provenance: dict[Root, tuple[int, Root] | None] = {r: None for r in simples}
        while frontier:
            nxt: list[Root] = []
            for r in frontier:
                for i in range(1, self.rank + 1):
                    try:
                        img = self.reflect_root(i, r)
                    except ValueError as exc:
                        raise NotFiniteTypeError(str(exc)) from exc
                    if img.positive and img not in seen:
                        if img.height > _MAX_HEIGHT:
                            raise NotFiniteTypeError(
                                f"root height exceeded {_MAX_HEIGHT}; Cartan matrix is not of finite type")
                        seen.add(img)
                        provenance[img] = (i, r)
                        nxt.append(img)
            frontier = nxt
        self.positive_roots: tuple[Root, ...] = tuple(
            sorted(seen, key=lambda r: (r.height, r.coords)))
        self._provenance = provenance
        self._norms = {r: self._norm(r) for r in self.positive_roots}
        long_norm = max(self._norms.values())
        self._length_class = {r: ("long" if self._norms[r] == long_norm else "short")
                              for r in self.positive_roots}
        self._labels = self._assign_labels()
        self._cvec = {r: self._coroot_vector(r) for r in self.positive_roots}
        self._nchar = {r: self._norm_char(r) for r in self.positive_roots}

    def _norm(self, r: Root) -> Q:
        total = Q(0)
        for i in range(self.rank):
            for j in range(self.rank):
                total += r.coords[i] * r.coords[j] * self.symmetrizer[i] * self.cartan[i][j]
        return total

    def _assign_labels(self) -> dict[Root, FieldLabel]:
        # orbit transport from simple-root labels, checked for consistency;
        # for the presets this coincides with assignment by length class
        labels: dict[Root, FieldLabel] = {}
        for r in self.positive_roots:
            prov = self._provenance[r]
            if prov is None:
                idx = r.coords.index(1) + 1
                lab = self._simple_labels[idx]
            else:
                lab = labels[prov[1]]
            labels[r] = lab
        for r, lab in labels.items():
            for i in range(1, self.rank + 1):
                img = self.reflect_root(i, r)
                base = img if img.positive else -img
                if labels[base] != lab:
                    raise LabelInconsistencyError(
                        f"labels differ on the Weyl orbit of {r}: {lab.symbol} vs {labels[base].symbol}")
        return labels

    def _coroot_vector(self, r: Root) -> tuple[Q, ...]:
        if self.folded:
            return tuple(Q(c) for c in r.coords)
        prov = self._provenance[r]
        if prov is None:
            return tuple(Q(1) if c == 1 else Q(0) for c in r.coords)
        i, parent = prov
        d = list(self._coroot_vector(parent))
        # dual reflection: subtract (pairing column_i . d) in coordinate i-1
        t = sum(Q(self.pairing[i - 1][j]) * d[j] for j in range(self.rank))
        d[i - 1] -= t
        return tuple(d)

    def _norm_char(self, r: Root) -> tuple[Q, ...]:
        deg = self.label_of(r).degree
        out = [Q(0)] * self.rank
        for i in range(self.rank):
            if r.coords[i] == 0:
                continue
            w = Q(r.coords[i] * deg, self._simple_labels[i + 1].degree)
            for j in range(self.rank):
                out[j] += w * self.pairing[i][j]
        return tuple(out)

    # -- queries -----------------------------------------------------------

    def simple_root(self, i: int) -> Root:
        self._check_index(i)
        return Root(tuple(1 if j == i - 1 else 0 for j in range(self.rank)))

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise UnknownRootError(f"simple index {i} out of range 1..{self.rank}")

    def _base(self, root: Root) -> Root:
        base = root if root.positive else -root
        if base not in self._labels:
            raise UnknownRootError(f"{root} is not a root of {self.name}")
        return base

    def label_of(self, root: Root) -> FieldLabel:
        return self._labels[self._base(root)]

    def length_class_of(self, root: Root) -> str:
        return self._length_class[self._base(root)]

    def multiplicity_of(self, root: Root) -> int:
        """Dimension of the root space over the base field.

        For the folded presets this is the degree of the root's field of
        definition; it enters the calculator only through which completed
        zeta is attached to the root and through the norm characters.
        """
        return self.label_of(root).degree

    def coroot(self, root: Root) -> tuple[Q, ...]:
        """Pairing vector c with <lambda, root^vee> = sum c_j lambda_j."""
        base = self._base(root)
        vec = self._cvec[base]
        return vec if root.positive else tuple(-x for x in vec)

    def norm_char(self, root: Root) -> tuple[Q, ...]:
        """Fundamental-weight coordinates of |root|_{F_root} as a character."""
        base = self._base(root)
        vec = self._nchar[base]
        return vec if root.positive else tuple(-x for x in vec)

    def reflect_root(self, i: int, root: Root) -> Root:
        self._check_index(i)
        t = sum(self.cartan[i - 1][j] * root.coords[j] for j in range(self.rank))
        coords = list(root.coords)
        coords[i - 1] -= t
        return Root(tuple(coords))

    def word_on_root(self, word: WeylWord, root: Root) -> Root:
        """Apply w = w_{i1}...w_{ik} to a root (rightmost letter acts first)."""
        for i in reversed(word.letters):
            root = self.reflect_root(i, root)
        return root

    # -- Weyl group --------------------------------------------------------

    def _signed_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    def perm_of_word(self, word: WeylWord) -> tuple[int, ...]:
        ordering = {r: k for k, r in enumerate(self._signed_roots())}
        return tuple(ordering[self.word_on_root(word, r)] for r in self._signed_roots())

    def weyl_elements(self) -> list[tuple[tuple[int, ...], WeylWord]]:
        """All Weyl elements as (root permutation, canonical shortlex word)."""
        if self._weyl_cache is not None:
            return self._weyl_cache
        roots = self._signed_roots()
        index = {r: k for k, r in enumerate(roots)}
        gens = []
        for i in range(1, self.rank + 1):
            gens.append(tuple(index[self.reflect_root(i, r)] for r in roots))
        ident = tuple(range(len(roots)))
        seen = {ident: WeylWord()}
        order: list[tuple[tuple[int, ...], WeylWord]] = [(ident, WeylWord())]
        frontier = [ident]
        while frontier:
            nxt = []
            for perm in frontier:
                word = seen[perm]
                for i, g in enumerate(gens, start=1):
                    # right multiplication: (w s_i)(r) = w(s_i r)
                    new = tuple(perm[g[k]] for k in range(len(roots)))
                    if new not in seen:
                        seen[new] = WeylWord(word.letters + (i,))
                        nxt.append(new)
            nxt.sort(key=lambda p: seen[p].letters)
            order.extend((p, seen[p]) for p in nxt)
            frontier = nxt
        self._weyl_cache = order
        return order

    def weyl_order(self) -> int:
        return len(self.weyl_elements())

    def length(self, word: WeylWord) -> int:
        return sum(1 for r in self.positive_roots
                   if not self.word_on_root(word.inverse(), r).positive)

    def inversion_set(self, word: WeylWord) -> tuple[Root, ...]:
        """{alpha > 0 : w^{-1} alpha < 0} in canonical positive-root order."""
        cached = self._inversion_cache.get(word.letters)
        if cached is not None:
            return cached
        inv = word.inverse()
        result = tuple(r for r in self.positive_roots
                       if not self.word_on_root(inv, r).positive)
        self._inversion_cache[word.letters] = result
        return result

    def reduce(self, word: WeylWord) -> WeylWord:
        """A reduced word for the same element (deterministic)."""
        letters: list[int] = []
        perm = self.perm_of_word(word)
        n = len(self.positive_roots)
        ident = tuple(range(2 * n))
        index = {r: k for k, r in enumerate(self._signed_roots())}
        gens = [tuple(index[self.reflect_root(i, r)] for r in self._signed_roots())
                for i in range(1, self.rank + 1)]
        while perm != ident:
            for i in range(1, self.rank + 1):
                # right descent: w(alpha_i) < 0
                if perm[index[self.simple_root(i)]] >= n:
                    letters.append(i)
                    g = gens[i - 1]
                    perm = tuple(perm[g[k]] for k in range(2 * n))
                    break
            else:
                raise RuntimeError("no descent found for nontrivial element")
        return WeylWord(tuple(reversed(letters)))

    def word_of_perm(self, perm: tuple[int, ...]) -> WeylWord:
        for p, w in self.weyl_elements():
            if p == perm:
                return w
        raise UnknownRootError("permutation is not a Weyl element")

    def reflection_word(self, root: Root) -> WeylWord:
        """A word for the reflection in the given (positive) root."""
        base = self._base(root)
        prov = self._provenance[base]
        if prov is None:
            return WeylWord((base.coords.index(1) + 1,))
        i, parent = prov
        inner = self.reflection_word(parent)
        return WeylWord((i,) + inner.letters + (i,))

    # -- parsing -----------------------------------------------------------

    def parse_word(self, text: str) -> WeylWord:
        """Parse words like ``2342`` or ``w[2342]``.

        For folded presets the absolute Dynkin letters of the D4 diagram are
        accepted: a run of distinct letters from one Galois orbit collapses
        to the single relative reflection (e.g. 2342 -> [2,3,2] on quasi_D4).
        """
        text = text.strip()
        if text in ("1", "e", ""):
            return WeylWord()
        if text.startswith("w[") and text.endswith("]"):
            text = text[2:-1]
        raw = [int(ch) for ch in text if ch.isdigit()]
        alias = _LETTER_ALIASES.get(self.name)
        if alias is None:
            letters = raw
        else:
            letters = []
            run: set[int] = set()
            for a in raw:
                rel = alias.get(a)
                if rel is None:
                    raise UnknownRootError(f"letter {a} is not a simple index of {self.name}")
                if letters and letters[-1] == rel and a not in run:
                    run.add(a)  # another member of the same folded orbit
                    continue
                letters.append(rel)
                run = {a}
        for i in letters:
            self._check_index(i)
        return WeylWord(tuple(letters))

    def __repr__(self) -> str:
        return f"RootSystem({self.name}, rank {self.rank}, {len(self.positive_roots)} positive roots)"


def _validate_cartan(cartan: tuple[tuple[int, ...], ...]) -> None:
    n = len(cartan)
    if any(len(row) != n for row in cartan):
        raise NotFiniteTypeError("Cartan matrix is not square")
    for i in range(n):
        if cartan[i][i] != 2:
            raise NotFiniteTypeError("Cartan diagonal entries must equal 2")
        for j in range(n):
            if i != j:
                if cartan[i][j] > 0:
                    raise NotFiniteTypeError("off-diagonal Cartan entries must be <= 0")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise NotFiniteTypeError("Cartan zero pattern must be symmetric")


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Positive integers d_i with d_i A[i][j] symmetric."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Q(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if cartan[i][j] != 0 and i != j:
                    val = d[i] * Q(cartan[i][j], cartan[j][i])
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        raise NotFiniteTypeError("Cartan matrix is not symmetrizable")
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd_int(lcm, x.denominator)
    scaled = [int(x * lcm) for x in d]
    g = 0
    for x in scaled:
        g = _gcd_int(g, x)
    return tuple(x // g for x in scaled)


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def build_system(preset: str, *, cartan: Sequence[Sequence[int]] | None = None,
                 labels: Mapping[int, FieldLabel] | None = None) -> RootSystem:
    """Build a preset system, or a custom one with preset="custom"."""
    if preset == "custom":
        if cartan is None:
            raise UnsupportedGroupError("custom systems need a Cartan matrix")
        n = len(cartan)
        if labels is None:
            labels = {i: LABEL_F for i in range(1, n + 1)}
        folded = any(lab.degree > 1 for lab in labels.values())
        return RootSystem("custom", cartan, folded=folded, labels=dict(labels))
    if preset not in _PRESET_DATA:
        raise UnsupportedGroupError(f"unknown preset {preset!r}")
    rows, folded, nonsplit = _PRESET_DATA[preset]
    system = RootSystem(preset, rows, folded=folded,
                        labels=_preset_labels(preset, rows, folded, nonsplit))
    return system


def _preset_labels(preset: str, rows, folded: bool, nonsplit: FieldLabel | None) -> dict[int, FieldLabel]:
    n = len(rows)
    if not folded or nonsplit is None:
        return {i: LABEL_F for i in range(1, n + 1)}
    # label by length class of the simple roots: short simples carry the
    # extension field (K-orbit of the folding), long simples are split
    probe = RootSystem(preset + "_probe", rows, folded=folded,
                       labels={i: LABEL_F for i in range(1, n + 1)})
    out = {}
    for i in range(1, n + 1):
        cls = probe.length_class_of(probe.simple_root(i))
        out[i] = nonsplit if cls == "short" else LABEL_F
    return out


def load_custom(document: str | dict) -> RootSystem:
    """Load a custom system from a JSON document {cartan: [[...]], labels: {...}}."""
    doc = json.loads(document) if isinstance(document, str) else document
    cartan = doc["cartan"]
    labels = {}
    for key, val in doc.get("labels", {}).items():
        labels[int(key)] = FieldLabel(val["symbol"], int(val["degree"]))
    if not labels:
        labels = None
    return build_system("custom", cartan=cartan, labels=labels)
