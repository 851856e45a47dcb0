"""Broken circuit complexes: faces, f- and h-vectors, consistency checks.

An ordering is a permutation of the ground set; positions are 1-based.
A broken circuit is a circuit minus its smallest element, and a face is
any subset of the ground set containing no broken circuit.  Face numbers
do not depend on the ordering, which is itself a tested invariant rather
than an assumption here.

Loops make the complex void (the empty circuit's broken circuit is the
empty set, which every subset contains): all face counts are zero.
"""

from __future__ import annotations

from math import comb
from typing import NamedTuple

from .errors import BadParams, DegenerateElement
from .matroids import Matroid


class Ordering:
    """A total order on ground set labels; immutable, 1-based positions."""

    __slots__ = ("labels", "_pos")

    def __init__(self, labels):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise BadParams("ordering has repeated labels")
        self._pos = {lab: i + 1 for i, lab in enumerate(self.labels)}

    @classmethod
    def natural(cls, ground) -> "Ordering":
        return cls(tuple(ground))

    @classmethod
    def from_string(cls, text: str) -> "Ordering":
        return cls(tuple(t.strip() for t in text.split(",") if t.strip()))

    def position(self, label) -> int:
        p = self._pos.get(label)
        if p is None:
            raise BadParams(f"label {label!r} not in ordering")
        return p

    def induced(self, subset) -> "Ordering":
        keep = set(subset)
        return Ordering(tuple(lab for lab in self.labels if lab in keep))

    def validate_for(self, matroid: Matroid) -> None:
        if sorted(self.labels) != sorted(matroid.ground):
            raise BadParams("ordering is not a permutation of the ground set")

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, Ordering) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"Ordering({','.join(map(str, self.labels))})"

    def show(self) -> str:
        return ",".join(map(str, self.labels))


class HVector(NamedTuple):
    entries: tuple  # h_0 .. h_d

    @property
    def total(self) -> int:
        return sum(self.entries)

    def show(self) -> str:
        return "(" + ", ".join(map(str, self.entries)) + ")"


def _as_ordering(matroid: Matroid, ordering) -> Ordering:
    o = ordering if isinstance(ordering, Ordering) else Ordering(tuple(ordering))
    o.validate_for(matroid)
    return o


def broken_circuits(matroid: Matroid, ordering) -> tuple:
    """Each circuit minus its smallest element, sorted by (size, positions)."""
    o = _as_ordering(matroid, ordering)
    out = []
    for c in matroid.circuits():
        least = min(c, key=o.position)
        out.append(frozenset(c) - {least})
    out.sort(key=lambda s: (len(s), tuple(sorted(o.position(e) for e in s))))
    return tuple(out)


def bc_faces(matroid: Matroid, ordering) -> tuple:
    """All faces, sorted by (size, positions).  Void (no faces) when a loop exists."""
    o = _as_ordering(matroid, ordering)
    bcs = broken_circuits(matroid, o)
    if any(not b for b in bcs):
        return ()
    n = len(o.labels)
    by_max = [[] for _ in range(n)]
    for b in bcs:
        positions = [o.position(e) - 1 for e in b]
        mask = 0
        for p in positions:
            mask |= 1 << p
        by_max[max(positions)].append(mask)
    faces_masks = []

    def rec(start: int, mask: int):
        faces_masks.append(mask)
        for p in range(start, n):
            nm = mask | (1 << p)
            if any(bm & nm == bm for bm in by_max[p]):
                continue
            rec(p + 1, nm)

    rec(0, 0)
    faces = []
    for mask in faces_masks:
        faces.append(frozenset(o.labels[p] for p in range(n) if mask >> p & 1))
    faces.sort(key=lambda s: (len(s), tuple(sorted(o.position(e) for e in s))))
    return tuple(faces)


def bc_facets(matroid: Matroid, ordering) -> tuple:
    """Maximal faces.  The complex is pure, so these all have size rank."""
    faces = bc_faces(matroid, ordering)
    if not faces:
        return ()
    r = matroid.rank()
    return tuple(f for f in faces if len(f) == r)


def f_h_vectors(matroid: Matroid, ordering) -> tuple:
    """(f, h) where f = (f_-1, f_0, ..., f_{r-1}) and h = (h_0, ..., h_r).

    h is defined by sum_i f_{i-1} t^i (1-t)^{r-i} = sum_i h_i t^i; all
    arithmetic is exact integer convolution.
    """
    r = matroid.rank()
    faces = bc_faces(matroid, ordering)
    f = [0] * (r + 1)
    for s in faces:
        f[len(s)] += 1
    h = [0] * (r + 1)
    for i in range(r + 1):
        if not f[i]:
            continue
        # f[i] * t^i * (1-t)^(r-i)
        for k in range(r - i + 1):
            h[i + k] += f[i] * (-1) ** k * comb(r - i, k)
    return tuple(f), HVector(tuple(h))


class RecursionReport(NamedTuple):
    element: str
    ok: bool
    h: HVector
    h_delete: HVector
    h_contract: HVector


def h_recursion_check(matroid: Matroid, ordering, element) -> RecursionReport:
    """Check h_i(M) == h_i(M without e) + h_{i-1}(M contracted at e).

    Requires e to be neither a loop nor a coloop (DegenerateElement
    otherwise: deletion would drop rank or contraction would force one)."""
    o = _as_ordering(matroid, ordering)
    if element in matroid.loops():
        raise DegenerateElement(f"{element} is a loop")
    if element in matroid.coloops():
        raise DegenerateElement(f"{element} is a coloop")
    rest = [lab for lab in o.labels if lab != element]
    _, h = f_h_vectors(matroid, o)
    _, hd = f_h_vectors(matroid.delete([element]), Ordering(rest))
    _, hc = f_h_vectors(matroid.contract([element]), Ordering(rest))
    d = len(h.entries)
    ok = all(
        h.entries[i]
        == (hd.entries[i] if i < len(hd.entries) else 0)
        + (hc.entries[i - 1] if 1 <= i <= len(hc.entries) else 0)
        for i in range(d)
    )
    return RecursionReport(element, ok, h, hd, hc)


class JoinReport(NamedTuple):
    ok: bool
    components: tuple
    f: tuple
    f_product: tuple


def _poly_mul(a, b) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def join_decomposition_check(matroid: Matroid, ordering) -> JoinReport:
    """Face polynomial of M must equal the product over connected components.

    Circuits never cross components, so the complex is the simplicial join
    of the component complexes; the check multiplies exact face polynomials."""
    o = _as_ordering(matroid, ordering)
    comps = matroid.connected_components()
    f, _ = f_h_vectors(matroid, o)
    prod = [1]
    for comp in comps:
        sub = matroid.restrict(comp)
        fc, _ = f_h_vectors(sub, o.induced(comp))
        prod = _poly_mul(prod, list(fc))
    want = list(f) + [0] * (len(prod) - len(f)) if len(prod) > len(f) else list(f)
    got = prod + [0] * (len(want) - len(prod))
    return JoinReport(got == want, comps, tuple(f), tuple(prod))
