"""Matroids over ordered ground sets of string labels.

Four backends share one independence-oracle interface: column matroids of
exact matrices, graphic matroids of edge lists, uniform matroids, and
explicit circuit lists (used for parallel connections).  Enumerations
(circuits, cocircuits, bases) are cached and refuse ground sets larger
than a configurable cap, since everything here is desk scale by design.
"""

from __future__ import annotations

import threading
from itertools import combinations

from .errors import (
    BadOverlap,
    BadParams,
    BadRank,
    DegenerateElement,
    DuplicateLabels,
    NotBasisElement,
    NotCobasisElement,
    NotRegular,
    Overbudget,
)
from .fields import Field, GF2_FIELD, Q_FIELD, field_from_name
from .linalg import Matrix, tu_signing

ENUMERATION_CAP = 20


def validate_ground(labels) -> tuple:
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise DuplicateLabels(f"labels not distinct: {labels}")
    return labels


# -- backends ----------------------------------------------------------------


class _ColumnBackend:
    kind = "column"

    def __init__(self, matrix: Matrix, ground):
        if matrix.ncols != len(ground):
            raise BadParams("column count must match ground size")
        self.matrix = matrix
        self.index = {e: i for i, e in enumerate(ground)}

    def indep(self, subset) -> bool:
        cols = sorted(self.index[e] for e in subset)
        return self.matrix.select_columns(cols).rank() == len(cols)


class _GraphicBackend:
    kind = "graphic"

    def __init__(self, edges, ground):
        if len(edges) != len(ground):
            raise BadParams("edge count must match ground size")
        self.edges = tuple((str(u), str(v)) for u, v in edges)
        self.edge_of = dict(zip(ground, self.edges))

    def indep(self, subset) -> bool:
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in subset:
            u, v = self.edge_of[e]
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


class _UniformBackend:
    kind = "uniform"

    def __init__(self, r: int, n: int):
        if not 0 <= r <= n:
            raise BadRank(f"uniform rank {r} outside [0, {n}]")
        self.r = r
        self.n = n

    def indep(self, subset) -> bool:
        return len(subset) <= self.r


class _CircuitBackend:
    kind = "circuits"

    def __init__(self, circuits, ground):
        gset = set(ground)
        circs = []
        for c in circuits:
            fc = frozenset(str(x) for x in c)
            if not fc:
                raise BadParams("empty circuit")
            if not fc <= gset:
                raise BadParams(f"circuit {sorted(fc)} not inside ground set")
            circs.append(fc)
        circs = sorted(set(circs), key=lambda c: (len(c), sorted(c)))
        for a, b in combinations(circs, 2):
            if a < b or b < a:
                raise BadParams("circuits must form an antichain")
        self.circuits = tuple(circs)

    def indep(self, subset) -> bool:
        s = frozenset(subset)
        return not any(c <= s for c in self.circuits)


class Matroid:
    """Immutable matroid; all queries go through a memoized independence oracle."""

    def __init__(self, ground, backend):
        self.ground = validate_ground(ground)
        self.backend = backend
        self.position = {e: i for i, e in enumerate(self.ground)}
        self._indep_memo: dict = {}
        self._cache: dict = {}
        self._lock = threading.Lock()

    # -- oracle ------------------------------------------------------------

    def is_independent(self, subset) -> bool:
        s = frozenset(subset)
        if not s <= set(self.ground):
            raise BadParams(f"{sorted(s - set(self.ground))} not in ground set")
        hit = self._indep_memo.get(s)
        if hit is None:
            hit = self._indep_memo[s] = self.backend.indep(s)
        return hit

    def rank(self, subset=None) -> int:
        """Rank via greedy extension (valid by the exchange property)."""
        elems = self.ground if subset is None else [e for e in self.ground if e in set(subset)]
        if subset is None and "rank" in self._cache:
            return self._cache["rank"]
        picked = []
        for e in elems:
            picked.append(e)
            if not self.is_independent(picked):
                picked.pop()
        if subset is None:
            self._cache["rank"] = len(picked)
        return len(picked)

    def corank(self, subset) -> int:
        """Rank in the dual: |S| - r(M) + r(E - S)."""
        s = set(subset)
        return len(s) - self.rank() + self.rank([e for e in self.ground if e not in s])

    def is_coindependent(self, subset) -> bool:
        s = set(subset)
        return self.rank([e for e in self.ground if e not in s]) == self.rank()

    # -- enumeration ---------------------------------------------------------

    def _guard(self, cap):
        cap = ENUMERATION_CAP if cap is None else cap
        if len(self.ground) > cap:
            raise Overbudget(f"ground set of {len(self.ground)} exceeds cap {cap}")

    def circuits(self, cap: int | None = None) -> tuple:
        with self._lock:
            if "circuits" in self._cache:
                return self._cache["circuits"]
        self._guard(cap)
        if isinstance(self.backend, _CircuitBackend):
            found = list(self.backend.circuits)
        elif isinstance(self.backend, _UniformBackend):
            r = self.backend.r
            found = (
                [frozenset(c) for c in combinations(self.ground, r + 1)]
                if r < len(self.ground)
                else []
            )
        else:
            found = self._minimal_scan(self.is_independent, self.rank() + 1)
        found = tuple(sorted(found, key=self._circuit_key))
        with self._lock:
            self._cache["circuits"] = found
        return found

    def cocircuits(self, cap: int | None = None) -> tuple:
        """Circuits of the dual, enumerated through the corank oracle."""
        with self._lock:
            if "cocircuits" in self._cache:
                return self._cache["cocircuits"]
        self._guard(cap)
        corank_limit = len(self.ground) - self.rank() + 1
        found = self._minimal_scan(self.is_coindependent, corank_limit)
        found = tuple(sorted(found, key=self._circuit_key))
        with self._lock:
            self._cache["cocircuits"] = found
        return found

    def _minimal_scan(self, indep, size_limit):
        """Minimal dependent sets by increasing size under the given oracle."""
        found = []
        for k in range(1, size_limit + 1):
            for c in combinations(self.ground, k):
                s = frozenset(c)
                if any(f <= s for f in found):
                    continue
                if not indep(s):
                    found.append(s)
        return found

    def _circuit_key(self, c):
        return tuple(sorted(self.position[e] for e in c))

    def bases(self, cap: int | None = None) -> tuple:
        with self._lock:
            if "bases" in self._cache:
                return self._cache["bases"]
        self._guard(cap)
        r = self.rank()
        out = tuple(
            frozenset(b)
            for b in combinations(self.ground, r)
            if self.is_independent(b)
        )
        with self._lock:
            self._cache["bases"] = out
        return out

    def loops(self) -> tuple:
        return tuple(e for e in self.ground if not self.is_independent([e]))

    def coloops(self) -> tuple:
        r = self.rank()
        return tuple(
            e
            for e in self.ground
            if self.rank([f for f in self.ground if f != e]) < r
        )

    # -- fundamental circuits/cocircuits -------------------------------------

    def _check_basis(self, basis) -> frozenset:
        b = frozenset(basis)
        if len(b) != self.rank() or not self.is_independent(b):
            raise BadRank(f"{sorted(b)} is not a basis")
        return b

    def fundamental_circuit(self, basis, e: str) -> frozenset:
        """The unique circuit inside basis + {e} through e."""
        b = self._check_basis(basis)
        if e in b:
            raise NotCobasisElement(f"{e} lies in the basis")
        if e not in self.position:
            raise BadParams(f"{e} not in ground set")
        s = set(b) | {e}
        for x in sorted(b, key=self.position.get):
            t = s - {x}
            if not self.is_independent(t):
                s = t
        return frozenset(s)

    def fundamental_cocircuit(self, basis, b_elem: str) -> frozenset:
        """The unique cocircuit inside (E - basis) + {b_elem} through b_elem."""
        b = self._check_basis(basis)
        if b_elem not in b:
            raise NotBasisElement(f"{b_elem} does not lie in the basis")
        outside = [e for e in self.ground if e not in b]
        s = set(outside) | {b_elem}
        for x in sorted(outside, key=self.position.get):
            t = s - {x}
            if not self.is_coindependent(t):
                s = t
        return frozenset(s)

    # -- dual / minors --------------------------------------------------------

    def dual(self) -> "Matroid":
        if isinstance(self.backend, _UniformBackend):
            return uniform(len(self.ground) - self.backend.r, len(self.ground), self.ground)
        if isinstance(self.backend, _ColumnBackend):
            ns = self.backend.matrix.null_space_basis()
            if ns.nrows == 0:
                ns = Matrix.zero(self.backend.matrix.field, 1, len(self.ground))
            return from_matrix(ns, self.ground)
        if isinstance(self.backend, _GraphicBackend):
            inc = self.representation_over(GF2_FIELD)
            ns = inc.null_space_basis()
            if ns.nrows == 0:
                ns = Matrix.zero(GF2_FIELD, 1, len(self.ground))
            return from_matrix(ns, self.ground)
        return from_circuits(self.cocircuits(), self.ground)

    def delete(self, elems) -> "Matroid":
        drop = {elems} if isinstance(elems, str) else set(elems)
        if not drop <= set(self.ground):
            raise BadParams("cannot delete elements outside the ground set")
        keep = [e for e in self.ground if e not in drop]
        be = self.backend
        if isinstance(be, _UniformBackend):
            return uniform(min(be.r, len(keep)), len(keep), keep)
        if isinstance(be, _ColumnBackend):
            cols = [self.position[e] for e in keep]
            return from_matrix(be.matrix.select_columns(cols), keep)
        if isinstance(be, _GraphicBackend):
            return from_graph([be.edge_of[e] for e in keep], keep)
        circs = [c for c in be.circuits if not c & drop]
        return from_circuits(circs, keep)

    def contract(self, elems) -> "Matroid":
        take = [elems] if isinstance(elems, str) else list(elems)
        m = self
        for e in take:
            m = m._contract_one(e)
        return m

    def _contract_one(self, e: str) -> "Matroid":
        if e not in self.position:
            raise BadParams(f"{e} not in ground set")
        if not self.is_independent([e]):
            return self.delete(e)
        keep = [x for x in self.ground if x != e]
        be = self.backend
        if isinstance(be, _UniformBackend):
            return uniform(be.r - 1, len(keep), keep)
        if isinstance(be, _ColumnBackend):
            reduced = _contract_column(be.matrix, self.position[e])
            return from_matrix(reduced, keep)
        if isinstance(be, _GraphicBackend):
            u, v = be.edge_of[e]
            sub = lambda w: u if w == v else w
            return from_graph([(sub(a), sub(b)) for a, b in (be.edge_of[x] for x in keep)], keep)
        cands = []
        for c in self.circuits():
            cands.append(c - {e})
        cands = [c for c in cands if c]
        minimal = [c for c in set(cands) if not any(d < c for d in cands)]
        return from_circuits(minimal, keep)

    def restrict(self, subset) -> "Matroid":
        s = set(subset)
        return self.delete([e for e in self.ground if e not in s])

    # -- connectivity ----------------------------------------------------------

    def connected_components(self) -> tuple:
        """Blocks of the transitive closure of 'shares a circuit'."""
        parent = {e: e for e in self.ground}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.circuits():
            it = iter(sorted(c, key=self.position.get))
            first = find(next(it))
            for e in it:
                parent[find(e)] = first
        blocks: dict = {}
        for e in self.ground:
            blocks.setdefault(find(e), []).append(e)
        comps = [frozenset(v) for v in blocks.values()]
        return tuple(sorted(comps, key=lambda c: min(self.position[e] for e in c)))

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    # -- representations --------------------------------------------------------

    def representation_over(self, field: Field) -> Matrix:
        """A matrix over `field` whose column matroid (labels aligned) is M.

        For char != 2 this produces a totally unimodular (signed) matrix,
        searching for a regular signing when the backend is binary.  Raises
        NotRegular when no usable representation exists.
        """
        key = field.name
        with self._lock:
            if key in self._cache.setdefault("reps", {}):
                return self._cache["reps"][key]
        mat = self._build_representation(field)
        with self._lock:
            self._cache["reps"][key] = mat
        return mat

    def _build_representation(self, field: Field) -> Matrix:
        be = self.backend
        if isinstance(be, _ColumnBackend):
            src = be.matrix
            if src.field.name == field.name:
                return Matrix(src.field, src.entries, col_labels=self.ground)
            if src.field.char == 2:
                # binary source: a TU signing of the support represents the
                # same matroid over every field
                signed = self._signed_from_binaryish(src)
                return signed if field.char == 0 else signed.map_to_field(field)
            if src.field.char == 0:
                signed = self._signed_from_binaryish(src)
                return signed if field.char == 0 else signed.map_to_field(field)
            raise NotRegular(
                f"cannot convert a {src.field.name} representation to {field.name}"
            )
        if isinstance(be, _GraphicBackend):
            inc = _signed_incidence(be, self.ground)
            return inc if field.char == 0 else inc.map_to_field(field)
        if isinstance(be, _UniformBackend):
            mat = _uniform_representation(be.r, len(self.ground), field)
            if mat is None:
                raise NotRegular(
                    f"U({be.r},{len(self.ground)}) has no regular/binary representation"
                )
            return Matrix(mat.field, mat.entries, col_labels=self.ground)
        raise NotRegular(f"no representation backend for {be.kind} matroid")

    def _signed_from_binaryish(self, src: Matrix) -> Matrix:
        """Totally unimodular signing with the same column matroid as src.

        A rational source that is already TU is used directly.  Otherwise the
        0/1 support is resigned; for binary sources the theory guarantees the
        resigning represents the same matroid, for rational ones we verify
        basis-by-basis before accepting.
        """
        if src.field.char == 0:
            try:
                if src.is_totally_unimodular():
                    return Matrix(Q_FIELD, src.entries, col_labels=self.ground)
            except BadParams:
                pass
        support = Matrix.from_int_rows(
            Q_FIELD, [[1 if x else 0 for x in r] for r in src.entries]
        )
        try:
            signed = tu_signing(support)
        except BadParams as exc:
            raise NotRegular(str(exc)) from exc
        if src.field.char == 0 and not _same_column_matroid(src, signed):
            raise NotRegular("rational representation is not equivalent to a regular one")
        return Matrix(Q_FIELD, signed.entries, col_labels=self.ground)

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        be = self.backend
        labels = list(self.ground)
        if isinstance(be, _ColumnBackend):
            F = be.matrix.field
            rows = []
            for r in be.matrix.entries:
                out = []
                for x in r:
                    s = F.show(x)
                    out.append(s if "/" in s else int(s))
                rows.append(out)
            return {"type": "column", "labels": labels, "field": F.name, "matrix": rows}
        if isinstance(be, _GraphicBackend):
            return {
                "type": "graphic",
                "labels": labels,
                "edges": [[u, v] for u, v in (be.edge_of[e] for e in self.ground)],
            }
        if isinstance(be, _UniformBackend):
            return {"type": "uniform", "labels": labels, "rank": be.r}
        return {
            "type": "circuits",
            "labels": labels,
            "circuits": [sorted(c, key=self.position.get) for c in be.circuits],
        }

    def __repr__(self):
        return f"Matroid({self.backend.kind}, n={len(self.ground)}, r={self.rank()})"


# -- constructors --------------------------------------------------------------


def from_matrix(matrix: Matrix, labels=None) -> Matroid:
    if labels is None:
        labels = matrix.col_labels or [f"e{i + 1}" for i in range(matrix.ncols)]
    ground = validate_ground(labels)
    mat = Matrix(matrix.field, matrix.entries, col_labels=ground)
    return Matroid(ground, _ColumnBackend(mat, ground))


def from_graph(edges, labels=None) -> Matroid:
    edges = [(str(u), str(v)) for u, v in edges]
    if labels is None:
        labels = [f"e{i + 1}" for i in range(len(edges))]
    ground = validate_ground(labels)
    return Matroid(ground, _GraphicBackend(edges, ground))


def uniform(r: int, n: int, labels=None) -> Matroid:
    if labels is None:
        labels = [f"e{i + 1}" for i in range(n)]
    ground = validate_ground(labels)
    if len(ground) != n:
        raise BadParams("label count must equal n")
    return Matroid(ground, _UniformBackend(r, n))


def from_circuits(circuits, labels) -> Matroid:
    ground = validate_ground(labels)
    return Matroid(ground, _CircuitBackend(circuits, ground))


def matroid_from_json(data: dict) -> Matroid:
    kind = data.get("type")
    labels = data.get("labels")
    if kind == "column":
        F = field_from_name(data["field"])
        rows = [[F.parse(str(x)) for x in r] for r in data["matrix"]]
        return from_matrix(Matrix(F, rows), labels)
    if kind == "graphic":
        return from_graph([tuple(e) for e in data["edges"]], labels)
    if kind == "uniform":
        return uniform(int(data["rank"]), len(labels), labels)
    if kind == "circuits":
        return from_circuits([frozenset(c) for c in data["circuits"]], labels)
    raise BadParams(f"unknown matroid type {kind!r}")


# -- parallel connection ---------------------------------------------------------


def parallel_connection(m: Matroid, n: Matroid, p: str) -> Matroid:
    """Definitional parallel connection along the shared basepoint p.

    Circuits are C(M) + C(N) + pairwise merges (C1 + C2) - p over circuits
    through p.  Ground order: E(M) in order, then E(N) - p in order.
    """
    overlap = set(m.ground) & set(n.ground)
    if overlap != {p}:
        raise BadOverlap(f"ground sets must overlap exactly in {{{p}}}, got {sorted(overlap)}")
    if not m.is_independent([p]) or not n.is_independent([p]):
        raise DegenerateElement(f"basepoint {p} must not be a loop")
    cm, cn = m.circuits(), n.circuits()
    merged = [
        (c1 | c2) - {p}
        for c1 in cm
        if p in c1
        for c2 in cn
        if p in c2
    ]
    ground = list(m.ground) + [e for e in n.ground if e != p]
    return from_circuits(list(cm) + list(cn) + merged, ground)


def represented_parallel_connection(m: Matroid, n: Matroid, p: str) -> Matroid:
    """Column-backend parallel connection by gluing the shared coordinate.

    Both operands must be column matroids over the same field.  Each
    representation is row-reduced so the basepoint column is the first unit
    vector, then the two are glued along that coordinate.
    """
    overlap = set(m.ground) & set(n.ground)
    if overlap != {p}:
        raise BadOverlap(f"ground sets must overlap exactly in {{{p}}}, got {sorted(overlap)}")
    if not isinstance(m.backend, _ColumnBackend) or not isinstance(n.backend, _ColumnBackend):
        raise BadParams("both operands must be column matroids")
    A, B = m.backend.matrix, n.backend.matrix
    if A.field != B.field:
        raise BadParams("operands must share a field")
    F = A.field
    A = _basepoint_first(A, m.position[p])
    B = _basepoint_first(B, n.position[p])
    ra, rb = A.nrows, B.nrows
    z = F.zero()
    cols: dict = {}
    for j, e in enumerate(m.ground):
        cols[e] = list(A.column(j)) + [z] * (rb - 1)
    for j, e in enumerate(n.ground):
        if e == p:
            continue
        c = B.column(j)
        cols[e] = [c[0]] + [z] * (ra - 1) + list(c[1:])
    ground = list(m.ground) + [e for e in n.ground if e != p]
    rows = [[cols[e][i] for e in ground] for i in range(ra + rb - 1)]
    return from_matrix(Matrix(F, rows), ground)


def _basepoint_first(mat: Matrix, col: int) -> Matrix:
    """Row-reduce so the given column is the first unit vector, dropping zero rows."""
    F = mat.field
    z = F.zero()
    work = [list(r) for r in mat.entries]
    pr = next((i for i, r in enumerate(work) if r[col] != z), None)
    if pr is None:
        raise DegenerateElement("basepoint column is zero")
    inv = F.inv(work[pr][col])
    if inv != F.one():
        work[pr] = [F.mul(inv, x) for x in work[pr]]
    for i in range(len(work)):
        if i != pr and work[i][col] != z:
            f = work[i][col]
            work[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(work[i], work[pr])]
    ordered = [work[pr]] + [r for i, r in enumerate(work) if i != pr and any(x != z for x in r)]
    return Matrix(F, ordered)


def cocircuits_via_transversals(m: Matroid, cap: int | None = None) -> tuple:
    """Independent path: cocircuits as minimal sets meeting every basis."""
    bases = m.bases(cap)
    found: list = []
    n = len(m.ground)
    for k in range(1, n + 1):
        for c in combinations(m.ground, k):
            s = frozenset(c)
            if any(f <= s for f in found):
                continue
            if all(s & b for b in bases):
                found.append(s)
    return tuple(sorted(found, key=m._circuit_key))


def circuit_axioms_ok(circuits) -> bool:
    """(i) nonempty, (ii) antichain, (iii) elimination axiom."""
    circs = [frozenset(c) for c in circuits]
    if any(not c for c in circs):
        return False
    for a, b in combinations(circs, 2):
        if a <= b or b <= a:
            return False
    for a, b in combinations(circs, 2):
        for e in a & b:
            u = (a | b) - {e}
            if not any(c <= u for c in circs):
                return False
    return True


def _same_column_matroid(a: Matrix, b: Matrix) -> bool:
    """Same independent column subsets (desk-scale exhaustive sweep)."""
    if a.ncols != b.ncols:
        return False
    n = a.ncols
    if n > ENUMERATION_CAP:
        raise Overbudget(f"{n} columns exceeds cap {ENUMERATION_CAP}")
    r = a.rank()
    if b.rank() != r:
        return False
    for k in range(1, r + 1):
        for cols in combinations(range(n), k):
            if (a.select_columns(cols).rank() == k) != (b.select_columns(cols).rank() == k):
                return False
    return True


def _contract_column(mat: Matrix, col: int) -> Matrix:
    """Pivot on the column, then drop its row and column."""
    F = mat.field
    z = F.zero()
    work = [list(r) for r in mat.entries]
    pr = next((i for i, r in enumerate(work) if r[col] != z), None)
    if pr is None:
        raise DegenerateElement("contracting a loop column")
    inv = F.inv(work[pr][col])
    if inv != F.one():
        work[pr] = [F.mul(inv, x) for x in work[pr]]
    for i in range(len(work)):
        if i != pr and work[i][col] != z:
            f = work[i][col]
            work[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(work[i], work[pr])]
    rows = [
        [x for j, x in enumerate(r) if j != col]
        for i, r in enumerate(work)
        if i != pr
    ]
    if not rows:
        rows = [[z] * (mat.ncols - 1)]
    return Matrix(F, rows)


def _signed_incidence(be: _GraphicBackend, ground) -> Matrix:
    from fractions import Fraction

    verts = sorted({w for u, v in be.edges for w in (u, v)})
    vidx = {v: i for i, v in enumerate(verts)}
    cols = []
    for e in ground:
        u, v = be.edge_of[e]
        col = [Fraction(0)] * len(verts)
        if u != v:
            col[vidx[u]] = Fraction(1)
            col[vidx[v]] = Fraction(-1)
        cols.append(col)
    rows = [[cols[j][i] for j in range(len(ground))] for i in range(len(verts))]
    if not rows:
        rows = [[Fraction(0)] * len(ground)]
    return Matrix(Q_FIELD, rows, col_labels=ground)


def _uniform_representation(r: int, n: int, field: Field):
    from fractions import Fraction

    if r == 0:
        return Matrix.zero(field, 1, n)
    if r == n:
        return Matrix.identity(field, n)
    if r == 1:
        return Matrix(field, [[field.one()] * n])
    if r == n - 1:
        rows = []
        for i in range(n - 1):
            row = [field.one() if j == i else field.zero() for j in range(n - 1)]
            row.append(field.one())
            rows.append(row)
        return Matrix(field, rows)
    return None
