"""Exact multivariate polynomials, Groebner bases, and Artinian quotients.

Variables are 1-based indices displayed as x1, x2, ...  Monomials are
sparse (no zero exponents stored).  Two independent decision paths are
kept deliberately separate: Buchberger normal forms, and degree-by-degree
dense (Macaulay) linear algebra; agreement between them is a tested
invariant, never an assumption.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement
from typing import NamedTuple

from .errors import BadParams, NotArtinian
from .fields import Field
from .linalg import Matrix, RowSpace

MACAULAY_DEGREE_CAP = 64


class Monomial:
    """Sparse monomial: sorted tuple of (variable, exponent), exponents > 0."""

    __slots__ = ("exps",)

    def __init__(self, exps=()):
        if isinstance(exps, dict):
            items = exps.items()
        else:
            items = exps
        clean = tuple(sorted((int(v), int(a)) for v, a in items if a))
        if any(v < 1 or a < 0 for v, a in clean):
            raise BadParams(f"bad monomial data {clean}")
        self.exps = clean

    @classmethod
    def one(cls) -> "Monomial":
        return cls(())

    @classmethod
    def variable(cls, v: int, power: int = 1) -> "Monomial":
        return cls(((v, power),))

    def degree(self) -> int:
        return sum(a for _, a in self.exps)

    def exponent(self, v: int) -> int:
        for w, a in self.exps:
            if w == v:
                return a
        return 0

    def variables(self) -> tuple:
        return tuple(v for v, _ in self.exps)

    def mul(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, a in other.exps:
            d[v] = d.get(v, 0) + a
        return Monomial(d)

    def divides(self, other: "Monomial") -> bool:
        od = dict(other.exps)
        return all(od.get(v, 0) >= a for v, a in self.exps)

    def div(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, a in other.exps:
            r = d.get(v, 0) - a
            if r < 0:
                raise BadParams(f"{other} does not divide {self}")
            d[v] = r
        return Monomial(d)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, a in other.exps:
            d[v] = max(d.get(v, 0), a)
        return Monomial(d)

    def is_coprime(self, other: "Monomial") -> bool:
        mine = {v for v, _ in self.exps}
        return not any(v in mine for v, _ in other.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"Monomial({self.show()})"

    def show(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for v, a in self.exps:
            parts.append(f"x{v}" if a == 1 else f"x{v}^{a}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        text = text.strip()
        if text == "1":
            return cls.one()
        d: dict = {}
        for tok in text.split():
            m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise BadParams(f"bad monomial token {tok!r}")
            v = int(m.group(1))
            a = int(m.group(2) or 1)
            d[v] = d.get(v, 0) + a
        return cls(d)


def _dense(m: Monomial, nvars: int) -> tuple:
    return tuple(m.exponent(v) for v in range(1, nvars + 1))


def order_key(order: str, nvars: int):
    """Sort key: larger key = larger monomial.  x1 > x2 > ... throughout."""
    if order == "lex":
        return lambda m: _dense(m, nvars)
    if order == "grlex":
        return lambda m: (m.degree(), _dense(m, nvars))
    if order == "grevlex":
        return lambda m: (
            m.degree(),
            tuple(-e for e in reversed(_dense(m, nvars))),
        )
    raise BadParams(f"unknown monomial order {order!r}")


class Polynomial:
    """Immutable polynomial: map Monomial -> nonzero field element."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms):
        z = field.zero()
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        acc: dict = {}
        for m, c in items:
            if c == z:
                continue
            if m in acc:
                s = field.add(acc[m], c)
                if s == z:
                    del acc[m]
                else:
                    acc[m] = s
            else:
                acc[m] = c
        bad = [m for m in acc if m.exps and m.exps[-1][0] > nvars]
        if bad:
            raise BadParams(f"monomial {bad[0].show()} uses a variable beyond x{nvars}")
        self.field = field
        self.nvars = nvars
        self.terms = acc

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "Polynomial":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: Field, nvars: int, c) -> "Polynomial":
        return cls(field, nvars, {Monomial.one(): c})

    @classmethod
    def from_monomial(cls, field: Field, nvars: int, m: Monomial, c=None) -> "Polynomial":
        return cls(field, nvars, {m: field.one() if c is None else c})

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {m.degree() for m in self.terms}
        return len(degs) <= 1

    def total_degree(self) -> int:
        return max((m.degree() for m in self.terms), default=0)

    def add(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        F = self.field
        z = F.zero()
        for m, c in other.terms.items():
            s = F.add(out.get(m, z), c)
            if s == z:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(F, self.nvars, out)

    def neg(self) -> "Polynomial":
        F = self.field
        return Polynomial(F, self.nvars, {m: F.neg(c) for m, c in self.terms.items()})

    def sub(self, other: "Polynomial") -> "Polynomial":
        return self.add(other.neg())

    def scale(self, c) -> "Polynomial":
        F = self.field
        return Polynomial(F, self.nvars, {m: F.mul(c, v) for m, v in self.terms.items()})

    def term_mul(self, mono: Monomial, c=None) -> "Polynomial":
        F = self.field
        c = F.one() if c is None else c
        return Polynomial(
            F, self.nvars, {m.mul(mono): F.mul(c, v) for m, v in self.terms.items()}
        )

    def mul(self, other: "Polynomial") -> "Polynomial":
        F = self.field
        z = F.zero()
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                s = F.add(out.get(m, z), F.mul(c1, c2))
                if s == z:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(F, self.nvars, out)

    def leading(self, key) -> tuple:
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def monic(self, key) -> "Polynomial":
        if self.is_zero():
            return self
        _, c = self.leading(key)
        return self.scale(self.field.inv(c))

    def sorted_terms(self, key) -> list:
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self.show()})"

    # -- text syntax --------------------------------------------------------

    def show(self, order: str = "grlex") -> str:
        if self.is_zero():
            return "0"
        F = self.field
        key = order_key(order, self.nvars)
        out = []
        for i, (m, c) in enumerate(self.sorted_terms(key)):
            cs = F.show(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if m.exps:
                body = m.show() if mag == "1" else f"{mag} {m.show()}"
            else:
                body = mag
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    @classmethod
    def parse(cls, field: Field, nvars: int, text: str) -> "Polynomial":
        text = text.strip().replace("−", "-")
        if text in ("", "0"):
            return cls.zero(field, nvars)
        # split into signed terms
        chunks = re.split(r"\s*([+-])\s*", text)
        if chunks[0] == "":
            chunks = chunks[1:]
        else:
            chunks = ["+"] + chunks
        terms = []
        for sign, body in zip(chunks[0::2], chunks[1::2]):
            body = body.strip()
            if not body:
                raise BadParams("empty term")
            m = re.match(r"^(\d+(?:/\d+)?)?\s*(.*)$", body)
            coeff_txt, mono_txt = m.group(1), m.group(2).strip()
            c = field.parse(coeff_txt) if coeff_txt else field.one()
            if sign == "-":
                c = field.neg(c)
            mono = Monomial.parse(mono_txt) if mono_txt else Monomial.one()
            terms.append((mono, c))
        return cls(field, nvars, terms)


class Ideal(NamedTuple):
    field: Field
    nvars: int
    generators: tuple

    @classmethod
    def make(cls, field: Field, nvars: int, gens) -> "Ideal":
        return cls(field, nvars, tuple(g for g in gens if not g.is_zero()))


# -- reduction / Buchberger ---------------------------------------------------


def normal_form(poly: Polynomial, basis, key) -> Polynomial:
    """Remainder of poly under multivariate division by basis (any order of use
    is made deterministic by always picking the first divisor in list order)."""
    F = poly.field
    rem: dict = {}
    work = Polynomial(F, poly.nvars, dict(poly.terms))
    leads = [(g.leading(key)[0], g) for g in basis if not g.is_zero()]
    while not work.is_zero():
        m, c = work.leading(key)
        hit = next(((lm, g) for lm, g in leads if lm.divides(m)), None)
        if hit is None:
            rem[m] = c
            work = Polynomial(F, poly.nvars, {mm: cc for mm, cc in work.terms.items() if mm != m})
            continue
        lm, g = hit
        glm, glc = g.leading(key)
        factor = F.div(c, glc)
        work = work.sub(g.term_mul(m.div(glm), factor))
    return Polynomial(F, poly.nvars, rem)


def s_polynomial(f: Polynomial, g: Polynomial, key) -> Polynomial:
    F = f.field
    fm, fc = f.leading(key)
    gm, gc = g.leading(key)
    l = fm.lcm(gm)
    return f.term_mul(l.div(fm), F.inv(fc)).sub(g.term_mul(l.div(gm), F.inv(gc)))


def groebner_basis(ideal: Ideal, order: str = "grlex") -> tuple:
    """Reduced Groebner basis via Buchberger with sugar strategy.

    Pairs are processed by (sugar, lcm degree); the coprime-lead product
    criterion and the chain criterion prune useless S-polynomials.
    """
    key = order_key(order, ideal.nvars)
    basis = [g.monic(key) for g in ideal.generators if not g.is_zero()]
    if not basis:
        return ()
    sugar = [g.total_degree() for g in basis]

    def pair_sugar(i, j):
        fm = basis[i].leading(key)[0]
        gm = basis[j].leading(key)[0]
        l = fm.lcm(gm)
        return max(
            sugar[i] + l.div(fm).degree(),
            sugar[j] + l.div(gm).degree(),
        )

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (
                pair_sugar(*p),
                basis[p[0]].leading(key)[0].lcm(basis[p[1]].leading(key)[0]).degree(),
                p,
            ),
        )
        pairs.discard((i, j))
        fm = basis[i].leading(key)[0]
        gm = basis[j].leading(key)[0]
        if fm.is_coprime(gm):
            continue
        l = fm.lcm(gm)
        # chain criterion: some k whose lead divides the lcm, with both
        # sibling pairs already handled
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if basis[k].leading(key)[0].divides(l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = s_polynomial(basis[i], basis[j], key)
        r = normal_form(s, basis, key)
        if r.is_zero():
            continue
        r = r.monic(key)
        new = len(basis)
        new_sugar = max(
            sugar[i] + l.div(fm).degree(),
            sugar[j] + l.div(gm).degree(),
        )
        basis.append(r)
        sugar.append(max(new_sugar, r.total_degree()))
        pairs.update((t, new) for t in range(new))

    # interreduce to the unique reduced basis
    reduced = []
    leads = [g.leading(key)[0] for g in basis]
    for i, g in enumerate(basis):
        lm = leads[i]
        if any(j != i and leads[j].divides(lm) and (leads[j] != lm or j < i) for j in range(len(basis))):
            continue
        reduced.append(g)
    final = []
    for i, g in enumerate(reduced):
        others = reduced[:i] + reduced[i + 1:]
        r = normal_form(g, others, key) if others else g
        if not r.is_zero():
            final.append(r.monic(key))
    final.sort(key=lambda g: key(g.leading(key)[0]))
    return tuple(final)


# -- quotient dimension -------------------------------------------------------


def _staircase_bounds(leads, nvars: int):
    """Per-variable pure-power exponents among leading monomials, or None."""
    bounds = [None] * (nvars + 1)
    for m in leads:
        vs = m.variables()
        if len(vs) == 1:
            v = vs[0]
            a = m.exponent(v)
            if bounds[v] is None or a < bounds[v]:
                bounds[v] = a
        elif not vs:
            return "unit"
    return bounds


def standard_monomials(gb, nvars: int, order: str = "grlex") -> tuple:
    """Monomials outside the leading-term ideal, ascending in the order.

    Raises NotArtinian when some variable has no pure power among the
    leading monomials (infinitely many standard monomials).
    """
    key = order_key(order, nvars)
    if nvars == 0:
        return () if gb else (Monomial.one(),)
    if not gb:
        raise NotArtinian("zero ideal has an infinite quotient", 1)
    leads = [g.leading(key)[0] for g in gb]
    bounds = _staircase_bounds(leads, nvars)
    if bounds == "unit":
        return ()
    missing = next((v for v in range(1, nvars + 1) if bounds[v] is None), None)
    if missing is not None:
        raise NotArtinian(f"no pure power of x{missing} in the leading ideal", missing)
    out = []

    # box walk bounded by the pure powers, pruned at divisible prefixes
    def rec(v: int, m: Monomial):
        if any(l.divides(m) for l in leads):
            return
        if v > nvars:
            out.append(m)
            return
        for a in range(bounds[v]):
            rec(v + 1, m.mul(Monomial.variable(v, a)) if a else m)

    rec(1, Monomial.one())
    out.sort(key=key)
    return tuple(out)


def quotient_dimension(ideal: Ideal, order: str = "grlex") -> tuple:
    """(total dimension, by-degree tuple) via the Groebner staircase."""
    if ideal.nvars == 0:
        one_in = any(not g.is_zero() for g in ideal.generators)
        return (0, ()) if one_in else (1, (1,))
    gb = groebner_basis(ideal, order)
    if not gb:
        raise NotArtinian("zero ideal has an infinite quotient", 1)
    std = standard_monomials(gb, ideal.nvars, order)
    if not std:
        return (0, ())
    dmax = max(m.degree() for m in std)
    by_deg = [0] * (dmax + 1)
    for m in std:
        by_deg[m.degree()] += 1
    return (len(std), tuple(by_deg))


def monomials_of_degree(nvars: int, d: int, order: str = "grlex") -> tuple:
    """All degree-d monomials, descending in the given order (column order)."""
    key = order_key(order, nvars)
    if d == 0:
        return (Monomial.one(),)
    out = [
        Monomial({v: picks.count(v) for v in set(picks)})
        for picks in combinations_with_replacement(range(1, nvars + 1), d)
    ]
    out.sort(key=key, reverse=True)
    return tuple(out)


def _macaulay_rows(ideal: Ideal, d: int, cols: dict):
    F = ideal.field
    z = F.zero()
    rows = []
    for g in ideal.generators:
        dg = g.total_degree()
        if dg > d or g.is_zero():
            continue
        for shift in monomials_of_degree(ideal.nvars, d - dg):
            p = g.term_mul(shift)
            row = [z] * len(cols)
            for m, c in p.terms.items():
                row[cols[m]] = c
            rows.append(row)
    return rows


def quotient_dimension_macaulay(ideal: Ideal, cap: int | None = None) -> tuple:
    """(total, by-degree) by dense rank per degree; no Groebner machinery.

    Requires homogeneous generators.  Scans degrees until the quotient
    vanishes; if it has not vanished by `cap` (default: sum of generator
    degrees, a complete-intersection-style regularity bound) the quotient
    is declared non-Artinian.
    """
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise BadParams("macaulay path requires homogeneous generators")
    if ideal.nvars == 0:
        one_in = any(not g.is_zero() for g in ideal.generators)
        return (0, ()) if one_in else (1, (1,))
    if cap is None:
        cap = sum(g.total_degree() for g in ideal.generators) or 1
    cap = min(cap, MACAULAY_DEGREE_CAP)
    by_deg = []
    d = 0
    while True:
        mons = monomials_of_degree(ideal.nvars, d)
        cols = {m: i for i, m in enumerate(mons)}
        rows = _macaulay_rows(ideal, d, cols)
        rk = Matrix(ideal.field, rows).rank() if rows else 0
        dim_d = len(mons) - rk
        if dim_d == 0:
            break
        by_deg.append(dim_d)
        d += 1
        if d > cap:
            raise NotArtinian(f"quotient still growing at degree {cap}", None)
    return (sum(by_deg), tuple(by_deg))


# -- monomial basis decision ---------------------------------------------------


class BasisVerdict(NamedTuple):
    kind: str  # basis | not_independent | not_spanning | wrong_cardinality
    witness: Monomial | None

    @property
    def is_basis(self) -> bool:
        return self.kind == "basis"


def monomial_set_is_basis(
    ideal: Ideal, monomials, method: str = "both", order: str = "grlex"
) -> BasisVerdict:
    """Decide whether the images of `monomials` form a basis of k[x]/ideal.

    Precedence: NotArtinian raised; wrong_cardinality when the sizes differ;
    not_independent with the first offending monomial; not_spanning with a
    witness standard monomial when S is independent but too small.  method
    selects 'groebner', 'macaulay', or 'both' (both paths must agree; any
    disagreement raises, since it would mean a bug in one of them).
    """
    mons = list(monomials)
    res_g = res_m = None
    if method in ("groebner", "both"):
        res_g = _basis_via_groebner(ideal, mons, order)
    if method in ("macaulay", "both"):
        res_m = _basis_via_macaulay(ideal, mons)
    if res_g is not None and res_m is not None and res_g.kind != res_m.kind:
        raise AssertionError(
            f"independent decision paths disagree: {res_g.kind} vs {res_m.kind}"
        )
    return res_g if res_g is not None else res_m


def _basis_via_groebner(ideal: Ideal, mons, order: str) -> BasisVerdict:
    key = order_key(order, ideal.nvars)
    total, _ = quotient_dimension(ideal, order)
    if len(mons) > total:
        return BasisVerdict("wrong_cardinality", None)
    gb = groebner_basis(ideal, order)
    std = standard_monomials(gb, ideal.nvars, order)
    cols = {m: i for i, m in enumerate(std)}
    F = ideal.field
    z = F.zero()
    seen: list = []
    for m in sorted(mons, key=key):
        nf = normal_form(Polynomial.from_monomial(F, ideal.nvars, m), gb, key)
        row = [z] * len(cols)
        for mm, c in nf.terms.items():
            row[cols[mm]] = c
        stack = seen + [row]
        if Matrix(F, stack).rank() < len(stack):
            return BasisVerdict("not_independent", m)
        seen.append(row)
    if len(mons) < total:
        # independent but too few: some standard monomial escapes the span
        rk = Matrix(F, seen).rank() if seen else 0
        for i, m in enumerate(std):
            unit = [z] * len(cols)
            unit[i] = F.one()
            if Matrix(F, seen + [unit]).rank() > rk:
                return BasisVerdict("not_spanning", m)
        raise AssertionError("independent set smaller than dimension must miss something")
    return BasisVerdict("basis", None)


def _basis_via_macaulay(ideal: Ideal, mons) -> BasisVerdict:
    F = ideal.field
    z = F.zero()
    total, by_deg = quotient_dimension_macaulay(ideal)
    if len(mons) > total:
        return BasisVerdict("wrong_cardinality", None)
    key = order_key("grlex", ideal.nvars)
    by_degree: dict = {}
    for m in mons:
        by_degree.setdefault(m.degree(), []).append(m)
    degrees = sorted(set(by_degree) | set(range(len(by_deg))))
    witness_dep = None
    witness_span = None
    for d in degrees:
        s_d = sorted(by_degree.get(d, []), key=key)
        cols_list = monomials_of_degree(ideal.nvars, d)
        cols = {m: i for i, m in enumerate(cols_list)}
        jrows = _macaulay_rows(ideal, d, cols)
        jrank = Matrix(F, jrows).rank() if jrows else 0
        rows = list(jrows)
        base = jrank
        for m in s_d:
            row = [z] * len(cols)
            row[cols[m]] = F.one()
            rows.append(row)
            rk = Matrix(F, rows).rank()
            if rk == base and witness_dep is None:
                witness_dep = m
            base = rk
        rk = base
        dim_d = by_deg[d] if d < len(by_deg) else 0
        if jrank + dim_d > rk and witness_span is None:
            # some degree-d quotient vector lies outside span(J_d + S_d)
            for m in cols_list:
                row = [z] * len(cols)
                row[cols[m]] = F.one()
                if Matrix(F, rows + [row]).rank() > rk:
                    witness_span = m
                    break
    if witness_dep is not None:
        return BasisVerdict("not_independent", witness_dep)
    if witness_span is not None:
        return BasisVerdict("not_spanning", witness_span)
    return BasisVerdict("basis", None)


def monomials_independent_in_quotient(ideal: Ideal, mons) -> tuple:
    """(all independent?, first dependent monomial) by per-degree Macaulay rank.

    Unlike monomial_set_is_basis this never computes the quotient dimension,
    so it stays cheap inside search loops.  Homogeneous generators required.
    """
    F = ideal.field
    z = F.zero()
    key = order_key("grlex", ideal.nvars)
    by_degree: dict = {}
    for m in mons:
        by_degree.setdefault(m.degree(), []).append(m)
    for d in sorted(by_degree):
        s_d = sorted(by_degree[d], key=key)
        cols_list = monomials_of_degree(ideal.nvars, d)
        cols = {m: i for i, m in enumerate(cols_list)}
        space = RowSpace(F, len(cols))
        for row in _macaulay_rows(ideal, d, cols):
            space.add(row)
        for m in s_d:
            row = [z] * len(cols)
            row[cols[m]] = F.one()
            if not space.add(row):
                return (False, m)
    return (True, None)


# -- order ideals ---------------------------------------------------------------


class OrderIdealSet:
    """A lower order ideal (all members) or upper order ideal (min generators)."""

    def __init__(self, kind: str, monomials):
        if kind not in ("lower", "upper"):
            raise BadParams("kind must be 'lower' or 'upper'")
        self.kind = kind
        self.monomials = frozenset(monomials)

    def contains(self, m: Monomial) -> bool:
        if self.kind == "lower":
            return m in self.monomials
        return any(g.divides(m) for g in self.monomials)

    def is_closed(self) -> bool:
        """One-step closure check (divisibility down / generator antichain up)."""
        if self.kind == "lower":
            for m in self.monomials:
                for v, _ in m.exps:
                    if m.div(Monomial.variable(v)) not in self.monomials:
                        return False
            return True
        for a in self.monomials:
            for b in self.monomials:
                if a != b and a.divides(b):
                    return False
        return True

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __repr__(self):
        return f"OrderIdealSet({self.kind}, {len(self.monomials)} monomials)"


def minimal_generators(monomials) -> frozenset:
    ms = set(monomials)
    return frozenset(m for m in ms if not any(o != m and o.divides(m) for o in ms))
