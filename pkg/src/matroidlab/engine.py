"""The monomial basis pipeline: orderings, theta systems, candidate sets, search.

A standard ordering is a permutation of the ground set whose last rank(M)
elements form a basis.  For each one the engine builds the distinguished
linear forms (one per basis element, read off the signed fundamental
cocircuit rows), eliminates the basis variables, and compares the candidate
lower order ideal against the quotient by exact linear algebra.

The decision logic never assumes the construction succeeds.  The verdict
for an ordering is reached in three sound stages: per-degree cardinality
of the candidate set against the h-vector, then the facet-rank criterion
for the linear system (its failure means the quotient is infinite
dimensional, so no finite set can be a basis), then exact independence of
the candidate monomials in the quotient.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from math import factorial
from typing import NamedTuple

from .complexes import HVector, Ordering, bc_facets, f_h_vectors
from .errors import (
    BadParams, InfiniteLowerIdeal, LsopInvalid, NoCocircuitPair, NotRegular,
    NotStandardOrdering,
)
from .fields import Field, GF2_FIELD, field_from_name
from .incidence import basis_is_nonsingular
from .linalg import Matrix, RowSpace
from .matroids import Matroid, matroid_from_json
from .polynomials import (
    Ideal, Monomial, OrderIdealSet, Polynomial, groebner_basis,
    minimal_generators, monomials_independent_in_quotient, normal_form,
    order_key,
)

DEFAULT_CHECKPOINT_EVERY = 5000
BASIS_INDEX_CAP = 100


class StandardOrdering:
    """An ordering whose last `rank` labels form a basis."""

    __slots__ = ("ordering", "rank", "index")

    def __init__(self, ordering: Ordering, rank: int, index: int | None = None):
        self.ordering = ordering
        self.rank = rank
        self.index = index

    @property
    def labels(self) -> tuple:
        return self.ordering.labels

    @property
    def cobasis(self) -> tuple:
        return self.labels[: len(self.labels) - self.rank]

    @property
    def basis(self) -> tuple:
        return self.labels[len(self.labels) - self.rank:]

    def __repr__(self):
        return f"StandardOrdering({self.ordering.show()}; rank {self.rank})"

    def show(self) -> str:
        return self.ordering.show()


def standard_ordering(matroid: Matroid, labels, index: int | None = None) -> StandardOrdering:
    o = labels if isinstance(labels, Ordering) else Ordering(tuple(labels))
    o.validate_for(matroid)
    r = matroid.rank()
    basis = o.labels[len(o.labels) - r:]
    if r and not matroid.is_independent(frozenset(basis)):
        raise NotStandardOrdering(f"last {r} elements {basis} are not a basis")
    return StandardOrdering(o, r, index)


# -- enumeration ---------------------------------------------------------------


def _sorted_bases(matroid: Matroid) -> tuple:
    cached = matroid._cache.get("sorted_bases")
    if cached is None:
        pos = matroid.position
        cached = tuple(
            tuple(sorted(b, key=pos.get))
            for b in sorted(matroid.bases(), key=lambda b: tuple(sorted(pos[e] for e in b)))
        )
        matroid._cache["sorted_bases"] = cached
    return cached


def count_standard_orderings(matroid: Matroid) -> int:
    n = len(matroid.ground)
    r = matroid.rank()
    return len(_sorted_bases(matroid)) * factorial(r) * factorial(n - r)


def _perm_unrank(items, k: int) -> list:
    """k-th permutation of `items` in lexicographic order of positions."""
    pool = list(items)
    out = []
    for i in range(len(pool), 0, -1):
        idx, k = divmod(k, factorial(i - 1))
        out.append(pool.pop(idx))
    return out


def standard_ordering_at(matroid: Matroid, k: int) -> StandardOrdering:
    """Unrank: index = (basis number, cobasis permutation, basis permutation)
    in mixed radix, most significant first."""
    total = count_standard_orderings(matroid)
    if not 0 <= k < total:
        raise BadParams(f"ordering index {k} outside [0, {total})")
    n = len(matroid.ground)
    r = matroid.rank()
    f_bas = factorial(r)
    f_cob = factorial(n - r)
    b_idx, rem = divmod(k, f_cob * f_bas)
    cob_rank, bas_rank = divmod(rem, f_bas)
    basis = _sorted_bases(matroid)[b_idx]
    bset = set(basis)
    pos = matroid.position
    cobasis = sorted((e for e in matroid.ground if e not in bset), key=pos.get)
    labels = tuple(_perm_unrank(cobasis, cob_rank) + _perm_unrank(basis, bas_rank))
    return StandardOrdering(Ordering(labels), r, index=k)


def iter_standard_orderings(matroid: Matroid, start: int = 0, stop: int | None = None):
    total = count_standard_orderings(matroid)
    stop = total if stop is None else min(stop, total)
    for k in range(start, stop):
        yield standard_ordering_at(matroid, k)


# -- per-basis cached fundamental data ----------------------------------------


def _fundamental_rows(matroid: Matroid, basis: frozenset, field: Field) -> dict:
    """Sparse signed fundamental cocircuit rows: {basis elt: {label: coeff}}.

    Entries depend only on the basis, not on the ordering, so they are
    cached per (field, basis).  Over characteristic 2 a representation-free
    combinatorial fallback covers matroids with no representation.
    """
    key = ("fund_rows", field.name, basis)
    cached = matroid._cache.get(key)
    if cached is not None:
        return cached
    pos = matroid.position
    rows: dict = {}
    try:
        rep = matroid.representation_over(field)
    except NotRegular:
        if field.char != 2:
            raise
        rep = None
    if rep is None:
        one = field.one()
        for b in sorted(basis, key=pos.get):
            supp = matroid.fundamental_cocircuit(basis, b)
            rows[b] = {e: one for e in supp}
    else:
        order = sorted(matroid.ground, key=pos.get)
        col_of = {lab: j for j, lab in enumerate(rep.col_labels)}
        perm = rep.select_columns([col_of[lab] for lab in order])
        basis_cols = [i for i, lab in enumerate(order) if lab in basis]
        sf = perm.standard_form(basis_cols)
        z = field.zero()
        allowed = {z, field.one(), field.neg(field.one())}
        for i, ci in enumerate(basis_cols):
            row = sf.entries[i]
            if any(x not in allowed for x in row):
                bad = next(x for x in row if x not in allowed)
                raise NotRegular(f"cocircuit entry {field.show(bad)} outside 0,+1,-1")
            rows[order[ci]] = {lab: x for lab, x in zip(order, row) if x != z}
    matroid._cache[key] = rows
    return rows


def _coc_positions(matroid: Matroid, std: StandardOrdering) -> dict:
    """{basis position j (1-based): sorted positions of coc(B, e_j)}."""
    rows = _fundamental_rows(matroid, frozenset(std.basis), GF2_FIELD)
    position = std.ordering.position
    out = {}
    for b in std.basis:
        out[position(b)] = tuple(sorted(position(e) for e in rows[b]))
    return out


# -- theta systems -------------------------------------------------------------


class ThetaSystem(NamedTuple):
    """The distinguished linear forms for one standard ordering and field.

    forms live in all n position-variables; substitution maps each basis
    position to its elimination image in the cobasis variables; ideal is
    the eliminated ideal with one generator per circuit (zero generators
    dropped); generators keeps every (circuit, polynomial) pair.
    """

    std: StandardOrdering
    field: Field
    cocircuit_matrix: Matrix
    forms: tuple
    substitution: dict
    generators: tuple
    ideal: Ideal
    valid: bool | None
    invalid_facet: frozenset | None


def lsop(
    matroid: Matroid,
    std: StandardOrdering,
    field: Field,
    validate: bool = True,
    require_valid: bool = False,
) -> ThetaSystem:
    """Build the linear system and eliminated ideal; optionally check the
    facet-rank criterion (every facet's column set nonsingular), which for
    a quotient by rank-many linear forms decides finite-dimensionality."""
    n = len(std.labels)
    r = std.rank
    t = n - r
    F = field
    z = F.zero()
    rows = _fundamental_rows(matroid, frozenset(std.basis), F)
    position = std.ordering.position
    coc_rows = []
    forms = []
    substitution = {}
    for b in std.basis:
        j = position(b)
        sparse = rows[b]
        row = [z] * n
        for e, c in sparse.items():
            row[position(e) - 1] = c
        coc_rows.append(row)
        forms.append(
            Polynomial(F, n, {Monomial.variable(i + 1): c for i, c in enumerate(row) if c != z})
        )
        substitution[j] = Polynomial(
            F, t, {Monomial.variable(i + 1): F.neg(row[i]) for i in range(t) if row[i] != z}
        )
    cm = Matrix(F, coc_rows, col_labels=std.labels, row_labels=std.basis)
    gens = []
    for C in matroid.circuits():
        least = min(position(e) for e in C)
        p = Polynomial.constant(F, t, F.one())
        for e in sorted(C, key=position):
            j = position(e)
            if j == least:
                continue
            p = p.term_mul(Monomial.variable(j)) if j <= t else p.mul(substitution[j])
        gens.append((frozenset(C), p))
    ideal = Ideal.make(F, t, [p for _, p in gens])
    valid = None
    bad = None
    if validate or require_valid:
        valid = True
        for facet in bc_facets(matroid, std.ordering):
            if not basis_is_nonsingular(matroid, cm, facet):
                valid = False
                bad = facet
                break
        if require_valid and not valid:
            raise LsopInvalid(
                "facet {" + ",".join(sorted(bad, key=position)) + "} fails the rank criterion"
            )
    return ThetaSystem(std, F, cm, tuple(forms), substitution, tuple(gens), ideal, valid, bad)


# -- candidate monomials -------------------------------------------------------


def dj_values(matroid: Matroid, std: StandardOrdering) -> tuple:
    """d_1..d_n: position itself for cobasis positions, else the smallest
    position inside the fundamental cocircuit of that basis element."""
    n = len(std.labels)
    t = n - std.rank
    coc = _coc_positions(matroid, std)
    d = []
    for j in range(1, n + 1):
        d.append(j if j <= t else min(coc[j]))
    return tuple(d)


def candidate_monomials(matroid: Matroid, std: StandardOrdering) -> tuple:
    """(circuit, monomial) per circuit: a pure power of the circuit's unique
    cobasis variable when the circuit is fundamental, else the product of
    the d-values over the circuit minus its smallest element."""
    position = std.ordering.position
    t = len(std.labels) - std.rank
    d = dj_values(matroid, std)
    out = []
    for C in matroid.circuits():
        cob = [position(e) for e in C if position(e) <= t]
        if len(cob) == 1:
            m = Monomial.variable(cob[0], len(C) - 1) if len(C) > 1 else Monomial.one()
        else:
            least = min(cob)
            exps: dict = {}
            for e in C:
                j = position(e)
                if j == least:
                    continue
                v = d[j - 1]
                exps[v] = exps.get(v, 0) + 1
            m = Monomial(exps)
        out.append((frozenset(C), m))
    return tuple(out)


def order_ideals(matroid: Matroid, std: StandardOrdering) -> tuple:
    """(upper, lower): the upper ideal generated by the candidate monomials
    and its finite complement, the candidate basis, in t = n - rank
    variables.  Raises InfiniteLowerIdeal if some variable never acquires
    a pure-power generator (impossible for the standard construction,
    kept as a defensive guard)."""
    t = len(std.labels) - std.rank
    mc = candidate_monomials(matroid, std)
    gens = minimal_generators(m for _, m in mc)
    upper = OrderIdealSet("upper", gens)
    if Monomial.one() in gens:
        return upper, OrderIdealSet("lower", ())
    bounds = [None] * (t + 1)
    for m in gens:
        vs = m.variables()
        if len(vs) == 1:
            v = vs[0]
            a = m.exponent(v)
            if bounds[v] is None or a < bounds[v]:
                bounds[v] = a
    for v in range(1, t + 1):
        if bounds[v] is None:
            raise InfiniteLowerIdeal(f"no pure power of x{v} among the generators", v)
    glist = tuple(gens)
    out = []

    def rec(v: int, m: Monomial):
        if any(g.divides(m) for g in glist):
            return
        if v > t:
            out.append(m)
            return
        for a in range(bounds[v]):
            rec(v + 1, m.mul(Monomial.variable(v, a)) if a else m)

    rec(1, Monomial.one())
    out.sort(key=order_key("grlex", t))
    return upper, OrderIdealSet("lower", out)


# -- the basis decision --------------------------------------------------------


class NbcReport(NamedTuple):
    ordering: tuple
    field: str
    h: HVector
    l_size: int
    quotient_dim: int | None
    cardinality_ok: bool
    lsop_valid: bool | None
    independent: bool | None
    verdict: str  # "basis" | "not_basis"
    reason: str  # "" | "wrong_cardinality" | "lsop_invalid" | "not_independent"
    witness: str | None
    l_monomials: tuple
    timing: float | None

    @property
    def is_basis(self) -> bool:
        return self.verdict == "basis"


def _h_vector(matroid: Matroid, std: StandardOrdering) -> HVector:
    cached = matroid._cache.get("h_vector")
    if cached is None:
        _, cached = f_h_vectors(matroid, std.ordering)
        matroid._cache["h_vector"] = cached
    return cached


def _independent_via_groebner(ideal: Ideal, mons) -> tuple:
    key = order_key("grlex", ideal.nvars)
    gb = groebner_basis(ideal, "grlex")
    F = ideal.field
    z = F.zero()
    reduced = []
    cols: dict = {}
    for m in sorted(mons, key=key):
        nf = normal_form(Polynomial.from_monomial(F, ideal.nvars, m), gb, key)
        reduced.append((m, nf))
        for mm in nf.terms:
            cols.setdefault(mm, len(cols))
    space = RowSpace(F, len(cols))
    for m, nf in reduced:
        row = [z] * len(cols)
        for mm, c in nf.terms.items():
            row[cols[mm]] = c
        if not space.add(row):
            return (False, m)
    return (True, None)


def nbc_check(
    matroid: Matroid,
    std: StandardOrdering,
    field: Field,
    method: str = "macaulay",
    include_monomials: bool = True,
    timing: bool = False,
) -> NbcReport:
    """Decide whether the ordering's candidate monomials form a quotient basis.

    Stages, each sound on its own: (1) the candidate set must match the
    h-vector degree by degree (a finite candidate set can never be a basis
    otherwise, whatever the quotient is); (2) the facet-rank criterion must
    hold (otherwise the quotient is infinite dimensional); (3) the candidate
    images must be linearly independent, checked by dense degree-by-degree
    elimination ('macaulay'), Buchberger normal forms ('groebner'), or
    'both' (which must agree).
    """
    t0 = time.perf_counter()
    if method not in ("macaulay", "groebner", "both"):
        raise BadParams(f"unknown method {method!r}")
    h = _h_vector(matroid, std)
    _, lower = order_ideals(matroid, std)
    key = order_key("grlex", len(std.labels) - std.rank)
    L = sorted(lower.monomials, key=key)
    shown = tuple(m.show() for m in L) if include_monomials else ()
    by_deg: dict = {}
    for m in L:
        by_deg[m.degree()] = by_deg.get(m.degree(), 0) + 1
    dmax = max(len(h.entries) - 1, max(by_deg, default=0))
    mismatch = next(
        (
            d
            for d in range(dmax + 1)
            if by_deg.get(d, 0) != (h.entries[d] if d < len(h.entries) else 0)
        ),
        None,
    )

    def report(quotient_dim, cardinality_ok, lsop_valid, independent, verdict, reason, witness):
        return NbcReport(
            ordering=std.labels,
            field=field.name,
            h=h,
            l_size=len(L),
            quotient_dim=quotient_dim,
            cardinality_ok=cardinality_ok,
            lsop_valid=lsop_valid,
            independent=independent,
            verdict=verdict,
            reason=reason,
            witness=witness,
            l_monomials=shown,
            timing=(time.perf_counter() - t0) if timing else None,
        )

    if mismatch is not None:
        got = by_deg.get(mismatch, 0)
        want = h.entries[mismatch] if mismatch < len(h.entries) else 0
        return report(
            None, False, None, None, "not_basis", "wrong_cardinality",
            f"degree {mismatch}: {got} candidate monomials, h_{mismatch} = {want}",
        )
    theta = lsop(matroid, std, field, validate=True)
    if not theta.valid:
        facet = "{" + ",".join(sorted(theta.invalid_facet, key=std.ordering.position)) + "}"
        return report(None, True, False, None, "not_basis", "lsop_invalid", facet)
    results = []
    if method in ("macaulay", "both"):
        results.append(monomials_independent_in_quotient(theta.ideal, L))
    if method in ("groebner", "both"):
        results.append(_independent_via_groebner(theta.ideal, L))
    if len(results) == 2 and results[0][0] != results[1][0]:
        raise AssertionError(f"independence paths disagree: {results}")
    ok, wit = results[0]
    if not ok:
        return report(h.total, True, True, False, "not_basis", "not_independent", wit.show())
    return report(h.total, True, True, True, "basis", "", None)


# -- deletion-contraction decomposition ----------------------------------------


class DecompositionReport(NamedTuple):
    pair: tuple
    l_split_ok: bool
    delete_cocircuits_ok: bool
    contract_cocircuits_ok: bool
    type1_ok: bool
    type2_ok: bool
    h_additive_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.l_split_ok
            and self.delete_cocircuits_ok
            and self.contract_cocircuits_ok
            and self.type1_ok
            and self.type2_ok
            and self.h_additive_ok
        )


def decomposition_check(matroid: Matroid, std: StandardOrdering) -> DecompositionReport:
    """Verify the deletion-contraction identities when the last element and
    the last cobasis element form a cocircuit (NoCocircuitPair otherwise).

    Checks, over GF(2): the candidate-set split L(M) = L(M-e) + x_t L(M/e);
    the two fundamental cocircuit transfer laws; the generator and candidate
    correspondences for circuits through e (type I) and away from e (type
    II); and degreewise h-vector additivity.
    """
    labels = std.labels
    n = len(labels)
    r = std.rank
    t = n - r
    if t < 1 or r < 1:
        raise NoCocircuitPair("need at least one cobasis and one basis element")
    e_last = labels[-1]
    e_f = labels[t - 1]
    pair = frozenset({e_last, e_f})
    if pair not in set(matroid.cocircuits()):
        raise NoCocircuitPair(f"{{{e_f},{e_last}}} is not a cocircuit")
    rest = labels[:-1]
    m_del = matroid.delete([e_last])
    m_con = matroid.contract([e_last])
    std_del = standard_ordering(m_del, rest)
    std_con = standard_ordering(m_con, rest)

    _, low = order_ideals(matroid, std)
    _, low_d = order_ideals(m_del, std_del)
    _, low_c = order_ideals(m_con, std_con)
    xt = Monomial.variable(t)
    lifted = {xt.mul(m) for m in low_c.monomials}
    l_split_ok = (
        set(low.monomials) == (set(low_d.monomials) | lifted)
        and not (set(low_d.monomials) & lifted)
    )

    B = frozenset(std.basis)
    B1 = frozenset(std_del.basis)
    B2 = frozenset(std_con.basis)
    delete_ok = m_del.fundamental_cocircuit(B1, e_f) == frozenset({e_f}) == (
        matroid.fundamental_cocircuit(B, e_last) - {e_last}
    )
    for b in sorted(B1 - {e_f}, key=matroid.position.get):
        if m_del.fundamental_cocircuit(B1, b) != matroid.fundamental_cocircuit(B, b) - {e_f}:
            delete_ok = False
            break
    contract_ok = all(
        m_con.fundamental_cocircuit(B2, b) == matroid.fundamental_cocircuit(B, b)
        for b in sorted(B2, key=matroid.position.get)
    )

    F = GF2_FIELD
    th = lsop(matroid, std, F, validate=False)
    th_c = lsop(m_con, std_con, F, validate=False)
    gens = {c: p for c, p in th.generators}
    gens_c = {c: p for c, p in th_c.generators}
    mc = {c: m for c, m in candidate_monomials(matroid, std)}
    mc_c = {c: m for c, m in candidate_monomials(m_con, std_con)}
    type1_ok = True
    type2_ok = True
    for C in matroid.circuits():
        cf = frozenset(C)
        if e_last in cf:
            if e_f not in cf:
                type1_ok = False
                continue
            cc = cf - {e_last}
            if cc not in gens_c or gens[cf] != gens_c[cc].term_mul(xt) or mc[cf] != mc_c[cc].mul(xt):
                type1_ok = False
        else:
            if cf not in gens_c or gens[cf] != gens_c[cf] or mc[cf] != mc_c[cf]:
                type2_ok = False

    _, h = f_h_vectors(matroid, std.ordering)
    _, hd = f_h_vectors(m_del, std_del.ordering)
    _, hc = f_h_vectors(m_con, std_con.ordering)
    h_ok = all(
        h.entries[i]
        == (hd.entries[i] if i < len(hd.entries) else 0)
        + (hc.entries[i - 1] if 1 <= i <= len(hc.entries) else 0)
        for i in range(len(h.entries))
    )
    return DecompositionReport(
        (e_f, e_last), l_split_ok, delete_ok, contract_ok, type1_ok, type2_ok, h_ok
    )


# -- search over all standard orderings ----------------------------------------


class SearchReport(NamedTuple):
    policy: str
    field: str
    shard: str
    total_orderings: int
    domain: int
    checked: int
    tallies: dict
    basis_indices: tuple
    first_basis: dict | None
    completed: bool


def _policy_indices(policy: str, total: int):
    if policy in ("exhaustive", "first-hit"):
        return range(total)
    if policy.startswith("sample:"):
        parts = policy.split(":")
        if len(parts) != 3:
            raise BadParams("sample policy must be sample:COUNT:SEED")
        count, seed = int(parts[1]), int(parts[2])
        if count <= 0:
            raise BadParams("sample count must be positive")
        if count >= total:
            return range(total)
        rng = random.Random(seed)
        return sorted(rng.sample(range(total), count))
    raise BadParams(f"unknown policy {policy!r}")


def _check_one(matroid: Matroid, k: int, field: Field) -> tuple:
    std = standard_ordering_at(matroid, k)
    rep = nbc_check(matroid, std, field, method="macaulay", include_monomials=False)
    return (k, rep.verdict, rep.reason)


def _search_chunk(payload: tuple) -> list:
    data, field_name, indices = payload
    matroid = matroid_from_json(data)
    F = field_from_name(field_name)
    return [_check_one(matroid, k, F) for k in indices]


def _matroid_digest(matroid: Matroid) -> str:
    text = json.dumps(matroid.to_json(), sort_keys=True)
    return hashlib.sha256(text.encode()).hexdigest()


def _load_checkpoint(path: str, digest: str, policy: str, field: Field, shard: str) -> dict | None:
    if not path or not os.path.exists(path):
        return None
    with open(path) as fh:
        state = json.load(fh)
    for key, want in (
        ("matroid", digest), ("policy", policy), ("field", field.name), ("shard", shard),
    ):
        if state.get(key) != want:
            raise BadParams(f"checkpoint {path} was written for a different {key}")
    return state


def _save_checkpoint(path, digest, policy, field, shard, cursor, tallies,
                     basis_indices, first_basis):
    state = {
        "matroid": digest,
        "policy": policy,
        "field": field.name,
        "shard": shard,
        "cursor": cursor,
        "tallies": tallies,
        "basis_indices": list(basis_indices),
        "first_basis": first_basis,
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(state, fh)
    os.replace(tmp, path)


def _parse_shard(shard) -> tuple:
    if shard is None:
        return (0, 1)
    if isinstance(shard, str):
        parts = shard.split("/")
        if len(parts) != 2:
            raise BadParams("shard must look like i/m")
        shard = (int(parts[0]), int(parts[1]))
    i, m = shard
    if m < 1 or not 0 <= i < m:
        raise BadParams(f"shard index {i} outside [0, {m})")
    return (i, m)


def search_orderings(
    matroid: Matroid,
    field: Field,
    policy: str = "exhaustive",
    workers: int | None = None,
    shard=None,
    checkpoint_path: str | None = None,
    checkpoint_every: int = DEFAULT_CHECKPOINT_EVERY,
    chunk_size: int = 500,
) -> SearchReport:
    """Run the basis decision over standard orderings chosen by the policy.

    Policies: 'exhaustive' (every index ascending), 'sample:COUNT:SEED'
    (sorted sample without replacement, reproducible from the seed),
    'first-hit' (ascending scan, stop at the first basis).  shard="i/m"
    restricts the run to the i-th of m contiguous blocks of the policy's
    index list, for splitting work across machines.  Results are merged in
    index order, so tallies do not depend on the worker count.  Checkpoints
    store the cursor into the (sharded) index list and are only accepted
    back for the same matroid, policy, field and shard.
    """
    total = count_standard_orderings(matroid)
    indices = _policy_indices(policy, total)
    s_i, s_m = _parse_shard(shard)
    shard_text = f"{s_i}/{s_m}"
    if s_m > 1:
        lo = s_i * len(indices) // s_m
        hi = (s_i + 1) * len(indices) // s_m
        indices = indices[lo:hi]
    domain = len(indices)
    digest = _matroid_digest(matroid)
    if workers is None:
        workers = int(os.environ.get("MATROIDLAB_WORKERS", "1"))
    if workers < 1:
        raise BadParams("workers must be >= 1")
    tallies = {"basis": 0, "wrong_cardinality": 0, "lsop_invalid": 0, "not_independent": 0}
    basis_indices: list = []
    first_basis = None
    cursor = 0
    state = (
        _load_checkpoint(checkpoint_path, digest, policy, field, shard_text)
        if checkpoint_path
        else None
    )
    if state is not None:
        cursor = state["cursor"]
        tallies.update(state["tallies"])
        basis_indices = list(state["basis_indices"])
        first_basis = state["first_basis"]
    stop_early = policy == "first-hit"
    done_early = bool(stop_early and first_basis is not None)

    def absorb(batch) -> bool:
        nonlocal first_basis
        for k, verdict, reason in batch:
            key = "basis" if verdict == "basis" else reason
            tallies[key] = tallies.get(key, 0) + 1
            if verdict == "basis":
                if len(basis_indices) < BASIS_INDEX_CAP:
                    basis_indices.append(k)
                if first_basis is None:
                    first_basis = {
                        "index": k,
                        "ordering": list(standard_ordering_at(matroid, k).labels),
                    }
                if stop_early:
                    return True
        return False

    since_save = 0

    def maybe_save(force=False):
        nonlocal since_save
        if checkpoint_path and (force or since_save >= checkpoint_every):
            _save_checkpoint(
                checkpoint_path, digest, policy, field, shard_text, cursor,
                tallies, basis_indices, first_basis,
            )
            since_save = 0

    if not done_early:
        if workers == 1:
            while cursor < domain:
                batch = [_check_one(matroid, indices[cursor], field)]
                cursor += 1
                since_save += 1
                hit = absorb(batch)
                maybe_save()
                if hit:
                    done_early = True
                    break
        else:
            data = matroid.to_json()
            with ProcessPoolExecutor(max_workers=workers) as pool:
                while cursor < domain and not done_early:
                    window = []
                    w_cursor = cursor
                    while w_cursor < domain and len(window) < workers * 4:
                        chunk = [indices[i] for i in range(w_cursor, min(w_cursor + chunk_size, domain))]
                        window.append(chunk)
                        w_cursor += len(chunk)
                    futures = [
                        pool.submit(_search_chunk, (data, field.name, chunk)) for chunk in window
                    ]
                    for fut, chunk in zip(futures, window):
                        batch = fut.result()
                        cursor += len(chunk)
                        since_save += len(chunk)
                        if absorb(batch):
                            done_early = True
                            break
                        maybe_save()
    maybe_save(force=True)
    completed = done_early or cursor >= domain
    return SearchReport(
        policy=policy,
        field=field.name,
        shard=shard_text,
        total_orderings=total,
        domain=domain,
        checked=cursor,
        tallies=tallies,
        basis_indices=tuple(basis_indices),
        first_basis=first_basis,
        completed=completed,
    )
