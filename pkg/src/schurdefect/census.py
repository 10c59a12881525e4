"""Exhaustive census of Lie algebra structure tensors over GF(2)/GF(3).

Every alternating tensor on F^n is encoded as a tensor_id: little-endian
base-|F| digits over the pairs (1,2), (1,3), ..., (n-1,n), each pair
contributing n coefficient digits. Candidates are filtered by the Jacobi
identity and nilpotency; surviving tensors get full invariant reports and
classification verdicts through the exact algebra stack.

Two filter engines exist: a vectorized bit-packed one for GF(2) (subspace
spans live in per-candidate bitsets over the 2^n vectors) and a plain-Python
digit engine for GF(3); they are cross-checked in the test suite. Rows are
always produced by the exact stack, never by the filters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from multiprocessing import Pool

import numpy as np

from .algebra import LieAlgebra
from .classify import classify_t012
from .errors import BudgetExceeded
from .fields import Field, GF, PrimeField
from .invariants import report

CSV_HEADER = "tensor_id,n,dim_derived,dim_center,d,t,verdict"

# budget guard: anything past these sizes must be forced explicitly
_MAX_DIM = {2: 4, 3: 3}

_CHUNK = 1 << 20


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def tensor_space_size(n: int, field: PrimeField) -> int:
    return field.p ** (n * len(_pairs(n)))


def decode_tensor(tensor_id: int, n: int, field: PrimeField) -> dict:
    """tensor_id -> sparse bracket table {(i, j): {k: residue}}."""
    p = field.p
    table: dict = {}
    t = tensor_id
    for (i, j) in _pairs(n):
        cs = {}
        for k in range(1, n + 1):
            t, digit = divmod(t, p)
            if digit:
                cs[k] = digit
        if cs:
            table[(i, j)] = cs
    return table


def encode_tensor(n: int, field: PrimeField, table: dict) -> int:
    """Inverse of decode_tensor."""
    p = field.p
    out = 0
    weight = 1
    for (i, j) in _pairs(n):
        cs = table.get((i, j), {})
        for k in range(1, n + 1):
            out += (cs.get(k, 0) % p) * weight
            weight *= p
    return out


def algebra_from_tensor(tensor_id: int, n: int, field: PrimeField,
                        name: str | None = None) -> LieAlgebra:
    """Decode and validate; raises NotALieAlgebra for non-Lie tensors."""
    return LieAlgebra(field, n, decode_tensor(tensor_id, n, field), name=name)


@dataclass(frozen=True)
class CensusRow:
    tensor_id: int
    n: int
    dim_derived: int
    dim_center: int
    d: int
    t: int
    verdict: str

    def csv(self) -> str:
        return (f"{self.tensor_id},{self.n},{self.dim_derived},"
                f"{self.dim_center},{self.d},{self.t},{self.verdict}")


@dataclass
class CensusSummary:
    n: int
    p: int
    candidates: int
    lie_count: int
    nilpotent_count: int
    t_tallies: dict[int, int]
    rows: list[CensusRow] = dc_field(default_factory=list)

    def csv_lines(self) -> list[str]:
        return [CSV_HEADER] + [r.csv() for r in self.rows]

    def write_csv(self, path) -> None:
        with open(path, "w") as fh:
            fh.write("\n".join(self.csv_lines()) + "\n")


@dataclass
class BoundsVerdict:
    passed: bool
    checked: int
    failures: list[str]


# ---------------------------------------------------------------------------
# plain-Python digit engine (any small prime)
# ---------------------------------------------------------------------------

def _digits(tensor_id: int, ndigits: int, p: int) -> list[int]:
    out = []
    t = tensor_id
    for _ in range(ndigits):
        t, d = divmod(t, p)
        out.append(d)
    return out


def _filter_range_python(n: int, p: int, lo: int, hi: int):
    """Jacobi + nilpotency filter; returns (lie_count, nilpotent_ids)."""
    pairs = _pairs(n)
    npairs = len(pairs)
    pidx = {pq: a for a, pq in enumerate(pairs)}
    triples = list(itertools.combinations(range(1, n + 1), 3))
    zero = (0,) * n

    def basis_bracket(tab, i, j):
        if i == j:
            return zero
        if i < j:
            return tab[pidx[(i, j)]]
        return tuple((-c) % p for c in tab[pidx[(j, i)]])

    def ad_vec(tab, i, v):
        acc = [0] * n
        for l in range(1, n + 1):
            c = v[l - 1]
            if c:
                bb = basis_bracket(tab, i, l)
                for k in range(n):
                    acc[k] = (acc[k] + c * bb[k]) % p
        return acc

    def jacobi_ok(tab):
        for (i, j, k) in triples:
            a = ad_vec(tab, i, basis_bracket(tab, j, k))
            b = ad_vec(tab, j, basis_bracket(tab, k, i))
            c = ad_vec(tab, k, basis_bracket(tab, i, j))
            if any((a[s] + b[s] + c[s]) % p for s in range(n)):
                return False
        return True

    def span(vectors):
        basis = []
        for v in vectors:
            v = list(v)
            for bv, piv in basis:
                f = v[piv]
                if f:
                    inv = pow(bv[piv], p - 2, p)
                    fb = f * inv % p
                    v = [(x - fb * y) % p for x, y in zip(v, bv)]
            piv = next((s for s in range(n) if v[s]), None)
            if piv is not None:
                basis.append((v, piv))
        return basis

    def nilpotent(tab):
        basis = span([t for t in tab if any(t)])
        d = len(basis)
        while True:
            if d == 0:
                return True
            if d == n:
                return False
            nxt = []
            for bv, _ in basis:
                for i in range(1, n + 1):
                    w = ad_vec(tab, i, bv)
                    if any(w):
                        nxt.append(w)
            nbasis = span(nxt)
            nd = len(nbasis)
            if nd == d:
                return False
            d, basis = nd, nbasis

    lie = 0
    nilp_ids = []
    ndigits = n * npairs
    for tid in range(lo, hi):
        digits = _digits(tid, ndigits, p)
        tab = [tuple(digits[a * n:(a + 1) * n]) for a in range(npairs)]
        if jacobi_ok(tab):
            lie += 1
            if nilpotent(tab):
                nilp_ids.append(tid)
    return lie, nilp_ids


# ---------------------------------------------------------------------------
# vectorized GF(2) engine (n <= 4: subspace bitsets over the 2^n vectors)
# ---------------------------------------------------------------------------

_gf2_tables: dict[int, tuple] = {}


def _gf2_table(n: int):
    cached = _gf2_tables.get(n)
    if cached is not None:
        return cached
    V = 1 << n
    subspaces = {1: []}
    frontier = [1]
    while frontier:
        new = []
        for bs in frontier:
            basis = subspaces[bs]
            for v in range(1, V):
                if (bs >> v) & 1:
                    continue
                shifted = 0
                t = bs
                while t:
                    w = (t & -t).bit_length() - 1
                    t &= t - 1
                    shifted |= 1 << (w ^ v)
                nbs = bs | shifted
                if nbs not in subspaces:
                    subspaces[nbs] = basis + [v]
                    new.append(nbs)
        frontier = new
    dim = np.zeros(1 << V, dtype=np.uint8)
    basis_tab = np.zeros((1 << V, n), dtype=np.uint32)
    for bs, basis in subspaces.items():
        dim[bs] = len(basis)
        for r, v in enumerate(basis):
            basis_tab[bs, r] = v
    butterflies = []
    for j in range(n):
        s = 1 << j
        lo = 0
        for v in range(V):
            if not (v & s):
                lo |= 1 << v
        butterflies.append((np.uint32(lo), np.uint32(((1 << V) - 1) ^ lo), s))
    cached = (dim, basis_tab, butterflies)
    _gf2_tables[n] = cached
    return cached


def _gf2_close(bs, masks, n, butterflies):
    for m in masks:
        t = bs
        for j in range(n):
            lo, hi, s = butterflies[j]
            cond = ((m >> j) & 1).astype(bool)
            shifted = ((t & lo) << s) | ((t & hi) >> s)
            t = np.where(cond, shifted, t)
        bs = bs | t
    return bs


def _gf2_ad(i, mask, B, n, pidx):
    acc = np.zeros_like(mask)
    for l in range(1, n + 1):
        if l == i:
            continue
        bit = (mask >> (l - 1)) & 1
        acc = acc ^ (B[pidx[(min(i, l), max(i, l))]] * bit)
    return acc


def _filter_range_gf2(n: int, lo: int, hi: int):
    pairs = _pairs(n)
    pidx = {pq: a for a, pq in enumerate(pairs)}
    dim_tab, basis_tab, butterflies = _gf2_table(n)
    vmask = np.uint64((1 << n) - 1)
    lie = 0
    nilp_ids: list[int] = []
    for start in range(lo, hi, _CHUNK):
        stop = min(start + _CHUNK, hi)
        T = np.arange(start, stop, dtype=np.uint64)
        B = [((T >> np.uint64(n * a)) & vmask).astype(np.uint32)
             for a in range(len(pairs))]
        ok = np.ones(T.shape, dtype=bool)
        for (i, j, k) in itertools.combinations(range(1, n + 1), 3):
            jac = (_gf2_ad(i, B[pidx[(j, k)]], B, n, pidx)
                   ^ _gf2_ad(j, B[pidx[(i, k)]], B, n, pidx)
                   ^ _gf2_ad(k, B[pidx[(i, j)]], B, n, pidx))
            ok &= jac == 0
        lie_idx = np.nonzero(ok)[0]
        lie += len(lie_idx)
        if len(lie_idx) == 0:
            continue
        Bs = [b[lie_idx] for b in B]
        bs = _gf2_close(np.ones(len(lie_idx), dtype=np.uint32), Bs, n, butterflies)
        dims = dim_tab[bs]
        nilp = dims == 0
        undecided = np.nonzero((dims > 0) & (dims < n))[0]
        cur = bs
        while len(undecided):
            sub_bs = cur[undecided]
            Bsub = [b[undecided] for b in Bs]
            masks = []
            for r in range(n):
                bm = basis_tab[sub_bs, r]
                for i in range(1, n + 1):
                    masks.append(_gf2_ad(i, bm, Bsub, n, pidx))
            nbs = _gf2_close(np.ones(len(undecided), dtype=np.uint32), masks,
                             n, butterflies)
            nd = dim_tab[nbs]
            pd = dim_tab[sub_bs]
            nilp[undecided[nd == 0]] = True
            keep = (nd > 0) & (nd < pd)
            cur[undecided] = nbs
            undecided = undecided[keep]
        nilp_ids.extend(int(t) for t in T[lie_idx[nilp]])
    return lie, nilp_ids


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

def _rows_for_ids(n: int, field: PrimeField, ids) -> list[CensusRow]:
    rows = []
    for tid in ids:
        L = algebra_from_tensor(tid, n, field)  # re-validates Jacobi
        rep = report(L)
        if rep.t is None:
            raise ArithmeticError(
                f"tensor {tid} passed the nilpotency filter but is not nilpotent")
        verdict = classify_t012(L).label()
        rows.append(CensusRow(tid, n, rep.dim_derived, rep.dim_center,
                              rep.d_central_quotient, rep.t, verdict))
    return rows


def _census_worker(args):
    n, p, lo, hi = args
    field = GF(p)
    if p == 2 and n <= 4:
        lie, ids = _filter_range_gf2(n, lo, hi)
    else:
        lie, ids = _filter_range_python(n, p, lo, hi)
    return lie, _rows_for_ids(n, field, ids)


def enumerate_algebras(n: int, field: Field, consumer=None, jobs: int = 1,
                       force: bool = False) -> CensusSummary:
    """Iterate every alternating tensor on F^n, filter by Jacobi and
    nilpotency, and report a CensusRow per nilpotent Lie algebra (in
    tensor_id order, identical for any jobs count)."""
    if not isinstance(field, PrimeField) or field.p not in (2, 3):
        raise ValueError("census enumeration supports GF(2) and GF(3) only")
    if n < 1:
        raise ValueError("census dimension must be at least 1")
    p = field.p
    if n > _MAX_DIM[p] and not force:
        raise BudgetExceeded(
            f"dim {n} over GF({p}) exceeds the budget guard "
            f"(max {_MAX_DIM[p]}); pass force=True to override")
    total = tensor_space_size(n, field)
    jobs = max(1, int(jobs))
    if jobs == 1 or total < 4 * jobs:
        results = [_census_worker((n, p, 0, total))]
    else:
        step = -(-total // jobs)
        ranges = [(n, p, lo, min(lo + step, total))
                  for lo in range(0, total, step)]
        with Pool(len(ranges)) as pool:
            results = pool.map(_census_worker, ranges)
    lie_count = 0
    rows: list[CensusRow] = []
    for lie, chunk in results:
        lie_count += lie
        rows.extend(chunk)
    tallies: dict[int, int] = {}
    for row in rows:
        tallies[row.t] = tallies.get(row.t, 0) + 1
        if consumer is not None:
            consumer(row)
    return CensusSummary(n=n, p=p, candidates=total, lie_count=lie_count,
                         nilpotent_count=len(rows), t_tallies=tallies, rows=rows)


def verify_bounds(summary: CensusSummary) -> BoundsVerdict:
    """Check the lower-bound propositions and the Moneyhun bound on every row."""
    failures = []
    for row in summary.rows:
        if row.t < 0:
            failures.append(f"tensor {row.tensor_id}: t = {row.t} < 0")
        if row.dim_derived >= 2 and row.t < 1:
            failures.append(f"tensor {row.tensor_id}: dim L^2 = "
                            f"{row.dim_derived} >= 2 but t = {row.t} < 1")
        if row.dim_derived >= 3 and row.t < 2:
            failures.append(f"tensor {row.tensor_id}: dim L^2 = "
                            f"{row.dim_derived} >= 3 but t = {row.t} < 2")
        if row.dim_derived >= 4 and row.t < 3:
            failures.append(f"tensor {row.tensor_id}: dim L^2 = "
                            f"{row.dim_derived} >= 4 but t = {row.t} < 3")
        q = row.n - row.dim_center
        if row.dim_derived > q * (q - 1) // 2:
            failures.append(f"tensor {row.tensor_id}: Moneyhun bound violated "
                            f"(dim L^2 = {row.dim_derived}, dim L/Z = {q})")
        if row.verdict == "COUNTEREXAMPLE":
            failures.append(f"tensor {row.tensor_id}: classification counterexample")
    return BoundsVerdict(passed=not failures, checked=len(summary.rows),
                         failures=failures)
