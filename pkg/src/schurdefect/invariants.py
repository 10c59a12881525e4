"""Invariants of a Lie algebra: derived subalgebra, centers, central series,
nilpotency class, minimal generator number, centralizers, the Moneyhun bound,
and the Schur defect t(L).

t(L) is the nonnegative integer with dim L/Z(L) = d * dim L^2 - t(L), where d
is the minimal generator number of L/Z(L). For nilpotent algebras d is a rank:
d(L/Z) = dim L/Z - dim (L^2+Z)/Z = dim L - dim(L^2 + Z), so t is computed from
three subspace dimensions without building the quotient algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LieAlgebra, product_subspace, quotient
from .errors import NotNilpotent
from .linalg import Matrix, Subspace, kernel, preimage, subspace_sum


@dataclass(frozen=True)
class InvariantReport:
    """Isomorphism-invariant fingerprint; equality is fingerprint equality."""

    dim: int
    dim_derived: int
    dim_center: int
    dim_second_center: int
    lcs_dims: tuple[int, ...]
    ucs_dims: tuple[int, ...]
    nilpotency_class: int | None
    d_central_quotient: int | None
    t: int | None
    dim_centralizer_derived: int


def _cached(L: LieAlgebra, key: str, builder):
    # algebras are immutable; derived invariants are cached on the instance
    value = L._cache.get(key)
    if value is None:
        value = L._cache[key] = builder(L)
    return value


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    return _cached(L, "derived", lambda a:
                   product_subspace(a, a.full_space(), a.full_space()))


def center(L: LieAlgebra) -> Subspace:
    """Joint kernel of all adjoint maps, as the kernel of the stacked
    (nonzero) rows of the n^2 x n adjoint system."""
    return _cached(L, "center", lambda a:
                   kernel(Matrix(a.field, _center_rows(a), a.dim)))


def _center_rows(L: LieAlgebra):
    """Rows (j, k) of the center system sum_i x_i c_{ij}^k = 0; zero rows and
    duplicates dropped."""
    f = L.field
    n = L.dim
    add, sub = f.add, f.sub
    rows: dict[tuple[int, int], list] = {}
    for (i, j), cs in L.brackets.items():
        for k, c in cs.items():
            r = rows.get((j, k))
            if r is None:
                r = rows[(j, k)] = [f.zero] * n
            r[i - 1] = add(r[i - 1], c)
            r = rows.get((i, k))
            if r is None:
                r = rows[(i, k)] = [f.zero] * n
            r[j - 1] = sub(r[j - 1], c)
    out = []
    seen = set()
    for r in rows.values():
        key = tuple(r)
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


def second_center(L: LieAlgebra) -> Subspace:
    """Preimage of Z(L/Z(L)) under the quotient projection."""
    z = center(L)
    if z.is_full():
        return z
    Q, proj = quotient(L, z)
    return preimage(proj.matrix, center(Q))


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    """L^1 = L, L^{i+1} = [L, L^i], listed until the first repeat."""
    def build(a: LieAlgebra):
        full = a.full_space()
        terms = [full]
        while True:
            nxt = product_subspace(a, full, terms[-1])
            if nxt == terms[-1]:
                break
            terms.append(nxt)
        return terms
    return _cached(L, "lcs", build)


def upper_central_series(L: LieAlgebra) -> list[Subspace]:
    """Z_1 = Z(L), Z_{i+1} = {x : [x, L] in Z_i}, listed until the first
    repeat (Z_0 = 0 is not listed). Same objects as the quotient-preimage
    description, computed by annihilator equations."""
    f = L.field
    n = L.dim
    # per-j sparse entries of the adjoint system: [x, e_j]_k = sum_i ent(j,k,i) x_i
    ents: dict[int, list[tuple[int, int, object]]] = {}
    neg = f.neg
    for (a, b), cs in L.brackets.items():
        for k, c in cs.items():
            ents.setdefault(b, []).append((k, a, c))
            ents.setdefault(a, []).append((k, b, neg(c)))
    def build(a: LieAlgebra):
        prev = Subspace.zero(f, n)
        terms: list[Subspace] = []
        add, mul = f.add, f.mul
        while True:
            eqs = prev.equations()
            rows = []
            seen = set()
            for j, entries in ents.items():
                for er in eqs.data:
                    row = [f.zero] * n
                    hit = False
                    for (k, i, c) in entries:
                        e = er[k - 1]
                        if e:
                            row[i - 1] = add(row[i - 1], mul(e, c))
                            hit = True
                    if hit and any(row):
                        key = tuple(row)
                        if key not in seen:
                            seen.add(key)
                            rows.append(row)
            nxt = kernel(Matrix(f, rows, n))
            if nxt == prev:
                break
            terms.append(nxt)
            prev = nxt
        return terms
    return _cached(L, "ucs", build)


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def nilpotency_class(L: LieAlgebra) -> int | None:
    """Least c with L^{c+1} = 0, or None when not nilpotent."""
    terms = lower_central_series(L)
    if terms[-1].dim != 0:
        return None
    return len(terms) - 1


def min_generators(L: LieAlgebra) -> int:
    """d = dim L - dim L^2, valid for nilpotent algebras."""
    if not is_nilpotent(L):
        raise NotNilpotent("minimal generator number requires a nilpotent algebra")
    return L.dim - derived_subalgebra(L).dim


def centralizer(L: LieAlgebra, u: Subspace) -> Subspace:
    """{x : [x, v] = 0 for every basis vector v of u}."""
    L.field.check_same(u.field)
    if u.ambient_dim != L.dim:
        raise ValueError("subspace ambient dimension must equal the algebra dimension")
    f = L.field
    n = L.dim
    add, sub, mul = f.add, f.sub, f.mul
    rows = []
    seen = set()
    for v in u.basis:
        vrows: dict[int, list] = {}
        for (i, j), cs in L.brackets.items():
            vj = v[j - 1]
            if vj:
                for k, c in cs.items():
                    r = vrows.get(k)
                    if r is None:
                        r = vrows[k] = [f.zero] * n
                    r[i - 1] = add(r[i - 1], mul(c, vj))
            vi = v[i - 1]
            if vi:
                for k, c in cs.items():
                    r = vrows.get(k)
                    if r is None:
                        r = vrows[k] = [f.zero] * n
                    r[j - 1] = sub(r[j - 1], mul(c, vi))
        for r in vrows.values():
            if any(r):
                key = tuple(r)
                if key not in seen:
                    seen.add(key)
                    rows.append(r)
    return kernel(Matrix(f, rows, n))


def _d_and_t(L: LieAlgebra, z: Subspace, l2: Subspace) -> tuple[int, int]:
    d = L.dim - subspace_sum(l2, z).dim
    t = d * l2.dim - (L.dim - z.dim)
    return d, t


def t_invariant(L: LieAlgebra) -> int:
    """Schur defect t(L) = d(L/Z(L)) * dim L^2 - dim L/Z(L), for nilpotent L."""
    if not is_nilpotent(L):
        raise NotNilpotent("t(L) is defined for nilpotent algebras only")
    return _d_and_t(L, center(L), derived_subalgebra(L))[1]


def moneyhun_check(L: LieAlgebra) -> bool:
    """dim L^2 <= q(q-1)/2 where q = dim L/Z(L)."""
    q = L.dim - center(L).dim
    return derived_subalgebra(L).dim <= q * (q - 1) // 2


def report(L: LieAlgebra) -> InvariantReport:
    l2 = derived_subalgebra(L)
    lcs = lower_central_series(L)
    ucs = upper_central_series(L)
    z = ucs[0] if ucs else Subspace.zero(L.field, L.dim)
    nilp = lcs[-1].dim == 0
    cls = len(lcs) - 1 if nilp else None
    if ucs:
        z2_dim = ucs[1].dim if len(ucs) > 1 else ucs[0].dim
    else:
        z2_dim = 0
    if nilp:
        d, t = _d_and_t(L, z, l2)
    else:
        d, t = None, None
    return InvariantReport(
        dim=L.dim,
        dim_derived=l2.dim,
        dim_center=z.dim,
        dim_second_center=z2_dim,
        lcs_dims=tuple(s.dim for s in lcs),
        ucs_dims=tuple(s.dim for s in ucs),
        nilpotency_class=cls,
        d_central_quotient=d,
        t=t,
        dim_centralizer_derived=centralizer(L, l2).dim,
    )
