"""Exact scalars and sparse matrices between tensor words.

Everything here is exact: scalars are python ints / Fractions over Q or
residues modulo a prime p.  A :class:`Mor` is a sparse matrix whose rows
and columns are indexed by the basis of a tensor word; the combined index
of ``x_i (x) y_j`` is ``i * dim(Y) + j`` (leftmost factor most significant).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping


class SignatureError(TypeError):
    """Raised when two morphisms cannot be composed or compared."""


class NotIdempotentError(ValueError):
    def __init__(self, row, col, value):
        super().__init__(f"not idempotent: (P*P - P)[{row},{col}] = {value}")
        self.row, self.col, self.value = row, col, value


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


# ---------------------------------------------------------------- fields


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: ``FieldSpec('Q')`` or ``FieldSpec('GF', p)``."""

    kind: str = "Q"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "GF"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "GF" and not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): characteristic must be prime")
        if self.kind == "Q" and self.p != 0:
            raise ValueError("Q has characteristic 0")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip()
        if t in ("Q", "QQ", "rationals"):
            return cls("Q")
        if t.startswith("GF(") and t.endswith(")"):
            return cls("GF", int(t[3:-1]))
        raise ValueError(f"cannot parse field {text!r}")

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.p})"

    # scalar handling

    def __call__(self, x):
        """Canonical form of ``x`` (int, Fraction or scalar string)."""
        if isinstance(x, str):
            return self.parse_scalar(x)
        if self.kind == "Q":
            if isinstance(x, int):
                return x
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no value in {self}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "Q":
            return self(Fraction(1) / x)
        return pow(x, -1, self.p)

    def parse_scalar(self, s: str):
        s = s.strip()
        try:
            v = Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar {s!r}") from exc
        return self(v)

    def format_scalar(self, x) -> str:
        x = self(x)
        return str(x)


QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("GF", p)


# ---------------------------------------------------------------- words


@dataclass(frozen=True)
class Word:
    """A tensor word: letters with their dimensions.  ``Word()`` is the unit."""

    letters: tuple = ()
    dims: tuple = ()

    def __post_init__(self):
        if len(self.letters) != len(self.dims):
            raise ValueError("letters and dims differ in length")

    @property
    def dim(self) -> int:
        n = 1
        for d in self.dims:
            n *= d
        return n

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters, self.dims + other.dims)

    def __getitem__(self, k) -> "Word":
        if isinstance(k, int):
            k = slice(k, k + 1 if k != -1 else None)
        return Word(self.letters[k], self.dims[k])

    def reversed(self) -> "Word":
        return Word(self.letters[::-1], self.dims[::-1])

    def __str__(self):
        return "[" + ",".join(self.letters) + "]"

    def __repr__(self):
        return f"Word({str(self)})"


UNIT = Word()


def plain(n: int, letter: str = "V") -> Word:
    """A one-letter word of dimension ``n``."""
    return Word((letter,), (n,))


def unravel(index: int, dims: Iterable[int]) -> tuple:
    """Multi-index of a combined basis index."""
    dims = tuple(dims)
    out = []
    for d in reversed(dims):
        index, r = divmod(index, d)
        out.append(r)
    return tuple(reversed(out))


def ravel(multi: Iterable[int], dims: Iterable[int]) -> int:
    i = 0
    for k, d in zip(multi, dims):
        i = i * d + k
    return i


# ---------------------------------------------------------------- matrices


class Mor:
    """Exact sparse matrix ``dom -> cod`` over a field.

    Storage is a dict of columns, each column a dict ``row -> value`` with
    no explicit zeros.  Instances are treated as immutable.
    """

    __slots__ = ("dom", "cod", "field", "_cols", "_hash", "_table")

    def __init__(self, dom: Word, cod: Word, cols: Mapping, field: FieldSpec = QQ,
                 _trusted: bool = False):
        self.dom, self.cod, self.field = dom, cod, field
        if _trusted:
            self._cols = cols
        else:
            clean = {}
            n, m = cod.dim, dom.dim
            for j, col in cols.items():
                if not 0 <= j < m:
                    raise IndexError(f"column {j} out of range for {dom}")
                c = {}
                for i, v in col.items():
                    if not 0 <= i < n:
                        raise IndexError(f"row {i} out of range for {cod}")
                    v = field(v)
                    if v != 0:
                        c[i] = v
                if c:
                    clean[j] = c
            self._cols = clean
        self._hash = None
        self._table = None

    # construction

    @classmethod
    def from_rows(cls, rows, dom: Word, cod: Word, field: FieldSpec = QQ) -> "Mor":
        rows = [list(r) for r in rows]
        if len(rows) != cod.dim or any(len(r) != dom.dim for r in rows):
            shape = (len(rows), len(rows[0]) if rows else 0)
            raise ValueError(
                f"shape {shape} does not match {cod.dim}x{dom.dim} for {dom} -> {cod}")
        cols = {}
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                v = field(v)
                if v != 0:
                    cols.setdefault(j, {})[i] = v
        return cls(dom, cod, cols, field, _trusted=True)

    @classmethod
    def identity(cls, w: Word, field: FieldSpec = QQ) -> "Mor":
        return cls(w, w, {j: {j: 1} for j in range(w.dim)}, field, _trusted=True)

    @classmethod
    def zero(cls, dom: Word, cod: Word, field: FieldSpec = QQ) -> "Mor":
        return cls(dom, cod, {}, field, _trusted=True)

    @classmethod
    def from_function(cls, dom: Word, cod: Word, fn, field: FieldSpec = QQ) -> "Mor":
        """Build from ``fn(j) -> {i: value}`` giving the image of basis vector j."""
        return cls(dom, cod, {j: fn(j) for j in range(dom.dim)}, field)

    # access

    @property
    def shape(self):
        return (self.cod.dim, self.dom.dim)

    def column(self, j: int) -> dict:
        return self._cols.get(j, {})

    def columns(self) -> Iterator:
        return iter(self._cols.items())

    def __getitem__(self, ij):
        i, j = ij
        return self._cols.get(j, {}).get(i, 0)

    def table(self) -> dict:
        """Map from domain multi-index to ``[(codomain multi-index, value)]``."""
        if self._table is None:
            dd, cd = self.dom.dims, self.cod.dims
            self._table = {unravel(j, dd): [(unravel(i, cd), v) for i, v in col.items()]
                           for j, col in self._cols.items()}
        return self._table

    def nnz(self) -> int:
        return sum(len(c) for c in self._cols.values())

    def to_rows(self) -> list:
        rows = [[0] * self.dom.dim for _ in range(self.cod.dim)]
        for j, col in self._cols.items():
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def to_array(self):
        import numpy as np

        a = np.zeros(self.shape, dtype=object)
        for j, col in self._cols.items():
            for i, v in col.items():
                a[i, j] = v
        return a

    # comparisons

    def same_signature(self, other: "Mor") -> bool:
        return self.dom == other.dom and self.cod == other.cod

    def __eq__(self, other):
        if not isinstance(other, Mor):
            return NotImplemented
        return self.same_signature(other) and self._cols == other._cols

    def __hash__(self):
        if self._hash is None:
            items = tuple(sorted((j, tuple(sorted(c.items()))) for j, c in self._cols.items()))
            self._hash = hash((self.dom, self.cod, items))
        return self._hash

    def first_difference(self, other: "Mor"):
        """``(row, col, lhs, rhs)`` of the first differing entry, or None.

        Entries are scanned in row-major order.
        """
        if not self.same_signature(other):
            raise SignatureError(
                f"cannot compare {self.dom}->{self.cod} with {other.dom}->{other.cod}")
        best = None
        for j in set(self._cols) | set(other._cols):
            a, b = self._cols.get(j, {}), other._cols.get(j, {})
            for i in set(a) | set(b):
                if a.get(i, 0) != b.get(i, 0) and (best is None or (i, j) < best):
                    best = (i, j)
        if best is None:
            return None
        i, j = best
        return i, j, self[i, j], other[i, j]

    # linear structure

    def _check(self, other):
        if not self.same_signature(other):
            raise SignatureError(
                f"signature mismatch: {self.dom}->{self.cod} vs {other.dom}->{other.cod}")

    def __add__(self, other: "Mor") -> "Mor":
        self._check(other)
        f = self.field
        cols = {j: dict(c) for j, c in self._cols.items()}
        for j, c in other._cols.items():
            t = cols.setdefault(j, {})
            for i, v in c.items():
                t[i] = t.get(i, 0) + v
        return Mor(self.dom, self.cod, cols, f)

    def __neg__(self) -> "Mor":
        return self.scale(-1)

    def __sub__(self, other: "Mor") -> "Mor":
        return self + (-other)

    def scale(self, c) -> "Mor":
        c = self.field(c)
        return Mor(self.dom, self.cod,
                   {j: {i: v * c for i, v in col.items()} for j, col in self._cols.items()},
                   self.field)

    # shorthand operators

    def __matmul__(self, other: "Mor") -> "Mor":
        return compose(self, other)

    def __mul__(self, other: "Mor") -> "Mor":
        return tensor(self, other)

    def retype(self, dom: Word = None, cod: Word = None) -> "Mor":
        """Same matrix with relabelled (dimension-compatible) signature."""
        dom = self.dom if dom is None else dom
        cod = self.cod if cod is None else cod
        if dom.dim != self.dom.dim or cod.dim != self.cod.dim:
            raise SignatureError("retype must preserve dimensions")
        return Mor(dom, cod, self._cols, self.field, _trusted=True)

    @property
    def T(self) -> "Mor":
        return transpose(self)

    def __repr__(self):
        return f"Mor({self.dom} -> {self.cod}, nnz={self.nnz()}, {self.field})"

    def __str__(self):
        return format_matrix(self)


def compose(f: Mor, g: Mor) -> Mor:
    """``f o g`` (apply g first).  Requires ``dom(f) == cod(g)``."""
    if f.dom != g.cod:
        raise SignatureError(f"cannot compose: dom(f) = {f.dom} but cod(g) = {g.cod}")
    if f.field != g.field:
        raise SignatureError(f"field mismatch: {f.field} vs {g.field}")
    field = f.field
    fcols = f._cols
    out = {}
    for j, gcol in g._cols.items():
        acc = {}
        for k, gv in gcol.items():
            fcol = fcols.get(k)
            if not fcol:
                continue
            for i, fv in fcol.items():
                acc[i] = acc.get(i, 0) + fv * gv
        col = {}
        for i, v in acc.items():
            v = field(v)
            if v != 0:
                col[i] = v
        if col:
            out[j] = col
    return Mor(g.dom, f.cod, out, field, _trusted=True)


def tensor(f: Mor, g: Mor) -> Mor:
    """Kronecker product ``f (x) g``."""
    if f.field != g.field:
        raise SignatureError(f"field mismatch: {f.field} vs {g.field}")
    field = f.field
    gm, gn = g.dom.dim, g.cod.dim
    out = {}
    for j1, c1 in f._cols.items():
        for j2, c2 in g._cols.items():
            col = {}
            for i1, v1 in c1.items():
                base = i1 * gn
                for i2, v2 in c2.items():
                    col[base + i2] = field(v1 * v2)
            out[j1 * gm + j2] = col
    return Mor(f.dom + g.dom, f.cod + g.cod, out, field, _trusted=True)


def tensor_all(*fs: Mor) -> Mor:
    out = fs[0]
    for f in fs[1:]:
        out = tensor(out, f)
    return out


def compose_all(*fs: Mor) -> Mor:
    """``compose_all(f, g, h) = f o g o h``."""
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = compose(f, out)
    return out


def transpose(f: Mor) -> Mor:
    cols = {}
    for j, col in f._cols.items():
        for i, v in col.items():
            cols.setdefault(i, {})[j] = v
    return Mor(f.cod, f.dom, cols, f.field, _trusted=True)


def identity(w: Word, field: FieldSpec = QQ) -> Mor:
    return Mor.identity(w, field)


def permute_factors(w: Word, perm, field: FieldSpec = QQ) -> Mor:
    """Permutation matrix moving factor ``perm[k]`` of ``w`` to position ``k``."""
    perm = tuple(perm)
    target = Word(tuple(w.letters[p] for p in perm), tuple(w.dims[p] for p in perm))
    cols = {}
    for j in range(w.dim):
        mi = unravel(j, w.dims)
        cols[j] = {ravel((mi[p] for p in perm), target.dims): 1}
    return Mor(w, target, cols, field, _trusted=True)


def reversal(w: Word, field: FieldSpec = QQ) -> Mor:
    """``R_w : w -> reverse(w)``, the factor reversal permutation."""
    return permute_factors(w, range(len(w) - 1, -1, -1), field)


# ---------------------------------------------------------------- idempotents


def rank_columns(f: Mor) -> list:
    """Indices of the greedy left-to-right basis among the columns of ``f``."""
    field = f.field
    pivots = []          # (pivot row, reduced column)
    chosen = []
    for j in range(f.dom.dim):
        v = dict(f.column(j))
        for prow, pcol in pivots:
            c = v.get(prow, 0)
            if c:
                for i, x in pcol.items():
                    v[i] = field(v.get(i, 0) - c * x)
                v = {i: x for i, x in v.items() if x != 0}
        if v:
            prow = min(v)
            inv = field.inv(v[prow])
            v = {i: field(x * inv) for i, x in v.items()}
            # keep previously stored pivot columns reduced at the new pivot
            pivots = [(r, _eliminate(c, v, prow, field)) for r, c in pivots]
            pivots.append((prow, v))
            chosen.append(j)
    return chosen


def _eliminate(col, pivot, prow, field):
    c = col.get(prow, 0)
    if not c:
        return col
    out = dict(col)
    for i, x in pivot.items():
        out[i] = field(out.get(i, 0) - c * x)
    return {i: x for i, x in out.items() if x != 0}


def rank(f: Mor) -> int:
    return len(rank_columns(f))


def solve_columns(basis: Mor, target: Mor) -> Mor:
    """The unique ``X`` with ``basis o X = target`` (basis has independent columns)."""
    field = basis.field
    n = basis.dom.dim
    # Gauss-Jordan on the augmented system, rows = cod basis
    rows = basis.to_rows()
    trows = target.to_rows()
    m = len(rows)
    aug = [rows[i] + trows[i] for i in range(m)]
    r = 0
    where = []
    for c in range(n):
        p = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if p is None:
            raise ValueError("basis columns are dependent")
        aug[r], aug[p] = aug[p], aug[r]
        inv = field.inv(aug[r][c])
        aug[r] = [field(x * inv) for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                k = aug[i][c]
                aug[i] = [field(a - k * b) for a, b in zip(aug[i], aug[r])]
        where.append(r)
        r += 1
    for i in range(r, m):
        if any(x != 0 for x in aug[i][n:]):
            raise ValueError("target not in the column span")
    sol = [aug[where[c]][n:] for c in range(n)]
    return Mor.from_rows(sol, target.dom, basis.dom, field)


def split_idempotent(P: Mor, letter: str = "M"):
    """Split an idempotent ``P = inj o proj`` with ``proj o inj = id``.

    The retract basis consists of the columns of P chosen greedily from
    left to right.  Returns ``(inj, proj, rank)``.
    """
    if P.dom != P.cod:
        raise SignatureError(f"idempotent must be an endomorphism, got {P.dom} -> {P.cod}")
    diff = compose(P, P).first_difference(P)
    if diff is not None:
        i, j, a, b = diff
        raise NotIdempotentError(i, j, P.field(a - b))
    cols = rank_columns(P)
    r = len(cols)
    M = Word((letter,), (r,))
    inj = Mor(M, P.cod, {k: P.column(j) for k, j in enumerate(cols)}, P.field, _trusted=True)
    if r == 0:
        return inj, Mor.zero(P.dom, M, P.field), 0
    proj = solve_columns(inj, P).retype(cod=M)
    return inj, proj, r


# ---------------------------------------------------------------- text forms


def format_matrix(f: Mor) -> str:
    fs = f.field
    return "\n".join(" ".join(fs.format_scalar(v) for v in row) for row in f.to_rows())


def matrix_to_strings(f: Mor) -> list:
    fs = f.field
    return [[fs.format_scalar(v) for v in row] for row in f.to_rows()]
