"""Tensor words, braidings and a small language for string diagrams.

Three ways of writing a morphism are supported:

* plain composition of :class:`~xbialg.exact_linear.Mor` values,
* the parenthesised expression language (``parse_expr`` / ``evaluate``),
  e.g. ``"(m1 . (id[B1] x m1))"``,
* *row notation* (:func:`diagram`), one string per horizontal layer read
  from top (domain) to bottom (codomain), e.g.
  ``diagram(d, "12", "ld rd", "| x |", "m m")``.

Row tokens, each consuming strands from the left:

====================  =====================================================
``|``                 identity on one strand
``m`` / ``d``         multiplication / comultiplication (B1 or B2 by type)
``u1`` ``u2``         units (consume nothing); ``e`` counit (by type)
``lu ru ld rd``       the actions mu_l, mu_r and coactions nu_l, nu_r
``s`` / ``r``         cocycle sigma and cycle rho
``x`` / ``xi``        braiding / inverse braiding of two strands
``x:a,b``             braiding of the next ``a`` strands past ``b`` strands
``p12 p21 p11 p22``   the phi morphisms; ``sh`` sigma-hat, ``rh`` rho-hat
any ``env`` key       a user supplied box, arity from its domain
====================  =====================================================
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Mapping

from .exact_linear import (
    QQ, FieldSpec, Mor, SignatureError, UNIT, Word, compose, identity, ravel,
    reversal, tensor, transpose, unravel,
)

LETTERS = ("B1", "B2")


# ---------------------------------------------------------------- braidings


class BraidingError(ValueError):
    pass


class Braiding:
    """Generator braidings Psi_{X,Y} for single letters, extended to words.

    ``kind`` is ``"flip"``, ``"sign"`` (graded: ``degrees[letter]`` lists a
    0/1 degree per basis vector) or ``"explicit"`` (``generators[(X, Y)]``
    with matching ``inverses``).
    """

    def __init__(self, kind="flip", degrees=None, generators=None, inverses=None):
        if kind not in ("flip", "sign", "explicit"):
            raise BraidingError(f"unknown braiding kind {kind!r}")
        self.kind = kind
        self.degrees = {k: tuple(v) for k, v in (degrees or {}).items()}
        self.generators = dict(generators or {})
        self.inverses = dict(inverses or {})
        if kind == "explicit":
            for key, g in self.generators.items():
                if key not in self.inverses:
                    raise BraidingError(f"missing inverse for generator {key}")
                inv = self.inverses[key]
                if compose(inv, g) != identity(g.dom, g.field) or \
                        compose(g, inv) != identity(g.cod, g.field):
                    raise BraidingError(f"generator {key} and its inverse do not invert")
        self._cache = {}

    def __eq__(self, other):
        return (isinstance(other, Braiding) and self.kind == other.kind
                and self.degrees == other.degrees
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.kind, tuple(sorted(self.degrees.items()))))

    def degree(self, letter, i):
        if self.kind != "sign":
            return 0
        return self.degrees.get(letter, ())[i] if letter in self.degrees else 0

    def generator(self, x: Word, y: Word, field: FieldSpec, inverse=False) -> Mor:
        (a,), (b,) = x.letters, y.letters
        if self.kind == "explicit":
            table = self.inverses if inverse else self.generators
            key = (a, b)
            if key not in table:
                raise BraidingError(f"no explicit braiding for {key}")
            return table[key]
        if inverse:
            # flip and sign braidings are symmetric
            return self.generator(y, x, field)
        n, m = x.dims[0], y.dims[0]
        cols = {}
        for i in range(n):
            for j in range(m):
                s = -1 if self.degree(a, i) and self.degree(b, j) else 1
                cols[i * m + j] = {j * n + i: s}
        return Mor(x + y, y + x, cols, field)

    def braid(self, x: Word, y: Word, field: FieldSpec = QQ, inverse=False) -> Mor:
        """Psi_{x,y} (or its inverse ``y x -> x y`` read as Psi^{-1}_{x,y})."""
        key = (x, y, field, inverse)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if len(x) == 0 or len(y) == 0:
            w = x + y if not inverse else y + x
            out = identity(w, field)
        elif len(x) == 1 and len(y) == 1:
            out = self.generator(x, y, field, inverse)
        elif len(x) > 1:
            a, rest = x[:1], x[1:]
            if not inverse:
                # Psi_{a rest, y} = (Psi_{a,y} (x) id_rest)(id_a (x) Psi_{rest,y})
                out = compose(tensor(self.braid(a, y, field), identity(rest, field)),
                              tensor(identity(a, field), self.braid(rest, y, field)))
            else:
                out = compose(tensor(identity(a, field), self.braid(rest, y, field, True)),
                              tensor(self.braid(a, y, field, True), identity(rest, field)))
        else:
            b, rest = y[:1], y[1:]
            if not inverse:
                # Psi_{x, b rest} = (id_b (x) Psi_{x,rest})(Psi_{x,b} (x) id_rest)
                out = compose(tensor(identity(b, field), self.braid(x, rest, field)),
                              tensor(self.braid(x, b, field), identity(rest, field)))
            else:
                out = compose(tensor(self.braid(x, b, field, True), identity(rest, field)),
                              tensor(identity(b, field), self.braid(x, rest, field, True)))
        self._cache[key] = out
        return out

    def is_symmetric(self, letters_dims, field: FieldSpec = QQ) -> bool:
        """Psi_{Y,X} o Psi_{X,Y} = id for all generator pairs."""
        if self.kind in ("flip", "sign"):
            return True
        for a, n in letters_dims:
            for b, m in letters_dims:
                x, y = Word((a,), (n,)), Word((b,), (m,))
                if compose(self.braid(y, x, field), self.braid(x, y, field)) != identity(x + y, field):
                    return False
        return True

    def swapped(self) -> "Braiding":
        """The same braiding with letters B1 and B2 exchanged."""
        sw = {"B1": "B2", "B2": "B1"}
        degrees = {sw.get(k, k): v for k, v in self.degrees.items()}
        gens = {}
        invs = {}
        for (a, b), g in self.generators.items():
            na, nb = sw.get(a, a), sw.get(b, b)
            # rotating Psi_{a,b} by pi gives a braiding a b -> b a again
            gens[(na, nb)] = _relabel(pi_rotate(g), sw)
            invs[(na, nb)] = _relabel(pi_rotate(self.inverses[(a, b)]), sw)
        return Braiding(self.kind, degrees, gens, invs)


def _relabel(f: Mor, sw) -> Mor:
    def rl(w):
        return Word(tuple(sw.get(a, a) for a in w.letters), w.dims)
    return f.retype(rl(f.dom), rl(f.cod))


@dataclass
class Context:
    """Field, letter dimensions and braiding shared by all morphisms of a datum."""

    field: FieldSpec
    dims: Mapping
    braiding: Braiding

    def __post_init__(self):
        self.dims = dict(self.dims)

    def word(self, spec="") -> Word:
        """``ctx.word("B1 B2")``, ``ctx.word("12")`` or ``ctx.word(["B1"])``."""
        letters = parse_letters(spec)
        return Word(letters, tuple(self.dims[a] for a in letters))

    def id(self, spec="") -> Mor:
        w = spec if isinstance(spec, Word) else self.word(spec)
        return identity(w, self.field)

    def braid(self, x, y, inverse=False) -> Mor:
        x = x if isinstance(x, Word) else self.word(x)
        y = y if isinstance(y, Word) else self.word(y)
        return self.braiding.braid(x, y, self.field, inverse)

    def is_symmetric(self) -> bool:
        return self.braiding.is_symmetric(list(self.dims.items()), self.field)

    def swapped(self) -> "Context":
        return Context(self.field, {"B1": self.dims["B2"], "B2": self.dims["B1"]},
                       self.braiding.swapped())

    def __eq__(self, other):
        return (isinstance(other, Context) and self.field == other.field
                and self.dims == other.dims and self.braiding == other.braiding)


def parse_letters(spec) -> tuple:
    if isinstance(spec, Word):
        return spec.letters
    if isinstance(spec, (tuple, list)):
        return tuple(spec)
    spec = spec.strip()
    if not spec:
        return ()
    if re.fullmatch(r"[12]+", spec):
        return tuple("B" + c for c in spec)
    return tuple(t for t in re.split(r"[\s,]+", spec) if t)


def braid(x: Word, y: Word, ctx: Context) -> Mor:
    return ctx.braid(x, y)


# ---------------------------------------------------------------- expressions

GENERATORS = ("m1", "m2", "d1", "d2", "eta1", "eta2", "eps1", "eps2",
              "mul", "mur", "nul", "nur", "sigma", "rho")
DERIVED = ("phi12", "phi21", "phi11", "phi22", "sighat", "rhohat")
WORD_GENERATORS = ("id", "psi", "psi_inv")

SIGNATURES = {
    "m1": ("B1 B1", "B1"), "eta1": ("", "B1"), "d1": ("B1", "B1 B1"), "eps1": ("B1", ""),
    "m2": ("B2 B2", "B2"), "eta2": ("", "B2"), "d2": ("B2", "B2 B2"), "eps2": ("B2", ""),
    "mul": ("B2 B1", "B1"), "mur": ("B2 B1", "B2"),
    "nul": ("B1", "B2 B1"), "nur": ("B2", "B2 B1"),
    "sigma": ("B2 B2", "B1"), "rho": ("B2", "B1 B1"),
    "phi12": ("B1 B2", "B2 B1"), "phi21": ("B2 B1", "B1 B2"),
    "phi11": ("B1 B1", "B1 B1"), "phi22": ("B2 B2", "B2 B2"),
    "sighat": ("B2 B2", "B1 B2"), "rhohat": ("B1 B2", "B1 B1"),
}
SIGNATURES = {k: (parse_letters(a), parse_letters(b)) for k, (a, b) in SIGNATURES.items()}


class ExprSyntaxError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ExprTypeError(TypeError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str
    words: tuple = ()        # tuple of letter tuples

    def __str__(self):
        if self.name in WORD_GENERATORS:
            if self.name == "id":
                return f"id[{','.join(self.words[0])}]"
            x, y = self.words
            if len(x) == 1 and len(y) == 1:
                return f"{self.name}[{x[0]},{y[0]}]"
            return f"{self.name}[{','.join(x)};{','.join(y)}]"
        return self.name


@dataclass(frozen=True)
class Comp:
    """``(left . right)`` = left o right."""

    left: object
    right: object

    def __str__(self):
        return f"({self.left} . {self.right})"


@dataclass(frozen=True)
class Tens:
    left: object
    right: object

    def __str__(self):
        return f"({self.left} x {self.right})"


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            break
        if m.group(0).strip() == "":
            break
        start = m.start(1) if m.group(1) else m.start(2)
        out.append((m.group(1) or m.group(2), start))
        pos = m.end()
    out.append(("<end>", len(text)))
    return out


def parse_expr(text: str, extra_names=()) -> object:
    """Parse the expression grammar into an :class:`Atom`/:class:`Comp`/:class:`Tens` tree."""
    names = set(GENERATORS) | set(DERIVED) | set(WORD_GENERATORS) | set(extra_names)
    toks = _tokens(text)
    k = 0

    def peek():
        return toks[k]

    def take(expected=None):
        nonlocal k
        tok, pos = toks[k]
        if expected is not None and tok != expected:
            raise ExprSyntaxError(f"expected {expected!r}, found {tok!r}", pos)
        k += 1
        return tok, pos

    def word():
        letters = []
        while True:
            tok, pos = take()
            if tok not in LETTERS:
                raise ExprSyntaxError(f"expected a letter B1 or B2, found {tok!r}", pos)
            letters.append(tok)
            if peek()[0] != ",":
                return tuple(letters)
            take(",")

    def expr():
        tok, pos = peek()
        if tok == "(":
            take("(")
            left = expr()
            op, opos = take()
            if op not in (".", "x"):
                raise ExprSyntaxError(f"expected '.' or 'x', found {op!r}", opos)
            right = expr()
            take(")")
            return Comp(left, right) if op == "." else Tens(left, right)
        if tok == "<end>" or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            raise ExprSyntaxError(f"unexpected {tok!r}", pos)
        take()
        if tok not in names:
            raise ExprSyntaxError(f"unknown generator {tok!r}", pos)
        words = ()
        if peek()[0] == "[":
            take("[")
            if peek()[0] == "]":
                words = ((),)
            else:
                w1 = word()
                if peek()[0] == ";":
                    take(";")
                    words = (w1, word())
                elif tok in ("psi", "psi_inv") and len(w1) == 2:
                    words = ((w1[0],), (w1[1],))
                else:
                    words = (w1,)
            take("]")
        if tok == "id" and len(words) != 1:
            raise ExprSyntaxError("id needs exactly one word", pos)
        if tok in ("psi", "psi_inv") and len(words) != 2:
            raise ExprSyntaxError(f"{tok} needs two words", pos)
        if tok not in WORD_GENERATORS and words:
            raise ExprSyntaxError(f"{tok} takes no word arguments", pos)
        return Atom(tok, words)

    e = expr()
    tok, pos = peek()
    if tok != "<end>":
        raise ExprSyntaxError(f"trailing input {tok!r}", pos)
    return e


def print_expr(e) -> str:
    return str(e)


def typecheck(e, signatures=None) -> tuple:
    """``(dom letters, cod letters)`` of a well-typed expression."""
    sig = dict(SIGNATURES)
    if signatures:
        sig.update(signatures)
    if isinstance(e, Atom):
        if e.name == "id":
            return e.words[0], e.words[0]
        if e.name == "psi":
            x, y = e.words
            return x + y, y + x
        if e.name == "psi_inv":
            x, y = e.words
            return y + x, x + y
        if e.name not in sig:
            raise ExprTypeError(f"no signature for {e.name!r}")
        return sig[e.name]
    a = typecheck(e.left, signatures)
    b = typecheck(e.right, signatures)
    if isinstance(e, Tens):
        return a[0] + b[0], a[1] + b[1]
    if a[0] != b[1]:
        raise ExprTypeError(
            f"cannot compose {e.left} . {e.right}: dom = [{','.join(a[0])}] "
            f"but cod = [{','.join(b[1])}]")
    return b[0], a[1]


def evaluate(e, datum, env: Mapping = None) -> Mor:
    """Matrix of an expression, using the datum's generators and braiding."""
    if isinstance(e, str):
        e = parse_expr(e, extra_names=tuple(env or ()))
    sigs = {k: (m.dom.letters, m.cod.letters) for k, m in (env or {}).items()}
    typecheck(e, sigs)
    ctx = datum.ctx
    cache = {}

    def ev(node):
        if node in cache:
            return cache[node]
        if isinstance(node, Atom):
            if env and node.name in env:
                out = env[node.name]
            elif node.name == "id":
                out = ctx.id(node.words[0])
            elif node.name == "psi":
                out = ctx.braid(node.words[0], node.words[1])
            elif node.name == "psi_inv":
                out = ctx.braid(node.words[0], node.words[1], inverse=True)
            else:
                out = datum.morphism(node.name)
        elif isinstance(node, Comp):
            out = compose(ev(node.left), ev(node.right))
        else:
            out = tensor(ev(node.left), ev(node.right))
        cache[node] = out
        return out

    return ev(e)


# ---------------------------------------------------------------- row notation

_SIMPLE = {
    "lu": "mul", "ru": "mur", "ld": "nul", "rd": "nur", "s": "sigma", "r": "rho",
    "p12": "phi12", "p21": "phi21", "p11": "phi11", "p22": "phi22",
    "sh": "sighat", "rh": "rhohat",
}
_BY_LETTER = {
    "m": {"B1": "m1", "B2": "m2"}, "d": {"B1": "d1", "B2": "d2"},
    "e": {"B1": "eps1", "B2": "eps2"},
}


def _pieces(datum, strands: Word, row: str, env: Mapping = None) -> list:
    """The boxes of one row, left to right, checked against ``strands``."""
    ctx = datum.ctx
    env = env or {}
    pieces = []
    k = 0
    for tok in row.split():
        if tok == "|":
            f = ctx.id(strands[k:k + 1])
        elif tok in env:
            f = env[tok]
        elif tok in _SIMPLE:
            f = datum.morphism(_SIMPLE[tok])
        elif tok in _BY_LETTER:
            if k >= len(strands):
                raise SignatureError(f"row {row!r}: no strand left for {tok!r}")
            f = datum.morphism(_BY_LETTER[tok][strands.letters[k]])
        elif tok in ("u1", "u2"):
            f = datum.morphism("eta" + tok[1])
        elif tok == "x":
            f = ctx.braid(strands[k:k + 1], strands[k + 1:k + 2])
        elif tok == "xi":
            f = ctx.braid(strands[k + 1:k + 2], strands[k:k + 1], inverse=True)
        elif tok.startswith("x:"):
            a, b = (int(t) for t in tok[2:].split(","))
            f = ctx.braid(strands[k:k + a], strands[k + a:k + a + b])
        else:
            raise ExprSyntaxError(f"unknown row token {tok!r} in {row!r}", row.find(tok))
        n = len(f.dom)
        got = strands[k:k + n]
        if got.letters != f.dom.letters:
            raise SignatureError(
                f"row {row!r}: token {tok!r} expects {f.dom} but strands {k}.. are {got}")
        pieces.append(f)
        k += n
    if k != len(strands):
        raise SignatureError(f"row {row!r} consumes {k} of {len(strands)} strands {strands}")
    return pieces


def layer(datum, strands: Word, row: str, env: Mapping = None) -> Mor:
    """One horizontal layer of a row-notation diagram acting on ``strands``."""
    out = datum.ctx.id(UNIT)
    for f in _pieces(datum, strands, row, env):
        out = tensor(out, f)
    return out


def _apply(pieces, vec, field):
    """Push a sparse vector ``{multi-index: value}`` through one layer."""
    spans = []
    k = 0
    for f in pieces:
        spans.append((k, k + len(f.dom), f.table()))
        k += len(f.dom)
    out = {}
    for idx, c in vec.items():
        parts = []
        for a, b, tab in spans:
            img = tab.get(idx[a:b])
            if not img:
                break
            parts.append(img)
        else:
            for combo in itertools.product(*parts):
                key = ()
                v = c
                for t, x in combo:
                    key += t
                    v = v * x
                out[key] = out.get(key, 0) + v
    return {i: v for i, v in ((i, field(v)) for i, v in out.items()) if v != 0}


def diagram(datum, dom, *rows, env: Mapping = None) -> Mor:
    """Evaluate a row-notation diagram with domain ``dom`` (e.g. ``"212"``).

    Evaluation is column by column on sparse vectors, so wide intermediate
    layers never materialise as matrices.
    """
    ctx = datum.ctx
    field = ctx.field
    w = dom if isinstance(dom, Word) else ctx.word(dom)
    layers = []
    cur = w
    for row in rows:
        ps = _pieces(datum, cur, row, env)
        layers.append(ps)
        cur = Word(sum((f.cod.letters for f in ps), ()), sum((f.cod.dims for f in ps), ()))
    cols = {}
    for j in range(w.dim):
        vec = {unravel(j, w.dims): 1}
        for ps in layers:
            vec = _apply(ps, vec, field)
            if not vec:
                break
        if vec:
            cols[j] = {ravel(i, cur.dims): v for i, v in vec.items()}
    return Mor(w, cur, cols, field, _trusted=True)


def row_of(*parts) -> str:
    """Join row fragments; integers expand to that many ``|`` tokens."""
    out = []
    for p in parts:
        out.extend(["|"] * p if isinstance(p, int) else [p])
    return " ".join(out)


# ---------------------------------------------------------------- relativization


def relativize_domain(f: Mor, r: int, datum) -> Mor:
    """f^{[r+1]}: thread a nu_l coaction through domain slot ``r`` (0-based).

    Slot ``r`` of ``dom(f)`` must be B2; the result has B1 there and an
    extra B1 output on the far right.
    """
    if r >= len(f.dom) or f.dom.letters[r] != "B2":
        raise SignatureError(f"domain slot {r} of {f.dom} must be B2")
    n = len(f.dom)
    dom = Word(f.dom.letters[:r] + ("B1",) + f.dom.letters[r + 1:],
               f.dom.dims[:r] + (datum.ctx.dims["B1"],) + f.dom.dims[r + 1:])
    rows = [row_of(r, "ld", n - r - 1)]
    if n - r - 1:
        rows.append(row_of(r + 1, f"x:1,{n - r - 1}"))
    rows.append(row_of("F", 1))
    return diagram(datum, dom, *rows, env={"F": f})


def relativize_codomain(g: Mor, r: int, datum) -> Mor:
    """g_{[r+1]}: act with an extra leftmost B2 input on codomain slot ``r`` via mu_r.

    Slot ``r`` of ``cod(g)`` must be B1; the result has B2 there.
    """
    if r >= len(g.cod) or g.cod.letters[r] != "B1":
        raise SignatureError(f"codomain slot {r} of {g.cod} must be B1")
    n = len(g.cod)
    rows = [row_of(1, "G")]
    if r:
        rows.append(row_of(f"x:1,{r}", n - r))
    rows.append(row_of(r, "ru", n - r - 1))
    dom = datum.ctx.word("B2") + g.dom
    return diagram(datum, dom, *rows, env={"G": g})


# ---------------------------------------------------------------- pi rotation


def pi_rotate(f: Mor, ctx: Context = None) -> Mor:
    """Rotation by pi: ``R_dom o f^T o R_cod`` on a symmetric context."""
    if ctx is not None and not ctx.is_symmetric():
        raise BraidingError("pi rotation needs a symmetric braiding")
    field = f.field
    t = transpose(f)                    # cod -> dom
    return compose(reversal(f.dom, field), compose(t, reversal(f.cod.reversed(), field)))
