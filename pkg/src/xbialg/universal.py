"""The universal side: bialgebras, idempotent systems, extraction and classification.

Expressions on a bialgebra ``B`` are written in row notation over the
tokens ``I`` (id_B), ``X`` (Psi_{B,B}), ``M``, ``D``, ``U`` (unit), ``E``
(counit) and ``P1``, ``P2`` for the idempotents.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .diagram_engine import Braiding, Context, _relabel, diagram, pi_rotate
from .exact_linear import (
    Mor, SignatureError, Word, compose_all, identity, split_idempotent, tensor_all,
)
from .hopf_datum import (
    AxiomReport, HopfDatum, ReportLine, build_bialgebra, compare, compare_all,
    check_all, grid_d, grid_m,
)

PAIR_SWAP = {"B1": "B2", "B2": "B1"}


# ---------------------------------------------------------------- bialgebras


@dataclass
class Algebra:
    """An algebra ``(word, m, eta)`` in a context."""

    ctx: Context
    word: Word
    m: Mor
    eta: Mor
    name: Optional[str] = None


@dataclass
class Bialgebra:
    """A bialgebra ``(word, m, eta, d, eps)``; ``verified`` is False for overridden builds."""

    ctx: Context
    word: Word
    m: Mor
    eta: Mor
    d: Mor
    eps: Mor
    verified: bool = True
    name: Optional[str] = None

    def __post_init__(self):
        w, u = self.word, Word()
        for label, f, dom, cod in (("m", self.m, w + w, w), ("eta", self.eta, u, w),
                                   ("d", self.d, w, w + w), ("eps", self.eps, w, u)):
            if f.dom != dom or f.cod != cod:
                raise SignatureError(f"{label} must be {dom} -> {cod}, got {f.dom} -> {f.cod}")

    @property
    def field(self):
        return self.ctx.field

    def morphism(self, name):
        raise KeyError(name)

    def env(self, **extra) -> dict:
        out = {
            "I": identity(self.word, self.field), "X": self.ctx.braid(self.word, self.word),
            "M": self.m, "D": self.d, "U": self.eta, "E": self.eps,
        }
        out.update(extra)
        return out

    def eval(self, n: int, *rows, **extra) -> Mor:
        """A row diagram on ``B^{(x)n}`` built from the bialgebra tokens."""
        dom = Word()
        for _ in range(n):
            dom = dom + self.word
        return diagram(self, dom, *rows, env=self.env(**extra))

    def structure_constants(self) -> dict:
        """``{(i, j): {k: c}}`` with ``e_i e_j = sum_k c e_k``."""
        n = self.word.dim
        return {(j // n, j % n): dict(col) for j, col in self.m.columns()}

    def __repr__(self):
        tag = "" if self.verified else " unverified"
        return f"Bialgebra({self.name or ''}{tag}, dim {self.word.dim}, {self.field})"


def table_algebra(ctx: Context, letter: str, table: dict, unit: int = 0) -> Algebra:
    """An algebra from structure constants ``{(i, j): {k: c}}``."""
    w = ctx.word(letter)
    n = w.dim
    m = Mor(w + w, w, {i * n + j: col for (i, j), col in table.items()}, ctx.field)
    eta = Mor(Word(), w, {0: {unit: 1}}, ctx.field)
    return Algebra(ctx, w, m, eta)


def check_bialgebra(B: Bialgebra) -> AxiomReport:
    """Associativity, unit, coassociativity, counit and the four compatibility laws."""
    ev = B.eval
    rep = AxiomReport()
    rep.add(compare("bialg.assoc", ev(3, "M I", "M"), ev(3, "I M", "M")))
    rep.add(compare_all("bialg.unit", [(ev(1, "U I", "M"), ev(1)), (ev(1, "I U", "M"), ev(1))]))
    rep.add(compare("bialg.coassoc", ev(1, "D", "D I"), ev(1, "D", "I D")))
    rep.add(compare_all("bialg.counit", [(ev(1, "D", "E I"), ev(1)), (ev(1, "D", "I E"), ev(1))]))
    rep.add(compare("bialg.delta-m", ev(2, "M", "D"), ev(2, "D D", "I X I", "M M")))
    rep.add(compare("bialg.delta-eta", ev(0, "U", "D"), ev(0, "U U")))
    rep.add(compare("bialg.eps-m", ev(2, "M", "E"), ev(2, "E E")))
    rep.add(compare("bialg.eps-eta", ev(0, "U", "E"), ev(0)))
    return rep


# ---------------------------------------------------------------- projection systems


@dataclass
class ProjectionSystem:
    """Idempotents ``P1``, ``P2`` on ``B`` with splittings ``P_j = inj_j proj_j``.

    ``factor_ctx`` (optional) fixes the context of the factors ``B1``, ``B2``
    used by :func:`extract_datum`.
    """

    P1: Mor
    P2: Mor
    inj1: Mor
    proj1: Mor
    inj2: Mor
    proj2: Mor
    factor_ctx: Optional[Context] = None

    @classmethod
    def from_idempotents(cls, P1: Mor, P2: Mor) -> "ProjectionSystem":
        i1, p1, _ = split_idempotent(P1, "B1")
        i2, p2, _ = split_idempotent(P2, "B2")
        return cls(P1, P2, i1, p1, i2, p2)

    @classmethod
    def canonical(cls, d: HopfDatum) -> "ProjectionSystem":
        """``P1 = id (x) eta2 eps2`` and ``P2 = eta1 eps1 (x) id`` on ``B1 B2``."""
        inj1, proj1 = diagram(d, "1", "| u2"), diagram(d, "12", "| e")
        inj2, proj2 = diagram(d, "2", "u1 |"), diagram(d, "12", "e |")
        return cls(compose_all(inj1, proj1), compose_all(inj2, proj2),
                   inj1, proj1, inj2, proj2, factor_ctx=d.ctx)

    def lam(self, B: Bialgebra) -> Mor:
        """Lambda = m (inj1 (x) inj2): B1 B2 -> B."""
        return compose_all(B.m, tensor_all(self.inj1, self.inj2))

    def lam_inv(self, B: Bialgebra) -> Mor:
        """(proj1 (x) proj2) Delta: B -> B1 B2."""
        return compose_all(tensor_all(self.proj1, self.proj2), B.d)


def canonical_projections(d: HopfDatum) -> ProjectionSystem:
    return ProjectionSystem.canonical(d)


def check_projection_system(B: Bialgebra, P: ProjectionSystem) -> AxiomReport:
    """Idempotent relations, the splitting and the consequences for the projections."""
    ev = B.eval
    env = {"P1": P.P1, "P2": P.P2}
    f = B.field
    rep = AxiomReport()
    rep.add(compare_all("pi-rel1.idempotent", [
        (compose_all(P.P1, P.P1), P.P1), (compose_all(P.P2, P.P2), P.P2)]))
    rep.add(compare("pi-rel1.m", ev(2, "P1 P1", "M", **env), ev(2, "P1 P1", "M", "P1", **env)))
    rep.add(compare("pi-rel1.unit", ev(0, "U", "P1", **env), ev(0, "U")))
    rep.add(compare("pi-rel1.delta", ev(1, "D", "P2 P2", **env),
                    ev(1, "P2", "D", "P2 P2", **env)))
    rep.add(compare("pi-rel1.counit", ev(1, "P2", "E", **env), ev(1, "E")))
    split_in = ev(2, "P1 P2", "M", **env)
    split_out = ev(1, "D", "P1 P2", **env)
    rep.add(compare_all("pi-rel1.splitting", [
        (compose_all(split_out, split_in), tensor_all(P.P1, P.P2)),
        (compose_all(split_in, split_out), ev(1))]))
    rep.add(compare_all("proj-cycle.retract", [
        (compose_all(P.proj1, P.inj1), identity(P.inj1.dom, f)),
        (compose_all(P.proj2, P.inj2), identity(P.inj2.dom, f)),
        (compose_all(P.inj1, P.proj1), P.P1), (compose_all(P.inj2, P.proj2), P.P2)]))
    lam, lam_inv = P.lam(B), P.lam_inv(B)
    rep.add(compare("proj-cycle.lambda-left", compose_all(lam, lam_inv), ev(1)))
    rep.add(compare("proj-cycle.lambda-right", compose_all(lam_inv, lam), identity(lam.dom, f)))
    cons = [
        (ev(0, "U", "P2", **env), ev(0, "U")),
        (ev(1, "P1", "E", **env), ev(1, "E")),
        (ev(1, "P2", "P1", **env), ev(1, "E", "U")),
        (ev(1, "P1", "P2", **env), ev(1, "E", "U")),
        (ev(2, "M", "P2", **env), ev(2, "P2 I", "M", "P2", **env)),
        (ev(1, "P1", "D", **env), ev(1, "P1", "D", "I P1", **env)),
        (ev(2, "P1 I", "M", "P1", **env), ev(2, "P1 P1", "M", "P1", **env)),
        (ev(1, "P2", "D", "I P2", **env), ev(1, "P2", "D", "P2 P2", **env)),
    ]
    for k, (a, b) in enumerate(cons, 1):
        rep.add(compare(f"cons-proj-cycle1.{k}", a, b))
    return rep


def _gamma_rows(j):
    return ["D D", "I X I", f"I P{j} I I", "M M"]


def _delta_rows(i, j, k):
    return ["I D", f"P{i} P{j} P{k}", "M I"]


def check_cocycle_projections(B: Bialgebra, P: ProjectionSystem) -> AxiomReport:
    """The relations (gamma1), (gamma2), (delta1), (delta2); (beta1), (beta2) separately."""
    env = {"P0": identity(B.word, B.field), "P1": P.P1, "P2": P.P2}
    ev = B.eval
    rep = AxiomReport()
    rep.add(compare("techn2-cond.gamma1", ev(1, "D", "I P1", **env),
                    ev(1, "D", "P1 P2", *_gamma_rows(1), *_delta_rows(1, 2, 1), **env)))
    rep.add(compare("techn2-cond.gamma2", ev(2, "P2 I", "M", **env),
                    ev(2, *_delta_rows(2, 1, 2), *_gamma_rows(2), "P1 P2", "M", **env)))
    for j in (1, 2):
        rep.add(compare(f"techn2-cond.delta{j}",
                        ev(2, f"I P{j}", *_delta_rows(0, 0, 0), f"P{j} I", **env),
                        ev(2, f"I P{j}", *_delta_rows(0, j, 0), f"P{j} I", **env)))
    beta1 = ["P1 I", "D I", "I X", "M I", "P1 I"]
    beta2 = ["I P2", "I D", "X I", "I M", "I P2"]
    rep.add(compare("alt-gamma.beta1", ev(2, *beta1, **env), ev(2, "I P1", *beta1, **env)))
    rep.add(compare("alt-gamma.beta2", ev(2, *beta2, **env), ev(2, *beta2, "P2 I", **env)))
    return rep


def _phi_rows(f, pre, post):
    """Rows of Phi_f = (m (x) id)(f (x) Psi)(Delta (x) id) padded by identities."""
    p, q = "I " * pre, " I" * post
    return [f"{p}D I{q}", f"{p}{f} X{q}", f"{p}M I{q}"]


PI_STRONG = {
    1: (2, ["P1 P1", *_phi_rows("I", 0, 0), "P2 I"], ["P1 E", "D", "P2 I"]),
    2: (2, ["P1 P2", "D I", "P2 X", *_phi_rows("P2", 0, 1), "P1 P1 I"], ["U U P1 E"]),
    3: (2, ["I P1", "I D", "P2 P2 I", "M I", "P1 I"], ["E P1", "U I"]),
    4: (3, ["I P1 P2", "I I D", "I I P1 I", "I I D I", "I X I I",
            "X D I I", "I I P2 X I", "I I M I I",
            "I I P1 I I", "P1 M I P1", "I P2 I I"],
        ["I I P2", "I I D", "I I P1 I", "I X I",
         "I D P1 P1", "X I I I", "P1 M I I", "I P2 I I"]),
}


def _swap_ctx(ctx: Context) -> Context:
    return Context(ctx.field, {PAIR_SWAP.get(k, k): v for k, v in ctx.dims.items()},
                   ctx.braiding.swapped())


def pi_dual_system(B: Bialgebra, P: ProjectionSystem):
    """The pi-rotated bialgebra and idempotents (indices 1 and 2 exchanged)."""
    if not B.ctx.is_symmetric():
        raise ValueError("pi rotation needs a symmetric braiding")

    def rot(f):
        return _relabel(pi_rotate(f), PAIR_SWAP)

    w = rot(identity(B.word, B.field)).dom
    B2 = Bialgebra(_swap_ctx(B.ctx), w, rot(B.d), rot(B.eps), rot(B.m), rot(B.eta),
                   verified=B.verified, name=B.name)
    P2 = ProjectionSystem(rot(P.P2), rot(P.P1), rot(P.proj2), rot(P.inj2),
                          rot(P.proj1), rot(P.inj1))
    return B2, P2


def check_strong_projections(B: Bialgebra, P: ProjectionSystem) -> AxiomReport:
    """The idempotent form of the strong identities and their pi-rotated counterparts."""
    rep = AxiomReport()
    systems = [("", B, P)]
    if B.ctx.is_symmetric():
        systems.append((".pi",) + pi_dual_system(B, P))
    for suffix, BB, PP in systems:
        env = {"P1": PP.P1, "P2": PP.P2}
        for k, (n, lhs, rhs) in PI_STRONG.items():
            rep.add(compare(f"pi-strong.{k}{suffix}", BB.eval(n, *lhs, **env),
                            BB.eval(n, *rhs, **env)))
    return rep


def check_bialg_cocycle6(B: Bialgebra, P: ProjectionSystem) -> AxiomReport:
    """Idempotent and injection conditions for bialgebras with trivial nu_l and rho."""
    env = {"P1": P.P1, "P2": P.P2}
    ev = B.eval
    e = extract_datum(B, P)
    f = B.field
    rep = AxiomReport()
    rep.add(compare("bialg-cocycle6.2a", ev(2, "P1 P1", "M", **env),
                    ev(2, "P1 P1", "M", "P1", **env)))
    rep.add(compare_all("bialg-cocycle6.2b", [
        (ev(1, "P1", "D", **env), ev(1, "D", "P1 P1", **env)),
        (ev(1, "P1", "E", **env), ev(1, "E"))]))
    rep.add(compare("bialg-cocycle6.2c", ev(1, "D", "P2 P2", **env),
                    ev(1, "P2", "D", "P2 P2", **env)))
    rep.add(compare_all("bialg-cocycle6.2d", [
        (ev(0, "U", "P1", **env), ev(0, "U")), (ev(1, "P2", "E", **env), ev(1, "E"))]))
    split_in, split_out = ev(2, "P1 P2", "M", **env), ev(1, "D", "P1 P2", **env)
    rep.add(compare_all("bialg-cocycle6.2e", [
        (compose_all(split_out, split_in), tensor_all(P.P1, P.P2)),
        (compose_all(split_in, split_out), ev(1))]))
    i1, p1, i2, p2 = P.inj1, P.proj1, P.inj2, P.proj2
    rep.add(compare_all("bialg-cocycle6.3a", [
        (compose_all(B.m, tensor_all(i1, i1)), compose_all(i1, e.morphism("m1"))),
        (B.eta, compose_all(i1, e.morphism("eta1"))),
        (compose_all(B.d, i1), compose_all(tensor_all(i1, i1), e.morphism("d1"))),
        (compose_all(B.eps, i1), e.morphism("eps1"))]))
    rep.add(compare_all("bialg-cocycle6.3b", [
        (compose_all(tensor_all(p1, p1), B.d), compose_all(e.morphism("d1"), p1)),
        (B.eps, compose_all(e.morphism("eps1"), p1))]))
    rep.add(compare_all("bialg-cocycle6.3c", [
        (compose_all(tensor_all(p2, p2), B.d), compose_all(e.morphism("d2"), p2)),
        (B.eps, compose_all(e.morphism("eps2"), p2))]))
    rep.add(compare_all("bialg-cocycle6.3d", [
        (compose_all(p1, i1), identity(i1.dom, f)), (compose_all(p2, i2), identity(i2.dom, f))]))
    lam, lam_inv = P.lam(B), P.lam_inv(B)
    rep.add(compare_all("bialg-cocycle6.3e", [
        (compose_all(lam, lam_inv), ev(1)), (compose_all(lam_inv, lam), identity(lam.dom, f))]))
    return rep


# ---------------------------------------------------------------- extraction


def _factor_ctx(B: Bialgebra, P: ProjectionSystem) -> Context:
    if P.factor_ctx is not None:
        return P.factor_ctx
    if B.ctx.braiding.kind != "flip":
        raise ValueError("a factor context is required unless the braiding is the flip")
    return Context(B.field, {"B1": P.inj1.dom.dim, "B2": P.inj2.dom.dim}, Braiding("flip"))


def extract_datum(B: Bialgebra, P: ProjectionSystem, name: str = None) -> HopfDatum:
    """The fourteen structure morphisms read off from ``B`` and its projections."""
    ctx = _factor_ctx(B, P)
    i1, p1, i2, p2 = P.inj1, P.proj1, P.inj2, P.proj2
    w1, w2 = ctx.word("B1"), ctx.word("B2")
    if i1.dom.dims != w1.dims or i2.dom.dims != w2.dims:
        raise ValueError("projection ranks do not match the factor context")

    def fit(f, dom, cod):
        return f.retype(ctx.word(dom), ctx.word(cod))

    m, dl = B.m, B.d

    def mult(p, a, b):
        return compose_all(p, m, tensor_all(a, b))

    def comult(p, q, a):
        return compose_all(tensor_all(p, q), dl, a)

    out = {
        "m1": fit(mult(p1, i1, i1), "11", "1"), "m2": fit(mult(p2, i2, i2), "22", "2"),
        "eta1": fit(compose_all(p1, B.eta), "", "1"), "eta2": fit(compose_all(p2, B.eta), "", "2"),
        "d1": fit(comult(p1, p1, i1), "1", "11"), "d2": fit(comult(p2, p2, i2), "2", "22"),
        "eps1": fit(compose_all(B.eps, i1), "1", ""), "eps2": fit(compose_all(B.eps, i2), "2", ""),
        "sigma": fit(mult(p1, i2, i2), "22", "1"),
        "mul": fit(mult(p1, i2, i1), "21", "1"), "mur": fit(mult(p2, i2, i1), "21", "2"),
        "rho": fit(comult(p1, p1, i2), "2", "11"),
        "nul": fit(comult(p2, p1, i1), "1", "21"), "nur": fit(comult(p2, p1, i2), "2", "21"),
    }
    norm = compose_all(out["eps1"], out["eta1"])
    if norm != identity(Word(), B.field):
        raise ValueError("extraction needs a normalized system: eps1 eta1 != 1")
    return HopfDatum(ctx, out, name=name or B.name)


def bialgebra_grid(B: Bialgebra, P: ProjectionSystem) -> tuple:
    """``m_{B,i,jk}`` and ``Delta_{B,ij,k}`` for ``i, j, k`` in ``{1, 2}``."""
    inj = {1: P.inj1, 2: P.inj2}
    proj = {1: P.proj1, 2: P.proj2}
    ms, ds = {}, {}
    for i, j, k in itertools.product((1, 2), repeat=3):
        ms[(i, j, k)] = compose_all(proj[i], B.m, tensor_all(inj[j], inj[k]))
        ds[(i, j, k)] = compose_all(tensor_all(proj[i], proj[j]), B.d, inj[k])
    return ms, ds


def check_grid(d: HopfDatum, B: Bialgebra, P: ProjectionSystem) -> AxiomReport:
    """The datum-side grid morphisms agree with those read off from ``B``."""
    ms, ds = bialgebra_grid(B, P)
    rep = AxiomReport()
    for (i, j, k), f in ms.items():
        rep.add(compare(f"co-act-inv.m.{i}{j}{k}", grid_m(d, i, j, k), f))
    for (i, j, k), f in ds.items():
        rep.add(compare(f"co-act-inv.d.{i}{j}{k}", grid_d(d, i, j, k), f))
    return rep


# ---------------------------------------------------------------- classification

BOX_ORDER = ("mul", "mur", "sigma", "rho", "nul", "nur")


@dataclass
class ClassificationBox:
    """Nontriviality flags for (mu_l, mu_r, sigma, rho, nu_l, nu_r)."""

    flags: tuple
    cross_check: Optional[AxiomReport] = None

    def __str__(self):
        return "".join("*" if f else "." for f in self.flags)

    def nontrivial(self) -> list:
        return [n for n, f in zip(BOX_ORDER, self.flags) if f]


def _equivalence_line(ident, datum_trivial, statements):
    """PASS iff every projection-side statement agrees with the datum-side flag."""
    for k, ok in enumerate(statements):
        if ok != datum_trivial:
            return ReportLine(ident, False, (k, "-", "trivial" if datum_trivial else "nontrivial",
                                             "holds" if ok else "fails"))
    return ReportLine(ident, True)


def alg_coalg_triv(d: HopfDatum, B: Bialgebra, P: ProjectionSystem) -> AxiomReport:
    """The eight triviality criteria, datum side against idempotent side."""
    env = {"P1": P.P1, "P2": P.P2}
    ev = B.eval
    e = extract_datum(B, P)
    i1, p1, i2, p2 = P.inj1, P.proj1, P.inj2, P.proj2

    def eq(a, b):
        return a == b

    def alg_map(f, cod_m, cod_eta):        # f: B -> B_j
        return (eq(compose_all(f, B.m), compose_all(cod_m, tensor_all(f, f)))
                and eq(compose_all(f, B.eta), cod_eta))

    def alg_map_in(f, dom_m, dom_eta):     # f: B_j -> B
        return (eq(compose_all(B.m, tensor_all(f, f)), compose_all(f, dom_m))
                and eq(compose_all(f, dom_eta), B.eta))

    def coalg_map(f, cod_d, cod_eps):      # f: B -> B_j
        return (eq(compose_all(tensor_all(f, f), B.d), compose_all(cod_d, f))
                and eq(compose_all(cod_eps, f), B.eps))

    def coalg_map_in(f, dom_d, dom_eps):   # f: B_j -> B
        return (eq(compose_all(B.d, f), compose_all(tensor_all(f, f), dom_d))
                and eq(compose_all(B.eps, f), dom_eps))

    t = {n: d.is_trivial(n) for n in BOX_ORDER}
    M = e.morphism
    rep = AxiomReport()
    rep.add(_equivalence_line("alg-coalg-triv.1", t["mul"], [
        eq(ev(2, "I P1", "M", "P1", **env), ev(2, "P1 P1", "M", "P1", **env))]))
    rep.add(_equivalence_line("alg-coalg-triv.2", t["mur"], [
        eq(ev(2, "M", "P2", **env), ev(2, "P2 P2", "M", "P2", **env)),
        alg_map(p2, M("m2"), M("eta2"))]))
    rep.add(_equivalence_line("alg-coalg-triv.3", t["nul"], [
        eq(ev(1, "P1", "D", **env), ev(1, "P1", "D", "P1 P1", **env)),
        coalg_map_in(i1, M("d1"), M("eps1"))]))
    rep.add(_equivalence_line("alg-coalg-triv.4", t["nur"], [
        eq(ev(1, "P2", "D", "P2 I", **env), ev(1, "P2", "D", "P2 P2", **env))]))
    rep.add(_equivalence_line("alg-coalg-triv.5", t["sigma"], [
        eq(d.morphism("sighat"), diagram(d, "22", "u1 m")),
        eq(ev(2, "P2 P2", "M", **env), ev(2, "P2 P2", "M", "P2", **env)),
        alg_map_in(i2, M("m2"), M("eta2"))]))
    rep.add(_equivalence_line("alg-coalg-triv.6", t["rho"], [
        eq(d.morphism("rhohat"), diagram(d, "12", "d e")),
        eq(ev(1, "D", "P1 P1", **env), ev(1, "P1", "D", "P1 P1", **env)),
        coalg_map(p1, M("d1"), M("eps1"))]))
    rep.add(_equivalence_line("alg-coalg-triv.7", t["mul"] and t["sigma"], [
        eq(ev(2, "M", "P1", **env), ev(2, "P1 P1", "M", "P1", **env)),
        alg_map(p1, M("m1"), M("eta1"))]))
    rep.add(_equivalence_line("alg-coalg-triv.8", t["nur"] and t["rho"], [
        eq(ev(1, "P2", "D", **env), ev(1, "P2", "D", "P2 P2", **env)),
        coalg_map_in(i2, M("d2"), M("eps2"))]))
    return rep


def classify(d: HopfDatum, cross_validate: bool = True) -> ClassificationBox:
    """Six triviality flags; optionally cross-checked on the built bialgebra."""
    flags = tuple(not d.is_trivial(n) for n in BOX_ORDER)
    cross = None
    if cross_validate and check_all(d).passed:
        B = build_bialgebra(d)
        cross = alg_coalg_triv(d, B, ProjectionSystem.canonical(d))
    return ClassificationBox(flags, cross)


@dataclass(frozen=True)
class BoxCounts:
    total: int
    cocycle_free: int
    with_duals: int

    def __str__(self):
        return f"{self.total} {self.cocycle_free} {self.with_duals}"


def enumerate_boxes() -> BoxCounts:
    """Count classification boxes: all, co-cycle free, and strong plus dual types.

    Dual types whose cocycle and cycle are both trivial coincide with the
    corresponding strong types.
    """
    boxes = list(itertools.product((False, True), repeat=6))
    free = [b for b in boxes if not b[2] and not b[3]]
    types = {("strong", b) for b in boxes}
    types |= {("strong" if not b[2] and not b[3] else "dual", b) for b in boxes}
    return BoxCounts(len(boxes), len(free), len(types))


# ---------------------------------------------------------------- gamma form


def gamma_form(d: HopfDatum) -> Mor:
    """Gamma = (m1 (x) id)(id (x) sighat)(phi21 (x) id): B2 B1 B2 -> B1 B2."""
    return diagram(d, "212", "p21 |", "| sh", "m |")


def from_gamma(gamma: Mor, d: HopfDatum) -> tuple:
    """``(phi21, sighat)`` recovered from Gamma by inserting units."""
    env = {"G": gamma}
    return diagram(d, "21", "| | u2", "G", env=env), diagram(d, "22", "| u1 |", "G", env=env)


def check_gamma(gamma: Mor, d: HopfDatum) -> AxiomReport:
    """Unit and associativity conditions for a Gamma-form algebra on B1 B2."""
    env = {"G": gamma}
    rep = AxiomReport()
    rep.add(compare("cond5-caat.unit-left", diagram(d, "12", "u2 | |", "G", env=env),
                    diagram(d, "12")))
    rep.add(compare("cond5-caat.unit-right", diagram(d, "2", "| u1 u2", "G", env=env),
                    diagram(d, "2", "u1 |")))
    rep.add(compare("cond5-caat.assoc", diagram(d, "21212", "G | |", "| G", "m |", env=env),
                    diagram(d, "21212", "| | G", "| m |", "G", env=env)))
    return rep


# ---------------------------------------------------------------- universal property


def _is_algebra_map(f: Mor, src_m, src_eta, A) -> list:
    return [(compose_all(f, src_m), compose_all(A.m, tensor_all(f, f))),
            (compose_all(f, src_eta), A.eta)]


def check_universal_property(d: HopfDatum, A, alpha: Mor, beta: Mor) -> tuple:
    """``(gamma, report)`` with ``gamma = m_A (alpha (x) beta)``.

    The report lists the four hypotheses and then the properties of gamma:
    its restrictions to both factors, unitality and multiplicativity with
    respect to the cross product algebra of ``d``.
    """
    mA = A.m
    rep = AxiomReport()
    rep.add(compare_all("univ-constr1.pre.1", _is_algebra_map(
        alpha, d.morphism("m1"), d.morphism("eta1"), A)))
    rep.add(compare("univ-constr1.pre.2", compose_all(beta, d.morphism("eta2")), A.eta))
    rep.add(compare("univ-constr1.pre.3",
                    compose_all(mA, tensor_all(alpha, beta), d.morphism("phi21")),
                    compose_all(mA, tensor_all(beta, alpha))))
    rep.add(compare("univ-constr1.pre.4",
                    compose_all(mA, tensor_all(alpha, beta), d.morphism("sighat")),
                    compose_all(mA, tensor_all(beta, beta))))
    gamma = compose_all(mA, tensor_all(alpha, beta))
    rep.add(compare("univ-constr1.restrict-1",
                    compose_all(gamma, diagram(d, "1", "| u2")), alpha))
    rep.add(compare("univ-constr1.restrict-2",
                    compose_all(gamma, diagram(d, "2", "u1 |")), beta))
    rep.add(compare_all("univ-constr1.algebra-map", _is_algebra_map(
        gamma, d.morphism("m_B"), diagram(d, "", "u1 u2"), A)))
    return gamma, rep


# ---------------------------------------------------------------- multiplicativity


@dataclass
class CriteriaResult:
    """Verdicts of the four multiplicativity statements and their agreement."""

    statements: AxiomReport
    consistent: bool
    violating: Optional[tuple] = None

    def __str__(self):
        tail = "consistent" if self.consistent else f"inconsistent {self.violating}"
        return f"{self.statements}\nalg-morph-equiv {tail}"


def multiplicativity_criteria(f: Mor, d: HopfDatum, A) -> CriteriaResult:
    """Statements 1-4 for ``f: B1 B2 -> A``: full multiplicativity and three
    equivalent families of restricted identities."""
    mB = d.morphism("m_B")
    lhs_full = compose_all(A.m, tensor_all(f, f))
    rhs_full = compose_all(f, mB)
    ins = {
        "a": diagram(d, "112", "| u2 | |"),     # id (x) eta2 (x) id (x) id
        "b": diagram(d, "212", "u1 | | |"),     # eta1 (x) id (x) id (x) id
        "c": diagram(d, "121", "| | | u2"),     # id (x) id (x) id (x) eta2
        "d": diagram(d, "122", "| | u1 |"),     # id (x) id (x) eta1 (x) id
        "e": diagram(d, "21", "u1 | | u2"),     # eta1 (x) id (x) id (x) eta2
    }

    def restricted(key):
        return (compose_all(lhs_full, ins[key]), compose_all(rhs_full, ins[key]))

    statements = {
        1: [(lhs_full, rhs_full)],
        2: [restricted("a"), restricted("b")],
        3: [restricted("c"), restricted("d")],
        4: [restricted("a"), restricted("d"), restricted("e")],
    }
    rep = AxiomReport()
    for k, pairs in statements.items():
        rep.add(compare_all(f"alg-morph-equiv.{k}", pairs))
    verdicts = [l.passed for l in rep]
    violating = None
    for a, b in itertools.combinations(range(4), 2):
        if verdicts[a] != verdicts[b]:
            violating = (a + 1, b + 1)
            break
    return CriteriaResult(rep, violating is None, violating)
