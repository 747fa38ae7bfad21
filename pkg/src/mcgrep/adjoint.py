"""Tensor powers ad^{(x)g} of the adjoint representation of u_zeta.

Basis vectors are g-tuples of ETF triples, enumerated lexicographically in
(l_1, m_1, n_1, ..., l_g, m_g, n_g).
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Mapping

from .checks import Check, Report, check_all
from .linalg import SparseOperator, add_into
from .scalars import CycScalar, qbrace, qint, zeta
from .uqsl2 import (
    AlgElem,
    Triple,
    antipode_mono,
    coproduct_mono,
    index_of,
    iterated_coproduct,
    prod_mono,
    triple_of,
)

__all__ = [
    "AdVector",
    "SparseOperator",
    "ad_basis",
    "ad_index",
    "ad_tuple",
    "adjoint_act_closed",
    "adjoint_act_generic",
    "adjoint_suite",
    "generator_operator",
    "matrix_to_json",
]

Key = tuple[Triple, ...]
GENERATORS = ("E", "F1", "K")


class AdVector:
    """A vector of ad^{(x)g}: a map from g-tuples of triples to scalars."""

    __slots__ = ("r", "g", "terms")

    def __init__(self, r: int, g: int, terms: Mapping[Key, CycScalar] | None = None) -> None:
        self.r, self.g = r, g
        clean: dict[Key, CycScalar] = {}
        for k, v in (terms or {}).items():
            if len(k) != g or any(not all(0 <= x < r for x in t) for t in k):
                raise ValueError(f"bad basis index {k}")
            if not v.is_zero():
                clean[tuple(k)] = v
        self.terms = clean

    @staticmethod
    def basis_vector(r: int, key: Key) -> AdVector:
        return AdVector(r, len(key), {tuple(key): CycScalar.from_int(r, 1)})

    def __add__(self, other: AdVector) -> AdVector:
        out = dict(self.terms)
        for k, v in other.terms.items():
            add_into(out, k, v)
        return AdVector(self.r, self.g, out)

    def scale(self, c: CycScalar) -> AdVector:
        return AdVector(self.r, self.g, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdVector):
            return NotImplemented
        return (self.r, self.g, self.terms) == (other.r, other.g, other.terms)

    def __hash__(self) -> int:  # pragma: no cover
        raise TypeError("AdVector is unhashable")

    def __repr__(self) -> str:
        return f"AdVector(r={self.r}, g={self.g}, {len(self.terms)} terms)"

    def to_column(self) -> dict[int, CycScalar]:
        return {ad_index(self.r, k): v for k, v in self.terms.items()}

    @staticmethod
    def from_column(r: int, g: int, col: Mapping[int, CycScalar]) -> AdVector:
        return AdVector(r, g, {ad_tuple(r, g, i): v for i, v in col.items()})


def ad_index(r: int, key: Key) -> int:
    i = 0
    for t in key:
        i = i * r ** 3 + index_of(r, t)
    return i


def ad_tuple(r: int, g: int, i: int) -> Key:
    out = []
    for _ in range(g):
        i, rem = divmod(i, r ** 3)
        out.append(triple_of(r, rem))
    return tuple(reversed(out))


def ad_basis(r: int, g: int) -> Iterator[Key]:
    for i in range(r ** (3 * g)):
        yield ad_tuple(r, g, i)


# ---------------------------------------------------------------------------
# Hopf-form action


@lru_cache(maxsize=None)
def _ad_mono(r: int, a: Triple, y: Triple) -> dict[Triple, CycScalar]:
    """a_(1) y S(a_(2)) for basis monomials a, y."""
    out: dict[Triple, CycScalar] = {}
    for (a1, a2), v in coproduct_mono(r, a).items():
        left = prod_mono(r, a1, y)
        if not left:
            continue
        s = antipode_mono(r, a2)
        for t, ct in left.items():
            for u, cu in s.items():
                for w, cw in prod_mono(r, t, u).items():
                    add_into(out, w, v * ct * cu * cw)
    return out


def adjoint_act_generic(x: AlgElem, y: AdVector) -> AdVector:
    """x |> y through the iterated coproduct, each leg acting adjointly on its factor."""
    if x.r != y.r:
        raise ValueError(f"mismatched r: {x.r} vs {y.r}")
    r, g = y.r, y.g
    dx = iterated_coproduct(x, g)
    out: dict[Key, CycScalar] = {}
    for legs, c in dx.terms.items():
        for key, v in y.terms.items():
            partial: dict[Key, CycScalar] = {(): c * v}
            for a, t in zip(legs, key):
                act = _ad_mono(r, a, t)
                if not act:
                    partial = {}
                    break
                partial = {pk + (s,): pv * cs for pk, pv in partial.items() for s, cs in act.items()}
            for k, val in partial.items():
                add_into(out, k, val)
    return AdVector(r, g, out)


# ---------------------------------------------------------------------------
# closed forms


def _z(r: int, k: int) -> CycScalar:
    return zeta(r, k)


def _closed_E(r: int, key: Key) -> dict[Key, CycScalar]:
    out: dict[Key, CycScalar] = {}
    g = len(key)
    for j in range(g):
        l, m, n = key[j]
        pre = 2 * sum(key[k][0] - key[k][2] for k in range(j + 1, g))

        def put(t: Triple, c: CycScalar) -> None:
            add_into(out, key[:j] + (t,) + key[j + 1 :], c)

        if l + 1 < r:
            put((l + 1, m, n), _z(r, pre + 2 * (m - n)))
            put((l + 1, (m + 1) % r, n), -_z(r, pre + 2 * (m - n + 1)))
        if n >= 1:
            put((l, m, n - 1), -(qbrace(2 * m - n + 1, r) * _z(r, pre + 2 * (m - n + 1))))
    return out


def _closed_F1(r: int, key: Key) -> dict[Key, CycScalar]:
    out: dict[Key, CycScalar] = {}
    g = len(key)
    for j in range(g):
        l, m, n = key[j]
        pre = -2 * sum(key[k][0] - key[k][2] for k in range(j))

        def put(t: Triple, c: CycScalar) -> None:
            add_into(out, key[:j] + (t,) + key[j + 1 :], c)

        qn = qint(n + 1, r)
        if n + 1 < r:
            put((l, m, n + 1), -(qn * _z(r, pre - 2 * (l - n))))
            put((l, (m + 1) % r, n + 1), qn * _z(r, pre))
        else:
            assert qn.is_zero(), "dropped F^(r) term with nonzero coefficient"
        if l >= 1:
            put((l - 1, m, n), -(qint(l, r) * qbrace(l - 2 * m - 1, r) * _z(r, pre)))
    return out


def _closed_K(r: int, key: Key) -> dict[Key, CycScalar]:
    return {key: _z(r, 2 * sum(t[0] - t[2] for t in key))}


_CLOSED = {"E": _closed_E, "F1": _closed_F1, "K": _closed_K}


def adjoint_act_closed(gen: str, y: AdVector) -> AdVector:
    """The closed formulas for E, F1 and K acting on ad^{(x)g}."""
    if gen not in _CLOSED:
        raise ValueError(f"generator must be one of {GENERATORS}, got {gen!r}")
    fn = _CLOSED[gen]
    out: dict[Key, CycScalar] = {}
    for key, v in y.terms.items():
        for k, c in fn(y.r, key).items():
            add_into(out, k, v * c)
    return AdVector(y.r, y.g, out)


def generator_element(gen: str, r: int) -> AlgElem:
    return {"E": AlgElem.E, "F1": AlgElem.F1, "K": AlgElem.K}[gen](r)


@lru_cache(maxsize=None)
def generator_operator(gen: str, g: int, r: int, route: str = "closed") -> SparseOperator:
    """The matrix of a generator on ad^{(x)g}, built column by column."""
    one = CycScalar.from_int(r, 1)
    x = generator_element(gen, r)

    def column(i: int) -> dict[int, CycScalar]:
        e = AdVector.basis_vector(r, ad_tuple(r, g, i))
        y = adjoint_act_closed(gen, e) if route == "closed" else adjoint_act_generic(x, e)
        return y.to_column()

    return SparseOperator.from_columns(r ** (3 * g), column, one)


def matrix_to_json(op: SparseOperator, r: int, g: int, basis_name: str = "ETF-lex") -> dict:
    return {
        "r": r,
        "g": g,
        "basis": basis_name,
        "entries": [[i, j, v.to_json()] for i, j, v in op.entries()],
    }


# ---------------------------------------------------------------------------
# suite


def adjoint_suite(g: int, r: int, samples: int = 20, seed: int = 0) -> Report:
    rep = Report("adjoint", {"g": g, "r": r})
    dim = r ** (3 * g)
    for gen in GENERATORS:
        x = generator_element(gen, r)
        rep.add(
            check_all(
                f"closed {gen} action = Hopf-form action",
                (
                    (ad_tuple(r, g, i), lambda i=i, x=x, gen=gen: adjoint_act_closed(gen, AdVector.basis_vector(r, ad_tuple(r, g, i)))
                     == adjoint_act_generic(x, AdVector.basis_vector(r, ad_tuple(r, g, i))))
                    for i in range(dim)
                ),
            )
        )
    E, F, K = (generator_operator(s, g, r) for s in GENERATORS)
    Kinv = K.inverse()
    I = SparseOperator.identity(dim, CycScalar.from_int(r, 1))
    zero = SparseOperator(dim, {}, I.one)
    rep.add(check_all("[E, F1] = K - K^{-1}", [("ops", lambda: E @ F - F @ E == K - Kinv)]))
    rep.add(check_all("K E K^{-1} = zeta^2 E", [("ops", lambda: K @ E @ Kinv == E.scale(zeta(r, 2)))]))
    rep.add(check_all("K F1 K^{-1} = zeta^-2 F1", [("ops", lambda: K @ F @ Kinv == F.scale(zeta(r, -2)))]))
    rep.add(check_all("K^r = 1", [("ops", lambda: K ** r == I)]))
    rep.add(check_all("E^r = 0", [("ops", lambda: E ** r == zero)]))
    rep.add(check_all("F1^r = 0", [("ops", lambda: F ** r == zero)]))

    rng = random.Random(seed)
    cases = []
    for s in range(samples):
        t1 = triple_of(r, rng.randrange(r ** 3))
        t2 = triple_of(r, rng.randrange(r ** 3))
        key = ad_tuple(r, g, rng.randrange(dim))
        cases.append((t1, t2, key))

    def composed(t1: Triple, t2: Triple, key: Key) -> bool:
        x1, x2 = AlgElem.monomial(r, *t1), AlgElem.monomial(r, *t2)
        y = AdVector.basis_vector(r, key)
        return adjoint_act_generic(x1 * x2, y) == adjoint_act_generic(x1, adjoint_act_generic(x2, y))

    rep.add(check_all("(x x') |> y = x |> (x' |> y)", ((c, lambda c=c: composed(*c)) for c in cases)))
    return rep
