"""Dehn twist operators on ad^{(x)g}, word evaluation and relation checks."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .adjoint import ad_index
from .checks import Check, Report, check_all
from .linalg import Mismatch, Proportional, SparseOperator, add_into
from .scalars import CycScalar, qbinom, qbrace_falling, qmultinom, zeta
from .uqsl2 import (
    Triple,
    antipode_mono,
    basis,
    index_of,
    lambda_mono,
    prod_mono,
    ribbon_data,
    triple_of,
)

Builder = Callable[[str, int, int], SparseOperator]


# ---------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class Token:
    kind: str  # "a", "b" or "g"
    index: int
    exp: int = 1

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.name if self.exp == 1 else f"{self.name}^{self.exp}"


@dataclass(frozen=True)
class MCGWord:
    """A word in the twist generators; the word f1 f2 ... fk means f1 o f2 o ... o fk."""

    tokens: tuple[Token, ...]
    g: int

    def __post_init__(self) -> None:
        for t in self.tokens:
            validate_generator(t.name, self.g)

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.tokens)

    @staticmethod
    def parse(text: str, g: int) -> MCGWord:
        return MCGWord(tuple(_parse(text)), g)

    def inverse(self) -> MCGWord:
        return MCGWord(tuple(Token(t.kind, t.index, -t.exp) for t in reversed(self.tokens)), self.g)

    def __mul__(self, other: MCGWord) -> MCGWord:
        return MCGWord(self.tokens + other.tokens, self.g)

    def __pow__(self, e: int) -> MCGWord:
        w = self if e >= 0 else self.inverse()
        return MCGWord(w.tokens * abs(e), self.g)


_TOKEN = re.compile(r"\(|\)(?:\^(-?\d+))?|([abg])(\d+)(?:\^(-?\d+))?")


def _parse(text: str) -> list[Token]:
    stack: list[list[Token]] = [[]]
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        s = m.group(0)
        if s == "(":
            stack.append([])
        elif s.startswith(")"):
            if len(stack) == 1:
                raise ValueError("unbalanced parenthesis")
            group = stack.pop()
            e = int(m.group(1)) if m.group(1) else 1
            body = group if e >= 0 else [Token(t.kind, t.index, -t.exp) for t in reversed(group)]
            stack[-1].extend(body * abs(e))
        else:
            e = int(m.group(4)) if m.group(4) else 1
            tok = Token(m.group(2), int(m.group(3)), 1 if e > 0 else -1)
            stack[-1].extend([tok] * abs(e))
        pos = m.end()
    if len(stack) != 1:
        raise ValueError("unbalanced parenthesis")
    return stack[0]


def validate_generator(name: str, g: int) -> tuple[str, int]:
    m = re.fullmatch(r"([abg])(\d+)", name)
    if not m:
        raise ValueError(f"unknown generator {name!r}")
    kind, j = m.group(1), int(m.group(2))
    top = g - 1 if kind == "g" else g
    if not 1 <= j <= top:
        raise ValueError(f"generator {name} is out of range for g={g}")
    return kind, j


# ---------------------------------------------------------------------------
# local operators


def _one(r: int) -> CycScalar:
    return CycScalar.from_int(r, 1)


def local_operator(r: int, width: int, fn: Callable[[tuple[Triple, ...]], dict]) -> SparseOperator:
    """An operator on ad^{(x)width} from its action on basis tuples."""
    from .adjoint import ad_tuple

    dim = r ** (3 * width)
    cols = {}
    for i in range(dim):
        col = {}
        for key, c in fn(ad_tuple(r, width, i)).items():
            add_into(col, ad_index(r, key), c)
        cols[i] = col
    return SparseOperator(dim, cols, _one(r))


def embed(op: SparseOperator, r: int, position: int, width: int, g: int) -> SparseOperator:
    """I (x) op (x) I with op acting on factors position .. position+width-1 (0-based)."""
    one = _one(r)
    out = op
    if position > 0:
        out = SparseOperator.kron(SparseOperator.identity(r ** (3 * position), one), out)
    rest = g - position - width
    if rest > 0:
        out = SparseOperator.kron(out, SparseOperator.identity(r ** (3 * rest), one))
    return out


# Hopf forms -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _hopf_alpha_local(r: int) -> SparseOperator:
    vinv = ribbon_data(r).ribbon_v_inv().terms

    def fn(key):
        out: dict = {}
        for a, ca in vinv.items():
            for t, c in prod_mono(r, a, key[0]).items():
                add_into(out, (t,), ca * c)
        return out

    return local_operator(r, 1, fn)


@lru_cache(maxsize=None)
def _hopf_beta_local(r: int) -> SparseOperator:
    # group Delta(v) by its second leg: x -> sum_t2 lambda'(t2 x) W_t2 with W_t2 = sum c S(t1)
    grouped: dict[Triple, dict[Triple, CycScalar]] = {}
    for (t1, t2), c in ribbon_data(r).coproduct_v().terms.items():
        w = grouped.setdefault(t2, {})
        for s, cs in antipode_mono(r, t1).items():
            add_into(w, s, c * cs)

    def fn(key):
        x = key[0]
        out: dict = {}
        for t2, w in grouped.items():
            if t2[0] + x[0] < r - 1 or t2[2] + x[2] < r - 1:
                continue
            lam = CycScalar.from_int(r, 0)
            for t, c in prod_mono(r, t2, x).items():
                if t[0] == r - 1 and t[2] == r - 1:
                    lam = lam + c * lambda_mono(r, t)
            if lam.is_zero():
                continue
            for s, cs in w.items():
                add_into(out, (s,), lam * cs)
        return out

    return local_operator(r, 1, fn)


@lru_cache(maxsize=None)
def _hopf_gamma_local(r: int) -> SparseOperator:
    # (x, y) -> x S(w1) (x) w2 y summed over Delta(v^{-1}) = w1 (x) w2
    pairs: dict[Triple, dict[Triple, CycScalar]] = {}
    for (w1, w2), c in ribbon_data(r).coproduct_v_inv().terms.items():
        for s, cs in antipode_mono(r, w1).items():
            add_into(pairs.setdefault(w2, {}), s, c * cs)

    def fn(key):
        x, y = key
        out: dict = {}
        for w2, left in pairs.items():
            right = prod_mono(r, w2, y)
            if not right:
                continue
            for s, cs in left.items():
                lx = prod_mono(r, x, s)
                for t1, c1 in lx.items():
                    for t2, c2 in right.items():
                        add_into(out, (t1, t2), cs * c1 * c2)
        return out

    return local_operator(r, 2, fn)


@lru_cache(maxsize=None)
def twist_hopf(gen: str, g: int, r: int) -> SparseOperator:
    """A twist generator acting through v^{-1}, lambda' and the coproduct of v^{+-1}."""
    kind, j = validate_generator(gen, g)
    if kind == "a":
        return embed(_hopf_alpha_local(r), r, j - 1, 1, g)
    if kind == "b":
        return embed(_hopf_beta_local(r), r, j - 1, 1, g)
    return embed(_hopf_gamma_local(r), r, j - 1, 2, g)


# closed forms ---------------------------------------------------------------


def _z(r: int, k: int) -> CycScalar:
    return zeta(r, k)


def closed_alpha_mono(r: int, t: Triple) -> dict[Triple, CycScalar]:
    l, m, n = t
    out: dict[Triple, CycScalar] = {}
    pre = 2 * (m + 1) * m
    for i in range(r):
        if l + i >= r:
            continue
        if n + i >= r:
            assert qbinom(n + i, n, r).is_zero(), "dropped F index with nonzero coefficient"
            continue
        c = qbinom(n + i, n, r) * _z(r, pre + (i + 3) * i // 2 + 2 * m * i)
        add_into(out, (l + i, (m + i) % r, n + i), c)
    return out


def closed_beta_mono(r: int, t: Triple) -> dict[Triple, CycScalar]:
    l, m, n = t
    out: dict[Triple, CycScalar] = {}
    for i in range(l + 1):
        if n - i < 0:
            continue
        qb = qbinom(l, i, r)
        if qb.is_zero():
            continue
        for j in range(r):
            e = -(i * (i - 5)) // 2 - 2 * j * (j - 1) - 2 * i * j + (l + 2 * m - n) * i + 2 * l * j
            add_into(out, (l - i, (m + j) % r, n - i), qb * _z(r, e))
    return out


def closed_gamma_pair(r: int, x: Triple, y: Triple) -> dict[tuple[Triple, Triple], CycScalar]:
    l1, m1, n1 = x
    l2, m2, n2 = y
    out: dict = {}
    s = m1 - n1 + l2 - m2
    pre = 2 * (s + 1) * s
    for j1 in range(r):
        if l1 + j1 >= r:
            break
        for i1 in range(r - j1):
            br1 = qbrace_falling(2 * m1 - n1 + i1 + j1, i1, r)
            if br1.is_zero():
                continue
            for k2 in range(r - i1 - j1):
                K = i1 + j1 + k2
                mult = qmultinom(K, (i1, j1), r)
                if mult.is_zero():
                    continue
                for b in range(-k2, i1 + j1 + 1):
                    f1 = n1 + j1 - b
                    if f1 < 0 or f1 >= r:
                        continue
                    qb3 = qbinom(n1 - b + j1, n1 - i1, r)
                    if qb3.is_zero():
                        continue
                    sign = -1 if b % 2 else 1
                    for i2 in range(b + k2 + 1):
                        e2 = l2 - b + i2
                        f2 = n2 + i2
                        if not (0 <= e2 < r) or f2 >= r:
                            continue
                        c = (
                            mult
                            * qbinom(l2 + k2, b - i2 + k2, r)
                            * qb3
                            * qbinom(n2 + i2, n2, r)
                            * br1
                            * qbrace_falling(-l2 + 2 * m2 + b, b - i2 + k2, r)
                        )
                        if c.is_zero():
                            continue
                        e = (K + 3) * K // 2 - (K - 1) * b + 2 * (m1 - n1 + 2 * (l2 - m2)) * (i1 + j1) + 2 * (l2 - m2) * k2
                        key = ((l1 + j1, (m1 + j1) % r, f1), (e2, (m2 + i2) % r, f2))
                        add_into(out, key, c * _z(r, pre + e) * sign)
    return out


@lru_cache(maxsize=None)
def _closed_local(kind: str, r: int) -> SparseOperator:
    if kind == "a":
        return local_operator(r, 1, lambda k: {(t,): c for t, c in closed_alpha_mono(r, k[0]).items()})
    if kind == "b":
        return local_operator(r, 1, lambda k: {(t,): c for t, c in closed_beta_mono(r, k[0]).items()})
    return local_operator(r, 2, lambda k: closed_gamma_pair(r, k[0], k[1]))


@lru_cache(maxsize=None)
def twist_closed(gen: str, g: int, r: int) -> SparseOperator:
    """A twist generator from the closed formulas (alpha exact, beta and gamma up to scalar)."""
    kind, j = validate_generator(gen, g)
    width = 2 if kind == "g" else 1
    return embed(_closed_local(kind, r), r, j - 1, width, g)


# ---------------------------------------------------------------------------
# words and relations


def generator_names(g: int) -> list[str]:
    return [f"a{j}" for j in range(1, g + 1)] + [f"b{j}" for j in range(1, g + 1)] + [f"g{k}" for k in range(1, g)]


@lru_cache(maxsize=None)
def _inverse_cached(builder: Builder, name: str, g: int, r: int) -> SparseOperator:
    return builder(name, g, r).inverse()


def evaluate_word(w: MCGWord, r: int, builder=twist_closed) -> SparseOperator:
    """Compose generator operators; the leftmost token is applied last."""
    dim = r ** (3 * w.g) if builder in (twist_closed, twist_hopf) else None
    out: SparseOperator | None = None
    for t in w.tokens:
        op = builder(t.name, w.g, r) if t.exp > 0 else _inverse_cached(builder, t.name, w.g, r)
        out = op if out is None else out @ op
    if out is None:
        if dim is None:
            dim = builder(generator_names(w.g)[0], w.g, r).dim
        return SparseOperator.identity(dim, _one(r))
    return out


def relation_check(kind: str, x: str, y: str, g: int, r: int, builder=twist_closed) -> Proportional | Mismatch:
    """braid: x y x = c y x y; commute: x y = c y x."""
    X, Y = builder(x, g, r), builder(y, g, r)
    if kind == "braid":
        return (X @ Y @ X).compare_projective(Y @ X @ Y)
    if kind == "commute":
        return (X @ Y).compare_projective(Y @ X)
    raise ValueError(f"unknown relation kind {kind!r}")


def relation_table(g: int) -> list[tuple[str, str, str]]:
    """Braid relations for intersecting curves and commutations for disjoint ones."""
    rels = []
    for j in range(1, g + 1):
        rels.append(("braid", f"a{j}", f"b{j}"))
    for k in range(1, g):
        rels.append(("braid", f"b{k}", f"g{k}"))
        rels.append(("braid", f"b{k + 1}", f"g{k}"))
    names = generator_names(g)
    intersecting = {(x, y) for _, x, y in rels} | {(y, x) for _, x, y in rels}
    for i, x in enumerate(names):
        for y in names[i + 1 :]:
            if (x, y) not in intersecting:
                rels.append(("commute", x, y))
    return rels


def integrality_check(M: SparseOperator) -> tuple[bool, CycScalar | None, str]:
    """Search c = 1/e over the nonzero entries e of M so that c M and (c M)^{-1}
    have entries in Z[zeta]."""
    if M.is_zero():
        return False, None, "zero operator"
    Minv = M.inverse()
    seen: set = set()
    last = ""
    for _, _, e in M.entries():
        if e in seen:
            continue
        seen.add(e)
        c = e.inv()
        bad = next((v for _, _, v in M.entries() if not (c * v).is_integral()), None)
        if bad is not None:
            last = f"c = 1/({e}) leaves {c * bad} in c M"
            continue
        bad = next((v for _, _, v in Minv.entries() if not (v * e).is_integral()), None)
        if bad is not None:
            last = f"c = 1/({e}) leaves {bad * e} in (c M)^-1"
            continue
        return True, c, ""
    return False, None, last


def torelli_words(g: int) -> list[MCGWord]:
    return [MCGWord.parse(f"(a{j} b{j})^6", g) for j in range(1, g + 1)]


def torelli_integrality_check(w: MCGWord, r: int, conjugate: Callable[[SparseOperator], SparseOperator] | None = None,
                              builder=twist_closed) -> tuple[bool, CycScalar | None, str]:
    M = evaluate_word(w, r, builder)
    if conjugate is not None:
        M = conjugate(M)
    return integrality_check(M)


# ---------------------------------------------------------------------------
# suite


def quantum_mcg_suite(g: int, r: int, relations: bool = True) -> Report:
    rep = Report("quantum-mcg", {"g": g, "r": r})
    for name in generator_names(g):
        closed, hopf = twist_closed(name, g, r), twist_hopf(name, g, r)
        if name.startswith("a"):
            rep.add(check_all(f"closed {name} = Hopf form exactly", [(name, lambda c=closed, h=hopf: c == h)]))
        else:
            res = closed.compare_projective(hopf)
            rep.add(Check(f"closed {name} proportional to Hopf form", isinstance(res, Proportional), 1, _describe(res)))
    if relations:
        for kind, x, y in relation_table(g):
            res = relation_check(kind, x, y, g, r)
            rep.add(Check(f"{kind}({x}, {y})", isinstance(res, Proportional), 1, _describe(res)))
    if g == 1 and r in (3, 5):
        A = twist_closed("a1", g, r)
        I = SparseOperator.identity(A.dim, _one(r))
        res = (A ** r).compare_projective(I)
        rep.add(Check("rho(alpha)^r is not proportional to 1", isinstance(res, Mismatch), 1, _describe(res)))
    return rep


def _describe(res: Proportional | Mismatch) -> str:
    if isinstance(res, Proportional):
        return f"witness {res.scalar}"
    return f"mismatch at ({res.row}, {res.col}): {res.left} vs {res.right}"
