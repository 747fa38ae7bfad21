"""The discrete Heisenberg group H_g, its group ring, the clock-and-shift
matrices A_j, B_j and the twist matrices psi.

Group elements are kept as words q^c alpha^a beta^b. Moving beta_j past
alpha_j costs q^{-4}, so

    (q^c alpha^a beta^b)(q^c' alpha^a' beta^b') = q^{c + c' - 4 b.a'} alpha^{a+a'} beta^{b+b'}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .checks import Check, Report, check_all
from .linalg import SparseOperator, add_into, rank_of_rows
from .scalars import CycScalar, LaurentScalar, zeta


def _dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


@dataclass(frozen=True, order=True)
class HeisWord:
    c: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def g(self) -> int:
        return len(self.a)

    @staticmethod
    def identity(g: int) -> HeisWord:
        return HeisWord(0, (0,) * g, (0,) * g)

    @staticmethod
    def q(g: int, e: int = 1) -> HeisWord:
        return HeisWord(e, (0,) * g, (0,) * g)

    @staticmethod
    def alpha(g: int, j: int, e: int = 1) -> HeisWord:
        a = [0] * g
        a[j - 1] = e
        return HeisWord(0, tuple(a), (0,) * g)

    @staticmethod
    def beta(g: int, j: int, e: int = 1) -> HeisWord:
        b = [0] * g
        b[j - 1] = e
        return HeisWord(0, (0,) * g, tuple(b))

    def __mul__(self, other: HeisWord) -> HeisWord:
        if other.g != self.g:
            raise ValueError("mismatched g")
        return HeisWord(
            self.c + other.c - 4 * _dot(self.b, other.a),
            tuple(x + y for x, y in zip(self.a, other.a)),
            tuple(x + y for x, y in zip(self.b, other.b)),
        )

    def inverse(self) -> HeisWord:
        # (alpha^a beta^b)^{-1} = beta^{-b} alpha^{-a} = q^{-4 b.a} alpha^{-a} beta^{-b}
        return HeisWord(-self.c - 4 * _dot(self.b, self.a), tuple(-x for x in self.a), tuple(-x for x in self.b))

    def __pow__(self, e: int) -> HeisWord:
        base = self if e >= 0 else self.inverse()
        out = HeisWord.identity(self.g)
        for _ in range(abs(e)):
            out = out * base
        return out

    def matrix_coords(self) -> tuple[tuple[int, ...], tuple[int, ...], Fraction]:
        """Coordinates (a, b, z) in the unipotent matrix picture with law
        z'' = z + z' + a.b', where q is the central element z = 1/4."""
        return self.a, self.b, Fraction(self.c, 4) + _dot(self.a, self.b)

    def to_json(self) -> dict:
        return {"c": self.c, "a": list(self.a), "b": list(self.b)}

    @staticmethod
    def from_json(data: Mapping) -> HeisWord:
        return HeisWord(int(data["c"]), tuple(data["a"]), tuple(data["b"]))


def matrix_coords_product(x, y):
    (a, b, z), (a2, b2, z2) = x, y
    return tuple(p + s for p, s in zip(a, a2)), tuple(p + s for p, s in zip(b, b2)), z + z2 + _dot(a, b2)


class HeisRingElem:
    """A finite integer combination of Heisenberg words."""

    __slots__ = ("g", "terms")

    def __init__(self, g: int, terms: Mapping[HeisWord, int] | None = None) -> None:
        self.g = g
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @staticmethod
    def word(w: HeisWord, c: int = 1) -> HeisRingElem:
        return HeisRingElem(w.g, {w: c})

    @staticmethod
    def one(g: int) -> HeisRingElem:
        return HeisRingElem.word(HeisWord.identity(g))

    @staticmethod
    def zero(g: int) -> HeisRingElem:
        return HeisRingElem(g)

    @staticmethod
    def from_q(p: LaurentScalar | int, g: int) -> HeisRingElem:
        """Embed an integer Laurent polynomial in q (q is central in H_g)."""
        if isinstance(p, int):
            return HeisRingElem.word(HeisWord.identity(g), p)
        out: dict[HeisWord, int] = {}
        for (e,), c in p.terms.items():
            if not isinstance(c, int):
                raise TypeError("only integer Laurent polynomials embed in Z[H_g]")
            out[HeisWord.q(g, e)] = c
        return HeisRingElem(g, out)

    def _check(self, other: HeisRingElem) -> None:
        if other.g != self.g:
            raise ValueError(f"mismatched g: {self.g} vs {other.g}")

    def __add__(self, other: HeisRingElem) -> HeisRingElem:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            add_into(out, w, c)
        return HeisRingElem(self.g, out)

    def __neg__(self) -> HeisRingElem:
        return HeisRingElem(self.g, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: HeisRingElem) -> HeisRingElem:
        return self + (-other)

    def __mul__(self, other: HeisRingElem | int) -> HeisRingElem:
        if isinstance(other, int):
            return HeisRingElem(self.g, {w: c * other for w, c in self.terms.items()})
        self._check(other)
        out: dict[HeisWord, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                add_into(out, w1 * w2, c1 * c2)
        return HeisRingElem(self.g, out)

    __rmul__ = __mul__  # only used with integers on the left

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeisRingElem):
            return NotImplemented
        return self.g == other.g and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.g, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            parts.append(f"{c}*q^{w.c}a^{list(w.a)}b^{list(w.b)}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"word": w.to_json(), "coeff": c} for w, c in sorted(self.terms.items())]


def heis_mul(x: HeisRingElem, y: HeisRingElem) -> HeisRingElem:
    return x * y


# ---------------------------------------------------------------------------
# braid generators and their images in Z[H_g]


@dataclass(frozen=True)
class BraidGenerator:
    symbol: str  # sigma, alpha, beta, alpha~, gamma, delta
    index: int
    exp: int = 1

    def __str__(self) -> str:
        s = f"{self.symbol}{self.index}"
        return s if self.exp == 1 else f"{s}^{self.exp}"

    def inverse(self) -> BraidGenerator:
        return BraidGenerator(self.symbol, self.index, -self.exp)


BraidWord = tuple[BraidGenerator, ...]


def _inv_word(w: Sequence[BraidGenerator]) -> list[BraidGenerator]:
    return [t.inverse() for t in reversed(w)]


def expand_braid(gen: BraidGenerator) -> list[BraidGenerator]:
    """Rewrite a derived generator in terms of sigma, alpha, beta."""
    s, j = gen.symbol, gen.index
    if s in ("sigma", "alpha", "beta"):
        base = [BraidGenerator(s, j)]
    elif s == "alpha~":
        base = [BraidGenerator("beta", j, -1), BraidGenerator("alpha", j), BraidGenerator("beta", j)]
    elif s == "gamma":
        base = [BraidGenerator("alpha", j + 1)] + _inv_word(expand_braid(BraidGenerator("alpha~", j)))
    elif s == "delta":
        base = []
        for k in range(j - 1, 0, -1):
            base += expand_braid(BraidGenerator("gamma", k))
        base.append(BraidGenerator("alpha", 1))
    else:
        raise ValueError(f"unknown braid generator {s!r}")
    if gen.exp >= 0:
        return base * gen.exp
    return _inv_word(base) * (-gen.exp)


def braid_to_heis(word: Iterable[BraidGenerator], g: int) -> HeisRingElem:
    """The ring map sending sigma to -q^{-2}, alpha_j to alpha_j, beta_j to beta_j."""
    out = HeisRingElem.one(g)
    for gen in word:
        for t in expand_braid(gen):
            if t.symbol == "sigma":
                x = HeisRingElem.word(HeisWord.q(g, -2 * t.exp), -1 if t.exp % 2 else 1)
            elif t.symbol == "alpha":
                x = HeisRingElem.word(HeisWord.alpha(g, t.index, t.exp))
            else:
                x = HeisRingElem.word(HeisWord.beta(g, t.index, t.exp))
            out = out * x
    return out


def braid_pushforward(twist: str, braid: BraidGenerator) -> list[BraidGenerator]:
    """Image of a braid generator (sigma_i, beta_j or delta_j) under a twist."""
    kind, j = twist[0], int(twist[1:])
    if braid.symbol not in ("sigma", "beta", "delta") or braid.exp != 1:
        raise ValueError(f"no pushforward rule for {braid}")
    s, i = braid.symbol, braid.index
    if kind == "a" and s == "beta" and i == j:
        return [BraidGenerator("alpha", j), BraidGenerator("beta", j)]
    if kind == "b" and s == "delta" and i == j:
        return [BraidGenerator("beta", j, -1), BraidGenerator("delta", j)]
    if kind == "g" and s == "beta" and i == j:
        return [BraidGenerator("beta", j), BraidGenerator("gamma", j, -1)]
    if kind == "g" and s == "beta" and i == j + 1:
        return [BraidGenerator("gamma", j), BraidGenerator("beta", j + 1)]
    if kind not in ("a", "b", "g"):
        raise ValueError(f"unknown twist {twist!r}")
    return [braid]


# ---------------------------------------------------------------------------
# matrices


def _one(r: int) -> CycScalar:
    return CycScalar.from_int(r, 1)


def _digits(r: int, g: int, i: int) -> list[int]:
    out = []
    for _ in range(g):
        i, d = divmod(i, r)
        out.append(d)
    return out[::-1]


def _undigits(r: int, d: Sequence[int]) -> int:
    i = 0
    for x in d:
        i = i * r + x % r
    return i


@lru_cache(maxsize=None)
def schrodinger_matrices(g: int, r: int) -> tuple[tuple[SparseOperator, SparseOperator], ...]:
    """(A_j, B_j) for j = 1..g; factor j is the j-th digit with j = 1 outermost,
    A_j v_c = zeta^{4 c_j} v_c and B_j v_c = v_{c + e_j}."""
    dim = r ** g
    out = []
    for j in range(g):
        A = {i: {i: zeta(r, 4 * _digits(r, g, i)[j])} for i in range(dim)}
        B = {}
        for i in range(dim):
            d = _digits(r, g, i)
            d[j] += 1
            B[i] = {_undigits(r, d): _one(r)}
        out.append((SparseOperator(dim, A, _one(r)), SparseOperator(dim, B, _one(r))))
    return tuple(out)


def _A(g: int, r: int, j: int, e: int = 1) -> SparseOperator:
    A = schrodinger_matrices(g, r)[j - 1][0]
    return A ** (e % r)


def _B(g: int, r: int, j: int, e: int = 1) -> SparseOperator:
    B = schrodinger_matrices(g, r)[j - 1][1]
    return B ** (e % r)


def heis_word_matrix(w: HeisWord, r: int) -> SparseOperator:
    """q^c alpha^a beta^b -> zeta^c A^a B^b."""
    g = w.g
    M = SparseOperator.identity(r ** g, _one(r)).scale(zeta(r, w.c))
    for j in range(1, g + 1):
        if w.a[j - 1] % r:
            M = M @ _A(g, r, j, w.a[j - 1])
    for j in range(1, g + 1):
        if w.b[j - 1] % r:
            M = M @ _B(g, r, j, w.b[j - 1])
    return M


def heis_specialize(x: HeisRingElem, g: int, r: int) -> SparseOperator:
    out = SparseOperator(r ** g, {}, _one(r))
    for w, c in sorted(x.terms.items()):
        out = out + heis_word_matrix(w, r).scale(CycScalar.from_int(r, c))
    return out


def braid_matrix(word: Iterable[BraidGenerator], g: int, r: int) -> SparseOperator:
    return heis_specialize(braid_to_heis(word, g), g, r)


def _sum_powers(terms: Iterable[tuple[int, SparseOperator]], r: int, scale: CycScalar | None = None) -> SparseOperator:
    out: SparseOperator | None = None
    for e, M in terms:
        x = M.scale(zeta(r, e))
        out = x if out is None else out + x
    assert out is not None
    return out.scale(scale) if scale is not None else out


def psi_matrix(gen: str, g: int, r: int) -> SparseOperator:
    kind, j = gen[0], int(gen[1:])
    if kind == "a":
        return _sum_powers(((-2 * l * (l - 1), _A(g, r, j, l)) for l in range(r)), r)
    if kind == "b":
        return _sum_powers(((-2 * (l + 1) * l, _B(g, r, j, l)) for l in range(r)), r)
    if kind == "g":
        return _sum_powers(((-2 * (l + 1) * l, _A(g, r, j, -l) @ _A(g, r, j + 1, l)) for l in range(r)), r)
    raise ValueError(f"unknown twist {gen!r}")


def psi_inverse(gen: str, g: int, r: int) -> SparseOperator:
    kind, j = gen[0], int(gen[1:])
    inv_r = CycScalar.from_rational(r, Fraction(1, r))
    if kind == "a":
        return _sum_powers(((2 * (l + 1) * l, _A(g, r, j, l)) for l in range(r)), r, inv_r)
    if kind == "b":
        return _sum_powers(((2 * l * (l - 1), _B(g, r, j, l)) for l in range(r)), r, inv_r)
    if kind == "g":
        return _sum_powers(((2 * l * (l - 1), _A(g, r, j, -l) @ _A(g, r, j + 1, l)) for l in range(r)), r, inv_r)
    raise ValueError(f"unknown twist {gen!r}")


def commutant_dimension(mats: Sequence[SparseOperator], r: int) -> int:
    """Dimension of {X : X M = M X for all M}, by exact elimination."""
    n = mats[0].dim
    rows: dict[int, dict[int, CycScalar]] = {}
    k = 0
    for M in mats:
        # (X M - M X)_{ij} = sum_k X_ik M_kj - M_ik X_kj, unknown X_ab has index a*n + b
        Mrows = M._rows()
        for i in range(n):
            for j in range(n):
                eq: dict[int, CycScalar] = {}
                for kk, v in M.column(j).items():
                    add_into(eq, i * n + kk, v)
                for kk, v in Mrows.get(i, {}).items():
                    add_into(eq, kk * n + j, -v)
                if eq:
                    rows[k] = eq
                    k += 1
    return n * n - rank_of_rows(rows)


# ---------------------------------------------------------------------------
# suite


def twist_names(g: int) -> list[str]:
    return [f"a{j}" for j in range(1, g + 1)] + [f"b{j}" for j in range(1, g + 1)] + [f"g{k}" for k in range(1, g)]


def pushforward_generators(g: int) -> list[BraidGenerator]:
    return [BraidGenerator("sigma", 1)] + [BraidGenerator("beta", j) for j in range(1, g + 1)] + [
        BraidGenerator("delta", j) for j in range(1, g + 1)
    ]


def heisenberg_suite(g: int, r: int, samples: int = 50, seed: int = 0) -> Report:
    rep = Report("heisenberg", {"g": g, "r": r})
    dim = r ** g
    one = _one(r)
    I = SparseOperator.identity(dim, one)
    mats = schrodinger_matrices(g, r)

    def pattern() -> bool:
        for j, (Aj, Bj) in enumerate(mats):
            for k, (Ak, Bk) in enumerate(mats):
                if not (Aj @ Ak == Ak @ Aj and Bj @ Bk == Bk @ Bj):
                    return False
                if j == k:
                    if Aj @ Bj != (Bj @ Aj).scale(zeta(r, 4)):
                        return False
                elif Aj @ Bk != Bk @ Aj:
                    return False
        return True

    rep.add(check_all("A_j B_j = zeta^4 B_j A_j, other pairs commute", [("mats", pattern)]))
    rep.add(check_all("A_j^r = B_j^r = 1", [("mats", lambda: all(A ** r == I and B ** r == I for A, B in mats))]))
    gens = [M for pair in mats for M in pair]
    rep.add(check_all("commutant is one-dimensional", [("mats", lambda: commutant_dimension(gens, r) == 1)]))

    def basis_action() -> bool:
        for i in range(dim):
            d = _digits(r, g, i)
            for j, (A, B) in enumerate(mats):
                if A.column(i) != {i: zeta(r, 4 * d[j])}:
                    return False
                e = list(d)
                e[j] += 1
                if B.column(i) != {_undigits(r, e): one}:
                    return False
        return True

    rep.add(check_all("basis action of A_j, B_j", [("basis", basis_action)]))

    rng = random.Random(seed)

    def rand_word() -> HeisWord:
        return HeisWord(rng.randint(-8, 8), tuple(rng.randint(-3, 3) for _ in range(g)), tuple(rng.randint(-3, 3) for _ in range(g)))

    pairs = [(rand_word(), rand_word()) for _ in range(samples)]
    rep.add(
        check_all(
            "word law matches the matrix picture",
            ((p, lambda p=p: (p[0] * p[1]).matrix_coords() == matrix_coords_product(p[0].matrix_coords(), p[1].matrix_coords())) for p in pairs),
        )
    )
    rep.add(
        check_all(
            "specialization is multiplicative on words",
            ((p, lambda p=p: heis_word_matrix(p[0] * p[1], r) == heis_word_matrix(p[0], r) @ heis_word_matrix(p[1], r)) for p in pairs[:10]),
        )
    )

    def derived() -> bool:
        ok = True
        for j in range(1, g + 1):
            ok &= braid_matrix([BraidGenerator("alpha~", j)], g, r) == _A(g, r, j).scale(zeta(r, 4))
            ok &= braid_matrix([BraidGenerator("delta", j)], g, r) == _A(g, r, j).scale(zeta(r, -4 * (j - 1)))
        for k in range(1, g):
            ok &= braid_matrix([BraidGenerator("gamma", k)], g, r) == (_A(g, r, k, -1) @ _A(g, r, k + 1)).scale(zeta(r, -4))
        ok &= braid_matrix([BraidGenerator("sigma", 1)], g, r) == I.scale(-zeta(r, -2))
        return ok

    rep.add(check_all("images of derived braid generators", [("braids", derived)]))
    rep.add(
        check_all(
            "psi(f) psi(f)^{-1} = 1",
            ((f, lambda f=f: psi_matrix(f, g, r) @ psi_inverse(f, g, r) == I) for f in twist_names(g)),
        )
    )

    def crossed(f: str, gen: BraidGenerator) -> bool:
        P = psi_matrix(f, g, r)
        lhs = P @ braid_matrix([gen], g, r)
        rhs = braid_matrix(braid_pushforward(f, gen), g, r) @ P
        return lhs == rhs

    rep.add(
        check_all(
            "crossed identity psi(f) phi(x) = phi(f_* x) psi(f)",
            (((f, str(x)), lambda f=f, x=x: crossed(f, x)) for f in twist_names(g) for x in pushforward_generators(g)),
        )
    )

    def braid_rel(x: str, y: str) -> bool:
        X, Y = psi_matrix(x, g, r), psi_matrix(y, g, r)
        from .linalg import Proportional

        return isinstance((X @ Y @ X).compare_projective(Y @ X @ Y), Proportional)

    rels = [(f"a{j}", f"b{j}") for j in range(1, g + 1)]
    rels += [(f"b{k}", f"g{k}") for k in range(1, g)] + [(f"b{k + 1}", f"g{k}") for k in range(1, g)]
    rep.add(check_all("psi braid relations", ((p, lambda p=p: braid_rel(*p)) for p in rels)))
    return rep
