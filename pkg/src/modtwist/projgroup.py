"""Exact arithmetic in GL2/PGL2/PSL2 over a prime field.

``Mat2`` is a plain 2x2 matrix mod p; ``ProjMat`` is a projective class with a
canonical representative (first nonzero entry in row-major order scaled to 1)
plus the square class of the determinant, which is well defined mod scalars.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .arith import is_prime, kronecker, least_nonsquare


@dataclass(frozen=True)
class Mat2:
    """An invertible 2x2 matrix over F_p, entries reduced mod p."""

    a: int
    b: int
    c: int
    d: int
    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"Mat2: p = {self.p} is not prime")
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, getattr(self, name) % self.p)
        if self.det == 0:
            raise ValueError(f"Mat2: singular matrix {self.entries} mod {self.p}")

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    def __mul__(self, other: "Mat2") -> "Mat2":
        if self.p != other.p:
            raise ValueError("Mat2: mixed characteristics")
        p = self.p
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            p,
        )

    def inv(self) -> "Mat2":
        di = pow(self.det, -1, self.p)
        return Mat2(self.d * di, -self.b * di, -self.c * di, self.a * di, self.p)

    def scale(self, s: int) -> "Mat2":
        return Mat2(self.a * s, self.b * s, self.c * s, self.d * s, self.p)

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d, self.p)

    def hat(self) -> "Mat2":
        """The involution (a, b, c, d) -> (d, c, b, a), conjugation by
        [[0, 1], [1, 0]]; it is multiplicative."""
        return Mat2(self.d, self.c, self.b, self.a, self.p)


class ProjMat:
    """Class of an invertible 2x2 matrix over F_p modulo scalars.

    The canonical representative has its first nonzero row-major entry equal
    to 1.  ``det_class`` is +1 or -1, the Legendre symbol of any
    representative's determinant.
    """

    __slots__ = ("rep", "p", "det_class", "_hash")

    def __init__(self, a: int, b: int, c: int, d: int, p: int):
        a, b, c, d = a % p, b % p, c % p, d % p
        det = (a * d - b * c) % p
        if det == 0:
            raise ValueError(f"ProjMat: singular matrix {(a, b, c, d)} mod {p}")
        for x in (a, b, c, d):
            if x:
                s = pow(x, -1, p)
                break
        self.rep = (a * s % p, b * s % p, c * s % p, d * s % p)
        self.p = p
        self.det_class = kronecker(det, p)
        self._hash = hash((self.rep, p))

    @classmethod
    def identity(cls, p: int) -> "ProjMat":
        return cls(1, 0, 0, 1, p)

    @classmethod
    def of(cls, m: Mat2) -> "ProjMat":
        return cls(*m.entries, m.p)

    def mat(self) -> Mat2:
        """The canonical representative as a Mat2."""
        return Mat2(*self.rep, self.p)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProjMat) and self.rep == other.rep and self.p == other.p

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "ProjMat") -> bool:
        return self.rep < other.rep

    def __repr__(self) -> str:
        a, b, c, d = self.rep
        return f"ProjMat([[{a},{b}],[{c},{d}]] mod {self.p})"

    def __mul__(self, other: "ProjMat") -> "ProjMat":
        if self.p != other.p:
            raise ValueError("ProjMat: mixed characteristics")
        a, b, c, d = self.rep
        e, f, g, h = other.rep
        return ProjMat(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, self.p)

    def inverse(self) -> "ProjMat":
        a, b, c, d = self.rep
        return ProjMat(d, -b, -c, a, self.p)

    def __pow__(self, n: int) -> "ProjMat":
        if n < 0:
            return self.inverse() ** (-n)
        result = ProjMat.identity(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def hat(self) -> "ProjMat":
        a, b, c, d = self.rep
        return ProjMat(d, c, b, a, self.p)

    def transpose(self) -> "ProjMat":
        a, b, c, d = self.rep
        return ProjMat(a, c, b, d, self.p)

    def conj_by(self, h: "ProjMat") -> "ProjMat":
        """h^-1 * self * h."""
        return h.inverse() * self * h

    def order(self) -> int:
        n = 1
        g = self
        ident = ProjMat.identity(self.p)
        while g != ident:
            g = g * self
            n += 1
            if n > self.p * (self.p * self.p - 1):
                raise RuntimeError("order: runaway loop")
        return n

    def is_identity(self) -> bool:
        return self.rep == (1, 0, 0, 1)


def proj_normalize(m: Mat2) -> ProjMat:
    return ProjMat.of(m)


def in_psl2(g: ProjMat) -> bool:
    return g.det_class == 1


def hat(m: Mat2) -> Mat2:
    return m.hat()


@dataclass(frozen=True)
class MatGroup:
    """A finite set of ProjMat closед under multiplication, with generators."""

    p: int
    elements: frozenset
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: ProjMat) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def is_subgroup_of(self, other: "MatGroup") -> bool:
        return self.elements <= other.elements

    def conjugacy_class(self, g: ProjMat) -> frozenset:
        return frozenset(g.conj_by(h) for h in self.elements)

    def involutions(self) -> list[ProjMat]:
        return [g for g in sorted(self.elements) if not g.is_identity() and (g * g).is_identity()]


def closure(gens: Iterable[ProjMat]) -> MatGroup:
    """Subgroup generated by ``gens`` (breadth-first closure)."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("closure: need at least one generator")
    p = gens[0].p
    for g in gens:
        if g.p != p:
            raise ValueError("closure: mixed characteristics")
    seen = {ProjMat.identity(p)}
    frontier = [ProjMat.identity(p)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return MatGroup(p, frozenset(seen), gens)


@lru_cache(maxsize=None)
def pgl2(p: int) -> MatGroup:
    """The full group PGL2(F_p), enumerated exhaustively."""
    elems = set()
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p != 0:
                        elems.add(ProjMat(a, b, c, d, p))
    v = least_nonsquare(p)
    gens = (t_matrix(p), u_matrix(p), v_matrix(p, v))
    assert len(elems) == p * (p * p - 1)
    return MatGroup(p, frozenset(elems), gens)


@lru_cache(maxsize=None)
def psl2(p: int) -> MatGroup:
    """The subgroup PSL2(F_p) of classes with square determinant."""
    full = pgl2(p)
    elems = frozenset(g for g in full.elements if g.det_class == 1)
    assert len(elems) == p * (p * p - 1) // 2
    return MatGroup(p, elems, (t_matrix(p), u_matrix(p)))


def t_matrix(p: int) -> ProjMat:
    return ProjMat(1, 1, 0, 1, p)


def u_matrix(p: int) -> ProjMat:
    return ProjMat(1, 0, 1, 1, p)


def v_matrix(p: int, v: int | None = None) -> ProjMat:
    """The order-2 class V = [[0, -v], [1, 0]] with v a non-square mod p."""
    if v is None:
        v = least_nonsquare(p)
    if kronecker(v, p) != -1:
        raise ValueError(f"v_matrix: v = {v} is a square mod {p}")
    return ProjMat(0, -v, 1, 0, p)


def centralizer(s: Iterable[ProjMat], p: int) -> MatGroup:
    """Centralizer of the set ``s`` inside PGL2(F_p)."""
    s = tuple(s)
    elems = frozenset(
        g for g in pgl2(p).elements if all(g * x == x * g for x in s)
    )
    return MatGroup(p, elems, tuple(sorted(elems)))


def center(group: MatGroup) -> MatGroup:
    elems = frozenset(
        g for g in group.elements if all(g * x == x * g for x in group.elements)
    )
    return MatGroup(group.p, elems, tuple(sorted(elems)))
