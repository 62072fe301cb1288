"""Real octonion arithmetic over a fixed multiplication table.

Coordinates are 8 doubles, real part first, then the imaginary units
e1..e7.  The table follows the cyclic convention e_i e_{i+1} = e_{i+3}
(indices mod 7 in 1..7), which closes the seven quaternionic triples

    (1,2,4) (2,3,5) (3,4,6) (4,5,7) (5,6,1) (6,7,2) (7,1,3)

Any valid table would satisfy the identities implemented here; frozen
test values assume this one.
"""

import numbers

import numpy as np

__all__ = [
    "Octonion",
    "mul",
    "conj",
    "inner",
    "associator",
    "assoc3form",
    "left_mul_matrix",
]

_TRIPLES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))


def _build_table() -> np.ndarray:
    """Structure tensor t with (pq)_k = sum_ij t[i,j,k] p_i q_j."""
    t = np.zeros((8, 8, 8))
    t[0, 0, 0] = 1.0
    for i in range(1, 8):
        t[0, i, i] = 1.0
        t[i, 0, i] = 1.0
        t[i, i, 0] = -1.0
    for line in _TRIPLES:
        for x, y, z in (line, line[1:] + line[:1], line[2:] + line[:2]):
            t[x, y, z] = 1.0
            t[y, x, z] = -1.0
    return t


_TABLE = _build_table()
_TABLE.flags.writeable = False
# flattened view used by the hot multiply path
_TABLE_2D = np.ascontiguousarray(_TABLE.reshape(8, 64))
_TABLE_2D.flags.writeable = False


class Octonion:
    """A real octonion, immutable after construction."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        c = np.array(coords, dtype=float)
        if c.shape != (8,):
            raise ValueError(f"octonion needs 8 coordinates, got shape {c.shape}")
        c.flags.writeable = False
        object.__setattr__(self, "coords", c)

    @classmethod
    def from_real(cls, x: float) -> "Octonion":
        c = np.zeros(8)
        c[0] = x
        return cls(c)

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        """Basis unit e_i; unit(0) is the real identity."""
        c = np.zeros(8)
        c[i] = 1.0
        return cls(c)

    @classmethod
    def zero(cls) -> "Octonion":
        return cls(np.zeros(8))

    @property
    def real(self) -> float:
        return float(self.coords[0])

    def imag(self) -> "Octonion":
        c = self.coords.copy()
        c[0] = 0.0
        return Octonion(c)

    def conj(self) -> "Octonion":
        c = -self.coords
        c[0] = self.coords[0]
        return Octonion(c)

    def norm2(self) -> float:
        return float(self.coords @ self.coords)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))

    def inverse(self) -> "Octonion":
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroDivisionError("zero octonion has no inverse")
        return Octonion(self.conj().coords / n2)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.coords + other.coords)

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.coords - other.coords)

    def __neg__(self) -> "Octonion":
        return Octonion(-self.coords)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            lhs = (self.coords @ _TABLE_2D).reshape(8, 8)
            return Octonion(other.coords @ lhs)
        if isinstance(other, numbers.Real):
            return Octonion(self.coords * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Octonion(self.coords * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Octonion(self.coords / float(other))
        return NotImplemented

    def __repr__(self):
        terms = []
        for i, x in enumerate(self.coords):
            if x != 0.0:
                terms.append(f"{x:g}" if i == 0 else f"{x:g}*e{i}")
        return "Octonion<" + (" + ".join(terms) if terms else "0") + ">"

    def to_json(self) -> list:
        return [float(x) for x in self.coords]

    @classmethod
    def from_json(cls, data) -> "Octonion":
        if not isinstance(data, (list, tuple)) or len(data) != 8:
            raise ValueError(f"octonion JSON must be an array of 8 numbers, got {data!r}")
        return cls(data)


def mul(p: Octonion, q: Octonion) -> Octonion:
    """Octonion product p*q."""
    return p * q


def conj(p: Octonion) -> Octonion:
    """Conjugate: real part kept, imaginary coordinates negated."""
    return p.conj()


def inner(p: Octonion, q: Octonion) -> float:
    """Euclidean inner product of coordinates; equals Re(p qbar) = (p qbar + q pbar)/2."""
    return float(p.coords @ q.coords)


def associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion:
    """(ab)c - a(bc), totally antisymmetric and purely imaginary."""
    return (a * b) * c - a * (b * c)


def assoc3form(a: Octonion, b: Octonion, c: Octonion) -> float:
    """Associative 3-form: Re(a x b x c) = Re(a(bbar c) - c(bbar a))/2."""
    bc = b.conj()
    return 0.5 * ((a * (bc * c)).real - (c * (bc * a)).real)


def left_mul_matrix(q: Octonion) -> np.ndarray:
    """8x8 real matrix L with L @ coords(x) = coords(q*x) for every x."""
    return (q.coords @ _TABLE_2D).reshape(8, 8).T
