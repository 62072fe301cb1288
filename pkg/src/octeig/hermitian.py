"""3x3 octonionic Hermitian matrices, octonionic 3-vectors, and scalar invariants.

A matrix is stored as three real diagonal entries (d, e, f) and three
octonions (a, b, c) laid out as

    [ d     a     conj(b) ]
    [ conj(a)  e     c    ]
    [ b     conj(c)  f    ]

so hermiticity holds by construction.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .octonion import Octonion, assoc3form, associator

__all__ = [
    "OctVector3",
    "Hermitian3",
    "MatrixClass",
    "trace",
    "sigma",
    "det",
    "phi",
    "alpha",
    "classify",
    "mat_vec",
    "outer",
    "REAL",
    "COMPLEX",
    "QUATERNIONIC",
    "OCTONIONIC",
]

REAL = "real"
COMPLEX = "complex"
QUATERNIONIC = "quaternionic"
OCTONIONIC = "octonionic"

_CLASS_TOL = 1e-9


class OctVector3:
    """Column vector in O^3, immutable."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(components)
        if len(comps) != 3 or not all(isinstance(v, Octonion) for v in comps):
            raise ValueError("OctVector3 needs exactly 3 octonion components")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_coords(cls, coords) -> "OctVector3":
        c = np.asarray(coords, dtype=float).reshape(24)
        return cls((Octonion(c[0:8]), Octonion(c[8:16]), Octonion(c[16:24])))

    def to_coords(self) -> np.ndarray:
        return np.concatenate([v.coords for v in self.components])

    def __add__(self, other: "OctVector3") -> "OctVector3":
        return OctVector3(tuple(u + w for u, w in zip(self.components, other.components)))

    def __sub__(self, other: "OctVector3") -> "OctVector3":
        return OctVector3(tuple(u - w for u, w in zip(self.components, other.components)))

    def __neg__(self) -> "OctVector3":
        return OctVector3(tuple(-u for u in self.components))

    def scale(self, t: float) -> "OctVector3":
        return OctVector3(tuple(u * t for u in self.components))

    def right_mul(self, q: Octonion) -> "OctVector3":
        """Componentwise right multiplication by a single octonion."""
        return OctVector3(tuple(u * q for u in self.components))

    def dagger_dot(self, other: "OctVector3") -> Octonion:
        """self^dagger other = sum conj(v_i) w_i, an octonion."""
        acc = Octonion.zero()
        for u, w in zip(self.components, other.components):
            acc = acc + u.conj() * w
        return acc

    def norm2(self) -> float:
        return float(sum(v.norm2() for v in self.components))

    def norm(self) -> float:
        return float(np.sqrt(self.norm2()))

    def normalized(self) -> "OctVector3":
        n = self.norm()
        if n == 0.0:
            raise ZeroDivisionError("cannot normalize the zero vector")
        return self.scale(1.0 / n)

    def outer(self) -> "Hermitian3":
        """Rank-one Hermitian matrix self self^dagger."""
        v1, v2, v3 = self.components
        return Hermitian3(
            d=v1.norm2(),
            e=v2.norm2(),
            f=v3.norm2(),
            a=v1 * v2.conj(),
            b=v3 * v1.conj(),
            c=v2 * v3.conj(),
        )

    def __repr__(self):
        return f"OctVector3{self.components!r}"

    def to_json(self) -> list:
        return [v.to_json() for v in self.components]

    @classmethod
    def from_json(cls, data) -> "OctVector3":
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise ValueError("vector JSON must be a 3x8 array of numbers")
        return cls(tuple(Octonion.from_json(row) for row in data))


@dataclass(frozen=True, eq=False)
class Hermitian3:
    d: float
    e: float
    f: float
    a: Octonion
    b: Octonion
    c: Octonion

    @classmethod
    def diagonal(cls, d: float, e: float, f: float) -> "Hermitian3":
        z = Octonion.zero()
        return cls(float(d), float(e), float(f), z, z, z)

    @classmethod
    def identity(cls) -> "Hermitian3":
        return cls.diagonal(1.0, 1.0, 1.0)

    def entries(self):
        """Reconstructed 3x3 matrix of octonions (diagonal wrapped as real octonions)."""
        d, e, f = (Octonion.from_real(x) for x in (self.d, self.e, self.f))
        return (
            (d, self.a, self.b.conj()),
            (self.a.conj(), e, self.c),
            (self.b, self.c.conj(), f),
        )

    def __add__(self, other: "Hermitian3") -> "Hermitian3":
        return Hermitian3(
            self.d + other.d, self.e + other.e, self.f + other.f,
            self.a + other.a, self.b + other.b, self.c + other.c,
        )

    def __sub__(self, other: "Hermitian3") -> "Hermitian3":
        return Hermitian3(
            self.d - other.d, self.e - other.e, self.f - other.f,
            self.a - other.a, self.b - other.b, self.c - other.c,
        )

    def scale(self, t: float) -> "Hermitian3":
        t = float(t)
        return Hermitian3(t * self.d, t * self.e, t * self.f,
                          self.a * t, self.b * t, self.c * t)

    def frobenius(self) -> float:
        return float(np.sqrt(
            self.d ** 2 + self.e ** 2 + self.f ** 2
            + 2.0 * (self.a.norm2() + self.b.norm2() + self.c.norm2())
        ))

    def to_json(self) -> dict:
        return {
            "d": float(self.d), "e": float(self.e), "f": float(self.f),
            "a": self.a.to_json(), "b": self.b.to_json(), "c": self.c.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "Hermitian3":
        if not isinstance(data, dict):
            raise ValueError("matrix JSON must be an object with fields d, e, f, a, b, c")
        fields = {}
        for key in ("d", "e", "f"):
            if key not in data:
                raise ValueError(f"matrix JSON is missing field {key!r}")
            fields[key] = float(data[key])
        for key in ("a", "b", "c"):
            if key not in data:
                raise ValueError(f"matrix JSON is missing field {key!r}")
            try:
                fields[key] = Octonion.from_json(data[key])
            except ValueError as exc:
                raise ValueError(f"field {key!r}: {exc}") from exc
        return cls(**fields)

    def __repr__(self):
        return (f"Hermitian3(d={self.d:g}, e={self.e:g}, f={self.f:g}, "
                f"a={self.a!r}, b={self.b!r}, c={self.c!r})")


class MatrixClass(NamedTuple):
    tag: str
    dim_t: int


def trace(A: Hermitian3) -> float:
    return A.d + A.e + A.f


def _trace_sq(A: Hermitian3) -> float:
    # tr(A^2) from the reconstructed entrywise products; no hand-derived
    # closed form, only Re(A_ij A_ji) summed over the 9 entries.
    rows = A.entries()
    total = 0.0
    for i in range(3):
        for j in range(3):
            total += (rows[i][j] * rows[j][i]).real
    return total


def sigma(A: Hermitian3) -> float:
    """Second characteristic invariant ((tr A)^2 - tr(A^2)) / 2."""
    t = trace(A)
    return 0.5 * (t * t - _trace_sq(A))


def det(A: Hermitian3) -> float:
    """Determinant def - d|c|^2 - e|b|^2 - f|a|^2 + 2 Re((cb)a).

    Validated against the diagonality of the characteristic operator; a
    wrong sign on the Re((cb)a) term breaks that identity immediately.
    """
    return (
        A.d * A.e * A.f
        - A.d * A.c.norm2()
        - A.e * A.b.norm2()
        - A.f * A.a.norm2()
        + 2.0 * ((A.c * A.b) * A.a).real
    )


def phi(A: Hermitian3) -> float:
    """Associative 3-form of the off-diagonal entries."""
    return assoc3form(A.a, A.b, A.c)


def alpha(A: Hermitian3) -> Octonion:
    """Associator [a, b, c] of the off-diagonal entries."""
    return associator(A.a, A.b, A.c)


def _rank(rows: list[np.ndarray], tol: float = _CLASS_TOL) -> int:
    m = np.array(rows)
    if not m.size:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    return int(np.sum(s > tol * max(1.0, s[0])))


def classify(A: Hermitian3) -> MatrixClass:
    """Classify by the smallest subalgebra containing the off-diagonal entries.

    The octonionic test is |alpha| against the scaled tolerance; matrices
    routed below it land on the quaternionic/complex/real paths, which are
    exact there and a limit elsewhere.
    """
    scale = (1.0 + A.a.norm()) * (1.0 + A.b.norm()) * (1.0 + A.c.norm())
    one = np.zeros(8)
    one[0] = 1.0
    dim_t = _rank([one, A.a.coords, A.b.coords, A.c.coords])
    if alpha(A).norm() > _CLASS_TOL * scale:
        return MatrixClass(OCTONIONIC, dim_t)
    imag_rank = _rank([A.a.imag().coords, A.b.imag().coords, A.c.imag().coords])
    if imag_rank == 0:
        return MatrixClass(REAL, dim_t)
    if imag_rank == 1:
        return MatrixClass(COMPLEX, dim_t)
    return MatrixClass(QUATERNIONIC, dim_t)


def mat_vec(A: Hermitian3, x: OctVector3) -> OctVector3:
    """Left action A x with each term a single binary octonion product."""
    x1, x2, x3 = x.components
    return OctVector3((
        x1 * A.d + A.a * x2 + A.b.conj() * x3,
        A.a.conj() * x1 + x2 * A.e + A.c * x3,
        A.b * x1 + A.c.conj() * x2 + x3 * A.f,
    ))


def outer(v: OctVector3) -> Hermitian3:
    """Rank-one Hermitian matrix v v^dagger."""
    return v.outer()


def hermitian_combination(pairs) -> Hermitian3:
    """Real linear combination sum_k t_k (v_k v_k^dagger)."""
    acc = Hermitian3.diagonal(0.0, 0.0, 0.0)
    for t, v in pairs:
        acc = acc + v.outer().scale(t)
    return acc
