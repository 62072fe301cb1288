"""Coefficient subspace T = span{1, a, b, c} and the K eigenspace machinery.

For a matrix whose off-diagonal entries have nonvanishing associator,
the octonions split into two orthogonal 4-spaces T_m = T s_m picked out
by the characteristic operator K; everything here builds and exercises
that split, plus the quaternionic fallback where it collapses.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import AmbiguousSubalgebra, DegenerateFamily, NotQuaternionic, SingularChange
from .hermitian import (
    COMPLEX,
    OCTONIONIC,
    REAL,
    Hermitian3,
    OctVector3,
    alpha,
    classify,
    phi,
)
from .octonion import Octonion, inner

__all__ = [
    "TBasis",
    "FamilyContext",
    "t_basis",
    "r_roots",
    "s_elements",
    "family_context",
    "k_scalar",
    "project_km",
    "project_km_vec",
    "cd_table_check",
    "quaternionic_split",
    "conj_matrix",
    "basis_invariance_check",
    "orthonormalize",
    "span_distance",
]

_DEGENERATE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class TBasis:
    vectors: tuple
    dim: int


@dataclass(frozen=True, eq=False)
class FamilyContext:
    m: int
    r: float
    phi: float
    alpha: Octonion
    s: Optional[Octonion]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "r": float(self.r),
            "phi": float(self.phi),
            "alpha": self.alpha.to_json(),
            "s": None if self.s is None else self.s.to_json(),
        }


def orthonormalize(octs, tol: float = 1e-9) -> tuple:
    """Classical Gram-Schmidt with one re-orthogonalization pass.

    Drops vectors whose residual falls below tol relative to the input
    norm, so the result is an orthonormal basis of the span.
    """
    basis = []
    for q in octs:
        scale = max(1.0, q.norm())
        v = q
        for _ in range(2):
            for b in basis:
                v = v - b * inner(b, v)
        if v.norm() > tol * scale:
            basis.append(v * (1.0 / v.norm()))
    return tuple(basis)


def _span_matrix(basis) -> np.ndarray:
    return np.array([b.coords for b in basis])


def span_distance(q: Octonion, basis) -> float:
    """Euclidean distance from q to the real span of the given octonions."""
    if not basis:
        return q.norm()
    m = _span_matrix(basis)
    proj = m.T @ (m @ q.coords)
    return float(np.linalg.norm(q.coords - proj))


def t_basis(A: Hermitian3) -> TBasis:
    """Orthonormal basis of span{1, a, b, c}, in that deterministic order."""
    basis = orthonormalize([Octonion.from_real(1.0), A.a, A.b, A.c])
    return TBasis(vectors=basis, dim=len(basis))


def _require_octonionic(A: Hermitian3) -> tuple[float, Octonion]:
    ph = phi(A)
    al = alpha(A)
    scale = (1.0 + A.a.norm()) * (1.0 + A.b.norm()) * (1.0 + A.c.norm())
    if al.norm() <= _DEGENERATE_TOL * scale:
        raise DegenerateFamily(
            "associator vanishes; families are not labeled by r (use the quaternionic path)"
        )
    return ph, al


def r_roots(A: Hermitian3) -> tuple[float, float]:
    """Roots r1 >= r2 of r^2 + 4 phi r - |alpha|^2 = 0, distinct when alpha != 0."""
    ph, al = _require_octonionic(A)
    disc = np.sqrt(4.0 * ph * ph + al.norm2())
    return (-2.0 * ph + disc, -2.0 * ph - disc)


def s_elements(A: Hermitian3) -> tuple[Octonion, Octonion]:
    """Family generators s_m = (r_m + 4 phi + alpha) / (2 (r_m + 2 phi)); s1 + s2 = 1."""
    ph, al = _require_octonionic(A)
    r1, r2 = r_roots(A)
    out = []
    for r in (r1, r2):
        denom = 2.0 * (r + 2.0 * ph)
        num = Octonion.from_real(r + 4.0 * ph) + al
        out.append(num / denom)
    return tuple(out)


def family_context(A: Hermitian3, m: int) -> FamilyContext:
    if m not in (1, 2):
        raise ValueError("family index must be 1 or 2")
    r = r_roots(A)[m - 1]
    s = s_elements(A)[m - 1]
    return FamilyContext(m=m, r=r, phi=phi(A), alpha=alpha(A), s=s)


def k_scalar(A: Hermitian3, p: Octonion) -> Octonion:
    """Characteristic operator on a single octonion.

    K[p] = c(b(ap)) + conj(a)(conj(b)(conj(c)p)) - 2 Re((cb)a) p.

    This is the diagonal of the matrix characteristic operator; note the
    subtracted term is the real scalar 2 Re((cb)a), which is what makes
    K[t] = t alpha hold on all of T (in particular K[1] = alpha).
    """
    a, b, c = A.a, A.b, A.c
    bracket = 2.0 * ((c * b) * a).real
    return c * (b * (a * p)) + a.conj() * (b.conj() * (c.conj() * p)) - p * bracket


def project_km(A: Hermitian3, m: int, p: Octonion) -> Octonion:
    """Projector onto the K eigenspace T_m: (K + r_m + 4 phi) / (2 (r_m + 2 phi))."""
    if m not in (1, 2):
        raise ValueError("family index must be 1 or 2")
    ph, _ = _require_octonionic(A)
    r = r_roots(A)[m - 1]
    return (k_scalar(A, p) + p * (r + 4.0 * ph)) / (2.0 * (r + 2.0 * ph))


def project_km_vec(A: Hermitian3, m: int, x: OctVector3) -> OctVector3:
    """Componentwise family projection of a vector."""
    return OctVector3(tuple(project_km(A, m, p) for p in x.components))


def cd_table_check(A: Hermitian3, t1: Octonion, t2: Octonion) -> tuple[float, float, float]:
    """Residual norms of the three Cayley-Dickson-like products on T and T alpha.

    Diagnostic only: meaningful when t1, t2 lie in T, generically nonzero
    otherwise.
    """
    al = alpha(A)
    n2 = al.norm2()
    res1 = (t1 * (t2 * al) - (t2 * t1) * al).norm()
    res2 = ((t1 * al) * t2 - (t1 * t2.conj()) * al).norm()
    res3 = ((t1 * al) * (t2 * al) + (t2.conj() * t1) * n2).norm()
    return (res1, res2, res3)


def quaternionic_split(A: Hermitian3):
    """Basis (1, h1, h2, h1 h2) of the quaternionic subalgebra holding a, b, c,
    plus the lowest-index unit direction orthogonal to it.

    The third imaginary basis element is taken as the product h1 h2 so the
    quaternion relations hold exactly; the orthogonal unit ell satisfies
    ell^2 = -1 and ell H orthogonal to H.
    """
    tag = classify(A).tag
    if tag == OCTONIONIC:
        raise NotQuaternionic("entries do not lie in a quaternionic subalgebra")
    if tag in (REAL, COMPLEX):
        raise AmbiguousSubalgebra(
            "matrix is complex: the containing quaternionic subalgebra is not unique"
        )
    imag_basis = orthonormalize([A.a.imag(), A.b.imag(), A.c.imag()])
    if len(imag_basis) < 2:
        raise AmbiguousSubalgebra("fewer than two independent imaginary directions")
    h1, h2 = imag_basis[0], imag_basis[1]
    h3 = h1 * h2
    hbasis = (Octonion.from_real(1.0), h1, h2, h3)
    for i in range(1, 8):
        cand = Octonion.unit(i)
        resid = cand
        for _ in range(2):
            for h in hbasis:
                resid = resid - h * inner(h, resid)
        if resid.norm() > 1e-6:
            return hbasis, resid * (1.0 / resid.norm())
    raise NotQuaternionic("no unit direction orthogonal to the subalgebra found")


def conj_matrix(A: Hermitian3) -> Hermitian3:
    """Entrywise conjugate; requires an associative (non-octonionic) matrix."""
    if classify(A).tag == OCTONIONIC:
        raise NotQuaternionic("entrywise conjugation is only used on quaternionic matrices")
    return Hermitian3(A.d, A.e, A.f, A.a.conj(), A.b.conj(), A.c.conj())


def basis_invariance_check(A: Hermitian3, M, shifts=(0.0, 0.0, 0.0)) -> float:
    """Largest deviation of the family generators under an off-diagonal basis change.

    Replaces (a, b, c) by real combinations M (a, b, c)^T plus real shifts
    and recomputes s_m.  With det M > 0 the generators must be unchanged;
    det M < 0 swaps the two family labels, which is accounted for here.
    """
    M = np.asarray(M, dtype=float)
    if M.shape != (3, 3):
        raise ValueError("change of basis must be a real 3x3 matrix")
    detm = float(np.linalg.det(M))
    if abs(detm) < 1e-12 * max(1.0, float(np.abs(M).max()) ** 3):
        raise SingularChange("change of basis has numerically vanishing determinant")
    old = (A.a, A.b, A.c)
    new = []
    for i in range(3):
        q = Octonion.from_real(float(shifts[i]))
        for j in range(3):
            q = q + old[j] * M[i, j]
        new.append(q)
    A2 = Hermitian3(A.d, A.e, A.f, *new)
    s1, s2 = s_elements(A)
    s1p, s2p = s_elements(A2)
    if detm > 0:
        return max((s1p - s1).norm(), (s2p - s2).norm())
    return max((s1p - s2).norm(), (s2p - s1).norm())
