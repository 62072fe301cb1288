"""Six-way decomposition of arbitrary vectors into eigenvector components.

A vector is first split by the two K projectors and each half is then
expanded along that family's orthonormal eigenvectors with the rank-one
generalized projectors (v v^dagger) y, so a generic vector ends up with
six components, every one an eigenvector of the matrix.
"""

import hashlib
import json
from dataclasses import dataclass

from .errors import FamilyMismatch, NotQuaternionic
from .hermitian import (
    OCTONIONIC,
    QUATERNIONIC,
    Hermitian3,
    OctVector3,
    classify,
    det,
    mat_vec,
    outer,
)
from .octonion import Octonion, inner
from .spectral import EigenSystem, eigensystem, k_vector
from .subspace import project_km_vec, quaternionic_split

__all__ = [
    "DecompositionPart",
    "SixWayDecomposition",
    "project_along",
    "six_way",
    "quaternionic_six_way",
]

_ZERO_PART_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class DecompositionPart:
    family: int
    lam: float
    component: OctVector3

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "lambda": float(self.lam),
            "component": self.component.to_json(),
        }


@dataclass(frozen=True, eq=False)
class SixWayDecomposition:
    parts: tuple
    reconstruction_residual: float
    eigen_residuals: tuple
    matrix_class: str
    fingerprint: str

    def to_json(self) -> dict:
        return {
            "matrix_class": self.matrix_class,
            "fingerprint": self.fingerprint,
            "parts": [p.to_json() for p in self.parts],
            "reconstruction_residual": float(self.reconstruction_residual),
            "eigen_residuals": [float(r) for r in self.eigen_residuals],
        }


def matrix_fingerprint(A: Hermitian3) -> str:
    """Hash of the canonical matrix serialization, for report provenance."""
    payload = json.dumps(A.to_json(), sort_keys=True).encode()
    return hashlib.sha256(payload).hexdigest()


def project_along(v: OctVector3, y: OctVector3, check: bool = True,
                  tol: float = 1e-8) -> OctVector3:
    """Generalized projection (v v^dagger) y for y in the same K eigenspace as v.

    On that eigenspace the map is idempotent and returns an eigenvector of
    the rank-one matrix v v^dagger.  With check enabled, membership is
    tested through the characteristic operator of v v^dagger, whose
    eigenvalue on the family of v is minus its determinant.
    """
    B = outer(v)
    if check:
        scale = max(1.0, v.norm2()) ** 3 * max(y.norm(), 1e-300)
        resid = (k_vector(B, y) + y.scale(det(B))).norm()
        if resid > tol * scale:
            raise FamilyMismatch(
                f"vector is not in the K eigenspace of the projector (residual {resid:.3e})"
            )
    return mat_vec(B, y)


def _expand(A: Hermitian3, pairs, xm: OctVector3, zero_tol: float):
    parts = []
    residuals = []
    scale = max(1.0, A.frobenius())
    for pair in pairs:
        comp = project_along(pair.v, xm, check=False)
        if comp.norm() < zero_tol:
            comp = OctVector3((Octonion.zero(),) * 3)
            residuals.append(0.0)
        else:
            residuals.append(
                (mat_vec(A, comp) - comp.scale(pair.lam)).norm() / (scale * comp.norm())
            )
        parts.append(DecompositionPart(family=pair.family, lam=pair.lam, component=comp))
    return parts, residuals


def six_way(A: Hermitian3, x: OctVector3, system: EigenSystem = None) -> SixWayDecomposition:
    """Decompose x into one eigenvector component per family eigenvalue.

    Octonionic matrices produce six parts (two K projections, then three
    rank-one projections each); quaternionic ones route through the
    Cayley-Dickson split; complex and real matrices have a single family
    and hence three parts.
    """
    if system is None:
        system = eigensystem(A)
    tag = system.matrix_class.tag
    if tag == QUATERNIONIC:
        return quaternionic_six_way(A, x, system=system)
    fp = matrix_fingerprint(A)
    zero_tol = _ZERO_PART_TOL * max(x.norm(), 1e-300)
    parts = []
    residuals = []
    if tag == OCTONIONIC:
        for fam in system.families:
            xm = project_km_vec(A, fam.context.m, x)
            p, res = _expand(A, fam.pairs, xm, zero_tol)
            parts.extend(p)
            residuals.extend(res)
    else:
        fam = system.families[0]
        p, res = _expand(A, fam.pairs, x, zero_tol)
        parts.extend(p)
        residuals.extend(res)
    total = parts[0].component
    for part in parts[1:]:
        total = total + part.component
    recon = (total - x).norm() / max(x.norm(), 1e-300)
    return SixWayDecomposition(
        parts=tuple(parts),
        reconstruction_residual=recon,
        eigen_residuals=tuple(residuals),
        matrix_class=tag,
        fingerprint=fp,
    )


def quaternionic_six_way(A: Hermitian3, x: OctVector3,
                         system: EigenSystem = None) -> SixWayDecomposition:
    """Six-part decomposition through the split O = H + ell H.

    The quaternionic piece of x is expanded along the eigenvectors of A,
    the purely octonionic piece along the lifted eigenvectors.
    """
    if classify(A).tag != QUATERNIONIC:
        raise NotQuaternionic("matrix entries are not quaternionic")
    if system is None:
        system = eigensystem(A)
    hbasis, ell = quaternionic_split(A)

    def h_part(q: Octonion) -> Octonion:
        acc = Octonion.zero()
        for h in hbasis:
            acc = acc + h * inner(h, q)
        return acc

    x1 = OctVector3(tuple(h_part(q) for q in x.components))
    rem = x - x1
    fp = matrix_fingerprint(A)
    zero_tol = _ZERO_PART_TOL * max(x.norm(), 1e-300)
    parts, residuals = _expand(A, system.families[0].pairs, x1, zero_tol)
    p2, r2 = _expand(A, system.families[1].pairs, rem, zero_tol)
    parts.extend(p2)
    residuals.extend(r2)
    total = parts[0].component
    for part in parts[1:]:
        total = total + part.component
    recon = (total - x).norm() / max(x.norm(), 1e-300)
    return SixWayDecomposition(
        parts=tuple(parts),
        reconstruction_residual=recon,
        eigen_residuals=tuple(residuals),
        matrix_class=QUATERNIONIC,
        fingerprint=fp,
    )
