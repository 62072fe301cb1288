"""Eigenvalues and orthonormal eigenbases, one per family.

The real eigenvalues come from the cubic

    lam^3 - tr(A) lam^2 + sigma(A) lam - det(A) = r

with r a root of the family quadratic, so each matrix carries two
3-eigenvalue families.  Eigenvectors are extracted from realified
nullspaces and filtered into families with the K projectors; the
generic quaternionic and complex routes are handled separately.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ComplexProjector, ComplexRoots, ExtractionFailure
from .hermitian import (
    COMPLEX,
    OCTONIONIC,
    QUATERNIONIC,
    REAL,
    Hermitian3,
    MatrixClass,
    OctVector3,
    classify,
    det,
    mat_vec,
    outer,
    sigma,
    trace,
)
from .octonion import Octonion, inner, left_mul_matrix
from .subspace import (
    FamilyContext,
    conj_matrix,
    family_context,
    project_km_vec,
    quaternionic_split,
)

__all__ = [
    "EigenPair",
    "FamilyEigensystem",
    "EigenSystem",
    "lambda_roots",
    "k_vector",
    "realify24",
    "real_nullspace",
    "eigenvectors",
    "eigensystem",
    "same_family",
    "family_dimension_probe",
]

_RANK_TOL = 1e-7
_CLUSTER_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class EigenPair:
    lam: float
    v: OctVector3
    family: int


@dataclass(frozen=True, eq=False)
class FamilyEigensystem:
    context: FamilyContext
    pairs: tuple
    residuals: dict

    def to_json(self) -> dict:
        out = self.context.to_json()
        out["eigenvalues"] = [float(p.lam) for p in self.pairs]
        out["eigenvectors"] = [p.v.to_json() for p in self.pairs]
        out["residuals"] = {k: float(v) for k, v in self.residuals.items()}
        return out


@dataclass(frozen=True, eq=False)
class EigenSystem:
    matrix_class: MatrixClass
    families: tuple

    @property
    def single_family(self) -> bool:
        return len(self.families) == 1

    def all_pairs(self):
        return [p for fam in self.families for p in fam.pairs]

    def to_json(self) -> dict:
        return {
            "class": self.matrix_class.tag,
            "dim_t": self.matrix_class.dim_t,
            "single_family": self.single_family,
            "families": [f.to_json() for f in self.families],
        }


def lambda_roots(A: Hermitian3, r: float) -> tuple[float, float, float]:
    """Three real roots, ascending, of lam^3 - tr lam^2 + sigma lam - (det + r) = 0.

    Solved with the trigonometric method for the all-real-roots case (the
    acos argument is clamped to absorb rounding), then each root gets two
    Newton polish steps on the original cubic.  A discriminant that is
    negative beyond tolerance means the supplied r does not belong to this
    matrix and raises ComplexRoots.
    """
    b = -trace(A)
    c = sigma(A)
    d = -(det(A) + r)
    # depressed form t^3 + p t + q, lam = t - b/3
    p = c - b * b / 3.0
    q = 2.0 * b ** 3 / 27.0 - b * c / 3.0 + d
    disc = -4.0 * p ** 3 - 27.0 * q * q
    scale = max(1.0, abs(p) ** 3, q * q)
    if disc < -1e-9 * scale:
        raise ComplexRoots(
            f"cubic discriminant {disc:.3e} is negative: r={r!r} is inconsistent with this matrix"
        )
    shift = -b / 3.0
    if p >= 0.0:
        # all roots collapse within rounding
        t0 = math.copysign(abs(q) ** (1.0 / 3.0), -q)
        roots = [shift + t0] * 3
    else:
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3.0
        roots = [shift + m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]
    polished = []
    for x in roots:
        for _ in range(2):
            fx = ((x + b) * x + c) * x + d
            dfx = (3.0 * x + 2.0 * b) * x + c
            if abs(dfx) > 1e-12:
                x -= fx / dfx
        polished.append(x)
    return tuple(sorted(polished))


def k_vector(A: Hermitian3, x: OctVector3) -> OctVector3:
    """Matrix characteristic operator A(A(Ax)) - tr A(Ax) + sigma Ax - det x."""
    ax = mat_vec(A, x)
    a2x = mat_vec(A, ax)
    a3x = mat_vec(A, a2x)
    return a3x - a2x.scale(trace(A)) + ax.scale(sigma(A)) - x.scale(det(A))


def realify24(A: Hermitian3) -> np.ndarray:
    """Real 24x24 matrix of x -> A x under O^3 = R^24; symmetric for Hermitian A."""
    rows = A.entries()
    out = np.zeros((24, 24))
    for i in range(3):
        for j in range(3):
            out[8 * i:8 * i + 8, 8 * j:8 * j + 8] = left_mul_matrix(rows[i][j])
    return out


def real_nullspace(M: np.ndarray, rel_threshold: float = _RANK_TOL) -> np.ndarray:
    """Orthonormal nullspace basis (columns) by SVD with a relative rank cut."""
    _, s, vh = np.linalg.svd(M)
    cut = rel_threshold * max(1.0, s[0] if s.size else 0.0)
    null_rows = [vh[i] for i in range(vh.shape[0]) if i >= s.size or s[i] < cut]
    if not null_rows:
        return np.zeros((M.shape[1], 0))
    return np.array(null_rows).T


def _column_basis(cols: np.ndarray, rel_threshold: float = _RANK_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of the column space, rank by relative SVD cut."""
    if cols.size == 0:
        return np.zeros((cols.shape[0], 0))
    u, s, _ = np.linalg.svd(cols, full_matrices=False)
    cut = rel_threshold * max(1.0, s[0] if s.size else 0.0)
    rank = int(np.sum(s > cut))
    return u[:, :rank]


def _pick_representative(space: np.ndarray, block: int) -> np.ndarray:
    """Deterministic unit representative from an orthonormal column basis.

    Maximizes the coordinate functional of the first usable slot, trying
    the real parts of the vector components first (coordinates 0, block,
    2*block, ...); the construction makes that coordinate positive, which
    fixes the sign.
    """
    dim = space.shape[0]
    order = list(range(0, dim, block)) + [i for i in range(dim) if i % block != 0]
    for idx in order:
        w = space @ space[idx, :]
        n = np.linalg.norm(w)
        if n > 1e-6:
            return w / n
    raise ExtractionFailure("could not pick a representative from the candidate subspace")


def _family_filter(A: Hermitian3, m: int, cols: np.ndarray) -> np.ndarray:
    filtered = np.empty_like(cols)
    for k in range(cols.shape[1]):
        vec = OctVector3.from_coords(cols[:, k])
        filtered[:, k] = project_km_vec(A, m, vec).to_coords()
    return filtered


def eigenvectors(A: Hermitian3, fam: FamilyContext, lam: float,
                 multiplicity: int = 1) -> list[EigenPair]:
    """Extract `multiplicity` orthonormal eigenpairs for one family eigenvalue.

    Pipeline: nullspace of the realified shifted matrix, componentwise K
    projection to isolate the family (expected real dimension is 4 per
    requested eigenvector), a deterministic unit representative, and for
    repeated eigenvalues a Gram-Schmidt sweep that subtracts the rank-one
    projection (v v^dagger) y, which is idempotent on this K eigenspace.
    """
    M = realify24(A) - lam * np.eye(24)
    null = real_nullspace(M)
    if null.shape[1] < 4 * multiplicity:
        raise ExtractionFailure(
            f"nullspace at lambda={lam:.6g} has dimension {null.shape[1]}, "
            f"expected at least {4 * multiplicity}"
        )
    space = _column_basis(_family_filter(A, fam.m, null))
    if space.shape[1] < 4 * multiplicity:
        raise ExtractionFailure(
            f"family-{fam.m} eigenspace at lambda={lam:.6g} has dimension "
            f"{space.shape[1]}, expected {4 * multiplicity}"
        )
    pairs = []
    for k in range(multiplicity):
        rep = _pick_representative(space, 8)
        v = OctVector3.from_coords(rep)
        pairs.append(EigenPair(lam=lam, v=v, family=fam.m))
        if k + 1 < multiplicity:
            proj = outer(v)
            reduced = np.empty_like(space)
            for j in range(space.shape[1]):
                y = OctVector3.from_coords(space[:, j])
                reduced[:, j] = (y - mat_vec(proj, y)).to_coords()
            space = _column_basis(reduced)
            if space.shape[1] < 4 * (multiplicity - k - 1):
                raise ExtractionFailure(
                    f"generalized orthogonalization at lambda={lam:.6g} lost rank"
                )
    return pairs


def _cluster(values) -> list[list[float]]:
    vals = sorted(values)
    tol = _CLUSTER_TOL * max(1.0, max(abs(v) for v in vals))
    groups = [[vals[0]]]
    for v in vals[1:]:
        if v - groups[-1][-1] <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return groups


def _family_residuals(A: Hermitian3, fam: FamilyContext, pairs) -> dict:
    scale = max(1.0, A.frobenius())
    eig = 0.0
    keig = 0.0
    for p in pairs:
        eig = max(eig, (mat_vec(A, p.v) - p.v.scale(p.lam)).norm() / scale ** 1)
        keig = max(keig, (k_vector(A, p.v) - p.v.scale(fam.r)).norm() / scale ** 3)
    ident = Hermitian3.identity()
    acc = Hermitian3.diagonal(0.0, 0.0, 0.0)
    amat = Hermitian3.diagonal(0.0, 0.0, 0.0)
    for p in pairs:
        vv = outer(p.v)
        acc = acc + vv
        amat = amat + vv.scale(p.lam)
    ortho = 0.0
    for i, pi in enumerate(pairs):
        for pj in pairs[i + 1:]:
            ortho = max(ortho, mat_vec(outer(pi.v), pj.v).norm())
    return {
        "eigen": eig,
        "k_eigen": keig,
        "identity_decomposition": (acc - ident).frobenius(),
        "matrix_decomposition": (amat - A).frobenius() / scale,
        "generalized_orthogonality": ortho,
    }


def _octonionic_eigensystem(A: Hermitian3, cls: MatrixClass) -> EigenSystem:
    families = []
    for m in (1, 2):
        fam = family_context(A, m)
        roots = lambda_roots(A, fam.r)
        pairs = []
        for group in _cluster(roots):
            lam = float(np.mean(group))
            pairs.extend(eigenvectors(A, fam, lam, multiplicity=len(group)))
        pairs.sort(key=lambda p: p.lam)
        families.append(FamilyEigensystem(
            context=fam, pairs=tuple(pairs), residuals=_family_residuals(A, fam, pairs),
        ))
    return EigenSystem(matrix_class=cls, families=tuple(families))


def _subalgebra_coords(q: Octonion, basis) -> np.ndarray:
    return np.array([inner(h, q) for h in basis])


def _subalgebra_left_mul(q: Octonion, basis) -> np.ndarray:
    dim = len(basis)
    out = np.empty((dim, dim))
    for j, h in enumerate(basis):
        out[:, j] = _subalgebra_coords(q * h, basis)
    return out


def _from_subalgebra_coords(coords: np.ndarray, basis) -> Octonion:
    acc = Octonion.zero()
    for x, h in zip(coords, basis):
        acc = acc + h * float(x)
    return acc


def _quat_hermitian_eig(A: Hermitian3, hbasis) -> list[tuple[float, OctVector3]]:
    """Right eigenpairs of a quaternionic Hermitian matrix via 12x12 realification.

    Each eigenvalue shows up with real multiplicity 4 (right multiples);
    within repeated eigenvalues the usual quaternionic projection
    v (v^dagger y) drives the Gram-Schmidt sweep.
    """
    rows = A.entries()
    M = np.zeros((12, 12))
    for i in range(3):
        for j in range(3):
            M[4 * i:4 * i + 4, 4 * j:4 * j + 4] = _subalgebra_left_mul(rows[i][j], hbasis)
    M = 0.5 * (M + M.T)
    evals, evecs = np.linalg.eigh(M)
    out = []
    groups = _cluster(evals)
    start = 0
    for group in groups:
        size = len(group)
        if size % 4 != 0:
            raise ExtractionFailure(
                f"quaternionic eigenvalue cluster of size {size} is not a multiple of 4"
            )
        lam = float(np.mean(group))
        space = evecs[:, start:start + size]
        start += size

        def to_vec(col):
            return OctVector3(tuple(
                _from_subalgebra_coords(col[4 * i:4 * i + 4], hbasis) for i in range(3)
            ))

        for k in range(size // 4):
            rep = _pick_representative(space, 4)
            v = to_vec(rep)
            out.append((lam, v))
            if 4 * (k + 1) < size:
                reduced = np.empty_like(space)
                for j in range(space.shape[1]):
                    y = to_vec(space[:, j])
                    proj = v.right_mul(v.dagger_dot(y))
                    reduced[:, j] = np.concatenate([
                        _subalgebra_coords(comp, hbasis) for comp in (y - proj).components
                    ])
                space = _column_basis(reduced)
    out.sort(key=lambda t: t[0])
    return out


def _quaternionic_eigensystem(A: Hermitian3, cls: MatrixClass) -> EigenSystem:
    hbasis, ell = quaternionic_split(A)
    zero = Octonion.zero()
    fams = []
    pairs1 = [EigenPair(lam, v, 1) for lam, v in _quat_hermitian_eig(A, hbasis)]
    ctx1 = FamilyContext(m=1, r=0.0, phi=0.0, alpha=zero, s=None)
    fams.append(FamilyEigensystem(ctx1, tuple(pairs1), _family_residuals(A, ctx1, pairs1)))
    Abar = conj_matrix(A)
    lifted = []
    for lam, u in _quat_hermitian_eig(Abar, hbasis):
        lifted.append(EigenPair(lam, OctVector3(tuple(ell * comp for comp in u.components)), 2))
    # the lifted eigenvectors solve the characteristic cubic of the
    # conjugate matrix, which shifts the constant term: K picks up the
    # determinant gap as its eigenvalue on this family
    ctx2 = FamilyContext(m=2, r=det(Abar) - det(A), phi=0.0, alpha=zero, s=None)
    fams.append(FamilyEigensystem(ctx2, tuple(lifted), _family_residuals(A, ctx2, lifted)))
    return EigenSystem(matrix_class=cls, families=tuple(fams))


def _complex_unit(A: Hermitian3) -> Octonion:
    for q in (A.a, A.b, A.c):
        im = q.imag()
        if im.norm() > 1e-12:
            u = im * (1.0 / im.norm())
            nz = np.nonzero(np.abs(u.coords) > 1e-12)[0]
            if nz.size and u.coords[nz[0]] < 0:
                u = -u
            return u
    return Octonion.unit(1)


def _complex_eigensystem(A: Hermitian3, cls: MatrixClass) -> EigenSystem:
    i0 = _complex_unit(A)

    def to_c(q: Octonion) -> complex:
        return complex(q.real, inner(i0, q))

    rows = A.entries()
    H = np.array([[to_c(rows[i][j]) for j in range(3)] for i in range(3)])
    evals, evecs = np.linalg.eigh(H)
    pairs = []
    for k in range(3):
        col = evecs[:, k]
        nz = np.nonzero(np.abs(col) > 1e-9)[0]
        ph = col[nz[0]] / abs(col[nz[0]]) if nz.size else 1.0
        col = col / ph
        comps = tuple(
            Octonion.from_real(z.real) + i0 * z.imag for z in col
        )
        pairs.append(EigenPair(float(evals[k]), OctVector3(comps), 1))
    ctx = FamilyContext(m=1, r=0.0, phi=0.0, alpha=Octonion.zero(), s=None)
    fam = FamilyEigensystem(ctx, tuple(pairs), _family_residuals(A, ctx, pairs))
    return EigenSystem(matrix_class=cls, families=(fam,))


def eigensystem(A: Hermitian3) -> EigenSystem:
    """Full eigenstructure with routing by matrix class.

    Octonionic matrices get the two r-labeled families; quaternionic ones
    the plain family plus the lifted one; complex and real matrices have a
    single family and are flagged as such.
    """
    cls = classify(A)
    if cls.tag == OCTONIONIC:
        return _octonionic_eigensystem(A, cls)
    if cls.tag == QUATERNIONIC:
        return _quaternionic_eigensystem(A, cls)
    return _complex_eigensystem(A, cls)


def same_family(u: OctVector3, w: OctVector3, tol: float = 1e-8) -> bool:
    """Family membership predicate: u u^dagger (u u^dagger w) = (u^dagger u)(u u^dagger w).

    Defined for normalized u with a non-complex projector u u^dagger.
    """
    B = outer(u)
    if classify(B).tag in (REAL, COMPLEX):
        raise ComplexProjector("u u^dagger is complex; the membership predicate is undefined")
    n2 = u.norm2()
    bw = mat_vec(B, w)
    resid = (mat_vec(B, bw) - bw.scale(n2)).norm()
    return resid <= tol * max(w.norm(), 1e-300) * max(1.0, n2) ** 2


def _membership_operator(v: OctVector3) -> np.ndarray:
    """24x24 matrix of w -> (vv^t)((vv^t) w) - (v^t v)(vv^t) w."""
    B = outer(v)
    n2 = v.norm2()
    cols = np.empty((24, 24))
    for j in range(24):
        e = np.zeros(24)
        e[j] = 1.0
        w = OctVector3.from_coords(e)
        bw = mat_vec(B, w)
        cols[:, j] = (mat_vec(B, bw) - bw.scale(n2)).to_coords()
    return cols


def family_dimension_probe(v: OctVector3, samples: int = 24, seed: int = 0) -> int:
    """Estimated real dimension of the family determined by v.

    Samples random vectors, projects them onto the nullspace of the
    linear membership conditions, and returns the rank of the sampled
    solution set (12 for a generic non-complex v).
    """
    null = real_nullspace(_membership_operator(v), rel_threshold=1e-7)
    if null.shape[1] == 0 or samples < 1:
        return 0
    rng = np.random.default_rng(seed)
    pts = null @ (null.T @ rng.standard_normal((24, samples)))
    s = np.linalg.svd(pts, compute_uv=False)
    return int(np.sum(s > 1e-7 * max(1.0, s[0])))
