"""Integer symplectic matrices, the Siegel upper half-space action, and exact
verification of fixed period-matrix families.

Fixed-family identities R.Z = Z are checked as A Z + B = Z (C Z + D), which
stays inside exact polynomial arithmetic over Q(i) and never inverts anything.
Group-level claims (closure order, defining relations, isomorphism type) are
checked on the matrix group generated by the printed integer matrices.  The
fixed-locus dimension estimator is the one numerical component: Gauss-Newton
on the stacked residuals over symmetric complex matrices, followed by a
singular-value count of the linearization; null directions are validated by
stepping along them and re-converging.
"""

from __future__ import annotations

import json
import hashlib
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import numpy as np

from .cyclo import Cyclotomic, CycloPoly, PolyMatrix
from .groups import FiniteGroup, find_isomorphism, group_from_cayley


IntMatrix = tuple[tuple[int, ...], ...]


def as_int_matrix(rows) -> IntMatrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def mat_mul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    n = len(A)
    m = len(B[0])
    k = len(B)
    Bt = list(zip(*B))
    return tuple(
        tuple(sum(A[i][t] * Bt[j][t] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def symplectic_form(g: int) -> IntMatrix:
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        J[i][g + i] = 1
        J[g + i][i] = -1
    return as_int_matrix(J)


def is_symplectic(R) -> bool:
    """Exact integer check R^T J R = J."""
    R = as_int_matrix(R)
    n = len(R)
    if n % 2 != 0 or any(len(row) != n for row in R):
        raise ValueError("matrix must be square of even dimension")
    J = symplectic_form(n // 2)
    Rt = tuple(zip(*R))
    return mat_mul(mat_mul(Rt, J), R) == J


def blocks(R: IntMatrix, g: int):
    A = tuple(row[:g] for row in R[:g])
    B = tuple(row[g:] for row in R[:g])
    C = tuple(row[:g] for row in R[g:])
    D = tuple(row[g:] for row in R[g:])
    return A, B, C, D


def act(R, Z: np.ndarray) -> np.ndarray:
    """(A Z + B)(C Z + D)^-1 on a numeric point of H_g."""
    R = as_int_matrix(R)
    g = Z.shape[0]
    A, B, C, D = (np.array(blk, dtype=float) for blk in blocks(R, g))
    denom = C @ Z + D
    if abs(np.linalg.det(denom)) < 1e-12:
        raise ZeroDivisionError("C Z + D is numerically singular")
    return (A @ Z + B) @ np.linalg.inv(denom)


def in_upper_half(Z: np.ndarray, tol: float = 1e-10) -> bool:
    """Symmetric with positive-definite imaginary part (Cholesky pivots > tol)."""
    if not np.allclose(Z, Z.T, atol=1e-8):
        return False
    Y = np.imag(Z)
    try:
        L = np.linalg.cholesky(Y)
    except np.linalg.LinAlgError:
        return False
    return float(np.min(np.diag(L)) ** 2) > tol


def check_period_equivalence(M: np.ndarray, R, Z1: np.ndarray, Z2: np.ndarray, tol: float = 1e-9) -> bool:
    """Checker for M (I Z1) = (I Z2) R given candidate (M, R); no search."""
    R = np.array(as_int_matrix(R), dtype=float)
    g = Z1.shape[0]
    P1 = np.hstack([np.eye(g), Z1])
    P2 = np.hstack([np.eye(g), Z2])
    return bool(np.max(np.abs(M @ P1 - P2 @ R)) < tol)


# ---------------------------------------------------------------------------
# exact fixed-family verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FixedFamilyReport:
    generator_ok: tuple[bool, ...]

    @property
    def ok(self) -> bool:
        return all(self.generator_ok)

    def to_json(self) -> dict:
        return {"per_generator_zero": list(self.generator_ok), "ok": self.ok}


def verify_fixed_family(generators, family: PolyMatrix) -> FixedFamilyReport:
    """For each generator, whether A Z + B - Z (C Z + D) is exactly zero."""
    g = family.rows
    nv = family.entries[0][0].nvars
    flags = []
    for R in generators:
        R = as_int_matrix(R)
        A, B, C, D = blocks(R, g)
        PA = PolyMatrix.from_int_matrix([list(r) for r in A], nv)
        PB = PolyMatrix.from_int_matrix([list(r) for r in B], nv)
        PC = PolyMatrix.from_int_matrix([list(r) for r in C], nv)
        PD = PolyMatrix.from_int_matrix([list(r) for r in D], nv)
        residual = (PA @ family) + PB - (family @ ((PC @ family) + PD))
        flags.append(residual.is_zero())
    return FixedFamilyReport(tuple(flags))


# ---------------------------------------------------------------------------
# matrix group closure and relation/isomorphism checks
# ---------------------------------------------------------------------------


def matrix_group_closure(generators, budget: int = 4096):
    """All products of the generators, by breadth-first closure."""
    gens = [as_int_matrix(g) for g in generators]
    n = len(gens[0])
    ident = identity_matrix(n)
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            for Gm in gens:
                P = mat_mul(M, Gm)
                if P not in index:
                    if len(elems) >= budget:
                        raise RuntimeError(f"matrix group closure exceeded budget {budget}")
                    index[P] = len(elems)
                    elems.append(P)
                    nxt.append(P)
        frontier = nxt
    return elems, index


def matrix_group_as_finite_group(generators, budget: int = 4096) -> tuple[FiniteGroup, list[int]]:
    """The generated matrix group as a FiniteGroup (plus generator indices)."""
    elems, index = matrix_group_closure(generators, budget)
    cayley = [[index[mat_mul(a, b)] for b in elems] for a in elems]
    names = [f"m{i}" for i in range(len(elems))]
    gen_idx = [index[as_int_matrix(g)] for g in generators]
    return group_from_cayley("matrix-group", names, cayley, gen_idx), gen_idx


@dataclass(frozen=True)
class GroupDataReport:
    order: int
    generators_symplectic: tuple[bool, ...]
    relations_hold: tuple[bool, ...]
    isomorphic_to_target: bool | None
    target: str | None
    presentation_witness: tuple[str, ...] | None

    @property
    def ok(self) -> bool:
        return (
            all(self.generators_symplectic)
            and all(self.relations_hold)
            and self.isomorphic_to_target in (None, True)
        )

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "generators_symplectic": list(self.generators_symplectic),
            "relations_hold": list(self.relations_hold),
            "isomorphic_to_target": self.isomorphic_to_target,
            "target": self.target,
            "presentation_witness": None
            if self.presentation_witness is None
            else list(self.presentation_witness),
            "ok": self.ok,
        }


def verify_group_data(generators, relations=None, target: FiniteGroup | None = None,
                      budget: int = 4096, gen_names=None) -> GroupDataReport:
    """Closure order, defining relations under the documented generator
    correspondence, and isomorphism against the named target group.

    When the matrix group is isomorphic to the target, the report also names
    matrix-group elements realizing the target's presentation (words in the
    input generators), which pins down the correspondence even when the
    printed generators themselves fail the literal relations.
    """
    sympl = tuple(is_symplectic(R) for R in generators)
    Gm, gen_idx = matrix_group_as_finite_group(generators, budget)
    rel_flags = []
    for word in relations or []:
        rel_flags.append(Gm.evaluate_word(word, images=gen_idx) == 0)
    iso = None
    witness = None
    if target is not None:
        back = find_isomorphism(target, Gm)
        iso = back is not None
        if back is not None:
            names = gen_names or [f"g{i}" for i in range(len(generators))]
            word_names = _element_words(Gm, gen_idx, names)
            witness = tuple(word_names[back[g]] for g in target.generators)
    return GroupDataReport(
        order=Gm.order,
        generators_symplectic=sympl,
        relations_hold=tuple(rel_flags),
        isomorphic_to_target=iso,
        target=target.name if target is not None else None,
        presentation_witness=witness,
    )


def _element_words(Gm: FiniteGroup, gen_idx, names) -> list[str]:
    """Shortest word in the given generators for every element of Gm."""
    words = [None] * Gm.order
    words[0] = "1"
    frontier = [0]
    while frontier:
        nxt = []
        for g in frontier:
            for gi, nm in zip(gen_idx, names):
                h = Gm.cayley[g][gi]
                if words[h] is None:
                    words[h] = nm if words[g] == "1" else f"{words[g]}*{nm}"
                    nxt.append(h)
        frontier = nxt
    return words


# ---------------------------------------------------------------------------
# numeric fixed points and locus dimension
# ---------------------------------------------------------------------------


def verify_fixed_point_numeric(generators, Z: np.ndarray, tol: float = 1e-10) -> float:
    """max over generators of ||R.Z - Z||_inf; Z must lie in H_g (Cholesky
    pivot tolerance `tol`)."""
    if not in_upper_half(Z, tol):
        raise ValueError("Z is not in the Siegel upper half-space")
    res = 0.0
    for R in generators:
        res = max(res, float(np.max(np.abs(act(R, Z) - Z))))
    return res


def _sym_basis(g: int):
    basis = []
    for i in range(g):
        for j in range(i, g):
            E = np.zeros((g, g), dtype=complex)
            E[i, j] = 1.0
            E[j, i] = 1.0
            basis.append(E)
    return basis


def _residual(gens_blocks, Z: np.ndarray) -> np.ndarray:
    vals = []
    for A, B, C, D in gens_blocks:
        vals.append((A @ Z + B - Z @ (C @ Z + D)).ravel())
    return np.concatenate(vals)


def _jacobian(gens_blocks, Z: np.ndarray, basis) -> np.ndarray:
    cols = []
    for E in basis:
        col = []
        for A, B, C, D in gens_blocks:
            col.append((A @ E - E @ (C @ Z + D) - Z @ (C @ E)).ravel())
        cols.append(np.concatenate(col))
    return np.array(cols).T


@dataclass
class LocusReport:
    dimension: int | None
    point: np.ndarray | None
    max_residual: float | None
    singular_values: list[float]
    validated_directions: int
    in_upper_half: bool
    converged_starts: int

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "max_residual": self.max_residual,
            "singular_values": self.singular_values,
            "validated_directions": self.validated_directions,
            "point_in_upper_half": self.in_upper_half,
            "converged_starts": self.converged_starts,
            "point": None
            if self.point is None
            else [[(v.real, v.imag) for v in row] for row in self.point.tolist()],
        }


def _newton(gens_blocks, Z0: np.ndarray, basis, iters: int = 60, ftol: float = 1e-11):
    Z = Z0.copy()
    for _ in range(iters):
        F = _residual(gens_blocks, Z)
        fn = float(np.max(np.abs(F)))
        if fn < ftol:
            return Z
        Jm = _jacobian(gens_blocks, Z, basis)
        delta, *_ = np.linalg.lstsq(Jm, -F, rcond=None)
        step = 1.0
        improved = False
        for _ in range(30):
            Zt = Z + step * _vec_to_sym(delta, Z.shape[0])
            if float(np.max(np.abs(_residual(gens_blocks, Zt)))) < fn:
                Z = Zt
                improved = True
                break
            step /= 2
        if not improved:
            return None
    F = _residual(gens_blocks, Z)
    return Z if float(np.max(np.abs(F))) < ftol else None


def _vec_to_sym(v: np.ndarray, g: int) -> np.ndarray:
    Z = np.zeros((g, g), dtype=complex)
    k = 0
    for i in range(g):
        for j in range(i, g):
            Z[i, j] = v[k]
            Z[j, i] = v[k]
            k += 1
    return Z


def fixed_locus_dimension(generators, seed_Z: np.ndarray | None = None, starts: int = 8,
                          rank_tol: float = 1e-7, rng_seed: int = 0) -> LocusReport:
    """Newton-estimated complex dimension of {Z symmetric : R.Z = Z for all R}.

    Starting points are random H_g matrices (or the given seed); at a
    converged point the dimension is the number of singular values of the
    linearization below rank_tol * sigma_max, and each null direction is
    cross-validated by stepping along it and re-converging to a nearby,
    distinct fixed point.
    """
    g = len(generators[0]) // 2
    gens_blocks = [
        tuple(np.array(blk, dtype=complex) for blk in blocks(as_int_matrix(R), g))
        for R in generators
    ]
    basis = _sym_basis(g)
    rng = np.random.default_rng(rng_seed)
    candidates = []
    if seed_Z is not None:
        candidates.append(np.array(seed_Z, dtype=complex))
    candidates.append(1j * np.eye(g))
    while len(candidates) < starts + (1 if seed_Z is not None else 0) + 1:
        X = rng.normal(size=(g, g))
        X = (X + X.T) / 2
        W = rng.normal(size=(g, g)) / np.sqrt(g)
        Y = W @ W.T + 0.5 * np.eye(g)
        candidates.append(X + 1j * Y)

    converged = []
    for Z0 in candidates:
        Z = _newton(gens_blocks, Z0, basis)
        if Z is not None:
            converged.append(Z)
    if not converged:
        return LocusReport(None, None, None, [], 0, False, 0)

    # prefer a representative inside H_g when one exists
    point = next((Z for Z in converged if in_upper_half(Z)), converged[0])
    Jm = _jacobian(gens_blocks, point, basis)
    sv = np.linalg.svd(Jm, compute_uv=False)
    smax = float(sv[0]) if len(sv) else 0.0
    if smax == 0.0:
        dim = len(basis)
        null_dirs = []
    else:
        dim = int(np.sum(sv < rank_tol * smax))
        _, _, Vh = np.linalg.svd(Jm)
        null_dirs = [Vh[-(k + 1)].conj() for k in range(dim)]

    validated = 0
    eps = 1e-3 * (1.0 + float(np.max(np.abs(point))))
    for d in null_dirs:
        Zs = point + eps * _vec_to_sym(d, g)
        Zn = _newton(gens_blocks, Zs, basis)
        if Zn is not None and float(np.max(np.abs(Zn - point))) > eps / 4:
            validated += 1
    residual = float(np.max(np.abs(_residual(gens_blocks, point))))
    return LocusReport(
        dimension=dim,
        point=point,
        max_residual=residual,
        singular_values=[float(s) for s in sv],
        validated_directions=validated,
        in_upper_half=in_upper_half(point),
        converged_starts=len(converged),
    )


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


class FixtureError(ValueError):
    """Missing or corrupted fixture data."""


def _canonical_payload(data: dict) -> bytes:
    return json.dumps(data, sort_keys=True, separators=(",", ":")).encode()


def fixture_checksum(data: dict) -> str:
    return hashlib.sha256(_canonical_payload(data)).hexdigest()


def load_fixture(name_or_path: str) -> dict:
    """Load a verification fixture by name (packaged) or filesystem path."""
    if name_or_path.endswith(".json") and "/" in name_or_path:
        with open(name_or_path) as fh:
            raw = json.load(fh)
    else:
        base = name_or_path[:-5] if name_or_path.endswith(".json") else name_or_path
        ref = resources.files("qact").joinpath(f"fixtures/{base}.json")
        if not ref.is_file():
            raise FixtureError(f"no fixture named {base!r}")
        raw = json.loads(ref.read_text())
    expected = raw.get("sha256")
    actual = fixture_checksum(raw["data"])
    if expected != actual:
        raise FixtureError(
            f"fixture {raw.get('name')} checksum mismatch: {actual} != {expected}"
        )
    return raw


def _poly_from_fixture(nvars: int, terms: list) -> CycloPoly:
    out = {}
    for t in terms:
        re = Fraction(t.get("re", "0"))
        im = Fraction(t.get("im", "0"))
        out[tuple(t["exp"])] = Cyclotomic.gauss(re, im)
    return CycloPoly.make(nvars, out)


def family_from_fixture(data: dict) -> PolyMatrix:
    fam = data["family"]
    nv = len(fam["params"])
    entries = [
        [_poly_from_fixture(nv, cell) for cell in row] for row in fam["entries"]
    ]
    return PolyMatrix.make(entries)


def family_with_variant(data: dict) -> PolyMatrix:
    """The family with the alternative printed entry substituted in."""
    var = data["family_variant"]
    fam = data["family"]
    nv = len(fam["params"])
    entries = [
        [_poly_from_fixture(nv, cell) for cell in row] for row in fam["entries"]
    ]
    entries[var["row"]][var["col"]] = _poly_from_fixture(nv, var["terms"])
    return PolyMatrix.make(entries)


def fixture_generators(data: dict) -> list[IntMatrix]:
    return [as_int_matrix(m) for m in data["generators"]]


SQRT2 = 2.0 ** 0.5
PROP13_LAMBDA = (500.0 + 146.0 * SQRT2) ** 0.5 / 644.0


def prop13_period_matrix(data: dict) -> np.ndarray:
    """Z0 from its exact (p + q*sqrt2) + i*lam*(r + s*sqrt2) entry quadruples."""
    quads = data["period_matrix"]
    g = len(quads)
    Z = np.zeros((g, g), dtype=complex)
    for i in range(g):
        for j in range(g):
            p, q, r, s = (Fraction(v) for v in quads[i][j])
            Z[i, j] = float(p) + float(q) * SQRT2 + 1j * PROP13_LAMBDA * (
                float(r) + float(s) * SQRT2
            )
    return Z
