"""Dimension calculus for the isotypical / group-algebra decompositions.

Given the multiplicities (a_1..a_4; b_s) of the analytic representation of a
Q(2^n)-action on an abelian variety A, this module produces the dimensions of
the geometric factors

    A_G,  Prym(A_N_i / A_G),  Prym(A / A_Z),  Prym(A_H_j / A_H_(j+1))^2,

checks the five equivalent triviality conditions, and inverts the linear
system dim A_K = <rho_a, rho_K> to recover the multiplicities from quotient
genera of a concrete surface action.  For n = 3 the factor list has no
H-steps; that case is handled as its own branch throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .groups import Subgroup, named_subgroups
from .reptheory import (
    fixed_dim_table,
    fixed_subspace_dim,
    galois_orbit,
    quaternion_group,
    rep_matrix,
)
from .cyclo import Cyclotomic


class InvalidMultiplicities(ValueError):
    """Multiplicity vector violates the Galois constraints."""


@dataclass(frozen=True)
class MultiplicityVector:
    """Multiplicities (a; b) of rho_a = sum a_j chi_j + sum b_s Theta_s."""

    n: int
    a: tuple[int, int, int, int]
    b: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise InvalidMultiplicities("n must be >= 3")
        if len(self.a) != 4 or len(self.b) != 2 ** (self.n - 2) - 1:
            raise InvalidMultiplicities(
                f"need 4 a-values and {2 ** (self.n - 2) - 1} b-values for n={self.n}"
            )
        if any(v < 0 for v in self.a) or any(v < 0 for v in self.b):
            raise InvalidMultiplicities("multiplicities must be non-negative")

    def b_at(self, s: int) -> int:
        return self.b[s - 1]

    def total_dimension(self) -> int:
        return sum(self.a) + 2 * sum(self.b)

    def check_galois(self) -> None:
        """b_s must be constant on each Galois orbit of Theta indices."""
        for l in range(1, self.n - 1):
            orbit = galois_orbit(self.n, 2 ** (l - 1))
            vals = {self.b_at(s) for s in orbit}
            if len(vals) > 1:
                raise InvalidMultiplicities(
                    f"b is not constant on the Galois orbit {orbit}"
                )

    def is_galois_consistent(self) -> bool:
        try:
            self.check_galois()
        except InvalidMultiplicities:
            return False
        return True

    @staticmethod
    def from_orbit_values(n: int, a, orbit_b) -> "MultiplicityVector":
        """Build from one b value per Galois orbit (orbit of 2^(l-1), l = 1..n-2)."""
        b = [0] * (2 ** (n - 2) - 1)
        for l, val in enumerate(orbit_b, start=1):
            for s in galois_orbit(n, 2 ** (l - 1)):
                b[s - 1] = val
        return MultiplicityVector(n, tuple(a), tuple(b))

    @staticmethod
    def random_valid(n: int, rng, max_mult: int = 5) -> "MultiplicityVector":
        a = tuple(rng.randint(0, max_mult) for _ in range(4))
        orbit_b = [rng.randint(0, max_mult) for _ in range(n - 2)]
        return MultiplicityVector.from_orbit_values(n, a, orbit_b)

    def to_json(self) -> dict:
        return {"n": self.n, "a": list(self.a), "b": list(self.b)}


@dataclass(frozen=True)
class FactorTable:
    """Dimensions of the factors in the group-algebra decomposition."""

    n: int
    dim_AG: int
    dim_prym_N: tuple[int, int, int]
    dim_prym_A_over_AZ: int
    dim_prym_H: tuple[tuple[int, int], ...]  # (j, dim) for j = 2..n-2
    total: int

    def factors(self) -> list[tuple[str, int, int, str]]:
        """(name, dimension, multiplicity, representation label) per factor."""
        out = [("A_G", self.dim_AG, 1, "chi1")]
        for i, d in enumerate(self.dim_prym_N, start=1):
            out.append((f"Prym(A_N{i}/A_G)", d, 1, f"chi{i + 1}"))
        out.append(("Prym(A/A_Z)", self.dim_prym_A_over_AZ, 1, "W1"))
        for j, d in self.dim_prym_H:
            out.append((f"Prym(A_H{j}/A_H{j + 1})", d, 2, f"W{j}"))
        return out

    def nontrivial_factor_count(self) -> int:
        return sum(1 for _, d, _, _ in self.factors() if d > 0)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "factors": [
                {"name": nm, "dim": d, "multiplicity": mult, "rep": rep}
                for nm, d, mult, rep in self.factors()
            ],
            "total_dimension": self.total,
        }


def factor_dimensions(mv: MultiplicityVector) -> FactorTable:
    """The dimension table: dim A_G = a1, N-Pryms a_(i+1), Z-Prym 2^(n-2) b_1,
    H-step Pryms 2^(n-j-2) b_(2^(j-1)) with multiplicity two."""
    mv.check_galois()
    n = mv.n
    if n == 3:
        prym_z = 2 * mv.b_at(1)
        dims_h: tuple[tuple[int, int], ...] = ()
    else:
        prym_z = 2 ** (n - 2) * mv.b_at(1)
        dims_h = tuple(
            (j, 2 ** (n - j - 2) * mv.b_at(2 ** (j - 1))) for j in range(2, n - 1)
        )
    table = FactorTable(
        n=n,
        dim_AG=mv.a[0],
        dim_prym_N=(mv.a[1], mv.a[2], mv.a[3]),
        dim_prym_A_over_AZ=prym_z,
        dim_prym_H=dims_h,
        total=mv.total_dimension(),
    )
    # conservation: weighted factor dimensions account for the whole of A
    weighted = (
        table.dim_AG
        + sum(table.dim_prym_N)
        + table.dim_prym_A_over_AZ
        + 2 * sum(d for _, d in table.dim_prym_H)
    )
    if weighted != table.total:
        raise RuntimeError("factor dimensions do not sum to the total dimension")
    return table


def dim_fixed_subvariety(mv: MultiplicityVector, K: Subgroup) -> int:
    """dim A_K = <rho_a, rho_K> = sum of multiplicities times fixed-space dims."""
    table = fixed_dim_table(mv.n)
    label = K.label if K.label else None
    if label is None or (label not in _known_labels(mv.n)):
        # fall back to averaging the character over an explicit subgroup
        total = 0
        chars = _irr_labels(mv.n)
        for lbl, mult in chars:
            if mult(mv) == 0:
                continue
            from .reptheory import _irreducibles_cached

            ch = next(c for c in _irreducibles_cached(mv.n) if c.label == lbl)
            total += mult(mv) * fixed_subspace_dim(ch, K)
        return total
    total = mv.a[0] * table[("chi1", label)]
    for i in (2, 3, 4):
        total += mv.a[i - 1] * table[(f"chi{i}", label)]
    for s in range(1, 2 ** (mv.n - 2)):
        bs = mv.b_at(s)
        if bs:
            total += bs * table[(f"theta{s}", label)]
    return total


def _known_labels(n: int) -> set[str]:
    labels = {"1", "G", "Z", "N1", "N2", "N3"}
    labels.update(f"H{j}" for j in range(2, n))
    labels.update(f"Ht{j}" for j in range(2, n))
    labels.update(f"K{i}" for i in range(2, n + 1))
    return labels


def _irr_labels(n: int):
    out = [(f"chi{i}", (lambda mv, i=i: mv.a[i - 1])) for i in range(1, 5)]
    out += [(f"theta{s}", (lambda mv, s=s: mv.b_at(s))) for s in range(1, 2 ** (n - 2))]
    return out


# ---------------------------------------------------------------------------
# triviality of the decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrivialityReport:
    """The five equivalent triviality statements, evaluated independently."""

    decomposition_trivial: bool        # every factor other than Prym(A/A_Z) vanishes
    dim_AZ_zero: bool
    all_dim_AK_zero: bool              # over a transversal of nontrivial subgroups
    multiplicity_pattern: bool         # a = 0 and b_s = 0 for even s
    fixed_point_free: bool             # 1 is not an eigenvalue of rho_a(g), g != 1

    def flags(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.decomposition_trivial,
            self.dim_AZ_zero,
            self.all_dim_AK_zero,
            self.multiplicity_pattern,
            self.fixed_point_free,
        )

    @property
    def agree(self) -> bool:
        return len(set(self.flags())) == 1

    def to_json(self) -> dict:
        keys = [
            "decomposition_trivial",
            "dim_AZ_zero",
            "all_dim_AK_zero",
            "multiplicity_pattern",
            "fixed_point_free",
        ]
        return {k: getattr(self, k) for k in keys} | {"agree": self.agree}


def is_trivial_decomposition(mv: MultiplicityVector) -> TrivialityReport:
    mv.check_galois()
    n = mv.n
    table = factor_dimensions(mv)
    flag1 = (
        table.dim_AG == 0
        and all(d == 0 for d in table.dim_prym_N)
        and all(d == 0 for _, d in table.dim_prym_H)
    )
    G = quaternion_group(n)
    subs = named_subgroups(G)
    flag2 = dim_fixed_subvariety(mv, subs["Z"]) == 0
    flag3 = all(
        dim_fixed_subvariety(mv, K) == 0
        for lbl, K in subs.items()
        if lbl not in ("Z",)
    ) and flag2
    flag4 = all(v == 0 for v in mv.a) and all(
        mv.b_at(s) == 0 for s in range(2, 2 ** (n - 2), 2)
    )
    flag5 = _fixed_point_free(mv)
    return TrivialityReport(flag1, flag2, flag3, flag4, flag5)


def _fixed_point_free(mv: MultiplicityVector) -> bool:
    """No rho_a(g), g != 1, has eigenvalue 1: det(rho_a(g) - I) != 0 exactly.

    The determinant factors over the irreducible blocks that actually occur,
    so an eigenvalue 1 shows up in some single block; blocks are materialized
    once per (n, label) and the verdict cached.
    """
    n = mv.n
    labels = [f"chi{i}" for i in range(1, 5) if mv.a[i - 1] > 0]
    labels += [f"theta{s}" for s in range(1, 2 ** (n - 2)) if mv.b_at(s) > 0]
    return not any(_block_has_fixed_vector(n, lbl) for lbl in labels)


@lru_cache(maxsize=None)
def _block_has_fixed_vector(n: int, label: str) -> bool:
    """Whether det(rho_label(g) - I) = 0 for some nontrivial g, exactly."""
    G = quaternion_group(n)
    one = Cyclotomic.one(2)
    for g in range(1, G.order):
        M = rep_matrix(n, label, g)
        if len(M) == 1:
            det = M[0][0] - one
        else:
            det = (M[0][0] - one) * (M[1][1] - one) - M[0][1] * M[1][0]
        if det.is_zero():
            return True
    return False


# ---------------------------------------------------------------------------
# multiplicities from quotient genera
# ---------------------------------------------------------------------------


class UnderdeterminedSystem(ValueError):
    """The quotient-genus system does not pin down the multiplicities."""


def multiplicities_from_quotient_genera(ske) -> MultiplicityVector:
    """Recover (a; b) of a Jacobian action from the genera of its quotients.

    Sets up dim A_K = <rho_a, rho_K> over K in {1, named subgroups, G} with
    dim A_K = genus(S_K) computed by the coset-action machinery, and solves
    the exact linear system in the orbit variables (a_1..a_4, c_1..c_(n-2)).
    Inconsistency means a bug (the genera come from an actual action);
    an underdetermined system is reported as such.
    """
    from .actions import quotient_data

    G = ske.group
    if G.kind != "quaternion":
        raise ValueError("multiplicities are defined for Q(2^n) actions")
    n = G.params["n"]
    table = fixed_dim_table(n)
    subs = dict(named_subgroups(G))
    subs["1"] = Subgroup(G, (0,), "1")
    subs["G"] = Subgroup(G, tuple(range(G.order)), "G")

    unknowns = 4 + (n - 2)
    rows, rhs = [], []
    for lbl, K in sorted(subs.items()):
        row = [Fraction(table[(f"chi{i}", lbl)]) for i in range(1, 5)]
        for l in range(1, n - 1):
            row.append(
                Fraction(
                    sum(table[(f"theta{s}", lbl)] for s in galois_orbit(n, 2 ** (l - 1)))
                )
            )
        rows.append(row)
        rhs.append(Fraction(quotient_data(ske, K).genus))
    solution = _solve_exact(rows, rhs, unknowns)
    a = tuple(int(v) for v in solution[:4])
    orbit_b = [int(v) for v in solution[4:]]
    if any(v != int(v) for v in solution) or any(v < 0 for v in solution):
        raise RuntimeError(f"non-integral or negative multiplicities {solution}")
    return MultiplicityVector.from_orbit_values(n, a, orbit_b)


def _solve_exact(rows, rhs, unknowns) -> list[Fraction]:
    """Exact Gaussian elimination; raises on inconsistency/underdetermination."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m = len(aug)
    pivots = []
    r = 0
    for c in range(unknowns):
        pivot = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if aug[i][unknowns] != 0:
            raise RuntimeError("inconsistent quotient-genus system (internal error)")
    if len(pivots) < unknowns:
        free = [c for c in range(unknowns) if c not in pivots]
        raise UnderdeterminedSystem(f"free variables at positions {free}")
    out = [Fraction(0)] * unknowns
    for i, c in enumerate(pivots):
        out[c] = aug[i][unknowns]
    return out
