"""Character theory of the generalized quaternion group Q(2^n), in closed form.

The complex irreducibles are the four linear characters chi1..chi4 and the
two-dimensional Theta_s (s = 1 .. 2^(n-2)-1) sending x to diag(w^s, w^-s) and
y to [[0, (-1)^s], [1, 0]], with w = exp(2*pi*i/2^(n-1)).  Their values live
in the 2-power cyclotomic field of conductor 2^(n-1), so everything here is
exact.  Rational irreducibles are assembled from Galois orbits of the Theta_s;
the orbit of Theta_1 carries Schur index two.

Class functions are stored by value on a canonical list of conjugacy-class
representatives: x^a for a = 0 .. 2^(n-2), then y, then x*y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import Cyclotomic
from .groups import FiniteGroup, GroupError, Subgroup, build_quaternion


def _as_group(G_or_n) -> FiniteGroup:
    if isinstance(G_or_n, FiniteGroup):
        if G_or_n.kind != "quaternion":
            raise GroupError("character theory here is for quaternion groups")
        return G_or_n
    return quaternion_group(int(G_or_n))


@lru_cache(maxsize=None)
def quaternion_group(n: int) -> FiniteGroup:
    return build_quaternion(n)


def quaternion_coords(G: FiniteGroup, i: int) -> tuple[int, int]:
    """(a, e) with element i = x^a y^e, from the normal-form element order."""
    return i // 2, i % 2


@dataclass(frozen=True)
class ClassData:
    """Conjugacy classes of Q(2^n) in canonical order."""

    group: FiniteGroup
    reps: tuple[int, ...]
    sizes: tuple[int, ...]
    class_of: tuple[int, ...]
    inverse_class: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.reps)


@lru_cache(maxsize=None)
def class_data(n: int) -> ClassData:
    G = quaternion_group(n)
    quarter = 2 ** (n - 2)
    x, y = G.generators
    reps = [G.power(x, a) for a in range(quarter + 1)] + [y, G.cayley[x][y]]
    rep_class = {r: c for c, r in enumerate(reps)}
    class_of = [None] * G.order
    sizes = [0] * len(reps)
    for g in range(G.order):
        orbit = {G.conjugate(g, h) for h in range(G.order)}
        rep = next(r for r in reps if r in orbit)
        class_of[g] = rep_class[rep]
    for g in range(G.order):
        sizes[class_of[g]] += 1
    inverse_class = tuple(class_of[G.inv[r]] for r in reps)
    return ClassData(G, tuple(reps), tuple(sizes), tuple(class_of), inverse_class)


@dataclass(frozen=True)
class Character:
    """A class function on Q(2^n), stored on the canonical class reps."""

    n: int
    label: str
    values: tuple[Cyclotomic, ...]

    @property
    def degree(self) -> Fraction:
        return self.values[0].rational_value()

    def value_at(self, g: int) -> Cyclotomic:
        return self.values[class_data(self.n).class_of[g]]

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.n, "virtual", tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.n, "virtual", tuple(a - b for a, b in zip(self.values, other.values)))

    def __rmul__(self, k: int) -> "Character":
        return Character(self.n, "virtual", tuple(k * v for v in self.values))

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.n == other.n and all(
            a == b for a, b in zip(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.n, self.values))

    def _check(self, other: "Character"):
        if self.n != other.n:
            raise ValueError("characters of different groups")

    def __repr__(self):
        return f"Character({self.label}, n={self.n})"


def _chi_values(n: int, sx: int, sy: int) -> tuple[Cyclotomic, ...]:
    cd = class_data(n)
    out = []
    for r in cd.reps:
        a, e = quaternion_coords(cd.group, r)
        out.append(Cyclotomic.from_rational(sx**a * sy**e, 2))
    return tuple(out)


def _theta_values(n: int, s: int) -> tuple[Cyclotomic, ...]:
    m = 2 ** (n - 1)
    cd = class_data(n)
    out = []
    for r in cd.reps:
        a, e = quaternion_coords(cd.group, r)
        if e == 1:
            out.append(Cyclotomic.zero(m))
        else:
            out.append(Cyclotomic.zeta(m, s * a) + Cyclotomic.zeta(m, -s * a))
    return tuple(out)


def irreducible_characters(G_or_n) -> list[Character]:
    """chi1..chi4 followed by Theta_1..Theta_(2^(n-2)-1)."""
    n = _as_group(G_or_n).params["n"]
    chis = [
        Character(n, "chi1", _chi_values(n, 1, 1)),
        Character(n, "chi2", _chi_values(n, 1, -1)),
        Character(n, "chi3", _chi_values(n, -1, 1)),
        Character(n, "chi4", _chi_values(n, -1, -1)),
    ]
    thetas = [
        Character(n, f"theta{s}", _theta_values(n, s)) for s in range(1, 2 ** (n - 2))
    ]
    return chis + thetas


@lru_cache(maxsize=None)
def _irreducibles_cached(n: int) -> tuple[Character, ...]:
    return tuple(irreducible_characters(n))


def theta_matrices(n: int, s: int):
    """The printed 2x2 matrices of Theta_s on (x, y), over Q(zeta_(2^(n-1)))."""
    m = 2 ** (n - 1)
    zero = Cyclotomic.zero(m)
    one = Cyclotomic.one(m)
    X = ((Cyclotomic.zeta(m, s), zero), (zero, Cyclotomic.zeta(m, -s)))
    Y = ((zero, one if s % 2 == 0 else -one), (one, zero))
    return X, Y


def rep_matrix(n: int, label: str, g: int):
    """The representing matrix of the irreducible `label` at element g."""
    G = quaternion_group(n)
    a, e = quaternion_coords(G, g)
    if label.startswith("chi"):
        k = int(label[3:])
        sx = -1 if k in (3, 4) else 1
        sy = -1 if k in (2, 4) else 1
        return ((Cyclotomic.from_rational(sx**a * sy**e, 2),),)
    s = int(label[5:])
    X, Y = theta_matrices(n, s)
    M = _mat_pow(X, a, n)
    if e:
        M = _mat_mul(M, Y)
    return M


def _mat_mul(A, B):
    size = len(A)
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(size)), Cyclotomic.zero(2)) for j in range(size))
        for i in range(size)
    )


def _mat_pow(A, k, n):
    m = 2 ** (n - 1)
    size = len(A)
    out = tuple(
        tuple(Cyclotomic.one(m) if i == j else Cyclotomic.zero(m) for j in range(size))
        for i in range(size)
    )
    for _ in range(k):
        out = _mat_mul(out, A)
    return out


# ---------------------------------------------------------------------------
# Galois orbits and rational irreducibles
# ---------------------------------------------------------------------------


def fold_index(s: int, m: int) -> int:
    """Fold an exponent into the Theta index range 1..m/2-1 (Theta_s = Theta_(m-s))."""
    s %= m
    return m - s if s > m // 2 else s


def galois_orbit(n: int, s: int) -> tuple[int, ...]:
    """Indices of the Galois conjugates of Theta_s."""
    m = 2 ** (n - 1)
    orbit = {fold_index(t * s, m) for t in range(1, m, 2)}
    return tuple(sorted(orbit))


def galois_generator(n: int, j: int) -> int:
    """Smallest odd t whose powers sweep the Galois orbit of Theta_(2^(j-1))."""
    m = 2 ** (n - 1)
    s = 2 ** (j - 1)
    target = galois_orbit(n, s)
    if len(target) == 1:
        return 1
    for t in range(3, m, 2):
        orbit: set[int] = set()
        cur = s
        while fold_index(cur, m) not in orbit:
            orbit.add(fold_index(cur, m))
            cur = (cur * t) % m
        if len(orbit) == len(target):
            return t
    raise RuntimeError(f"no Galois generator found for n={n}, j={j}")


@dataclass(frozen=True)
class RationalIrreducible:
    """A rational irreducible of Q(2^n) with its complex constituents."""

    n: int
    label: str
    constituents: tuple[str, ...]
    schur_index: int
    character: Character


def rational_irreducibles(G_or_n) -> list[RationalIrreducible]:
    """chi1..chi4 and W1..W_(n-2); W1 = 2*(sum of odd Thetas), Wl = Galois orbit
    of Theta_(2^(l-1))."""
    n = _as_group(G_or_n).params["n"]
    irr = {c.label: c for c in _irreducibles_cached(n)}
    out = [
        RationalIrreducible(n, f"chi{k}", (f"chi{k}",), 1, irr[f"chi{k}"])
        for k in range(1, 5)
    ]
    for l in range(1, n - 1):
        orbit = galois_orbit(n, 2 ** (l - 1))
        ch = None
        for s in orbit:
            ch = irr[f"theta{s}"] if ch is None else ch + irr[f"theta{s}"]
        schur = 2 if l == 1 else 1
        if schur == 2:
            ch = 2 * ch
        out.append(
            RationalIrreducible(
                n, f"W{l}", tuple(f"theta{s}" for s in orbit), schur,
                Character(n, f"W{l}", ch.values),
            )
        )
    return out


# ---------------------------------------------------------------------------
# permutation characters, inner products, fixed-space dimensions
# ---------------------------------------------------------------------------


def permutation_character(G: FiniteGroup, K: Subgroup) -> Character:
    """The character of the action of G on the left cosets of K."""
    if K.group is not G:
        raise GroupError("subgroup belongs to a different group")
    kset = K.as_set()
    if any(G.cayley[a][b] not in kset for a in K.elements for b in K.elements):
        raise GroupError("K is not closed under products")
    n = G.params["n"]
    cd = class_data(n)
    reps = _coset_reps(G, kset)
    values = []
    for g in cd.reps:
        fixed = sum(1 for a in reps if G.cayley[G.cayley[G.inv[a]][g]][a] in kset)
        values.append(Cyclotomic.from_rational(fixed, 2))
    return Character(n, f"rho_{K.label or 'K'}", tuple(values))


def _coset_reps(G: FiniteGroup, kset: frozenset) -> list[int]:
    seen, reps = set(), []
    for g in range(G.order):
        if g in seen:
            continue
        reps.append(g)
        seen.update(G.cayley[g][k] for k in kset)
    return reps


def inner_product(chi: Character, psi: Character) -> Fraction:
    """(1/|G|) sum_g chi(g) psi(g^-1), computed exactly over classes."""
    chi._check(psi)
    cd = class_data(chi.n)
    total = Cyclotomic.zero(2)
    for c in range(cd.count):
        total = total + cd.sizes[c] * (chi.values[c] * psi.values[cd.inverse_class[c]])
    total = total.reduce_conductor()
    if not total.is_rational():
        raise ValueError("inner product of class functions must be rational here")
    return total.rational_value() / cd.group.order


def fixed_subspace_dim(V: Character, K: Subgroup) -> int:
    """dim V^K = (1/|K|) sum_{k in K} V(k), exactly."""
    total = Cyclotomic.zero(2)
    for k in K.elements:
        total = total + V.value_at(k)
    total = total.reduce_conductor()
    if not total.is_rational():
        raise ValueError("averaged character value must be rational")
    d = total.rational_value() / len(K.elements)
    if d.denominator != 1 or d < 0:
        raise ValueError(f"fixed-space dimension came out as {d}")
    return int(d)


def fixed_dim_by_averaging(n: int, label: str, K: Subgroup) -> int:
    """Independent cross-check: rank of the exact projector (1/|K|) sum_K rho(k)."""
    mats = [rep_matrix(n, label, k) for k in K.elements]
    size = len(mats[0])
    m = 2 ** (n - 1)
    avg = [[Cyclotomic.zero(m) for _ in range(size)] for _ in range(size)]
    for M in mats:
        for i in range(size):
            for j in range(size):
                avg[i][j] = avg[i][j] + M[i][j]
    inv_k = Fraction(1, len(K.elements))
    avg = [[inv_k * avg[i][j] for j in range(size)] for i in range(size)]
    # rank of a matrix of size <= 2 over a field
    if size == 1:
        return 0 if avg[0][0].is_zero() else 1
    det = avg[0][0] * avg[1][1] - avg[0][1] * avg[1][0]
    if not det.is_zero():
        return 2
    if any(not avg[i][j].is_zero() for i in range(2) for j in range(2)):
        return 1
    return 0


@lru_cache(maxsize=None)
def fixed_dim_table(n: int) -> dict:
    """dim V^K for every irreducible V and every named subgroup K (plus 1, G)."""
    from .groups import named_subgroups

    G = quaternion_group(n)
    subs = dict(named_subgroups(G))
    subs["1"] = Subgroup(G, (0,), "1")
    subs["G"] = Subgroup(G, tuple(range(G.order)), "G")
    table = {}
    for ch in _irreducibles_cached(n):
        for lbl, K in subs.items():
            table[(ch.label, lbl)] = fixed_subspace_dim(ch, K)
    return table
