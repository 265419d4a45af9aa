"""Surface-kernel epimorphisms of Q(2^n): validation, enumeration, orbits.

A Q(2^n)-action on a surface with signature (gamma; k_1..k_l) is encoded by a
ske: images of the hyperbolic generators (2*gamma of them) and of the elliptic
generators (one per period) subject to the order, long-relation and
surjectivity constraints.  Topological classification over a genus-zero
quotient is the orbit structure under braid moves combined with Aut(G)
relabelings; over a genus-one quotient the two elementary moves
(a,b,g) -> (a, ba, g) and (ab, b, g) are used instead.  Quotient surfaces
S_K are handled through the action on cosets G/K: the cycle structure of each
elliptic image determines the branch data and hence the genus, for any gamma.

Enumeration is plain depth-first search over element tuples with the last
slot solved from the long relation, an order filter per slot and a
maximal-subgroup bitmask for the surjectivity check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .groups import (
    FiniteGroup,
    Subgroup,
    automorphisms,
    build_quaternion,
    find_isomorphism,
    group_from_cayley,
    named_subgroups,
)


class BudgetExceeded(RuntimeError):
    """Enumeration would exceed the configured candidate budget."""


class UnsupportedMove(ValueError):
    """Braid transformations are defined over a genus-zero quotient only."""


# ---------------------------------------------------------------------------
# signatures and Riemann-Hurwitz
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Signature:
    gamma: int
    periods: tuple[int, ...]

    def __post_init__(self):
        if self.gamma < 0 or any(k < 2 for k in self.periods):
            raise ValueError(f"bad signature ({self.gamma}; {self.periods})")

    def mu(self) -> Fraction:
        return 2 * self.gamma - 2 + sum(Fraction(k - 1, k) for k in self.periods)

    def dimension(self) -> int:
        """Complex dimension 3*gamma - 3 + l of the corresponding family."""
        return 3 * self.gamma - 3 + len(self.periods)

    def sorted_periods(self) -> tuple[int, ...]:
        return tuple(sorted(self.periods))

    def __str__(self):
        return f"({self.gamma}; {','.join(map(str, self.periods))})"

    def to_json(self) -> dict:
        return {"genus": self.gamma, "periods": list(self.periods)}


def genus_from_signature(group_order: int, sig: Signature) -> int | None:
    """Genus g with 2g - 2 = |G| * mu, when integral and >= 2; None otherwise."""
    mu = sig.mu()
    if mu <= 0:
        return None
    val = group_order * mu
    if val.denominator != 1 or val.numerator % 2 != 0:
        return None
    g = val.numerator // 2 + 1
    return g if g >= 2 else None


def sigma_b(n: int, b: int) -> Signature:
    """The genus-zero signature (0; 2,..b..,2, 4, 4, 2^(n-1))."""
    return Signature(0, tuple([2] * b + [4, 4, 2 ** (n - 1)]))


def is_sigma_b(n: int, sig: Signature) -> int | None:
    """The b for which sig is sigma_b as a multiset, else None."""
    if sig.gamma != 0:
        return None
    counts = sorted(sig.periods)
    b = sum(1 for k in counts if k == 2)
    if counts == sorted([2] * b + [4, 4, 2 ** (n - 1)]):
        return b
    return None


# ---------------------------------------------------------------------------
# skes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ske:
    group: FiniteGroup
    signature: Signature
    hyperbolic: tuple[int, ...]
    elliptic: tuple[int, ...]

    def element_names(self) -> dict:
        g = self.group
        return {
            "hyperbolic": [g.names[i] for i in self.hyperbolic],
            "elliptic": [g.names[i] for i in self.elliptic],
        }

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "signature": self.signature.to_json(),
            "hyperbolic": self.element_names()["hyperbolic"],
            "elliptic": self.element_names()["elliptic"],
        }

    def __repr__(self):
        names = self.element_names()
        parts = names["hyperbolic"] + names["elliptic"]
        return f"Ske{self.signature}({', '.join(parts)})"


def ske_from_json(data: dict, group: FiniteGroup | None = None) -> Ske:
    from .groups import group_from_json

    G = group if group is not None else group_from_json(data["group"])
    sig = Signature(data["signature"]["genus"], tuple(data["signature"]["periods"]))
    hyp = tuple(G.element(nm) for nm in data.get("hyperbolic", []))
    ell = tuple(G.element(nm) for nm in data.get("elliptic", []))
    return Ske(G, sig, hyp, ell)


def long_relation_value(ske: Ske) -> int:
    """prod [alpha_i, beta_i] * prod x_i evaluated in the group."""
    G = ske.group
    out = 0
    it = iter(ske.hyperbolic)
    for a, b in zip(it, it):
        out = G.cayley[out][G.commutator(a, b)]
    for g in ske.elliptic:
        out = G.cayley[out][g]
    return out


def validate_ske(ske: Ske) -> tuple[bool, str]:
    """Check orders, the long relation and surjectivity; name the first failure."""
    G = ske.group
    if len(ske.hyperbolic) != 2 * ske.signature.gamma:
        return False, "hyperbolic image count does not match 2*gamma"
    if len(ske.elliptic) != len(ske.signature.periods):
        return False, "elliptic image count does not match the period list"
    for g, k in zip(ske.elliptic, ske.signature.periods):
        if G.orders[g] != k:
            return False, f"element {G.names[g]} has order {G.orders[g]}, period is {k}"
    if long_relation_value(ske) != 0:
        return False, "long relation does not evaluate to the identity"
    if len(G.closure(ske.hyperbolic + ske.elliptic)) != G.order:
        return False, "images do not generate the group"
    return True, "ok"


def braid(ske: Ske, i: int) -> Ske:
    """Braid move on elliptic slots i, i+1 (1-indexed); genus-zero quotient only."""
    if ske.signature.gamma != 0:
        raise UnsupportedMove("braid moves are implemented for gamma = 0")
    s = len(ske.elliptic)
    if not 1 <= i < s:
        raise ValueError(f"braid index {i} out of range 1..{s - 1}")
    G = ske.group
    t = list(ske.elliptic)
    gi, gj = t[i - 1], t[i]
    t[i - 1] = gj
    t[i] = G.cayley[G.cayley[G.inv[gj]][gi]][gj]
    periods = list(ske.signature.periods)
    periods[i - 1], periods[i] = periods[i], periods[i - 1]
    return Ske(G, Signature(0, tuple(periods)), (), tuple(t))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _maximal_masks(G: FiniteGroup) -> tuple[tuple[int, ...], int]:
    """Per-element bitmask of the maximal subgroups containing it.

    A tuple generates G iff the AND of its masks is zero: otherwise all
    entries sit inside one maximal subgroup.
    """
    maxim = G.maximal_subgroups()
    masks = [0] * G.order
    for bit, sub in enumerate(maxim):
        for g in sub:
            masks[g] |= 1 << bit
    return tuple(masks), (1 << len(maxim)) - 1


def count_tuple_candidates(G: FiniteGroup, periods) -> int:
    sizes = []
    for k in periods[:-1]:
        sizes.append(sum(1 for g in range(G.order) if G.orders[g] == k))
    total = 1
    for v in sizes:
        total *= v
    return total


def iter_valid_tuples(G: FiniteGroup, periods, max_candidates: int | None = None):
    """All (g_1..g_s) with the given exact orders, product 1, generating G.

    The last slot is solved from the long relation; the DFS keeps a running
    product and a running maximal-subgroup mask.
    """
    s = len(periods)
    if s < 2:
        return
    if max_candidates is not None:
        if count_tuple_candidates(G, periods) > max_candidates:
            raise BudgetExceeded(
                f"{count_tuple_candidates(G, periods)} candidates exceed budget {max_candidates}"
            )
    yield from _dfs_tuples(G, periods, (), 0, (1 << 62) - 1)


def _dfs_tuples(G: FiniteGroup, periods, prefix, prod, mask):
    """DFS suffix enumeration: extend `prefix` (with running product `prod`
    and generation mask `mask`) by elements of the given exact orders so that
    the total product is 1 and the whole tuple generates."""
    cayley = G.cayley
    inv = G.inv
    orders = G.orders
    masks, _full = _maximal_masks(G)
    buckets = [[g for g in range(G.order) if orders[g] == k] for k in periods]
    if any(not b for b in buckets):
        return
    s = len(periods)
    k_last = periods[-1]
    if s == 1:
        last = inv[prod]
        if orders[last] == k_last and not (mask & masks[last]):
            yield prefix + (last,)
        return

    def rec(slot: int, pre: tuple[int, ...], pr: int, mk: int):
        bucket = buckets[slot]
        if slot == s - 2:
            row = cayley[pr]
            for g in bucket:
                last = inv[row[g]]
                if orders[last] != k_last:
                    continue
                if mk & masks[g] & masks[last]:
                    continue
                yield pre + (g, last)
            return
        for g in bucket:
            yield from rec(slot + 1, pre + (g,), cayley[pr][g], mk & masks[g])

    yield from rec(0, prefix, prod, mask)


def iter_genus_one_triples(G: FiniteGroup, k: int):
    """All (a, b, g) with [alpha,beta]*x = 1, ord(g) = k, <a,b> = G."""
    masks, _ = _maximal_masks(G)
    for a in range(G.order):
        ma = masks[a]
        for b in range(G.order):
            if ma & masks[b]:
                continue
            g = G.inv[G.commutator(a, b)]
            if G.orders[g] == k:
                yield (a, b, g)


# ---------------------------------------------------------------------------
# orbit classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitReport:
    signature: Signature
    total: int
    orbit_count: int
    representatives: tuple[Ske, ...]
    orbit_sizes: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "signature": self.signature.to_json(),
            "valid_skes": self.total,
            "orbit_count": self.orbit_count,
            "orbit_sizes": list(self.orbit_sizes),
            "representatives": [r.to_json() for r in self.representatives],
        }


@lru_cache(maxsize=None)
def _aut_perms(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    return tuple(a.perm for a in automorphisms(G))


def classify(G: FiniteGroup, sig: Signature, max_candidates: int = 5_000_000) -> OrbitReport:
    """Orbits of valid skes under braids (gamma 0) or the two elementary moves
    (gamma 1), both combined with Aut(G)."""
    if sig.gamma == 0:
        nodes = set()
        for arrangement in sorted(set(itertools.permutations(sig.periods))):
            for t in iter_valid_tuples(G, arrangement, max_candidates):
                nodes.add(t)
        moves = _braid_moves(G, len(sig.periods)) + _aut_moves(G)
        node_of = lambda t: Ske(G, Signature(0, tuple(G.orders[g] for g in t)), (), t)
    elif sig.gamma == 1 and len(sig.periods) == 1:
        nodes = set(iter_genus_one_triples(G, sig.periods[0]))
        moves = _genus_one_moves(G) + _aut_moves(G)
        node_of = lambda t: Ske(G, sig, (t[0], t[1]), (t[2],))
    else:
        raise UnsupportedMove(f"classification not implemented for signature {sig}")
    orbits = _orbit_partition(nodes, moves)
    reps = tuple(node_of(min(orbit)) for orbit in orbits)
    return OrbitReport(
        signature=sig,
        total=len(nodes),
        orbit_count=len(orbits),
        representatives=reps,
        orbit_sizes=tuple(len(o) for o in orbits),
    )


def _braid_moves(G: FiniteGroup, s: int):
    cayley = G.cayley
    inv = G.inv

    def make(i):
        def move(t):
            gi, gj = t[i], t[i + 1]
            return t[:i] + (gj, cayley[cayley[inv[gj]][gi]][gj]) + t[i + 2:]

        return move

    return [make(i) for i in range(s - 1)]


def _genus_one_moves(G: FiniteGroup):
    cayley = G.cayley

    def m1(t):
        a, b, g = t
        return (a, cayley[b][a], g)

    def m2(t):
        a, b, g = t
        return (cayley[a][b], b, g)

    return [m1, m2]


def _aut_moves(G: FiniteGroup):
    perms = _aut_perms(G)

    def make(p):
        def move(t):
            return tuple(p[g] for g in t)

        return move

    return [make(p) for p in perms]


def _orbit_partition(nodes: set, moves) -> list[set]:
    """Connected components under the given bijective moves."""
    unvisited = set(nodes)
    orbits = []
    while unvisited:
        start = unvisited.pop()
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for t in frontier:
                for mv in moves:
                    u = mv(t)
                    if u not in orbit:
                        # moves stay inside the valid set; a miss means a bug
                        if u not in nodes:
                            raise RuntimeError("orbit move left the valid ske set")
                        orbit.add(u)
                        nxt.append(u)
            frontier = nxt
        unvisited -= orbit
        orbits.append(orbit)
    return sorted(orbits, key=min)


# ---------------------------------------------------------------------------
# quotient data via the coset action
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientData:
    genus: int
    periods: tuple[int, ...]

    def to_json(self) -> dict:
        return {"genus": self.genus, "periods": list(self.periods)}


@lru_cache(maxsize=None)
def _coset_structure(G: FiniteGroup, kset: frozenset) -> tuple[tuple[int, ...], int]:
    """coset index per element for the left cosets gK, plus the index [G:K]."""
    coset_of = [-1] * G.order
    count = 0
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        for k in kset:
            coset_of[G.cayley[g][k]] = count
        count += 1
    return tuple(coset_of), count


def quotient_data(ske: Ske, K: Subgroup) -> QuotientData:
    """Genus and branch periods of S_K from the cycle structure on G/K."""
    G = ske.group
    coset_of, index = _coset_structure(G, K.as_set())
    reps = [0] * index
    seen = [False] * index
    for g in range(G.order):
        c = coset_of[g]
        if not seen[c]:
            seen[c] = True
            reps[c] = g
    defect = 0
    branch: list[int] = []
    for g, k in zip(ske.elliptic, ske.signature.periods):
        perm = [coset_of[G.cayley[g][reps[c]]] for c in range(index)]
        for cyc_len in _cycle_lengths(perm):
            defect += cyc_len - 1
            if k % cyc_len != 0:
                raise RuntimeError("cycle length does not divide the period")
            if k // cyc_len > 1:
                branch.append(k // cyc_len)
    rhs = index * (2 * ske.signature.gamma - 2) + defect
    if rhs % 2 != 0:
        raise RuntimeError("Riemann-Hurwitz parity failure")
    genus = rhs // 2 + 1
    return QuotientData(genus, tuple(sorted(branch)))


def _cycle_lengths(perm) -> list[int]:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        out.append(length)
    return out


# ---------------------------------------------------------------------------
# genus-zero actions (sigma_b classification)
# ---------------------------------------------------------------------------


def witness_eta(G: FiniteGroup, b: int) -> Ske:
    """The explicit ske realizing sigma_b: all 2-periods go to y^2, then
    (y, y^-1 x^-1, x) for even b and (x^-1 y, y, x) for odd b."""
    n = G.params["n"]
    x, y = G.generators
    y2 = G.power(y, 2)
    if b % 2 == 0:
        tail = [y, G.inv[G.cayley[x][y]], x]
    else:
        tail = [G.cayley[G.inv[x]][y], y, x]
    return Ske(G, sigma_b(n, b), (), tuple([y2] * b + tail))


def is_genus_zero_action(ske: Ske) -> bool:
    """True iff S_K is rational for every nontrivial subgroup K (checked on a
    conjugacy transversal; quotient genus is conjugation-invariant)."""
    if ske.signature.gamma != 0:
        return False
    subs = named_subgroups(ske.group)
    if quotient_data(ske, subs["Z"]).genus != 0:
        return False
    transversal = [l for l in sorted(subs) if l not in ("Z", "N1", "N2", "N3")]
    return all(quotient_data(ske, subs[l]).genus == 0 for l in transversal)


@dataclass(frozen=True)
class GenusZeroRecord:
    b: int
    signature: Signature
    genus: int
    witness: Ske
    witness_valid: bool
    witness_genus_zero: bool

    def to_json(self) -> dict:
        return {
            "b": self.b,
            "signature": self.signature.to_json(),
            "genus": self.genus,
            "witness": self.witness.to_json(),
            "witness_valid": self.witness_valid,
            "witness_genus_zero": self.witness_genus_zero,
        }


def genus_zero_actions(n: int, max_b: int) -> list[GenusZeroRecord]:
    """sigma_b data with validated witnesses for 0 <= b <= max_b."""
    G = _quaternion(n)
    out = []
    for b in range(max_b + 1):
        sig = sigma_b(n, b)
        genus = genus_from_signature(G.order, sig)
        w = witness_eta(G, b)
        ok, _ = validate_ske(w)
        out.append(
            GenusZeroRecord(
                b=b,
                signature=sig,
                genus=2 ** (n - 2) * (b + 1),
                witness=w,
                witness_valid=ok and genus == 2 ** (n - 2) * (b + 1),
                witness_genus_zero=is_genus_zero_action(w),
            )
        )
    return out


@lru_cache(maxsize=None)
def _quaternion(n: int) -> FiniteGroup:
    return build_quaternion(n)


@dataclass
class GenusZeroScan:
    """Result of the exhaustive genus-zero-iff-sigma_b confirmation."""

    n: int
    max_periods: int
    signatures_checked: int
    skes_checked: int
    sigma_b_values_seen: list[int]
    mismatches: list[dict]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "max_periods": self.max_periods,
            "signatures_checked": self.signatures_checked,
            "skes_checked": self.skes_checked,
            "sigma_b_values_seen": self.sigma_b_values_seen,
            "mismatches": self.mismatches,
            "ok": self.ok,
        }


def genus_zero_exhaustive_scan(n: int, max_periods: int = 7, jobs: int = 1) -> GenusZeroScan:
    """Confirm over every valid ske with gamma = 0 and at most `max_periods`
    periods that the genus-zero property holds iff the signature is a sigma_b.

    The per-ske check goes through the cheap Z-quotient first (Z is contained
    in every nontrivial subgroup, so a nonrational S_Z already refutes the
    genus-zero property) and only then sweeps the full subgroup transversal.
    """
    G = _quaternion(n)
    subs = named_subgroups(G)
    transversal = [subs[l] for l in sorted(subs) if l not in ("Z", "N1", "N2", "N3")]
    zsub = subs["Z"]
    ncyc = {id(K): _ncycles_table(G, K) for K in transversal}
    zcyc = _ncycles_table(G, zsub)
    indices = {id(K): G.order // K.order for K in transversal}

    avail = sorted({G.orders[g] for g in range(1, G.order)})
    sigs = 0
    checked = 0
    mismatches: list[dict] = []
    seen_b: set[int] = set()
    for s in range(3, max_periods + 1):
        for multiset in itertools.combinations_with_replacement(avail, s):
            sig = Signature(0, multiset)
            genus = genus_from_signature(G.order, sig)
            if genus is None:
                continue
            sigs += 1
            b = is_sigma_b(n, sig)
            expected = b is not None
            zi = G.order // 2
            for t in _tuples_for_scan(G, multiset, jobs):
                checked += 1
                # genus of S_Z from the precomputed coset cycle counts
                defect = sum(zi - zcyc[g] for g in t)
                gz = (zi * (-2) + defect) // 2 + 1
                if gz == 0:
                    genus_zero = all(
                        (indices[id(K)] * (-2) + sum(indices[id(K)] - ncyc[id(K)][g] for g in t)) // 2 + 1 == 0
                        for K in transversal
                    )
                else:
                    genus_zero = False
                if genus_zero != expected:
                    mismatches.append(
                        {
                            "signature": sig.to_json(),
                            "ske": [G.names[g] for g in t],
                            "genus_zero": genus_zero,
                            "sigma_b": b,
                        }
                    )
                elif expected:
                    seen_b.add(b)
    return GenusZeroScan(
        n=n,
        max_periods=max_periods,
        signatures_checked=sigs,
        skes_checked=checked,
        sigma_b_values_seen=sorted(seen_b),
        mismatches=mismatches[:20],
    )


def _tuples_for_scan(G: FiniteGroup, periods, jobs: int = 1):
    """Sorted-order tuples suffice for property scans: braid moves sort the
    periods of any valid ske without changing the action."""
    if jobs > 1:
        yield from _tuples_parallel(G, periods, jobs)
    else:
        yield from iter_valid_tuples(G, periods)


def _tuples_parallel(G: FiniteGroup, periods, jobs: int):
    """Split the first slot across processes; results merge deterministically."""
    import multiprocessing as mp

    first = [g for g in range(G.order) if G.orders[g] == periods[0]]
    if len(periods) < 3 or not first or G.kind != "quaternion":
        yield from iter_valid_tuples(G, periods)
        return
    args = [(G.params["n"], periods, g) for g in first]
    with mp.Pool(jobs) as pool:
        for chunk in pool.imap(_scan_chunk, args):
            yield from chunk


def _scan_chunk(arg):
    n, periods, g0 = arg
    G = _quaternion(n)
    masks, _ = _maximal_masks(G)
    return list(_dfs_tuples(G, periods[1:], (g0,), g0, masks[g0]))


@lru_cache(maxsize=None)
def _ncycles_table_cached(G: FiniteGroup, kset: frozenset) -> tuple[int, ...]:
    coset_of, index = _coset_structure(G, kset)
    reps = []
    seen = set()
    for g in range(G.order):
        if coset_of[g] not in seen:
            seen.add(coset_of[g])
            reps.append(g)
    table = []
    for g in range(G.order):
        perm = [coset_of[G.cayley[g][r]] for r in reps]
        table.append(len(_cycle_lengths(perm)))
    return tuple(table)


def _ncycles_table(G: FiniteGroup, K: Subgroup) -> tuple[int, ...]:
    return _ncycles_table_cached(G, K.as_set())


def z_branch_count(ske: Ske) -> int:
    """Number of branch values of S -> S_Z (each marked 2 for genus-zero skes)."""
    return len(quotient_data(ske, named_subgroups(ske.group)["Z"]).periods)


# ---------------------------------------------------------------------------
# the one-dimensional family census
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyRecord:
    label: str
    signature: Signature
    genus: int
    stratum_bound: int | None
    orbit_count: int
    ske_count: int
    representative: Ske

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "signature": self.signature.to_json(),
            "genus": self.genus,
            "stratum_bound": self.stratum_bound,
            "orbit_count": self.orbit_count,
            "ske_count": self.ske_count,
            "representative": self.representative.to_json(),
        }


def family_label(n: int, sig: Signature) -> str:
    """Name a one-dimensional family by its signature shape."""
    half = 2 ** (n - 1)
    if sig.gamma == 1 and sig.periods == (2 ** (n - 2),):
        return "F0"
    ps = sig.sorted_periods()
    if ps == (4, 4, 4, 4):
        return "F1"
    if n >= 4 and ps == tuple(sorted((half, half, 4, 4))):
        return "F2"
    for k in range(2, n):
        if ps == tuple(sorted((half, 2 ** (n - k), 4, 4))):
            return f"C{k}"
    return f"sig{sig}"


def stratum_bound(n: int, label: str) -> int | None:
    """The printed upper bounds for the number of equisymmetric strata."""
    if label in ("F0", "F1", f"C{n - 1}"):
        return 1
    if label == "F2":
        return 2 ** (n - 2)
    if label.startswith("C"):
        k = int(label[1:])
        return 2 ** (n - k - 1)
    return None


def one_dimensional_families(n: int, max_candidates: int = 5_000_000) -> list[FamilyRecord]:
    """Census of signatures with 3*gamma - 3 + l = 1 carrying at least one
    valid ske: (0; k1..k4) and (1; k)."""
    if not 3 <= n <= 6:
        raise ValueError("census supported for 3 <= n <= 6")
    G = _quaternion(n)
    avail = sorted({G.orders[g] for g in range(1, G.order)})
    out = []
    for multiset in itertools.combinations_with_replacement(avail, 4):
        sig = Signature(0, multiset)
        genus = genus_from_signature(G.order, sig)
        if genus is None:
            continue
        report = classify(G, sig, max_candidates)
        if report.total == 0:
            continue
        label = family_label(n, sig)
        out.append(
            FamilyRecord(
                label=label,
                signature=sig,
                genus=genus,
                stratum_bound=stratum_bound(n, label),
                orbit_count=report.orbit_count,
                ske_count=report.total,
                representative=report.representatives[0],
            )
        )
    for k in avail:
        sig = Signature(1, (k,))
        genus = genus_from_signature(G.order, sig)
        if genus is None:
            continue
        report = classify(G, sig, max_candidates)
        if report.total == 0:
            continue
        label = family_label(n, sig)
        out.append(
            FamilyRecord(
                label=label,
                signature=sig,
                genus=genus,
                stratum_bound=stratum_bound(n, label),
                orbit_count=report.orbit_count,
                ske_count=report.total,
                representative=report.representatives[0],
            )
        )
    return sorted(out, key=lambda f: (f.signature.gamma, f.signature.sorted_periods()))


def family_representative(n: int, label: str) -> Ske:
    """The paper's explicit representative ske of each one-dimensional family."""
    G = _quaternion(n)
    x, y = G.generators
    half = 2 ** (n - 1)
    quarter = 2 ** (n - 2)
    mul, inv, power = G.cayley, G.inv, G.power
    xy = mul[x][y]
    if label == "F0":
        # (alpha, beta, gamma) -> (y, x y, x^2)
        return Ske(G, Signature(1, (quarter,)), (y, xy), (power(x, 2),))
    if label == "F1":
        # theta_0 = (x y, y, y, x y)
        return Ske(G, Signature(0, (4, 4, 4, 4)), (), (xy, y, y, xy))
    if label == "F1'":
        # the variant with p = 2^(n-2): (x y, y, y^-1, x y^-1)
        yinv = inv[y]
        return Ske(G, Signature(0, (4, 4, 4, 4)), (), (xy, y, yinv, mul[x][yinv]))
    if label == "F2":
        # theta_p with p = 0: (x, x^(2^(n-2)-1), y, y)
        return Ske(
            G,
            Signature(0, (half, half, 4, 4)),
            (),
            (x, power(x, quarter - 1), y, y),
        )
    if label.startswith("F2@"):
        p = int(label.split("@")[1])
        return Ske(
            G,
            Signature(0, (half, half, 4, 4)),
            (),
            (x, power(x, p - 1 + quarter), y, mul[power(x, p)][y]),
        )
    if label.startswith("C"):
        k = int(label[1:])
        if not 2 <= k <= n - 1:
            raise ValueError(f"C-family index {k} out of range for n={n}")
        alpha = (1 + quarter - 2 ** (k - 1)) % half
        g2 = power(x, 2 ** (k - 1))
        return Ske(
            G,
            Signature(0, (half, 2 ** (n - k), 4, 4)),
            (),
            (power(x, alpha), g2, y, xy),
        )
    raise ValueError(f"unknown family label {label!r}")


# ---------------------------------------------------------------------------
# extension to the order-2^(n+1) supergroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionReport:
    ok: bool
    index: int
    mu_ratio: Fraction
    mu_ratio_ok: bool
    subgroup_isomorphic: bool
    restriction_valid: bool
    equivalent_to_theta: bool
    restriction: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "index": self.index,
            "mu_ratio": str(self.mu_ratio),
            "mu_ratio_ok": self.mu_ratio_ok,
            "subgroup_isomorphic": self.subgroup_isomorphic,
            "restriction_valid": self.restriction_valid,
            "equivalent_to_theta": self.equivalent_to_theta,
            "restriction": list(self.restriction),
        }


class InvalidEmbedding(ValueError):
    """The embedding words do not cut out a subgroup isomorphic to G."""


def evaluate_words(theta_prime: Ske, words) -> list[int]:
    """Evaluate words in the Fuchsian generators of theta_prime's domain."""
    Gp = theta_prime.group
    images = list(theta_prime.hyperbolic) + list(theta_prime.elliptic)
    out = []
    for word in words:
        v = 0
        for slot, exp in word:
            v = Gp.cayley[v][Gp.power(images[slot], exp)]
        out.append(v)
    return out


def subgroup_as_group(Gp: FiniteGroup, elems: frozenset, gens: list[int]) -> tuple[FiniteGroup, dict]:
    """The subgroup on `elems` as a standalone FiniteGroup plus an index map."""
    ordered = [0] + sorted(e for e in elems if e != 0)
    pos = {e: i for i, e in enumerate(ordered)}
    cayley = [[pos[Gp.cayley[a][b]] for b in ordered] for a in ordered]
    names = [Gp.names[e] for e in ordered]
    H = group_from_cayley(f"sub({Gp.name})", names, cayley, [pos[g] for g in gens])
    return H, pos


def check_extension(theta: Ske, theta_prime: Ske, words) -> ExtensionReport:
    """Verify that theta_prime restricts, along the given words, to an action
    equivalent to theta: the word images generate an index-2 subgroup
    isomorphic to theta's group, the restricted tuple is a valid ske of
    theta's signature, it lies in theta's (braid x Aut)-orbit, and the
    Riemann-Hurwitz index identity mu(Delta)/mu(Delta') = [Delta':Delta]
    holds exactly.
    """
    Gp = theta_prime.group
    ok_prime, msg = validate_ske(theta_prime)
    if not ok_prime:
        raise InvalidEmbedding(f"theta_prime is not a valid ske: {msg}")
    imgs = evaluate_words(theta_prime, words)
    sub = Gp.closure(imgs)
    index = Gp.order // len(sub)
    mu_ratio = theta.signature.mu() / theta_prime.signature.mu()
    mu_ok = mu_ratio == index

    H, pos = subgroup_as_group(Gp, sub, imgs)
    iso = find_isomorphism(H, theta.group)
    if iso is None:
        raise InvalidEmbedding("word images do not generate a copy of G")
    mapped = [iso[pos[v]] for v in imgs]
    gamma = theta.signature.gamma
    restricted = Ske(
        theta.group,
        theta.signature,
        tuple(mapped[: 2 * gamma]),
        tuple(mapped[2 * gamma:]),
    )
    valid, _ = validate_ske(restricted)
    equivalent = valid and _in_same_orbit(theta, restricted)
    return ExtensionReport(
        ok=bool(mu_ok and valid and equivalent),
        index=index,
        mu_ratio=mu_ratio,
        mu_ratio_ok=mu_ok,
        subgroup_isomorphic=True,
        restriction_valid=valid,
        equivalent_to_theta=equivalent,
        restriction=tuple(theta.group.names[v] for v in mapped),
    )


def _in_same_orbit(theta: Ske, other: Ske) -> bool:
    G = theta.group
    if theta.signature.gamma == 0:
        moves = _braid_moves(G, len(theta.elliptic)) + _aut_moves(G)
        start = theta.elliptic
        target = other.elliptic
    else:
        moves = _genus_one_moves(G) + _aut_moves(G)
        start = theta.hyperbolic + theta.elliptic
        target = other.hyperbolic + other.elliptic
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            for mv in moves:
                u = mv(t)
                if u not in orbit:
                    orbit.add(u)
                    nxt.append(u)
        frontier = nxt
        if target in orbit:
            return True
    return target in orbit


def extension_data(n: int, family: str, supergroup: str):
    """The explicit supergroup action and restriction words for each family.

    Returns (theta, theta_prime, words);  theta is the family representative
    the restriction must be equivalent to.
    """
    from .groups import build_named

    Gp = build_named(supergroup, n=n)
    z = Gp.element("z")
    x = Gp.element("x")
    y = Gp.element("y")
    mul = Gp.cayley
    half = 2 ** (n - 1)
    if family == "F0":
        if supergroup != "G1":
            raise ValueError("F0 extends to G1")
        theta = family_representative(n, "F0")
        tp = Ske(
            Gp,
            Signature(0, (2, 2, 2, half)),
            (),
            (z, mul[y][z], mul[mul[x][y]][z], mul[x][z]),
        )
        words = [
            [(0, 1), (1, 1)],        # alpha' = y1 y2
            [(3, 1), (1, 1)],        # beta'  = y4 y2
            [(3, 2)],                # gamma' = y4^2
        ]
        return theta, tp, words
    if family == "F1":
        if supergroup != "G1":
            raise ValueError("F1 extends to G1")
        theta = family_representative(n, "F1'")
        tp = Ske(
            Gp,
            Signature(0, (2, 2, 4, 4)),
            (),
            (mul[z][y], mul[mul[x][y]][z], mul[x][y], y),
        )
        words = [
            [(2, 1)],                  # x1' = y3
            [(3, 1)],                  # x2' = y4
            [(0, 1), (3, 1), (0, 1)],  # x3' = y1 y4 y1
            [(1, 1), (2, 1), (1, 1)],  # x4' = y2 y3 y2
        ]
        return theta, tp, words
    if family == "F2":
        p = 2 ** (n - 2) if supergroup == "G1" else 2
        theta = family_representative(n, f"F2@{p}")
        tp = Ske(
            Gp,
            Signature(0, (2, 2, 4, half)),
            (),
            (z, mul[z][y], mul[x][Gp.inv[y]], x),
        )
        words = [
            [(1, 1), (3, 1), (1, 1)],                  # x1'' = y2 y4 y2
            [(3, 1)],                                  # x2'' = y4
            [(0, 1), (1, 1), (2, 1), (1, -1), (0, -1)],  # (y1 y2) y3 (y1 y2)^-1
            [(1, 1), (2, 1), (1, 1)],                  # x4'' = y2 y3 y2
        ]
        return theta, tp, words
    raise ValueError(f"no extension data for family {family!r}")
