"""Concrete finite 2-groups of order <= 64 with exhaustively verified presentations.

Each named group is built from a hand-derived normal form (a tuple of generator
exponents) and a closed-form product rule read off its defining relations.  The
constructor then materializes the full Cayley table and re-verifies, element by
element, that the table is a Latin square and that every defining relation
evaluates to the identity, so a mistake in a product rule cannot survive
construction.

Generic machinery (conjugacy classes, subgroup lattice, automorphism group,
isomorphism testing) works on the table alone and is brute force throughout;
that is entirely adequate at order <= 64 and keeps the code free of any
computational-group-theory cleverness that would need its own verification.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


MAX_ORDER = 64


class GroupError(ValueError):
    """Invalid parameter or malformed group data."""


# ---------------------------------------------------------------------------
# core types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    """A group element as (owning group, index into the element list)."""

    group: "FiniteGroup"
    index: int

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if other.group is not self.group:
            raise GroupError("elements belong to different groups")
        return GroupElement(self.group, self.group.mul(self.index, other.index))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, self.group.inv[self.index])

    def order(self) -> int:
        return self.group.element_order(self.index)

    @property
    def name(self) -> str:
        return self.group.names[self.index]

    def __repr__(self):
        return f"<{self.name} in {self.group.name}>"


class FiniteGroup:
    """A finite group given by element names and a Cayley table on indices.

    Index 0 is always the identity.  Instances are immutable after
    construction and safe to share between threads/processes.
    """

    def __init__(self, name, names, cayley, generators, relations=None, kind="generic", params=None):
        self.name = name
        self.names = list(names)
        self.order = len(names)
        self.cayley = [list(row) for row in cayley]
        self.generators = list(generators)
        self.relations = relations or []
        self.kind = kind
        self.params = dict(params or {})
        if self.order > MAX_ORDER:
            raise GroupError(f"group order {self.order} exceeds supported maximum {MAX_ORDER}")
        self._index = {nm: i for i, nm in enumerate(self.names)}
        self._verify_table()
        self.inv = self._inverses()
        self.orders = [self._order_of(i) for i in range(self.order)]
        self._verify_relations()
        self._verify_generation()

    # -- construction checks -------------------------------------------------

    def _verify_table(self):
        n = self.order
        full = set(range(n))
        for i in range(n):
            if set(self.cayley[i]) != full:
                raise GroupError(f"row {i} of Cayley table is not a permutation")
            if {self.cayley[j][i] for j in range(n)} != full:
                raise GroupError(f"column {i} of Cayley table is not a permutation")
        for i in range(n):
            if self.cayley[0][i] != i or self.cayley[i][0] != i:
                raise GroupError("index 0 is not a two-sided identity")
        # associativity spot-check is exhaustive at these orders
        if n <= MAX_ORDER:
            c = self.cayley
            for a in range(n):
                ca = c[a]
                for b in range(n):
                    cab = c[ca[b]]
                    cb = c[b]
                    for d in range(n):
                        if cab[d] != ca[cb[d]]:
                            raise GroupError("Cayley table is not associative")

    def _inverses(self):
        inv = [None] * self.order
        for i in range(self.order):
            row = self.cayley[i]
            j = row.index(0)
            if self.cayley[j][i] != 0:
                raise GroupError("inverses are not two-sided")
            inv[i] = j
        return inv

    def _order_of(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.cayley[x][i]
            k += 1
        return k

    def _verify_relations(self):
        for word in self.relations:
            if self.evaluate_word(word) != 0:
                raise GroupError(f"defining relation {word} does not hold in {self.name}")

    def _verify_generation(self):
        if self.closure(self.generators) != frozenset(range(self.order)):
            raise GroupError(f"distinguished generators do not generate {self.name}")

    # -- basic operations ------------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def element_order(self, i: int) -> int:
        return self.orders[i]

    def power(self, i: int, k: int) -> int:
        if k < 0:
            i, k = self.inv[i], -k
        out = 0
        while k:
            if k & 1:
                out = self.cayley[out][i]
            i = self.cayley[i][i]
            k >>= 1
        return out

    def conjugate(self, g: int, h: int) -> int:
        """h g h^-1."""
        return self.cayley[self.cayley[h][g]][self.inv[h]]

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1."""
        return self.cayley[self.cayley[self.cayley[a][b]][self.inv[a]]][self.inv[b]]

    def evaluate_word(self, word, images=None) -> int:
        """Evaluate [(gen_slot, exponent), ...] at `images` (default: generators)."""
        if images is None:
            images = self.generators
        out = 0
        for slot, exp in word:
            out = self.cayley[out][self.power(images[slot], exp)]
        return out

    def element(self, name: str) -> int:
        """Index of the element written as a product like 'x^3*y'."""
        if name in self._index:
            return self._index[name]
        return self.parse(name)

    def parse(self, expr: str) -> int:
        """Parse a '*'-separated product of powers of generator letters."""
        expr = expr.strip()
        if expr in ("1", "e", ""):
            return 0
        letters = self.params.get("letters", [])
        out = 0
        for part in expr.split("*"):
            part = part.strip()
            if part == "1":
                continue
            if "^" in part:
                sym, _, exp = part.partition("^")
                k = int(exp)
            else:
                sym, k = part, 1
            if sym not in letters:
                raise GroupError(f"unknown generator {sym!r} in {self.name}")
            out = self.cayley[out][self.power(self.generators[letters.index(sym)], k)]
        return out

    def wrap(self, i: int) -> GroupElement:
        return GroupElement(self, i)

    def __iter__(self):
        return iter(range(self.order))

    def __repr__(self):
        return f"FiniteGroup({self.name}, order {self.order})"

    # -- derived structure -------------------------------------------------------

    def closure(self, seed) -> frozenset:
        out = {0}
        out.update(seed)
        frontier = list(out)
        while frontier:
            new = []
            for a in frontier:
                for b in list(out):
                    for c in (self.cayley[a][b], self.cayley[b][a]):
                        if c not in out:
                            out.add(c)
                            new.append(c)
            frontier = new
        return frozenset(out)

    @lru_cache(maxsize=None)
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.order
        classes = []
        for i in range(self.order):
            if seen[i]:
                continue
            orbit = {self.conjugate(i, h) for h in range(self.order)}
            for x in orbit:
                seen[x] = True
            classes.append(tuple(sorted(orbit)))
        return tuple(classes)

    @lru_cache(maxsize=None)
    def class_index(self) -> tuple[int, ...]:
        idx = [0] * self.order
        for c, cls in enumerate(self.conjugacy_classes()):
            for x in cls:
                idx[x] = c
        return tuple(idx)

    @lru_cache(maxsize=None)
    def center(self) -> frozenset:
        return frozenset(
            g for g in range(self.order)
            if all(self.cayley[g][h] == self.cayley[h][g] for h in range(self.order))
        )

    @lru_cache(maxsize=None)
    def commutator_subgroup(self) -> frozenset:
        comms = {self.commutator(a, b) for a in range(self.order) for b in range(self.order)}
        return self.closure(comms)

    def order_histogram(self) -> tuple[tuple[int, int], ...]:
        hist = {}
        for o in self.orders:
            hist[o] = hist.get(o, 0) + 1
        return tuple(sorted(hist.items()))

    @lru_cache(maxsize=None)
    def maximal_subgroups(self) -> tuple[frozenset, ...]:
        subs = all_subgroups(self)
        proper = [s for s in subs if len(s) < self.order]
        maxim = [
            s for s in proper
            if not any(s < t for t in proper)
        ]
        return tuple(maxim)

    def generates(self, elems) -> bool:
        """True iff the given elements generate the whole group."""
        return all(
            any(e not in m for e in elems) for m in self.maximal_subgroups()
        )

    def to_json(self) -> dict:
        out = {"name": self.name, "order": self.order}
        out.update({k: v for k, v in self.params.items() if k != "letters"})
        return out


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a sorted element-index tuple with an optional label."""

    group: FiniteGroup
    elements: tuple[int, ...]
    label: str = ""

    @staticmethod
    def generated(group: FiniteGroup, gens, label="") -> "Subgroup":
        return Subgroup(group, tuple(sorted(group.closure(gens))), label)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, i: int) -> bool:
        return i in set(self.elements)

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def is_normal(self) -> bool:
        s = self.as_set()
        return all(
            self.group.conjugate(g, h) in s for g in self.elements for h in range(self.group.order)
        )

    def __repr__(self):
        return f"Subgroup({self.label or self.elements}, order {self.order})"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def _materialize(name, elems, mult, namer, gen_elems, relations, kind, params):
    index = {e: i for i, e in enumerate(elems)}
    cayley = [[index[mult(a, b)] for b in elems] for a in elems]
    names = [namer(e) for e in elems]
    generators = [index[g] for g in gen_elems]
    return FiniteGroup(name, names, cayley, generators, relations, kind, params)


def _pow_name(sym: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return sym
    return f"{sym}^{k}"


def _join_name(*parts: str) -> str:
    s = "*".join(p for p in parts if p)
    return s if s else "1"


def quaternion_mul(n: int):
    """Normal-form product for Q(2^n): elements (a, e) standing for x^a y^e.

    (a,0)(b,f) = (a+b, f); (a,1)(b,0) = (a-b, 1); (a,1)(b,1) = (a-b+2^(n-2), 0),
    exponents mod 2^(n-1).  Derived once from y^2 = x^(2^(n-2)), y x y^-1 = x^-1;
    the construction re-checks those relations exhaustively.
    """
    half = 2 ** (n - 1)
    quarter = 2 ** (n - 2)

    def mult(u, v):
        a, e = u
        b, f = v
        if e == 0:
            return ((a + b) % half, f)
        if f == 0:
            return ((a - b) % half, 1)
        return ((a - b + quarter) % half, 0)

    return mult


def build_quaternion(n: int) -> FiniteGroup:
    """The generalized quaternion group of order 2^n, n >= 3."""
    if n < 3:
        raise GroupError(f"quaternion group needs n >= 3, got {n}")
    if 2**n > MAX_ORDER:
        raise GroupError(f"order 2^{n} exceeds supported maximum {MAX_ORDER}")
    half = 2 ** (n - 1)
    quarter = 2 ** (n - 2)
    elems = [(a, e) for a in range(half) for e in (0, 1)]
    mult = quaternion_mul(n)
    namer = lambda u: _join_name(_pow_name("x", u[0]), _pow_name("y", u[1]))
    relations = [
        [(0, half)],                       # x^(2^(n-1))
        [(1, 2), (0, quarter)],            # y^2 x^(2^(n-2))
        [(1, 1), (0, 1), (1, -1), (0, 1)], # y x y^-1 x
    ]
    return _materialize(
        f"Q{2**n}", elems, mult, namer, [(1, 0), (0, 1)], relations,
        kind="quaternion", params={"n": n, "letters": ["x", "y"]},
    )


def _build_g1_g2(n: int, variant: int) -> FiniteGroup:
    """Supergroups G1/G2 of Q(2^n) of order 2^(n+1): elements x^a y^e z^f.

    Both have z^2 = 1 and z y z = y^-1.  In G1, z centralizes x; in G2,
    z x z = x^(2^(n-2)+1).
    """
    if n < 3:
        raise GroupError(f"G{variant} needs n >= 3, got {n}")
    if 2 ** (n + 1) > MAX_ORDER:
        raise GroupError(f"order 2^{n + 1} exceeds supported maximum {MAX_ORDER}")
    half = 2 ** (n - 1)
    quarter = 2 ** (n - 2)
    t = 1 if variant == 1 else quarter + 1
    qmul = quaternion_mul(n)

    def move_z(b, f):
        # z * x^b y^f = x^(t*b) y^f * (x^(2^(n-2)) if f else 1) * z
        bb = (t * b) % half
        if f:
            bb = (bb + quarter) % half
        return (bb, f)

    def mult(u, v):
        a, e, ff = u
        b, f, gg = v
        if ff:
            b, f = move_z(b, f)
        q = qmul((a, e), (b, f))
        return (q[0], q[1], (ff + gg) % 2)

    elems = [(a, e, f) for a in range(half) for e in (0, 1) for f in (0, 1)]
    namer = lambda u: _join_name(_pow_name("x", u[0]), _pow_name("y", u[1]), _pow_name("z", u[2]))
    conj_x = [(2, 1), (0, 1), (2, 1), (0, -1 if variant == 1 else -(quarter + 1))]
    relations = [
        [(0, half)],
        [(2, 2)],
        [(1, 2), (0, quarter)],
        [(1, 1), (0, 1), (1, -1), (0, 1)],
        conj_x,                                  # z x z x^-1  (resp. z x z x^-(2^(n-2)+1))
        [(2, 1), (1, 1), (2, 1), (1, 1)],        # z y z y
    ]
    return _materialize(
        f"G{variant}(n={n})", elems, mult, namer,
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)], relations,
        kind=f"g{variant}", params={"n": n, "letters": ["x", "y", "z"]},
    )


def _build_qd16() -> FiniteGroup:
    """Quasi-dihedral group of order 32: <u,v : u^16, v^2, v u v u^-7>."""
    def mult(p, q):
        a, e = p
        b, f = q
        if e == 0:
            return ((a + b) % 16, f)
        return ((a + 7 * b) % 16, (1 + f) % 2)

    elems = [(a, e) for a in range(16) for e in (0, 1)]
    namer = lambda u: _join_name(_pow_name("u", u[0]), _pow_name("v", u[1]))
    relations = [
        [(0, 16)],
        [(1, 2)],
        [(1, 1), (0, 1), (1, 1), (0, -7)],
    ]
    return _materialize(
        "QD16", elems, mult, namer, [(1, 0), (0, 1)], relations,
        kind="qd16", params={"letters": ["u", "v"]},
    )


def _build_c4xc2_rtimes_c2() -> FiniteGroup:
    """<a,b,c : a^2, b^2, c^4, bcbc^3, acac^3, abac^2b> of order 16.

    The relations force a and b to commute with c and a b a = b c^2, so the
    normal form a^i b^j c^k multiplies by (i,j,k)(i',j',k') =
    (i+i', j+j', k+k'+2*j*i').
    """
    def mult(u, v):
        i, j, k = u
        i2, j2, k2 = v
        return ((i + i2) % 2, (j + j2) % 2, (k + k2 + 2 * j * i2) % 4)

    elems = [(i, j, k) for i in (0, 1) for j in (0, 1) for k in range(4)]
    namer = lambda u: _join_name(_pow_name("a", u[0]), _pow_name("b", u[1]), _pow_name("c", u[2]))
    relations = [
        [(0, 2)],
        [(1, 2)],
        [(2, 4)],
        [(1, 1), (2, 1), (1, 1), (2, 3)],
        [(0, 1), (2, 1), (0, 1), (2, 3)],
        [(0, 1), (1, 1), (0, 1), (2, 2), (1, 1)],
    ]
    return _materialize(
        "C4xC2_rtimes_C2", elems, mult, namer,
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)], relations,
        kind="c4xc2_rtimes_c2", params={"letters": ["a", "b", "c"]},
    )


def _build_d4xc2_rtimes_c2() -> FiniteGroup:
    """<r,s,a,b> of order 32 with D4 = <r,s>, a central in <r,s,a>, and
    b acting by r -> r, s -> s r a, a -> a r^2.

    Normal form r^p s^q a^i b^j; the product rule moves the left factor's b
    past the right factor before merging, using
      b r = r b,  b s = s r a b,  b a = r^2 a b,  s r = r^-1 s.
    """
    def mult(u, v):
        p1, q1, i1, j1 = u
        p2, q2, i2, j2 = v
        if j1:
            if q2:
                p2, i2 = (p2 - 1 - 2 * i2) % 4, (1 + i2) % 2
            else:
                p2 = (p2 + 2 * i2) % 4
        p = (p1 + (p2 if q1 == 0 else -p2)) % 4
        return (p, (q1 + q2) % 2, (i1 + i2) % 2, (j1 + j2) % 2)

    elems = [
        (p, q, i, j) for p in range(4) for q in (0, 1) for i in (0, 1) for j in (0, 1)
    ]
    namer = lambda u: _join_name(
        _pow_name("r", u[0]), _pow_name("s", u[1]), _pow_name("a", u[2]), _pow_name("b", u[3])
    )
    R, S, A, B = 0, 1, 2, 3
    relations = [
        [(R, 4)],
        [(S, 2)],
        [(A, 2)],
        [(B, 2)],
        [(S, 1), (R, 1), (S, 1), (R, 1)],
        [(A, 1), (R, 1), (A, 1), (R, -1)],
        [(A, 1), (S, 1), (A, 1), (S, 1)],
        [(B, 1), (R, 1), (B, 1), (R, -1)],
        [(B, 1), (S, 1), (B, 1), (A, -1), (R, -1), (S, -1)],   # bsb(sra)^-1
        [(B, 1), (A, 1), (B, 1), (R, -2), (A, -1)],            # bab(ar^2)^-1
    ]
    return _materialize(
        "D4xC2_rtimes_C2", elems, mult, namer,
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)], relations,
        kind="d4xc2_rtimes_c2", params={"letters": ["r", "s", "a", "b"]},
    )


def build_dihedral(m: int) -> FiniteGroup:
    """Dihedral group <r,s : r^m, s^2, (sr)^2> of order 2m."""
    if m < 1 or 2 * m > MAX_ORDER:
        raise GroupError(f"dihedral parameter {m} out of range")

    def mult(u, v):
        p1, q1 = u
        p2, q2 = v
        return ((p1 + (p2 if q1 == 0 else -p2)) % m, (q1 + q2) % 2)

    elems = [(p, q) for p in range(m) for q in (0, 1)]
    namer = lambda u: _join_name(_pow_name("r", u[0]), _pow_name("s", u[1]))
    relations = [[(0, m)], [(1, 2)], [(1, 1), (0, 1), (1, 1), (0, 1)]]
    return _materialize(
        f"D{m}", elems, mult, namer, [(1, 0), (0, 1)], relations,
        kind="dihedral", params={"m": m, "letters": ["r", "s"]},
    )


def build_named(name: str, n: int | None = None, m: int | None = None) -> FiniteGroup:
    """Build a group by its catalogue name.

    Names: Q<2^n> or ('Q', n=...), G1/G2 (need n), QD16, C4xC2_rtimes_C2,
    D4xC2_rtimes_C2, Dihedral (needs m).
    """
    key = name.strip()
    if key.upper().startswith("Q") and key[1:].isdigit():
        order = int(key[1:])
        nn = order.bit_length() - 1
        if 2**nn != order:
            raise GroupError(f"{name}: order must be a power of two")
        return build_quaternion(nn)
    if key in ("G1", "G2"):
        if n is None:
            raise GroupError(f"{name} needs the parameter n")
        return _build_g1_g2(n, 1 if key == "G1" else 2)
    if key == "QD16":
        return _build_qd16()
    if key == "C4xC2_rtimes_C2":
        return _build_c4xc2_rtimes_c2()
    if key == "D4xC2_rtimes_C2":
        return _build_d4xc2_rtimes_c2()
    if key == "Dihedral":
        if m is None:
            raise GroupError("Dihedral needs the parameter m")
        return build_dihedral(m)
    raise GroupError(f"unknown group name {name!r}")


def group_from_json(data: dict) -> FiniteGroup:
    return build_named(data["name"], n=data.get("n"), m=data.get("m"))


# ---------------------------------------------------------------------------
# the named-subgroup map of Q(2^n)
# ---------------------------------------------------------------------------


def named_subgroups(G: FiniteGroup) -> dict[str, Subgroup]:
    """All proper nontrivial subgroups of Q(2^n), keyed by their standard labels.

    H_j = <x^(2^(n-j)), y>, K_i = <x^(2^(n-i))>, Ht_j = <x^(2^(n-j)), x y>
    for j in 2..n-1 and i in 2..n, plus the aliases Z = K2, N1 = Kn,
    N2 = H_(n-1), N3 = Ht_(n-1).
    """
    if G.kind != "quaternion":
        raise GroupError("named_subgroups is defined for quaternion groups only")
    n = G.params["n"]
    x = G.generators[0]
    y = G.generators[1]
    xy = G.cayley[x][y]
    out: dict[str, Subgroup] = {}
    for j in range(2, n):
        xp = G.power(x, 2 ** (n - j))
        out[f"H{j}"] = Subgroup.generated(G, [xp, y], f"H{j}")
        out[f"Ht{j}"] = Subgroup.generated(G, [xp, xy], f"Ht{j}")
    for i in range(2, n + 1):
        out[f"K{i}"] = Subgroup.generated(G, [G.power(x, 2 ** (n - i))], f"K{i}")
    out["Z"] = Subgroup(G, out["K2"].elements, "Z")
    out["N1"] = Subgroup(G, out[f"K{n}"].elements, "N1")
    out["N2"] = Subgroup(G, out[f"H{n - 1}"].elements, "N2")
    out["N3"] = Subgroup(G, out[f"Ht{n - 1}"].elements, "N3")
    return out


def subgroup_by_label(G: FiniteGroup, label: str) -> Subgroup:
    """Resolve a subgroup by label, allowing '1' and 'G' for the extremes."""
    if label in ("1", "trivial"):
        return Subgroup(G, (0,), "1")
    if label in ("G", "full"):
        return Subgroup(G, tuple(range(G.order)), "G")
    table = named_subgroups(G)
    if label not in table:
        raise GroupError(f"unknown subgroup label {label!r}")
    return table[label]


def all_subgroups(G: FiniteGroup) -> frozenset[frozenset]:
    """Every subgroup, via closures of <=2-element subsets plus pairwise joins.

    The join pass makes the enumeration complete regardless of whether all
    subgroups are 2-generated; the lattice test compares both stages.
    """
    subs = two_generated_subgroups(G)
    current = set(subs)
    while True:
        new = set()
        for s, t in itertools.combinations(current, 2):
            if s <= t or t <= s:
                continue
            j = G.closure(s | t)
            if j not in current:
                new.add(j)
        if not new:
            break
        current |= new
    return frozenset(current)


def two_generated_subgroups(G: FiniteGroup) -> frozenset[frozenset]:
    subs = {frozenset([0])}
    cyclic = {}
    for g in range(G.order):
        cyclic[g] = G.closure([g])
        subs.add(cyclic[g])
    for g in range(G.order):
        for h in range(g + 1, G.order):
            if h in cyclic[g]:
                continue
            subs.add(G.closure([g, h]))
    return frozenset(subs)


# ---------------------------------------------------------------------------
# homomorphisms, automorphisms, isomorphism testing
# ---------------------------------------------------------------------------


def extend_homomorphism(G: FiniteGroup, H: FiniteGroup, gen_images) -> list[int] | None:
    """Extend images of G.generators to a homomorphism G -> H, or None.

    A breadth-first sweep checks phi(g * gen) = phi(g) * phi(gen) across every
    (element, generator) edge of the Cayley graph, which forces the
    homomorphism property on all products.
    """
    m: list[int | None] = [None] * G.order
    m[0] = 0
    queue = [0]
    while queue:
        nxt = []
        for g in queue:
            hg = m[g]
            for gi, hi in zip(G.generators, gen_images):
                g2 = G.cayley[g][gi]
                h2 = H.cayley[hg][hi]
                if m[g2] is None:
                    m[g2] = h2
                    nxt.append(g2)
                elif m[g2] != h2:
                    return None
        queue = nxt
    if any(v is None for v in m):
        return None
    return m  # type: ignore[return-value]


@dataclass(frozen=True)
class Automorphism:
    group: FiniteGroup
    perm: tuple[int, ...]

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self.perm[g] for g in self.group.generators)

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def compose(self, other: "Automorphism") -> "Automorphism":
        return Automorphism(self.group, tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))


def automorphisms(G: FiniteGroup) -> list[Automorphism]:
    """The full automorphism group, by brute force over generator images."""
    candidates = []
    for gi in G.generators:
        o = G.orders[gi]
        candidates.append([h for h in range(G.order) if G.orders[h] == o])
    out = []
    seen = set()
    for images in itertools.product(*candidates):
        m = extend_homomorphism(G, G, images)
        if m is None or len(set(m)) != G.order:
            continue
        perm = tuple(m)
        if perm not in seen:
            seen.add(perm)
            out.append(Automorphism(G, perm))
    return out


def _generating_tuple(G: FiniteGroup, max_size: int = 3) -> list[int]:
    """A small generating tuple found greedily (distinguished generators work,
    but a minimal pair keeps isomorphism searches tight)."""
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(range(1, G.order), size):
            if len(G.closure(combo)) == G.order:
                return list(combo)
    return list(G.generators)


def isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> list[int] | None:
    """An explicit isomorphism G -> H as an index map, or None.

    Fast-rejects on order, element-order histogram, center size and
    abelianization size before the generator-image search.
    """
    if G.order != H.order:
        return None
    if G.order_histogram() != H.order_histogram():
        return None
    if len(G.center()) != len(H.center()):
        return None
    if len(G.commutator_subgroup()) != len(H.commutator_subgroup()):
        return None
    gens = _generating_tuple(G)
    Gsmall = G
    if gens != list(G.generators):
        # reuse the walk with an ad-hoc generator list
        Gsmall = _with_generators(G, gens)
    cand = [
        [h for h in range(H.order) if H.orders[h] == Gsmall.orders[g]]
        for g in Gsmall.generators
    ]
    for images in itertools.product(*cand):
        m = extend_homomorphism(Gsmall, H, images)
        if m is not None and len(set(m)) == G.order:
            return m
    return None


def _with_generators(G: FiniteGroup, gens) -> FiniteGroup:
    clone = object.__new__(FiniteGroup)
    clone.__dict__.update(G.__dict__)
    clone.generators = list(gens)
    return clone


def group_from_cayley(name: str, names, cayley, generators) -> FiniteGroup:
    """Wrap an externally computed multiplication table (e.g. a matrix group)."""
    return FiniteGroup(name, names, cayley, generators, relations=None, kind="generic", params={})
