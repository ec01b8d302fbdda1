"""Root systems of classical type A, B, C, D in rank at most four.

Weights are integer tuples in the basis of fundamental weights; roots are
integer tuples in the basis of simple roots.  Inner products are normalized so
that long roots have squared length 4 (short roots of B and C have 2), which
puts the A1 root at ``alpha = 2`` with ``varpi = 1``.

The Cartan matrix uses the convention ``cartan[i][j] = <alpha_i^vee, alpha_j>``;
hence the simple root ``alpha_j`` has fundamental coordinates given by column
``j`` of ``cartan``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Weight = tuple[int, ...]
RootCoords = tuple[int, ...]
Vector = tuple[Fraction, ...]

SUPPORTED = {"A": (1, 4), "B": (2, 4), "C": (2, 4), "D": (3, 4)}


class RootSystemError(ValueError):
    pass


def _ambient_simple_roots(label: str, rank: int) -> tuple[list[list[int]], int]:
    """Standard simple roots in R^n plus the scale applied to the dot product."""
    if label == "A":
        dim = rank + 1
        roots = []
        for i in range(rank):
            v = [0] * dim
            v[i], v[i + 1] = 1, -1
            roots.append(v)
        return roots, 2
    roots = []
    for i in range(rank - 1):
        v = [0] * rank
        v[i], v[i + 1] = 1, -1
        roots.append(v)
    last = [0] * rank
    if label == "B":
        last[-1] = 1
        scale = 2
    elif label == "C":
        last[-1] = 2
        scale = 1
    else:
        last[-2], last[-1] = 1, 1
        scale = 2
    roots.append(last)
    return roots, scale


def _inverse(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class MultiplicityFn:
    """Multiplicity per root-length class; class 1 is long, class 2 short.

    Simply laced types have a single class.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(x) for x in self.values)
        if any(x < 0 for x in vals):
            raise ValueError("multiplicities must be nonnegative integers")
        object.__setattr__(self, "values", vals)

    @classmethod
    def uniform(cls, rs: "RootSystem", k: int) -> "MultiplicityFn":
        return cls((k,) * rs.n_classes)

    @classmethod
    def coerce(cls, rs: "RootSystem", k) -> "MultiplicityFn":
        if isinstance(k, MultiplicityFn):
            mk = k
        elif isinstance(k, int):
            mk = cls.uniform(rs, k)
        else:
            vals = tuple(k)
            mk = cls(vals * rs.n_classes if len(vals) == 1 else vals)
        if len(mk.values) != rs.n_classes:
            raise ValueError(f"{rs.name} needs {rs.n_classes} multiplicity value(s), got {mk.values}")
        return mk

    def of_class(self, c: int) -> int:
        return self.values[c - 1]

    def of_root(self, rs: "RootSystem", root: RootCoords) -> int:
        return self.values[rs.root_class[_positive(root)] - 1]

    def is_zero(self) -> bool:
        return not any(self.values)

    def __str__(self):
        return ",".join(map(str, self.values))


def _positive(root: RootCoords) -> RootCoords:
    return root if any(x > 0 for x in root) else tuple(-x for x in root)


@dataclass(frozen=True)
class WeylElement:
    """Word in simple reflections, acting right to left."""

    word: tuple[int, ...] = ()

    def act(self, rs: "RootSystem", v):
        for i in reversed(self.word):
            v = rs.reflect(i, v)
        return v

    def inverse(self) -> "WeylElement":
        return WeylElement(tuple(reversed(self.word)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.word + other.word)


@dataclass(frozen=True, eq=False)
class RootSystem:
    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    simple_gram: tuple[tuple[Fraction, ...], ...]
    fund_gram: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[RootCoords, ...]
    root_class: dict = field(repr=False)
    # derived data, filled by build_root_system
    simple_root_weights: tuple[Weight, ...] = field(repr=False, default=())
    positive_root_weights: tuple[Weight, ...] = field(repr=False, default=())
    simple_lengths: tuple[Fraction, ...] = field(repr=False, default=())
    weight_to_root_matrix: tuple[tuple[Fraction, ...], ...] = field(repr=False, default=())

    @property
    def name(self) -> str:
        return f"{self.label}{self.rank}"

    @property
    def n_classes(self) -> int:
        return len(set(self.root_class.values()))

    def __hash__(self):
        return hash(self.name)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.name == other.name

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    def all_roots(self) -> list[RootCoords]:
        return list(self.positive_roots) + [tuple(-x for x in r) for r in self.positive_roots]

    def root_weight(self, root: RootCoords) -> Weight:
        """Fundamental coordinates of a root given in simple-root coordinates."""
        out = [0] * self.rank
        for ri, a in zip(root, self.simple_root_weights):
            if ri:
                for j in range(self.rank):
                    out[j] += ri * a[j]
        return tuple(out)

    def to_root_coords(self, w) -> Vector:
        """Simple-root coordinates (rational) of a vector in fundamental coordinates."""
        m = self.weight_to_root_matrix
        return tuple(sum((Fraction(w[i]) * m[i][j] for i in range(self.rank)), Fraction(0))
                     for j in range(self.rank))

    def reflect(self, i: int, v):
        """Simple reflection ``s_i`` on a vector in fundamental coordinates."""
        c = v[i]
        if not c:
            return tuple(v)
        a = self.simple_root_weights[i]
        return tuple(x - c * y for x, y in zip(v, a))

    def pairing(self, v, root: RootCoords):
        """``<v, alpha>`` for ``v`` in fundamental and ``alpha`` in simple-root coordinates."""
        s = sum(Fraction(r) * v[i] * self.simple_lengths[i] for i, r in enumerate(root) if r)
        return s / 2

    def coroot_pairing(self, v, root: RootCoords):
        """``2<v, alpha>/<alpha, alpha>``."""
        return 2 * self.pairing(v, root) / self.root_length2(root)

    def root_length2(self, root: RootCoords) -> Fraction:
        return self.pairing(self.root_weight(root), root)

    def reflect_by_root(self, root: RootCoords, v):
        n = self.coroot_pairing(v, root)
        a = self.root_weight(root)
        if isinstance(n, Fraction) and n.denominator == 1:
            n = int(n)
        return tuple(x - n * y for x, y in zip(v, a))

    def to_json(self) -> dict:
        s = lambda m: [[str(x) for x in row] for row in m]
        return {
            "type": self.name,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "simple_gram": s(self.simple_gram),
            "fund_gram": s(self.fund_gram),
            "positive_roots": [
                {"root": list(r), "weight": list(self.root_weight(r)),
                 "length2": str(self.root_length2(r)), "class": self.root_class[r]}
                for r in self.positive_roots
            ],
        }


def parse_type(spec: str) -> tuple[str, int]:
    spec = spec.strip().upper()
    if len(spec) < 2 or spec[0] not in SUPPORTED or not spec[1:].isdigit():
        raise RootSystemError(f"bad root system type {spec!r}")
    return spec[0], int(spec[1:])


@lru_cache(maxsize=None)
def build_root_system(label: str, rank: int | None = None) -> RootSystem:
    if rank is None:
        label, rank = parse_type(label)
    label = label.upper()
    if label not in SUPPORTED:
        raise RootSystemError(f"unsupported root system type {label!r}")
    lo, hi = SUPPORTED[label]
    if not lo <= rank <= hi:
        raise RootSystemError(f"type {label} requires rank in [{lo}, {hi}], got {rank}")

    amb, scale = _ambient_simple_roots(label, rank)
    gram = tuple(tuple(Fraction(scale * sum(a * b for a, b in zip(x, y))) for y in amb) for x in amb)
    cartan = tuple(tuple(int(2 * gram[i][j] / gram[i][i]) for j in range(rank)) for i in range(rank))
    simple_weights = tuple(tuple(cartan[i][j] for i in range(rank)) for j in range(rank))

    # rows of simple_weights express alpha_j in fundamental coordinates
    to_roots = _inverse(simple_weights)
    fund_gram = tuple(
        tuple(sum((to_roots[i][a] * gram[a][b] * to_roots[j][b]
                   for a in range(rank) for b in range(rank)), Fraction(0))
              for j in range(rank))
        for i in range(rank))

    roots = _generate_roots(cartan, rank)
    positive = sorted((r for r in roots if any(x > 0 for x in r)), key=lambda r: (sum(r), r))
    lengths = {r: sum(r[a] * gram[a][b] * r[b] for a in range(rank) for b in range(rank))
               for r in positive}
    classes = sorted(set(lengths.values()), reverse=True)
    if len(classes) > 2:
        raise RootSystemError("more than two root lengths")
    root_class = {r: classes.index(lengths[r]) + 1 for r in positive}

    rs = RootSystem(
        label=label, rank=rank, cartan=cartan, simple_gram=gram, fund_gram=fund_gram,
        positive_roots=tuple(positive), root_class=root_class,
        simple_root_weights=simple_weights,
        positive_root_weights=(),
        simple_lengths=tuple(gram[i][i] for i in range(rank)),
        weight_to_root_matrix=tuple(tuple(row) for row in to_roots),
    )
    object.__setattr__(rs, "positive_root_weights", tuple(rs.root_weight(r) for r in positive))
    failures = check_axioms(rs)
    if failures:
        raise RootSystemError(f"{rs.name} fails root system axioms: {failures[:3]}")
    return rs


def _generate_roots(cartan, rank: int) -> set[RootCoords]:
    """Closure of the simple roots under simple reflections, in root coordinates."""

    def refl(i, r):
        n = sum(r[j] * cartan[i][j] for j in range(rank))
        out = list(r)
        out[i] -= n
        return tuple(out)

    start = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    seen = set(start)
    todo = list(start)
    while todo:
        r = todo.pop()
        for i in range(rank):
            s = refl(i, r)
            if s not in seen:
                seen.add(s)
                todo.append(s)
    return seen


def check_axioms(rs: RootSystem) -> list[tuple]:
    """Exhaustive check of reflection closure and integrality for all root pairs."""
    roots = rs.all_roots()
    as_weights = {rs.root_weight(r): r for r in roots}
    failures = []
    for a in roots:
        for b in roots:
            n = rs.coroot_pairing(rs.root_weight(b), a)
            if n.denominator != 1:
                failures.append(("nonintegral", a, b, n))
            if rs.reflect_by_root(a, rs.root_weight(b)) not in as_weights:
                failures.append(("not closed", a, b))
    for r in rs.positive_roots:
        if any(x < 0 for x in r):
            failures.append(("mixed signs", r))
    for i in range(rs.rank):
        if rs.cartan[i][i] != 2 or any(rs.cartan[i][j] > 0 for j in range(rs.rank) if j != i):
            failures.append(("cartan", i))
    return failures


def inner(rs: RootSystem, x, y) -> Fraction:
    """``<x, y>`` for vectors in fundamental coordinates (roots via ``rs.root_weight``)."""
    g = rs.fund_gram
    return sum((Fraction(x[i]) * g[i][j] * y[j]
                for i in range(rs.rank) if x[i] for j in range(rs.rank) if y[j]), Fraction(0))


def is_dominant(lam: Iterable) -> bool:
    return all(c >= 0 for c in lam)


def weyl_orbit(rs: RootSystem, lam) -> set:
    lam = tuple(lam)
    seen = {lam}
    todo = [lam]
    while todo:
        v = todo.pop()
        for i in range(rs.rank):
            w = rs.reflect(i, v)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def dominant_representative(rs: RootSystem, lam) -> tuple:
    v = tuple(lam)
    while True:
        for i, c in enumerate(v):
            if c < 0:
                v = rs.reflect(i, v)
                break
        else:
            return v


def weyl_group_elements(rs: RootSystem) -> list[WeylElement]:
    """One word per group element, found by orbit of a regular weight."""
    rho = (1,) * rs.rank
    words = {rho: WeylElement()}
    todo = [rho]
    while todo:
        v = todo.pop(0)
        for i in range(rs.rank):
            w = rs.reflect(i, v)
            if w not in words:
                words[w] = WeylElement((i,) + words[v].word)
                todo.append(w)
    return list(words.values())


def dominance_leq(rs: RootSystem, mu, lam) -> bool:
    """``mu <= lam`` in dominance order: ``lam - mu`` is in the positive root cone lattice."""
    diff = tuple(a - b for a, b in zip(lam, mu))
    coords = rs.to_root_coords(diff)
    return all(c.denominator == 1 and c >= 0 for c in coords)


def weight_height(lam) -> int:
    """Level of a weight: the sum of its fundamental coordinates."""
    return sum(lam)


def root_height(rs: RootSystem, diff) -> Fraction:
    return sum(rs.to_root_coords(diff), Fraction(0))


def dominant_weights(rs: RootSystem, max_height: int) -> list[Weight]:
    out = [w for w in itertools.product(range(max_height + 1), repeat=rs.rank)
           if sum(w) <= max_height]
    return sorted(out, key=lambda w: (sum(w), w))


def lower_ideal(rs: RootSystem, lam) -> list[Weight]:
    """All dominant ``mu <= lam``, as a linear extension of dominance ending in ``lam``."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise RootSystemError(f"{lam} is not dominant")
    # dominant mu <= lam satisfy <mu, mu> <= <lam, lam>, and fund_gram entries are positive
    bound = inner(rs, lam, lam)
    box = [int(math.isqrt(int(bound / rs.fund_gram[i][i])) + 1) for i in range(rs.rank)]
    found = [mu for mu in itertools.product(*(range(b + 1) for b in box))
             if dominance_leq(rs, mu, lam)]
    return sorted(found, key=lambda mu: (-root_height(rs, tuple(a - b for a, b in zip(lam, mu))), mu))


def rho_k(rs: RootSystem, k) -> Vector:
    """``sum_{alpha > 0} k_alpha alpha`` in fundamental coordinates (twice rho(k))."""
    k = MultiplicityFn.coerce(rs, k)
    out = [Fraction(0)] * rs.rank
    for r, w in zip(rs.positive_roots, rs.positive_root_weights):
        kr = k.of_root(rs, r)
        for j in range(rs.rank):
            out[j] += kr * w[j]
    return tuple(out)


def fundamental_coweight(rs: RootSystem, i: int) -> Vector:
    """``varpi_i^vee``: pairs to 1 with ``alpha_i`` and to 0 with the other simple roots."""
    return tuple(Fraction(2, 1) / rs.simple_lengths[i] if j == i else Fraction(0)
                 for j in range(rs.rank))


def eigenvalue(rs: RootSystem, lam, k) -> Fraction:
    """``<lam, lam + sum_{alpha>0} k_alpha alpha>``."""
    two_rho = rho_k(rs, k)
    return inner(rs, lam, tuple(a + b for a, b in zip(lam, two_rho)))
