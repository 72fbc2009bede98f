"""Polyhedra generated by set and biset functions.

Every polyhedron kind is described by the same constraint format: rows
``x(P) - x(M) <sense> rhs`` with ``sense`` one of ``<=``, ``>=``, ``==``.  Membership,
tight families and lattice-point enumeration all work from that list.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, floor
from typing import Iterator, NamedTuple, Optional, Sequence, Union

from . import kernels
from .exact import Rational, point, q
from .ground import (
    Biset,
    biset_from_sign,
    check_permutation,
    check_signs,
    enumerate_bisets,
    reduced_intersection,
    reduced_union,
    signed_sum,
    submasks,
    subset_sum,
)
from .setfn import SUBMODULAR, SUPERMODULAR, BisetFunction, SetFunction, dual

SET_KINDS = ("P", "B", "Psup", "Bsup")
BISET_KINDS = ("Btilde", "Porth", "Borth")
KINDS = SET_KINDS + BISET_KINDS
ALIASES = {"P_sup": "Psup", "B_sup": "Bsup", "B_tilde": "Btilde", "P_orthant": "Porth", "B_orthant": "Borth"}

Key = Union[int, Biset]


class Constraint(NamedTuple):
    key: Key  # subset mask for set kinds, Biset for biset kinds
    pos: int
    neg: int
    sense: str
    rhs: Rational


class SaturationInfo(NamedTuple):
    sat_plus: int
    sat_minus: int


@dataclass(frozen=True)
class Polyhedron:
    """A polyhedron named by its generating function and its kind.

    ``P``/``B`` need a submodular-tagged ``SetFunction``, ``Psup``/``Bsup`` a
    supermodular-tagged one; ``Btilde``, ``Porth`` and ``Borth`` need a
    ``BisetFunction`` (the orthant kinds also need ``orthant``).
    """

    source: Union[SetFunction, BisetFunction]
    kind: str
    orthant: Optional[Biset] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ALIASES.get(self.kind, self.kind))
        if self.kind not in KINDS:
            raise ValueError(f"unknown polyhedron kind {self.kind!r}")
        if self.kind in SET_KINDS:
            if not isinstance(self.source, SetFunction):
                raise TypeError(f"{self.kind} needs a SetFunction")
            want = SUBMODULAR if self.kind in ("P", "B") else SUPERMODULAR
            if self.source.kind != want:
                raise ValueError(f"{self.kind} needs a {want} function, got {self.source.kind}")
        else:
            if not isinstance(self.source, BisetFunction):
                raise TypeError(f"{self.kind} needs a BisetFunction")
            if self.kind in ("Porth", "Borth"):
                if self.orthant is None:
                    raise ValueError(f"{self.kind} needs an orthant")
                s, t = Biset(*self.orthant).check()
                if s | t != self.source.full:
                    raise ValueError("orthant parts must cover the ground set")
                object.__setattr__(self, "orthant", Biset(s, t))

    @property
    def n(self) -> int:
        return self.source.n

    def is_base(self) -> bool:
        return self.kind in ("B", "Bsup", "Borth")

    def constraints(self) -> Iterator[Constraint]:
        src = self.source
        if self.kind in SET_KINDS:
            sense = "<=" if self.kind in ("P", "B") else ">="
            for m in range(1 << src.n):
                yield Constraint(m, m, 0, sense, src.values[m])
            if self.kind in ("B", "Bsup"):
                yield Constraint(src.full, src.full, 0, "==", src.values[src.full])
        elif self.kind == "Btilde":
            for b in enumerate_bisets(src.n):
                yield Constraint(b, b.pos, b.neg, "<=", src(b.pos, b.neg))
        else:
            s, t = self.orthant
            for x in submasks(s):
                for y in submasks(t):
                    yield Constraint(Biset(x, y), x, y, "<=", src(x, y))
            if self.kind == "Borth":
                yield Constraint(Biset(s, t), s, t, "==", src(s, t))


def _holds(lhs, sense, rhs) -> bool:
    if sense == "<=":
        return lhs <= rhs
    if sense == ">=":
        return lhs >= rhs
    return lhs == rhs


def _check_point(p: Polyhedron, x) -> tuple:
    x = point(x)
    if len(x) != p.n:
        raise ValueError(f"point has length {len(x)}, expected {p.n}")
    return x


def violated_constraint(p: Polyhedron, x: Sequence) -> Optional[Key]:
    """The first violated constraint's subset/biset, or None for members."""
    x = _check_point(p, x)
    for c in p.constraints():
        if not _holds(signed_sum(x, c.pos, c.neg), c.sense, c.rhs):
            return c.key
    return None


def member(p: Polyhedron, x: Sequence) -> bool:
    return violated_constraint(p, x) is None


def _require_member(p: Polyhedron, x) -> tuple:
    x = _check_point(p, x)
    bad = violated_constraint(p, x)
    if bad is not None:
        raise ValueError(f"point is not in {p.kind}: constraint {bad} violated")
    return x


def tight_family(p: Polyhedron, x: Sequence) -> list[Key]:
    """Every subset/biset whose constraint holds with equality at ``x``."""
    x = _require_member(p, x)
    seen = set()
    out = []
    for c in p.constraints():
        if c.key not in seen and signed_sum(x, c.pos, c.neg) == c.rhs:
            seen.add(c.key)
            out.append(c.key)
    return out


def verify_tight_closure(p: Polyhedron, x: Sequence) -> bool:
    """Whether the tight family is closed under (reduced) union and intersection."""
    fam = tight_family(p, x)
    tight = set(fam)
    if p.kind in SET_KINDS:
        for i, a in enumerate(fam):
            for b in fam[i + 1:]:
                if (a | b) not in tight or (a & b) not in tight:
                    return False
        return True
    for i, u in enumerate(fam):
        for v in fam[i + 1:]:
            join = reduced_union(u, v)
            meet = reduced_intersection(u, v)
            if join not in tight or meet not in tight:
                return False
    return True


def lift_to_base(f: SetFunction, x: Sequence, integral: bool = False) -> tuple:
    """Raise ``x`` in P(f) to a point of B(f) dominating it.

    Coordinates are saturated in index order, each by the largest step
    ``min over A containing i of f(A) - y(A)`` (rounded down if ``integral``).
    """
    if f.kind != SUBMODULAR:
        raise ValueError("lift_to_base needs a submodular function")
    y = list(_require_member(Polyhedron(f, "P"), x))
    if integral and not (f.is_integral() and all(isinstance(v, int) for v in y)):
        raise ValueError("integral lifting needs an integral function and point")
    for i in range(f.n):
        bit = 1 << i
        step = min(f.values[m] - subset_sum(y, m) for m in range(1 << f.n) if m & bit)
        if integral:
            step = floor(step)
        y[i] = q(y[i] + step)
    return tuple(y)


def greedy_vertex(f: SetFunction, pi: Sequence[int]) -> tuple:
    """Extreme point of B(f) (or B_sup(g)) along the chain of ``pi`` (0-based)."""
    pi = check_permutation(pi, f.n)
    z = [0] * f.n
    prefix = 0
    prev = 0
    for i in pi:
        prefix |= 1 << i
        val = f.values[prefix]
        z[i] = q(val - prev)
        prev = val
    return tuple(z)


def signed_greedy_vertex(h: BisetFunction, pi: Sequence[int], s: Sequence[int]) -> tuple:
    """Extreme-point candidate of the bisubmodular polyhedron for ``(pi, s)``."""
    pi = check_permutation(pi, h.n)
    s = check_signs(s, h.n)
    z = [0] * h.n
    prefix = 0
    prev = 0
    for i in pi:
        prefix |= 1 << i
        b = biset_from_sign(prefix, s)
        val = h(b.pos, b.neg)
        z[i] = q(s[i] * (val - prev))
        prev = val
    return tuple(z)


def saturation(h: BisetFunction, x: Sequence) -> SaturationInfo:
    """Indices that cannot move up (``sat_plus``) or down (``sat_minus``)."""
    fam = tight_family(Polyhedron(h, "Btilde"), x)
    plus = minus = 0
    for b in fam:
        plus |= b.pos
        minus |= b.neg
    return SaturationInfo(plus, minus)


def dependence(h: BisetFunction, x: Sequence, i: int, sign: int) -> Biset:
    """Reduced intersection of the tight bisets holding ``i`` on side ``sign``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    fam = tight_family(Polyhedron(h, "Btilde"), x)
    bit = 1 << i
    hits = [b for b in fam if (b.pos if sign > 0 else b.neg) & bit]
    if not hits:
        side = "positively" if sign > 0 else "negatively"
        raise ValueError(f"index {i + 1} is not {side} saturated at this point")
    out = hits[0]
    for b in hits[1:]:
        out = reduced_intersection(out, b)
    return out


def coordinate_bounds(p: Polyhedron) -> list[tuple[Optional[Rational], Optional[Rational]]]:
    """Per-coordinate bounds implied by the defining inequalities (None = unbounded)."""
    src = p.source
    n = p.n
    full = src.full
    out = []
    for i in range(n):
        bit = 1 << i
        if p.kind == "B":
            out.append((src.values[full] - src.values[full ^ bit], src.values[bit]))
        elif p.kind == "Bsup":
            out.append((src.values[bit], src.values[full] - src.values[full ^ bit]))
        elif p.kind == "P":
            out.append((None, src.values[bit]))
        elif p.kind == "Psup":
            out.append((src.values[bit], None))
        elif p.kind == "Btilde":
            out.append((-src(0, bit), src(bit, 0)))
        else:
            s, t = p.orthant
            if p.kind == "Porth":
                out.append((None, src(bit, 0)) if s & bit else (-src(0, bit), None))
            else:
                # B_(S,T) is the sign flip of B(h_(S,T)) on T
                hi = src(bit & s, bit & t)
                rest_s, rest_t = s & ~bit, t & ~bit
                lo = src(s, t) - src(rest_s, rest_t)
                out.append((lo, hi) if s & bit else (-hi, -lo))
    return out


def _implied_rows(p: Polyhedron):
    """Valid redundant rows that make lattice DFS prune at every level."""
    src = p.source
    if p.kind in ("B", "Bsup"):
        other = dual(src)
        sense = ">=" if p.kind == "B" else "<="
        for m in range(1, 1 << src.n):
            yield m, 0, sense, other.values[m]
    elif p.kind == "Borth":
        s, t = p.orthant
        top = src(s, t)
        for x in submasks(s):
            for y in submasks(t):
                yield x, y, ">=", top - src(s & ~x, t & ~y)


def enumerate_integral_points(p: Polyhedron, box: Optional[Sequence] = None) -> list[tuple]:
    """All integral members, sorted lexicographically.

    ``box`` is an optional list of ``(lo, hi)`` per coordinate; it is required
    for the unbounded kinds (``P``, ``Psup``, ``Porth``).
    """
    n = p.n
    bounds = coordinate_bounds(p)
    if box is not None:
        if len(box) != n:
            raise ValueError(f"box has {len(box)} entries, expected {n}")
        merged = []
        for (lo, hi), (blo, bhi) in zip(bounds, box):
            blo, bhi = q(blo), q(bhi)
            lo = blo if lo is None else max(lo, blo)
            hi = bhi if hi is None else min(hi, bhi)
            merged.append((lo, hi))
        bounds = merged
    if any(lo is None or hi is None for lo, hi in bounds):
        raise ValueError(f"{p.kind} is unbounded; supply a box")
    lo = [ceil(b[0]) for b in bounds]
    hi = [floor(b[1]) for b in bounds]
    if any(a > b for a, b in zip(lo, hi)):
        return []
    rows = [(c.pos, c.neg, c.sense, c.rhs) for c in p.constraints()]
    rows.extend(_implied_rows(p))
    cp, cn, cr = [], [], []
    for pos, neg, sense, rhs in rows:
        if sense in ("<=", "=="):
            cp.append(pos)
            cn.append(neg)
            cr.append(floor(rhs))
        if sense in (">=", "=="):
            cp.append(neg)
            cn.append(pos)
            cr.append(floor(-rhs))
    return kernels.enumerate_lattice(n, lo, hi, cp, cn, cr)


def linear_maximize(p: Polyhedron, w: Sequence) -> tuple:
    """A vertex maximizing ``w . x`` over B(f) or the bisubmodular polyhedron.

    Uses the greedy order of decreasing weight (decreasing ``|w|`` with signs
    from ``w`` for the bisubmodular case); ties go to the smaller index.
    """
    w = list(w)
    if len(w) != p.n:
        raise ValueError(f"weight vector has length {len(w)}, expected {p.n}")
    if p.kind == "B":
        pi = sorted(range(p.n), key=lambda i: (-w[i], i))
        return greedy_vertex(p.source, pi)
    if p.kind == "Btilde":
        s = tuple(1 if wi >= 0 else -1 for wi in w)
        pi = sorted(range(p.n), key=lambda i: (-abs(w[i]), i))
        return signed_greedy_vertex(p.source, pi, s)
    if p.kind == "Bsup":
        pi = sorted(range(p.n), key=lambda i: (w[i], i))
        return greedy_vertex(p.source, pi)
    raise ValueError(f"linear_maximize supports B, Bsup and Btilde, not {p.kind}")


def base_vertices(f: SetFunction) -> list[tuple]:
    """Distinct greedy vertices over all permutations, sorted."""
    from .ground import permutations

    return sorted({greedy_vertex(f, pi) for pi in permutations(f.n)})


def bisub_vertices(h: BisetFunction) -> list[tuple]:
    from .ground import permutations, sign_vectors

    return sorted(
        {signed_greedy_vertex(h, pi, s) for pi in permutations(h.n) for s in sign_vectors(h.n)}
    )
