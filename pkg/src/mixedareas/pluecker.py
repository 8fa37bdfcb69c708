"""Pair-indexed nonnegative vectors and the Pluecker-type inequalities.

A vector ``v`` with entries ``v_ij`` for unordered pairs of ``[n]`` belongs to
the feasible space when ``v_ij * v_kl <= v_ik * v_jl + v_il * v_jk`` holds for
every choice of four distinct indices.  This module decides membership,
represents vectors as weighted graphs, classifies the support pattern
(complete multipartite plus isolated nodes), normalizes vectors under the
rescale-and-permute group action, and builds the n=8 separation witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoSeparation, NotInPlueckerSpace
from .exact import Surd, as_fraction, surd_sign
from .linalg import RowBasis


def pair_keys(n: int) -> list[tuple[int, int]]:
    """Unordered index pairs of [n] in lexicographic order, 1-based."""
    return list(itertools.combinations(range(1, n + 1), 2))


class PlueckerVector:
    """A nonnegative vector indexed by unordered pairs of [n]."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict):
        if n < 2:
            raise ValueError("need n >= 2")
        keys = pair_keys(n)
        if set(entries) != set(keys):
            raise ValueError(f"expected exactly the {len(keys)} pairs of [{n}]")
        clean = {}
        for k in keys:
            val = entries[k]
            if not isinstance(val, Surd):
                val = as_fraction(val)
            if surd_sign(val) < 0:
                raise ValueError(f"entry {k} is negative")
            clean[k] = val
        self.n = n
        self.entries = clean

    @staticmethod
    def from_values(n: int, values) -> "PlueckerVector":
        values = list(values)
        keys = pair_keys(n)
        if len(values) != len(keys):
            raise ValueError(f"expected {len(keys)} values for n={n}")
        return PlueckerVector(n, dict(zip(keys, values)))

    def __getitem__(self, pair: tuple[int, int]):
        i, j = pair
        return self.entries[(i, j) if i < j else (j, i)]

    def values(self) -> list:
        return [self.entries[k] for k in pair_keys(self.n)]

    def __eq__(self, other):
        if not isinstance(other, PlueckerVector) or other.n != self.n:
            return False
        return all(_equal(self.entries[k], other.entries[k]) for k in pair_keys(self.n))

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values())
        return f"PlueckerVector(n={self.n}; {vals})"


def _equal(a, b) -> bool:
    if isinstance(a, Surd) or isinstance(b, Surd):
        return (Surd._coerce(a) - Surd._coerce(b)).is_zero()
    return a == b


@dataclass(frozen=True)
class Violation:
    quad: tuple[int, int, int, int]  # (i, j, k, l): v_ij v_kl > v_ik v_jl + v_il v_jk
    lhs: object
    rhs: object


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    violations: tuple[Violation, ...]


def check_membership(v: PlueckerVector) -> MembershipReport:
    """Check all 3*C(n,4) Pluecker-type inequalities exactly."""
    violations = []
    for a, b, c, d in itertools.combinations(range(1, v.n + 1), 4):
        for (i, j), (k, l) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            lhs = v[i, j] * v[k, l]
            rhs = v[i, k] * v[j, l] + v[i, l] * v[j, k]
            if surd_sign(lhs - rhs) > 0:
                violations.append(Violation((i, j, k, l), lhs, rhs))
    return MembershipReport(not violations, tuple(violations))


def require_member(v: PlueckerVector) -> None:
    report = check_membership(v)
    if not report.member:
        raise NotInPlueckerSpace(report.violations)


@dataclass(frozen=True)
class WeightedGraph:
    node_count: int
    edges: dict  # (i, j) with i < j -> positive weight

    def neighbors(self, i: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == i:
                out.add(b)
            elif b == i:
                out.add(a)
        return out

    def has_edge(self, i: int, j: int) -> bool:
        return ((i, j) if i < j else (j, i)) in self.edges

    def isolated_nodes(self) -> list[int]:
        touched = {i for e in self.edges for i in e}
        return [i for i in range(1, self.node_count + 1) if i not in touched]


def graph_of(v: PlueckerVector) -> WeightedGraph:
    edges = {k: w for k, w in v.entries.items() if surd_sign(w) > 0}
    return WeightedGraph(v.n, edges)


@dataclass(frozen=True)
class MultipartiteStructure:
    """Parts of the complete multipartite support, plus isolated nodes."""

    parts: tuple[tuple[int, ...], ...]
    isolated: tuple[int, ...]

    def label(self) -> str:
        if not self.parts:
            return "K_0"
        sizes = ",".join(str(len(p)) for p in self.parts)
        return "K_{%s}" % sizes


@dataclass(frozen=True)
class NotMultipartite:
    """Witness: an induced forbidden four-node pattern."""

    pattern: str  # "two-disjoint-edges" | "path-of-length-three" | "triangle-plus-pendant"
    nodes: tuple[int, int, int, int]


def classify_multipartite(g: WeightedGraph):
    """Partition the non-isolated nodes, or exhibit a forbidden subgraph.

    The non-isolated part of any feasible support graph is complete
    multipartite; when it is not, one of three induced four-node patterns
    must occur (two disjoint edges, a three-edge path, or a triangle with a
    pendant edge) and the first one found is returned.
    """
    isolated = g.isolated_nodes()
    active = [i for i in range(1, g.node_count + 1) if i not in isolated]
    # Parts are the connected components of the complement graph on the
    # active nodes; the partition is valid iff every part is independent.
    unassigned = set(active)
    parts: list[tuple[int, ...]] = []
    while unassigned:
        seed = min(unassigned)
        comp = {seed}
        frontier = [seed]
        while frontier:
            cur = frontier.pop()
            for other in list(unassigned):
                if other not in comp and not g.has_edge(cur, other):
                    comp.add(other)
                    frontier.append(other)
        unassigned -= comp
        parts.append(tuple(sorted(comp)))
    valid = all(
        not g.has_edge(a, b) for part in parts for a, b in itertools.combinations(part, 2)
    )
    if valid:
        parts.sort(key=lambda p: (len(p), p))
        return MultipartiteStructure(tuple(parts), tuple(isolated))
    return _find_forbidden(g, active)


def _find_forbidden(g: WeightedGraph, active: list[int]) -> NotMultipartite:
    for quad in itertools.combinations(sorted(active), 4):
        edges = [
            (a, b) for a, b in itertools.combinations(quad, 2) if g.has_edge(a, b)
        ]
        degs = sorted(sum(1 for e in edges if x in e) for x in quad)
        if len(edges) == 2 and degs == [1, 1, 1, 1]:
            return NotMultipartite("two-disjoint-edges", quad)
        if len(edges) == 3 and degs == [1, 1, 2, 2]:
            return NotMultipartite("path-of-length-three", quad)
        if len(edges) == 4 and degs == [1, 2, 2, 3]:
            return NotMultipartite("triangle-plus-pendant", quad)
    raise AssertionError("non-multipartite graph without a forbidden induced pattern")


@dataclass(frozen=True)
class GroupElement:
    """A rescale-and-permute transformation (lambda, sigma).

    Acts by (g.v)_{ij} = lambda_{sigma(i)} * lambda_{sigma(j)} * v_{sigma(i) sigma(j)};
    scalars are indexed by original labels, 1-based.
    """

    scalars: tuple  # positive Surd per node
    permutation: tuple[int, ...]  # sigma(i) = permutation[i-1]

    def __post_init__(self):
        n = len(self.permutation)
        assert sorted(self.permutation) == list(range(1, n + 1))
        assert len(self.scalars) == n
        assert all(s.sign() > 0 for s in self.scalars)

    def apply(self, v: PlueckerVector) -> PlueckerVector:
        sig = self.permutation
        lam = self.scalars
        entries = {}
        for i, j in pair_keys(v.n):
            si, sj = sig[i - 1], sig[j - 1]
            val = lam[si - 1] * lam[sj - 1] * Surd._coerce(v[si, sj])
            entries[(i, j)] = val.to_fraction() if val.is_rational() else val
        return PlueckerVector(v.n, entries)

    def inverse(self) -> "GroupElement":
        n = len(self.permutation)
        sig = self.permutation
        inv_sig = [0] * n
        for i in range(1, n + 1):
            inv_sig[sig[i - 1] - 1] = i
        inv_lam = [Surd(1) / self.scalars[sig[k - 1] - 1] for k in range(1, n + 1)]
        return GroupElement(tuple(inv_lam), tuple(inv_sig))


@dataclass(frozen=True)
class OrbitNormalization:
    canonical: PlueckerVector
    group_element: GroupElement
    structure: MultipartiteStructure


def _incidence_row(n: int, i: int, j: int) -> list[Fraction]:
    row = [Fraction(0)] * n
    row[i - 1] = Fraction(1)
    row[j - 1] = Fraction(1)
    return row


def _select_edge_set(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Greedy maximal independent edge set of the incidence matroid.

    Edges are scanned in reverse lexicographic order so the free (unscaled)
    parameters of the canonical form land on the lexicographically smallest
    pairs.
    """
    basis = RowBasis(n)
    chosen = []
    for e in sorted(edges, reverse=True):
        if basis.try_add(_incidence_row(n, *e)):
            chosen.append(e)
    return chosen


def _solve_scalars(n: int, edge_set: list[tuple[int, int]], weight) -> list[Surd]:
    """Positive lambda with lambda_i * lambda_j * w_ij = 1 on the edge set.

    Components of the edge set are trees (gauge-fixed by lambda_root = 1) or
    contain exactly one odd cycle, which pins lambda_root = sqrt(rational).
    """
    adj: dict[int, list[tuple[int, int, int]]] = {i: [] for i in range(1, n + 1)}
    for i, j in edge_set:
        adj[i].append((j, i, j))
        adj[j].append((i, i, j))
    lam: list[Surd | None] = [None] * (n + 1)
    seen: set[int] = set()
    for root in range(1, n + 1):
        if root in seen or not adj[root]:
            continue
        # mult/exponent pairs: lambda_i = mult_i * u^{exp_i}
        mult = {root: Fraction(1)}
        exp = {root: 1}
        order = [root]
        seen.add(root)
        tree_edges = set()
        comp_edges = set()
        queue = [root]
        while queue:
            cur = queue.pop()
            for nxt, a, b in adj[cur]:
                comp_edges.add((a, b))
                if nxt not in mult:
                    mult[nxt] = Fraction(1) / (mult[cur] * weight(a, b))
                    exp[nxt] = -exp[cur]
                    tree_edges.add((a, b))
                    order.append(nxt)
                    seen.add(nxt)
                    queue.append(nxt)
        extra = comp_edges - tree_edges
        if not extra:
            u_sq = None  # tree component: gauge lambda_root = 1
        else:
            assert len(extra) == 1
            a, b = next(iter(extra))
            total_exp = exp[a] + exp[b]
            assert total_exp != 0, "edge set contains an even cycle"
            prod = mult[a] * mult[b] * weight(a, b)
            u_sq = Fraction(1) / prod if total_exp > 0 else prod
        for node in order:
            if u_sq is None:
                lam[node] = Surd(mult[node])
            else:
                u = Surd.sqrt(u_sq)
                lam[node] = Surd(mult[node]) * (u if exp[node] > 0 else Surd(1) / u)
    for i in range(1, n + 1):
        if lam[i] is None:
            lam[i] = Surd(1)
    return lam[1:]


def normalize_orbit(v: PlueckerVector) -> OrbitNormalization:
    """Canonical orbit representative under rescaling and relabeling.

    Isolated nodes are sorted last and parts by (size, members); a maximal
    spanning edge set of the support is rescaled to weight exactly 1.  On a
    bipartite support every weight becomes 1.  Applying the inverse of the
    returned group element to the canonical vector reproduces the input
    exactly.
    """
    require_member(v)
    structure = classify_multipartite(graph_of(v))
    assert isinstance(structure, MultipartiteStructure)
    ordering = [i for part in structure.parts for i in part] + list(structure.isolated)
    sigma = tuple(ordering)  # sigma(new) = original

    def w0(i: int, j: int) -> Fraction:
        val = v[sigma[i - 1], sigma[j - 1]]
        return val if isinstance(val, Fraction) else val.to_fraction()

    edges = [
        (i, j) for i, j in pair_keys(v.n) if w0(i, j) > 0
    ]
    edge_set = _select_edge_set(v.n, edges)
    lam_new = _solve_scalars(v.n, edge_set, w0)
    entries = {}
    for i, j in pair_keys(v.n):
        val = lam_new[i - 1] * lam_new[j - 1] * w0(i, j)
        entries[(i, j)] = val.to_fraction() if val.is_rational() else val
    for e in edge_set:
        assert _equal(entries[e], Fraction(1))
    canonical = PlueckerVector(v.n, entries)
    scalars = [Surd(1)] * v.n
    for new_i in range(1, v.n + 1):
        scalars[sigma[new_i - 1] - 1] = lam_new[new_i - 1]
    g = GroupElement(tuple(scalars), sigma)
    return OrbitNormalization(canonical, g, structure)


PL4_COMPONENTS = (
    "K_0",
    "K_{1,1}",
    "K_{1,2}",
    "K_{1,1,1}",
    "K_{1,3}",
    "K_{2,2}",
    "K_{1,1,2}",
    "K_{1,1,1,1}",
)


def component_of_pl4(v: PlueckerVector) -> str:
    """The support-pattern component label for an n=4 member."""
    if v.n != 4:
        raise ValueError("component classification is defined for n=4")
    require_member(v)
    structure = classify_multipartite(graph_of(v))
    assert isinstance(structure, MultipartiteStructure)
    label = structure.label()
    assert label in PL4_COMPONENTS
    return label


def embed(v: PlueckerVector) -> PlueckerVector:
    """The natural embedding n -> n+1 appending a zero-weight node."""
    entries = dict(v.entries)
    for i in range(1, v.n + 1):
        entries[(i, v.n + 1)] = Fraction(0)
    return PlueckerVector(v.n + 1, entries)


def pluecker_relation(v: PlueckerVector):
    """The signed quantity v12*v34 - v13*v24 + v14*v23 for n=4."""
    if v.n != 4:
        raise ValueError("the bilinear relation is defined for n=4")
    return v[1, 2] * v[3, 4] - v[1, 3] * v[2, 4] + v[1, 4] * v[2, 3]


@dataclass(frozen=True)
class SeparationWitness:
    vector: PlueckerVector  # n = 8
    relation: object  # nonzero value certifying the separation


def pl8_separation_witness(v4: PlueckerVector) -> SeparationWitness:
    """Lift an n=4 member with nonzero bilinear relation to the n=8 slice.

    The lift sets v_{i,i+4} = 0 and duplicates all other entries from the
    n=4 vector.  It passes all 210 inequalities, yet any tuple of bodies
    realizing a vector on this slice consists of four pairs of equal-length
    parallel segments, forcing the relation to vanish; a nonzero relation is
    therefore a certificate of non-realizability.
    """
    if v4.n != 4:
        raise ValueError("witness construction starts from n=4")
    require_member(v4)
    rel = pluecker_relation(v4)
    if surd_sign(rel) == 0:
        raise NoSeparation("bilinear relation vanishes; the lift is realizable")
    entries = {}
    for i, j in pair_keys(8):
        i4 = (i - 1) % 4 + 1
        j4 = (j - 1) % 4 + 1
        entries[(i, j)] = Fraction(0) if i4 == j4 else v4[min(i4, j4), max(i4, j4)]
    v8 = PlueckerVector(8, entries)
    require_member(v8)
    return SeparationWitness(v8, rel)
