"""Galvin's algorithm for the Dinitz problem.

The pipeline: orient the rook's graph of the n x n grid by the cyclic
Latin square value (r + c) mod n -- row edges point toward larger
values, column edges toward smaller ones, so every cell has outdegree
n - 1 -- then repeatedly give one color to a kernel of the cells that
still want it.  Kernels of this orientation always exist and come from
Gale-Shapley stable matchings: rows propose preferring larger Latin
values, columns prefer smaller ones.

The coloring loop is generic: it works on any digraph whose vertex
lists are larger than their outdegrees, given any oracle that produces
kernels of induced subgraphs.  ``find_kernel_bruteforce`` plugs in
directly for small arbitrary digraphs; the grid solver uses the
stable-matching oracle and never pays the exponential price.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import AbstractSet, Callable, Hashable, Iterable, Sequence

from .digraph import Digraph
from .kernel import find_kernel_bruteforce, is_kernel
from .matching import PreferenceProfile, deferred_acceptance

__all__ = [
    "latin_value",
    "cell_to_vertex",
    "vertex_to_cell",
    "build_square_orientation",
    "square_kernel_oracle",
    "bruteforce_oracle",
    "list_color_with_kernels",
    "solve_dinitz",
    "verify_generalized_latin",
    "check_condition_y",
    "DinitzInstance",
    "ColorPass",
    "KernelOracle",
    "KernelOracleError",
    "UndersizedListError",
    "LatinReport",
    "ConditionYReport",
]

KernelOracle = Callable[[Digraph, frozenset[int]], "frozenset[int] | None"]


class UndersizedListError(ValueError):
    """A cell's color list is smaller than the instance requires."""

    def __init__(self, row: int, col: int, size: int, needed: int):
        self.cell = (row, col)
        super().__init__(
            f"cell ({row}, {col}) has {size} colors but at least {needed} are required"
        )


class KernelOracleError(RuntimeError):
    """The kernel oracle returned something that is not a kernel.

    This signals either a broken oracle or a graph without the
    every-subset-has-a-kernel property; the residual solver state is
    attached for diagnosis.
    """

    def __init__(self, color, candidates, returned, residual_lists):
        self.color = color
        self.candidates = candidates
        self.returned = returned
        self.residual_lists = residual_lists
        super().__init__(
            f"oracle output {sorted(returned) if returned is not None else None} "
            f"is not a kernel of the {len(candidates)} candidates for color {color}"
        )


def latin_value(r: int, c: int, n: int) -> int:
    """Entry of the cyclic n x n Latin square at 0-based cell (r, c)."""
    if not (0 <= r < n and 0 <= c < n):
        raise ValueError(f"cell ({r}, {c}) out of range for n={n}")
    return (r + c) % n


def cell_to_vertex(r: int, c: int, n: int) -> int:
    """Row-major cell id: (r, c) -> r*n + c.  Stable across versions."""
    if not (0 <= r < n and 0 <= c < n):
        raise ValueError(f"cell ({r}, {c}) out of range for n={n}")
    return r * n + c


def vertex_to_cell(v: int, n: int) -> tuple[int, int]:
    """Inverse of :func:`cell_to_vertex`."""
    if not 0 <= v < n * n:
        raise ValueError(f"vertex {v} out of range for n={n}")
    return divmod(v, n)


def build_square_orientation(n: int) -> Digraph:
    """Orient the rook's graph of the n x n grid by Latin value.

    Within a row, edges run from smaller to larger Latin values; within
    a column, from larger to smaller.  Every rook-adjacent pair gets
    exactly one direction and every vertex ends up with outdegree n - 1.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    # id of the cell in row r (resp. column c) holding Latin value t
    row_ids = [[r * n + (t - r) % n for t in range(n)] for r in range(n)]
    col_ids = [[((t - c) % n) * n + c for t in range(n)] for c in range(n)]
    succ = []
    for r in range(n):
        in_row = row_ids[r]
        for c in range(n):
            val = (r + c) % n
            succ.append(frozenset(in_row[val + 1 :] + col_ids[c][:val]))
    return Digraph(n * n, tuple(succ))


def square_kernel_oracle(n: int, s: Iterable[int]) -> frozenset[int]:
    """Kernel of a cell subset of the square orientation, via stable matching.

    Treats rows as proposers and columns as reviewers with the allowed
    pairs being exactly the cells of ``s``: a row prefers its cells with
    larger Latin value, a column prefers its cells with smaller value,
    mirroring the edge directions.  The row-optimal stable matching of
    this market is a kernel of the subgraph induced on ``s``: matched
    cells are independent (one per row and column), and stability hands
    every unmatched cell of ``s`` an out-edge into the matching.
    """
    cells = []
    for v in frozenset(s):
        if not 0 <= v < n * n:
            raise ValueError(f"vertex {v} out of range for the {n}x{n} square")
        cells.append(divmod(v, n))
    allowed = frozenset(cells)
    row_rank = {(r, c): n - 1 - (r + c) % n for r, c in allowed}
    col_rank = {(r, c): (r + c) % n for r, c in allowed}
    profile = PreferenceProfile(n, n, allowed, row_rank, col_rank)
    matched = deferred_acceptance(profile)
    return frozenset(r * n + c for r, c in matched)


def bruteforce_oracle(g: Digraph, s: frozenset[int]) -> frozenset[int] | None:
    """Exhaustive kernel oracle for small arbitrary digraphs."""
    return find_kernel_bruteforce(g, s)


@dataclass(frozen=True)
class ColorPass:
    """One round of the coloring loop: who wanted the color, who got it."""

    color: int
    candidates: frozenset[int]
    chosen: frozenset[int]


def list_color_with_kernels(
    g: Digraph,
    lists: Sequence[AbstractSet[int]],
    oracle: KernelOracle,
    *,
    checked: bool = False,
    trace: list[ColorPass] | None = None,
) -> dict[int, int]:
    """Properly color g from per-vertex lists using a kernel oracle.

    Requires every list to be strictly larger than its vertex's
    outdegree.  Each round takes the smallest color id still wanted by
    an uncolored vertex, asks the oracle for a kernel of the wanting
    set, colors the kernel, and strikes the color from the losers'
    lists.  A loser's lost option is paid for by a lost out-neighbor
    (its edge into the kernel), so the size-versus-outdegree slack
    survives every round; with ``checked=True`` that is re-verified
    after each pass.

    Every oracle answer is validated with :func:`is_kernel`; a bad
    answer raises :class:`KernelOracleError` with the residual state.
    Appends a :class:`ColorPass` per round to ``trace`` when given.
    """
    n = g.num_vertices
    if len(lists) != n:
        raise ValueError(f"expected {n} color lists, got {len(lists)}")
    for v in range(n):
        if len(lists[v]) <= len(g.succ[v]):
            raise ValueError(
                f"vertex {v}: list size {len(lists[v])} must exceed outdegree {len(g.succ[v])}"
            )
    current: list[set[int]] = [set(l) for l in lists]
    uncolored: set[int] = set(range(n))
    members_of: dict[int, set[int]] = {}
    for v in range(n):
        for col in current[v]:
            members_of.setdefault(col, set()).add(v)
    color_heap = sorted(members_of)
    assigned: dict[int, int] = {}
    while uncolored:
        while color_heap and not members_of.get(color_heap[0]):
            heapq.heappop(color_heap)
        if not color_heap:
            raise RuntimeError(
                f"no colors left but {len(uncolored)} vertices uncolored; "
                "this cannot happen when every oracle answer was a kernel"
            )
        color = heapq.heappop(color_heap)
        candidates = frozenset(members_of.pop(color))
        chosen = oracle(g, candidates)
        if chosen is not None:
            chosen = frozenset(chosen)
        if (
            chosen is None
            or not chosen <= candidates
            or not is_kernel(g, candidates, chosen)
        ):
            raise KernelOracleError(
                color,
                candidates,
                chosen,
                {v: frozenset(current[v]) for v in sorted(uncolored)},
            )
        for v in chosen:
            assigned[v] = color
            uncolored.remove(v)
            current[v].discard(color)
            for col in current[v]:
                members_of[col].discard(v)
        for v in candidates - chosen:
            current[v].discard(color)
        if trace is not None:
            trace.append(ColorPass(color, candidates, chosen))
        if checked:
            for v in uncolored:
                residual_out = sum(1 for w in g.succ[v] if w in uncolored)
                if len(current[v]) <= residual_out:
                    raise AssertionError(
                        f"slack invariant violated at vertex {v} after color {color}: "
                        f"{len(current[v])} colors vs residual outdegree {residual_out}"
                    )
    return assigned


@dataclass(frozen=True)
class DinitzInstance:
    """An n x n grid of color lists, with colors interned to dense ids.

    ``lists[r][c]`` is the frozenset of interned color ids available at
    cell (r, c); ``labels[i]`` recovers the original label of color i.
    Interning follows first appearance in row-major order, which also
    fixes the color order the solver processes.
    """

    n: int
    lists: tuple[tuple[frozenset[int], ...], ...]
    labels: tuple[Hashable, ...]

    @classmethod
    def from_labels(
        cls, rows: Sequence[Sequence[Iterable[Hashable]]]
    ) -> "DinitzInstance":
        """Intern an n x n nested structure of color labels.

        Cells given as sets are sorted before interning so the id
        assignment never depends on hash order; sequences keep their
        order.  Duplicate labels within a cell collapse.  Empty cells
        are rejected.
        """
        n = len(rows)
        table: dict[Hashable, int] = {}
        interned: list[tuple[frozenset[int], ...]] = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} cells, expected {n}")
            interned_row = []
            for j, cell in enumerate(row):
                labs = sorted(cell) if isinstance(cell, (set, frozenset)) else list(cell)
                if not labs:
                    raise ValueError(f"cell ({i}, {j}) has an empty color list")
                for lab in labs:
                    table.setdefault(lab, len(table))
                interned_row.append(frozenset(table[lab] for lab in labs))
            interned.append(tuple(interned_row))
        labels = tuple(sorted(table, key=table.__getitem__))
        return cls(n, tuple(interned), labels)

    def intern_grid(self, rows: Sequence[Sequence[Hashable]]) -> list[list[int]]:
        """Map a grid of labels to color ids; unknown labels get fresh
        negative ids (distinct per label) so they can never pass a
        membership check yet still compare equal to themselves."""
        unknown: dict[Hashable, int] = {}
        out = []
        for row in rows:
            out_row = []
            for lab in row:
                cid = self._table.get(lab)
                if cid is None:
                    cid = unknown.setdefault(lab, -1 - len(unknown))
                out_row.append(cid)
            out.append(out_row)
        return out

    def label_grid(self, grid: Sequence[Sequence[int]]) -> list[list[Hashable]]:
        """Map a grid of color ids back to the original labels."""
        return [[self.labels[cid] for cid in row] for row in grid]

    @cached_property
    def _table(self) -> dict[Hashable, int]:
        return {lab: i for i, lab in enumerate(self.labels)}


@dataclass(frozen=True)
class LatinReport:
    """Outcome of a generalized-Latin-square check.

    ``reason`` is "row-repeat", "column-repeat" or "not-in-list" when
    invalid, with ``row``/``col`` locating the violation.
    """

    valid: bool
    reason: str = ""
    row: int | None = None
    col: int | None = None


@dataclass(frozen=True)
class ConditionYReport:
    """Whether every vertex's list strictly exceeds its outdegree."""

    valid: bool
    witness: int | None = None


def solve_dinitz(
    inst: DinitzInstance,
    *,
    checked: bool = False,
    trace: list[ColorPass] | None = None,
) -> list[list[int]]:
    """Pick one color id per cell so rows and columns stay all-distinct.

    Requires every cell list to hold at least n colors.  Builds the
    Latin-value orientation, runs the kernel coloring loop with the
    stable-matching oracle, and returns the n x n grid of chosen color
    ids.  The output always passes :func:`verify_generalized_latin`.
    """
    n = inst.n
    for i in range(n):
        for j in range(n):
            if len(inst.lists[i][j]) < n:
                raise UndersizedListError(i, j, len(inst.lists[i][j]), n)
    g = build_square_orientation(n)
    flat = [inst.lists[v // n][v % n] for v in range(n * n)]
    coloring = list_color_with_kernels(
        g,
        flat,
        lambda _g, s: square_kernel_oracle(n, s),
        checked=checked,
        trace=trace,
    )
    return [[coloring[r * n + c] for c in range(n)] for r in range(n)]


def verify_generalized_latin(
    inst: DinitzInstance, grid: Sequence[Sequence[int]]
) -> LatinReport:
    """Check a grid of color ids against an instance.

    Valid iff every row and every column has all-distinct entries and
    each entry belongs to its cell's list.  Violations are reported in
    that order: rows, then columns, then cell membership.
    """
    n = inst.n
    if len(grid) != n or any(len(row) != n for row in grid):
        raise ValueError(f"grid dimensions do not match the {n}x{n} instance")
    for i in range(n):
        if len(set(grid[i])) != n:
            return LatinReport(False, "row-repeat", row=i)
    for j in range(n):
        if len({grid[i][j] for i in range(n)}) != n:
            return LatinReport(False, "column-repeat", col=j)
    for i in range(n):
        for j in range(n):
            if grid[i][j] not in inst.lists[i][j]:
                return LatinReport(False, "not-in-list", row=i, col=j)
    return LatinReport(True)


def check_condition_y(g: Digraph, lists: Sequence[AbstractSet[int]]) -> ConditionYReport:
    """Report the first vertex whose list is not larger than its outdegree."""
    if len(lists) != g.num_vertices:
        raise ValueError(f"expected {g.num_vertices} color lists, got {len(lists)}")
    for v in range(g.num_vertices):
        if len(lists[v]) <= len(g.succ[v]):
            return ConditionYReport(False, v)
    return ConditionYReport(True)
