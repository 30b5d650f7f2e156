"""Digraph kernels: verification, exhaustive search, and the hereditary audit.

A kernel of a vertex subset S is an independent set S' contained in S
such that every vertex of S - S' has an out-edge into S'.  Only edges
with both endpoints inside S count, i.e. a kernel of S is a kernel of
the subgraph induced on S.  These routines are the slow, trustworthy
ground truth that the fast Gale-Shapley path is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .digraph import Digraph, vertex_subset

DEFAULT_KERNEL_CAP = 24
DEFAULT_AUDIT_CAP = 20


@dataclass(frozen=True)
class PropertyXReport:
    """Result of the every-subset-has-a-kernel audit.

    ``witness`` is a kernel-free subset, present exactly when the
    property fails; ``subsets_checked`` counts subsets examined up to and
    including the decision point.
    """

    holds: bool
    witness: frozenset[int] | None
    subsets_checked: int


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _is_kernel_mask(
    out_masks: tuple[int, ...],
    adj_masks: tuple[int, ...],
    s_mask: int,
    sp_mask: int,
) -> bool:
    for v in _bits(sp_mask):
        if adj_masks[v] & sp_mask:
            return False
    for v in _bits(s_mask & ~sp_mask):
        if not out_masks[v] & sp_mask:
            return False
    return True


def is_kernel(g: Digraph, s: Iterable[int], s_prime: Iterable[int]) -> bool:
    """True iff s_prime is independent and dominates s - s_prime.

    Domination means every vertex of s - s_prime has an out-edge to some
    vertex of s_prime.  s_prime = s is permitted; an independent set
    vacuously dominates its empty complement.
    """
    s_set = vertex_subset(g, s)
    sp_set = frozenset(s_prime)
    if not sp_set <= s_set:
        raise ValueError(f"s_prime contains vertices outside s: {sorted(sp_set - s_set)}")
    s_mask = 0
    for v in s_set:
        s_mask |= 1 << v
    sp_mask = 0
    for v in sp_set:
        sp_mask |= 1 << v
    return _is_kernel_mask(g.out_masks, g.adj_masks, s_mask, sp_mask)


def find_kernel_bruteforce(
    g: Digraph, s: Iterable[int], cap: int = DEFAULT_KERNEL_CAP
) -> frozenset[int] | None:
    """Exhaustively search for a kernel of s; None if no kernel exists.

    Enumerates every subset of s in increasing bitmask order and returns
    the first kernel found, which is therefore the one with the smallest
    bitmask value.  The empty set is the (vacuous) kernel of an empty s.
    """
    members = sorted(vertex_subset(g, s))
    k = len(members)
    if k > cap:
        raise ValueError(f"subset has {k} vertices, exceeding the cap of {cap}")
    if k == 0:
        return frozenset()
    out_masks, adj_masks = g.out_masks, g.adj_masks
    member_bits = [1 << v for v in members]
    s_mask = 0
    for b in member_bits:
        s_mask |= b
    for p in range(1 << k):
        sp_mask = 0
        for i in range(k):
            if p >> i & 1:
                sp_mask |= member_bits[i]
        if _is_kernel_mask(out_masks, adj_masks, s_mask, sp_mask):
            return frozenset(members[i] for i in range(k) if p >> i & 1)
    return None


def has_property_x(g: Digraph, cap: int = DEFAULT_AUDIT_CAP) -> PropertyXReport:
    """Audit whether every vertex subset of g has a kernel.

    Enumerates all 2^n subsets in increasing bitmask order and stops at
    the first subset with no kernel.  Deliberately exponential; refuse
    graphs above ``cap`` vertices rather than truncating silently.
    """
    n = g.num_vertices
    if n > cap:
        raise ValueError(f"graph has {n} vertices, exceeding the audit cap of {cap}")
    out_masks, adj_masks = g.out_masks, g.adj_masks
    for count, s_mask in enumerate(range(1 << n), start=1):
        sub = s_mask
        found = False
        while True:
            if _is_kernel_mask(out_masks, adj_masks, s_mask, sub):
                found = True
                break
            if sub == 0:
                break
            sub = (sub - 1) & s_mask
        if not found:
            witness = frozenset(_bits(s_mask))
            return PropertyXReport(False, witness, count)
    return PropertyXReport(True, None, 1 << n)
