"""Independent brute-force checks of every counting claim.

Nothing here relies on closed-form cycle types or the assembled cycle
index: orbit counts come from Burnside averaging over brute-force
decompositions or from exhaustive minimal-mask sweeps; connectivity
comes from breadth-first traversal of explicitly built graphs; the
circulant count comes from a direct orbit scan over subsets of the
cyclic group of order 2p.

Exhaustive sweeps walk all 2^{4p} connection sets and are capped at
p <= 5 by default (p = 7 means 2^28 masks times 168 permutations; pass
a larger cap explicitly if you are prepared to wait).
"""

from collections import deque
from dataclasses import dataclass

import numpy as np

from .domain import Domain, build_domain, cycle_type_of, induced_permutations
from .group import element_index, mul_table
from .kernels import sweep_minimal_count, sweep_minimal_masks
from .modular import check_odd_prime, units_mod

DEFAULT_ORACLE_CAP = 5


def _check_cap(p: int, cap: int) -> None:
    check_odd_prime(p)
    if p > cap:
        raise ValueError(
            f"exhaustive sweep at p={p} exceeds the cap {cap}: 2^{4 * p} masks; "
            f"raise the cap explicitly to proceed"
        )


def burnside_count(p: int) -> int:
    """Orbit count as the average number of fixed connection sets.

    A permutation with c cycles fixes exactly 2^c subsets, so the count
    is (1/|Aut|) * sum of 2^{c(f)} over all induced permutations, using
    brute-force cycle decomposition only.
    """
    check_odd_prime(p)
    total = sum(
        2 ** sum(cycle_type_of(perm).values()) for perm in induced_permutations(p)
    )
    aut_order = 4 * p * (p - 1)
    if total % aut_order:
        raise ArithmeticError(f"Burnside sum {total} not divisible by {aut_order}")
    return total // aut_order


def orbit_partition_count(p: int, cap: int = DEFAULT_ORACLE_CAP, workers: int = 1) -> int:
    """Exhaustive orbit count: masks minimal within their orbit, counted directly."""
    _check_cap(p, cap)
    return sweep_minimal_count(induced_permutations(p), workers=workers)


def orbit_representatives(
    p: int, cap: int = DEFAULT_ORACLE_CAP, workers: int = 1
) -> np.ndarray:
    """One minimal mask per orbit, ascending."""
    _check_cap(p, cap)
    return sweep_minimal_masks(induced_permutations(p), workers=workers)


# ---------- explicit graphs and connectivity ----------


def mask_elements(d: Domain, mask: int) -> list[int]:
    """Element indices of the union of the selected classes."""
    out = [
        element_index(g)
        for ci in range(len(d.classes))
        if mask >> ci & 1
        for g in d.classes[ci].members
    ]
    out.sort()
    return out


@dataclass(frozen=True)
class CayleyGraph:
    p: int
    mask: int
    neighbors: tuple[tuple[int, ...], ...]


def build_cayley_graph(p: int, mask: int) -> CayleyGraph:
    """Vertices are the 8p elements; x and y are adjacent iff x*y^{-1} is selected.

    Equivalently the neighbors of y are s*y over selected elements s, so
    rows come straight out of the multiplication table.
    """
    d = build_domain(p)
    table = mul_table(p)
    selected = mask_elements(d, mask)
    neighbors = tuple(
        tuple(sorted(table[s][v] for s in selected)) for v in range(8 * p)
    )
    return CayleyGraph(p, mask, neighbors)


def is_connected(p: int, mask: int) -> bool:
    """Breadth-first traversal from the identity vertex reaches everything."""
    d = build_domain(p)
    table = mul_table(p)
    selected = mask_elements(d, mask)
    return _reaches_all(table, selected, 8 * p)


def _reaches_all(table, selected, n_vertices: int) -> bool:
    seen = bytearray(n_vertices)
    seen[0] = 1
    queue = deque([0])
    reached = 1
    while queue:
        v = queue.popleft()
        for s in selected:
            w = table[s][v]
            if not seen[w]:
                seen[w] = 1
                reached += 1
                queue.append(w)
    return reached == n_vertices


_census_cache: dict[int, tuple[int, int, int]] = {}


def _classify_orbits(p: int, cap: int, workers: int) -> tuple[int, int, int]:
    """(connected, disconnected_a_only, disconnected_b_touching) orbit counts."""
    if p in _census_cache:
        return _census_cache[p]
    d = build_domain(p)
    table = mul_table(p)
    members = [mask_elements(d, 1 << ci) for ci in range(len(d.classes))]
    b_mask = ((1 << 2 * p) - 1) << 2 * p
    connected = a_only = b_touching = 0
    for mask in orbit_representatives(p, cap=cap, workers=workers):
        mask = int(mask)
        selected = []
        remaining = mask
        while remaining:
            low = remaining & -remaining
            selected.extend(members[low.bit_length() - 1])
            remaining ^= low
        if _reaches_all(table, selected, 8 * p):
            connected += 1
        elif mask & b_mask:
            b_touching += 1
        else:
            a_only += 1
    _census_cache[p] = (connected, a_only, b_touching)
    return _census_cache[p]


def connected_orbit_count(
    p: int, cap: int = DEFAULT_ORACLE_CAP, workers: int = 1
) -> int:
    """Orbits whose representative generates the whole group (graph connected)."""
    _check_cap(p, cap)
    return _classify_orbits(p, cap, workers)[0]


def disconnected_census(
    p: int, cap: int = DEFAULT_ORACLE_CAP, workers: int = 1
) -> dict[str, int]:
    """Disconnected orbits split by whether the set touches the odd-power block."""
    _check_cap(p, cap)
    _, a_only, b_touching = _classify_orbits(p, cap, workers)
    return {"a_only_orbits": a_only, "b_touching_orbits": b_touching}


# ---------- circulant graphs of order 2p ----------


def circulant_orbit_count(p: int) -> int:
    """Orbits of inverse-closed subsets of Z_{2p}\\{0} under unit multiplication.

    The p classes are the pairs {i, 2p-i} (i = 1..p-1) plus the
    singleton {p}; a unit u maps the class of i to the class of u*i.
    Counted by the same minimal-mask sweep as the main oracle.
    """
    check_odd_prime(p)
    n = 2 * p

    def class_idx(m: int) -> int:
        m %= n
        return p - 1 if m == p else min(m, n - m) - 1

    reps = list(range(1, p)) + [p]
    perms = [[class_idx(u * r) for r in reps] for u in units_mod(n)]
    return sweep_minimal_count(perms)


# ---------- renderings ----------


def mask_to_hex(p: int, mask: int) -> str:
    """Fixed-width hex (p digits: one per four classes), class 0 at bit 0."""
    if not 0 <= mask < 1 << 4 * p:
        raise ValueError(f"mask out of range for p={p}: {mask}")
    return f"{mask:0{p}x}"


def hex_to_mask(p: int, text: str) -> int:
    mask = int(text, 16)
    if not 0 <= mask < 1 << 4 * p:
        raise ValueError(f"mask out of range for p={p}: {text}")
    return mask


def to_dot(graph: CayleyGraph) -> str:
    """Graphviz rendering with vertices labelled by their normal form."""
    from .group import all_elements

    labels = [str(g) for g in all_elements(graph.p)]
    lines = ["graph cayley {"]
    for v, label in enumerate(labels):
        lines.append(f'  v{v} [label="{label}"];')
    for v, row in enumerate(graph.neighbors):
        for w in row:
            if v < w:
                lines.append(f"  v{v} -- v{w};")
    lines.append("}")
    return "\n".join(lines)
