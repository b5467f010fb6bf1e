"""The 4p-element domain of inverse-closed classes and the action on it.

Every non-identity element g is grouped with its inverse into a class
{g, g^{-1}}.  The classes come in four blocks with a fixed index layout:

    indices 0 .. p-2        pairs {a^i, a^{-i}},        labels i = 1 .. p-1
    indices p-1 .. 2p-2     pairs {a^l b^2, a^{p-l} b^2}, labels
                            l in {0..(p-1)/2} then {p+1..(3p-1)/2}, ascending
    index 2p-1              the singleton {a^p} (the unique involution in <a>)
    indices 2p .. 4p-1      pairs {a^j b, a^{p+j} b^3},  labels j = 0 .. 2p-1

Automorphisms permute these classes; cycle types of the induced
permutations are computed both by decomposition (the ground truth) and
by a closed-form case analysis.  The two are compared, not assumed
equal: the case analysis tracks class labels modulo 2p and misses the
orbit shortening caused by the label identification i ~ -i on the
a-power pairs, so it overstates some cycle lengths (see
closed_form_cycle_type).
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .autos import SIGMA, Automorphism, apply
from .group import GroupElement, element_index, inv
from .modular import check_odd_prime, discrete_log, primitive_root_2p

KIND_A1 = "A1"
KIND_A2 = "A2"
KIND_AP = "Ap"
KIND_B = "B"


@dataclass(frozen=True)
class PairClass:
    kind: str
    label: int
    rep: GroupElement
    members: frozenset[GroupElement]


@dataclass(frozen=True)
class Domain:
    p: int
    classes: tuple[PairClass, ...]
    # element index (see group.element_index) -> class index
    class_of_element: tuple[int, ...]

    def index_of(self, g: GroupElement) -> int:
        return self.class_of_element[element_index(g)]


def _pair_class(kind: str, label: int, member: GroupElement) -> PairClass:
    other = inv(member)
    members = frozenset((member, other))
    rep = min(members, key=lambda g: (g.l, g.k))
    return PairClass(kind, label, rep, members)


def a2_labels(p: int) -> list[int]:
    """The p class labels for the b^2 block: one residue out of each pair {l, p-l}."""
    return list(range((p - 1) // 2 + 1)) + list(range(p + 1, (3 * p - 1) // 2 + 1))


@lru_cache(maxsize=None)
def build_domain(p: int) -> Domain:
    check_odd_prime(p)
    classes: list[PairClass] = []
    for i in range(1, p):
        classes.append(_pair_class(KIND_A1, i, GroupElement(p, i, 0)))
    for l in a2_labels(p):
        classes.append(_pair_class(KIND_A2, l, GroupElement(p, l, 2)))
    classes.append(_pair_class(KIND_AP, p, GroupElement(p, p, 0)))
    for j in range(2 * p):
        classes.append(_pair_class(KIND_B, j, GroupElement(p, j, 1)))

    lookup = [-1] * (8 * p)
    for ci, cls in enumerate(classes):
        for g in cls.members:
            ei = element_index(g)
            if lookup[ei] != -1:
                raise ArithmeticError(f"element {g} appears in two classes")
            lookup[ei] = ci
    if lookup.count(-1) != 1 or lookup[0] != -1:
        raise ArithmeticError("classes must cover exactly the non-identity elements")
    return Domain(p, tuple(classes), tuple(lookup))


def induced_permutation(f: Automorphism, d: Domain) -> tuple[int, ...]:
    """Image class index for each class index under f.

    Both members of a class must land in one class (automorphisms commute
    with inversion); a straddle would mean the action is not well defined
    and is raised as a hard error.
    """
    if f.p != d.p:
        raise ValueError(f"mixed group orders: p={f.p} vs p={d.p}")
    images = []
    for cls in d.classes:
        targets = {d.index_of(apply(f, g)) for g in cls.members}
        if len(targets) != 1:
            raise ArithmeticError(f"{f} splits class {cls.rep} across two classes")
        images.append(targets.pop())
    perm = tuple(images)
    if len(set(perm)) != len(perm):
        raise ArithmeticError(f"{f} does not act bijectively on the classes")
    return perm


@lru_cache(maxsize=None)
def induced_permutations(p: int) -> tuple[tuple[int, ...], ...]:
    """Induced permutation for every enumerated automorphism, in enumeration order."""
    from .autos import enumerate_aut

    d = build_domain(p)
    return tuple(induced_permutation(f, d) for f in enumerate_aut(p))


def cycle_type_of(perm: tuple[int, ...]) -> dict[int, int]:
    """Multiplicity of each cycle length in the disjoint cycle decomposition."""
    seen = [False] * len(perm)
    counts: dict[int, int] = {}
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = perm[v]
            length += 1
        counts[length] = counts.get(length, 0) + 1
    return counts


def _add(counts: dict[int, int], length: int, mult: int) -> None:
    # branches of the case analysis may hit the same length; contributions add
    counts[length] = counts.get(length, 0) + mult


def closed_form_cycle_type(f: Automorphism) -> dict[int, int]:
    """Cycle type of the induced class permutation, by case analysis.

    Cases split on the unit parameter (1 vs not) and, for non-unit 1, on
    the parity of the shift parameter; orbit lengths on the b-block come
    from the order o of the unit in the cyclic unit group via its index
    at the smallest primitive root z: g = gcd(index, p-1), o = (p-1)/g.

    Known deviation from the genuine action: the case analysis assumes
    every a-power class orbit under multiplication by the unit has full
    length o, but the classes identify the labels i and -i, so whenever
    some power of the unit is -1 (mod 2p, or mod p on the even labels)
    the genuine orbit is half as long.  Example at p=3: the unit 5 is
    -1 mod 6 and fixes both paired a-power classes, while this formula
    books them as a 2-cycle.  cycle_type_of(induced_permutation(f, d))
    is the ground truth; callers compare and report, never patch.
    """
    p = f.p
    counts: dict[int, int] = {}
    if f.alpha == 1:
        if f.family == SIGMA:
            if f.beta == 0:
                _add(counts, 1, 4 * p)
            elif f.beta == p:
                _add(counts, 1, 2 * p)
                _add(counts, 2, p)
            elif f.beta % 2 == 0:
                _add(counts, 1, 2 * p)
                _add(counts, p, 2)
            else:
                _add(counts, 1, 2 * p)
                _add(counts, 2 * p, 1)
        else:
            _add(counts, 1, 3 * p + 1 if f.beta == p else p + 1)
            _add(counts, 2, (3 * p - 1) // 2 if f.beta == 0 else (p - 1) // 2)
            if f.beta % 2 == 1 and f.beta != p:
                _add(counts, p, 2)
            elif f.beta % 2 == 0 and f.beta != 0:
                _add(counts, 2 * p, 1)
        return counts

    z = primitive_root_2p(p)
    g = gcd(discrete_log(z, f.alpha, p), p - 1)
    o = (p - 1) // g
    even_shift = f.beta % 2 == 0
    if f.family == SIGMA:
        if even_shift:
            _add(counts, 1, 4)
            _add(counts, o, 4 * g)
        else:
            _add(counts, 1, 2)
            _add(counts, 2, 1)
            if o % 2 == 0:
                _add(counts, o, 4 * g)
            else:
                _add(counts, o, 2 * g)
                _add(counts, 2 * o, g)
    else:
        if even_shift:
            _add(counts, 1, 2)
            _add(counts, 2, 1)
            if o % 2 == 0:
                _add(counts, o, 4 * g)
            else:
                _add(counts, o, g)
                _add(counts, 2 * o, 3 * g // 2)
        else:
            _add(counts, 1, 4)
            if o % 2 == 0:
                _add(counts, o, 4 * g)
            else:
                _add(counts, o, 3 * g)
                _add(counts, 2 * o, g // 2)
    return counts


def render_cycle_type(counts: dict[int, int]) -> str:
    """Compact multiplicative notation, e.g. "1^2 2^5"."""
    return " ".join(f"{k}^{counts[k]}" for k in sorted(counts))
