"""The group of k-block permutations of [kn].

Elements are permutations of {1,...,kn} that send every block
{(i-1)k+1,...,ik} onto another such block.  Composition is right-to-left:
(sigma*omega)(x) = sigma(omega(x)).

The central algorithm here is type extraction: the disjoint cycles of an
element are grouped into clusters according to how they meet a single
block; a cluster meeting a block in point-counts rho and spanning m whole
blocks contributes a part m to the component at rho.  Two elements are
conjugate exactly when their types agree, and the class sizes come out of
`families.class_size`.
"""

from collections import defaultdict
from functools import cache
from itertools import combinations, permutations, product
from math import factorial

from . import partitions as pt
from .errors import BudgetExceeded, DimensionMismatch, SizeMismatch
from .families import PartitionFamily, class_size
from .partitions import Partition

DEFAULT_BUDGET = 10_000_000


def block_of(point: int, k: int) -> int:
    return (point - 1) // k + 1


def block_points(block: int, k: int) -> range:
    return range((block - 1) * k + 1, block * k + 1)


def is_block_permutation(images, k: int) -> bool:
    """True iff the bijection given by `images` maps every k-block onto a k-block."""
    m = len(images)
    if m % k != 0 or sorted(images) != list(range(1, m + 1)):
        return False
    for b in range(1, m // k + 1):
        targets = {block_of(images[p - 1], k) for p in block_points(b, k)}
        if len(targets) != 1:
            return False
    return True


def cycle_type(images) -> Partition:
    """Cycle type of a permutation of [m] given as a 1-based image tuple."""
    m = len(images)
    seen = [False] * (m + 1)
    lengths = []
    for start in range(1, m + 1):
        if seen[start]:
            continue
        n_steps, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = images[x - 1]
            n_steps += 1
        lengths.append(n_steps)
    return pt.as_partition(lengths)


def cycles_of_mapping(mapping: dict) -> list[list[int]]:
    """Disjoint cycles of a bijection given as a dict, smallest points first."""
    seen = set()
    cycles = []
    for start in sorted(mapping):
        if start in seen:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(x)
            x = mapping[x]
        cycles.append(cycle)
    return cycles


def type_from_mapping(k: int, blocks, mapping: dict) -> PartitionFamily:
    """Type of a block permutation given as a point mapping over whole blocks.

    Walks the blocks in increasing order; for each unconsumed block it
    collects the cycles meeting it, reads off the intersection pattern rho,
    marks as consumed the m blocks those cycles span, and records a part m
    in the component at rho.
    """
    blocks = sorted(blocks)
    cycles = cycles_of_mapping(mapping)
    cycle_index = {}
    for idx, cycle in enumerate(cycles):
        for p in cycle:
            cycle_index[p] = idx

    consumed = set()
    parts = defaultdict(list)
    for b in blocks:
        if b in consumed:
            continue
        meeting = defaultdict(int)
        for p in block_points(b, k):
            meeting[cycle_index[p]] += 1
        rho = pt.as_partition(meeting.values())
        span = set()
        total_points = 0
        for idx in meeting:
            total_points += len(cycles[idx])
            for p in cycles[idx]:
                span.add(block_of(p, k))
        if total_points != k * len(span):
            raise ValueError("cycles of a block permutation must cover whole blocks")
        consumed.update(span)
        parts[rho].append(len(span))
    return PartitionFamily(k, {rho: pt.as_partition(ms) for rho, ms in parts.items()})


class BlockPermutation:
    """A permutation of [kn] sending k-blocks to k-blocks, stored as a 1-based image tuple."""

    __slots__ = ("k", "n", "images")

    def __init__(self, k: int, n: int, images, _checked: bool = False):
        images = tuple(images)
        if len(images) != k * n:
            raise DimensionMismatch(f"expected {k * n} images, got {len(images)}")
        if not _checked and not is_block_permutation(images, k):
            raise ValueError("images do not define a block permutation")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int, n: int) -> "BlockPermutation":
        return cls(k, n, range(1, k * n + 1), _checked=True)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "BlockPermutation") -> "BlockPermutation":
        if self.k != other.k or self.n != other.n:
            raise DimensionMismatch("cannot compose elements of different groups")
        return BlockPermutation(
            self.k, self.n, tuple(self.images[y - 1] for y in other.images), _checked=True
        )

    def inverse(self) -> "BlockPermutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return BlockPermutation(self.k, self.n, tuple(inv), _checked=True)

    def quotient(self) -> tuple[int, ...]:
        """The induced permutation of block indices, as a 1-based image tuple."""
        k = self.k
        return tuple(block_of(self.images[(i - 1) * k], k) for i in range(1, self.n + 1))

    def type_of(self) -> PartitionFamily:
        mapping = dict(enumerate(self.images, start=1))
        return type_from_mapping(self.k, range(1, self.n + 1), mapping)

    def to_text(self) -> str:
        return "(" + ",".join(str(y) for y in self.images) + ")"

    @classmethod
    def from_text(cls, text: str, k: int, n: int) -> "BlockPermutation":
        body = text.strip().removeprefix("(").removesuffix(")")
        return cls(k, n, (int(piece) for piece in body.split(",")))

    def __setattr__(self, name, value):
        raise AttributeError("BlockPermutation is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, BlockPermutation)
            and self.k == other.k
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.k, self.images))

    def __repr__(self):
        return f"BlockPermutation(k={self.k}, n={self.n}, {self.to_text()})"


def conjugate(sigma: BlockPermutation, omega: BlockPermutation) -> BlockPermutation:
    """sigma * omega * sigma^-1; preserves the type."""
    return sigma * omega * sigma.inverse()


def group_order(k: int, n: int) -> int:
    return factorial(k) ** n * factorial(n)


def enumerate_group(k: int, n: int, budget: int = DEFAULT_BUDGET):
    """All k-block permutations of [kn], each exactly once, in a fixed order."""
    order = group_order(k, n)
    if order > budget:
        raise BudgetExceeded(order, budget, "group enumeration")
    fills_pool = tuple(permutations(range(k)))
    for quot in permutations(range(1, n + 1)):
        bases = tuple((quot[i] - 1) * k for i in range(n))
        for fills in product(fills_pool, repeat=n):
            images = [0] * (k * n)
            pos = 0
            for i in range(n):
                base = bases[i]
                for b in fills[i]:
                    images[pos] = base + b + 1
                    pos += 1
            yield BlockPermutation(k, n, tuple(images), _checked=True)


# -- direct class construction ------------------------------------------------
#
# An element of the class labelled by a family is assembled cluster by
# cluster: pick the blocks of each cluster, a cyclic order on them, free
# bijections along the cycle, and a closing bijection chosen so the
# first-return map to the starting block has the prescribed cycle type.
# Every class element arises from exactly one such choice.


def _compose_local(a, b):
    return tuple(a[x] for x in b)


def _invert_local(a):
    inv = [0] * len(a)
    for i, y in enumerate(a):
        inv[y] = i
    return tuple(inv)


def _local_cycle_type(perm) -> Partition:
    return cycle_type(tuple(p + 1 for p in perm))


@cache
def _perms_of_type(k: int, rho: Partition) -> tuple[tuple[int, ...], ...]:
    return tuple(p for p in permutations(range(k)) if _local_cycle_type(p) == rho)


@cache
def canonical_perm_of_type(k: int, rho: Partition) -> tuple[int, ...]:
    """A fixed 0-based permutation of [k] with cycle type rho (consecutive cycles)."""
    perm = list(range(k))
    offset = 0
    for part in rho:
        for i in range(part):
            perm[offset + i] = offset + (i + 1) % part
        offset += part
    return tuple(perm)


def _family_slots(fam: PartitionFamily):
    """One (rho, m) slot per cluster, in the canonical component order."""
    return [(rho, m) for rho, comp in fam.items() for m in comp]


def _cluster_assignments(slots, pool):
    """Set partitions of `pool` into labelled clusters of the slot sizes.

    Clusters of identical slots are forced to have increasing minima so each
    unordered assignment is produced exactly once.
    """

    def rec(i, available, prev_min):
        if i == len(slots):
            yield ()
            return
        _, m = slots[i]
        lower = prev_min if i > 0 and slots[i - 1] == slots[i] else 0
        for combo in combinations(available, m):
            if combo[0] <= lower:
                continue
            remaining = tuple(b for b in available if b not in combo)
            for rest in rec(i + 1, remaining, combo[0]):
                yield (combo,) + rest

    yield from rec(0, tuple(sorted(pool)), 0)


def _cluster_mapping(k, cycle, locals_, closing):
    mapping = {}
    m = len(cycle)
    for j in range(m):
        src = (cycle[j] - 1) * k
        dst = (cycle[(j + 1) % m] - 1) * k
        local = locals_[j] if j < m - 1 else closing
        for i in range(k):
            mapping[src + i + 1] = dst + local[i] + 1
    return mapping


def _cluster_mappings(k, rho, cluster_blocks):
    """All ways to realize one cluster with pattern rho on the given blocks."""
    b0, rest = cluster_blocks[0], cluster_blocks[1:]
    all_locals = tuple(permutations(range(k)))
    closings = _perms_of_type(k, rho)
    for order in permutations(rest):
        cycle = (b0,) + order
        for locals_ in product(all_locals, repeat=len(cycle) - 1):
            composite = tuple(range(k))
            for t in locals_:
                composite = _compose_local(t, composite)
            inv = _invert_local(composite)
            for c in closings:
                yield _cluster_mapping(k, cycle, locals_, _compose_local(c, inv))


def class_mappings_on_blocks(fam: PartitionFamily, blocks):
    """Point mappings of every element with type `fam` on the given blocks."""
    blocks = tuple(sorted(blocks))
    if fam.size != len(blocks):
        raise SizeMismatch(f"family of size {fam.size} needs {fam.size} blocks, got {len(blocks)}")
    slots = _family_slots(fam)
    k = fam.k

    def rec(index, clusters, acc):
        if index == len(slots):
            yield dict(acc)
            return
        rho, _ = slots[index]
        # pieces of one cluster share a key set, so later choices overwrite
        # earlier ones in acc and no undo is needed
        for piece in _cluster_mappings(k, rho, clusters[index]):
            acc.update(piece)
            yield from rec(index + 1, clusters, acc)

    for clusters in _cluster_assignments(slots, blocks):
        yield from rec(0, clusters, {})


def representative_mapping_on_blocks(fam: PartitionFamily, blocks) -> dict:
    """A fixed class member: consecutive clusters, translations along each cycle."""
    blocks = tuple(sorted(blocks))
    if fam.size != len(blocks):
        raise SizeMismatch(f"family of size {fam.size} needs {fam.size} blocks, got {len(blocks)}")
    k = fam.k
    mapping = {}
    at = 0
    identity_local = tuple(range(k))
    for rho, m in _family_slots(fam):
        cycle = blocks[at : at + m]
        at += m
        locals_ = (identity_local,) * (m - 1)
        mapping.update(_cluster_mapping(k, cycle, locals_, canonical_perm_of_type(k, rho)))
    return mapping


def _mapping_to_block_permutation(k, n, mapping) -> BlockPermutation:
    images = list(range(1, k * n + 1))
    for x, y in mapping.items():
        images[x - 1] = y
    return BlockPermutation(k, n, tuple(images), _checked=True)


def class_representative(fam: PartitionFamily, n: int) -> BlockPermutation:
    """A fixed element of the conjugacy class labelled by `fam` (requires size n)."""
    if fam.size != n:
        raise SizeMismatch(f"family has size {fam.size}, expected {n}")
    mapping = representative_mapping_on_blocks(fam, range(1, n + 1))
    return _mapping_to_block_permutation(fam.k, n, mapping)


def enumerate_class(
    fam: PartitionFamily,
    n: int,
    strategy: str = "direct",
    budget: int = DEFAULT_BUDGET,
):
    """All elements of the conjugacy class labelled by `fam`, each exactly once.

    The direct strategy builds the class constructively and never touches
    the rest of the group; the filter strategy scans the whole group and is
    kept as an independent cross-check.
    """
    if fam.size != n:
        raise SizeMismatch(f"family has size {fam.size}, expected {n}")
    if class_size(fam, n) > budget:
        raise BudgetExceeded(class_size(fam, n), budget, "class enumeration")
    if strategy == "filter":
        for omega in enumerate_group(fam.k, n, budget=budget):
            if omega.type_of() == fam:
                yield omega
    elif strategy == "direct":
        for mapping in class_mappings_on_blocks(fam, range(1, n + 1)):
            yield _mapping_to_block_permutation(fam.k, n, mapping)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")


def twist_element(k: int, n: int) -> BlockPermutation:
    """A fixed, generically nontrivial element used to re-check representatives."""
    if n == 0:
        return BlockPermutation.identity(k, n)
    images = []
    for i in range(1, n + 1):
        target = i % n + 1
        base = (target - 1) * k
        fill = list(range(k))
        if k >= 2 and i == 1:
            fill[0], fill[1] = fill[1], fill[0]
        images.extend(base + b + 1 for b in fill)
    return BlockPermutation(k, n, tuple(images), _checked=True)
