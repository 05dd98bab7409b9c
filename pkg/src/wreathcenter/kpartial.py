"""k-partial permutations: block permutations carried on a finite set of blocks.

A k-partial permutation is a pair (domain, perm) where the domain is a
finite set of block indices and perm is a block permutation of the
corresponding points.  Products extend both factors by the identity to the
union of domains, so the set of all of them is a semigroup whose orbit
sums span the universal algebra projecting onto every group-algebra
center.
"""

from itertools import chain, combinations
from math import factorial

from . import partitions as pt
from .blockperm import (
    DEFAULT_BUDGET,
    BlockPermutation,
    block_of,
    block_points,
    class_mappings_on_blocks,
    class_size,
    enumerate_group,
    group_order,
    representative_mapping_on_blocks,
    type_from_mapping,
)
from .errors import BudgetExceeded, DimensionMismatch, DomainNotCovered, SizeMismatch
from .families import PartitionFamily, binomial_pad_factor, pad_family


class KPartialPermutation:
    """A pair (blocks, perm); points of the domain are listed in increasing order."""

    __slots__ = ("k", "blocks", "images", "_map")

    def __init__(self, k: int, blocks, images, _checked: bool = False):
        blocks = tuple(sorted(set(blocks)))
        images = tuple(images)
        if not _checked:
            points = tuple(chain.from_iterable(block_points(b, k) for b in blocks))
            if sorted(images) != sorted(points):
                raise ValueError("images must be a bijection of the domain points")
            mapping = dict(zip(points, images))
            for b in blocks:
                targets = {block_of(mapping[p], k) for p in block_points(b, k)}
                if len(targets) != 1 or next(iter(targets)) not in blocks:
                    raise ValueError("perm must send each domain block onto a domain block")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_map", None)

    @classmethod
    def empty(cls, k: int) -> "KPartialPermutation":
        """The semigroup identity: the trivial permutation of the empty set."""
        return cls(k, (), (), _checked=True)

    @classmethod
    def from_mapping(cls, k: int, blocks, mapping: dict, _checked: bool = False):
        blocks = tuple(sorted(set(blocks)))
        points = chain.from_iterable(block_points(b, k) for b in blocks)
        return cls(k, blocks, (mapping.get(p, p) for p in points), _checked=_checked)

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(chain.from_iterable(block_points(b, self.k) for b in self.blocks))

    def mapping(self) -> dict:
        if self._map is None:
            object.__setattr__(self, "_map", dict(zip(self.points, self.images)))
        return self._map

    def __setattr__(self, name, value):
        raise AttributeError("KPartialPermutation is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, KPartialPermutation)
            and self.k == other.k
            and self.blocks == other.blocks
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.k, self.blocks, self.images))

    def to_text(self) -> str:
        blocks = "[" + ",".join(str(b) for b in self.blocks) + "]"
        images = "(" + ",".join(str(y) for y in self.images) + ")"
        return f"{{blocks:{blocks}; k:{self.k}; images:{images}}}"

    @classmethod
    def from_text(cls, text: str) -> "KPartialPermutation":
        body = text.strip().removeprefix("{").removesuffix("}")
        fields = {}
        for entry in body.split(";"):
            name, _, value = entry.strip().partition(":")
            fields[name.strip()] = value.strip()
        k = int(fields["k"])
        blocks_body = fields["blocks"].removeprefix("[").removesuffix("]")
        blocks = [int(b) for b in blocks_body.split(",")] if blocks_body else []
        images_body = fields["images"].removeprefix("(").removesuffix(")")
        images = [int(y) for y in images_body.split(",")] if images_body else []
        return cls(k, blocks, images)

    def __repr__(self):
        return f"KPartialPermutation({self.to_text()})"

    def __mul__(self, other: "KPartialPermutation") -> "KPartialPermutation":
        return product(self, other)


def product(p: KPartialPermutation, q: KPartialPermutation) -> KPartialPermutation:
    """Compose after extending both factors by the identity to the union of domains."""
    if p.k != q.k:
        raise DimensionMismatch("factors must share the same block size k")
    blocks = sorted(set(p.blocks) | set(q.blocks))
    pm, qm = p.mapping(), q.mapping()
    mapping = {}
    for b in blocks:
        for x in block_points(b, p.k):
            y = qm.get(x, x)
            mapping[x] = pm.get(y, y)
    return KPartialPermutation.from_mapping(p.k, blocks, mapping, _checked=True)


def support(p: KPartialPermutation) -> tuple[int, ...]:
    """Blocks of the domain on which the permutation moves at least one point."""
    mapping = p.mapping()
    return tuple(
        b for b in p.blocks if any(mapping[x] != x for x in block_points(b, p.k))
    )


def act(sigma: BlockPermutation, p: KPartialPermutation) -> KPartialPermutation:
    """Conjugation action: (domain, perm) goes to (sigma(domain), sigma perm sigma^-1)."""
    if sigma.k != p.k:
        raise DimensionMismatch("action requires the same block size k")
    if p.blocks and p.blocks[-1] > sigma.n:
        raise DomainNotCovered(f"element of [{sigma.k * sigma.n}] cannot act on blocks {p.blocks}")
    mapping = {sigma(x): sigma(y) for x, y in p.mapping().items()}
    blocks = {block_of(x, p.k) for x in mapping}
    return KPartialPermutation.from_mapping(p.k, blocks, mapping, _checked=True)


def extend(p: KPartialPermutation, n: int) -> BlockPermutation:
    """The block permutation of [kn] agreeing with p on its domain, identity elsewhere."""
    if p.blocks and p.blocks[-1] > n:
        raise DomainNotCovered(f"domain blocks {p.blocks} do not fit in [{n}]")
    images = list(range(1, p.k * n + 1))
    for x, y in p.mapping().items():
        images[x - 1] = y
    return BlockPermutation(p.k, n, tuple(images), _checked=True)


def kp_type(p: KPartialPermutation) -> PartitionFamily:
    """Type of the carried permutation; total size equals the number of domain blocks."""
    return type_from_mapping(p.k, p.blocks, p.mapping())


def partial_class_size(fam: PartitionFamily, n: int) -> int:
    """Number of k-partial permutations of n in the orbit labelled by `fam`.

    Returns 0 when the family is too large to fit, which makes projection
    formulas total.
    """
    if fam.size > n:
        return 0
    return binomial_pad_factor(fam, n) * class_size(pad_family(fam, n), n)


def count_all(k: int, n: int) -> int:
    """Total number of k-partial permutations of n: sum of (n falling r) * (k!)^r."""
    return sum(
        pt.falling_factorial(n, r) * factorial(k) ** r for r in range(n + 1)
    )


def universal_class_members(
    fam: PartitionFamily, n: int, budget: int = DEFAULT_BUDGET
):
    """All k-partial permutations of n with type `fam` and exactly |fam| domain blocks."""
    if fam.size > n:
        raise SizeMismatch(f"family of size {fam.size} does not fit in [{n}]")
    total = partial_class_size(fam, n)
    if total > budget:
        raise BudgetExceeded(total, budget, "partial class enumeration")
    for blocks in combinations(range(1, n + 1), fam.size):
        for mapping in class_mappings_on_blocks(fam, blocks):
            yield KPartialPermutation.from_mapping(fam.k, blocks, mapping, _checked=True)


def partial_class_representative(fam: PartitionFamily, n: int) -> KPartialPermutation:
    """A fixed member of the orbit labelled by `fam`, carried on the first |fam| blocks."""
    if fam.size > n:
        raise SizeMismatch(f"family of size {fam.size} does not fit in [{n}]")
    blocks = tuple(range(1, fam.size + 1))
    mapping = representative_mapping_on_blocks(fam, blocks)
    return KPartialPermutation.from_mapping(fam.k, blocks, mapping, _checked=True)


def enumerate_kpartial(k: int, n: int, budget: int = DEFAULT_BUDGET):
    """Every k-partial permutation of n, grouped by domain."""
    total = count_all(k, n)
    if total > budget:
        raise BudgetExceeded(total, budget, "partial permutation enumeration")
    for r in range(n + 1):
        if group_order(k, r) > budget:
            raise BudgetExceeded(group_order(k, r), budget, "partial permutation enumeration")
        for blocks in combinations(range(1, n + 1), r):
            yield from _all_on_blocks(k, blocks)


def _all_on_blocks(k: int, blocks):
    """Relabel the full group on len(blocks) blocks onto the chosen block indices."""
    if not blocks:
        yield KPartialPermutation.empty(k)
        return
    r = len(blocks)
    for omega in enumerate_group(k, r):
        mapping = {}
        for local_block in range(1, r + 1):
            src_base = (blocks[local_block - 1] - 1) * k
            for i in range(1, k + 1):
                y = omega((local_block - 1) * k + i)
                dst_base = (blocks[block_of(y, k) - 1] - 1) * k
                mapping[src_base + i] = dst_base + (y - 1) % k + 1
        yield KPartialPermutation.from_mapping(k, blocks, mapping, _checked=True)
