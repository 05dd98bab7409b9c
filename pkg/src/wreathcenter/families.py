"""Families of partitions indexed by the partitions of k.

A family assigns one partition to every partition of k; families with
total size n label the conjugacy classes of the group of k-block
permutations of [kn].  Components default to the empty partition, and a
family is stored normalized so equality and hashing are structural.
"""

from functools import cache
from math import comb, factorial

from . import partitions as pt
from .errors import SizeMismatch, TooSmall
from .partitions import Partition

__all__ = [
    "PartitionFamily",
    "index_partitions",
    "family_size",
    "is_proper_family",
    "pad_family",
    "big_z",
    "class_size",
    "families_with_size",
    "format_family",
    "parse_family",
]


@cache
def index_partitions(k: int) -> tuple[Partition, ...]:
    """The partitions of k in component order: (1^k) first, (k) last.

    This is the order used for storing and printing family components; it
    matches the usual bipartition/triplet conventions at k = 2, 3.
    """
    return tuple(reversed(pt.partitions_of(k)))


class PartitionFamily:
    """An assignment of a partition to every partition of k."""

    __slots__ = ("k", "components")

    def __init__(self, k: int, assignment=None):
        """Build a family from a mapping {partition of k: partition}.

        Missing keys mean the empty partition.  Keys must be partitions
        of exactly k.
        """
        if k < 1:
            raise ValueError("k must be a positive integer")
        keys = index_partitions(k)
        comps = {key: () for key in keys}
        if assignment:
            for key, value in dict(assignment).items():
                key = pt.as_partition(key)
                if key not in comps:
                    raise ValueError(f"{key} is not a partition of {k}")
                comps[key] = pt.as_partition(value)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "components", tuple(comps[key] for key in keys))

    @classmethod
    def from_components(cls, k: int, components) -> "PartitionFamily":
        """Build from a sequence of partitions in index_partitions(k) order."""
        components = tuple(components)
        if len(components) != len(index_partitions(k)):
            raise ValueError(
                f"expected {len(index_partitions(k))} components for k={k}, got {len(components)}"
            )
        return cls(k, dict(zip(index_partitions(k), components)))

    @classmethod
    def empty(cls, k: int) -> "PartitionFamily":
        return cls(k)

    @classmethod
    def identity(cls, k: int, n: int) -> "PartitionFamily":
        """The family of the identity element of the k-block group on [kn]."""
        return cls(k, {(1,) * k: (1,) * n})

    def component(self, rho) -> Partition:
        rho = pt.as_partition(rho)
        return self.components[index_partitions(self.k).index(rho)]

    @property
    def ones_component(self) -> Partition:
        """The component attached to the all-ones partition (1^k)."""
        return self.components[0]

    @property
    def m1(self) -> int:
        """Number of 1-parts in the all-ones component."""
        return self.ones_component.count(1)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    def is_proper(self) -> bool:
        return pt.is_proper(self.ones_component)

    def items(self):
        """(key partition, component) pairs in index order."""
        return tuple(zip(index_partitions(self.k), self.components))

    def replace(self, rho, value) -> "PartitionFamily":
        """A copy of this family with the component at `rho` replaced."""
        mapping = dict(self.items())
        mapping[pt.as_partition(rho)] = pt.as_partition(value)
        return PartitionFamily(self.k, mapping)

    def sort_key(self):
        return self.components

    def __setattr__(self, name, value):
        raise AttributeError("PartitionFamily is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, PartitionFamily)
            and self.k == other.k
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.k, self.components))

    def __repr__(self):
        return f"PartitionFamily(k={self.k}, {format_family(self)!r})"


def family_size(fam: PartitionFamily) -> int:
    """Total size: the sum of the sizes of all components."""
    return fam.size


def is_proper_family(fam: PartitionFamily) -> bool:
    """True iff the all-ones component has no part equal to 1."""
    return fam.is_proper()


def pad_family(fam: PartitionFamily, n: int) -> PartitionFamily:
    """Grow the family to total size n by adding 1-parts to the all-ones component."""
    if n < fam.size:
        raise TooSmall(f"cannot pad family of size {fam.size} to size {n}")
    padded = pt.union(fam.ones_component, (1,) * (n - fam.size))
    return fam.replace((1,) * fam.k, padded)


def big_z(fam: PartitionFamily) -> int:
    """Centralizer order factor: product over keys rho of z(component) * z(rho)^len(component).

    The conjugacy class labelled by a family of size n has exactly
    n! * (k!)^n / big_z elements.
    """
    z = 1
    for rho, comp in fam.items():
        z *= pt.z_of(comp) * pt.z_of(rho) ** len(comp)
    return z


def class_size(fam: PartitionFamily, n: int) -> int:
    """Number of k-block permutations of [kn] whose type is `fam` (requires size n)."""
    if fam.size != n:
        raise SizeMismatch(f"family has size {fam.size}, expected {n}")
    total = factorial(n) * factorial(fam.k) ** n
    q, r = divmod(total, big_z(fam))
    assert r == 0, "class size formula must divide the group order exactly"
    return q


def families_with_size(k: int, n: int, proper_only: bool = False):
    """All families with total size n, each exactly once, in a deterministic order.

    With proper_only, restrict to families whose all-ones component has no
    1-parts.  Output is sorted by the canonical component order.
    """
    keys = index_partitions(k)

    def gen(slot, remaining):
        if slot == len(keys):
            if remaining == 0:
                yield ()
            return
        if slot == len(keys) - 1:
            for p in pt.partitions_of(remaining):
                yield (p,)
            return
        for s in range(remaining + 1):
            for p in pt.partitions_of(s):
                for rest in gen(slot + 1, remaining - s):
                    yield (p,) + rest

    out = [PartitionFamily.from_components(k, comps) for comps in gen(0, n)]
    if proper_only:
        out = [fam for fam in out if fam.is_proper()]
    out.sort(key=PartitionFamily.sort_key)
    return out


def binomial_pad_factor(fam: PartitionFamily, n: int) -> int:
    """Multiplicity picked up when a partial class of this type extends to [kn]."""
    return comb(n - fam.size + fam.m1, fam.m1)


def format_family(fam: PartitionFamily) -> str:
    """Text form `{[1,1]:[3,1]; [2]:[2]}`: empty components omitted, `{}` if all empty."""
    entries = [
        f"{pt.format_partition(rho)}:{pt.format_partition(comp)}"
        for rho, comp in fam.items()
        if comp
    ]
    return "{" + "; ".join(entries) + "}"


def parse_family(text: str, k: int) -> PartitionFamily:
    """Parse the format_family text form; entry order and spacing are free."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"not a family literal: {text!r}")
    body = text[1:-1].strip()
    mapping = {}
    if body:
        for entry in body.split(";"):
            entry = entry.strip()
            if not entry:
                continue
            key_text, sep, value_text = entry.partition(":")
            if not sep:
                raise ValueError(f"family entry {entry!r} lacks a ':'")
            key = pt.parse_partition(key_text)
            if sum(key) != k:
                raise ValueError(f"family key {key_text.strip()} is not a partition of {k}")
            if key in mapping:
                raise ValueError(f"duplicate family key {key_text.strip()}")
            mapping[key] = pt.parse_partition(value_text)
    return PartitionFamily(k, mapping)
