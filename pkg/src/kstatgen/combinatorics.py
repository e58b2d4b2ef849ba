"""Set partitions and integer partitions.

Every formula this package generates is a sum over the partitions of a
finite set of factor positions, or over integer partitions acting as their
size signatures.  Enumeration streams lazily in a fixed deterministic
order, so downstream sums never materialize a partition family unless they
ask to.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import ResourceLimitError

# Bell(12) is about 4.2 million; past that an innocent-looking call can eat
# the machine.  Callers that know what they are doing pass allow_large=True.
SET_PARTITION_CAP = 12


@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..ground_size} into disjoint non-empty blocks.

    Canonical form: elements ascend within a block and blocks are ordered
    by smallest element.  The enumerators below only ever construct
    canonical partitions; ``validate`` re-checks the invariants.
    """

    blocks: tuple[tuple[int, ...], ...]
    ground_size: int

    def validate(self):
        elements = [x for block in self.blocks for x in block]
        if len(set(elements)) != len(elements):
            raise ValueError("blocks are not disjoint")
        if set(elements) != set(range(1, self.ground_size + 1)):
            raise ValueError(f"blocks do not cover 1..{self.ground_size}")
        for block in self.blocks:
            if not block or list(block) != sorted(block):
                raise ValueError(f"block {block!r} is empty or out of order")
        minima = [block[0] for block in self.blocks]
        if minima != sorted(minima):
            raise ValueError("blocks are not ordered by smallest element")


@dataclass(frozen=True)
class IntPartition:
    """Partition of a positive integer into weakly decreasing parts."""

    parts: tuple[int, ...]

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts

    @property
    def size(self) -> int:
        return sum(self.parts)


def block_size_signature(partition: SetPartition) -> tuple[int, ...]:
    """Multiset of block sizes, as a descending tuple.

    Expansion coefficients depend on a partition only through this
    signature, which makes it the memoization key of choice.
    """
    return tuple(sorted((len(b) for b in partition.blocks), reverse=True))


def set_partitions(i: int, k: int, *, allow_large: bool = False):
    """Iterate over all partitions of {1..i} into exactly k blocks.

    Enumeration follows lexicographic restricted-growth-string order, so
    two calls always yield the same sequence; the count equals the Stirling
    number of the second kind S(i, k).
    """
    _check_ground(i, allow_large)
    if not isinstance(k, int) or k < 1 or k > i:
        raise ValueError(f"need 1 <= k <= i, got k={k!r} with i={i}")
    return _generate(i, k, k)


def all_set_partitions(i: int, *, allow_large: bool = False):
    """All partitions of {1..i} by ascending block count (Bell(i) of them)."""
    _check_ground(i, allow_large)
    return _generate(i, 1, i)


def integer_partitions(m: int):
    """All partitions of m, largest part first, in reverse-lexicographic order."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"can only partition a positive integer, got {m!r}")
    return (IntPartition(parts) for parts in _desc_partitions(m, m))


def _check_ground(i, allow_large):
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"ground set size must be a positive integer, got {i!r}")
    if i > SET_PARTITION_CAP and not allow_large:
        raise ResourceLimitError(
            f"refusing to enumerate partitions of {i} elements "
            f"(cap {SET_PARTITION_CAP}); pass allow_large=True to override")


def _generate(i, k_lo, k_hi):
    for k in range(k_lo, k_hi + 1):
        yield from _exactly_k(i, k)


def _exactly_k(i, k):
    # Depth-first over restricted growth strings: position p may reuse any
    # label already open or open the next one (capped at k labels), which
    # gives lexicographic order for free.
    labels = [0] * i

    def rec(pos, used):
        if i - pos < k - used:  # not enough positions left to open k blocks
            return
        if pos == i:
            if used == k:
                yield _from_labels(labels, i, k)
            return
        top = min(used, k - 1)
        for v in range(top + 1):
            labels[pos] = v
            yield from rec(pos + 1, max(used, v + 1))

    yield from rec(0, 0)


def _from_labels(labels, i, k):
    blocks = [[] for _ in range(k)]
    for pos, label in enumerate(labels):
        blocks[label].append(pos + 1)
    return SetPartition(tuple(tuple(b) for b in blocks), i)


def _desc_partitions(m, cap):
    if m == 0:
        yield ()
        return
    for first in range(min(m, cap), 0, -1):
        for rest in _desc_partitions(m - first, first):
            yield (first,) + rest
