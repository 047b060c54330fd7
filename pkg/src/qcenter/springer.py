"""Total cohomology dimension of type A Springer fibers."""
from __future__ import annotations

from math import factorial


class Partition(tuple):
    """Weakly decreasing positive parts."""

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p <= 0 for p in parts):
            raise ValueError("a partition needs positive parts")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def n(self) -> int:
        return sum(self)

    def dominates(self, other: "Partition") -> bool:
        """self >= other in dominance order (same size)."""
        if self.n != other.n:
            return False
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True


def springer_total_cohomology_dim(p) -> int:
    """n! / prod(parts!) for the Jordan type p."""
    p = Partition(p)
    out = factorial(p.n)
    for part in p:
        out //= factorial(part)
    return out


def coset_count(p) -> int:
    """|S_n / (S_p1 x S_p2 x ...)| by listing distinct rearrangements of the block labels."""
    from itertools import permutations

    p = Partition(p)
    labels = [i for i, part in enumerate(p) for _ in range(part)]
    return len(set(permutations(labels)))


def partitions(n: int):
    """All partitions of n, in reverse lexicographic order."""
    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for k in range(min(rem, cap), 0, -1):
            for rest in rec(rem - k, k):
                yield (k,) + rest
    return [Partition(x) for x in rec(n, n)]


def parse_partition(text: str) -> Partition:
    try:
        return Partition(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}") from exc
