"""Finite partial orders on integer points, stored as bitmask rows.

Points are 0..n-1 and every subset of points is a Python int whose bit i
stands for point i. Row masks keep the hot operations (closure, downset
enumeration, cover extraction) to a handful of word ops per point.
"""

from .errors import CapError, CycleError, ExplosionError

MAX_POINTS = 64
DOWNSET_CAP = 1 << 20


def iter_bits(mask: int):
    """Yield the set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable partial order; bit j of up[i] means i <= j.

    `up` and `down` both include the diagonal, so up[i] is the principal
    filter of i and down[j] the principal ideal of j. The constructor
    validates reflexivity, antisymmetry and transitivity.
    """

    __slots__ = ("n", "up", "down", "labels")

    def __init__(self, up, labels=None):
        up = tuple(int(row) for row in up)
        n = len(up)
        if n > MAX_POINTS:
            raise CapError(f"poset has {n} points, cap is {MAX_POINTS}")
        full = (1 << n) - 1
        down = [0] * n
        for i, row in enumerate(up):
            if row & ~full:
                raise ValueError(f"row {i} references points outside 0..{n - 1}")
            if not row >> i & 1:
                raise ValueError(f"order must be reflexive (point {i})")
            for j in iter_bits(row):
                down[j] |= 1 << i
        for i in range(n):
            for j in iter_bits(up[i] & ~(1 << i)):
                if up[j] >> i & 1:
                    raise ValueError(f"order must be antisymmetric ({i}, {j})")
                if up[j] & ~up[i]:
                    raise ValueError(f"order must be transitive ({i}, {j})")
        self.n = n
        self.up = up
        self.down = tuple(down)
        self.labels = tuple(labels) if labels is not None else None

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def points(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.up == other.up and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.up))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={cover_pairs(self)})"


class IdealList:
    """Every downset of `base`, as bitmasks in canonical order.

    Canonical order is (popcount, numeric mask value): the empty set comes
    first, the full set last, and the derived lattice is deterministic.
    """

    __slots__ = ("base", "ideals", "index")

    def __init__(self, base: Poset, ideals):
        self.base = base
        self.ideals = tuple(ideals)
        self.index = {mask: pos for pos, mask in enumerate(self.ideals)}

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IdealList):
            return NotImplemented
        return self.base == other.base and self.ideals == other.ideals

    def __repr__(self) -> str:
        return f"IdealList({len(self.ideals)} ideals over {self.base.n} points)"


def poset_from_covers(n: int, covers, labels=None) -> Poset:
    """Reflexive-transitive closure of the cover pairs.

    Raises CycleError when the closure would violate antisymmetry and
    IndexError for pairs outside 0..n-1.
    """
    adj = [0] * n
    for i, j in covers:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"cover ({i}, {j}) outside 0..{n - 1}")
        if i == j:
            raise CycleError(f"cover ({i}, {j}) relates a point to itself")
        adj[i] |= 1 << j
    up = [1 << i | adj[i] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= up[k]
    for i in range(n):
        for j in iter_bits(up[i] & ~(1 << i)):
            if up[j] >> i & 1:
                raise CycleError(f"points {i} and {j} lie on a cycle")
    return Poset(up, labels=labels)


def cover_pairs(p: Poset) -> list[tuple[int, int]]:
    """Hasse edges (i, j): i strictly below j with nothing in between."""
    out = []
    for i in range(p.n):
        for j in iter_bits(p.up[i] & ~(1 << i)):
            between = p.up[i] & p.down[j] & ~(1 << i) & ~(1 << j)
            if not between:
                out.append((i, j))
    out.sort()
    return out


def linear_extension(p: Poset) -> list[int]:
    """Total order refining p: the smallest available index goes next."""
    chosen = 0
    out = []
    for _ in range(p.n):
        for i in range(p.n):
            if not chosen >> i & 1 and not (p.down[i] & ~chosen & ~(1 << i)):
                out.append(i)
                chosen |= 1 << i
                break
    return out


def downsets(p: Poset, cap: int | None = None) -> IdealList:
    """Enumerate every downward-closed subset of p.

    Walks a fixed linear extension, branching skip/add whenever a point's
    strict predecessors are already in, so each leaf is a distinct downset.
    Raises ExplosionError when more than `cap` (default DOWNSET_CAP) exist.
    """
    limit = DOWNSET_CAP if cap is None else cap
    order = linear_extension(p)
    down = p.down
    out = []

    def walk(k: int, mask: int):
        if k == len(order):
            out.append(mask)
            if len(out) > limit:
                raise ExplosionError(limit)
            return
        v = order[k]
        walk(k + 1, mask)
        if not down[v] & ~mask & ~(1 << v):
            walk(k + 1, mask | (1 << v))

    walk(0, 0)
    out.sort(key=lambda m: (m.bit_count(), m))
    return IdealList(p, out)
