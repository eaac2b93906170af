from __future__ import annotations


class Buckets:
    """Partition of integer ids into numbered bags.

    add/remove/pick are O(1).  Each bag keeps insertion order and ``pick``
    returns the most recently added id still present, so picks depend only
    on the sequence of operations (a linked list reproduces them exactly).
    """

    __slots__ = ("bags", "where", "updates")

    def __init__(self, nbags: int, size: int = 0):
        self.bags: list[dict[int, None]] = [{} for _ in range(nbags)]
        self.where = [-1] * size
        self.updates = 0

    def grow(self, size: int) -> None:
        extra = size - len(self.where)
        if extra > 0:
            self.where.extend([-1] * extra)

    def add(self, x: int, b: int) -> None:
        self.where[x] = b
        self.bags[b][x] = None
        self.updates += 1

    def remove(self, x: int) -> None:
        b = self.where[x]
        if b < 0:
            return
        del self.bags[b][x]
        self.where[x] = -1
        self.updates += 1

    def pick(self, b: int) -> int:
        bag = self.bags[b]
        return next(reversed(bag)) if bag else -1

    def size(self, b: int) -> int:
        return len(self.bags[b])

    def snapshot(self) -> list[frozenset[int]]:
        return [frozenset(bag) for bag in self.bags]
