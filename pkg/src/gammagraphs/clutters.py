"""Clutters (antichains of subsets of a finite ground set) and the blocker
operation: the family of all inclusion-minimal transversals."""

from __future__ import annotations

import random
from dataclasses import dataclass


def _sort_key(member: frozenset[int]):
    return (len(member), tuple(sorted(member)))


@dataclass(frozen=True)
class Clutter:
    """An antichain over the ground set {1..ground_size}.

    Members are stored sorted by size then lexicographically.  The empty set
    may appear only as the sole member.
    """

    ground_size: int
    members: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.ground_size < 0:
            raise ValueError("ground size must be non-negative")
        object.__setattr__(
            self, "members", tuple(sorted((frozenset(m) for m in self.members), key=_sort_key))
        )
        seen = set()
        for m in self.members:
            if m in seen:
                raise ValueError(f"duplicate member {sorted(m)}")
            seen.add(m)
        _check_antichain(self.ground_size, self.members)

    def member_sets(self) -> set[frozenset[int]]:
        return set(self.members)


def _check_antichain(ground_size: int, members) -> None:
    for m in members:
        for e in m:
            if not (1 <= e <= ground_size):
                raise ValueError(f"element {e} outside ground set [1..{ground_size}]")
    for a in members:
        for b in members:
            if a != b and a <= b:
                raise ValueError(
                    f"not an antichain: member {sorted(a)} is contained in member {sorted(b)}"
                )


def validate_clutter(ground_size: int, family) -> Clutter:
    """Check the antichain condition and build a Clutter, or raise ValueError
    naming the offending pair / out-of-range element."""
    return Clutter(ground_size, tuple(frozenset(m) for m in family))


def blocker(c: Clutter) -> Clutter:
    """All inclusion-minimal subsets of the ground set meeting every member.

    Computed by incremental transversal extension: branch on the first
    uncovered member and add each of its elements, then keep the minimal
    results.  The blocker of the empty clutter is rejected; the blocker of
    {{}} is the empty clutter (nothing intersects the empty set).
    """
    if not c.members:
        raise ValueError("the blocker of the empty clutter is undefined")
    masks = []
    for m in c.members:
        mask = 0
        for e in m:
            mask |= 1 << (e - 1)
        masks.append(mask)
    if 0 in masks:
        return Clutter(c.ground_size, ())

    found: set[int] = set()
    seen: set[int] = set()

    def extend(partial: int) -> None:
        if partial in seen:
            return
        seen.add(partial)
        for mask in masks:
            if mask & partial == 0:
                rest = mask
                while rest:
                    low = rest & -rest
                    extend(partial | low)
                    rest ^= low
                return
        found.add(partial)

    extend(0)
    minimal = [
        t for t in found if not any(o != t and o & t == o for o in found)
    ]
    members = []
    for t in minimal:
        s = set()
        rest = t
        while rest:
            low = rest & -rest
            s.add(low.bit_length())
            rest ^= low
        members.append(frozenset(s))
    return Clutter(c.ground_size, tuple(members))


def clutter_to_json(c: Clutter) -> dict:
    return {"n": c.ground_size, "members": [sorted(m) for m in c.members]}


def clutter_from_json(doc: dict) -> Clutter:
    return validate_clutter(int(doc["n"]), [frozenset(map(int, m)) for m in doc["members"]])


def random_clutter(rng: random.Random, ground_size: int, max_members: int | None = None) -> Clutter:
    """Seeded random nonempty antichain of nonempty subsets of [1..ground_size].

    Samples a handful of subsets and keeps the inclusion-minimal ones.
    """
    if ground_size < 1:
        raise ValueError("ground size must be >= 1")
    count = rng.randint(1, max_members or max(2, 2 * ground_size))
    family: set[frozenset[int]] = set()
    for _ in range(count):
        size = rng.randint(1, ground_size)
        family.add(frozenset(rng.sample(range(1, ground_size + 1), size)))
    minimal = {s for s in family if not any(o < s for o in family)}
    return Clutter(ground_size, tuple(minimal))
