"""r-parking functions: recognition, simulation, enumeration, counting."""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .core import DEFAULT_CAP, ResourceCapError, ValidationError


def _check_entries(a: Sequence[int]) -> None:
    for x in a:
        if x < 0:
            raise ValidationError(f"negative entry {x}")


def is_r_parking(a: Sequence[int], r: int) -> bool:
    """True iff the sorted rearrangement b satisfies b_i <= r*(i-1) for all i."""
    if r < 1:
        raise ValidationError("r must be positive")
    _check_entries(a)
    return all(x <= r * i for i, x in enumerate(sorted(a)))


def simulate_parking(a: Sequence[int]) -> bool:
    """Greedy car-parking simulation on slots 0..k-1 (the r=1 semantics).

    Car i drives to its preferred slot and, if occupied, keeps moving to
    higher slots; returns True iff every car finds a spot.  Agrees with
    is_r_parking(a, 1) on every input.
    """
    _check_entries(a)
    k = len(a)
    occupied = [False] * k
    for pref in a:
        slot = pref
        while slot < k and occupied[slot]:
            slot += 1
        if slot >= k:
            return False
        occupied[slot] = True
    return True


def enumerate_parking(k: int, r: int, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """All r-parking functions of length k in lexicographic order.

    Entries above r*(k-1) can never satisfy the sorted bound, so scanning
    {0,..,r*(k-1)}^k is exhaustive.
    """
    if k < 1 or r < 1:
        raise ValidationError("need k >= 1 and r >= 1")
    top = r * (k - 1)
    if (top + 1) ** k > cap:
        raise ResourceCapError(f"search space {(top + 1) ** k} exceeds cap {cap}")
    for a in product(range(top + 1), repeat=k):
        if is_r_parking(a, r):
            yield a


def count_parking(k: int, r: int) -> int:
    """Number of r-parking functions of length k: (r*k + 1)^(k-1)."""
    if k < 0 or r < 1:
        raise ValidationError("need k >= 0 and r >= 1")
    if k == 0:
        return 1
    return (r * k + 1) ** (k - 1)


def parse_sequence(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x)
    except ValueError as exc:
        raise ValidationError(f"cannot parse sequence {text!r}: {exc}") from None


def format_sequence(a: Sequence[int]) -> str:
    return ",".join(map(str, a))
