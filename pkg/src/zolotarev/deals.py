"""Card deals on rectangular grids and the permutations between them.

Full-deck deals (row, column, diagonal) place cards ``0 .. m*n-1`` on an
``m x n`` grid. The supplement deals place cards ``1 .. n-1`` on a
``2 x (n-1)/2`` grid for odd ``n >= 3``; they carry ``label_base = 1`` so
renderings show the labels a reader would expect.

``deal_permutation(src, dst)`` sends the card at position ``(i, j)`` of
``src`` to the card at ``(i, j)`` of ``dst`` (labels shifted down by
``label_base``), so that ``compose(beta, alpha) == gamma`` holds literally.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import (
    CapacityError,
    DealMismatch,
    EvenDimension,
    EvenOrSmallModulus,
    NonCoprimeDimensions,
)
from .perms import Permutation, Sign

MAX_CELLS = 10**7


class DealKind(enum.Enum):
    ROW = "row"
    COLUMN = "col"
    DIAGONAL = "diag"
    ZIGZAG = "zigzag"
    MODIFIED_ZIGZAG = "modzigzag"


@dataclass(frozen=True)
class GridSpec:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"grid dimensions must be positive, got {self.m}x{self.n}")
        if self.m * self.n > MAX_CELLS:
            raise CapacityError(f"{self.m}x{self.n} grid exceeds {MAX_CELLS} cells")

    @property
    def cells(self) -> int:
        return self.m * self.n


@dataclass(frozen=True)
class Deal:
    spec: GridSpec
    cells: tuple[tuple[int, ...], ...]
    label_base: int = 0

    def __post_init__(self):
        m, n = self.spec.m, self.spec.n
        if len(self.cells) != m or any(len(row) != n for row in self.cells):
            raise DealMismatch(f"cells do not form a {m}x{n} grid")
        if self.label_base not in (0, 1):
            raise DealMismatch("label_base must be 0 or 1")
        labels = sorted(v for row in self.cells for v in row)
        if labels != list(range(self.label_base, self.label_base + m * n)):
            raise DealMismatch("cells must hold each label exactly once")

    def __getitem__(self, pos: tuple[int, int]) -> int:
        i, j = pos
        return self.cells[i][j]

    def positions(self) -> dict[int, tuple[int, int]]:
        return {v: (i, j) for i, row in enumerate(self.cells) for j, v in enumerate(row)}

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.cells]


def _grid(m: int, n: int, f) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(f(i, j) for j in range(n)) for i in range(m))


def row_deal(spec: GridSpec, label_base: int = 0) -> Deal:
    n = spec.n
    return Deal(spec, _grid(spec.m, n, lambda i, j: label_base + n * i + j), label_base)


def column_deal(spec: GridSpec, label_base: int = 0) -> Deal:
    m = spec.m
    return Deal(spec, _grid(m, spec.n, lambda i, j: label_base + i + m * j), label_base)


def diagonal_deal(spec: GridSpec) -> Deal:
    """Deal down-and-right with wraparound, starting at the top-left corner."""
    m, n = spec.m, spec.n
    if gcd(m, n) != 1:
        raise NonCoprimeDimensions(f"diagonal deal needs gcd(m, n) = 1, got gcd({m}, {n}) = {gcd(m, n)}")
    grid = [[0] * n for _ in range(m)]
    i = j = 0
    for card in range(m * n):
        grid[i][j] = card
        i = (i + 1) % m
        j = (j + 1) % n
    return Deal(spec, tuple(map(tuple, grid)))


def crt_card(i: int, j: int, m: int, n: int) -> int:
    """The unique ``t`` in ``range(m*n)`` with ``t = i (mod m)`` and ``t = j (mod n)``."""
    # t = i + m*k with m*k = j - i (mod n)
    k = (j - i) * pow(m, -1, n) % n if n > 1 else 0
    return i + m * k


def diagonal_deal_by_residues(spec: GridSpec) -> Deal:
    m, n = spec.m, spec.n
    if gcd(m, n) != 1:
        raise NonCoprimeDimensions(f"gcd({m}, {n}) = {gcd(m, n)}")
    return Deal(spec, _grid(m, n, lambda i, j: crt_card(i, j, m, n)))


def _supplement_spec(n: int) -> GridSpec:
    if n < 3 or n % 2 == 0:
        raise EvenOrSmallModulus(f"supplement deals need an odd modulus >= 3, got {n}")
    return GridSpec(2, (n - 1) // 2)


def supplement_row_deal(n: int) -> Deal:
    return row_deal(_supplement_spec(n), label_base=1)


def supplement_column_deal(n: int) -> Deal:
    return column_deal(_supplement_spec(n), label_base=1)


def zigzag_deal(n: int) -> Deal:
    """Start bottom-left, then alternate "up" and "down and to the right"."""
    spec = _supplement_spec(n)
    grid = [[0] * spec.n for _ in range(2)]
    i, j = 1, 0
    for card in range(1, n):
        grid[i][j] = card
        if i == 1:
            i = 0
        else:
            i, j = 1, j + 1
    return Deal(spec, tuple(map(tuple, grid)), label_base=1)


def swap_rows(deal: Deal) -> Deal:
    """Swap the two entries of every column of a two-row deal."""
    if deal.spec.m != 2:
        raise DealMismatch("row swap is defined for two-row deals only")
    return Deal(deal.spec, (deal.cells[1], deal.cells[0]), deal.label_base)


def reverse_columns(deal: Deal) -> Deal:
    return Deal(deal.spec, tuple(row[::-1] for row in deal.cells), deal.label_base)


def modified_zigzag_deal(n: int) -> Deal:
    """Reverse the column order of the row deal, then swap within each column.

    Equivalently ``cell = n - row_cell``. The literal walk from the lower
    right corner does not produce the negation map, so it is not used.
    """
    spec = _supplement_spec(n)
    row = supplement_row_deal(n)
    return Deal(spec, tuple(tuple(n - v for v in r) for r in row.cells), label_base=1)


def make_deal(kind: DealKind | str, m: int | None = None, n: int | None = None, modulus: int | None = None) -> Deal:
    """Build any deal by kind.

    Row and column deals use ``m x n`` unless ``modulus`` is given, in which
    case they are the ``2 x (modulus-1)/2`` supplement versions.
    """
    kind = DealKind(kind)
    if kind in (DealKind.ZIGZAG, DealKind.MODIFIED_ZIGZAG) or (modulus is not None and kind != DealKind.DIAGONAL):
        if modulus is None:
            raise EvenOrSmallModulus(f"{kind.value} deal needs a modulus")
        return {
            DealKind.ROW: supplement_row_deal,
            DealKind.COLUMN: supplement_column_deal,
            DealKind.ZIGZAG: zigzag_deal,
            DealKind.MODIFIED_ZIGZAG: modified_zigzag_deal,
        }[kind](modulus)
    if m is None or n is None:
        raise ValueError(f"{kind.value} deal needs both m and n")
    spec = GridSpec(m, n)
    if kind == DealKind.ROW:
        return row_deal(spec)
    if kind == DealKind.COLUMN:
        return column_deal(spec)
    return diagonal_deal(spec)


def deal_permutation(src: Deal, dst: Deal) -> Permutation:
    if src.spec != dst.spec:
        raise DealMismatch(f"grid shapes differ: {src.spec} vs {dst.spec}")
    if src.label_base != dst.label_base:
        raise DealMismatch("deals use different label ranges")
    base = src.label_base
    image = [0] * src.spec.cells
    for row_s, row_d in zip(src.cells, dst.cells):
        for a, b in zip(row_s, row_d):
            image[a - base] = b - base
    return Permutation._trusted(tuple(image))


def gamma(spec: GridSpec) -> Permutation:
    return deal_permutation(row_deal(spec), column_deal(spec))


def alpha(spec: GridSpec) -> Permutation:
    return deal_permutation(row_deal(spec), diagonal_deal(spec))


def beta(spec: GridSpec) -> Permutation:
    return deal_permutation(diagonal_deal(spec), column_deal(spec))


def _choose2_odd(k: int) -> bool:
    return k % 4 in (2, 3)


def gamma_sign_formula(spec: GridSpec) -> Sign:
    """``(-1) ** (C(m,2) * C(n,2))`` from parities alone."""
    return -1 if _choose2_odd(spec.m) and _choose2_odd(spec.n) else 1


def gamma_sign_odd_formula(spec: GridSpec) -> Sign:
    """``(-1) ** ((m-1)(n-1)/4)`` for odd ``m`` and ``n``."""
    m, n = spec.m, spec.n
    if m % 2 == 0 or n % 2 == 0:
        raise EvenDimension(f"both dimensions must be odd, got {m}x{n}")
    return -1 if ((m - 1) // 2) * ((n - 1) // 2) & 1 else 1


def gamma_inversion_pairs(spec: GridSpec) -> int:
    """Count ordered position pairs where the second lies strictly below-left of the first."""
    m, n = spec.m, spec.n
    return sum((m - 1 - i) * j for i in range(m) for j in range(n))


def below_left_pairs(spec: GridSpec) -> set[tuple[int, int]]:
    """Row-deal card pairs ``(x, y)`` with ``y`` strictly below and left of ``x``."""
    m, n = spec.m, spec.n
    return {
        (n * i + j, n * i2 + j2)
        for i in range(m)
        for j in range(n)
        for i2 in range(i + 1, m)
        for j2 in range(j)
    }
