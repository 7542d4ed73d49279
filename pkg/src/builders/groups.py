"""
Finite groups as multiplication tables, with character data where known.
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from src.utils.error_handling import InvalidTable


logger = logging.getLogger(__name__)

# Irreducible characters of S_3 and S_4 by cycle type.
S3_CLASSES = ((1, 1, 1), (2, 1), (3,))
S3_CHARACTERS = (
    ("trivial", (1, 1, 1)),
    ("sign", (1, -1, 1)),
    ("standard", (2, 0, -1)),
)
S4_CLASSES = ((1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,))
S4_CHARACTERS = (
    ("trivial", (1, 1, 1, 1, 1)),
    ("sign", (1, -1, 1, 1, -1)),
    ("two-dimensional", (2, 0, 2, -1, 0)),
    ("standard", (3, 1, -1, 0, -1)),
    ("standard x sign", (3, -1, -1, 0, 1)),
)
CHARACTER_TABLES = {
    1: (((1,),), (("trivial", (1,)),)),
    2: (((1, 1), (2,)), (("trivial", (1, 1)), ("sign", (1, -1)))),
    3: (S3_CLASSES, S3_CHARACTERS),
    4: (S4_CLASSES, S4_CHARACTERS),
}


@dataclass(frozen=True)
class GroupTable:
    """
    A finite group on elements 0..n-1.

    table[a][b] is the index of ab. characters holds integer-valued
    irreducible characters, one value per element, when shipped.
    elements holds permutation tuples for symmetric groups.
    """
    name: str
    labels: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    identity: int
    inverses: Tuple[int, ...]
    characters: Optional[Tuple[Tuple[str, Tuple[int, ...]], ...]] = None
    cyclic_factors: Tuple[int, ...] = ()
    elements: Tuple = ()

    @property
    def order(self) -> int:
        return len(self.table)

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element_order(self, a: int) -> int:
        n, current = 1, a
        while current != self.identity:
            current = self.table[current][a]
            n += 1
        return n

    def exponent(self) -> int:
        result = 1
        for a in range(self.order):
            k = self.element_order(a)
            result = result * k // gcd(result, k)
        return result

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.order) for b in range(a + 1, self.order))

    def generated_subgroup(self, generators: Sequence[int]) -> List[int]:
        """Elements of <generators>, identity first."""
        found = [self.identity]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            added = []
            for x in frontier:
                for g in generators:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        found.append(y)
                        added.append(y)
            frontier = added
        return found

    def generators(self) -> List[int]:
        """A small generating set chosen greedily by index."""
        chosen: List[int] = []
        span = {self.identity}
        for a in range(self.order):
            if a not in span:
                chosen.append(a)
                span = set(self.generated_subgroup(chosen))
        return chosen


def make_group_table(name: str, labels: Sequence[str], table: Sequence[Sequence[int]],
                     **extra) -> GroupTable:
    """
    Validate a multiplication table and derive identity and inverses.

    Raises:
        InvalidTable: when the table is not a group law
    """
    n = len(table)
    if len(labels) != n or any(len(row) != n for row in table):
        raise InvalidTable(f"{name}: table is not {n}x{n}")
    if any(not 0 <= x < n for row in table for x in row):
        raise InvalidTable(f"{name}: entry out of range")
    identity = next((e for e in range(n) if all(table[e][a] == a == table[a][e] for a in range(n))), None)
    if identity is None:
        raise InvalidTable(f"{name}: no identity element")
    inverses = []
    for a in range(n):
        inverse = next((b for b in range(n) if table[a][b] == identity == table[b][a]), None)
        if inverse is None:
            raise InvalidTable(f"{name}: element {labels[a]} has no inverse")
        inverses.append(inverse)
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise InvalidTable(f"{name}: associativity fails at ({labels[a]}, {labels[b]}, {labels[c]})")
    return GroupTable(name, tuple(labels), tuple(tuple(row) for row in table), identity,
                      tuple(inverses), **extra)


def _power_label(symbol: str, k: int) -> str:
    if k == 0:
        return "1"
    return symbol if k == 1 else f"{symbol}^{k}"


def cyclic_group_table(n: int, symbol: str = "x") -> GroupTable:
    """Z_n = <x>, element k is x^k."""
    if n < 1:
        raise InvalidTable(f"cyclic group of order {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = [_power_label(symbol, k) for k in range(n)]
    return make_group_table(f"Z{n}", labels, table, cyclic_factors=(n,))


def product_group_table(a: GroupTable, b: GroupTable) -> GroupTable:
    """A x B with (i, j) at index i * |B| + j."""
    nb = b.order
    table = [[a.table[i][k] * nb + b.table[j][l] for k in range(a.order) for l in range(nb)]
             for i in range(a.order) for j in range(nb)]
    labels = [f"({x},{y})" for x in a.labels for y in b.labels]
    factors = a.cyclic_factors + b.cyclic_factors if a.cyclic_factors and b.cyclic_factors else ()
    return make_group_table(f"{a.name}x{b.name}", labels, table, cyclic_factors=factors)


def dihedral_group_table(n: int) -> GroupTable:
    """
    The dihedral group of order 2n: r^a s^f at index f * n + a, with
    (r^a s^f)(r^b s^g) = r^(a + (-1)^f b) s^(f + g).
    """
    if n < 1:
        raise InvalidTable(f"dihedral group of order {2 * n}")
    table = []
    for f in range(2):
        for a in range(n):
            row = []
            for g in range(2):
                for b in range(n):
                    c = (a + (b if f == 0 else -b)) % n
                    row.append(((f + g) % 2) * n + c)
            table.append(row)
    labels = []
    for f in range(2):
        for a in range(n):
            rotation = _power_label("r", a)
            if f == 0:
                labels.append(rotation)
            else:
                labels.append("s" if a == 0 else f"{rotation}s")
    return make_group_table(f"D{n}", labels, table)


def cycle_notation(perm: Sequence[int]) -> str:
    """Cycle notation on 1..n, "1" for the identity."""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(str(x + 1))
            x = perm[x]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "1"


def cycle_type(perm: Sequence[int]) -> Tuple[int, ...]:
    seen = set()
    lengths = []
    for start in range(len(perm)):
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def symmetric_group_table(n: int) -> GroupTable:
    """
    S_n for n <= 4 with its integer character table.

    Permutations are listed in lexicographic order (identity first) and
    compose as (st)(i) = s(t(i)). Labels use cycle notation on 1..n.
    """
    if n not in CHARACTER_TABLES:
        raise InvalidTable(f"symmetric groups are shipped for n <= 4, got {n}")
    perms = list(permutations(range(n)))
    index: Dict[Tuple[int, ...], int] = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[i]] for i in range(n))] for t in perms] for s in perms]
    classes, characters = CHARACTER_TABLES[n]
    position = {c: k for k, c in enumerate(classes)}
    per_element = tuple(
        (name, tuple(values[position[cycle_type(p)]] for p in perms))
        for name, values in characters
    )
    labels = [cycle_notation(p) for p in perms]
    return make_group_table(f"S{n}", labels, table, characters=per_element, elements=tuple(perms))


def find_element(t: GroupTable, label: str) -> int:
    """Index of the element with a given label."""
    try:
        return t.labels.index(label)
    except ValueError:
        raise InvalidTable(f"{t.name} has no element {label!r}")


def group_from_name(name: str) -> GroupTable:
    """
    Parse names such as "Z4", "D4", "S3" or products "Z2xZ2".

    Raises:
        InvalidTable: on an unknown name
    """
    factors = []
    for part in name.split("x"):
        part = part.strip()
        family, digits = part[:1].upper(), part[1:]
        if not digits.isdigit():
            raise InvalidTable(f"unknown group {part!r} in {name!r}")
        n = int(digits)
        if family == "Z":
            factors.append(cyclic_group_table(n))
        elif family == "D":
            factors.append(dihedral_group_table(n))
        elif family == "S":
            factors.append(symmetric_group_table(n))
        else:
            raise InvalidTable(f"unknown group family {family!r} in {name!r}")
    table = factors[0]
    for factor in factors[1:]:
        table = product_group_table(table, factor)
    return table
