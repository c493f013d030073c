"""Finite groups as verified multiplication tables."""

from __future__ import annotations

from itertools import permutations

from .errors import InvalidGroup


class GroupTable:
    """A finite group given by table[i][j] = index of the product g_i g_j.

    The table is fully verified on construction: closure, associativity,
    a two-sided identity and two-sided inverses.
    """

    __slots__ = ("order", "table", "names", "identity", "inv")

    def __init__(self, table, names=None):
        n = len(table)
        if any(len(row) != n for row in table):
            raise InvalidGroup("multiplication table is not square")
        for row in table:
            for v in row:
                if not isinstance(v, int) or not (0 <= v < n):
                    raise InvalidGroup("table entry out of range")
        ident = None
        for e in range(n):
            if all(table[e][j] == j and table[j][e] == j for j in range(n)):
                ident = e
                break
        if ident is None:
            raise InvalidGroup("no two-sided identity")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if table[table[i][j]][k] != table[i][table[j][k]]:
                        raise InvalidGroup(f"not associative at ({i}, {j}, {k})")
        inv = [None] * n
        for i in range(n):
            for j in range(n):
                if table[i][j] == ident and table[j][i] == ident:
                    inv[i] = j
                    break
            if inv[i] is None:
                raise InvalidGroup(f"element {i} has no inverse")
        self.order = n
        self.table = [list(row) for row in table]
        self.names = list(names) if names is not None else [f"g{i}" for i in range(n)]
        if len(self.names) != n:
            raise InvalidGroup("one name per element required")
        self.identity = ident
        self.inv = inv

    def mul(self, i, j):
        return self.table[i][j]

    def is_subgroup(self, indices):
        s = set(indices)
        if self.identity not in s:
            return False
        return all(self.table[i][self.inv[j]] in s for i in s for j in s)

    def is_normal(self, indices):
        if not self.is_subgroup(indices):
            return False
        s = set(indices)
        return all(
            self.table[self.table[g][h]][self.inv[g]] in s
            for g in range(self.order)
            for h in s
        )

    def left_cosets(self, indices):
        """Partition into left cosets g*S, each sorted, in order of first reps."""
        s = sorted(set(indices))
        seen = set()
        cosets = []
        for g in range(self.order):
            if g in seen:
                continue
            coset = sorted(self.table[g][h] for h in s)
            seen.update(coset)
            cosets.append(coset)
        return cosets

    def __repr__(self):
        return f"GroupTable(order={self.order})"


def cyclic(n):
    if n < 1:
        raise InvalidGroup("cyclic group needs order >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupTable(table, [f"g{i}" for i in range(n)])


def symmetric(n):
    """Permutations of 0..n-1 in lexicographic order of their image tuples.

    Products compose right factor first: (s t)(x) = s(t(x)).
    """
    if n < 1:
        raise InvalidGroup("symmetric group needs n >= 1")
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(s[t[x]] for x in range(n))] for t in perms]
        for s in perms
    ]
    names = ["".join(str(x) for x in p) for p in perms]
    return GroupTable(table, names)


def from_cayley(table, names=None):
    return GroupTable(table, names)


def group_by_name(name):
    """Lookup by the short names z<n> and s<n>."""
    name = name.strip().lower()
    if name.startswith("z") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    if name.startswith("s") and name[1:].isdigit():
        return symmetric(int(name[1:]))
    raise InvalidGroup(f"unknown group name {name!r} (expected z<n> or s<n>)")
