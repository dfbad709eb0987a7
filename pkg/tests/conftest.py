import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from demkit import FamilySpec, generate


def path(n):
    return generate(FamilySpec("path", (n,)))


def cycle(n):
    return generate(FamilySpec("cycle", (n,)))


def complete(n):
    return generate(FamilySpec("complete", (n,)))


def bipartite(m, n):
    return generate(FamilySpec("complete_bipartite", (m, n)))


def book(q):
    return generate(FamilySpec("book", (q,)))


def random_connected(n, num, den, seed):
    return generate(FamilySpec("random_connected", (n, num, den), seed))


def random_tree(n, seed):
    return generate(FamilySpec("random_tree", (n,), seed))
