#!/usr/bin/env python3
"""Writes the fixture graphs under data/corpus/ (named graphs + seeded random connected graphs)."""
import pathlib
import random

NAMED = {
    "k1": (1, []),
    "k2": (2, [(0, 1)]),
    "p3": (3, [(0, 1), (1, 2)]),
    "p4": (4, [(0, 1), (1, 2), (2, 3)]),
    "c4": (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "c5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    "k3": (3, [(0, 1), (1, 2), (0, 2)]),
    "k4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "k4_minus_edge": (4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "bull": (5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
}


def random_connected(rng, n):
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        u, v = verts[i], verts[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    p = rng.choice([0.2, 0.4, 0.6])
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return n, sorted(edges)


def write(path, name, n, edges):
    lines = [f"# {name}", str(n)] + [f"{u} {v}" for u, v in edges]
    path.write_text("\n".join(lines) + "\n")


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "corpus"
    out.mkdir(parents=True, exist_ok=True)
    for name, (n, edges) in NAMED.items():
        write(out / f"{name}.txt", name, n, edges)
    rng = random.Random(20240611)
    for i in range(20):
        n, edges = random_connected(rng, rng.randint(3, 6))
        write(out / f"random_{i:02d}.txt", f"random connected graph {i}", n, edges)


if __name__ == "__main__":
    main()
