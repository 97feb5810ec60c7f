"""Rebuilds the fixture corpus. Usage: python generate.py path/to/cycram"""
import itertools
import random
import subprocess
import sys
from pathlib import Path

here = Path(__file__).resolve().parent
cli = str(Path(sys.argv[1]).resolve())

samples = [
    ("bip12_a.el", "bipartite", 4, 3, 2.4, 1),
    ("bip12_b.el", "bipartite", 4, 3, 2.4, 2),
    ("bip14_c.el", "bipartite", 7, 2, 1.5, 3),
    ("g16_a.el", "graph", 4, 4, 2, 4),
    ("g24_a.el", "graph", 6, 4, 2.4, 5),
    ("g12_sparse.el", "graph", 4, 3, 0.9, 6),
]
for name, model, c1, n, c2, seed in samples:
    subprocess.run([cli, "gen", "--model", model, "--c1", str(c1), "--n", str(n), "--c2", str(c2),
                    "--seed", str(seed), "--out", name], check=True, cwd=here, stdout=subprocess.DEVNULL)


def write_graph(name, n, edges):
    lines = [str(n)] + [f"{u} {v}" for u, v in sorted(edges)]
    (here / name).write_text("\n".join(lines) + "\n")


def complete(n):
    return list(itertools.combinations(range(n), 2))


write_graph("k5.el", 5, complete(5))
write_graph("k6.el", 6, complete(6))
write_graph("c7.el", 7, [(i, i + 1) for i in range(6)] + [(0, 6)])
outer = [(i, (i + 1) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
write_graph("petersen.el", 10, [tuple(sorted(e)) for e in outer + spokes + inner])


def read_edges(name):
    rows = [l.split() for l in (here / name).read_text().splitlines() if l and not l.startswith("#")]
    return rows[0], [(int(a), int(b)) for a, b in rows[1:]]


# colorings over the same edge order as the graph file
for stem, seed in [("g24_a", 7), ("g16_a", 8)]:
    header, edges = read_edges(stem + ".el")
    rng = random.Random(seed)
    lines = [" ".join(header)] + [f"{u} {v} {rng.randint(1, 2)}" for u, v in edges]
    (here / (stem + ".col")).write_text("\n".join(lines) + "\n")
