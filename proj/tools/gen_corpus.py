#!/usr/bin/env python3
"""Regenerates the group files under data/corpus/."""

import itertools
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "corpus"


def fmt(perm):
    """Canonical cycle notation for a 1-based image dict."""
    seen, cycles = set(), []
    for x in sorted(perm):
        if x in seen or perm[x] == x:
            continue
        cyc, y = [], x
        while y not in seen:
            seen.add(y)
            cyc.append(y)
            y = perm[y]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def from_cycles(n, cycles):
    perm = {x: x for x in range(1, n + 1)}
    for cyc in cycles:
        for i, x in enumerate(cyc):
            perm[x] = cyc[(i + 1) % len(cyc)]
    return perm


def write(name, degree, comments, gens):
    lines = [f"degree {degree}"] + [f"# {c}" for c in comments] + [fmt(g) for g in gens]
    (OUT / f"{name}.grp").write_text("\n".join(lines) + "\n")


def induced(m, l, gens):
    subsets = list(itertools.combinations(range(1, m + 1), l))
    index = {s: i + 1 for i, s in enumerate(subsets)}
    out = []
    for g in gens:
        out.append({index[s]: index[tuple(sorted(g[x] for x in s))] for s in subsets})
    return len(subsets), out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for n in range(2, 13):
        write(f"cyclic_{n}", n, [f"cyclic group C_{n}, regular action"],
              [from_cycles(n, [list(range(1, n + 1))])])
    for n in range(3, 13):
        refl = [[i, n + 2 - i] for i in range(2, n // 2 + 2) if i < n + 2 - i]
        write(f"dihedral_{n}", n, [f"dihedral group of order {2 * n} on {n} points"],
              [from_cycles(n, [list(range(1, n + 1))]), from_cycles(n, refl)])
    for n in range(2, 9):
        write(f"symmetric_{n}", n, [f"symmetric group S_{n}, natural action"],
              [from_cycles(n, [[1, 2]]), from_cycles(n, [list(range(1, n + 1))])])
    for n in range(3, 9):
        long_cycle = list(range(1, n + 1)) if n % 2 else list(range(2, n + 1))
        gens = [from_cycles(n, [[1, 2, 3]])]
        if n > 3:
            gens.append(from_cycles(n, [long_cycle]))
        write(f"alternating_{n}", n, [f"alternating group A_{n}, natural action"], gens)
    for l, ms in ((2, range(4, 8)), (3, range(5, 8))):
        for m in ms:
            sym = [from_cycles(m, [[1, 2]]), from_cycles(m, [list(range(1, m + 1))])]
            degree, gens = induced(m, l, sym)
            write(f"symmetric_{m}_on_{l}sets", degree,
                  [f"S_{m} acting on the {l}-subsets of {{1..{m}}} in lexicographic order"],
                  gens)
    write("mathieu_11", 11,
          ["Mathieu group M11 on 11 points",
           "standard generators from the ATLAS of Finite Group Representations"],
          [from_cycles(11, [[2, 10], [4, 11], [5, 7], [8, 9]]),
           from_cycles(11, [[1, 4, 3, 8], [2, 5, 6, 9]])])
    write("mathieu_12", 12,
          ["Mathieu group M12 on 12 points",
           "standard generators from the ATLAS of Finite Group Representations"],
          [from_cycles(12, [[1, 4], [3, 10], [5, 11], [6, 12]]),
           from_cycles(12, [[1, 8, 9], [2, 3, 4], [5, 12, 11], [6, 10, 7]])])


if __name__ == "__main__":
    main()
