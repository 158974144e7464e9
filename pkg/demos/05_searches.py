"""Exhaustive scans over small graphs.

Three scans close the desk-scale side of the theory: no regular graph up
to ten vertices has a dense neighborhood profile, the only connected
vertex-transitive hosts paying the full symmetry price for short tailed
stars are complete and cocktail graphs, and every connected extremal host
keeps its plain cost at one.

Run with:  python3 demos/05_searches.py
"""

from symcover import (
    classify_vt_extremal,
    find_dense_counterexample,
    parse_graph6,
    scan_connected_extremal,
)


def main() -> None:
    print("== Dense neighborhood hunt, degrees 3..5, n <= 10 ==")
    report = find_dense_counterexample(10, (3, 4, 5))
    print(f"candidates: {report.candidate_count}")
    for note in report.notes:
        print(f"  {note}")
    print(f"counterexamples: {list(report.counterexamples) or 'none'}")

    print()
    print("== Vertex-transitive extremal hosts, tail 3 then 4, n <= 8 ==")
    for d in (3, 4):
        report = classify_vt_extremal(d, 8)
        print(f"tail {d}: {report.notes[0]}")
        for g6 in report.classification:
            g = parse_graph6(g6)
            print(f"  {g6} n={g.n} degree={g.degree(0)}")

    print()
    print("== Connected hosts with the exact ratio, tail 3, n <= 7 ==")
    report = scan_connected_extremal(3, 7)
    print(f"candidates: {report.candidate_count}")
    hits = [r for r in report.records if r[1].startswith("extremal")]
    for g6, verdict in hits:
        print(f"  {g6} {verdict}")
    print(f"hosts needing more than one plain vertex: "
          f"{list(report.counterexamples) or 'none'}")


if __name__ == "__main__":
    main()
