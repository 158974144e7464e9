"""Plain versus automorphism-invariant hitting sets of pattern copies.

A footprint is the vertex set of one subgraph copy of a pattern inside a
host.  The plain cost is the smallest vertex set meeting every footprint;
the invariant cost restricts the choice to unions of automorphism orbits.
Symmetry can multiply the price by up to the pattern order, and this demo
walks the boundary cases.

Run with:  python3 demos/02_representativity.py
"""

from symcover import (
    extremality_report,
    footprints_of,
    generate,
    render_human,
)


def show(pattern_spec: str, host_spec: str) -> None:
    pattern = generate(pattern_spec)
    host = generate(host_spec)
    family = footprints_of(pattern, host)
    report = extremality_report(pattern, host)
    print(f"pattern {pattern_spec} in host {host_spec}: "
          f"{len(family)} footprints")
    print(render_human(report.to_doc(), indent=1))
    print()


def main() -> None:
    print("== The expensive direction ==")
    # one marked vertex hits every copy, but any invariant choice must
    # swallow the whole host
    show("tailed-star:3", "complete:5")

    print("== No symmetry penalty ==")
    # a rigid host has singleton orbits, so invariance costs nothing
    show("tailed-star:3", "tailed-star:3")

    print("== Strictly between the extremes ==")
    show("complete:3", "complete:4")

    print("== Two identical components double everything ==")
    show("tailed-star:3", "union:complete:5+complete:5")


if __name__ == "__main__":
    main()
