"""The orbit-weighted inequality and what must happen when it is tight.

For a hitting set X and any footprint F, summing |F∩V|·|X∩V|/|V| over the
orbits V always reaches 1.  When the invariant cost lands exactly at
pattern-order times the plain cost, the slack disappears and three rigid
structural conditions follow; this demo verifies all of it on concrete
hosts with exact rationals.

Run with:  python3 demos/03_orbit_inequality.py
"""

from symcover import (
    check_extremal_boundary,
    check_orbit_density,
    check_orbit_pattern_containment,
    generate,
    render_human,
    verify_orbit_sum_bound,
    vertex_representativity,
)


def main() -> None:
    pattern = generate("tailed-star:3")
    host = generate("complete:5")

    print("== Orbit sums for a minimal hitting set ==")
    witness = vertex_representativity(pattern, host).witness
    report = verify_orbit_sum_bound(pattern, host, witness)
    print(f"marked {list(witness)} in complete:5")
    print(render_human(report.to_doc(), indent=1))

    print()
    print("== Slack away from the optimum ==")
    report = verify_orbit_sum_bound(generate("complete:3"),
                                    generate("complete:4"), (0, 1))
    print(f"every sum is {report.minimum}, strictly above 1")

    print()
    print("== Boundary conditions where the ratio is exact ==")
    report = check_extremal_boundary(pattern, host)
    print(render_human(report.to_doc(), indent=1))

    print()
    print("== Orbit densities of the minimal set ==")
    report = check_orbit_density(pattern, host)
    print(render_human(report.to_doc(), indent=1))

    print()
    print("== Each orbit still carries the pattern ==")
    report = check_orbit_pattern_containment(pattern, host)
    print(render_human(report.to_doc(), indent=1))

    print()
    print("== A non-extremal pair is reported as not applicable ==")
    report = check_extremal_boundary(generate("complete:3"),
                                     generate("complete:4"))
    print(f"applicable={report.applicable}")


if __name__ == "__main__":
    main()
