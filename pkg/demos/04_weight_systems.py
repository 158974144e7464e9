"""Neighborhood deficiencies, orbit expansion, and invariant weight systems.

Three quantitative tools sit behind the cover bounds: the deficiency
profile p_v of every neighborhood, the expansion guarantee between two
orbits joined by an edge, and rational weight layouts around an adjacent
pair whose translates form an invariant system of inequalities.

Run with:  python3 demos/04_weight_systems.py
"""

from symcover import (
    Graph,
    build_pair_weight,
    generate,
    neighborhood_profile,
    render_human,
    verify_orbit_expansion,
    verify_weighted_system,
    vertex_representativity,
    weight_orbit,
    weighted_symmetrize,
)


def circulant(n: int, steps) -> Graph:
    edges = {(min(v, (v + s) % n), max(v, (v + s) % n))
             for v in range(n) for s in steps}
    return Graph(n, sorted(edges))


def main() -> None:
    print("== Neighborhood deficiency p_v ==")
    for name, g in (("complete:5", generate("complete:5")),
                    ("cocktail:6", generate("cocktail:6")),
                    ("cycle:8 squared", circulant(8, (1, 2)))):
        profile = neighborhood_profile(g)
        ps = sorted({v.deficiency for v in profile.vertices})
        print(f"{name:18s} degree={profile.regular_degree} p values={ps} "
              f"dense hypothesis met: {profile.hypothesis_met}")
    print("no regular graph keeps every p_v in [1, k/2); the search demo")
    print("confirms that exhaustively")

    print()
    print("== Expansion between orbits ==")
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    report = verify_orbit_expansion(star, (0,), (1, 2, 3), (0,))
    print(render_human(report.to_doc(), indent=1))

    print()
    print("== Invariant replacement for a marked set ==")
    host = generate("union:complete:5+complete:5")
    print("one marked vertex cannot be symmetrized within budget 5:",
          weighted_symmetrize(host, (0,), 5))
    print("two, one per component, can:",
          weighted_symmetrize(host, (0, 5), 5))

    print()
    print("== Pair weight around an edge of a 9-regular circulant ==")
    host = circulant(14, (1, 2, 3, 4, 7))
    fn = build_pair_weight(host, 0, 4, 7)
    print(render_human(fn.to_doc(), indent=1))
    print(f"support size {len(fn.support)}, total {fn.total}")

    print()
    print("== Every minimum hitting set beats the translated system ==")
    host = circulant(8, (2, 3, 4))
    d = 5
    fn = build_pair_weight(host, 0, 4, d)
    system = weight_orbit(host, fn)
    pattern = generate(f"tailed-star:{d}")
    sol = vertex_representativity(pattern, host)
    report = verify_weighted_system(sol.witness, system)
    print(f"host 5-regular on 8 vertices, {len(system)} translates, "
          f"marked {list(sol.witness)}")
    print(f"smallest accumulated weight {min(report.sums)}, "
          f"holds: {report.holds}")


if __name__ == "__main__":
    main()
