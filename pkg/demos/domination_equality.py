"""Find every graph where the domination bound is exactly tight.

For a graph with domination number gamma the spectral radius never exceeds
n - gamma, at any alpha below 1. Equality is rare and has a complete
description: cliques padded with isolated vertices, and complements of a
perfect matching padded with isolated vertices. This sweep confirms that
every tight graph on up to 6 vertices lands in one of those two families.
"""
from aspectral import all_graphs, domination_bound, domination_number, graph6_encode

ALPHA = 0.4


def main():
    for n in range(2, 7):
        tight = []
        total = 0
        for g in all_graphs(n):
            total += 1
            row = domination_bound(g, ALPHA)
            if row.applicable and row.equality_class is not None:
                tight.append((g, domination_number(g), row.equality_class))
        print(f"n={n}: {len(tight)} of {total} graphs attain rho = n - gamma")
        for g, gamma, family in tight:
            print(f"  {graph6_encode(g):8s} gamma={gamma}  {family}")
        unmatched = [t for t in tight if t[2] == "unmatched"]
        if not unmatched:
            print("  every tight graph matches a known family\n")
        else:
            print(f"  {len(unmatched)} tight graphs outside the known families\n")


if __name__ == "__main__":
    main()
