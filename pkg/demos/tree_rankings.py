"""Rank every tree on n vertices by spectral radius.

The extremes are always the same: the path sits at the bottom, the star at
the top, and the star-with-one-edge-subdivided (the double star D_{n,1})
comes second. Within a fixed diameter class the winner is the balanced
caterpillar. Run with different n and alpha to watch the ordering persist.
"""
import argparse

from aspectral import (
    alpha_spectral_radius,
    canonical_form,
    diameter,
    diameter_tree,
    double_star,
    graph6_encode,
    path,
    star,
    trees,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--alpha", type=float, default=0.5)
    ap.add_argument("--top", type=int, default=5)
    args = ap.parse_args()
    n, a = args.n, args.alpha

    ranked = sorted(
        ((alpha_spectral_radius(t, a), t) for t in trees(n)),
        key=lambda pair: -pair[0])
    print(f"{len(ranked)} trees on {n} vertices, alpha={a}\n")

    tags = {
        canonical_form(star(n)): "<- star",
        canonical_form(double_star(n, 1)): "<- double star D_{n,1}",
        canonical_form(path(n)): "<- path",
    }
    print("top of the ranking:")
    for rho, t in ranked[:args.top]:
        tag = tags.get(canonical_form(t), "")
        print(f"  rho={rho:10.6f}  diam={diameter(t):2.0f}  {graph6_encode(t):12s} {tag}")
    print("bottom:")
    for rho, t in ranked[-2:]:
        tag = tags.get(canonical_form(t), "")
        print(f"  rho={rho:10.6f}  diam={diameter(t):2.0f}  {graph6_encode(t):12s} {tag}")

    print("\nper-diameter winners:")
    for d in range(3, n):
        pool = [(rho, t) for rho, t in ranked if diameter(t) == d]
        rho, best = pool[0]
        expected = canonical_form(diameter_tree(n, d)) == canonical_form(best)
        print(f"  d={d}: rho={rho:10.6f}  balanced caterpillar: {expected}")


if __name__ == "__main__":
    main()
