"""Three edge surgeries and the direction they push the spectral radius.

Moving neighbors onto a vertex with a larger Perron entry raises rho.
Swapping two independent edges, when the Perron entries line up the right
way, also raises it. Rebalancing a pair of pendant paths toward equal
lengths raises it too, so sliding toward imbalance lowers it. Each section
below performs the surgery and prints rho before and after.
"""
from aspectral import (
    PendantSpec,
    alpha_spectral_radius,
    build_graph,
    complete,
    double_star,
    graph6_encode,
    move_neighbors,
    pendant_pair,
    perron_vector,
    two_edge_swap,
)

ALPHA = 0.3


def rho(g):
    return alpha_spectral_radius(g, ALPHA)


def first_gated_swap(g):
    """First pair of independent edges whose Perron entries clear the gate."""
    x = perron_vector(g, ALPHA)
    edges = g.edges
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if set(e) & set(f):
                continue
            for u1, u2 in (e, (e[1], e[0])):
                for v1, v2 in (f, (f[1], f[0])):
                    if g.has_edge(u1, v2) or g.has_edge(v1, u2):
                        continue
                    if x[u1] > x[v1] + 1e-10 and x[v2] > x[u2] + 1e-10:
                        return u1, u2, v1, v2
    return None


def main():
    print(f"all surgeries at alpha = {ALPHA}\n")

    print("1. neighbor moves: double star D(8,3) -> D(8,2) -> D(8,1) -> star")
    g = double_star(8, 3)
    print(f"   start {graph6_encode(g):8s} rho={rho(g):.6f}")
    # centers are 0 and 1; each move drains one leaf from center 1 to center 0
    for leaf in (5, 6, 7):
        g = move_neighbors(g, 1, 0, {leaf})
        print(f"   move leaf {leaf}: {graph6_encode(g):8s} rho={rho(g):.6f}")
    print("   rho climbs at every step; the star is the ceiling for trees\n")

    print("2. gated two-edge swap on a triangle with a pendant star")
    g = build_graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6)])
    found = first_gated_swap(g)
    if found is None:
        print("   no gated swap exists on this graph")
    else:
        u1, u2, v1, v2 = found
        h = two_edge_swap(g, u1, u2, v1, v2)
        print(f"   drop {u1}-{u2} and {v1}-{v2}, add {u1}-{v2} and {v1}-{u2}")
        print(f"   before {graph6_encode(g)} rho={rho(g):.6f}")
        print(f"   after  {graph6_encode(h)} rho={rho(h):.6f}")
    print()

    print("3. pendant path rebalancing on K3, six extra vertices at one corner")
    for p in range(3, 7):
        q = 6 - p
        g = pendant_pair(PendantSpec(base=complete(3), u=0, p=p, q=q))
        print(f"   (p,q)=({p},{q}): rho={rho(g):.9f}")
    print("   the balanced split (3,3) wins; rho drops as the pair unbalances")


if __name__ == "__main__":
    main()
