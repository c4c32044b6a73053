"""Tour of the weighted-adjacency spectrum on a few named graphs.

Shows the full eigenvalue list as alpha moves from the plain adjacency
matrix (alpha=0) toward the degree diagonal (alpha=1), the Perron vector
of a star, and the degenerate alpha=1 endpoint where the spectrum is just
the sorted degree sequence.
"""
import numpy as np

from aspectral import complete, cycle, path, spectrum, star


def show(name, g, alphas=(0.0, 0.3, 0.5, 0.9, 1.0)):
    print(f"{name}  (n={g.n}, m={g.m})")
    for a in alphas:
        s = spectrum(g, a)
        vals = ", ".join(f"{v:8.4f}" for v in s.eigenvalues)
        print(f"  alpha={a:4.2f}  rho={s.rho:8.5f}   [{vals}]")
    print()


def main():
    show("path P_5", path(5))
    show("cycle C_5", cycle(5))
    show("star S_5", star(5))
    show("complete K_5", complete(5))

    g = star(6)
    s = spectrum(g, 0.3)
    print("Perron vector of S_6 at alpha=0.3 (center first):")
    print("  ", np.round(s.perron, 5))
    print("  the five leaves share one entry; the center dominates")
    print()

    s = spectrum(path(5), 1.0)
    print("alpha=1 collapses to the degree diagonal:")
    print("  eigenvalues:", list(s.eigenvalues))
    print("  degrees:    ", sorted(path(5).degrees, reverse=True))


if __name__ == "__main__":
    main()
