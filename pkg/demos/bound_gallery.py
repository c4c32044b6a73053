"""Print the full bound table for one graph at one alpha.

Every closed-form bound the package knows is evaluated against the true
spectral radius; inapplicable rows say why they were skipped. Try a star,
a cycle, or any graph6 string.
"""
import argparse

from aspectral import evaluate_all, family_from_spec, graph6_decode


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="Dna:8,2",
                    help="family spec, e.g. Sn:6, Cn:7, Snpe:6, Dna:8,2")
    ap.add_argument("--graph", help="graph6 string instead of a family")
    ap.add_argument("--alpha", type=float, default=0.3)
    args = ap.parse_args()

    g = graph6_decode(args.graph) if args.graph else family_from_spec(args.family)
    rows = evaluate_all(g, args.alpha)

    print(f"n={g.n} m={g.m} alpha={args.alpha}")
    header = f"{'bound':22s} {'dir':5s} {'value':>12s} {'target':>12s} {'slack':>12s}  note"
    print(header)
    print("-" * len(header))
    for r in rows:
        if not r.applicable:
            print(f"{r.bound_id:22s} {r.direction:5s} {'-':>12s} {'-':>12s} {'-':>12s}  skipped: {r.reason}")
            continue
        note = ""
        if r.equality_class:
            note = f"tight ({r.equality_class})"
        elif r.strict:
            note = "strict"
        print(f"{r.bound_id:22s} {r.direction:5s} {r.value:12.6f} "
              f"{r.target:12.6f} {r.slack:12.3e}  {note}")


if __name__ == "__main__":
    main()
