"""Walk the whole catalog: dimensions, isotypic shapes, rank parity.

Prints one row per entry.  The parity column shows rank(k) - rank(h);
a value outside {0, 1}, or one with the wrong parity relative to dim p,
rules out positive curvature before any metric is chosen.
"""
from homcurv import catalog_build, catalog_labels
from homcurv.isotypic import decompose
from homcurv.obstructions import rank_parity_check
from homcurv.spaces import listing_params


def main():
    header = f"{'label':<18} {'params':<12} {'dim p':>5} {'parity':>6}  components"
    print(header)
    print("-" * len(header))
    for label in catalog_labels():
        params = listing_params(label)
        space = catalog_build(label, **params)
        rp = rank_parity_check(space)
        dec = decompose(space)
        shape = " + ".join(
            f"{c.summand_dim}" + (f"x{c.multiplicity}" if c.multiplicity > 1
                                  else "")
            for c in dec.components)
        ptxt = ",".join(f"{k}={v}" for k, v in params.items()) or "-"
        mark = "" if rp.parity_consistent else "  <-- inconsistent"
        print(f"{label:<18} {ptxt:<12} {space.dim_p:>5} {rp.difference:>6}"
              f"  {shape}{mark}")


if __name__ == "__main__":
    main()
