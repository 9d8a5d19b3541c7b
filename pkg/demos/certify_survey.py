"""Survey the identity metric across the catalog with the multistart search.

The positively curved entries come out positive; the circle quotients
and the diagonal Stiefel fixture do not.  Note the disclaimer: a
"positive" verdict is an exhaustive-looking numerical search, not a
proof.
"""
from homcurv import catalog_build
from homcurv.certify import DISCLAIMER, certify
from homcurv.metrics import normal_metric
from homcurv.spaces import listing_params

SURVEY = [
    "sphere-so", "cpn", "berger7", "wallach6",
    "aloffwallach-su3", "stiefel", "s3s3circle",
]


def main():
    for label in SURVEY:
        space = catalog_build(label, **listing_params(label))
        r = certify(space, normal_metric(space), seed=0, starts=32)
        print(f"{label:<18} verdict {r.verdict:<22} "
              f"min value {r.min_sectional:+.4e}")
    print(f"\nnote: {DISCLAIMER}")


if __name__ == "__main__":
    main()
