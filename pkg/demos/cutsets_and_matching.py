"""Cut-sets of the word tree and degree-bounded matchability.

Shows the threshold cut-set construction on rho = (1/2, 1/4), then probes
the matchable condition between an equivalent pair of systems at a range
of exponential thresholds.
"""
from fractions import Fraction

from froblip import ExpThreshold, build_system, cut_set, matchable_search


def main():
    s = build_system(["1/2", "1/4"])
    for t in (Fraction(1, 4), Fraction(1, 16), Fraction(1, 64)):
        cs = cut_set(s, t)
        words = ["".join(map(str, w)) for w in cs.words]
        print(f"cut-set of (1/2, 1/4) at t = {t}: {words}")
    print()

    a = build_system(["1/2", "1/2"])
    b = build_system(["1/4", "1/4", "1/4", "1/4"])
    print("matchable search, (1/2,1/2) vs (1/4,1/4,1/4,1/4):")
    for k in range(3, 13):
        rep = matchable_search(a, b, ExpThreshold(Fraction(k)))
        wit = f", witness pairs = {len(rep.witness)}" if rep.witness else ""
        print(f"  t = e^-{k}: feasible at M0 = {rep.m0}{wit}")


if __name__ == "__main__":
    main()
