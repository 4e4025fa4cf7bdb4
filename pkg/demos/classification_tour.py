"""Classification boxes of the built-in data and the box counts."""
from xbialg import DECLARED_BOXES, EXAMPLES, classify, enumerate_boxes, example, pi_dual

BOXES = ("mu_l", "mu_r", "sigma", "rho", "nu_l", "nu_r")


def main():
    print("boxes (all, cocycle free, strong plus dual types):", enumerate_boxes())
    for name in EXAMPLES:
        d = example(name)
        box = classify(d)
        nontrivial = [b for b, on in zip(BOXES, box.flags) if on] or ["none"]
        print(f"{name:9s} {box}  nontrivial: {', '.join(nontrivial)}")
        assert str(box) == DECLARED_BOXES[name]
        failing = box.cross_check.failures()
        print(f"          projection-side criteria agree: {not failing}")
        print(f"          pi dual box: {classify(pi_dual(d), cross_validate=False)}")


if __name__ == "__main__":
    main()
