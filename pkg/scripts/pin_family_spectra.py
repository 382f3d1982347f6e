"""Recompute the missing cycle lengths of every family constructor.

Uses the exhaustive subset-DP oracle, so the output can be pasted as
regression data. Also checks the degree hypothesis at each size.
"""
from pancyclic.families import FAMILY_NAMES, build_family, check_hypothesis
from pancyclic.spectrum import spectrum_oracle


def main(ms=(2, 3, 4, 5)):
    for name in FAMILY_NAMES:
        for orientation in ("in", "out") if name == "h_mm1" else ("in",):
            for m in ms:
                d = build_family(name, m, orientation=orientation)
                tag = f"{name}({orientation})" if name == "h_mm1" else name
                hyp = "ok" if check_hypothesis(d).ok else ",".join(check_hypothesis(d).failures())
                print(f"{tag:18} m={m} p={d.p:2} missing={spectrum_oracle(d).missing()} hypothesis={hyp}")


if __name__ == "__main__":
    main()
