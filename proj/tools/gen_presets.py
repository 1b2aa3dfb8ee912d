#!/usr/bin/env python3
"""Regenerate the preset configs in presets/ (run from the repository root)."""
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "presets"


def write(name, doc):
    doc = {"name": name, **doc}
    path = OUT / (name.replace(":", "_") + ".json")
    path.write_text(json.dumps(doc, indent=2) + "\n")


def h_z_z2n(n):
    # G = Z_2n acting on Z by g^i |> j = (-1)^i j, trivial left action.
    mats = [[[(-1) ** i]] for i in range(2 * n)]
    return {
        "description": f"Z_{2*n} acting on Z by sign, trivial cocycles",
        "G": {"cyclic": 2 * n},
        "F": {"free_abelian": 1},
        "actions": {"type": "linear", "matrices": mats},
        "sigma": {"type": "trivial"},
        "tau": {"type": "trivial"},
        "radius": 4,
    }


def z_poly_zp(p, radius):
    # Z_p acting on Z[x]/(x^p - 1) ~ Z^p by cyclic shift of coefficients.
    mats = []
    for k in range(p):
        m = [[1 if (i - j) % p == k else 0 for j in range(p)] for i in range(p)]
        mats.append(m)
    return {
        "description": f"Z_{p} acting on Z^{p} by cyclic shift, trivial cocycles",
        "G": {"cyclic": p},
        "F": {"free_abelian": p},
        "actions": {"type": "linear", "matrices": mats},
        "radius": radius,
    }


DRINFELD_GROUPS = {
    "Z2": {"cyclic": 2},
    "Z3": {"cyclic": 3},
    "S3": {"permutations": ["(1,2)", "(1,2,3)"], "degree": 3},
    "D4": {"permutations": ["(1,2,3,4)", "(1,3)"], "degree": 4},
    "Q8": {"permutations": ["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"], "degree": 8},
    "A4": {"permutations": ["(1,2,3)", "(1,2)(3,4)"], "degree": 4},
}


def drinfeld(group):
    return {
        "description": f"F = G = {group}, G acting on F by conjugation, trivial cocycles",
        "G": DRINFELD_GROUPS[group],
        "F": "same_as_G",
        "actions": {"type": "conjugation"},
        "radius": 0,
    }


def main():
    OUT.mkdir(exist_ok=True)
    for f in OUT.glob("*.json"):
        f.unlink()
    h = h_z_z2n(1)
    h["description"] = "Z_2 acting on Z by negation, trivial cocycles"
    write("h_z_z2", h)
    for n in (1, 2, 3, 4):
        write(f"h_z_z2n_{n}", h_z_z2n(n))
    for p, r in ((2, 4), (3, 4), (5, 2)):
        write(f"z_poly_zp_{p}", z_poly_zp(p, r))
    for g in DRINFELD_GROUPS:
        write(f"drinfeld_{g}", drinfeld(g))

    # Z_2 acting on Z by negation with tau(g, g; f) = (-1)^f.
    t = h_z_z2n(1)
    t["description"] = "Z_2 acting on Z by negation, tau(g,g;f) = (-1)^f"
    t["tau"] = {"type": "quotient_lift", "moduli": [2], "values": [{"g": 1, "h": 1, "q": 1, "value": "-1"}]}
    write("h_z_z2_tau", t)

    # Klein four-group acting trivially on Z_2 with tau(a, b; 1) = (-1)^(b_2 a_1):
    # the stabilizer cocycle at the nontrivial element is the Klein cocycle
    # beta((a,b),(c,d)) = (-1)^(b c).
    klein = [(a, b) for b in range(2) for a in range(2)]  # index = a + 2b
    vals = []
    for i, (a, b) in enumerate(klein):
        for j, (c, d) in enumerate(klein):
            if (b * c) % 2:
                vals.append({"g": i, "h": j, "f": 1, "value": "-1"})
    write("klein_twisted", {
        "description": "Z_2 x Z_2 acting trivially on Z_2, tau twisted by the Klein cocycle (-1)^(bc)",
        "G": {"abelian": [2, 2]},
        "F": {"cyclic": 2},
        "actions": {"type": "trivial"},
        "tau": {"type": "table", "values": vals},
        "radius": 0,
    })


if __name__ == "__main__":
    main()
