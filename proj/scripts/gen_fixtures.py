#!/usr/bin/env python3
"""Author data/fixtures.json: the named families with explicit monodromy.

Named generators are realized inside the catalog group by a deterministic
search for elements satisfying the stated relations and generating the
group; groups given by explicit permutations use them verbatim.
"""
import itertools
import json
import re
import sys

from gen_catalog import closure, compose, cycle_string, cycles, identity, inverse


def load_catalog(path):
    groups = {}
    for line in open(path):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        head, *gens = [t.strip() for t in body.split(";")]
        n, idx, deg = map(int, head.split())
        perms = []
        for g in gens:
            cs = [list(map(int, c.split(","))) for c in re.findall(r"\(([^)]*)\)", g) if c]
            perms.append(cycles(cs, deg))
        groups[(n, idx)] = (deg, closure(perms))
    return groups


def power(x, k):
    r = identity(len(x))
    base = x if k >= 0 else inverse(x)
    for _ in range(abs(k)):
        r = compose(r, base)
    return r


def evaluate(word, env, deg):
    r = identity(deg)
    if word.strip() in ("1", "e"):
        return r
    for tok in word.split("*"):
        name, _, exp = tok.strip().partition("^")
        r = compose(r, power(env[name], int(exp) if exp else 1))
    return r


def realize(deg, elements, names, relations):
    for combo in itertools.product(elements, repeat=len(names)):
        env = dict(zip(names, combo))
        if all(evaluate(w, env, deg) == identity(deg) for w in relations) and \
                len(closure(list(combo))) == len(elements):
            return env
    raise SystemExit(f"no realization for {names} / {relations}")


ABELIAN2 = ["g1*g2*g1^-1*g2^-1"]

FAMILIES = [
    # Genus-1 base families satisfying the condition.
    dict(label="(1e)", group=[2, 1], gprime=1, names=["a"], relations=["a^2"],
         hyperbolic=[["a", "1"]], branch=["a", "a"],
         expected=dict(genus=2, r=2, m=[2, 2], N=2, star=True, fibration=[2, 1, 1, 1]),
         notes="same subvariety as the genus-2 cover of the line labelled (26)"),
    dict(label="(2e)", group=[2, 1], gprime=1, names=["a"], relations=["a^2"],
         hyperbolic=[["a", "1"]], branch=["a", "a", "a", "a"],
         expected=dict(genus=3, r=4, m=[2, 2, 2, 2], N=4, star=True, fibration=[4, 3, 1, 3]),
         notes="bielliptic locus in genus 3"),
    dict(label="(3e)", group=[3, 1], gprime=1, names=["a"], relations=["a^3"],
         hyperbolic=[["a", "1"]], branch=["a", "a^2"],
         expected=dict(genus=3, r=2, m=[3, 3], N=2, star=True, fibration=[2, 1, 1, 1]),
         notes="same subvariety as (31)"),
    dict(label="(4e)", group=[4, 1], gprime=1, names=["a"], relations=["a^4"],
         hyperbolic=[["a", "1"]], branch=["a^2", "a^2"],
         expected=dict(genus=3, r=2, m=[2, 2], N=2, star=True, fibration=[2, 1, 1, 1]),
         notes="same subvariety as (32)"),
    dict(label="(5e)", group=[8, 4], gprime=1, names=["i", "j"],
         relations=["i^4", "i^2*j^-2", "j^-1*i*j*i"],
         hyperbolic=[["i", "j"]], branch=["i^2"],
         expected=dict(genus=3, r=1, m=[2], N=1, star=True, fibration=[1, 0, 1, 0],
                       h0=[[2, 1]], blocks=[[1, 1, True], [1, 2, False]]),
         notes="(5e)=(7)=(23)=(34); constant Prym image, the square of y^2 = x^3 - x"),
    dict(label="(6e)", group=[3, 1], gprime=1, names=["a"], relations=["a^3"],
         hyperbolic=[["a", "1"]], branch=["a", "a", "a"],
         expected=dict(genus=4, r=3, m=[3, 3, 3], N=3, star=True, fibration=[3, 2, 1, 2])),
    # Covers of the line with explicit monodromy.
    dict(label="(34)", aliases=["(5e)", "(7)", "(23)"], group=[16, 13], gprime=0,
         names=["g1", "g2", "g3"],
         relations=["g1^2", "g2^2", "g3^4", "g2*g3*g2^-1*g3^-1",
                    "g1^-1*g2*g1*g3^-2*g2^-1", "g1^-1*g3*g1*g3^-1"],
         branch=["g1", "g1*g2*g3^3", "g2*g3^2", "g3^3"],
         expected=dict(genus=3, r=4, m=[2, 2, 2, 4], N=1, star=True,
                       h0=[[1, 1], [2, 1]], blocks=[[1, 1, True], [2, 1, False]]),
         witnesses=[dict(target="(2e)", subgroup=["g3^2"], membership="prym_fibre", full=True),
                    dict(target="(4e)", subgroup=["g1*g3"], membership="prym_fibre", full=True),
                    dict(target="(5e)", subgroup=["g3^2", "g2*g3", "g1*g3", "g1*g2*g3^2"])]),
    dict(label="(33)", aliases=["(35)"], group=[24, 12], gprime=0,
         names=["g1", "g2", "g3", "g4"],
         given=dict(g1=[[1, 2]], g2=[[1, 2, 3]], g3=[[1, 3], [2, 4]], g4=[[1, 4], [2, 3]]),
         branch=["g1*g2^2", "g3*g4", "g1", "g2^2*g4"],
         expected=dict(genus=3, r=4, m=[2, 2, 2, 3], N=1, star=True,
                       h0=[[3, 1]], blocks=[[3, 1, True]]),
         witnesses=[dict(target="(3e)", subgroup=["g2"], membership="neither", full=False)]),
    dict(label="(9)", group=[6, 2], gprime=0, names=["g1", "g2"],
         relations=["g1^2", "g2^3"] + ABELIAN2,
         branch=["g1", "g2^2", "g2^2", "g1*g2^2"],
         expected=dict(genus=3, r=4, m=[2, 3, 3, 6], N=1, star=True,
                       h0=[[1, 1], [1, 1], [1, 1]], blocks=[[1, 1, False], [1, 2, True]]),
         witnesses=[dict(target="(2e)", subgroup=["g1"], membership="phi_fibre", full=False)]),
    dict(label="(22)", group=[8, 2], gprime=0, names=["g1", "g2", "g3"],
         relations=["g1^4", "g2^2", "g3*g1^-2"] + ABELIAN2,
         branch=["g3", "g2*g3", "g1*g2", "g1*g3"],
         expected=dict(genus=3, r=4, m=[2, 2, 4, 4], N=1, star=True,
                       h0=[[1, 1], [1, 1], [1, 1]], blocks=[[1, 1, False], [1, 2, True]]),
         witnesses=[dict(target="(2e)", subgroup=["g2*g3"], membership="phi_fibre", full=False)]),
    dict(label="(31)", aliases=["(3e)"], group=[6, 1], gprime=0, names=["g1", "g2"],
         relations=["g1^2", "g2^3", "g1^-1*g2*g1*g2^-2"],
         branch=["g1*g2^2", "g1*g2", "g1", "g1*g2^2", "g2^2"],
         expected=dict(genus=3, r=5, m=[2, 2, 2, 2, 3], N=2, star=True,
                       h0=[[1, 1], [2, 1]], blocks=[[1, 1, True], [2, 1, True]]),
         witnesses=[dict(target="(3e)", subgroup=["g2"]),
                    dict(target="(2e)", subgroup=["g1"], membership="neither", full=False)]),
    dict(label="(32)", aliases=["(4e)"], group=[8, 3], gprime=0, names=["x", "y"],
         relations=["x^4", "y^2", "y^-1*x*y*x^-3"],
         branch=["x^3*y", "y", "x^2", "y", "x*y"],
         expected=dict(genus=3, r=5, m=[2, 2, 2, 2, 2], N=2, star=True,
                       h0=[[1, 1], [2, 1]], blocks=[[1, 1, True], [2, 1, True]]),
         witnesses=[dict(target="(4e)", subgroup=["x"]),
                    dict(target="(2e)", subgroup=["x^2"], membership="neither", full=False),
                    dict(target="(2e)", subgroup=["y"], membership="neither", full=False)]),
    dict(label="(27)", group=[4, 2], gprime=0, names=["g1", "g2"],
         relations=["g1^2", "g2^2"] + ABELIAN2,
         branch=["g2", "g1*g2", "g1", "g1*g2", "g1", "g2"],
         expected=dict(genus=3, r=6, m=[2, 2, 2, 2, 2, 2], N=3, star=True,
                       h0=[[1, 1], [1, 1], [1, 1]],
                       blocks=[[1, 1, True], [1, 1, True], [1, 1, True]]),
         witnesses=[dict(target="(2e)", subgroup=["g2"], membership="neither", full=False),
                    dict(target="(2e)", subgroup=["g1"], membership="neither", full=False),
                    dict(target="(2e)", subgroup=["g1*g2"], membership="neither", full=False)]),
    dict(label="(12)", group=[6, 2], gprime=0, names=["g1", "g2"],
         relations=["g1^2", "g2^3"] + ABELIAN2,
         branch=["g1", "g1*g2", "g1*g2", "g1*g2"],
         expected=dict(genus=4, r=4, m=[2, 6, 6, 6], N=1, star=True,
                       h0=[[1, 1], [1, 1], [1, 2]],
                       blocks=[[1, 1, True], [1, 1, False], [1, 2, False]]),
         witnesses=[dict(target="(6e)", subgroup=["g2"], membership="prym_fibre", full=True)]),
    dict(label="(38)", aliases=["(25)"], group=[18, 3], gprime=0, names=["g1", "g2", "g3"],
         relations=["g1^2", "g2^3", "g3^3", "g1*g2*g1^-1*g2^-1", "g2*g3*g2^-1*g3^-1",
                    "g1^-1*g3*g1*g3^-2"],
         branch=["g1*g3^2", "g1*g3", "g2*g3", "g2^2"],
         expected=dict(genus=4, r=4, m=[2, 2, 3, 3], N=1, star=True,
                       h0=[[1, 1], [1, 1], [2, 1]], blocks=[[1, 2, True], [2, 1, False]]),
         witnesses=[dict(target="(6e)", subgroup=["g2*g3"], membership="phi_fibre", full=False)]),
    dict(label="(37)", group=[12, 3], gprime=0, names=["g1", "g2", "g3"],
         given=dict(g1=[[1, 2, 3]], g2=[[1, 2], [3, 4]], g3=[[1, 3], [2, 4]]),
         branch=["g3", "g1*g3", "g1", "g1*g2*g3"],
         expected=dict(genus=4, r=4, m=[2, 3, 3, 3], N=1, star=True,
                       h0=[[1, 1], [3, 1]], blocks=[[1, 1, False], [3, 1, True]]),
         witnesses=[dict(target="(6e)", subgroup=["g1"], membership="neither", full=False)]),
]


def main(catalog_path, out_path):
    groups = load_catalog(catalog_path)
    out = []
    for fam in FAMILIES:
        deg, elements = groups[tuple(fam["group"])]
        if "given" in fam:
            env = {k: cycles(v, deg) for k, v in fam["given"].items()}
            assert all(e in elements for e in env.values())
        else:
            env = realize(deg, elements, fam["names"], fam["relations"])
        hyper = fam.get("hyperbolic", [])
        words = fam["branch"] + [w for pair in hyper for w in pair]
        vec = [evaluate(w, env, deg) for w in fam["branch"]]
        rel = identity(deg)
        for x in vec:
            rel = compose(rel, x)
        for a, b in hyper:
            a, b = evaluate(a, env, deg), evaluate(b, env, deg)
            rel = compose(rel, compose(compose(a, b), compose(inverse(a), inverse(b))))
        assert rel == identity(deg), fam["label"]
        gen = [evaluate(w, env, deg) for w in words]
        assert len(closure(gen)) == len(elements), fam["label"]
        rec = {
            "label": fam["label"],
            "aliases": fam.get("aliases", []),
            "group": fam["group"],
            "gprime": fam["gprime"],
            "elements": {k: cycle_string(env[k]) for k in fam["names"]},
            "relations": fam.get("relations", []),
            "hyperbolic": hyper,
            "branch": fam["branch"],
            "expected": fam["expected"],
            "witnesses": fam.get("witnesses", []),
        }
        if "notes" in fam:
            rec["notes"] = fam["notes"]
        out.append(rec)
    with open(out_path, "w") as f:
        json.dump({"schema": "shimura-fixtures/1", "families": out}, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main(*(sys.argv[1:] or ["data/catalog.txt", "data/fixtures.json"]))
