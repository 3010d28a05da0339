"""Dev script: sweep the acceptance grid, classify every combination."""
from fractions import Fraction as F
import rccs

marginals = [F(1, 10), F(3, 10), F(1, 2), F(7, 10), F(9, 10)]
epsilons = [F(-1, 10), F(0), F(1, 20)]
deltas = [F(1, 100), F(1, 20)]

def cell_space(a, b, eps, delta):
    q1 = a * b + eps + delta
    cells = (q1, a - q1, b - q1, 1 - a - b + q1)
    if any(q <= 0 for q in cells):
        return None
    space = rccs.ProbabilitySpace((("ab", cells[0]), ("an", cells[1]), ("nb", cells[2]), ("nn", cells[3])))
    return space, {"A": space.event({"ab", "an"}), "B": space.event({"ab", "nb"})}

stats = {"no-space": 0, "lemma-infeasible": 0, "ok": 0, "failed": []}
for a in marginals:
    for b in marginals:
        for eps in epsilons:
            for delta in deltas:
                built = cell_space(a, b, eps, delta)
                if built is None:
                    stats["no-space"] += 1
                    continue
                if eps + a * b <= 0:
                    stats["lemma-infeasible"] += 1
                    continue
                space, ev = built
                point_ok = True
                for model in ("ghr", "gm"):
                    for n in (2, 3, 4, 5):
                        try:
                            res = rccs.extend_with_rccs(space, ev["A"], ev["B"], eps, n, model)
                        except rccs.ConstructionFailed:
                            point_ok = False
                            stats["failed"].append((str(a), str(b), str(eps), str(delta), model, n, "construction"))
                            continue
                        except rccs.InfeasibleProfile as exc:
                            point_ok = False
                            stats["failed"].append((str(a), str(b), str(eps), str(delta), model, n, f"infeasible: {exc}"))
                            continue
                        ha = rccs.induced_event(res, ev["A"]); hb = rccs.induced_event(res, ev["B"])
                        if model == "ghr":
                            ok = rccs.check_ghr_rccs(res.target, ha, hb, res.rccs, eps).verdict
                        else:
                            ok = rccs.check_gm_rccs(res.target, ha, hb, res.rccs, eps).verdict
                        ok = ok and rccs.verify_extension(space, res).verdict
                        if not ok:
                            point_ok = False
                            stats["failed"].append((str(a), str(b), str(eps), str(delta), model, n, "validation"))
                if point_ok:
                    stats["ok"] += 1

print("no-space:", stats["no-space"])
print("lemma-infeasible:", stats["lemma-infeasible"])
print("fully ok:", stats["ok"])
print("failures:", len(stats["failed"]))
for f in stats["failed"]:
    print("  ", f)
