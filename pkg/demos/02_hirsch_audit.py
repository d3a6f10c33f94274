"""
Auditing the diameter bound on a small corpus
=============================================

For each complex we compare the facet-ridge diameter with n - (d + 1) and
build a segment for every pair of facets.
"""

from flagpath import audit, parse_spec

specs = ["cross:4", "cycle:6", "susp(cycle:5)", "sd(simplexbd:3)", "sd(cross:3)"]

print(f"{'complex':<18}{'n':>4}{'d':>3}{'facets':>8}{'diam':>6}{'bound':>7}{'pairs':>7}{'viol':>6}")
for spec in specs:
    r = audit(parse_spec(spec), spec)
    print(f"{spec:<18}{r.n:>4}{r.d:>3}{r.facets:>8}{r.diameter:>6}{r.bound:>7}"
          f"{r.pairs_checked:>7}{len(r.violations):>6}")

# Reports serialise to stable JSON, which is what `flagpath audit --json` prints.
print(audit(parse_spec("cycle:5"), "cycle:5").to_json())
