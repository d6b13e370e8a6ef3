"""Full pipeline with rule-by-rule explanations.

Classifies every reference shape, prints the explanation for one verdict
of each outcome kind, and shows how tolerances change a result.
"""

import dataclasses

from shapeid import Tolerances, classify_raster, corpus, explain, render

print("corpus labels:")
for name, spec in corpus():
    verdict, fv = classify_raster(render(spec, 256, 256))
    flag = "" if verdict.label.value.lower() == name else "   <-- MISMATCH"
    print(f"  {name:11s} -> {verdict.label.value}{flag}")

print("\nwhy the hemisphere is a hemisphere:")
spec = dict(corpus())["hemisphere"]
verdict, _ = classify_raster(render(spec, 256, 256))
print(explain(verdict))

print("\nwhy the cone is a cone:")
verdict, _ = classify_raster(render(dict(corpus())["cone"], 256, 256))
print(explain(verdict))

# Tolerances are adjustable: an absurdly tight area tolerance stops the
# cylinder's cap excess from counting as a cylinder signature.
print("\ncylinder under shrinking area tolerance:")
img = render(dict(corpus())["cylinder"], 256, 256)
for area_eps in (0.10, 0.20):
    verdict, _ = classify_raster(img, tol=Tolerances(area_eps=area_eps))
    print(f"  area_eps={area_eps:.2f}: {verdict.label.value}")

# A rotated square keeps its label: every rule compares relative lengths.
rot = dataclasses.replace(dict(corpus())["square"], rotation=30.0)
verdict, _ = classify_raster(render(rot, 256, 256))
print(f"\nsquare rotated 30 degrees -> {verdict.label.value}")
