"""Wall-clock timing of the pipeline over the reference shapes.

Times segmentation through classification (rendering excluded) and prints
a per-shape table plus the overall average, at two raster sizes.
"""

import statistics
import time

from shapeid import classify_raster, corpus, render

REPEAT = 10

for size in (256, 512):
    print(f"--- {size}x{size}, {REPEAT} runs per shape ---")
    print(f"{'shape':12s} {'mean ms':>8s} {'min ms':>8s} {'max ms':>8s}")
    means = []
    for name, spec in corpus(size, size):
        image = render(spec, size, size)
        timings = []
        for _ in range(REPEAT):
            t0 = time.perf_counter()
            verdict, _ = classify_raster(image)
            timings.append((time.perf_counter() - t0) * 1000.0)
            assert verdict.label.value.lower() == name, name
        means.append(statistics.fmean(timings))
        print(f"{name:12s} {means[-1]:8.2f} {min(timings):8.2f} {max(timings):8.2f}")
    print(f"{'average':12s} {statistics.fmean(means):8.2f}\n")
