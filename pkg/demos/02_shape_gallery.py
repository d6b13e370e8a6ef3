"""Render the eight reference silhouettes and check pixel vs analytic area.

Writes the gallery as PGM files into ./demo_output/ and prints how closely
the pixel counts track the continuous areas (no anti-aliasing, so the
agreement is tight).
"""

from pathlib import Path

import numpy as np

from shapeid import analytic_area, corpus, render, write_pgm

out_dir = Path("demo_output")
out_dir.mkdir(exist_ok=True)


def thumbnail(img, cols=48):
    # Coarse ASCII preview: average blocks, mark bright cells.
    h, w = img.shape
    rows = cols // 2
    ys = np.linspace(0, h, rows + 1).astype(int)
    xs = np.linspace(0, w, cols + 1).astype(int)
    lines = []
    for r in range(rows):
        line = "".join(
            "#" if img[ys[r]:ys[r + 1], xs[c]:xs[c + 1]].mean() > 64 else "."
            for c in range(cols)
        )
        lines.append(line)
    return "\n".join(lines)


print(f"{'shape':12s} {'pixels':>8s} {'analytic':>10s} {'error':>7s}")
for name, spec in corpus():
    img = render(spec, 256, 256)
    (out_dir / f"{name}.pgm").write_bytes(write_pgm(img))
    count = int((img == 255).sum())
    exact = analytic_area(spec)
    print(f"{name:12s} {count:8d} {exact:10.1f} {100 * abs(count - exact) / exact:6.2f}%")

print(f"\nwrote eight PGM files to {out_dir}/")
print("\ncone, up close:")
print(thumbnail(render(dict(corpus())["cone"], 256, 256)))
