import numpy as np
from scenefill import scene as sc

rng = np.random.default_rng(1)
scene = sc.random_scene(rng, n_objects=2)
cams = sc.camera_path("arc", 20, span_deg=70.0, width=64)
hold = sc.camera_path("arc", 4, span_deg=56.0, width=64)[1:-1]

cam = hold[0]
gt_rgb, gt_d = sc.oracle_render(scene, cam)
rays = sc.generate_rays(cam, sc.all_pixels(cam))
pts = rays.origins + gt_d.ravel()[:, None]*rays.dirs  # GT surface points

# how many train cameras see each surface point (in-bounds + unoccluded)?
count = np.zeros(len(pts))
for tc in cams:
    u, v, z = tc.project(pts)
    inb = (z > 0) & (u >= 0) & (u < 64) & (v >= 0) & (v < 64)
    # occlusion check: oracle depth at that projected pixel vs distance
    d2 = np.linalg.norm(pts - tc.center, axis=1)
    uu = np.clip(u.astype(int), 0, 63); vv = np.clip(v.astype(int), 0, 63)
    _, td = sc.oracle_render(scene, tc)
    vis = inb & (d2 <= td[vv, uu] + 0.05)
    count += vis
count = count.reshape(64, 64)
print("observation count percentiles:", np.percentile(count, [0, 5, 25, 50]).round(1))
print("right columns (48:64) count:", count[:, 48:].mean().round(2), "min", count[:, 48:].min())
print("unobserved fraction:", (count == 0).mean().round(3))
vv, uu = np.nonzero(count == 0)
if len(uu): print("unobserved cols:", uu.min(), uu.max(), "rows:", vv.min(), vv.max())
