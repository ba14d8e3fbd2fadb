import numpy as np, time
from scenefill.perf import tune_runtime
tune_runtime()
from scenefill import scene as sc, joint as jt, field as fd, autodiff as ad
from scenefill.config import FieldConfig, TrainConfig

rng = np.random.default_rng(1)
scene = sc.random_scene(rng, n_objects=2)
cams = sc.camera_path("arc", 20, span_deg=70.0, width=64)
imgs = np.stack([sc.oracle_render(scene, c)[0] for c in cams])

import sys
bias = float(sys.argv[1]) if len(sys.argv) > 1 else -0.5
fcfg = FieldConfig(density_bias=bias)
cfg = TrainConfig(steps=600, w_sds=0.0, rays_per_step=1024, n_proposal=32, n_samples=32, seed=0, log_every=200)
res = jt.joint_optimize(imgs, cams, None, None, cfg, field_cfg=fcfg,
    progress=lambda s,l: print(f"{s}: recon {l['loss_recon']:.4f} inter {l['loss_inter']:.5f}", flush=True))

# inspect a batch of rays through the trained model
cam = cams[10]
pix = np.stack([rng.integers(0,64,256), rng.integers(0,64,256)], axis=1)
rays = sc.generate_rays(cam, pix)
r = fd.render_rays(res.params.frozen(), rays, 32, res.prop_params.frozen(), 32, np.random.default_rng(0), False)
w = r.weights.value
pw = r.prop_weights.value
print("final weights: max-per-ray mean", w.max(axis=1).mean(), "sum", w.sum(axis=1).mean())
print("prop weights: max-per-ray mean", pw.max(axis=1).mean(), "sum", pw.sum(axis=1).mean())
# resampled interval widths vs uniform
widths = np.diff(r.s_edges, axis=1)
print("resampled width min/median/max:", widths.min(), np.median(widths), widths.max())
d_or = sc.oracle_depth_at(scene, cam, pix)
print("depth err mean:", np.abs(r.depth.value - d_or).mean(), "opacity mean:", r.opacity.value.mean())
from scenefill import losses as ls
li = ls.interlevel_loss(r.s_edges, w, r.prop_s_edges, r.prop_weights)
print("interlevel on this batch:", li.item())
