import sys
import numpy as np
from scenefill.perf import tune_runtime
tune_runtime()
from scenefill import scene as sc, joint as jt, field as fd
from scenefill.config import FieldConfig, TrainConfig

bias = float(sys.argv[1])
rng = np.random.default_rng(1)
scene = sc.random_scene(rng, n_objects=2)
cams = sc.camera_path("arc", 20, span_deg=70.0, width=64)
imgs = np.stack([sc.oracle_render(scene, c)[0] for c in cams])
cfg = TrainConfig(steps=600, w_sds=0.0, rays_per_step=1024, n_proposal=32, n_samples=32, seed=0)
res = jt.joint_optimize(imgs, cams, None, None, cfg, field_cfg=FieldConfig(density_bias=bias))
hold = sc.camera_path("arc", 4, span_deg=56.0, width=64)[1:-1]
from scenefill import metrics as mt
for tag, cam in (("hold0", hold[0]), ("hold1", hold[1])):
    rgb, depth, op = fd.render_image(res.params, cam, 32, res.prop_params, 32)
    gt_rgb, gt_d = sc.oracle_render(scene, cam)
    err = np.abs(depth - gt_d)
    print(f"bias {bias} {tag}: psnr {mt.psnr(np.clip(rgb,0,1), gt_rgb):.2f} depth mean err {err.mean():.4f} p95 {np.percentile(err,95):.3f} opacity med {np.median(op):.3f}")
