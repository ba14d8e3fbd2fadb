import numpy as np
from scenefill.perf import tune_runtime
tune_runtime()
from scenefill import scene as sc, joint as jt, field as fd
from scenefill.config import FieldConfig, TrainConfig

rng = np.random.default_rng(1)
scene = sc.random_scene(rng, n_objects=2)
cams = sc.camera_path("arc", 20, span_deg=70.0, width=64)
imgs = np.stack([sc.oracle_render(scene, c)[0] for c in cams])
cfg = TrainConfig(steps=600, w_sds=0.0, rays_per_step=1024, n_proposal=32, n_samples=32, seed=0)
res = jt.joint_optimize(imgs, cams, None, None, cfg)

hold = sc.camera_path("arc", 4, span_deg=56.0, width=64)[1:-1]
for tag, cam in (("train10", cams[10]), ("hold0", hold[0]), ("hold1", hold[1])):
    rgb, depth, op = fd.render_image(res.params, cam, 32, res.prop_params, 32)
    gt_rgb, gt_d = sc.oracle_render(scene, cam)
    err = np.abs(depth - gt_d)
    print(f"{tag}: opacity deciles {np.percentile(op, [5,25,50,75,95]).round(3)}")
    print(f"   depth err deciles {np.percentile(err, [50,75,90,95,99]).round(3)} mean {err.mean():.3f}")
    bad = err > 0.15
    print(f"   bad rays {bad.mean()*100:.1f}%  their opacity mean {op[bad].mean() if bad.any() else -1:.3f}  their gt depth mean {gt_d[bad].mean() if bad.any() else -1:.2f}")
    # where are they in the image?
    vv, uu = np.nonzero(bad)
    if len(vv): print(f"   bad pixel rows min/max {vv.min()}/{vv.max()} cols {uu.min()}/{uu.max()}")
