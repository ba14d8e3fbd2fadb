import numpy as np
from scenefill.perf import tune_runtime
tune_runtime()
from scenefill import scene as sc, joint as jt, field as fd, metrics as mt
from scenefill.config import FieldConfig, TrainConfig

rng = np.random.default_rng(1)
scene = sc.random_scene(rng, n_objects=2)
cams = sc.camera_path("arc", 20, span_deg=70.0, width=64)
imgs = np.stack([sc.oracle_render(scene, c)[0] for c in cams])
cfg = TrainConfig(steps=600, w_sds=0.0, rays_per_step=1024, n_proposal=32, n_samples=32, seed=0)
res = jt.joint_optimize(imgs, cams, None, None, cfg)

def eval_at(tag, cam):
    rgb, depth, op = fd.render_image(res.params, cam, 32, res.prop_params, 32)
    gt_rgb, gt_d = sc.oracle_render(scene, cam)
    err = np.abs(depth - gt_d)
    print(f"{tag}: psnr {mt.psnr(np.clip(rgb,0,1), gt_rgb):.2f} derr mean {err.mean():.4f} p95 {np.percentile(err,95):.3f} op med {np.median(op):.3f}", flush=True)

target = np.array([0.0, 0.0, 0.35])
for dolly in (0.0, 0.06, 0.12):
    for ang_deg in (-9.2, 5.5):
        a = np.deg2rad(ang_deg)
        eye = target + 0.55*np.array([np.sin(a), 0.0, -np.cos(a)])
        eye = eye + dolly*(target - eye)/np.linalg.norm(target - eye)
        cam = sc.Camera.look_at(eye, target, 1.1*64, 64, 64)
        eval_at(f"dolly {dolly} ang {ang_deg}", cam)
