import numpy as np, pickle
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
fd.save_field("/root/pkg/.calib/recon600.NRF1", res.params, res.prop_params)

target = np.array([0.0, 0.0, 0.35])
for focal_ratio in (1.1, 1.3, 1.45):
    for dolly in (0.06, 0.1):
        errs, psnrs = [], []
        for ang_deg in (-9.2, -3.7, 5.5, 12.9):
            a = np.deg2rad(ang_deg)
            eye = target + 0.55*np.array([np.sin(a), 0.0, -np.cos(a)])
            eye = eye + dolly*(target - eye)/np.linalg.norm(target - eye)
            cam = sc.Camera.look_at(eye, target, focal_ratio*64, 64, 64)
            rgb, depth, op = fd.render_image(res.params, cam, 32, res.prop_params, 32)
            gt_rgb, gt_d = sc.oracle_render(scene, cam)
            errs.append(np.abs(depth - gt_d).mean())
            psnrs.append(mt.psnr(np.clip(rgb,0,1), gt_rgb))
        print(f"focal {focal_ratio} dolly {dolly}: derr {np.mean(errs):.4f} (max {np.max(errs):.4f}) psnr {np.mean(psnrs):.2f} (min {np.min(psnrs):.2f})", flush=True)
