import numpy as np, time
from scenefill.perf import tune_runtime
tune_runtime()
from scenefill import scene as sc, joint as jt, field as fd, metrics as mt
from scenefill.config import FieldConfig, TrainConfig

rng = np.random.default_rng(1)
scene = sc.random_scene(rng, n_objects=2)
cams = sc.camera_path("arc", 20, span_deg=70.0, width=64)
imgs = np.stack([sc.oracle_render(scene, c)[0] for c in cams])

cfg = TrainConfig(steps=2200, w_sds=0.0, rays_per_step=1024, n_proposal=32, n_samples=32, seed=0, log_every=400)
t0 = time.perf_counter()
res = jt.joint_optimize(imgs, cams, None, None, cfg,
    progress=lambda s,l: print(f"{s}: recon {l['loss_recon']:.4f}", flush=True))
print(f"2200 steps in {(time.perf_counter()-t0)/60:.1f} min", flush=True)
fd.save_field("/root/pkg/.calib/recon2200.NRF1", res.params, res.prop_params)

target = np.array([0.0, 0.0, 0.35])
tot_psnr, tot_err, tot_lim = [], [], []
for ang_deg in (-9.2, -3.7, 5.5, 12.9):
    a = np.deg2rad(ang_deg)
    eye = target + 0.55*np.array([np.sin(a), 0.0, -np.cos(a)])
    eye = eye + 0.08*(target - eye)/np.linalg.norm(target - eye)
    cam = sc.Camera.look_at(eye, target, 1.45*64, 64, 64)
    rgb, depth, op = fd.render_image(res.params, cam, 32, prop_params := res.prop_params, 32)
    gt_rgb, gt_d = sc.oracle_render(scene, cam)
    rays = sc.generate_rays(cam, sc.all_pixels(cam))
    spacing = ((rays.far - rays.near)/32).mean()
    err = np.abs(depth - gt_d)
    print(f"ang {ang_deg}: psnr {mt.psnr(np.clip(rgb,0,1), gt_rgb):.2f} err {err.mean():.4f} limit {2*spacing:.4f} op med {np.median(op):.3f} signed {np.mean(depth-gt_d):+.4f}", flush=True)
    tot_psnr.append(mt.psnr(np.clip(rgb,0,1), gt_rgb)); tot_err.append(err.mean()); tot_lim.append(2*spacing)
print(f"MEAN: psnr {np.mean(tot_psnr):.2f} err {np.mean(tot_err):.4f} limit {np.mean(tot_lim):.4f}", flush=True)
