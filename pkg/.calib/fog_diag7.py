import numpy as np
from scenefill.perf import tune_runtime
tune_runtime()
from scenefill import scene as sc, field as fd, metrics as mt

params, prop = fd.load_field("/root/pkg/.calib/recon600.NRF1")
rng = np.random.default_rng(1)
scene = sc.random_scene(rng, n_objects=2)
target = np.array([0.0, 0.0, 0.35])
for ang_deg in (-9.2, -3.7, 5.5, 12.9):
    a = np.deg2rad(ang_deg)
    eye = target + 0.55*np.array([np.sin(a), 0.0, -np.cos(a)])
    eye = eye + 0.06*(target - eye)/np.linalg.norm(target - eye)
    cam = sc.Camera.look_at(eye, target, 1.45*64, 64, 64)
    rgb, depth, op = fd.render_image(params, cam, 32, prop, 32)
    gt_rgb, gt_d = sc.oracle_render(scene, cam)
    err = np.abs(depth - gt_d)
    signed = (depth - gt_d)
    print(f"ang {ang_deg}: median {np.median(err):.4f} mean {err.mean():.4f} | frac>0.1 {(err>0.1).mean():.3f} frac>0.3 {(err>0.3).mean():.3f} | signed mean {signed.mean():+.4f} | op med {np.median(op):.3f}")
