import numpy as np
from scenefill.perf import tune_runtime
tune_runtime()
from scenefill import diffusion as df
params = df.load_prior("/root/pkg/.calib/prior_calib.NRF1")
fro = params.frozen()
mask = np.zeros((32, 32)); mask[:, 16:] = 1.0
for w_cfg in (6.0, 8.0):
    for c in (0.3, 0.55, 0.7):
        img = np.full((32, 32, 3), c)
        means = [df.inpaint_image(fro, img, mask, 128, np.random.default_rng(100+i), w_cfg=w_cfg)[mask==1].mean() for i in range(10)]
        print(f"w {w_cfg} ctx {c}: fill {np.mean(means):.3f} +- {np.std(means):.3f} gap {abs(np.mean(means)-c):.3f}", flush=True)
