import numpy as np
from scenefill.perf import tune_runtime
tune_runtime()
from scenefill import diffusion as df

params = df.load_prior("/root/pkg/.calib/prior_calib.NRF1")
fro = params.frozen()
img = np.full((32, 32, 3), 0.55)
mask = np.zeros((32, 32)); mask[:, 16:] = 1.0
ctx_mean = img[mask == 0].mean()
for w_cfg in (1.0, 2.0, 4.0):
    for steps in (128, 256):
        means = []
        for i in range(10):
            out = df.inpaint_image(fro, img, mask, steps, np.random.default_rng(100+i), w_cfg=w_cfg)
            means.append(out[mask == 1].mean())
        print(f"w_cfg {w_cfg} steps {steps}: fill {np.mean(means):.3f} +- {np.std(means):.3f} (ctx {ctx_mean:.3f}, gap {abs(np.mean(means)-ctx_mean):.3f})", flush=True)
# also check different context colors
for c in (0.3, 0.7):
    img2 = np.full((32, 32, 3), c)
    means = [df.inpaint_image(fro, img2, mask, 256, np.random.default_rng(200+i), w_cfg=2.0)[mask==1].mean() for i in range(6)]
    print(f"ctx {c}: fill {np.mean(means):.3f} gap {abs(np.mean(means)-c):.3f}", flush=True)
