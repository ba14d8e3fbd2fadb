import time, numpy as np
from scenefill.perf import tune_runtime
tune_runtime()
from scenefill import diffusion as df
from scenefill.config import PriorConfig

rng = np.random.default_rng(0)
t0 = time.perf_counter()
corpus = df.make_corpus(rng, 500, size=32)
print(f"corpus in {time.perf_counter()-t0:.0f}s", flush=True)
cfg = PriorConfig()
t0 = time.perf_counter()
params, losses = df.train_prior(cfg, corpus, 5000, rng, log_every=250,
                                callback=lambda s, l: print(f"{s}: {l:.4f}", flush=True))
dt = time.perf_counter() - t0
print(f"5000 steps in {dt/60:.1f} min", flush=True)
start = np.mean(losses[:100])
best = min(np.mean(losses[max(0,i-100):i]) for i in range(100, 5001, 100))
print(f"initial-100 avg {start:.4f}; best-100 avg {best:.4f}; ratio {start/best:.2f}", flush=True)
df.save_prior("/root/pkg/.calib/prior_calib.NRF1", params)

# half-masked constant-color inpainting check
sch = df.NoiseSchedule()
img = np.full((32, 32, 3), 0.55)
mask = np.zeros((32, 32)); mask[:, 16:] = 1.0
means = []
for i in range(10):
    out = df.inpaint_image(params.frozen(), img, mask, 256, np.random.default_rng(100+i), w_cfg=2.0)
    means.append(out[mask == 1].mean())
print(f"context mean {img[mask==0].mean():.3f}; masked means {np.mean(means):.3f} +- {np.std(means):.3f}", flush=True)
