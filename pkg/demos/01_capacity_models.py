"""Walk through the four closed-form capacity models at a single SNR point.

Run: python3 demos/01_capacity_models.py
"""

from mimocap import (
    AntennaConfig,
    Bandwidth,
    Snr,
    array_gain_capacity,
    product_gain_capacity,
    siso_capacity,
    stc_capacity,
)

b = Bandwidth(1.0)  # normalized: capacities come out in bit/s/Hz
snr = Snr.from_db(10.0)

print(f"SNR = 10 dB (linear {snr.linear:g}), B = 1 Hz\n")

print(f"SISO  1x1 Shannon:            {siso_capacity(b, snr).bits_per_second:.4f}")
for n in (2, 3):
    c = array_gain_capacity(b, n, snr).bits_per_second
    print(f"SIMO/MISO array gain n={n}:     {c:.4f}")
for k in (2, 3, 4):
    cfg = AntennaConfig(k, k)
    pg = product_gain_capacity(b, cfg, snr).bits_per_second
    st = stc_capacity(b, cfg, snr).bits_per_second
    print(f"MIMO {cfg.label} product gain:     {pg:.4f}   space-time coded: {st:.4f}")

print(
    "\nThe product-gain model multiplies SNR by nT*nR inside the log; the"
    "\nspace-time-coded model instead multiplies the whole log by min(nT, nR),"
    "\nso the two scale very differently with SNR."
)
