"""Regenerates rng_golden_42_7.txt from numpy's Philox4x64-10.

The C++ generator keyed by (seed=42, stream=7) must reproduce these draws.
Run: python3 gen_rng_golden.py > rng_golden_42_7.txt
"""
import numpy as np

bg = np.random.Philox(key=42 + (7 << 64))
for value in bg.random_raw(1000):
    print(int(value))
