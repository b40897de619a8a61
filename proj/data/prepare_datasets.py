# Copyright 2026 The ihgmm Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Rebuild the benchmark CSVs in this directory from KEEL-format .dat files.

Usage: python3 prepare_datasets.py KEEL_DIR

KEEL_DIR holds iris.dat, wine.dat, segment.dat, satimage.dat, penbased.dat and
splice.dat (comma-separated rows, class in the last field). The KEEL copies
keep the original UCI row order, so the satimage and pendigits training
splits are the leading 4435 and 7494 rows.
"""

import csv
import sys
from pathlib import Path

# name -> (source file, rows kept or None for all)
NUMERIC = {
    "iris": ("iris.dat", None),
    "wine": ("wine.dat", None),
    "segment": ("segment.dat", None),
    "satimage": ("satimage.dat", 4435),
    "pendigits": ("penbased.dat", 7494),
}

# Three indicator bits per nucleotide; T is all zeros.
NUCLEOTIDE_BITS = {"A": (1, 0, 0), "C": (0, 1, 0), "G": (0, 0, 1), "T": (0, 0, 0)}


def read_rows(path):
    with open(path, newline="") as f:
        for line in f:
            line = line.strip()
            if line and not line.startswith("@"):
                yield [v.strip() for v in line.split(",")]


def write_csv(path, header, rows):
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    print(f"{path.name}: {len(rows)} rows, {len(header) - 1} features")


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    src = Path(sys.argv[1])
    out = Path(__file__).resolve().parent
    for name, (file, limit) in NUMERIC.items():
        rows = list(read_rows(src / file))[:limit]
        p = len(rows[0]) - 1
        write_csv(out / f"{name}.csv", [f"x{j + 1}" for j in range(p)] + ["class"], rows)

    dna = []
    for r in read_rows(src / "splice.dat"):
        seq, label = r[:-1], r[-1]
        if all(c in NUCLEOTIDE_BITS for c in seq):
            dna.append([b for c in seq for b in NUCLEOTIDE_BITS[c]] + [label])
    p = len(dna[0]) - 1
    write_csv(out / "dna.csv", [f"x{j + 1}" for j in range(p)] + ["class"], dna)


if __name__ == "__main__":
    main()
