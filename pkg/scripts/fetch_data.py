"""Download the spellchecking and splice-junction corpora into ``data/``.

    python3 scripts/fetch_data.py [--dest data] [--force]

The corpus-dependent acceptance tests read from ``$HVSEQ_DATA`` (default
``data/`` at the repository root) and skip when a file is missing.
"""

import argparse
import shutil
import sys
import urllib.request
from pathlib import Path

SOURCES = {
    "corncob_lowercase.txt":
        "https://raw.githubusercontent.com/sibosop/specplib/master/corncob_lowercase.txt",
    "batch0.tab": "http://aspell.net/test/cur/batch0.tab",
    "wikipedia.dat": "https://www.dcs.bbk.ac.uk/~ROGER/wikipedia.dat",
    "splice.data":
        "https://archive.ics.uci.edu/ml/machine-learning-databases/"
        "molecular-biology/splice-junction-gene-sequences/splice.data",
}


def fetch(url, target, timeout):
    tmp = target.with_suffix(target.suffix + ".part")
    with urllib.request.urlopen(url, timeout=timeout) as resp, open(tmp, "wb") as out:
        shutil.copyfileobj(resp, out)
    tmp.replace(target)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dest", type=Path, default=Path(__file__).resolve().parents[1] / "data")
    parser.add_argument("--force", action="store_true", help="re-download existing files")
    parser.add_argument("--timeout", type=float, default=60.0)
    args = parser.parse_args(argv)
    args.dest.mkdir(parents=True, exist_ok=True)

    failed = 0
    for name, url in SOURCES.items():
        target = args.dest / name
        if target.exists() and not args.force:
            print(f"have  {target}")
            continue
        try:
            fetch(url, target, args.timeout)
            print(f"got   {target} ({target.stat().st_size} bytes)")
        except OSError as exc:
            failed += 1
            print(f"FAIL  {name}: {exc}", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
