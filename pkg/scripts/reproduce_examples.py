"""Replay every bundled example and print one line per check.

Exit status is 0 when every check matches its stored value.
"""

import argparse
import sys
import time

from sparsesop.reproduce import EXAMPLES, run_example


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*", help="examples to run (default: all)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    names = args.names or list(EXAMPLES)
    failures = 0
    for name in names:
        start = time.perf_counter()
        checks = run_example(name, args.seed)
        print(f"example {name} ({time.perf_counter() - start:.2f} s)")
        for c in checks:
            print("  " + c.line())
            failures += not c.ok
    print(f"{failures} failing checks")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
