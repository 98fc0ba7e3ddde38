"""Run every verification suite at full desk scale and save the reports.

    python scripts/run_sweeps.py --out reports/ --jobs 4
"""

import argparse
from pathlib import Path

from zolotarev import verifier

FULL_SCALE = [
    (verifier.verify_gamma, dict(max_m=12, max_n=12)),
    (verifier.verify_alpha_beta, dict(max_m=31, max_n=31)),
    (verifier.verify_reciprocity_identity, dict(max_m=99, max_n=99)),
    (verifier.verify_zolotarev_lemma, dict(max_p=997)),
    (verifier.verify_quadratic_reciprocity, dict(max_p=199)),
    (verifier.verify_supplements, dict(max_n=999)),
    (verifier.verify_jacobi_generalization, dict(max_n=199, oracle_max=500)),
    (verifier.verify_crt_structure, dict(max_m=31, max_n=31)),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="reports")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    ok = True
    for verify, bounds in FULL_SCALE:
        report = verify(**bounds, parallelism=args.jobs)
        report.write(out / f"{report.suite}.json")
        print(report.summary())
        ok &= report.passed
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
