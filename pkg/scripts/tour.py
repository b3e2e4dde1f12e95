"""Walk the fixture catalog: classification, sums, ranks, determinizability.

Usage: python scripts/tour.py
"""

from stochlang import (classify, determinize_to_pda, fixtures, hankel_rank,
                       total_sum)


def main():
    header = f"{'fixture':>12} {'pa':>5} {'pda':>5} {'pra':>5} {'sum':>5} {'rank':>5} {'residuals':>10}"
    print(header)
    print("-" * len(header))
    for name in fixtures.FIXTURE_NAMES:
        a = fixtures.build(name)
        report = classify(a)
        outcome = total_sum(a)
        mass = str(outcome.value) if outcome.converges else "div"
        pra = "-" if report.pra_reduced is None else str(report.pra_reduced.is_pra)
        if outcome.converges and outcome.value == 1:
            det = determinize_to_pda(a, 12)
            residuals = (str(det.discovered_residuals) if not det.bound_exceeded
                         else f">{det.discovered_residuals - 1}")
        else:
            residuals = "-"
        print(f"{name:>12} {str(report.pa):>5} {str(report.pda):>5} "
              f"{pra:>5} {mass:>5} {hankel_rank(a):>5} {residuals:>10}")


if __name__ == "__main__":
    main()
