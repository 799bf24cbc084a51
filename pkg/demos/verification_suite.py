"""Run the whole named check suite programmatically and print the reports.

The same thing is available from the shell as ``verify all --seed 42``.
"""

from geoverify import RunConfig, run_all

cfg = RunConfig(seed=42, points=50)
reports = run_all(cfg)

for rep in reports:
    print(rep.summary())

failed = [r.check_name for r in reports if not r.passed]
print("\nall passed" if not failed else f"\nFAILED: {', '.join(failed)}")
