"""Command-line interface.

Commands: ``disks``, ``regions``, ``report``, ``track``, ``plot``. Exit
codes: 0 on success/agreement, 1 on input errors, 2 when a verification
disagrees or a numerical route fails.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import GershgorinError, MatrixFileError
from .geometry import connected_regions, gershgorin_disks, region_gap, region_of
from .matrix import eigenvalues_oracle
from .matrixfile import parse_matrix
from .svgplot import render_svg
from .tracking import RegionCheck, track, verify_gershgorin_part2


@dataclass(frozen=True)
class RegionReport:
    """Per-region counting checks plus the two global verdicts."""

    n: int
    regions: tuple[RegionCheck, ...]
    part1_containment: bool
    part2_agreement: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "regions": [
                {
                    "region": c.region_index,
                    "disks": list(c.disk_indices),
                    "multiplicity": c.multiplicity,
                    "oracle_count": c.oracle_count,
                    "winding_count": c.winding_count,
                    "homotopy_count": c.homotopy_count,
                    "agree": c.agree,
                }
                for c in self.regions
            ],
            "part1_containment": self.part1_containment,
            "part2_agreement": self.part2_agreement,
        }


def build_region_report(a, *, inflation: float | None = None,
                        epsilon: float | None = None) -> RegionReport:
    rs = connected_regions(gershgorin_disks(a))
    verification = verify_gershgorin_part2(a, inflation=inflation,
                                           epsilon=epsilon)
    spectrum = eigenvalues_oracle(a)
    part1 = all(region_of(rs, value) is not None for value in spectrum)
    return RegionReport(
        n=a.shape[0],
        regions=verification.checks,
        part1_containment=part1,
        part2_agreement=verification.all_agree,
    )


def _fmt_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.12g} {sign} {abs(z.imag):.12g}i"


def _cmd_disks(args) -> int:
    a = parse_matrix(args.matrix)
    disks = gershgorin_disks(a)
    if args.json:
        payload = {"n": a.shape[0], "disks": [
            {"row": d.row_index, "center": [d.center.real, d.center.imag],
             "radius": d.radius} for d in disks]}
        print(json.dumps(payload, indent=2))
        return 0
    for d in disks:
        print(f"disk {d.row_index}: center {_fmt_complex(d.center)}  "
              f"radius {d.radius:.12g}")
    return 0


def _cmd_regions(args) -> int:
    a = parse_matrix(args.matrix)
    rs = connected_regions(gershgorin_disks(a))
    gap = region_gap(rs)
    if args.json:
        payload = {
            "n": a.shape[0],
            "gap": None if math.isinf(gap) else gap,
            "regions": [{"region": r, "disks": list(region.disk_indices),
                         "multiplicity": region.multiplicity}
                        for r, region in enumerate(rs.regions)],
        }
        print(json.dumps(payload, indent=2))
        return 0
    gap_text = "unbounded" if math.isinf(gap) else f"{gap:.12g}"
    print(f"{len(rs.regions)} region(s), gap {gap_text}")
    for r, region in enumerate(rs.regions):
        print(f"region {r}: disks {list(region.disk_indices)}  "
              f"multiplicity {region.multiplicity}")
    return 0


def _cmd_report(args) -> int:
    a = parse_matrix(args.matrix)
    report = build_region_report(a, inflation=args.inflation,
                                 epsilon=args.epsilon)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for c in report.regions:
            verdict = "ok" if c.agree else "MISMATCH"
            print(f"region {c.region_index}: disks {list(c.disk_indices)}  "
                  f"multiplicity {c.multiplicity}  homotopy {c.homotopy_count}  "
                  f"winding {c.winding_count}  oracle {c.oracle_count}  {verdict}")
        print("part 1 (eigenvalues contained in the disk union): "
              + ("ok" if report.part1_containment else "VIOLATED"))
        print("part 2 (per-region counts agree): "
              + ("ok" if report.part2_agreement else "DISAGREEMENT"))
    return 0 if (report.part1_containment and report.part2_agreement) else 2


def _cmd_track(args) -> int:
    a = parse_matrix(args.matrix)
    trace = track(a, epsilon=args.epsilon)
    rs = connected_regions(gershgorin_disks(a))
    if args.json:
        payload = {
            "epsilon": trace.step_epsilon,
            "t_values": list(trace.t_values),
            "spectra": [[[v.real, v.imag] for v in row]
                        for row in trace.spectra],
            "region_counts": [list(row) for row in trace.region_counts],
        }
        print(json.dumps(payload, indent=2))
        return 0
    steps = len(trace.t_values) - 1
    print(f"epsilon {trace.step_epsilon:.12g}, accepted {steps} step(s) "
          f"({len(trace.t_values)} grid points)")
    for r, region in enumerate(rs.regions):
        column = {row[r] for row in trace.region_counts}
        if len(column) == 1:
            print(f"region {r}: count {column.pop()} at every t")
        else:
            print(f"region {r}: count varies across t: "
                  f"{[row[r] for row in trace.region_counts]}")
    final = ", ".join(_fmt_complex(v) for v in trace.spectra[-1])
    print(f"final spectrum: {final}")
    return 0


def _cmd_plot(args) -> int:
    a = parse_matrix(args.matrix)
    out = Path(args.out) if args.out else Path(args.matrix).with_suffix(".svg")
    svg = render_svg(a, inflation=args.inflation)
    try:
        out.write_text(svg, encoding="utf-8")
    except OSError as err:
        raise MatrixFileError(f"cannot write {out}: {err}") from err
    print(f"wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gershgorin",
        description="Localize eigenvalues with Gershgorin disks and verify "
                    "the per-region counts by independent routes.")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized probes (reserved; the "
                             "commands below are deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("matrix", help="path to a JSON matrix file")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")

    p_disks = sub.add_parser("disks", help="print the Gershgorin disks")
    add_common(p_disks)
    p_disks.set_defaults(func=_cmd_disks)

    p_regions = sub.add_parser("regions",
                               help="print the connected regions and gap")
    add_common(p_regions)
    p_regions.set_defaults(func=_cmd_regions)

    p_report = sub.add_parser(
        "report", help="verify per-region counts by all routes")
    add_common(p_report)
    p_report.add_argument("--inflation", type=float, default=None,
                          help="contour inflation (default: gap/3)")
    p_report.add_argument("--epsilon", type=float, default=None,
                          help="homotopy step acceptance (default: gap/3)")
    p_report.set_defaults(func=_cmd_report)

    p_track = sub.add_parser(
        "track", help="track matched eigenvalue chains along the homotopy")
    add_common(p_track)
    p_track.add_argument("--epsilon", type=float, default=None,
                         help="step acceptance (default: gap/3)")
    p_track.set_defaults(func=_cmd_track)

    p_plot = sub.add_parser("plot", help="emit an SVG plot")
    p_plot.add_argument("matrix", help="path to a JSON matrix file")
    p_plot.add_argument("--out", default=None,
                        help="output path (default: matrix path with .svg)")
    p_plot.add_argument("--inflation", type=float, default=None,
                        help="region boundary inflation (default: gap/3)")
    p_plot.set_defaults(func=_cmd_plot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixFileError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except GershgorinError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
