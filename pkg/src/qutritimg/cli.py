"""Command-line pipeline: encode, simulate, decode, roundtrip, diagram."""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .decode import (
    decode_fqri,
    decode_fqrqci,
    decode_fqrri,
    decode_mcqri,
    decode_qrciq,
    fqrqci_measurement_circuits,
)
from .encode import encode_fqri, encode_fqrqci, encode_fqrri, encode_mcqri, encode_qrciq
from .images import GrayImage, read_pgm, read_ppm, write_pgm, write_ppm
from .metrics import mae, psnr
from .simulator import (
    circuit_from_json,
    circuit_to_json,
    diagram,
    histogram_from_csv,
    histogram_to_csv,
    probabilities,
    probabilities_from_csv,
    probabilities_to_csv,
    run,
    sample,
)

_METHODS = {
    "fqri": {"encode": encode_fqri, "gray": True, "qutrits": lambda n: 2 * n + 1},
    "fqrri": {"encode": encode_fqrri, "gray": False, "qutrits": lambda n: 2 * n + 1},
    "fqrqci": {"encode": encode_fqrqci, "gray": False, "qutrits": lambda n: 2 * n + 1},
    "mcqri": {"encode": encode_mcqri, "gray": False, "qutrits": lambda n: 2 * n + 2},
    "qrciq": {"encode": encode_qrciq, "gray": False, "qutrits": lambda n: 2 * n + 5},
}


def _read_image(method: str, path: Path):
    data = path.read_bytes()
    if _METHODS[method]["gray"]:
        return read_pgm(data)
    return read_ppm(data)


def _write_image(image, path: Path):
    if isinstance(image, GrayImage):
        path.write_bytes(write_pgm(image))
    else:
        path.write_bytes(write_ppm(image))


def _variant_paths(out: Path) -> tuple[Path, Path]:
    return out.with_suffix(".m2.json"), out.with_suffix(".m3.json")


def _load_counts(path: Path):
    """Histogram or exact-probability CSV, distinguished by header."""
    text = path.read_text()
    header = text.splitlines()[0].strip() if text.strip() else ""
    if header == "state,probability":
        _, probs = probabilities_from_csv(text)
        return probs
    return histogram_from_csv(text)


def cmd_encode(args) -> int:
    image = _read_image(args.method, Path(args.input))
    enc = _METHODS[args.method]["encode"](image)
    out = Path(args.out)
    out.write_text(circuit_to_json(enc.circuit))
    if args.method == "fqrqci":
        _, c2, c3 = fqrqci_measurement_circuits(enc)
        p2, p3 = _variant_paths(out)
        p2.write_text(circuit_to_json(c2))
        p3.write_text(circuit_to_json(c3))
    return 0


def cmd_simulate(args) -> int:
    circuit = circuit_from_json(Path(args.circuit).read_text())
    state = run(circuit)
    out = Path(args.out)
    if args.exact:
        out.write_text(probabilities_to_csv(circuit.num_qutrits, probabilities(state)))
        return 0
    if args.shots is None:
        raise ValueError("--shots is required unless --exact is given")
    hist = sample(state, args.shots, args.seed)
    out.write_text(histogram_to_csv(hist))
    return 0


def _decode(method: str, n: int, hist, hist2=None, hist3=None):
    if method == "fqri":
        return decode_fqri(hist, n)
    if method == "fqrri":
        return decode_fqrri(hist, n)
    if method == "fqrqci":
        if hist2 is None or hist3 is None:
            raise ValueError("fqrqci decoding needs --hist2 and --hist3")
        return decode_fqrqci(hist, hist2, hist3, n)
    if method == "mcqri":
        return decode_mcqri(hist, n)
    return decode_qrciq(hist, n)


def _report_dict(method: str, n: int, report) -> dict:
    return {
        "method": method,
        "n": n,
        "shots": report.shots_used,
        "clip_events": report.clip_events,
        "missing_states": [list(entry) for entry in report.missing_states],
    }


def cmd_decode(args) -> int:
    hist = _load_counts(Path(args.hist))
    hist2 = _load_counts(Path(args.hist2)) if args.hist2 else None
    hist3 = _load_counts(Path(args.hist3)) if args.hist3 else None
    report = _decode(args.method, args.n, hist, hist2, hist3)
    _write_image(report.image, Path(args.out))
    if args.report:
        Path(args.report).write_text(
            json.dumps(_report_dict(args.method, args.n, report), indent=2)
        )
    return 0


def cmd_roundtrip(args) -> int:
    image = _read_image(args.method, Path(args.input))
    enc = _METHODS[args.method]["encode"](image)
    if args.method == "fqrqci":
        circuits = fqrqci_measurement_circuits(enc)
        hists = [
            sample(run(c), args.shots, args.seed + k) for k, c in enumerate(circuits)
        ]
        report = decode_fqrqci(hists[0], hists[1], hists[2], enc.n)
    else:
        hist = sample(run(enc.circuit), args.shots, args.seed)
        report = _decode(args.method, enc.n, hist)
    out = Path(args.out) if args.out else _default_image_path(args)
    _write_image(report.image, out)
    error = mae(image, report.image)
    ratio = psnr(image, report.image)
    doc = _report_dict(args.method, enc.n, report)
    doc.update(
        {
            "seed": args.seed,
            "mae": error,
            "psnr": None if math.isinf(ratio) else ratio,
            "exact_match": image == report.image,
        }
    )
    Path(args.report).write_text(json.dumps(doc, indent=2))
    return 0


def _default_image_path(args) -> Path:
    ext = ".pgm" if _METHODS[args.method]["gray"] else ".ppm"
    return Path(args.report).with_suffix(ext)


def cmd_diagram(args) -> int:
    circuit = circuit_from_json(Path(args.circuit).read_text())
    sys.stdout.write(diagram(circuit))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qutritimg",
        description="Encode images into qutrit circuits, simulate, and decode.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    method_kwargs = {"choices": sorted(_METHODS), "required": True}

    enc = sub.add_parser("encode", help="image file to circuit JSON")
    enc.add_argument("--method", **method_kwargs)
    enc.add_argument("--input", required=True, help="PGM (fqri) or PPM input")
    enc.add_argument("--out", required=True, help="circuit JSON output path")
    enc.set_defaults(func=cmd_encode)

    sim = sub.add_parser("simulate", help="circuit JSON to histogram CSV")
    sim.add_argument("--circuit", required=True)
    sim.add_argument("--shots", type=int, default=None)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--out", required=True)
    sim.add_argument("--exact", action="store_true", help="write exact probabilities")
    sim.set_defaults(func=cmd_simulate)

    dec = sub.add_parser("decode", help="histogram CSV to image file")
    dec.add_argument("--method", **method_kwargs)
    dec.add_argument("--hist", required=True)
    dec.add_argument("--hist2", help="second measurement histogram (fqrqci)")
    dec.add_argument("--hist3", help="third measurement histogram (fqrqci)")
    dec.add_argument("--n", type=int, required=True, help="image exponent (side = 3^n)")
    dec.add_argument("--out", required=True, help="decoded image path")
    dec.add_argument("--report", help="decode report JSON path")
    dec.set_defaults(func=cmd_decode)

    rt = sub.add_parser("roundtrip", help="encode, simulate and decode in one go")
    rt.add_argument("--method", **method_kwargs)
    rt.add_argument("--input", required=True)
    rt.add_argument("--shots", type=int, required=True)
    rt.add_argument("--seed", type=int, default=0)
    rt.add_argument("--report", required=True, help="report JSON path")
    rt.add_argument("--out", help="decoded image path (default: next to report)")
    rt.set_defaults(func=cmd_roundtrip)

    dia = sub.add_parser("diagram", help="print a text diagram of a circuit")
    dia.add_argument("--circuit", required=True)
    dia.set_defaults(func=cmd_diagram)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
