"""Regenerate src/rosenlab/_gbsym_generated.py from the sympy build.

Run from the repository root:  python tools/generate_background_kernels.py
"""
import pathlib
import sys

import sympy as sp
from sympy.printing.numpy import NumPyPrinter

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from rosenlab import _gbsym  # noqa: E402


def main():
    bundles = _gbsym.build_expressions()
    printer = NumPyPrinter({"fully_qualified_modules": False})
    argnames = "t, r, th, X0, X1, X2, X3, X4, B0, B1, B2, B3, Jp0, Jp1, Jp2, Jp3"
    lines = [
        '"""Generated from the symbolic background-metric build; do not edit by hand.',
        "",
        "Regenerate with tools/generate_background_kernels.py; verified against the",
        'live sympy build in tests/test_background.py."""',
        "import numpy",
        "from numpy import cos, sin",
        "",
    ]
    for name, exprs in bundles.items():
        flat = [_gbsym.placeholder(sp.together(e)) for e in exprs]
        repl, reduced = sp.cse(flat, optimizations="basic")
        body = [f"    {sym} = {printer.doprint(subexpr)}" for sym, subexpr in repl]
        rets = ", ".join(printer.doprint(e) for e in reduced)
        lines.append(f"def {name}({argnames}):")
        lines.append("\n".join(body) if body else "    pass")
        lines.append(f"    return ({rets},)")
        lines.append("")
    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "rosenlab" / "_gbsym_generated.py"
    out.write_text("\n".join(lines))
    print(f"wrote {out} ({out.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
