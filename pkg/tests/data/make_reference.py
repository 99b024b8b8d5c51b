"""Regenerate ``reference.json`` from mpmath at 40 significant digits.

Run from the repository root with ``python tests/data/make_reference.py``.
The tests read the frozen file and never call this script; a small
freshness test recomputes a few entries when mpmath is available.
"""

from __future__ import annotations

import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 40
OUT = Path(__file__).with_name("reference.json")


def legendre_p(nu, mu, z):
    return mp.re(mp.legenp(nu, mu, z, type=3))


def legendre_qhat(nu, mu, z):
    # strip the exp(i mu pi) phase of the standard second solution
    return mp.re(mp.legenq(nu, mu, z, type=3) * mp.exp(-1j * mp.pi * mu))


def ferrers_p(nu, mu, x):
    return mp.re(mp.legenp(nu, mu, x, type=2))


def ferrers_q(nu, mu, x):
    return mp.re(mp.legenq(nu, mu, x, type=2))


FUNCS = {
    "legendre-p": legendre_p,
    "legendre-qhat": legendre_qhat,
    "ferrers-p": ferrers_p,
    "ferrers-q": ferrers_q,
}


def frac(s: str):
    return mp.mpf(mp.fraction(*map(int, s.split("/")))) if "/" in s else mp.mpf(s)


def special_values() -> dict:
    f = mp.mpf
    return {
        "gamma_5_4": mp.quad(lambda t: t ** f("0.25") * mp.exp(-t), [0, 1, mp.inf]),
        "K_0.5": mp.quad(lambda t: 1 / mp.sqrt(1 - f("0.5") * mp.sin(t) ** 2), [0, mp.pi / 2]),
        "E_0.5": mp.quad(lambda t: mp.sqrt(1 - f("0.5") * mp.sin(t) ** 2), [0, mp.pi / 2]),
        "dK_0.5": mp.diff(mp.ellipk, f("0.5")),
        "dE_0.5": mp.diff(mp.ellipe, f("0.5")),
        "hyp_1_1_2_m1": mp.log(2),
        "hyp_16_56_54_m1": mp.hyp2f1(f(1) / 6, f(5) / 6, f(5) / 4, -1),
        "hyp_16_56_54_m20": mp.hyp2f1(f(1) / 6, f(5) / 6, f(5) / 4, -20),
        "hyp_14_34_32_0.9": mp.hyp2f1(f(1) / 4, f(3) / 4, f(3) / 2, f("0.9")),
        "hyp_13_23_1_m0.7": mp.hyp2f1(f(1) / 3, f(2) / 3, 1, f("-0.7")),
    }


# (kind, nu, mu, point expression)
FUNCTION_CASES = [
    ("ferrers-p", "-1/2", "0", "0"),
    ("legendre-qhat", "-1/2", "0", "cosh(1)"),
    ("ferrers-p", "1/2", "0", "cos(1)"),
    ("legendre-qhat", "-3/2", "0", "2"),
    ("legendre-qhat", "-3/4", "0", "2"),
    ("legendre-qhat", "-1/4", "0", "2"),
    ("ferrers-q", "-5/6", "0", "0.3"),
    ("ferrers-q", "-1/6", "0", "0.3"),
    ("ferrers-p", "-1/4", "0", "-0.5"),
    ("legendre-p", "-1/4", "0", "cosh(1)"),
    ("legendre-p", "-1/4", "0", "1.5"),
    ("ferrers-p", "-1/6", "1", "cos(1)"),
    ("ferrers-p", "-1/6", "-1/4", "0"),
    ("ferrers-p", "-1/6", "-1/4", "0.5"),
    ("ferrers-p", "-1/6", "-1/4", "cos(pi/3)"),
    ("legendre-p", "-1/6", "-1/4", "cosh(1)"),
    ("legendre-p", "-1/6", "-1/4", "cosh(3)"),
    ("legendre-qhat", "-1/4", "-1/3", "coth(1)"),
    ("legendre-qhat", "-1/4", "-1/3", "coth(2)"),
    ("legendre-qhat", "-1/4", "-1/2", "1.5"),
    ("legendre-qhat", "-1/4", "-1/2", "2"),
    ("legendre-p", "3/2", "2", "2.5"),
    ("ferrers-q", "5/2", "-1", "0.4"),
    ("legendre-p", "0.3", "0.7", "3"),
    ("ferrers-q", "0.3", "0.2", "-0.6"),
    ("ferrers-q", "2", "1", "0.4"),
    ("legendre-qhat", "0.3", "1", "2"),
]

# fractional-degree reduction cases: r, n, m over both signs and kinds
_POINTS = {"legendre-p": "1.7", "legendre-qhat": "2.4",
           "ferrers-p": "0.35", "ferrers-q": "-0.45"}
for _kind, _pt in _POINTS.items():
    for _nu in ("-1/3", "2/3", "-4/3", "-1/4", "7/4", "-5/4", "-1/6", "5/6", "13/6", "1/4", "1/3", "1/6"):
        for _mu in ("0", "1", "-2"):
            FUNCTION_CASES.append((_kind, _nu, _mu, _pt))


def point_value(expr: str):
    return mp.mpf(eval(expr, {"cosh": mp.cosh, "cos": mp.cos, "coth": mp.coth, "pi": mp.pi}))


def function_values() -> list[dict]:
    out = []
    for kind, nu, mu, expr in FUNCTION_CASES:
        x = point_value(expr)
        val = FUNCS[kind](frac(nu), frac(mu), x)
        out.append({"kind": kind, "nu": nu, "mu": mu, "point": expr,
                    "x": float(x), "value": float(val)})
    return out


def application_values() -> dict:
    f = mp.mpf

    def fourier(nu, m, x):
        g = lambda phi: mp.cos(m * phi) * (1 + x * mp.cos(phi)) ** nu
        return mp.quad(g, [0, mp.pi]) / mp.pi

    def laplace(s, m, a):
        g = lambda phi: mp.cos(m * phi) * (1 + a * a - 2 * a * mp.cos(phi)) ** (-s)
        return 2 * mp.quad(g, [0, mp.pi]) / mp.pi

    return {
        "fourier_m14_2_0.6": fourier(f(-1) / 4, 2, f("0.6")),
        "fourier_m16_3_0.8": fourier(f(-1) / 6, 3, f("0.8")),
        "laplace_12_0_0.4": laplace(f(1) / 2, 0, f("0.4")),
        "laplace_32_2_0.3": laplace(f(3) / 2, 2, f("0.3")),
        "laplace_14_1_0.7": laplace(f(1) / 4, 1, f("0.7")),
        "laplace_13_3_0.5": laplace(f(1) / 3, 3, f("0.5")),
    }


def main() -> None:
    data = {
        "special": {k: float(v) for k, v in special_values().items()},
        "functions": function_values(),
        "applications": {k: float(v) for k, v in application_values().items()},
    }
    OUT.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {OUT} with {len(data['functions'])} function values")


if __name__ == "__main__":
    main()
