"""Reference values frozen into the C++ tests.

Every value is a closed form evaluated with mpmath at 70 digits; none comes
from the library under test.
"""
from mpmath import mp, mpf, gamma, pi, log, sqrt, psi, euler, nstr

mp.dps = 70
G = gamma(mpf(1) / 4)
ln2 = log(2)

VALUES = {
    "sun1": -ln2 * G**2 / (4 * pi * sqrt(2 * pi)),
    "sun2": ln2 * G**2 / (4 * pi * sqrt(pi)),
    "tauraso": sqrt(pi) * (pi - 4 * ln2) / (2 * gamma(mpf(3) / 4) ** 2),
    "hk_kp1": 8 - 2 * G**2 / pi**1.5 - (4 * pi**1.5 + 16 * sqrt(pi) * ln2) / G**2,
    "h2k_2km1": sqrt(pi) * (pi + 3 * ln2 - 4) / (2 * G**2) - G**2 * (pi - 3 * ln2 - 2) / (16 * pi**1.5),
    "h2k_kp1": 4 - 3 * G**2 / (2 * pi**1.5) - 2 * sqrt(pi) * (pi + 3 * ln2 - 4) / G**2,
    "choi_chen": (12 - 16 * ln2) / pi,
    "thm4_a": G**2 * (pi - 5 * ln2) / (4 * sqrt(2 * pi**3)),
    "thm4_b": G**2 * (pi - 6 * ln2) / (8 * sqrt(2 * pi**3)),
    "lemniscate_A": G**2 / (4 * sqrt(2 * pi)),
    "lemniscate_B": sqrt(2 * pi**3) / G**2,
    "main_desired": (5 * ln2 - pi) * G**2 / (8 * pi**1.5),
    "e_imag": sqrt(2) * (G**2 / (8 * sqrt(pi)) + pi**1.5 / G**2),
    "gf_half": 8 * sqrt(pi) / G**2,
    "psi_gap": psi(0, mpf(5) / 4) - psi(0, mpf(1) / 2),
}

if __name__ == "__main__":
    for k, v in VALUES.items():
        print(f"{k:18s} {nstr(v, 60)}")
