#!/usr/bin/env python3
# Regenerates tests/oracle_values.hpp from closed forms in 50-digit arithmetic.
import itertools
import mpmath as mp

mp.mp.dps = 50
PI = mp.pi
out = []


def num(x):
    return mp.nstr(mp.chop(mp.mpf(x), tol=mp.mpf(10)**-40), 20, min_fixed=-30, max_fixed=30)


def sigma(L1, L2, L3, k1, k2, k3, em=1):
    return 4 * PI**2 / em * (mp.mpf(k1)**2 / L1**2 + mp.mpf(k2)**2 / L2**2 + mp.mpf(k3)**2 / (4 * L3**2))


# unit cube, l3+ = l3- = 0.5, cutoff 40
rows = []
for prov, L3 in (("Full", 1), ("Upper", mp.mpf("0.5")), ("Lower", mp.mpf("0.5"))):
    for k1, k2, k3 in itertools.product(range(4), range(4), range(6)):
        v = sigma(1, 1, L3, k1, k2, k3)
        if v <= 40:
            rows.append((v, k1, k2, k3, prov))
order = {"Full": 0, "Upper": 1, "Lower": 2}
rows.sort(key=lambda r: (r[0], r[1], r[2], r[3], order[r[4]]))
out.append("struct CubeEntry { double value; int k1, k2, k3; Provenance prov; };")
out.append("inline const CubeEntry kUnitCubeSpectrum40[] = {")
for v, k1, k2, k3, p in rows:
    out.append(f"    {{{num(v)}, {k1}, {k2}, {k3}, Provenance::{p}}},")
out.append("};")

out.append(f"inline constexpr double kPiSquared = {num(PI**2)};")
out.append(f"inline constexpr double kFourPiSquared = {num(4 * PI**2)};")
out.append(f"inline constexpr double kUpperAsym001 = {num(PI**2 / mp.mpf('0.36'))};")
out.append(f"inline constexpr double kDistOmega2Five = {num(PI**2 - 5)};")
# Faraday residual of the Helmholtz-only mode, k1 = 1, unit cube: 2 pi sqrt(1/2)
out.append(f"inline constexpr double kHelmholtzOnlyFaraday = {num(2 * PI * mp.sqrt(mp.mpf(1) / 2))};")

# second-order FD Laplacian eigenvalues, n = 64, L = 1
n = 64
h = mp.mpf(1) / (n + 1)
out.append("inline constexpr double kDirichlet64[] = {" + ", ".join(num(4 / h**2 * mp.sin(PI * k * h / 2)**2) for k in (1, 2, 3)) + "};")
h = mp.mpf(1) / n
out.append("inline constexpr double kNeumann64[] = {" + ", ".join(num(4 / h**2 * mp.sin(PI * k / (2 * n))**2) for k in (0, 1, 2)) + "};")
out.append("inline constexpr double kPeriodic64[] = {" + ", ".join(num(4 / h**2 * mp.sin(PI * k / n)**2) for k in (0, 1, 1, 2, 2)) + "};")


# first-derivative weights, nodes 0..6 (unit spacing), at x0 = 0 and x0 = 3
def weights(nodes, x0):
    A = mp.matrix(len(nodes), len(nodes))
    for i in range(len(nodes)):
        for j, x in enumerate(nodes):
            A[i, j] = mp.mpf(x - x0)**i
    b = mp.matrix(len(nodes), 1)
    b[1] = 1
    return mp.lu_solve(A, b)


for tag, x0 in (("Edge", mp.mpf(0)), ("Centre", mp.mpf(3))):
    w = weights(list(range(7)), x0)
    out.append(f"inline constexpr double kFd7{tag}[] = {{" + ", ".join(num(w[i]) for i in range(7)) + "};")

# quadratic extrapolation to the face from midpoints at 1/2, 3/2, 5/2
out.append("inline constexpr double kExtrap3[] = {1.875, -1.25, 0.375};")

# bulk (0,0,1), l3- = 0.4, l3+ = 0.6, omega = pi: E2(x3) = -pi sin(pi (x3 + 0.4))
out.append(f"inline constexpr double kBulk001E2At0 = {num(-PI * mp.sin(PI * mp.mpf('0.4')))};")
# H1 = (i pi)^-1 pi^2 cos(pi (x3 + 0.4)) -> imaginary part at x3 = 0
out.append(f"inline constexpr double kBulk001H1ImAt0 = {num(-PI * mp.cos(PI * mp.mpf('0.4')))};")

print("#pragma once\n// generated by tests/oracle/gen_oracle_values.py; do not edit\n")
print('#include "polmax/spectrum_modes.hpp"\n')
print("namespace polmax::oracle_values {\n")
print("\n".join(out))
print("\n}  // namespace polmax::oracle_values")
