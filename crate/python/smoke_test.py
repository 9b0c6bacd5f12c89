"""Smoke test for the complex_dirac extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

import cmath
import json
import math

import complex_dirac as cd


def main():
    assert cd.list_cases()[0] == "rosen-morse" and len(cd.list_cases()) == 9

    levels = cd.analytic_levels("rosen-morse", {"v0": 1.0, "ky": 0.0, "nmax": 3})
    assert [e for _, e in levels] == [2.0, 3.0, 4.0], levels
    assert [e for _, e in cd.analytic_levels("lorentz-morse", {"A": 2, "nmax": 2})] == [0.0, 3.0, 4.0]

    # Parabola zero mode: Dirac residual of (psi_A, psi_B) = (psi_-, psi_-) / 2
    grid = cd.Grid(-8.0, 8.0, 4001)
    pot = cd.Potential.shifted_parabola(1.0)
    (mode,) = pot.zero_modes(grid)
    zeros = [0j] * len(grid)
    spinor = cd.SpinorField.from_pm_basis(grid, zeros, mode["field"], 0.0, 0.0)
    r1, r2 = spinor.dirac_residual(pot)
    assert max(r1, r2) < 1e-8, (r1, r2)
    assert cd.classify(mode["field"], grid) == "decaying"
    plus, minus = spinor.to_pm_basis()
    assert max(abs(a - b) for a, b in zip(minus, mode["field"])) < 1e-15

    # Band edge of U = i sin 2x
    eig = cd.band_eigenvalues(1.0, modes=32, bloch_k=0.0, branch="plus")
    assert min(abs(z) for z in eig) < 1e-8

    # Jacobi reflection symmetry
    a, b, y = 0.3 + 0.2j, -1.1 + 0.5j, 0.4 - 0.7j
    lhs = cd.jacobi(3, a, b, -y)
    rhs = -cd.jacobi(3, b, a, y)
    assert cmath.isclose(lhs, rhs, rel_tol=1e-12)

    report = cd.verify_case("lorentz-scarf2", {"A": 3, "B": 1, "C": 0.5})
    assert report.passed, report.notes
    eps = [lvl["eps_oracle"] for lvl in report.levels]
    assert all(math.isclose(e, w, abs_tol=1e-5) for e, w in zip(eps, [0, 5, 8, 9])), eps
    assert json.loads(report.to_json())["case"] == "lorentz-scarf2"

    try:
        cd.verify_case("example9")
    except ValueError as e:
        assert "unknown case" in str(e)
    else:
        raise AssertionError("unknown case accepted")

    print("smoke test passed:", report)


if __name__ == "__main__":
    main()
