"""Delta-shell resonances three ways: closed form, exact root, numeric shooting.

The shell lambda*delta(x - L) outside a hard wall admits a transcendental
dispersion relation, a large-lambda closed form, and a one-sided numeric
solve.  Printing all three side by side shows where the closed form starts
to drift as the mode number climbs.
"""

import argparse

import siegert as sg


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--strength", type=float, default=10.0)
    ap.add_argument("--radius", type=float, default=1.0)
    ap.add_argument("--nmodes", type=int, default=3)
    ap.add_argument("--nx", type=int, default=10000)
    args = ap.parse_args()

    p = sg.delta_shell(args.strength, args.radius)
    grid = sg.open_side_grid(p, args.nx)
    print(f"{'n':>2}  {'e approx':>11}  {'e exact':>11}  {'e numeric':>11}"
          f"  {'hw approx':>11}  {'hw exact':>11}  {'hw numeric':>11}")
    for n in range(1, args.nmodes + 1):
        approx = sg.delta_shell_approx(args.strength, args.radius, n)
        exact = sg.delta_shell_exact(args.strength, args.radius, n=n)
        # scan a generous window around the closed-form energy
        window = (0.75 * approx.e_real, 1.25 * approx.e_real)
        try:
            num = sg.solve_one_sided(p, window[0], window[1], grid=grid)
            e_num, hw_num = num.energy.e_real, num.energy.gamma_half
            num_cells = f"  {e_num:>11.6f}" , f"  {hw_num:>11.4e}"
        except sg.NoResonanceError:
            num_cells = f"  {'-':>11}", f"  {'-':>11}"
        print(f"{n:>2}  {approx.e_real:>11.6f}  {exact.e_real:>11.6f}{num_cells[0]}"
              f"  {0.5 * approx.gamma:>11.4e}  {exact.gamma_half:>11.4e}{num_cells[1]}")


if __name__ == "__main__":
    main()
