"""Walk through the figure-eight construction for the slope 20/7.

Builds the parabolic sigma = mu^20 lambda^7, the conjugator h, and the
first three certified witnesses, printing every intermediate exactly.

Run:  python3 demos/demo_fig8.py
"""

from bianchicert.pipeline import (FIG8, bezout_rt, build_h, construct_series,
                                  middle_factor, sigma_from_xi, validate_fig8,
                                  xi_fig8)
from bianchicert.psl2 import render_word


def main() -> None:
    params = validate_fig8(20, 7)
    xi = xi_fig8(params)
    n = xi.norm()
    print(f"slope p/q = {params.p}/{params.q}")
    print(f"xi = {xi}   |xi|^2 = {n}")

    r, t = bezout_rt(3, 4 * n)
    print(f"Bezout: -3*{r} - {4 * n}*({t}) = {-3 * r - 4 * n * t}")

    sigma = sigma_from_xi(xi)
    h = build_h(FIG8, 3, xi, r, t)
    print(f"h = {h.render()}")

    f = middle_factor(FIG8, h, sigma)
    print(f"h sigma^6 h^-1 = {f.render()}   trace = {f.trace()}")

    print()
    for w in construct_series(FIG8, params, range(1, 4)):
        print(f"k = {w.k}")
        print(f"  n_k   = {w.n_k}")
        print(f"  D_k   = {w.D_k}")
        print(f"  word  = {render_word(w.word)}")
        print(f"  alpha = {w.alpha_k}")
        print(f"  beta  = {w.beta_k}")
        print(f"  checks all pass: {w.all_checks_pass()}")


if __name__ == "__main__":
    main()
