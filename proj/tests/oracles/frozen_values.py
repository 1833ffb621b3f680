"""Independent high-precision oracle for the frozen constants used in the C++ tests.

Every quantity is computed from its defining series or integral with mpmath at
40 significant digits; nothing here shares code with the library.
Run: python3 tests/oracles/frozen_values.py
"""
from mpmath import mp, mpf, pi, sin, cos, cot, exp, sqrt, nsum, inf, quad, findroot, log, zeta

mp.dps = 40


# Series are summed through mpmath's Hurwitz zeta: nsum's default extrapolation is off by
# percent-level amounts on algebraically slow series such as s = 1.1.
def lam(s, a):
    return 2 ** (-s) * zeta(s, a + mpf(1) / 2)


def sinc(x):
    return mpf(1) if x == 0 else sin(pi * x) / (pi * x)


def one_sided(p, x, first_above, last_below):
    # sum over n >= first_above and n <= last_below of |sinc(x - n)|^p, non-integer x
    s = abs(sin(pi * x)) ** p / pi ** p
    return s * (zeta(p, first_above - x) + zeta(p, x - last_below))


def full_power_sum(p, x):
    if x == int(x):
        return mpf(1)
    n0 = int(mp.floor(x))
    return one_sided(p, x, n0 + 1, n0)


def h_sum(p, N, x):
    # every n with |x - n| > N
    above = int(mp.floor(x + N)) + 1
    below = int(mp.ceil(x - N)) - 1
    return one_sided(p, x, above, below)


def sinc_pow_integral(alpha):
    # int_R |sinc x|^alpha dx, periods summed with quadosc-like splitting
    f = lambda x: abs(sin(pi * x) / (pi * x)) ** alpha if x != 0 else mpf(1)
    body = 2 * quad(f, [0] + list(range(1, 201)))
    tail = 2 * pi ** (-alpha) * quad(lambda u: abs(sin(pi * u)) ** alpha * zeta(alpha, 200 + u), [0, 1])
    return body + tail


def show(name, v):
    print(f"{name:45s} {mp.nstr(v, 20)}")


show("lambda(21.2069;1)", lam(mpf('21.2069'), 1))
show("lambda(2;1)", lam(2, 1))
show("lambda(1.1;0)", lam(mpf('1.1'), 0))
show("lambda(1.5;3)", lam(mpf('1.5'), 3))
show("lambda(5;2.5)", lam(5, mpf('2.5')))
show("full_power_sum(1.5, 0.5)", full_power_sum(mpf('1.5'), mpf('0.5')))
show("full_power_sum(3, 0.3)", full_power_sum(3, mpf('0.3')))
show("h_sum(2,2,0.5)", h_sum(2, 2, mpf('0.5')))
show("h_sum(3,1,0.7)", h_sum(3, 1, mpf('0.7')))
show("h_sum(1.5,4,0.62)", h_sum(mpf('1.5'), 4, mpf('0.62')))
show("h_sum(27,2,0.6)", h_sum(27, 2, mpf('0.6')))
p, k, x = 4, 3, mpf('0.75')
show("psi(p=4,k=3,x=.75)", sin(pi * x) ** p * ((k - x) ** -p + (k + x - 1) ** -p))
show("sinc^4 terms n=3,n=-2 at .75", sinc(x - 3) ** 4 + sinc(x + 2) ** 4)
for kk in (2, 10):
    show(f"A_{kk}", findroot(lambda t: cot(pi * t) + 1 / (pi * (kk - t)), mpf('0.6')))
show("pp_constant(d=1,r=2)", (8 / (2 * pi)) * (exp(pi) - 1) / pi)
show("pp_constant(d=2,r=2)", ((8 / (2 * pi)) * (exp(pi) - 1) / pi) ** 2)
show("cp(1.5)", 1 + (2 / pi) ** mpf('1.5') * 3)
show("sharp_tail(2,1)", 1 - 8 / pi ** 2)
show("l2 bound (1)", sqrt(1 - 8 / pi ** 2))
show("l2 bound (1,1)", sqrt(1 - (8 / pi ** 2) ** 2))
show("l2 bound (3,5)", sqrt(1 - (1 - 8 / pi ** 2 * lam(2, 3)) * (1 - 8 / pi ** 2 * lam(2, 5))))
for a in (mpf('1.5'), 2, 3, 4, mpf('2.1'), mpf('1.0495')):
    show(f"int |sinc|^{a}", sinc_pow_integral(a))
show("int sinc^4(x/2)", 2 * sinc_pow_integral(4))
# sample sums used by the Plancherel-Polya check
show("sum |sinc(n-0.25)|^1.5", full_power_sum(mpf('1.5'), mpf('0.25')))
# n = 3j + r: the residue classes r = 1, 2 are shifted zeta sums
show("sum |sinc(n/3)|^3", 1 + sum(abs(sin(pi * r / 3)) ** 3 / pi ** 3 *
                                  (zeta(3, mpf(r) / 3) + zeta(3, 1 - mpf(r) / 3)) for r in (1, 2)))
# second derivative of the true sinc tail sum at 1/2 (finite differences, 5-point)
hh = mpf('1e-6')
for (pp_, NN) in ((2, 1), (30, 1), (10, 2)):
    f = lambda t: h_sum(pp_, NN, t)
    d2 = (-f(mpf(.5) + 2 * hh) + 16 * f(mpf(.5) + hh) - 30 * f(mpf(.5)) + 16 * f(mpf(.5) - hh) - f(mpf(.5) - 2 * hh)) / (12 * hh ** 2)
    show(f"pi^p * h''({pp_},{NN})(1/2)", pi ** pp_ * d2)
    show(f"closed form ({pp_},{NN})", 2 ** (pp_ + 1) * pp_ * (4 * (pp_ + 1) * lam(pp_ + 2, NN) - pi ** 2 * lam(pp_, NN)))


# finite combination 1*sinc(x) + 0.5*sinc(x-1) - 0.25*sinc(x+2): cells to L, then the
# cell-mean approximation of the far tail (error O(L^{-q-1}))
def comb(x):
    return sinc(x) + mpf('0.5') * sinc(x - 1) - mpf('0.25') * sinc(x + 2)


def comb_power_integral(q, L=3000):
    mp.dps = 20
    body = quad(lambda x: abs(comb(x)) ** q, list(range(-L, L + 1)))
    r = lambda x: abs(1 / x - mpf('0.5') / (x - 1) - mpf('0.25') / (x + 2)) ** q
    mean = mp.gamma((q + 1) / 2) / (sqrt(pi) * mp.gamma(q / 2 + 1))
    tail = mean * pi ** (-q) * (quad(r, [L, inf]) + quad(r, [-inf, -L]))
    mp.dps = 40
    return body + tail


for q in (mpf('1.5'), 3):
    show(f"int |comb|^{q}", comb_power_integral(q))
