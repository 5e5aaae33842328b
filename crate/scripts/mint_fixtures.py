#!/usr/bin/env python3
"""Mint high-precision reference values for the test suite.

Uses mpmath at 40 significant digits. Output columns:
function,re_in,im_in,re_out,im_out,digits
"""
import sys
import mpmath as mp

mp.mp.dps = 40
DIGITS = 30
rows = []


def emit(name, z, w):
    z = mp.mpc(z)
    w = mp.mpc(w)
    rows.append((name, z.real, z.imag, w.real, w.imag))


def xi1(s):
    return mp.pi ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s)


def log_xi1(s):
    # log|xi1| and principal arg, evaluated without underflow
    val = -s / 2 * mp.log(mp.pi) + mp.loggamma(s / 2) + mp.log(mp.zeta(s))
    return mp.mpc(val.real, mp.arg(mp.exp(1j * val.imag)))


def theta1(t):
    t = mp.mpf(t)
    return -t * mp.log(mp.pi) + mp.loggamma(mp.mpf(1) / 2 + 1j * t).imag + mp.arg(mp.zeta(1 + 2j * t))


for z in [1, 0.5, mp.mpc(0.5, 10), mp.mpc(-2.5, 0.3), mp.mpc(3.2, -7.1), mp.mpc(0.125, 250),
          mp.mpc(0.25, 500), mp.mpc(-3, 1000), mp.mpc(3.5, -1050), mp.mpc(0.01, 0.02),
          mp.mpc(-0.7, -4), mp.mpc(11.9, 0.5), mp.mpc(-2.5, 0)]:
    emit("log_gamma", z, mp.loggamma(z))

for z in [1, 2, mp.mpc(0.25, 500), mp.mpc(-3.3, 2), mp.mpc(0.7, 0.01), mp.mpc(5, 1000),
          mp.mpc(0.5, 10), mp.mpc(-0.5, 0.5), mp.mpc(-2.75, -1050)]:
    emit("digamma", z, mp.digamma(z))

zeta_pts = [2, 0, mp.mpc(0.5, 14.134725), mp.mpc(0.5, 100), mp.mpc(0.5, 1000), mp.mpc(0.5, 2000),
            mp.mpc(1, 2000), mp.mpc(-5, 300), mp.mpc(3, 400), mp.mpc(0.3, 20), mp.mpc(7, 2100),
            mp.mpc(-6, 50), mp.mpc(0.8, 1999.5), mp.mpc(-2, 1000), mp.mpc(1.5, -812.25),
            mp.mpc(0.25, 1.5), mp.mpc(-1, 0), mp.mpc(4, 90), mp.mpc(0.5, 0), mp.mpc(1.0001, 0)]
for z in zeta_pts:
    emit("zeta", z, mp.zeta(z))
for z in zeta_pts:
    emit("zeta_prime", z, mp.zeta(z, derivative=1))

for z in [2, mp.mpc(0.3, 20), mp.mpc(0.5, 6), mp.mpc(-1.5, 3), mp.mpc(2.7, -11), mp.mpc(0.5, 0)]:
    emit("xi1", z, xi1(z))

for z in [mp.mpc(0.5, 200), mp.mpc(1, 2000), mp.mpc(-1, 900), mp.mpc(2, 1500), mp.mpc(0.75, 834.5)]:
    emit("log_xi1", z, log_xi1(z))

for z in [mp.mpc(0.7, 30), mp.mpc(0.25, 1000), mp.mpc(1.3, 417.3), mp.mpc(-0.2, 2000)]:
    s = mp.mpc(z)
    ld = -mp.log(mp.pi) / 2 + mp.digamma(s / 2) / 2 + mp.zeta(s, derivative=1) / mp.zeta(s)
    emit("logderiv_xi1", z, ld)

for t in [3, 10, 50, 100, 500, 1000]:
    emit("theta1", t, theta1(t))


def tplus_line(t):
    return mp.cos(theta1(t))


def tminus_line(t):
    return mp.sin(theta1(t))


emit("tplus_zero", 1, mp.mpc(0.5, mp.findroot(tplus_line, 6.97)))
emit("tminus_zero", 1, mp.mpc(0.5, mp.findroot(tminus_line, 7.66)))


def tminus_real(x):
    return xi1(2 * x) - xi1(2 * x - 1)


emit("tminus_real_zero", 1, mp.findroot(tminus_real, 3.91))
emit("tminus_real_zero", 2, mp.findroot(tminus_real, -2.91))

for n in range(1, 121):
    emit("zeta_zero", n, mp.zetazero(n))

with open(sys.argv[1], "w") as fh:
    fh.write("function,re_in,im_in,re_out,im_out,digits\n")
    for name, a, b, c, d in rows:
        fh.write("%s,%s,%s,%s,%s,%d\n" % (name, mp.nstr(a, DIGITS), mp.nstr(b, DIGITS),
                                          mp.nstr(c, DIGITS), mp.nstr(d, DIGITS), DIGITS))
