"""Extended-precision reference implementations (mpmath), written from the
formulas directly and sharing no code with the package."""

import mpmath as mp

DPS = 40
# exact zeros (e.g. at Jacobi roots) are accepted once below 2^-ZEROPREC
ZEROPREC = 400


def _c(z):
    return mp.mpc(complex(z).real, complex(z).imag)


def hyp2f1_terminating(n, b, c, x):
    with mp.workdps(DPS):
        x = _c(x)
        total = mp.mpc(0)
        for k in range(n + 1):
            total += mp.rf(-n, k) * mp.rf(b, k) / (mp.rf(c, k) * mp.factorial(k)) * x**k
        return complex(total)


def _mp_jacobi(n, a, b, x):
    # mpmath's hypergeometric form needs a + 1 off the non-positive integers;
    # otherwise use the symmetry P_n^(a,b)(x) = (-1)^n P_n^(b,a)(-x)
    if a == int(a) and a + 1 <= 0:
        return (-1) ** n * mp.jacobi(n, b, a, -x, zeroprec=ZEROPREC)
    return mp.jacobi(n, a, b, x, zeroprec=ZEROPREC)


def jacobi(n, a, b, x):
    with mp.workdps(DPS):
        return complex(_mp_jacobi(n, a, b, _c(x)))


def log_gamma(x):
    with mp.workdps(DPS):
        return float(mp.loggamma(x))


def sigma_density(gamma, theta):
    with mp.workdps(DPS):
        g = mp.mpf(gamma)
        const = 2**g * mp.gamma(g / 2 + 1) ** 2 / mp.gamma(g + 1)
        return float(const * mp.sin(mp.mpf(theta) / 2) ** g / (2 * mp.pi))


def circle_integral(gamma, f):
    """``int f dsigma_gamma`` by adaptive mpmath quadrature; ``f`` takes an mp angle."""
    with mp.workdps(25):
        g = mp.mpf(gamma)
        const = 2**g * mp.gamma(g / 2 + 1) ** 2 / mp.gamma(g + 1) / (2 * mp.pi)
        val = mp.quad(lambda t: const * mp.sin(t / 2) ** g * f(t), [0, mp.pi, 2 * mp.pi])
        return complex(val)


def phi_bergman(n, gamma, z):
    with mp.workdps(DPS):
        g = mp.mpf(gamma)
        c = mp.sqrt(g * mp.gamma(g + 1 + n) / (mp.pi * mp.gamma(g + 1) * mp.factorial(n)))
        return complex(c * _c(z) ** n)


def _mp_phi_eigen(n, gamma, m, z):
    z = _c(z)
    g = mp.mpf(gamma)
    gp = g - 2 * m
    if z == 0:
        # only the n = m function is nonzero at the origin; P_m^(0, b)(1) = 1
        return (-1) ** m * mp.sqrt(gp / mp.pi) if n == m else mp.mpc(0)
    s = abs(z) ** 2
    c = (-1) ** n * mp.sqrt(gp / mp.pi) * mp.sqrt(
        mp.factorial(n) * mp.gamma(g - m + 1) / (mp.factorial(m) * mp.gamma(gp + n + 1))
    )
    return c * (1 - s) ** (-m) * mp.conj(z) ** (m - n) * _mp_jacobi(n, m - n, gp, 1 - 2 * s)


def phi_eigen(n, gamma, m, z):
    with mp.workdps(DPS):
        return complex(_mp_phi_eigen(n, gamma, m, z))


def ket(n, gp, theta):
    with mp.workdps(DPS):
        gp = mp.mpf(gp)
        x = 1 - mp.expj(mp.mpf(theta))
        f = mp.hyp2f1(-n, gp / 2 + 1, gp + 1, x, zeroprec=ZEROPREC)
        return complex(mp.sqrt(mp.rf(gp + 1, n) / mp.factorial(n)) * f)


def cs_closed_m(gamma, m, z, theta):
    with mp.workdps(DPS):
        z = _c(z)
        g = mp.mpf(gamma)
        e = mp.expj(mp.mpf(theta))
        r = 1 - abs(z) ** 2
        b = 1 - z * e
        pre = mp.sqrt(mp.gamma(g - m + 1) / (mp.factorial(m) * mp.gamma(g - 2 * m + 1)))
        x = r * (1 - e) / ((1 - mp.conj(z)) * b)
        val = (
            pre * r ** ((g + 1) / 2) * (1 - z) ** (-g / 2) * b ** (-g / 2 - 1)
            * ((mp.conj(z) - 1) * b / r) ** m
            * mp.hyp2f1(-m, g / 2 - m + 1, 1 + g - 2 * m, x, zeroprec=ZEROPREC)
        )
        return complex(val)


def cs_series(gamma, m, z, theta, n_terms=400):
    """Defining expansion summed to ``n_terms`` at extended precision."""
    with mp.workdps(DPS):
        zc = _c(z)
        g = mp.mpf(gamma)
        gp = g - 2 * m
        x = 1 - mp.expj(mp.mpf(theta))
        total = mp.mpc(0)
        for n in range(n_terms):
            k = mp.sqrt(mp.rf(gp + 1, n) / mp.factorial(n)) * mp.hyp2f1(-n, gp / 2 + 1, gp + 1, x, zeroprec=ZEROPREC)
            total += _mp_phi_eigen(n, gamma, m, zc) * k
        kd = gp / mp.pi * (1 - abs(zc) ** 2) ** (-1 - g)
        return complex(total / mp.sqrt(kd))
