"""Scratch oracle run: validate specfun against mpmath, print frozen values."""
import math
import mpmath as mp

from zetacasimir import specfun as sf

mp.mp.dps = 30

print("== gamma ==")
worst = 0.0
for z in [1, 0.5, -1.5, 2.5, 10, 25, 50, -3.5, 0.1, 1+1j, 3+4j, -2.5+7j,
          0.5+50j, 12-9j, -0.5-20j, 49+3j]:
    mine = sf.gamma(z)
    ref = complex(mp.gamma(z))
    rel = abs(mine - ref) / abs(ref)
    worst = max(worst, rel)
    if rel > 1e-13:
        print(f"  gamma({z}) rel={rel:.2e}  mine={mine}  ref={ref}")
print(f"  worst rel: {worst:.3e}")
print(f"  Gamma(-3/2) = {sf.gamma(-1.5).real!r}  vs 4*sqrt(pi)/3 = {4*math.sqrt(math.pi)/3!r}")
print(f"  rel: {abs(sf.gamma(-1.5).real - 4*math.sqrt(math.pi)/3)/(4*math.sqrt(math.pi)/3):.2e}")

print("== riemann zeta ==")
worst = 0.0
for s in [2, 3, 4, 0.5, -0.5, -3, -1, 1.5, 0.5+14.134j, 0.5+100j, 0.5+1000j,
          0.5+2000j, -2.5+9j, 3+50j, -9.5+99j, 0.25+5j, 9.5-40j]:
    r = sf.riemann_zeta(s)
    ref = complex(mp.zeta(s))
    err = abs(r.value - ref)
    worst = max(worst, err)
    flag = "" if err <= max(r.abs_err, 1e-12) else "  <-- EXCEEDS"
    if err > 1e-13:
        print(f"  zeta({s}): abs err={err:.2e} claimed={r.abs_err:.2e}{flag}")
print(f"  worst abs err: {worst:.3e}")
print(f"  zeta(0)={sf.riemann_zeta(0).value}, zeta(-1)={sf.riemann_zeta(-1).value.real!r} (exp {-1/12!r})")
print(f"  zeta(-3)={sf.riemann_zeta(-3).value.real!r} (exp {1/120!r})")
print(f"  zeta(-2k)={[sf.riemann_zeta(-2*k).value for k in range(1,6)]}")

print("== vartheta ==")
for s in [0.5, -1.0, -3.0, 0.3+7j, -0.5+2j]:
    th = sf.vartheta(s)
    ref = complex((2*mp.pi)**mp.mpf(s.real if isinstance(s, float) else 0) if False else
                  (2*mp.pi)**mp.mpc(s) * mp.gamma(1-mp.mpc(s)) / (mp.gamma(1-mp.mpc(s)/2)*mp.gamma(mp.mpc(s)/2)))
    print(f"  vartheta({s}) = {th}  ref={ref}  rel={abs(th-ref)/abs(ref):.2e}")
print(f"  vartheta(1/2) = {sf.vartheta(0.5)!r} (expect 1)")
print(f"  vartheta(-1)  = {sf.vartheta(-1.0).real!r} (expect {-1/(2*math.pi**2)!r})")
print(f"  vartheta(-3)  = {sf.vartheta(-3.0).real!r} (expect {3/(4*math.pi**4)!r})")
print(f"  even limit vartheta(2) = {sf.vartheta_even_limit(1)!r} (expect {-2*math.pi**2!r})")

print("== reflection residual grid ==")
for sig in [-2, -1, 0, 1, 2, 3]:
    for t in [0, 1, 5, 10, 50]:
        s = complex(sig, t)
        if s in (0+0j, 1+0j):
            continue
        try:
            z = sf.riemann_zeta(s).value
            th = sf.vartheta(s)
            z1 = sf.riemann_zeta(1-s).value
            resid = abs(z - th*z1) / (1 + abs(z))
            if resid > 1e-10:
                print(f"  s={s}: resid={resid:.2e}  <-- FAIL")
        except Exception as e:
            print(f"  s={s}: {type(e).__name__}: {e}")

print("== hurwitz ==")
worst = 0.0
for (s, a) in [(3, 1.0), (2, 0.5), (-2, 1.0), (4, 10001.0), (2.5+3j, 0.25),
               (-4, 7.5), (-0.5+10j, 3.0), (6, 2.0), (-9.5, 0.7), (2, 101.0)]:
    r = sf.hurwitz_zeta(s, a)
    ref = complex(mp.zeta(mp.mpc(s), a))
    err = abs(r.value - ref)
    worst = max(worst, err)
    if err > max(r.abs_err, 1e-12):
        print(f"  hurwitz({s},{a}): err={err:.2e} claimed={r.abs_err:.2e} <-- EXCEEDS")
print(f"  worst abs err: {worst:.3e}")
print(f"  hurwitz(2, 0.5) = {sf.hurwitz_zeta(2, 0.5).value.real!r} (expect pi^2/2 = {math.pi**2/2!r})")

print("== polygamma ==")
for (m, x) in [(1, 1.0), (2, 3.0), (3, 10.0), (3, 51.0), (1, 101.0), (6, 11.0)]:
    mine = sf.polygamma(m, x)
    ref = float(mp.polygamma(m, x))
    print(f"  psi_{m}({x}) rel={abs(mine-ref)/abs(ref):.2e}")

print("== polygamma asymptotic vs exact ==")
for (d, x) in [(1, 100.0), (3, 50.0), (2, 1000.0), (4, 20.0), (6, 15.0)]:
    r = sf.polygamma_asymptotic(d, x)
    exact = sf.polygamma(d, x + 1.0)
    diff = abs(r.value.real - exact)
    print(f"  d={d} x={x}: diff={diff:.2e}  claimed first-neglected={r.abs_err:.2e}  ok={diff <= r.abs_err*1.5 + 1e-16}")

print("== harmonic ==")
print(f"  H_3(2) = {sf.harmonic_number(3, 2).real!r} (expect {49/36!r})")
print(f"  H_3(-2) = {sf.harmonic_number(3, -2).real!r} (expect 14)")
for n in [1, 2, 5, 20]:
    for s in [-4, -3, -2, 2, 3, 4]:
        lit = sum(k**(-float(s)) for k in range(1, n+1))
        cont = sf.harmonic_number(n, s).real
        if abs(lit - cont) > 1e-10:
            print(f"  n={n} s={s}: literal={lit} cont={cont} <-- FAIL")

print("== dirichlet beta ==")
print(f"  beta(1) = {sf.dirichlet_beta(1.0)!r} (pi/4 = {math.pi/4!r})")
print(f"  beta(2) = {sf.dirichlet_beta(2.0)!r} (Catalan = {float(mp.catalan)!r})")
print(f"  beta(1.5) = {sf.dirichlet_beta(1.5)!r} (ref {float(mp.re(mp.mpf(1)/1 if False else sum(mp.mpf(-1)**n*(2*n+1)**mp.mpf(-1.5) for n in range(200000))))!r})")
print(f"  beta(3) = {sf.dirichlet_beta(3.0)!r} (pi^3/32 = {math.pi**3/32!r})")

print("== frozen oracle values for tests ==")
z2 = sf.riemann_zeta(2).value.real
z3 = sf.riemann_zeta(3).value.real
z32 = sf.riemann_zeta(1.5).value.real
b2 = sf.dirichlet_beta(2.0)
b3 = sf.dirichlet_beta(3.0)
b32 = sf.dirichlet_beta(1.5)
print(f"  4*zeta(2)*beta(2)   = {4*z2*b2!r}")
print(f"  4*zeta(3)*beta(3)   = {4*z3*b3!r}")
print(f"  4*zeta(3/2)*beta(3/2) = {4*z32*b32!r}")
print(f"  zeta(3/2) = {z32!r}, beta(3/2) = {b32!r}")
print(f"  U(1,1) = pi/24 - (1/8pi) zeta(3/2) beta(3/2) = {math.pi/24 - z32*b32/(8*math.pi)!r}")
