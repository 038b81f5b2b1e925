"""Independent sympy oracle for the appendix downward approximations.

Rewrites each input with sympy's own trig expansion (fu / TR8), splits by sign,
substitutes Maclaurin bounds and prints the resulting polynomial. Used once to
freeze expected values into the C++ tests.
"""
import sys
import sympy as sp
from sympy.simplify.fu import TR8

x = sp.symbols('x')

FIXTURES = {
 'a1': ("2*x**7 + 135*sin(x)*cos(x)**2 + (15*x**4 - 135)*sin(x) - 45*x*cos(x)**3 + (90*x**3 + 45*x)*cos(x)", (2,2,1,2,3)),
 'a2': ("(-15309*x**6 + 170100*x**4 - 476280*x**2 + 181440)*sin(x)*cos(x)**2 + (-x**10 + 3843*x**6 - 44100*x**4 + 158760*x**2 - 181440)*sin(x) + (2187*x**7 - 61236*x**5 + 340200*x**3 - 423360*x)*cos(x)**3 + (-1641*x**7 + 46116*x**5 - 264600*x**3 + 423360*x)*cos(x)", (3,)*8),
 'a3': ("(52488*x**7 - 816480*x**5 + 3810240*x**3 - 4354560*x)*cos(x)**3 + (6561*x**8 - 244944*x**6 + 2041200*x**4 - 5080320*x**2 + 1814400)*sin(x)*cos(x)**2 + (x**11 - 39384*x**7 + 614880*x**5 - 2963520*x**3 + 4354560*x)*cos(x) + (-1641*x**8 + 61488*x**6 - 529200*x**4 + 1693440*x**2 - 1814400)*sin(x)", (3,4,1,2,4,4,2,2)),
 'a4': ("x**5 - 360*x + (-30*x**2 + 630)*sin(x) - 270*x*cos(x)", (2,2,2)),
 'a5': ("(x**8 - 21*x**6 + 630*x**4 - 7560*x**2 + 15120)*sin(x) + (3*x**7 - 126*x**5 + 2520*x**3 - 15120*x)*cos(x)", (1,1,2,2)),
 'a6': ("3*x**5 - 20*x - 140*sin(x)*cos(x) + (30*x**2 - 70)*sin(x) + 40*x*cos(x)**2 + 190*x*cos(x)", (1,2,1,2,2)),
 'a7': ("16*x**6 + 135*x*sin(x)*cos(x)**2 + (90*x**3 - 360*x)*sin(x) + 360*cos(x)**3 + (585*x**2 - 360)*cos(x)", (2,3,1,1,2,2)),
}

def taylor(kind, n, t):
    if kind == 'sin':
        return sum((-1)**i * t**(2*i+1) / sp.factorial(2*i+1) for i in range((n-1)//2 + 1))
    return sum((-1)**i * t**(2*i) / sp.factorial(2*i) for i in range(n//2 + 1))

def split(expr):
    expr = sp.expand(TR8(sp.expand(sp.sympify(expr))))
    groups = {}   # (sign, kind, m) -> poly coeff
    poly = 0
    for term in sp.Add.make_args(expr):
        c, rest = term.as_independent(sp.sin, sp.cos)
        if rest == 1:
            poly += term
            continue
        f = rest.func.__name__
        m = sp.simplify(rest.args[0] / x)
        s = '+' if sp.Poly(c, x).coeffs()[0] > 0 else '-'
        groups[(s, f, int(m))] = groups.get((s, f, int(m)), 0) + c
    return groups, poly

def order_key(item):
    (s, kind, m), c = item
    low = min(mon[0] for mon in sp.Poly(c, x).monoms())
    return (0 if s == '+' else 1, low, m, 0 if kind == 'cos' else 1)

def assemble(groups, poly, idx):
    items = sorted(groups.items(), key=order_key)
    P = poly
    for ((s, kind, m), c), l in zip(items, idx):
        if kind == 'sin':
            n = 4*l+3 if s == '+' else 4*l+1
        else:
            n = 4*l+2 if s == '+' else 4*l
        P += c * taylor(kind, n, m*x)
    return sp.Poly(sp.expand(P), x), items

if __name__ == '__main__':
    for name in sys.argv[1:] or FIXTURES:
        expr, idx = FIXTURES[name]
        g, poly = split(expr)
        P, items = assemble(g, poly, idx)
        print(name, [k for k, _ in items])
        print('  P =', P.as_expr())
        print('  P(pi/2) =', sp.N(P.as_expr().subs(x, sp.pi/2), 12), ' P(1) =', sp.N(P.as_expr().subs(x, 1), 12))
