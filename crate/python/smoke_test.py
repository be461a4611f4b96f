"""Smoke test for the golden_calculus extension module.

Build the module first:

    cargo build --release -p golden-py

then run `python3 python/smoke_test.py`. If `golden_calculus` is not
installed, the freshly built shared library under target/ is loaded.
"""

import json
import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path


def load():
    try:
        import golden_calculus

        return golden_calculus
    except ImportError:
        pass
    root = Path(__file__).resolve().parent.parent
    for profile in ("release", "debug"):
        lib = root / "target" / profile / "libgolden_calculus.so"
        if lib.exists():
            tmp = Path(tempfile.mkdtemp())
            shutil.copy(lib, tmp / "golden_calculus.so")
            sys.path.insert(0, str(tmp))
            import golden_calculus

            return golden_calculus
    sys.exit("golden_calculus not found; run `cargo build -p golden-py` first")


gc = load()


def fib(n):
    a, b = 0, 1
    for _ in range(abs(n)):
        a, b = b, a + b
    return a if n >= 0 or n % 2 == 1 else -a


def fib_factorial(n):
    out = 1
    for i in range(1, n + 1):
        out *= fib(i)
    return out


def check_sequences():
    for n in range(-20, 40):
        assert gc.fib(n) == fib(n), n
    assert gc.fib(300) == fib(300)
    for n in range(15):
        for k in range(n + 1):
            want = fib_factorial(n) // (fib_factorial(k) * fib_factorial(n - k))
            assert gc.fibonomial(n, k) == want, (n, k)
    assert [gc.fib_divisor(2, n) for n in range(5)] == [0, 1, 3, 8, 21]
    try:
        gc.fibonomial(2, 3)
    except ValueError:
        pass
    else:
        raise AssertionError("k > n accepted")


def check_golden_int():
    phi = gc.GoldenInt.phi()
    assert phi * phi == phi + gc.GoldenInt(1)
    assert (phi * phi.conj()).a == -1
    assert phi.norm() == -1
    x = gc.GoldenInt(3, 5)
    assert str(x) == "3 + 5phi"
    assert x ** 3 == x * x * x
    assert gc.GoldenInt.phi_pow(10) == gc.GoldenInt(fib(9), fib(10))
    assert gc.GoldenInt.phi_pow(-1) * phi == gc.GoldenInt(1)
    assert len({gc.GoldenInt(1, 2), gc.GoldenInt(1, 2)}) == 1


def check_polynomials():
    assert gc.golden_binomial(2) == [1, -1, -1]
    assert gc.golden_binomial(0) == [1]
    half = Fraction(1, 2)
    assert gc.golden_binomial(1, half) == [1, -half]
    p6 = gc.golden_poly(6)
    assert p6[0] == Fraction(1, 240)
    for n in range(1, 12):
        assert gc.golden_derivative(gc.golden_poly(n, half)) == gc.golden_poly(n - 1, half)
    scale, factors = gc.quadratic_factors(6)
    assert scale == Fraction(1, 240)
    assert factors == [[1, -1, -1], [1, 4, -1], [1, -11, -1]]
    x3 = [1, 0, 0, 0]
    assert gc.golden_translate(x3, Fraction(2)) == gc.golden_binomial(3, 2)


def check_carlitz():
    a2 = gc.CarlitzMatrix(2)
    assert a2.rows() == [[0, 1], [1, 1]]
    assert a2.pow(5).rows() == [[3, 5], [5, 8]]
    a3 = gc.CarlitzMatrix(3)
    assert a3.char_poly() == [1, -2, -2, 1]
    for order in range(1, 8):
        assert gc.CarlitzMatrix(order).char_poly() == gc.golden_binomial(order)
    assert gc.trace_invariant(3, 2) == (8, 8)
    assert gc.det_invariant(3, 2) == (1, 1)
    assert a3.pow(2).trace() == 8 and a3.det() == -1
    assert len(gc.eigen_powers(4)) == 4


def check_verify():
    report = json.loads(gc.verify(["carlitz", "ring"], max_n=5, max_k=3))
    assert report["suite"] == "ring,carlitz"
    assert all(c["failures"] == 0 for c in report["checks"])
    try:
        gc.verify(["nope"])
    except ValueError:
        pass
    else:
        raise AssertionError("unknown suite accepted")


if __name__ == "__main__":
    for check in (check_sequences, check_golden_int, check_polynomials, check_carlitz, check_verify):
        check()
        print(f"ok  {check.__name__}")
    print("python smoke test passed")
