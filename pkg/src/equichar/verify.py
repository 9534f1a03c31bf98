"""Self-verification suites: golden characters, duality, oracle agreement,
and the length analysis.

The golden table freezes hand-checked closed forms of the first interesting
spaces; every entry was verified coefficient by coefficient before being
written down here.  Suites return plain check records so both the test suite
and the command line can run them.
"""

import random
from dataclasses import dataclass, field

from .partitions import partitions_of, union
from .qpoly import QPoly
from .symfunc import SCHUR, SymFunc, schur
from .bigraded import BiSymFunc
from .lengths import leading_partition, length_theorem_report, plethysm_leading_partition
from .moduli import CharacterCalculator
from .oracles import expand, jacobi_trudi_to_powersum, oracle_plethysm

SUITES = ("paper-examples", "duality", "oracles", "length-theorem")

# Hand-checked closed forms, keyed (n, k, l); values map (x, y) partition
# pairs to {q-exponent: coefficient}.
KNOWN_CHARACTERS = {
    (5, 0, 1): {
        ((), (5,)): {0: 1, 1: 1, 2: 1},
        ((), (4, 1)): {1: 1},
    },
    (5, 1, 3): {
        ((1,), (4,)): {0: 1, 1: 1, 2: 1},
    },
    (6, 0, 1): {
        ((), (6,)): {0: 1, 1: 2, 2: 2, 3: 1},
        ((), (5, 1)): {1: 1, 2: 1},
        ((), (4, 2)): {1: 1, 2: 1},
    },
    (6, 1, 3): {
        ((1,), (5,)): {0: 1, 1: 2, 2: 2, 3: 1},
        ((1,), (4, 1)): {1: 1, 2: 1},
    },
    (4, 2, 3): {
        ((2,), (2,)): {0: 1, 1: 1},
    },
    (7, 0, 3): {
        ((), (7,)): {0: 1, 1: 1, 2: 2, 3: 1, 4: 1},
        ((), (6, 1)): {1: 1, 2: 1, 3: 1},
        ((), (5, 2)): {2: 1},
    },
    (7, 0, 1): {
        ((), (7,)): {0: 1, 1: 2, 2: 4, 3: 2, 4: 1},
        ((), (6, 1)): {1: 2, 2: 3, 3: 2},
        ((), (5, 2)): {1: 1, 2: 3, 3: 1},
        ((), (4, 3)): {1: 1, 2: 2, 3: 1},
        ((), (4, 2, 1)): {2: 1},
    },
    (8, 0, 3): {
        ((), (8,)): {0: 1, 1: 2, 2: 3, 3: 3, 4: 2, 5: 1},
        ((), (7, 1)): {1: 1, 2: 2, 3: 2, 4: 1},
        ((), (6, 2)): {1: 1, 2: 2, 3: 2, 4: 1},
        ((), (5, 3)): {2: 1, 3: 1},
        ((), (4, 4)): {1: 1, 2: 1, 3: 1, 4: 1},
    },
    (8, 0, 1): {
        ((), (8,)): {0: 1, 1: 3, 2: 6, 3: 6, 4: 3, 5: 1},
        ((), (7, 1)): {1: 2, 2: 6, 3: 6, 4: 2},
        ((), (6, 2)): {1: 2, 2: 7, 3: 7, 4: 2},
        ((), (6, 1, 1)): {2: 1, 3: 1},
        ((), (5, 3)): {1: 1, 2: 5, 3: 5, 4: 1},
        ((), (5, 2, 1)): {2: 2, 3: 2},
        ((), (4, 4)): {1: 1, 2: 3, 3: 3, 4: 1},
        ((), (4, 3, 1)): {2: 2, 3: 2},
        ((), (4, 2, 2)): {2: 1, 3: 1},
    },
}


def known_character(n: int, k: int, l: int) -> BiSymFunc:
    """Build the frozen closed form for (n, k, l) as a Schur-basis value."""
    table = KNOWN_CHARACTERS[(n, k, l)]
    terms = {key: QPoly(coeffs) for key, coeffs in table.items()}
    return BiSymFunc(SCHUR, k, n - k, terms)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.ok)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if not c.ok)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "failed": self.failed,
            "checks": [
                {"name": c.name, "ok": c.ok, **({"detail": c.detail} if c.detail else {})}
                for c in self.checks
            ],
        }


def run_paper_examples(calc: CharacterCalculator | None = None, n_max: int = 0) -> SuiteResult:
    """Recompute every frozen closed form through the recursion."""
    calc = calc or CharacterCalculator()
    result = SuiteResult("paper-examples")
    for (n, k, l), _ in sorted(KNOWN_CHARACTERS.items()):
        computed = calc.character(n, k, l)
        expected = known_character(n, k, l)
        ok = computed == expected
        detail = "" if ok else f"computed {computed}"
        result.checks.append(Check(f"E({n},{k},{l})", ok, detail))
    return result


def run_duality(calc: CharacterCalculator | None = None, n_max: int = 10) -> SuiteResult:
    """Poincare duality: every Schur coefficient of E(n,0,1) is a palindrome
    of degree n-3, and the constant term is the trivial character."""
    calc = calc or CharacterCalculator()
    result = SuiteResult("duality")
    for n in range(3, n_max + 1):
        full = calc.character(n, 0, 1).y_symfunc()
        top = n - 3
        ok = True
        detail = ""
        for lam, c in full.terms.items():
            if c.degree > top:
                ok, detail = False, f"degree overflow at {lam}"
                break
            if c.reflect(top) != c:
                ok, detail = False, f"coefficient of s_{lam} is not palindromic"
                break
        if ok and full.q_coefficient(0) != schur((n,)):
            ok, detail = False, "constant term is not the trivial character"
        result.checks.append(Check(f"n={n}", ok, detail))
    return result


def _random_schur_positive(rng: random.Random, max_degree: int) -> SymFunc:
    degree = rng.randint(1, max_degree)
    parts = partitions_of(degree)
    terms = {}
    for lam in rng.sample(parts, k=min(len(parts), rng.randint(1, 3))):
        terms[lam] = rng.randint(1, 3)
    return SymFunc(SCHUR, degree, terms)


def run_oracles(calc=None, n_max: int = 0, seed: int = 20250815) -> SuiteResult:
    """Kernel against the independent paths: Jacobi-Trudi conversions up to
    degree 8, plethysm against monomial substitution, products against
    expanded polynomial multiplication."""
    rng = random.Random(seed)
    result = SuiteResult("oracles")

    bad = []
    for n in range(0, 9):
        for lam in partitions_of(n):
            if jacobi_trudi_to_powersum(lam) != schur(lam).to_powersum():
                bad.append(lam)
    result.checks.append(
        Check("jacobi-trudi vs murnaghan-nakayama |lam|<=8", not bad, f"{bad}" if bad else "")
    )

    pairs = [
        (lam, mu)
        for a in range(1, 4)
        for b in range(1, 4)
        for lam in partitions_of(a)
        for mu in partitions_of(b)
    ]
    pairs += [((2,), (3,)), ((1, 1), (3,))]
    bad = []
    for lam, mu in pairs:
        nvars = max(sum(lam) * sum(mu), 1)
        kernel = expand(schur(lam).pleth(schur(mu)), nvars)
        direct = oracle_plethysm(schur(lam), schur(mu), nvars)
        if kernel != direct:
            bad.append((lam, mu))
    result.checks.append(
        Check("plethysm vs monomial substitution", not bad, f"{bad}" if bad else "")
    )

    bad_count = 0
    for _ in range(100):
        f = _random_schur_positive(rng, 4)
        g = _random_schur_positive(rng, 4)
        nvars = f.degree + g.degree
        if expand(f * g, nvars) != expand(f, nvars) * expand(g, nvars):
            bad_count += 1
    result.checks.append(
        Check("product vs expanded multiplication (100 random pairs)", bad_count == 0)
    )

    bad = []
    for _ in range(200):
        f = _random_schur_positive(rng, 8)
        g = _random_schur_positive(rng, 8)
        if leading_partition(f * g) != union(leading_partition(f), leading_partition(g)):
            bad.append((f, g))
    result.checks.append(
        Check("leading partition is multiplicative (200 random pairs)", not bad)
    )

    bad = []
    for size in range(1, 5):
        for mu in partitions_of(size):
            for m in range(1, 5):
                predicted = plethysm_leading_partition(mu, m)
                actual = leading_partition(schur(mu).pleth(schur((m,))))
                if predicted != actual:
                    bad.append((mu, m, predicted, actual))
    result.checks.append(
        Check("leading partition of s_mu o s_(m), closed form", not bad, f"{bad}" if bad else "")
    )
    return result


def run_length_theorem(calc: CharacterCalculator | None = None, n_max: int = 8) -> SuiteResult:
    calc = calc or CharacterCalculator()
    result = SuiteResult("length-theorem")
    for n in range(3, n_max + 1):
        report = length_theorem_report(n, calc)
        problems = report.problems()
        result.checks.append(Check(f"n={n}", not problems, "; ".join(problems)))
    return result


def run_suite(name: str, calc: CharacterCalculator | None = None, n_max: int | None = None) -> SuiteResult:
    if name == "paper-examples":
        return run_paper_examples(calc)
    if name == "duality":
        return run_duality(calc, n_max if n_max is not None else 10)
    if name == "oracles":
        return run_oracles()
    if name == "length-theorem":
        return run_length_theorem(calc, n_max if n_max is not None else 8)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
