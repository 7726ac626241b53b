"""Machine-readable command specification for agent onboarding."""

from __future__ import annotations

from gfkit import __version__

_FORMAT = {"name": "--format", "type": "string", "default": "text", "description": "Output format: text, json, or series (series-valued results only)"}
_VERBOSE = {"name": "--verbose", "description": "Emit DEBUG log lines on stderr"}
_ORDER = {"name": "--order", "type": "int", "default": 10, "description": "Truncation order N (coefficients t^0..t^N)"}
_COEFFS = {"name": "--coeffs", "type": "int", "description": "Number of coefficients; same as --order N-1"}
_FILE = {"name": "--file", "type": "string", "description": "Input file, or the name of a built-in fixture"}
_FIXTURE = {"name": "--fixture", "type": "string", "description": "Name of a built-in fixture"}
_COMMON = [_FORMAT, _VERBOSE]
_INPUT = [_FILE, _FIXTURE]
_ORDERED = [_ORDER, _COEFFS]

COMMAND_SPEC: dict = {
    "name": "gfkit",
    "version": __version__,
    "description": (
        "gfkit – exact arithmetic for rational and algebraic generating functions: "
        "transfer matrices, automata, grammars, polynomial systems, catalytic equations, "
        "series branches, guessing and a corpus of end-to-end enumeration checks."
    ),
    "exit_codes": {
        "0": "success",
        "1": "computation error (the input was well formed but the mathematics refused)",
        "2": "usage error (bad flags, unreadable or ill-formed input, with file:line:column)",
        "3": "corpus run finished with at least one failing check",
    },
    "environment": {
        "GFKIT_SCALE": "overrides --scale for corpus runs (small|default)",
        "GFKIT_FORMAT": "default output format (text|json|series)",
        "GFKIT_VERBOSE": "1 enables DEBUG log lines",
        "GFKIT_REPORT_DIR": "directory where corpus run also writes corpus-report.json",
        "GFKIT_DPS": "decimal precision of the certified root finder (default 60)",
    },
    "commands": {
        "help": {
            "description": "Show help for all commands or a specific command.",
            "usage": "gfkit help [<command>]",
            "args": [{"name": "command", "type": "string", "required": False, "description": "Command name to get help for"}],
            "flags": [],
        },
        "spec": {
            "description": "Output this machine-readable command specification as JSON.",
            "usage": "gfkit spec",
            "args": [],
            "flags": [],
        },
        "series": {
            "description": "Truncated power-series arithmetic: add, sub, mul, invert, sqrt, derive, compose, star.",
            "usage": "gfkit series <op> --a X [--b Y] [--order N]",
            "args": [{"name": "op", "type": "string", "required": True, "description": "Operation name"}],
            "flags": [
                {"name": "--a", "type": "string", "description": "Series file, or a rational expression in t"},
                {"name": "--b", "type": "string", "description": "Second operand of add, sub, mul, compose"},
                _ORDER,
                *_COMMON,
            ],
        },
        "expand": {
            "description": "Expand a rational function to a truncated series.",
            "usage": "gfkit expand (--rational F | --file F | --fixture NAME) [--order N | --coeffs N]",
            "args": [],
            "flags": [{"name": "--rational", "type": "string", "description": "Rational expression in t"}, *_INPUT, *_ORDERED, *_COMMON],
        },
        "det": {
            "description": "Fraction-free determinant of a polynomial matrix (one row per line, comma-separated).",
            "usage": "gfkit det --file MATRIX",
            "args": [],
            "flags": [_FILE, *_COMMON],
        },
        "eliminate": {
            "description": "Resultant of two polynomials, or the discriminant of one, with respect to a variable.",
            "usage": "gfkit eliminate (--p P | --file F | --fixture NAME) [--q Q] [--var a]",
            "args": [],
            "flags": [
                {"name": "--p", "type": "string", "description": "First polynomial"},
                {"name": "--q", "type": "string", "description": "Second polynomial; omit for the discriminant"},
                {"name": "--var", "type": "string", "default": "a", "description": "Variable to eliminate"},
                *_INPUT,
                *_COMMON,
            ],
        },
        "walks": {
            "description": "Generating function of walks on a weighted digraph (transfer matrix or Viennot's formula).",
            "usage": "gfkit walks (--file G | --fixture NAME) --start I --targets J [J ...] [--method transfer|viennot]",
            "args": [],
            "flags": [
                {"name": "--start", "type": "int", "default": 1, "description": "Start vertex"},
                {"name": "--targets", "type": "int[]", "description": "Target vertices"},
                {"name": "--method", "type": "string", "default": "transfer", "description": "transfer or viennot"},
                *_INPUT,
                *_ORDERED,
                *_COMMON,
            ],
        },
        "automaton": {
            "description": "Length generating function of the language of a finite automaton.",
            "usage": "gfkit automaton (--file A | --fixture NAME) [--coeffs N] [--determinize]",
            "args": [],
            "flags": [{"name": "--determinize", "description": "Also print the subset-construction DFA"}, *_INPUT, *_ORDERED, *_COMMON],
        },
        "section": {
            "description": "The section sum_n a_(pn+r) t^n of a rational series, as a rational function.",
            "usage": "gfkit section (--rational F | --fixture NAME) --r R --p P",
            "args": [],
            "flags": [
                {"name": "--rational", "type": "string", "description": "Rational expression in t"},
                {"name": "--r", "type": "int", "description": "Residue, 0 <= r < p"},
                {"name": "--p", "type": "int", "description": "Modulus"},
                *_INPUT,
                *_COMMON,
            ],
        },
        "soittola": {
            "description": "Count dominant poles of every section A_(r,p), p <= pmax.",
            "usage": "gfkit soittola (--rational F | --fixture NAME) [--pmax P] [--precision EPS]",
            "args": [],
            "flags": [
                {"name": "--rational", "type": "string", "description": "Rational expression in t"},
                {"name": "--pmax", "type": "int", "default": 1, "description": "Largest modulus"},
                {"name": "--precision", "type": "float", "default": 1e-6, "description": "Modulus separation tolerance"},
                *_INPUT,
                *_COMMON,
            ],
        },
        "asymptotics": {
            "description": "Estimate a_n ~ kappa rho^-n n^d for a rational function or an algebraic branch.",
            "usage": "gfkit asymptotics (--rational F | --equation P | --file P | --fixture NAME) [--n-fit N] [--branch C]",
            "args": [],
            "flags": [
                {"name": "--rational", "type": "string", "description": "Rational expression in t"},
                {"name": "--equation", "type": "string", "description": "Polynomial P(t, a)"},
                {"name": "--n-fit", "type": "int", "default": 500, "description": "Coefficients used for the exponent fit"},
                {"name": "--branch", "type": "string", "description": "Constant term selecting the branch"},
                *_INPUT,
                *_COMMON,
            ],
        },
        "poset": {
            "description": "Linear extensions, P-partition generating function and brute-force check of a natural poset.",
            "usage": "gfkit poset (--file P | --fixture NAME) [--order N] [--classify l1,l2,...]",
            "args": [],
            "flags": [{"name": "--classify", "type": "string", "description": "A P-partition whose compatible extension is printed"}, *_INPUT, *_ORDERED, *_COMMON],
        },
        "cone": {
            "description": "Count non-negative integer points of a halfspace cone by total size.",
            "usage": "gfkit cone (--file H | --fixture NAME) [--order N]",
            "args": [],
            "flags": [*_INPUT, *_ORDERED, *_COMMON],
        },
        "grammar": {
            "description": "Polynomial system and canonical solution of a context-free grammar.",
            "usage": "gfkit grammar (--file G | --fixture NAME) [--order N] [--words]",
            "args": [],
            "flags": [{"name": "--words", "description": "Also count distinct words by brute force (order <= 14)"}, *_INPUT, *_ORDERED, *_COMMON],
        },
        "system": {
            "description": "Canonical solution of a proper polynomial system, optionally via a normal form.",
            "usage": "gfkit system (--file S | --fixture NAME) [--order N] [--normalize quadratic|leading_t]",
            "args": [],
            "flags": [{"name": "--normalize", "type": "string", "description": "Normal form to solve as a cross-check"}, *_INPUT, *_ORDERED, *_COMMON],
        },
        "catalytic": {
            "description": "Solve a one-catalytic-variable equation by iteration; prints G(1; t).",
            "usage": "gfkit catalytic (--file E | --fixture NAME) [--order N]",
            "args": [],
            "flags": [*_INPUT, *_ORDERED, *_COMMON],
        },
        "roots": {
            "description": "Every power-series branch a(t) of P(t, a) = 0 with a rational simple constant term.",
            "usage": "gfkit roots (--equation P | --file P | --fixture NAME) [--order N] [--var a]",
            "args": [],
            "flags": [
                {"name": "--equation", "type": "string", "description": "Polynomial P(t, a)"},
                {"name": "--var", "type": "string", "default": "a", "description": "Name of the unknown"},
                *_INPUT,
                *_ORDERED,
                *_COMMON,
            ],
        },
        "verify": {
            "description": "Largest order to which a series satisfies P(t, a) = 0.",
            "usage": "gfkit verify --series FILE (--equation P | --file P | --fixture NAME) [--var a]",
            "args": [],
            "flags": [
                {"name": "--series", "type": "string", "description": "Series file"},
                {"name": "--equation", "type": "string", "description": "Polynomial P(t, a)"},
                {"name": "--var", "type": "string", "default": "a", "description": "Name of the unknown"},
                *_INPUT,
                *_COMMON,
            ],
        },
        "lagrange": {
            "description": "[t^n] Psi(U) where U = t Phi(U), by Lagrange inversion.",
            "usage": "gfkit lagrange --phi PHI [--psi PSI] --n N",
            "args": [],
            "flags": [
                {"name": "--phi", "type": "string", "description": "Rational expression in x with nonzero constant term"},
                {"name": "--psi", "type": "string", "default": "x", "description": "Rational expression in x"},
                {"name": "--n", "type": "int", "description": "Coefficient index, n >= 1"},
                *_COMMON,
            ],
        },
        "guess": {
            "description": "Guess a rational function or an algebraic equation from initial coefficients.",
            "usage": "gfkit guess rational|algebraic --coeffs FILE [--max-deg D E]",
            "args": [{"name": "kind", "type": "string", "required": True, "description": "rational or algebraic"}],
            "flags": [
                {"name": "--coeffs", "type": "string", "description": "Series file with the known coefficients"},
                {"name": "--max-deg", "type": "int int", "default": [4, 4], "description": "Degree bounds (numerator, denominator) or (t, a)"},
                *_COMMON,
            ],
        },
        "slice": {
            "description": "[s^k] of a bivariate rational function in t and s, as a series in t.",
            "usage": "gfkit slice (--function F | --file F) [--k K] [--vars ts|xy] [--order N]",
            "args": [],
            "flags": [
                {"name": "--function", "type": "string", "description": "Rational expression in t, s (or x, y)"},
                {"name": "--k", "type": "int", "default": 0, "description": "Power of s"},
                {"name": "--vars", "type": "string", "default": "ts", "description": "ts, or xy with x = ts and y = t/s"},
                _FILE,
                *_ORDERED,
                *_COMMON,
            ],
        },
        "diagonal": {
            "description": "Diagonal sum_n a_(n,n) t^n of a bivariate rational function given in x, y.",
            "usage": "gfkit diagonal (--function F | --file F) [--vars xy|ts] [--order N]",
            "args": [],
            "flags": [
                {"name": "--function", "type": "string", "description": "Rational expression in x, y (or t, s)"},
                {"name": "--vars", "type": "string", "default": "xy", "description": "xy, or ts for the [s^0] slice with t^2 -> t"},
                _FILE,
                *_ORDERED,
                *_COMMON,
            ],
        },
        "corpus": {
            "description": "List or run the named end-to-end suites.",
            "usage": "gfkit corpus list | gfkit corpus run (NAME ... | --all) [--scale small|default] [--jobs N] [--report PATH] [--timing]",
            "args": [
                {"name": "action", "type": "string", "required": True, "description": "list or run"},
                {"name": "names", "type": "string[]", "required": False, "description": "Suites to run"},
            ],
            "flags": [
                {"name": "--all", "description": "Run every suite"},
                {"name": "--scale", "type": "string", "default": "default", "description": "small lowers every bound"},
                {"name": "--jobs", "type": "int", "default": 1, "description": "Worker processes"},
                {"name": "--report", "type": "string", "description": "Also write the structured report to PATH"},
                {"name": "--timing", "description": "Include per-suite wall time in the output"},
                *_COMMON,
            ],
        },
    },
}
