"""Hand-built one-parameter degenerations, degenerate at ``t = 0``.

Each entry is ``(name, coefficients, samples)``: ascending coefficients as
expressions in ``t`` and sample values ordered toward the degenerate end.
"""

SAMPLES = ("1", "1/2", "1/4", "1/16", "0")

DEGENERATIONS = [
    ("fold", ["-t**2", "0", "1"], SAMPLES),
    ("fold from complex pair", ["t", "0", "1"], SAMPLES),
    ("cusp", ["0", "-t", "0", "1"], SAMPLES),
    ("cusp from one real root", ["0", "t", "0", "1"], SAMPLES),
    ("two folds collide", ["t**4", "0", "-2*t**2", "0", "1"], SAMPLES),
    ("fold beside a fixed root", ["2*t", "-t", "-2", "1"], SAMPLES),
    ("four-fold root from two reals", ["-t", "0", "0", "0", "1"], SAMPLES),
    ("four-fold root from complex roots", ["t", "0", "0", "0", "1"], SAMPLES),
    ("three roots shrink", ["-6*t**3", "11*t**2", "-6*t", "1"], SAMPLES),
    ("fold away from origin", ["1+t", "-2-t", "1"], SAMPLES),
    ("double root absorbs a simple one", ["0", "0", "-t", "1"], SAMPLES),
    ("complex pair lands beside a double root", ["t", "-2*t", "1+t", "-2", "1"], SAMPLES),
    ("inner pair merges", ["4*t**2", "0", "-4-t**2", "0", "1"], SAMPLES),
    ("two complex pairs land", ["t+t**2", "-2*t", "1+2*t", "-2", "1"], SAMPLES),
    ("double root opens up", ["0", "0", "-t", "0", "1"], SAMPLES),
    ("quintic collapse", ["0", "-t", "0", "0", "0", "1"], SAMPLES),
    ("nested folds", ["4*t**4", "0", "-5*t**2", "0", "1"], SAMPLES),
    ("two double roots meet", ["0", "0", "t**2", "-2*t", "1"], SAMPLES),
    ("six-fold root", ["-t", "0", "0", "0", "0", "0", "1"], SAMPLES),
    ("cubic root beside a fixed one", ["2*t", "-t", "0", "-2", "1"], SAMPLES),
]
