class Constants:
    """
    A class to hold constant values for the whole application.
    """

    SERIES_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
    ALGEBRA_DESCRIPTOR_REGEX = r"^(?P<series>[A-Da-d])(?P<rank>[1-9][0-9]*)$"

    BUILTIN_PENCILS = ("kdv", "so5", "sl3-frac", "camassa-holm", "scalar")
    PENCIL_VARIANTS = ("ds", "swapped-ch", "custom", "scalar")

    EPSILON_NAME = "eps"
    LAMBDA_NAME = "lam"
    DERIVATION_NAME = "D"
    SYMBOL_NAME = "p"

    # Name suffix of the s-th x-derivative: u_x, u_xx, u_xxx, u_x4, ...
    SPELLED_DERIVATIVES = 3
    MAX_PARSED_DERIVATIVE = 16

    # Rows of the reference table for the exceptional algebras: (h, h_vee, dim_leaf).
    EXCEPTIONAL_TABLE1 = {
        "E6": (12, 12, 22),
        "E7": (18, 18, 34),
        "E8": (30, 30, 58),
        "F4": (12, 9, 16),
        "G2": (6, 4, 6),
    }

    EMIT_FORMATS = ("json", "latex", "text")
    VERIFY_SUITES = (
        "kdv",
        "so5",
        "sl3-frac",
        "camassa-holm",
        "table1",
        "exactness",
        "schur",
        "miura-invariance",
        "eigen-scaling",
        "scalar",
    )

    SAMPLE_NUMERATOR_BOUND = 9
    SAMPLE_DENOMINATOR_BOUND = 4
    MAX_SAMPLE_ATTEMPTS = 200
    # Intermediate points used to follow each lam-root between two sample points.
    BRANCH_STEPS = 8
