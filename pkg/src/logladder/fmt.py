"""Deterministic decimal rendering for the CLI.

Numbers are rounded half-even to a requested count of significant digits
and printed positionally inside [1e-4, 1e15), in exponent notation outside.
Trailing zeros after the point are stripped so identical values always
render as identical bytes.
"""

MIN_SIG_DIGITS = 1
MAX_SIG_DIGITS = 15


def format_number(v: float, sig_digits: int = 10) -> str:
    """Render ``v`` to ``sig_digits`` significant digits.

    The e-format pass below performs the half-even rounding; the digits
    are then re-laid-out positionally so no second rounding can occur.
    """
    if not MIN_SIG_DIGITS <= sig_digits <= MAX_SIG_DIGITS:
        raise ValueError(f"sig_digits must be in [{MIN_SIG_DIGITS}, "
                         f"{MAX_SIG_DIGITS}], got {sig_digits!r}")
    if v != v:
        return "nan"
    if v == 0.0:
        return "0"
    sign = "-" if v < 0 else ""
    a = abs(v)
    if a == float("inf"):
        return sign + "inf"

    body = f"{a:.{sig_digits - 1}e}"          # rounding happens here
    digit_text, exp_text = body.split("e")
    digits = digit_text.replace(".", "")
    exp = int(exp_text)

    if -4 <= exp < 15:
        if exp >= len(digits) - 1:
            out = digits + "0" * (exp - len(digits) + 1)
        elif exp >= 0:
            out = digits[:exp + 1] + "." + digits[exp + 1:]
        else:
            out = "0." + "0" * (-exp - 1) + digits
        if "." in out:
            out = out.rstrip("0").rstrip(".")
    else:
        mantissa = digits[0]
        rest = digits[1:].rstrip("0")
        if rest:
            mantissa += "." + rest
        out = mantissa + f"e{exp:+03d}"
    return sign + out
