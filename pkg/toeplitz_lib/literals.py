"""
Copyright 2019 ARM Limited
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.

literals module, contains the parser and emitter for the coefficient literal grammar:

    RAT     ::= ["-"] INT [ "/" POSINT ]
    COMPLEX ::= RAT | [RAT] ("+"|"-") [RAT] "i" | RAT "i"
    POLY    ::= "[" [ COMPLEX { "," COMPLEX } ] "]"

List entries may be quoted with double quotes. Positions in ParseError are 0-based offsets
into the text given to the top level parse function.
"""

import json
from fractions import Fraction

from toeplitz_lib.Algebra.GaussianRational import GaussianRational
from toeplitz_lib.ToeplitzErrors import ParseError


def _parse_rat(text, start, end, signed=True):
    """
    Parse RAT from text[start:end].

    :return: Fraction
    :raises: ParseError
    """
    pos = start
    negative = False
    if signed and pos < end and text[pos] == "-":
        negative = True
        pos += 1
    digits_start = pos
    while pos < end and text[pos].isdigit():
        pos += 1
    if pos == digits_start:
        raise ParseError(pos, "digit", text)
    numerator = int(text[digits_start:pos])
    denominator = 1
    if pos < end and text[pos] == "/":
        pos += 1
        den_start = pos
        while pos < end and text[pos].isdigit():
            pos += 1
        if pos == den_start:
            raise ParseError(pos, "digit", text)
        denominator = int(text[den_start:pos])
        if denominator == 0:
            raise ParseError(den_start, "nonzero denominator", text)
    if pos != end:
        raise ParseError(pos, "end of rational", text)
    value = Fraction(numerator, denominator)
    return -value if negative else value


def _parse_complex_span(text, start, end):
    """
    Parse COMPLEX from text[start:end], whitespace already trimmed.
    """
    if start >= end:
        raise ParseError(start, "complex literal", text)
    if text[end - 1] != "i":
        return GaussianRational(_parse_rat(text, start, end), 0)
    body_end = end - 1
    split = -1
    for index in range(body_end - 1, start, -1):
        if text[index] in "+-":
            split = index
            break
    if split < 0:
        body = text[start:body_end]
        if body in ("", "+"):
            return GaussianRational(0, 1)
        if body == "-":
            return GaussianRational(0, -1)
        return GaussianRational(0, _parse_rat(text, start, body_end))
    real = _parse_rat(text, start, split)
    if split + 1 == body_end:
        imag = Fraction(1)
    else:
        imag = _parse_rat(text, split + 1, body_end, signed=False)
    if text[split] == "-":
        imag = -imag
    return GaussianRational(real, imag)


def parse_complex_literal(text):
    """
    Parse a single COMPLEX literal such as "3/2", "-1+2i", "i" or "2/3-1/5i".

    :param text: literal string, surrounding whitespace allowed
    :return: GaussianRational
    :raises: ParseError
    """
    start = 0
    end = len(text)
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    return _parse_complex_span(text, start, end)


def parse_poly_literal(text):
    """
    Parse "[c0, c1, ...]" of COMPLEX literals in ascending order.

    :param text: literal string
    :return: Poly
    :raises: ParseError with the offending position
    """
    from toeplitz_lib.Algebra.Poly import Poly
    pos = 0
    end = len(text)

    def skip_space(index):
        while index < end and text[index].isspace():
            index += 1
        return index

    pos = skip_space(pos)
    if pos >= end or text[pos] != "[":
        raise ParseError(pos, "'['", text)
    pos = skip_space(pos + 1)
    coeffs = []
    if pos < end and text[pos] == "]":
        pos += 1
    else:
        while True:
            if pos >= end:
                raise ParseError(pos, "list entry", text)
            if text[pos] == '"':
                closing = text.find('"', pos + 1)
                if closing < 0:
                    raise ParseError(end, "closing '\"'", text)
                coeffs.append(_parse_complex_span(text, pos + 1, closing))
                pos = closing + 1
            else:
                entry_end = pos
                while entry_end < end and text[entry_end] not in ",]" \
                        and not text[entry_end].isspace():
                    entry_end += 1
                coeffs.append(_parse_complex_span(text, pos, entry_end))
                pos = entry_end
            pos = skip_space(pos)
            if pos < end and text[pos] == ",":
                pos = skip_space(pos + 1)
                continue
            if pos < end and text[pos] == "]":
                pos += 1
                break
            raise ParseError(pos, "',' or ']'", text)
    pos = skip_space(pos)
    if pos != end:
        raise ParseError(pos, "end of input", text)
    return Poly(coeffs)


def _format_rat(value):
    return str(value)


def format_complex(value):
    """
    Emit a GaussianRational in the literal grammar, e.g. "-1+2i", "-i", "2/3-1/5i".

    :param value: GaussianRational or rational
    :return: str
    """
    value = GaussianRational.coerce(value)
    real, imag = value.re, value.im
    if imag == 0:
        return _format_rat(real)
    if imag == 1:
        imag_text = "i"
    elif imag == -1:
        imag_text = "-i"
    else:
        imag_text = _format_rat(imag) + "i"
    if real == 0:
        return imag_text
    magnitude = "" if abs(imag) == 1 else _format_rat(abs(imag))
    return "{}{}{}i".format(_format_rat(real), "+" if imag > 0 else "-", magnitude)


def emit_poly_literal(poly):
    """
    Emit a Poly as a JSON list of literal strings. parse_poly_literal inverts it exactly.

    :param poly: Poly
    :return: str
    """
    return json.dumps([format_complex(coeff) for coeff in poly.coeffs])
