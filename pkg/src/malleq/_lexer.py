import re

from .errors import ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<punct>\|-|-o|[()\[\],+&*@~?:])|(?P<word>[A-Za-z0-9_]+))"
)
_TRAILING = re.compile(r"\s*")


class Lexer:
    """Whitespace-insensitive tokenizer shared by all text grammars."""

    def __init__(self, text, source=None):
        self.text = text
        self.source = source
        self.tokens = []  # (kind, value, pos)
        pos = 0
        while True:
            pos = _TRAILING.match(text, pos).end()
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ParseError(f"unexpected character {text[pos]!r}", text, pos, source)
            kind = "punct" if m.group("punct") else "word"
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def at(self, value):
        kind, v, _ = self.peek()
        return kind != "eof" and v == value

    def next(self):
        tok = self.peek()
        if tok[0] != "eof":
            self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.next()
        if v != value or kind == "eof":
            self.error(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def word(self, what="identifier", pattern=None):
        kind, v, pos = self.next()
        if kind != "word":
            self.error(f"expected {what}, found {v or 'end of input'!r}", pos)
        if pattern is not None and not pattern.fullmatch(v):
            self.error(f"invalid {what} {v!r}", pos)
        return v

    def nat(self):
        kind, v, pos = self.next()
        if kind != "word" or not v.isdigit():
            self.error(f"expected natural number, found {v or 'end of input'!r}", pos)
        return int(v)

    def end(self):
        kind, v, pos = self.peek()
        if kind != "eof":
            self.error(f"unexpected trailing input {v!r}", pos)

    def error(self, message, pos=None):
        if pos is None:
            pos = self.peek()[2]
        raise ParseError(message, self.text, pos, self.source)
