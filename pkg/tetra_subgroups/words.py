from collections.abc import Iterable

# (generator index, +1 or -1)
Letter = tuple[int, int]
Word = tuple[Letter, ...]

EMPTY: Word = ()


def free_reduce(letters: Iterable[Letter], involutions: frozenset[int] = frozenset()) -> Word:
    """Cancels adjacent ``x x^-1`` pairs.

    Generators listed in ``involutions`` are their own inverse: their sign is
    normalized to ``+1`` and ``x x`` cancels as well.
    """
    stack: list[Letter] = []
    for gen, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        if gen in involutions:
            sign = 1
        if stack and stack[-1] == (gen, -sign if gen not in involutions else 1):
            stack.pop()
        else:
            stack.append((gen, sign))
    return tuple(stack)


def word(*letters: Letter) -> Word:
    return free_reduce(letters)


def inverse(w: Word, involutions: frozenset[int] = frozenset()) -> Word:
    return free_reduce(((gen, -sign) for gen, sign in reversed(w)), involutions)


def power(w: Word, exponent: int) -> Word:
    if exponent < 0:
        return power(inverse(w), -exponent)
    return w * exponent


def concat(*parts: Word, involutions: frozenset[int] = frozenset()) -> Word:
    return free_reduce((letter for part in parts for letter in part), involutions)


def generators_of(w: Word) -> frozenset[int]:
    return frozenset(gen for gen, _ in w)


def cyclic_rotations(w: Word) -> list[Word]:
    return [w[i:] + w[:i] for i in range(len(w))] or [EMPTY]


def find_subword(w: Word, sub: Word) -> int:
    """Index of the first occurrence of ``sub`` in ``w``, or -1."""
    if not sub or len(sub) > len(w):
        return -1
    for i in range(len(w) - len(sub) + 1):
        if w[i : i + len(sub)] == sub:
            return i
    return -1


def format_word(w: Word, names: tuple[str, ...]) -> str:
    parts = []
    for gen, sign in w:
        parts.append(names[gen] if sign == 1 else f"{names[gen]}⁻¹")
    return "".join(parts)


def parse_word(text: str, names: tuple[str, ...]) -> Word:
    """Parses concatenated single-letter generator names.

    Inverses may be written ``x⁻¹``, ``x^-1`` or ``X`` (upper case of a lower-case
    generator name).
    """
    index = {name: i for i, name in enumerate(names)}
    letters: list[Letter] = []
    text = text.replace(" ", "")
    pos = 0
    while pos < len(text):
        char = text[pos]
        pos += 1
        if char in index:
            gen = index[char]
            sign = 1
        elif char.swapcase() in index and char.isupper():
            gen = index[char.swapcase()]
            sign = -1
        elif char in ("ε", "e", "1") and len(text) == 1:
            continue
        else:
            raise ValueError(f"unknown generator {char!r} in word {text!r}")
        for marker in ("⁻¹", "^-1"):
            if text.startswith(marker, pos):
                sign = -sign
                pos += len(marker)
                break
        letters.append((gen, sign))
    return word(*letters)
