"""Morphisms, fixed points and factor scanning on finite words.

Words are plain ``str`` objects whose characters are the letters, so
``"01001"`` is a word over {0, 1}.  Positions reported to callers are
1-based, as in the literature on Sturmian words.
"""

from functools import lru_cache

from .quadratic import QuadraticIrrational


class AlphabetError(ValueError):
    pass


class Morphism:
    """A non-erasing substitution ``letter -> word`` on a finite alphabet."""

    def __init__(self, images):
        images = {str(k): str(v) for k, v in dict(images).items()}
        for letter, image in images.items():
            if len(letter) != 1:
                raise AlphabetError(f"letters must be single characters, got {letter!r}")
            if not image:
                raise AlphabetError(f"erasing image for letter {letter!r}")
        self.images = images

    @classmethod
    def parse(cls, text):
        """Parse the literal syntax ``0>01;1>011``."""
        images = {}
        for part in text.replace(" ", "").split(";"):
            if not part:
                continue
            letter, sep, image = part.partition(">")
            if not sep:
                raise ValueError(f"bad morphism rule {part!r}")
            images[letter] = image
        return cls(images)

    @property
    def alphabet(self):
        return frozenset(self.images)

    def letters_out(self):
        return frozenset("".join(self.images.values()))

    def __getitem__(self, letter):
        return self.images[letter]

    def __call__(self, word):
        return self.apply(word)

    def apply(self, word):
        try:
            return "".join(self.images[x] for x in word)
        except KeyError as exc:
            raise AlphabetError(f"letter {exc.args[0]!r} not in alphabet {sorted(self.alphabet)}") from None

    def compose(self, other):
        """The morphism ``self o other``: x -> self(other(x))."""
        missing = other.letters_out() - self.alphabet
        if missing:
            raise AlphabetError(f"cannot compose: letters {sorted(missing)} have no image")
        return Morphism({x: self.apply(img) for x, img in other.images.items()})

    def __mul__(self, other):
        return self.compose(other)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Morphism({x: x for x in self.images})
        for _ in range(k):
            result = self.compose(result)
        return result

    def __eq__(self, other):
        return isinstance(other, Morphism) and self.images == other.images

    def __hash__(self):
        return hash(tuple(sorted(self.images.items())))

    def __repr__(self):
        return f"Morphism({self.to_text()!r})"

    def to_text(self):
        return ";".join(f"{k}>{v}" for k, v in sorted(self.images.items()))

    def fixed_point(self, seed, n):
        return fixed_point(self, seed, n)


def identity(alphabet):
    return Morphism({x: x for x in alphabet})


def equal_on_alphabet(mu, nu):
    """True iff mu(x) == nu(x) for every letter x of mu's alphabet."""
    if not mu.alphabet <= nu.alphabet:
        raise AlphabetError(f"alphabets differ: {sorted(mu.alphabet)} vs {sorted(nu.alphabet)}")
    return all(mu[x] == nu[x] for x in mu.alphabet)


def compose(mu, nu):
    return mu.compose(nu)


def apply(mu, word):
    return mu.apply(word)


def fixed_point(mu, seed, n):
    """First n letters of the fixed point of mu starting with ``seed``.

    Iterates mu on the current prefix; every round checks that the old
    prefix is kept, which is exactly prolongability.
    """
    if seed not in mu.alphabet:
        raise AlphabetError(f"seed {seed!r} not in alphabet")
    image = mu[seed]
    if not (image.startswith(seed) and len(image) >= 2):
        raise ValueError(f"morphism is not prolongable on {seed!r}")
    word = seed
    while len(word) < n:
        parts, size = [], 0
        for x in word:
            img = mu.images[x]
            parts.append(img)
            size += len(img)
            if size >= n:
                break
        new = "".join(parts)
        assert new.startswith(word[: len(new)]), "prefix not stable"
        if len(new) <= len(word):
            break
        word = new
    return word[:n]


def positions_of(word, letter):
    """1-based positions of ``letter`` in ``word``."""
    return [i + 1 for i, x in enumerate(word) if x == letter]


def occurrences(text, factor):
    """1-based start positions of ``factor`` in ``text``, overlaps included."""
    if not factor:
        raise ValueError("empty factor")
    out = []
    i = text.find(factor)
    while i >= 0:
        out.append(i + 1)
        i = text.find(factor, i + 1)
    return out


def borders(w):
    """Non-empty proper borders of w, shortest first."""
    return [w[:k] for k in range(1, len(w)) if w[:k] == w[-k:]]


def has_overlap(w, corpus=None):
    """Whether w = xy = yz with x, y, z non-empty and xyz a factor of the corpus.

    The corpus defaults to a prefix of the Fibonacci word of length
    max(10**4, 4|w|).
    """
    if corpus is None:
        corpus = fibonacci_word(max(10**4, 4 * len(w)))
    if len(corpus) < 2 * len(w):
        raise ValueError(f"corpus of length {len(corpus)} too short for |w| = {len(w)}")
    for y in borders(w):
        if w + w[len(y):] in corpus:
            return True
    return False


_CODE_LETTERS = "123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def block_morphism(mu, k, seed=None, corpus_depth=1000):
    """The k-block presentation of mu's fixed point.

    Blocks of length k are coded 1, 2, ... in order of first occurrence in
    the fixed point.  The block at position n maps to the |mu(x_n)| blocks
    starting at position |mu(x_1 ... x_{n-1})| + 1.  Returns the coded
    morphism and the list of blocks (block i+1 is ``coding[i]``).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if seed is None:
        seed = next(x for x in sorted(mu.alphabet) if mu[x].startswith(x) and len(mu[x]) >= 2)
    longest = max(len(v) for v in mu.images.values())
    x = fixed_point(mu, seed, corpus_depth * longest + k + 1)

    coding, images = {}, {}
    start = 0  # 0-based start of mu(x_1 ... x_{n-1}) in x
    for n in range(corpus_depth):
        block = x[n:n + k]
        if block not in coding:
            coding[block] = _CODE_LETTERS[len(coding)]
        size = len(mu[x[n]])
        image = tuple(x[start + j:start + j + k] for j in range(size))
        start += size
        if images.setdefault(block, image) != image:
            raise ValueError(f"block {block!r} has two different images")
    unseen = {b for img in images.values() for b in img} - set(coding)
    if unseen:
        raise ValueError(f"corpus_depth {corpus_depth} too small to see all {k}-blocks")
    coded = Morphism({coding[b]: "".join(coding[c] for c in img) for b, img in images.items()})
    return coded, sorted(coding, key=coding.get)


def sturmian_word(alpha, n):
    """c_alpha(m) = floor((m+1) alpha) - floor(m alpha) for m = 1..n."""
    if not isinstance(alpha, QuadraticIrrational):
        raise TypeError("alpha must be a QuadraticIrrational")
    if not alpha.in_open_interval(0, 1):
        raise ValueError(f"{alpha} is not in (0, 1)")
    floors = [alpha.floor_mul(m) for m in range(1, n + 2)]
    return "".join(str(floors[i + 1] - floors[i]) for i in range(n))


def verify_fixes(mu, alpha, n):
    """True iff mu maps the length-n prefix of c_alpha onto a prefix of c_alpha."""
    c = sturmian_word(alpha, n)
    return mu.apply(c)[:n] == c


def complement(word):
    return word.translate(str.maketrans("01", "10"))


# -- named morphisms ---------------------------------------------------------

F = Morphism.parse("0>01;1>0")
G = Morphism.parse("0>01;1>011")
H = Morphism.parse("0>01;1>001")
K = Morphism.parse("0>01;1>2")
I = Morphism.parse("0>01;1>2;2>0122")
L = Morphism.parse("0>012;1>0022")
MU = Morphism.parse("1>121;2>13;3>13")
SIGMA_GOLDEN = Morphism.parse("0>1;1>10")
SIGMA_SQRT8 = Morphism.parse("0>11110;1>111101")


@lru_cache(maxsize=8)
def _fib_prefix(n):
    return fixed_point(F, "0", n)


def fibonacci_word(n):
    """Prefix of length n of x_F, the fixed point of 0 -> 01, 1 -> 0."""
    size = 1 << max(n - 1, 1).bit_length()
    return _fib_prefix(max(size, 1024))[:n]


def fibonacci_word_on(a, b, n):
    """First n letters of x_F with 0 -> a and 1 -> b, as a list."""
    return [a if x == "0" else b for x in fibonacci_word(n)]
