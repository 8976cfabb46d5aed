"""Porter suffix-stripping stemmer.

Implements the classic five-step rule cascade for reducing English words
to stems, following the widely used reference behavior of the original
author's implementation (including its small published refinements over
the 1980 article, e.g. ``bli -> ble`` and the extra ``logi -> log`` rule).

Input is expected to be a lowercase alphabetic token; words of length one
or two are returned unchanged.
"""

from __future__ import annotations

__all__ = ["PorterStemmer", "porter_stem"]

_VOWELS = "aeiou"


class PorterStemmer:
    """Stateful buffer over one word; ``stem`` is the only public entry point.

    The buffer ``b`` holds the word being stemmed, ``k`` is the index of its
    current last letter, and ``j`` marks the start of a candidate suffix as
    set by ``_ends``.
    """

    def __init__(self) -> None:
        self.b = ""
        self.k = 0
        self.j = 0

    # -- character classes and measures over b[0..j] --

    def _cons(self, i: int) -> bool:
        ch = self.b[i]
        if ch in _VOWELS:
            return False
        if ch == "y":
            return True if i == 0 else not self._cons(i - 1)
        return True

    def _m(self) -> int:
        """Number of vowel-consonant sequences in b[0..j]."""
        n = 0
        i = 0
        while True:
            if i > self.j:
                return n
            if not self._cons(i):
                break
            i += 1
        i += 1
        while True:
            while True:
                if i > self.j:
                    return n
                if self._cons(i):
                    break
                i += 1
            i += 1
            n += 1
            while True:
                if i > self.j:
                    return n
                if not self._cons(i):
                    break
                i += 1
            i += 1

    def _vowel_in_stem(self) -> bool:
        return any(not self._cons(i) for i in range(self.j + 1))

    def _double_cons(self, j: int) -> bool:
        if j < 1 or self.b[j] != self.b[j - 1]:
            return False
        return self._cons(j)

    def _cvc(self, i: int) -> bool:
        """consonant-vowel-consonant ending at i, final consonant not w, x or y."""
        if i < 2 or not self._cons(i) or self._cons(i - 1) or not self._cons(i - 2):
            return False
        return self.b[i] not in "wxy"

    # -- suffix tests and replacements --

    def _ends(self, s: str) -> bool:
        length = len(s)
        if s[-1] != self.b[self.k]:
            return False
        if length > self.k + 1:
            return False
        if self.b[self.k - length + 1 : self.k + 1] != s:
            return False
        self.j = self.k - length
        return True

    def _set_to(self, s: str) -> None:
        self.b = self.b[: self.j + 1] + s + self.b[self.j + 1 + len(s) :]
        self.k = self.j + len(s)

    def _replace_if_m(self, s: str) -> None:
        if self._m() > 0:
            self._set_to(s)

    # -- the five steps --

    def _step_1ab(self) -> None:
        if self.b[self.k] == "s":
            if self._ends("sses"):
                self.k -= 2
            elif self._ends("ies"):
                self._set_to("i")
            elif self.b[self.k - 1] != "s":
                self.k -= 1
        if self._ends("eed"):
            if self._m() > 0:
                self.k -= 1
        elif (self._ends("ed") or self._ends("ing")) and self._vowel_in_stem():
            self.k = self.j
            if self._ends("at"):
                self._set_to("ate")
            elif self._ends("bl"):
                self._set_to("ble")
            elif self._ends("iz"):
                self._set_to("ize")
            elif self._double_cons(self.k):
                self.k -= 1
                if self.b[self.k] in "lsz":
                    self.k += 1
            elif self._m() == 1 and self._cvc(self.k):
                self._set_to("e")

    def _step_1c(self) -> None:
        if self._ends("y") and self._vowel_in_stem():
            self.b = self.b[: self.k] + "i" + self.b[self.k + 1 :]

    def _step_2(self) -> None:
        ch = self.b[self.k - 1]
        if ch == "a":
            if self._ends("ational"):
                self._replace_if_m("ate")
            elif self._ends("tional"):
                self._replace_if_m("tion")
        elif ch == "c":
            if self._ends("enci"):
                self._replace_if_m("ence")
            elif self._ends("anci"):
                self._replace_if_m("ance")
        elif ch == "e":
            if self._ends("izer"):
                self._replace_if_m("ize")
        elif ch == "l":
            if self._ends("bli"):
                self._replace_if_m("ble")
            elif self._ends("alli"):
                self._replace_if_m("al")
            elif self._ends("entli"):
                self._replace_if_m("ent")
            elif self._ends("eli"):
                self._replace_if_m("e")
            elif self._ends("ousli"):
                self._replace_if_m("ous")
        elif ch == "o":
            if self._ends("ization"):
                self._replace_if_m("ize")
            elif self._ends("ation"):
                self._replace_if_m("ate")
            elif self._ends("ator"):
                self._replace_if_m("ate")
        elif ch == "s":
            if self._ends("alism"):
                self._replace_if_m("al")
            elif self._ends("iveness"):
                self._replace_if_m("ive")
            elif self._ends("fulness"):
                self._replace_if_m("ful")
            elif self._ends("ousness"):
                self._replace_if_m("ous")
        elif ch == "t":
            if self._ends("aliti"):
                self._replace_if_m("al")
            elif self._ends("iviti"):
                self._replace_if_m("ive")
            elif self._ends("biliti"):
                self._replace_if_m("ble")
        elif ch == "g":
            if self._ends("logi"):
                self._replace_if_m("log")

    def _step_3(self) -> None:
        ch = self.b[self.k]
        if ch == "e":
            if self._ends("icate"):
                self._replace_if_m("ic")
            elif self._ends("ative"):
                self._replace_if_m("")
            elif self._ends("alize"):
                self._replace_if_m("al")
        elif ch == "i":
            if self._ends("iciti"):
                self._replace_if_m("ic")
        elif ch == "l":
            if self._ends("ical"):
                self._replace_if_m("ic")
            elif self._ends("ful"):
                self._replace_if_m("")
        elif ch == "s":
            if self._ends("ness"):
                self._replace_if_m("")

    def _step_4(self) -> None:
        ch = self.b[self.k - 1]
        if ch == "a":
            if not self._ends("al"):
                return
        elif ch == "c":
            if not (self._ends("ance") or self._ends("ence")):
                return
        elif ch == "e":
            if not self._ends("er"):
                return
        elif ch == "i":
            if not self._ends("ic"):
                return
        elif ch == "l":
            if not (self._ends("able") or self._ends("ible")):
                return
        elif ch == "n":
            if not (
                self._ends("ant")
                or self._ends("ement")
                or self._ends("ment")
                or self._ends("ent")
            ):
                return
        elif ch == "o":
            if not ((self._ends("ion") and self.b[self.j] in "st") or self._ends("ou")):
                return
        elif ch == "s":
            if not self._ends("ism"):
                return
        elif ch == "t":
            if not (self._ends("ate") or self._ends("iti")):
                return
        elif ch == "u":
            if not self._ends("ous"):
                return
        elif ch == "v":
            if not self._ends("ive"):
                return
        elif ch == "z":
            if not self._ends("ize"):
                return
        else:
            return
        if self._m() > 1:
            self.k = self.j

    def _step_5(self) -> None:
        self.j = self.k
        if self.b[self.k] == "e":
            a = self._m()
            if a > 1 or (a == 1 and not self._cvc(self.k - 1)):
                self.k -= 1
        if self.b[self.k] == "l" and self._double_cons(self.k) and self._m() > 1:
            self.k -= 1

    def stem(self, word: str) -> str:
        if len(word) <= 2:
            return word
        self.b = word
        self.k = len(word) - 1
        self.j = 0
        self._step_1ab()
        self._step_1c()
        self._step_2()
        self._step_3()
        self._step_4()
        self._step_5()
        return self.b[: self.k + 1]


_STEMMER = PorterStemmer()


def porter_stem(token: str) -> str:
    """Stem one lowercase alphabetic token."""
    return _STEMMER.stem(token)
