"""
双射工具模块

- ψ：G_{N,≠} 与 N-1 对括号的平衡括号串之间的 Catalan 双射，及其逆（上划线构造）
- ξ：长度为 N 的括号化与不含边 {1, N+1} 的 N+1 顶点HVG之间的 Schröder 双射，及其逆
- 边 {1, N} 的翻转对合

括号串的规范文本使用 '[' 和 ']'，括号化的规范文本使用 'x'、'(' 和 ')'，都不含空白。
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple, Union

from .exceptions import DomainError, NotRealizableError, ParseError
from .graph import (
    Graph,
    _slice,
    _with_edges,
    _without_edge,
    decompose,
    is_hvg,
    non_nested,
    one_sum,
    one_sum_chain,
    path,
)
from .realize import is_distinct_realizable

logger = logging.getLogger(__name__)

LETTER = "x"


# ===================== 平衡括号串 =====================

@dataclass(frozen=True)
class ParenString:
    """由 '[' 和 ']' 组成的平衡括号串"""

    word: str = ""

    def __post_init__(self):
        parse_parens(self.word)

    def __str__(self) -> str:
        return self.word

    def __len__(self) -> int:
        return len(self.word)

    @property
    def pairs(self) -> int:
        return len(self.word) // 2

    @property
    def blocks(self) -> List["ParenString"]:
        """顶层分块 [B_1]...[B_k] 中的内部串 B_1, ..., B_k"""
        inner, depth, start = [], 0, 0
        for position, char in enumerate(self.word):
            depth += 1 if char == "[" else -1
            if depth == 0:
                inner.append(ParenString(self.word[start + 1:position]))
                start = position + 1
        return inner


def parse_parens(text: str) -> ParenString:
    """
    解析平衡括号串

    Raises:
        ParseError: 出现非法字符、多余的 ']' 或未闭合的 '['，附带0起始位置
    """
    opened: List[int] = []
    for position, char in enumerate(text):
        if char == "[":
            opened.append(position)
        elif char == "]":
            if not opened:
                raise ParseError("unmatched ']'", position=position)
            opened.pop()
        else:
            raise ParseError(f"unexpected character {char!r}", position=position)
    if opened:
        raise ParseError("unclosed '['", position=opened[-1])
    word = ParenString.__new__(ParenString)
    object.__setattr__(word, "word", text)
    return word


def balanced_words(m: int) -> Iterator[ParenString]:
    """按字典序（'[' < ']'）生成全部 m 对括号的平衡括号串"""
    if m < 0:
        raise DomainError(f"number of pairs must be non-negative, got {m}")

    def extend(prefix: str, opened: int, closed: int) -> Iterator[str]:
        if opened == m and closed == m:
            yield prefix
            return
        if opened < m:
            yield from extend(prefix + "[", opened + 1, closed)
        if closed < opened:
            yield from extend(prefix + "]", opened, closed + 1)

    for word in extend("", 0, 0):
        yield parse_parens(word)


# ===================== 括号化 =====================

Item = Union[str, "Bracketing"]


@dataclass(frozen=True)
class Bracketing:
    """
    字母 x 的括号化

    items 是顶层项的序列，每一项是字母 'x' 或一个带括号的子括号化。
    长度至少为2的括号化至少有两个顶层项，单字母 x 只有一项。
    """

    items: Tuple[Item, ...]

    @property
    def length(self) -> int:
        return sum(1 if item == LETTER else item.length for item in self.items)

    def blocks(self) -> List[Union[int, "Bracketing"]]:
        """
        规范形式 B_1...B_k

        Returns:
            列表，整数 m 表示长度为 m 的平凡块 x...x，Bracketing 表示带括号块的内部
        """
        result: List[Union[int, Bracketing]] = []
        for item in self.items:
            if item == LETTER:
                if result and isinstance(result[-1], int):
                    result[-1] += 1
                else:
                    result.append(1)
            else:
                result.append(item)
        return result

    @property
    def is_trivial(self) -> bool:
        return all(item == LETTER for item in self.items)

    def render(self) -> str:
        return "".join(LETTER if item == LETTER else f"({item.render()})" for item in self.items)

    def __str__(self) -> str:
        return self.render()


class _BracketingParser:
    """递归下降解析器"""

    def __init__(self, text: str, lenient: bool):
        self.text = text
        self.lenient = lenient
        self.position = 0

    def parse(self) -> Bracketing:
        if not self.text:
            raise ParseError("empty bracketing", position=0)
        items = self._items(top=True)
        if self.position < len(self.text):
            raise ParseError("unmatched ')'", position=self.position)
        if len(items) == 1 and items[0] != LETTER:
            if not self.lenient:
                raise ParseError("outer surrounding brackets must be omitted", position=0)
            return items[0]
        return Bracketing(tuple(items))

    def _items(self, top: bool) -> List[Item]:
        items: List[Item] = []
        while self.position < len(self.text):
            char = self.text[self.position]
            if char == LETTER:
                items.append(LETTER)
                self.position += 1
            elif char == "(":
                items.append(self._group())
            elif char == ")":
                if top:
                    raise ParseError("unmatched ')'", position=self.position)
                break
            else:
                raise ParseError(f"unexpected character {char!r}", position=self.position)
        return items

    def _group(self) -> Item:
        start = self.position
        self.position += 1
        items = self._items(top=False)
        if self.position >= len(self.text):
            raise ParseError("unclosed '('", position=start)
        self.position += 1
        if not items:
            raise ParseError("empty brackets", position=start)
        if len(items) == 1:
            if not self.lenient:
                if items[0] == LETTER:
                    raise ParseError("brackets around a single letter must be omitted", position=start)
                raise ParseError("redundant double brackets", position=start)
            return items[0]
        return Bracketing(tuple(items))


def parse_bracketing(text: str, lenient: bool = False) -> Bracketing:
    """
    解析括号化

    严格模式只接受规范文本：拒绝单字母外的括号 "(x)"、双重括号和最外层括号。
    宽松模式把这些冗余括号去掉后再解析。相邻的字母在文本中总是自动合并为一个平凡块。

    Args:
        text: 由 'x'、'(' 和 ')' 组成的文本
        lenient: 是否规范化冗余括号

    Returns:
        Bracketing
    """
    return _BracketingParser(text, lenient).parse()


@lru_cache(maxsize=None)
def _item_sequences(m: int, max_group: int) -> Tuple[Tuple[Item, ...], ...]:
    """总长度为 m、每个括号组长度不超过 max_group 的全部顶层项序列"""
    if m == 0:
        return ((),)
    sequences: List[Tuple[Item, ...]] = []
    for rest in _item_sequences(m - 1, max_group):
        sequences.append((LETTER,) + rest)
    for size in range(2, min(m, max_group) + 1):
        for group in _bracketing_tuple(size):
            for rest in _item_sequences(m - size, max_group):
                sequences.append((group,) + rest)
    return tuple(sequences)


@lru_cache(maxsize=None)
def _bracketing_tuple(m: int) -> Tuple[Bracketing, ...]:
    if m == 1:
        return (Bracketing((LETTER,)),)
    # 最外层不加括号，所以组的长度严格小于 m
    return tuple(Bracketing(items) for items in _item_sequences(m, m - 1) if len(items) >= 2)


def bracketings(m: int) -> Iterator[Bracketing]:
    """生成全部长度为 m 的括号化，个数为小 Schröder 数 s_{m-1}"""
    if m < 1:
        raise DomainError(f"bracketing length must be positive, got {m}")
    return iter(_bracketing_tuple(m))


# ===================== ψ 与 ψ⁻¹ =====================

def _psi_word(g: Graph) -> str:
    if g.n == 1:
        return ""
    cut = non_nested(g)
    return "".join(f"[{_psi_word(_slice(g, a + 1, b))}]" for a, b in zip(cut, cut[1:]))


def psi(g: Graph) -> ParenString:
    """
    Catalan 双射 ψ：G_{N,≠} → N-1 对括号的平衡括号串

    非嵌套顶点 i_1 < ... < i_k 把 g 切成块 G_[i_{j-1}+1, i_j]，每块递归编码后加一层括号。

    Raises:
        DomainError: g 不属于 G_{N,≠}
    """
    try:
        realizable = is_distinct_realizable(g)
    except NotRealizableError:
        realizable = False
    if not realizable:
        raise DomainError(f"psi is only defined on HVGs with distinct data, got {g!r}")
    return parse_parens(_psi_word(g))


def overline(h: Graph) -> Graph:
    """在 h 前面加一个新顶点1，并把它与 h 的所有非嵌套顶点相连"""
    lifted = one_sum(path(2), h)
    return _with_edges(lifted, [(1, v + 1) for v in non_nested(h)])


def _psi_inv_word(word: ParenString) -> Graph:
    if not word.word:
        return path(1)
    return one_sum_chain(overline(_psi_inv_word(block)) for block in word.blocks)


def psi_inv(b: Union[str, ParenString]) -> Graph:
    """ψ 的逆：空串对应 P_1，否则 [B_1]...[B_k] 对应各块上划线图的1-和"""
    word = parse_parens(b) if isinstance(b, str) else b
    return _psi_inv_word(word)


# ===================== ξ 与 ξ⁻¹ =====================

def xi(b: Union[str, Bracketing]) -> Graph:
    """
    Schröder 双射 ξ：长度为 N 的括号化 → 不含边 {1, N+1} 的 N+1 顶点HVG

    平凡块 x...x（长度 ℓ）对应 P_{ℓ+1}；带括号块对应其内部的像，再加一条跨越
    整块的长边。各块的像依次做1-和。
    """
    bracketing = parse_bracketing(b) if isinstance(b, str) else b
    if bracketing.is_trivial:
        return path(bracketing.length + 1)

    pieces: List[Graph] = []
    spans = []
    offset = 0
    for block in bracketing.blocks():
        if isinstance(block, int):
            pieces.append(path(block + 1))
            offset += block
        else:
            pieces.append(xi(block))
            spans.append((offset + 1, offset + block.length + 1))
            offset += block.length
    return _with_edges(one_sum_chain(pieces), spans)


def _xi_inv_items(g: Graph) -> Tuple[Item, ...]:
    items: List[Item] = []
    for piece in decompose(g):
        if piece.n == 2:
            items.append(LETTER)
            continue
        if not piece.has_edge(1, piece.n):
            raise DomainError(f"block {piece!r} lacks its spanning edge")
        items.append(Bracketing(_xi_inv_items(_without_edge(piece, (1, piece.n)))))
    return tuple(items)


def xi_inv(g: Graph) -> Bracketing:
    """
    ξ 的逆

    沿相邻非嵌套顶点切分：两个顶点的块是一个字母，更大的块必含跨越整块的边，
    去掉这条边后递归得到一个带括号块。

    Raises:
        DomainError: g 少于两个顶点、不是HVG，或含边 {1, N+1}（N+1 ≥ 3）
    """
    if g.n < 2:
        raise DomainError("xi_inv needs a graph on at least two vertices")
    if g.n >= 3 and g.has_edge(1, g.n):
        raise DomainError(f"graph contains the edge 1{g.n}")
    if not is_hvg(g):
        raise DomainError(f"xi_inv is only defined on HVGs, got {g!r}")
    return Bracketing(_xi_inv_items(g))


def toggle_top_edge(g: Graph) -> Graph:
    """有边 {1, N} 则删除，否则添加；N ≥ 3 时是 G_N 上的对合"""
    if g.n < 3:
        raise DomainError(f"toggling the edge 1N needs N >= 3, got N={g.n}")
    top = (1, g.n)
    if g.has_edge(*top):
        return _without_edge(g, top)
    return _with_edges(g, [top])
