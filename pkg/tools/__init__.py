"""
HVG工具包 - Tools包

该包包含了水平可见图（HVG）的各种算法模块:
- graph: 图值类型与结构谓词
- construct: 由数据序列构造HVG与VG
- realize: 由HVG构造实现它的数据序列
- degrees: 由有序度序列重建HVG
- bijections: ψ / ξ 双射与括号文本
- combinatorics: Catalan 与 Schröder 数
- enumeration: 暴力与双射普查
- benchmark: 构造算法性能测试
"""

from .graph import (
    Graph,
    GraphStatistics,
    NestingProfile,
    add_edge_non_nested,
    decompose,
    degree_sequence,
    graph_statistics,
    induced_interval,
    is_hvg,
    is_non_crossing,
    max_neighbor,
    neighbors,
    nesting_degree,
    nesting_profile,
    non_nested,
    one_sum,
    path,
    remove_edge,
    remove_vertex,
)
from .construct import TimedSequence, build_fast, build_naive, build_vg, ensure_sequence, rank_normalize
from .realize import is_distinct_realizable, nesting_realization, standard_sequence
from .degrees import from_degree_sequence, remove_degree_two_vertex, select_removable_two, trace_reduction
from .bijections import (
    Bracketing,
    ParenString,
    balanced_words,
    bracketings,
    overline,
    parse_bracketing,
    parse_parens,
    psi,
    psi_inv,
    toggle_top_edge,
    xi,
    xi_inv,
)
from .combinatorics import catalan, catalan_identity_check, schroder_large, schroder_little
from .enumeration import (
    Census,
    VGCensusReport,
    degree_census,
    enumerate_all_bijective,
    enumerate_all_bruteforce,
    enumerate_distinct_bijective,
    enumerate_distinct_bruteforce,
    max_neighbor_census,
    sample_vg_census,
)
from .exceptions import HVGError

__all__ = [
    'Graph', 'GraphStatistics', 'NestingProfile',
    'add_edge_non_nested', 'decompose', 'degree_sequence', 'graph_statistics',
    'induced_interval', 'is_hvg', 'is_non_crossing', 'max_neighbor', 'neighbors',
    'nesting_degree', 'nesting_profile', 'non_nested', 'one_sum', 'path',
    'remove_edge', 'remove_vertex',
    'TimedSequence', 'build_fast', 'build_naive', 'build_vg', 'ensure_sequence', 'rank_normalize',
    'is_distinct_realizable', 'nesting_realization', 'standard_sequence',
    'from_degree_sequence', 'remove_degree_two_vertex', 'select_removable_two', 'trace_reduction',
    'Bracketing', 'ParenString', 'balanced_words', 'bracketings', 'overline',
    'parse_bracketing', 'parse_parens', 'psi', 'psi_inv', 'toggle_top_edge', 'xi', 'xi_inv',
    'catalan', 'catalan_identity_check', 'schroder_large', 'schroder_little',
    'Census', 'VGCensusReport', 'degree_census',
    'enumerate_all_bijective', 'enumerate_all_bruteforce',
    'enumerate_distinct_bijective', 'enumerate_distinct_bruteforce',
    'max_neighbor_census', 'sample_vg_census',
    'HVGError',
]
