"""
命令行数据模型定义

定义了命令行输出使用的Pydantic数据模型：图文档、统计信息、普查报告和错误详情。
"""

from dataclasses import asdict
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from tools.enumeration import Census, VGCensusReport
from tools.exceptions import HVGError
from tools.graph import Graph, GraphStatistics


class OutputFormat(str, Enum):
    """图文档格式枚举"""
    EDGES = "edges"
    JSON = "json"
    DOT = "dot"


class Universe(str, Enum):
    """普查范围枚举"""
    DISTINCT = "distinct"
    ALL = "all"


class Strategy(str, Enum):
    """普查策略枚举"""
    BRUTE = "brute"
    BIJECTIVE = "bijective"


# 图模型

class GraphDocument(BaseModel):
    """结构化图文档"""
    n: int = Field(..., description="顶点数", ge=1)
    edges: List[Tuple[int, int]] = Field(default_factory=list, description="边列表，1起始，i < j")

    @field_validator("edges")
    @classmethod
    def check_order(cls, edges: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
        for i, j in edges:
            if not i < j:
                raise ValueError(f"edge ({i}, {j}) must satisfy i < j")
        return edges

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphDocument":
        return cls(n=g.n, edges=list(g.edges))

    def to_graph(self) -> Graph:
        return Graph(self.n, self.edges)


class GraphStatisticsModel(BaseModel):
    """图统计模型"""
    node_count: int = Field(..., description="节点数量")
    edge_count: int = Field(..., description="边数量")
    degree_histogram: Dict[int, int] = Field(..., description="度分布")
    average_degree: float = Field(..., description="平均度数")
    graph_density: float = Field(..., description="图密度")
    non_nested_count: int = Field(..., description="非嵌套顶点数")
    max_nesting_degree: int = Field(..., description="最大嵌套度")
    has_top_edge: bool = Field(..., description="是否含边 {1,N}")

    @classmethod
    def from_statistics(cls, stats: GraphStatistics) -> "GraphStatisticsModel":
        return cls(**asdict(stats))


# 普查模型

class CensusReport(BaseModel):
    """普查报告模型"""
    n: int = Field(..., description="顶点数")
    universe: Universe = Field(..., description="普查范围")
    strategy: Strategy = Field(..., description="普查策略")
    count: int = Field(..., description="图数量")
    degree_sequences: Optional[int] = Field(None, description="不同有序度序列数量")
    graphs: Optional[List[GraphDocument]] = Field(None, description="图列表")

    @classmethod
    def from_census(cls, census: Census, universe: Universe, strategy: Strategy,
                    degree_sequences: Optional[int] = None, with_graphs: bool = False) -> "CensusReport":
        return cls(
            n=census.n,
            universe=universe,
            strategy=strategy,
            count=len(census),
            degree_sequences=degree_sequences,
            graphs=[GraphDocument.from_graph(g) for g in census] if with_graphs else None,
        )


class VGCensusModel(BaseModel):
    """VG随机普查报告模型"""
    n: int = Field(..., description="顶点数")
    distinct: int = Field(..., description="找到的不同VG数量")
    trials: int = Field(..., description="实际抽取的序列数")
    last_new_trial: int = Field(..., description="最后一次发现新图的抽取序号")
    seed: int = Field(..., description="随机种子")
    value_range: Tuple[int, int] = Field(..., description="取值范围")
    exhaustive: bool = Field(False, description="是否穷举")
    note: str = Field("randomized search, no guarantee to have found every graph", description="说明")

    @classmethod
    def from_report(cls, report: VGCensusReport) -> "VGCensusModel":
        return cls(
            n=report.n,
            distinct=report.distinct,
            trials=report.trials,
            last_new_trial=report.last_new_trial,
            seed=report.seed,
            value_range=(report.low, report.high),
            exhaustive=report.exhaustive,
        )


# 错误模型

class ErrorDetail(BaseModel):
    """错误详情模型"""
    error_code: str = Field(..., description="错误代码")
    error_type: str = Field(..., description="错误类型")
    error_message: str = Field(..., description="错误消息")
    details: Optional[Dict[str, int]] = Field(None, description="详细信息")

    @classmethod
    def from_error(cls, error: HVGError) -> "ErrorDetail":
        details = {
            key: getattr(error, key)
            for key in ("position", "line", "column")
            if getattr(error, key, None) is not None
        }
        return cls(
            error_code=error.error_code,
            error_type=error.category,
            error_message=error.message,
            details=details or None,
        )
