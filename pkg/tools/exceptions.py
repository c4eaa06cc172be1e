"""
异常定义模块

所有HVG相关操作抛出的异常都继承自 HVGError，并携带错误代码和错误类别，
命令行前端据此选择退出码并生成 ErrorDetail 文档。
"""

from typing import Optional


class HVGError(Exception):
    """HVG工具包的基础异常"""

    error_code = "hvg_error"
    category = "domain"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class InvalidSizeError(HVGError):
    """顶点数或序列长度不合法"""
    error_code = "invalid_size"
    category = "size"


class SizeError(HVGError):
    """枚举规模超出支持范围"""
    error_code = "size_out_of_range"
    category = "size"


class InvalidVertexError(HVGError):
    error_code = "invalid_vertex"


class NoNeighborError(HVGError):
    error_code = "no_neighbor"


class InvalidIntervalError(HVGError):
    error_code = "invalid_interval"


class InvalidEdgeError(HVGError):
    error_code = "invalid_edge"


class InvalidTimeError(HVGError):
    error_code = "invalid_time"


class NotRealizableError(HVGError):
    """图不是任何数据序列的HVG"""
    error_code = "not_realizable"


class InvalidDegreeSequenceError(HVGError):
    """度序列不是 G_{N,≠} 中任何图的有序度序列"""
    error_code = "invalid_degree_sequence"


class DomainError(HVGError):
    """输入不在操作的定义域内"""
    error_code = "domain_error"


class ArithmeticIntegrityError(HVGError):
    """精确整数运算中出现了不应出现的余数"""
    error_code = "arithmetic_integrity"


class ParseError(HVGError):
    """
    文本解析错误

    Args:
        message: 错误描述
        position: 出错字符在单词中的0起始位置
        line: 出错行号（1起始，文件输入时）
        column: 出错列号（1起始，文件输入时）
    """

    error_code = "parse_error"
    category = "parse"

    def __init__(self, message: str, position: Optional[int] = None,
                 line: Optional[int] = None, column: Optional[int] = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if position is not None and column is None:
            location.append(f"position {position}")
        full = f"{message} ({', '.join(location)})" if location else message
        super().__init__(full)
        self.position = position
        self.line = line
        self.column = column
