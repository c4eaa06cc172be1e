"""
项目配置文件
"""

import logging
import os
from dotenv import load_dotenv

# 加载环境变量
load_dotenv()

logger = logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    """读取整数环境变量，非法值回退为默认值"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer, using {default}")
        return default


class Config:
    """项目配置类"""

    # 基础配置
    PROJECT_NAME = os.getenv("PROJECT_NAME", "hvg_toolkit")
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

    # 普查配置
    HVG_WORKERS = max(1, _env_int("HVG_WORKERS", 1))
    HVG_MAX_DISTINCT_N = min(9, _env_int("HVG_MAX_DISTINCT_N", 9))
    HVG_MAX_ALL_N = min(8, _env_int("HVG_MAX_ALL_N", 8))

    # VG随机普查的取值范围
    HVG_VG_MIN_VALUE = _env_int("HVG_VG_MIN_VALUE", 1)
    HVG_VG_MAX_VALUE = _env_int("HVG_VG_MAX_VALUE", 10)

    # 随机命令未显式给出种子时使用的种子
    HVG_DEFAULT_SEED = _env_int("HVG_DEFAULT_SEED", 0)

    # 文件路径配置
    OUTPUT_DIR = os.getenv("OUTPUT_DIR", "output")

    # 性能测试配置
    BENCH_CONFIG = {
        "min_n": 1000,
        "naive_max_n": 20000,
        "adversarial_max_n": 4000,
    }


# 创建配置实例
config = Config()
