"""
HVG工具包 - 主入口

配置日志后把命令行参数交给 cli.main 中的 click 命令组处理。

    python main.py build series.txt --format dot
    python main.py census 7 --universe all --degrees
"""

from cli.main import main

if __name__ == "__main__":
    main()
