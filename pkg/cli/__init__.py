"""
HVG工具包 - 命令行前端

- models: 输出文档的Pydantic数据模型
- formats: 序列文件与图文档的解析和渲染
- main: click 命令组
"""
