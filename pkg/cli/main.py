"""
HVG工具包 - 命令行主程序

子命令：build, realize, from-degrees, encode, decode, census, vg-census, bench, stats。
输入来自文件路径或标准输入，结果写到标准输出；诊断信息写到标准错误。

退出码：0 成功，2 用法错误（click），3 解析错误，4 定义域错误，5 规模错误。
"""

import logging
import sys
from typing import Optional, Tuple

import click

from config import config
from tools.benchmark import run_benchmark, save_benchmark
from tools.bijections import parse_bracketing, parse_parens, psi, psi_inv, xi, xi_inv
from tools.construct import build_fast, build_naive
from tools.degrees import from_degree_sequence
from tools.enumeration import (
    enumerate_all_bijective,
    enumerate_all_bruteforce,
    enumerate_distinct_bijective,
    enumerate_distinct_bruteforce,
    sample_vg_census,
)
from tools.exceptions import DomainError, HVGError, NotRealizableError
from tools.graph import degree_sequence, graph_statistics, is_hvg
from tools.realize import is_distinct_realizable, nesting_realization, standard_sequence
from .formats import (
    parse_graph,
    parse_graphs,
    parse_integers,
    parse_series,
    render_graph,
    render_graphs,
    render_sequence,
)
from .models import (
    CensusReport,
    ErrorDetail,
    GraphStatisticsModel,
    OutputFormat,
    Strategy,
    Universe,
    VGCensusModel,
)

logger = logging.getLogger(__name__)

EXIT_CODES = {
    "parse": 3,
    "domain": 4,
    "size": 5,
}

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

FORMAT_OPTION = click.option(
    "--format", "fmt",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.EDGES.value,
    show_default=True,
    help="图文档格式",
)


def setup_logging(level: Optional[str] = None) -> None:
    """日志写到标准错误，标准输出只留给命令结果"""
    logging.basicConfig(
        level=level or config.LOG_LEVEL,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


class HVGGroup(click.Group):
    """把 HVGError 转换为诊断信息和对应的退出码"""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except HVGError as e:
            options = ctx.obj or {}
            if options.get("json_errors"):
                click.echo(ErrorDetail.from_error(e).model_dump_json(exclude_none=True), err=True)
            else:
                click.echo(f"error[{e.error_code}]: {e.message}", err=True)
            logger.debug(f"command failed with {type(e).__name__}", exc_info=True)
            ctx.exit(EXIT_CODES.get(e.category, EXIT_CODES["domain"]))


@click.group(cls=HVGGroup)
@click.option("--verbose", "-v", is_flag=True, help="输出DEBUG级别日志")
@click.option("--json-errors", is_flag=True, help="以JSON文档输出错误详情")
@click.pass_context
def cli(ctx: click.Context, verbose: bool, json_errors: bool):
    """水平可见图（HVG）工具"""
    ctx.ensure_object(dict)
    ctx.obj["json_errors"] = json_errors
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


# ===================== 构造与实现 =====================

@cli.command()
@click.argument("source", type=click.File("r"), default="-")
@click.option("--algo", type=click.Choice(["naive", "fast"]), default="fast", show_default=True)
@FORMAT_OPTION
def build(source, algo: str, fmt: str):
    """由序列文件构造HVG，每行一个图"""
    builder = build_naive if algo == "naive" else build_fast
    graphs = [builder(values) for values in parse_series(source.read())]
    logger.info(f"built {len(graphs)} graphs with the {algo} algorithm")
    click.echo(render_graphs(graphs, OutputFormat(fmt)))


@cli.command()
@click.argument("source", type=click.File("r"), default="-")
@click.option("--mode", type=click.Choice(["standard", "nesting"]), default="standard", show_default=True)
def realize(source, mode: str):
    """输出实现给定HVG的数据序列"""
    g = parse_graph(source.read())
    if mode == "nesting":
        if not is_hvg(g):
            raise NotRealizableError(f"graph on {g.n} vertices is not a horizontal visibility graph")
        click.echo(render_sequence(nesting_realization(g)))
        return
    if not is_distinct_realizable(g):
        raise DomainError(
            "graph cannot be realized by distinct values: its standard sequence builds a different graph"
        )
    click.echo(render_sequence(standard_sequence(g)))


@cli.command("from-degrees")
@click.argument("deltas", nargs=-1)
@click.option("--file", "source", type=click.File("r"), default=None, help="从文件读取度序列")
@FORMAT_OPTION
def from_degrees(deltas: Tuple[str, ...], source, fmt: str):
    """由有序度序列重建HVG（命令行参数、--file 或标准输入）"""
    if deltas:
        text = " ".join(deltas)
    else:
        text = (source or click.get_text_stream("stdin")).read()
    g = from_degree_sequence(parse_integers(text))
    click.echo(render_graph(g, OutputFormat(fmt)))


# ===================== 双射编码 =====================

CODEC_OPTION = click.option(
    "--codec",
    type=click.Choice(["parens", "brackets"]),
    default="parens",
    show_default=True,
    help="parens: 平衡括号串（ψ）；brackets: 括号化（ξ）",
)


@cli.command()
@click.argument("source", type=click.File("r"), default="-")
@CODEC_OPTION
def encode(source, codec: str):
    """把HVG编码为括号串或括号化"""
    g = parse_graph(source.read())
    word = psi(g) if codec == "parens" else xi_inv(g)
    click.echo(str(word))


@cli.command()
@click.argument("word", required=False)
@CODEC_OPTION
@click.option("--lenient", is_flag=True, help="括号化中允许冗余括号")
@FORMAT_OPTION
def decode(word: Optional[str], codec: str, lenient: bool, fmt: str):
    """把括号串或括号化解码为HVG"""
    if word is None:
        word = click.get_text_stream("stdin").read()
    word = word.strip()
    if codec == "parens":
        g = psi_inv(parse_parens(word))
    else:
        g = xi(parse_bracketing(word, lenient=lenient))
    click.echo(render_graph(g, OutputFormat(fmt)))


# ===================== 普查 =====================

@cli.command()
@click.argument("n", type=int)
@click.option("--universe", type=click.Choice([u.value for u in Universe]), default="distinct", show_default=True)
@click.option("--strategy", type=click.Choice([s.value for s in Strategy]), default="brute", show_default=True)
@click.option("--emit", type=click.Choice(["count", "list", "json"]), default="count", show_default=True)
@click.option("--degrees", is_flag=True, help="同时统计不同有序度序列的个数")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="暴力枚举的进程数")
@FORMAT_OPTION
def census(n: int, universe: str, strategy: str, emit: str, degrees: bool, workers: Optional[int], fmt: str):
    """枚举 n 个顶点上的HVG"""
    universe, strategy = Universe(universe), Strategy(strategy)
    if strategy == Strategy.BRUTE:
        runner = enumerate_distinct_bruteforce if universe == Universe.DISTINCT else enumerate_all_bruteforce
        result = runner(n, workers=workers)
    else:
        runner = enumerate_distinct_bijective if universe == Universe.DISTINCT else enumerate_all_bijective
        result = runner(n)

    sequences = len({degree_sequence(g) for g in result}) if degrees else None
    if emit == "list":
        click.echo(render_graphs(list(result), OutputFormat(fmt)))
    elif emit == "json":
        report = CensusReport.from_census(result, universe, strategy, sequences, with_graphs=True)
        click.echo(report.model_dump_json(exclude_none=True))
    elif degrees:
        click.echo(f"{len(result)} graphs, {sequences} degree sequences")
    else:
        click.echo(str(len(result)))


@cli.command("vg-census")
@click.argument("n", type=int)
@click.option("--trials", type=click.IntRange(min=0), default=100000, show_default=True)
@click.option("--seed", type=int, default=None, help="随机种子，默认取 HVG_DEFAULT_SEED")
@click.option("--low", type=int, default=None, help="取值下限，默认取 HVG_VG_MIN_VALUE")
@click.option("--high", type=int, default=None, help="取值上限，默认取 HVG_VG_MAX_VALUE")
@click.option("--patience", type=click.IntRange(min=1), default=None, help="连续多少次无新图后停止")
@click.option("--json", "as_json", is_flag=True, help="输出JSON报告")
def vg_census(n: int, trials: int, seed: Optional[int], low: Optional[int], high: Optional[int],
              patience: Optional[int], as_json: bool):
    """随机搜索 n 个顶点上的可见图（非穷举）"""
    report = sample_vg_census(n, trials, seed=seed, low=low, high=high, patience=patience)
    if as_json:
        click.echo(VGCensusModel.from_report(report).model_dump_json())
        return
    click.echo(
        f"n={report.n}: {report.distinct} distinct VGs after {report.trials} trials "
        f"(seed {report.seed}, values {report.low}..{report.high}, last new at trial {report.last_new_trial}; "
        f"randomized search, not exhaustive)"
    )


# ===================== 性能与统计 =====================

@cli.command()
@click.option("--max-n", type=click.IntRange(min=2), default=64000, show_default=True)
@click.option("--min-n", type=click.IntRange(min=2), default=None)
@click.option("--repetitions", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--seed", type=int, default=None, help="随机种子，默认取 HVG_DEFAULT_SEED")
@click.option("--save", is_flag=True, help="把计时表写入 OUTPUT_DIR/bench.csv")
def bench(max_n: int, min_n: Optional[int], repetitions: int, seed: Optional[int], save: bool):
    """比较按定义构造与单调栈构造的耗时"""
    table = run_benchmark(max_n, repetitions=repetitions, seed=seed, min_n=min_n)
    click.echo(table.to_string(index=False))
    if save:
        click.echo(f"saved to {save_benchmark(table)}")


@cli.command()
@click.argument("source", type=click.File("r"), default="-")
def stats(source):
    """每个图（或序列文件中每个序列的HVG）的统计信息，每行一个JSON文档"""
    text = source.read()
    first = next((line.strip() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")), "")
    if first.startswith("{") or first.split()[:1] == ["n"]:
        graphs = parse_graphs(text)
    else:
        graphs = [build_fast(values) for values in parse_series(text)]
    for g in graphs:
        click.echo(GraphStatisticsModel.from_statistics(graph_statistics(g)).model_dump_json())


def main() -> None:
    setup_logging()
    cli(prog_name=config.PROJECT_NAME)


if __name__ == "__main__":
    main()
