"""Experiment orchestration: synthetic study, baseball study and coverage checks."""

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Dict, Iterable, List, Sequence, Tuple

import structlog

from anytime_cs.analytics.metrics import summarize_coverage
from anytime_cs.models import (
    BettingConfig,
    BootstrapConfig,
    CoverageSummary,
    CsConfig,
    ExperimentRecord,
    Interval,
    Method,
    PlayerRecord,
    SimulationTruth,
    UniformCoverage,
)
from anytime_cs.sequences import BettingCS, make_engine
from anytime_cs.sequences.betting import ever_rejected
from anytime_cs.simulation.generators import draw_stream

logger = structlog.get_logger()

ALL_METHODS: Tuple[Method, ...] = (Method.BETTING, Method.PREB, Method.BOOTSTRAP)
BASEBALL_METHODS: Tuple[Method, ...] = (Method.BETTING, Method.BOOTSTRAP)
SYNTHETIC_TRUTH = SimulationTruth(family="beta", a=10.0, b=30.0)


def run_synthetic(
    cfg: CsConfig,
    bcfg: BettingConfig,
    bscfg: BootstrapConfig,
    seed: int,
    replication: int = 0,
    truth: SimulationTruth = SYNTHETIC_TRUTH,
    methods: Sequence[Method] = ALL_METHODS,
) -> List[ExperimentRecord]:
    """Feed one stream of length cfg.horizon to every engine; one record per (method, t)."""
    xs = draw_stream(truth, cfg.horizon, seed, key=(replication,))
    bscfg = bscfg.model_copy(update={"seed": seed})
    engines = {m: make_engine(m, cfg, bcfg, bscfg, stream_id=replication) for m in methods}

    records: List[ExperimentRecord] = []
    for t, x in enumerate(xs, start=1):
        for method, engine in engines.items():
            interval = engine.update(float(x))
            records.append(ExperimentRecord.from_interval(method, t, interval, replication, seed))

    records.sort(key=lambda r: r.sort_key)
    logger.debug(
        "synthetic_replication_done",
        replication=replication,
        seed=seed,
        horizon=cfg.horizon,
        final_widths={m.value: engines[m].interval.width for m in methods},
    )
    return records


def run_synthetic_replications(
    cfg: CsConfig,
    bcfg: BettingConfig,
    bscfg: BootstrapConfig,
    seed: int,
    replications: int,
    workers: int = 1,
    truth: SimulationTruth = SYNTHETIC_TRUTH,
    methods: Sequence[Method] = ALL_METHODS,
) -> List[ExperimentRecord]:
    """Independent replications 0..R-1 merged in (replication, method, t) order."""
    run = partial(run_synthetic, cfg, bcfg, bscfg, seed, truth=truth, methods=tuple(methods))
    logger.info("synthetic_study_started", replications=replications, workers=workers, seed=seed)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run, range(replications)))
    else:
        chunks = [run(r) for r in range(replications)]

    records = [record for chunk in chunks for record in chunk]
    records.sort(key=lambda r: r.sort_key)
    logger.info("synthetic_study_done", records=len(records))
    return records


def _final_interval(
    method: Method,
    player: PlayerRecord,
    replication: int,
    replications: int,
    cfg: CsConfig,
    bcfg: BettingConfig,
    bscfg: BootstrapConfig,
    seed: int,
) -> Interval:
    truth = SimulationTruth(family="bernoulli", p=player.p_hat45)
    xs = draw_stream(truth, player.at_bats, seed, key=(replication, player.player_id))
    stream_id = player.player_id * replications + replication
    engine = make_engine(method, cfg, bcfg, bscfg, stream_id=stream_id)
    for x in xs:
        engine.update(float(x))
    return engine.interval


def _baseball_player(
    player: PlayerRecord,
    replications: int,
    cfg: CsConfig,
    bcfg: BettingConfig,
    bscfg: BootstrapConfig,
    seed: int,
    methods: Sequence[Method],
) -> List[CoverageSummary]:
    summaries = []
    for method in methods:
        finals = [
            _final_interval(method, player, r, replications, cfg, bcfg, bscfg, seed)
            for r in range(replications)
        ]
        summaries.append(summarize_coverage(player.player_id, method, finals, player.p_true))
    logger.debug(
        "baseball_player_done",
        player_id=player.player_id,
        coverage={s.method.value: s.coverage_prob for s in summaries},
    )
    return summaries


def validate_dataset(dataset: Sequence[PlayerRecord]) -> None:
    if not dataset:
        raise ValueError("baseball dataset is empty")
    ids = [p.player_id for p in dataset]
    if len(set(ids)) != len(ids):
        raise ValueError("baseball dataset has duplicate player ids")
    at_bats = {p.at_bats for p in dataset}
    if len(at_bats) != 1:
        raise ValueError(f"players must share one at-bat count, got {sorted(at_bats)}")


def run_baseball(
    dataset: Sequence[PlayerRecord],
    replications: int,
    cfg: CsConfig,
    bcfg: BettingConfig,
    bscfg: BootstrapConfig,
    seed: int,
    workers: int = 1,
    methods: Sequence[Method] = BASEBALL_METHODS,
) -> List[CoverageSummary]:
    """Coverage of p_true by each engine's interval after the first at-bats.

    Each replication simulates the at-bats as i.i.d. Bernoulli(p_hat45).
    """
    if replications < 1:
        raise ValueError(f"replications must be >= 1, got {replications}")
    validate_dataset(dataset)
    bscfg = bscfg.model_copy(update={"seed": seed})
    run = partial(
        _baseball_player,
        replications=replications,
        cfg=cfg,
        bcfg=bcfg,
        bscfg=bscfg,
        seed=seed,
        methods=tuple(methods),
    )
    logger.info("baseball_study_started", players=len(dataset), replications=replications)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(run, dataset))
    else:
        chunks = [run(player) for player in dataset]

    summaries = [s for chunk in chunks for s in chunk]
    summaries.sort(key=lambda s: (s.unit_id, s.method.value))
    logger.info("baseball_study_done", summaries=len(summaries))
    return summaries


def run_coverage_study(
    method: Method,
    truth: SimulationTruth,
    cfg: CsConfig,
    bcfg: BettingConfig,
    bscfg: BootstrapConfig,
    replications: int,
    seed: int,
) -> UniformCoverage:
    """Fraction of replications whose sequence ever excludes the true mean before cfg.horizon."""
    misses = 0
    for r in range(replications):
        xs = draw_stream(truth, cfg.horizon, seed, key=(r,))
        engine = make_engine(method, cfg, bcfg, bscfg.model_copy(update={"seed": seed}), r)
        for x in xs:
            if not engine.update(float(x)).contains(truth.mu_true):
                misses += 1
                break

    result = UniformCoverage(
        method=method,
        mu_true=truth.mu_true,
        horizon=cfg.horizon,
        replications=replications,
        miscoverage=misses / replications,
    )
    logger.info("coverage_study_done", **result.model_dump(mode="json"))
    return result


def run_ville_check(
    truth: SimulationTruth,
    m: float,
    bcfg: BettingConfig,
    horizon: int,
    replications: int,
    seed: int,
) -> float:
    """Fraction of replications in which sup_t of the hedged wealth at m reaches 1/alpha."""
    crossings = 0
    for r in range(replications):
        engine = BettingCS(bcfg)
        j = engine.grid_index(m)
        for x in draw_stream(truth, horizon, seed, key=(r,)):
            engine.update(float(x))
            if ever_rejected(engine.state, bcfg)[j]:
                crossings += 1
                break
    return crossings / replications


def final_intervals(
    records: Iterable[ExperimentRecord],
) -> Dict[Tuple[int, Method], ExperimentRecord]:
    """Last record of every (replication, method)."""
    last: Dict[Tuple[int, Method], ExperimentRecord] = {}
    for record in records:
        key = (record.replication, record.method)
        if key not in last or record.t > last[key].t:
            last[key] = record
    return last

