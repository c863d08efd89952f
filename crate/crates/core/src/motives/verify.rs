use std::time::Instant;

use serde::Serialize;

use super::adhm::{adhm_motive_with, AdhmConfig};
use super::bb::bb_motive;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Outcome of comparing the closed formula with the ADHM prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub g: usize,
    pub r: usize,
    pub p: usize,
    pub equal: bool,
    #[serde(skip)]
    pub bb: Polynomial,
    #[serde(skip)]
    pub diff: Polynomial,
    pub ms_bb: Option<u64>,
    pub ms_adhm: Option<u64>,
    pub window: (i64, i64),
}

/// Computes both motives for `(g, r, p)`; timings are recorded only when
/// `timings` is set so that reports stay reproducible.
pub fn verify_pair(g: usize, r: usize, p: usize, timings: bool) -> Result<PairReport> {
    let t0 = Instant::now();
    let bb = bb_motive(g, r, p)?;
    let ms_bb = t0.elapsed().as_millis() as u64;
    let t1 = Instant::now();
    let adhm = adhm_motive_with(g, r, p, &AdhmConfig::default())?;
    let ms_adhm = t1.elapsed().as_millis() as u64;
    let diff = &bb - &adhm.motive;
    Ok(PairReport {
        g,
        r,
        p,
        equal: diff.is_zero(),
        bb,
        diff,
        ms_bb: timings.then_some(ms_bb),
        ms_adhm: timings.then_some(ms_adhm),
        window: adhm.window,
    })
}

#[derive(Serialize)]
struct ReportLine {
    g: usize,
    r: usize,
    p: usize,
    equal: bool,
    motive: String,
    window: (i64, i64),
    ms_bb: Option<u64>,
    ms_adhm: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diff: Option<String>,
}

/// JSON report of a sweep: one object per triple in grid order, with the
/// canonical motive and, for unequal pairs, the difference.
pub fn report_json(reports: &[PairReport]) -> String {
    let lines: Vec<ReportLine> = reports
        .iter()
        .map(|r| ReportLine {
            g: r.g,
            r: r.r,
            p: r.p,
            equal: r.equal,
            motive: r.bb.render_canonical(),
            window: r.window,
            ms_bb: r.ms_bb,
            ms_adhm: r.ms_adhm,
            diff: (!r.equal).then(|| r.diff.render_canonical()),
        })
        .collect();
    serde_json::to_string_pretty(&lines).expect("report serializes")
}

/// Runs [`verify_pair`] over the grid on `jobs` threads. Results come back
/// in `(g, r, p)` order; `on_done` sees each one as it finishes.
pub fn sweep<F>(
    gs: &[usize],
    rs: &[usize],
    ps: &[usize],
    jobs: usize,
    timings: bool,
    on_done: F,
) -> Result<Vec<PairReport>>
where
    F: Fn(&Result<PairReport>) + Sync,
{
    use rayon::prelude::*;
    let mut grid = Vec::new();
    for &g in gs {
        for &r in rs {
            for &p in ps {
                grid.push((g, r, p));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let results: Vec<Result<PairReport>> = pool.install(|| {
        grid.par_iter()
            .map(|&(g, r, p)| {
                let res = verify_pair(g, r, p, timings);
                on_done(&res);
                res
            })
            .collect()
    });
    results.into_iter().collect()
}
