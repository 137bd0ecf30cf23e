//! Thread-parallel drivers with deterministic merged output.
//!
//! The census splits by lexicographically-first interval, the radius-one
//! count by the exponent of `Φ_1`; partial results are merged in a fixed
//! order, so the output is identical for every job count.

use std::collections::BTreeMap;
use std::sync::Mutex;

use coxlab_core::exactmath::IntPoly;
use coxlab_core::experiments::{
    chi_of_intervals, count_radius_one_with_phi1_exponent, d_type_poly,
    for_each_antichain_with_first, intervals, mirror_intervals, CensusConvention, Interval,
    RadiusOneCounts, RelationCensus,
};
use coxlab_core::Error;

/// Job count from `--jobs` or the `COXLAB_JOBS` environment variable.
pub fn effective_jobs(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("COXLAB_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .filter(|&j| j >= 1)
    .unwrap_or(1)
}

#[derive(Default)]
struct CensusPartial {
    raw_total: u64,
    total: u64,
    d_type: u64,
    polys: BTreeMap<IntPoly, u64>,
}

/// Parallel census; identical results to the sequential
/// [`coxlab_core::experiments::census_with`].
pub fn parallel_census(
    n: usize,
    min_arrows: usize,
    convention: CensusConvention,
    jobs: usize,
) -> Result<RelationCensus, Error> {
    if n < 4 || n > 16 {
        return Err(Error::Argument("census supported for 4 <= n <= 16".into()));
    }
    let target = d_type_poly(n)?;
    let mut firsts: Vec<Option<Interval>> = Vec::new();
    if convention.include_empty {
        firsts.push(None);
    }
    firsts.extend(intervals(n, min_arrows).into_iter().map(Some));
    let jobs = jobs.max(1).min(firsts.len().max(1));
    let next = Mutex::new(0usize);
    let partials = Mutex::new(Vec::<CensusPartial>::new());
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| {
                let mut local = CensusPartial::default();
                loop {
                    let idx = {
                        let mut guard = next.lock().expect("lock");
                        let idx = *guard;
                        *guard += 1;
                        idx
                    };
                    if idx >= firsts.len() {
                        break;
                    }
                    for_each_antichain_with_first(n, min_arrows, firsts[idx], &mut |rels| {
                        local.raw_total += 1;
                        if convention.identify_opposites
                            && rels > mirror_intervals(n, rels).as_slice()
                        {
                            return;
                        }
                        local.total += 1;
                        let chi = chi_of_intervals(n, rels);
                        if chi == target {
                            local.d_type += 1;
                        }
                        *local.polys.entry(chi).or_insert(0) += 1;
                    });
                }
                partials.lock().expect("lock").push(local);
            });
        }
    });
    let mut merged = CensusPartial::default();
    for p in partials.into_inner().expect("lock") {
        merged.raw_total += p.raw_total;
        merged.total += p.total;
        merged.d_type += p.d_type;
        for (poly, count) in p.polys {
            *merged.polys.entry(poly).or_insert(0) += count;
        }
    }
    Ok(RelationCensus {
        n,
        min_arrows,
        convention,
        total: merged.total,
        raw_total: merged.raw_total,
        distinct_polys: merged.polys.len() as u64,
        d_type_count: merged.d_type,
    })
}

/// Parallel radius-one count by `Φ_1`-exponent pieces.
pub fn parallel_radius_one(n: usize, jobs: usize) -> Result<RadiusOneCounts, Error> {
    if n == 0 {
        return Err(Error::Argument("degree must be >= 1".into()));
    }
    let jobs = jobs.max(1).min(n + 1);
    let next = Mutex::new(0u32);
    let acc = Mutex::new(RadiusOneCounts { n, a: 0, b: 0, c: 0 });
    let mut fail: Option<Error> = None;
    let fail_ref = Mutex::new(&mut fail);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let e1 = {
                    let mut guard = next.lock().expect("lock");
                    let e = *guard;
                    *guard += 1;
                    e
                };
                if e1 as usize > n {
                    break;
                }
                match count_radius_one_with_phi1_exponent(n, e1) {
                    Ok(part) => {
                        let mut total = acc.lock().expect("lock");
                        *total = *total + part;
                    }
                    Err(e) => {
                        let mut f = fail_ref.lock().expect("lock");
                        **f = Some(e);
                        break;
                    }
                }
            });
        }
    });
    if let Some(e) = fail {
        return Err(e);
    }
    Ok(acc.into_inner().expect("lock"))
}
