//! Evaluation of instance checks and one-off queries.

use std::thread;
use std::time::{Duration, Instant};

use setcalc_core::oracle::{compare_cones, sampled_limiting_cone, OracleComparison, SampleGrid};
use setcalc_core::subcalc::{self, ConeKind, SubdiffKind, SubdiffResult};
use setcalc_core::varcone::{frechet_normal_cone, limiting_normal_cone};
use setcalc_core::verifier::{self, CheckReport};
use setcalc_core::{Error, PolySet, RatVec, Rational};

use crate::instance::{CheckSpec, Instance};

/// Result of one check, in instance order.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub index: usize,
    pub spec: CheckSpec,
    pub result: Result<CheckReport, Error>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(&self.result, Ok(r) if r.passed())
    }
}

fn split<'a>(p: &'a RatVec, sizes: &[usize]) -> Vec<&'a [Rational]> {
    let mut out = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &n in sizes {
        out.push(&p[start..start + n]);
        start += n;
    }
    out
}

/// Runs one check. Names are assumed resolved, as `parse_instance` guarantees.
pub fn run_check(inst: &Instance, spec: &CheckSpec) -> Result<CheckReport, Error> {
    let map = |n: &String| &inst.maps[n];
    let cone = |n: &String| &inst.cones[n];
    let point = |n: &String| &inst.points[n];
    match spec {
        CheckSpec::SumRule { maps, cone: c, point: p } => {
            let f1 = map(&maps[0]);
            let xz = split(point(p), &[f1.dom_dim(), f1.rng_dim()]);
            verifier::check_sum_rule(f1, map(&maps[1]), cone(c), xz[0], xz[1])
        }
        CheckSpec::EpiSumIdentity { maps, cone: c } => {
            verifier::check_epi_sum_identity(map(&maps[0]), map(&maps[1]), cone(c))
        }
        CheckSpec::ChainRule { inner, outer, cones, point: p } => {
            let (g, f) = (map(inner), map(outer));
            let xz = split(point(p), &[g.dom_dim(), f.rng_dim()]);
            verifier::check_chain_rule(g, f, cone(&cones[0]), cone(&cones[1]), xz[0], xz[1])
        }
        CheckSpec::SingleValuedChain { inner, outer, cones, point: p } => {
            let (g, f) = (map(inner), map(outer));
            let xz = split(point(p), &[g.dom_dim(), f.rng_dim()]);
            verifier::check_single_valued_chain(g, f, cone(&cones[0]), cone(&cones[1]), xz[0], xz[1])
        }
        CheckSpec::WellposedChain { inner, outer, cones, point: p } => {
            let (g, f) = (map(inner), map(outer));
            let xyz = split(point(p), &[g.dom_dim(), g.rng_dim(), f.rng_dim()]);
            verifier::check_wellposed_chain(g, f, cone(&cones[0]), cone(&cones[1]), xyz[0], xyz[1], xyz[2])
        }
        CheckSpec::EpiChainIdentity { inner, outer, cones } => {
            verifier::check_epi_chain_identity(map(inner), map(outer), cone(&cones[0]), cone(&cones[1]))
        }
        CheckSpec::RestrictedSum { map: f, set, cone: c, point: p } => {
            let f = map(f);
            let xz = split(point(p), &[f.dom_dim(), f.rng_dim()]);
            verifier::check_restricted_sum(f, &inst.sets[set], cone(c), xz[0], xz[1])
        }
        CheckSpec::IndicatorIdentity { set, cone: c, point: p } => {
            verifier::check_indicator_identity(&inst.sets[set], cone(c), point(p))
        }
    }
}

fn timed(inst: &Instance, index: usize) -> Outcome {
    let spec = inst.checks[index].clone();
    let start = Instant::now();
    let result = run_check(inst, &spec).map(|mut r| {
        r.elapsed = Some(start.elapsed());
        r
    });
    Outcome { index, spec, result }
}

/// Runs every check on up to `jobs` threads; the result order is the instance order.
pub fn run_checks(inst: &Instance, jobs: usize) -> Vec<Outcome> {
    let n = inst.checks.len();
    let jobs = jobs.clamp(1, n.max(1));
    if jobs == 1 {
        return (0..n).map(|i| timed(inst, i)).collect();
    }
    let mut slots: Vec<Option<Outcome>> = vec![None; n];
    thread::scope(|scope| {
        let workers: Vec<_> = (0..jobs)
            .map(|w| scope.spawn(move || (w..n).step_by(jobs).map(|i| timed(inst, i)).collect::<Vec<_>>()))
            .collect();
        for worker in workers {
            for outcome in worker.join().expect("check worker panicked") {
                let i = outcome.index;
                slots[i] = Some(outcome);
            }
        }
    });
    slots.into_iter().map(|o| o.expect("every check ran")).collect()
}

/// Regular and limiting normal cones of a named set.
pub struct NormalCones {
    pub regular: PolySet,
    pub limiting: PolySet,
}

pub fn normal_cones(set: &PolySet, x: &[Rational]) -> Result<NormalCones, Error> {
    Ok(NormalCones {
        regular: PolySet::from(frechet_normal_cone(set, x)?),
        limiting: limiting_normal_cone(set, x)?.into_set(),
    })
}

/// `D*F(x̄, z̄)(z*)` with the point given as the tuple `(x̄, z̄)`.
pub fn coderivative(inst: &Instance, map: &str, point: &RatVec, dual: &RatVec, kind: ConeKind) -> Result<PolySet, Error> {
    let f = inst.maps.get(map).ok_or_else(|| Error::InvalidArgument(format!("undefined map \"{map}\"")))?;
    check_len(point, f.dom_dim() + f.rng_dim())?;
    let xz = split(point, &[f.dom_dim(), f.rng_dim()]);
    subcalc::coderivative(f, xz[0], xz[1], dual, kind)
}

pub fn subdiff(
    inst: &Instance,
    map: &str,
    cone: &str,
    point: &RatVec,
    kind: SubdiffKind,
) -> Result<SubdiffResult, Error> {
    let f = inst.maps.get(map).ok_or_else(|| Error::InvalidArgument(format!("undefined map \"{map}\"")))?;
    let theta = inst.cones.get(cone).ok_or_else(|| Error::InvalidArgument(format!("undefined cone \"{cone}\"")))?;
    check_len(point, f.dom_dim() + f.rng_dim())?;
    let xz = split(point, &[f.dom_dim(), f.rng_dim()]);
    subcalc::subdiff_of_kind(f, theta, xz[0], xz[1], kind)
}

fn check_len(point: &RatVec, expected: usize) -> Result<(), Error> {
    if point.dim() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found: point.dim() })
    }
}

/// One sampled-versus-exact comparison of a limiting normal cone.
pub struct OracleRow {
    pub set: String,
    pub point: String,
    pub exact: PolySet,
    pub comparison: OracleComparison,
    pub elapsed: Duration,
}

/// Grid resolution for the limiting sampler; the angular resolution is chosen by the caller.
pub const ORACLE_GRID: usize = 4;

pub fn oracle_compare(set: &PolySet, x: &[Rational], resolution: usize) -> Result<(PolySet, OracleComparison), Error> {
    let exact = limiting_normal_cone(set, x)?;
    let grid = SampleGrid::local(set, x, ORACLE_GRID)?;
    let sampled = sampled_limiting_cone(set, x, &grid, resolution)?;
    let cmp = compare_cones(&exact, &sampled, resolution)?;
    Ok((exact.into_set(), cmp))
}

/// Every `(set, point)` pair of the instance where the point lies in the set, or the requested one.
pub fn oracle_rows(inst: &Instance, only: Option<(&str, &str)>, resolution: usize) -> Result<Vec<OracleRow>, Error> {
    let mut rows = Vec::new();
    for (sname, set) in &inst.sets {
        for (pname, p) in &inst.points {
            let wanted = match only {
                Some((s, q)) => s == sname && q == pname,
                None => p.dim() == set.dim() && set.dim() <= setcalc_core::oracle::MAX_DIM && set.member(p),
            };
            if !wanted {
                continue;
            }
            let start = Instant::now();
            let (exact, comparison) = oracle_compare(set, p, resolution)?;
            rows.push(OracleRow { set: sname.clone(), point: pname.clone(), exact, comparison, elapsed: start.elapsed() });
        }
    }
    if let (Some((s, q)), true) = (only, rows.is_empty()) {
        return Err(Error::InvalidArgument(format!("unknown set \"{s}\" or point \"{q}\"")));
    }
    Ok(rows)
}
