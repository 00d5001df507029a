//! Multi-start fixed-point ascent over `(S^{d-1})^n`.
//!
//! Within a fixed boundary combinatorics the volume is linear in each
//! vertex, `vol = V + <p, m>/d`, so moving a vertex toward `m/|m|` never
//! decreases the local model and the fixed points are exactly the
//! stationary configurations `p = m/|m|`. A damping factor keeps the
//! iteration stable across combinatorial transitions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::constructions;
use crate::error::{Error, Result};
use crate::numerics::{jacobi_eigh, Matrix};
use crate::polytope::{hull_volume, InscribedPolytope};
use crate::real::{dist, dot, normalized, Real};
use crate::stationarity::{check_property_z, raw_vertex_force, StationarityReport, DEFAULT_Z_TOL};

/// Ascent parameters.
#[derive(Clone, Debug)]
pub struct OptimizerConfig<F> {
    pub dim: usize,
    pub nverts: usize,
    pub starts: usize,
    pub max_iters: usize,
    /// Step damping in (0, 1]; 1 is the pure fixed-point map.
    pub alpha: F,
    /// Convergence threshold on the max vertex displacement per sweep.
    pub move_tol: F,
    pub seed: u64,
}

impl<F: Real> OptimizerConfig<F> {
    pub fn new(dim: usize, nverts: usize) -> Self {
        Self {
            dim,
            nverts,
            starts: 50,
            max_iters: 2000,
            alpha: F::of(0.5),
            move_tol: F::of(1e-10),
            seed: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::InvalidArgument("dimension must be >= 2".into()));
        }
        if self.nverts < self.dim + 1 {
            return Err(Error::InvalidArgument("need at least d+1 vertices".into()));
        }
        if self.starts == 0 {
            return Err(Error::InvalidArgument("starts must be >= 1".into()));
        }
        if self.alpha <= F::zero() || self.alpha > F::one() || self.alpha.is_nan() {
            return Err(Error::InvalidArgument("alpha must lie in (0, 1]".into()));
        }
        if self.move_tol <= F::zero() || self.move_tol.is_nan() {
            return Err(Error::InvalidArgument("move_tol must be positive".into()));
        }
        Ok(())
    }
}

/// Trajectory of one start.
#[derive(Clone, Debug)]
pub struct StartRun<F> {
    /// Hull volume after each sweep.
    pub volumes: Vec<F>,
    pub sweeps: usize,
    pub converged: bool,
    /// Why the start was abandoned, when it was.
    pub failure: Option<String>,
    /// Sweeps where the facet set was unchanged yet the volume dropped
    /// by more than 1e-12 (must stay zero).
    pub monotone_violations: usize,
    /// Stationarity residual of the final configuration, for converged
    /// runs.
    pub final_residual: Option<F>,
}

/// Outcome of a multi-start ascent.
#[derive(Clone, Debug)]
pub struct OptimizerResult<F> {
    pub best: InscribedPolytope<F>,
    pub best_volume: F,
    pub best_start: usize,
    pub runs: Vec<StartRun<F>>,
    pub stationarity: StationarityReport<F>,
}

/// Runs the multi-start ascent.
pub fn ascend<F: Real>(config: &OptimizerConfig<F>) -> Result<OptimizerResult<F>> {
    config.validate()?;
    let mut runs = Vec::with_capacity(config.starts);
    let mut best: Option<(F, Vec<Vec<F>>, usize)> = None;
    for start in 0..config.starts {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(start as u64));
        let initial = sample_start(config, &mut rng)?;
        let (run, final_verts, final_vol) = run_single(config, initial);
        if let Some(vol) = final_vol {
            let better = match &best {
                None => true,
                Some((bv, bverts, _)) => {
                    if vol > *bv + F::of(1e-9) {
                        true
                    } else if vol > *bv - F::of(1e-9) {
                        canonical_lex_less(&final_verts, bverts, config.dim)
                    } else {
                        false
                    }
                }
            };
            if better {
                best = Some((vol, final_verts, start));
            }
        }
        runs.push(run);
    }
    let (best_volume, best_verts, best_start) = best.ok_or_else(|| {
        Error::Degenerate("every start failed before producing a valid polytope".into())
    })?;
    let best = InscribedPolytope::new(config.dim, best_verts)?;
    let stationarity = check_property_z(&best, F::of(DEFAULT_Z_TOL))?;
    Ok(OptimizerResult {
        best,
        best_volume,
        best_start,
        runs,
        stationarity,
    })
}

/// Runs a single trajectory from an explicit start configuration.
/// Exposed for the equivariance and monotonicity checks.
pub fn ascend_from<F: Real>(
    config: &OptimizerConfig<F>,
    initial: Vec<Vec<F>>,
) -> Result<(StartRun<F>, Option<InscribedPolytope<F>>)> {
    config.validate()?;
    let (run, verts, vol) = run_single(config, initial);
    let best = match vol {
        Some(_) => Some(InscribedPolytope::new(config.dim, verts)?),
        None => None,
    };
    Ok((run, best))
}

fn run_single<F: Real>(
    config: &OptimizerConfig<F>,
    initial: Vec<Vec<F>>,
) -> (StartRun<F>, Vec<Vec<F>>, Option<F>) {
    let d = config.dim;
    let n = config.nverts;
    let mut verts = initial;
    let mut run = StartRun {
        volumes: Vec::new(),
        sweeps: 0,
        converged: false,
        failure: None,
        monotone_violations: 0,
        final_residual: None,
    };
    let mut last_force: Vec<Vec<F>> = vec![Vec::new(); n];
    let mut prev_signature: Option<Vec<Vec<usize>>> = None;
    let mut prev_volume: Option<F> = None;
    let mut state: Option<(F, Vec<Vec<F>>)> = None;

    for sweep in 0..config.max_iters {
        let hull = match hull_state(d, &verts, &mut last_force) {
            Ok(h) => h,
            Err(e) => {
                run.failure = Some(e.to_string());
                break;
            }
        };
        let HullState {
            volume,
            signature,
            simplices,
            repaired,
        } = hull;
        if let Some(rep) = repaired {
            verts = rep;
        }
        if let (Some(prev_sig), Some(prev_vol)) = (&prev_signature, prev_volume) {
            if *prev_sig == signature && volume < prev_vol - F::of(1e-12) {
                run.monotone_violations += 1;
            }
        }
        run.volumes.push(volume);
        run.sweeps = sweep + 1;
        state = Some((volume, verts.clone()));
        prev_signature = Some(signature);
        prev_volume = Some(volume);

        // one Gauss-Seidel sweep against the frozen combinatorics
        let mut max_move = F::zero();
        for i in 0..n {
            let vf = match raw_vertex_force(&verts, &simplices, d, i) {
                Ok(vf) => vf,
                Err(e) => {
                    run.failure = Some(e.to_string());
                    return finish_run(run, verts, state);
                }
            };
            let dir = match normalized(&vf.force) {
                Some(u) => u,
                None => continue, // zero force: leave the vertex in place
            };
            last_force[i] = dir.clone();
            let mut blended: Vec<F> = verts[i]
                .iter()
                .zip(&dir)
                .map(|(&p, &m)| (F::one() - config.alpha) * p + config.alpha * m)
                .collect();
            match normalized(&blended) {
                Some(u) => blended = u,
                None => continue,
            }
            max_move = max_move.max(dist(&blended, &verts[i]));
            verts[i] = blended;
        }
        if max_move < config.move_tol {
            run.converged = true;
            break;
        }
    }
    if run.converged {
        if let Ok(p) = InscribedPolytope::new(d, verts.clone()) {
            if let Ok(report) = check_property_z(&p, F::of(DEFAULT_Z_TOL)) {
                run.final_residual = Some(report.max_residual);
            }
        }
    }
    finish_run(run, verts, state)
}

fn finish_run<F: Real>(
    mut run: StartRun<F>,
    verts: Vec<Vec<F>>,
    state: Option<(F, Vec<Vec<F>>)>,
) -> (StartRun<F>, Vec<Vec<F>>, Option<F>) {
    match state {
        Some((vol, best_verts)) => {
            if run.converged {
                // converged: current coordinates are the fixed point
                (run, verts, Some(vol))
            } else {
                (run, best_verts, Some(vol))
            }
        }
        None => {
            if run.failure.is_none() {
                run.failure = Some("no valid hull was ever built".into());
            }
            (run, verts, None)
        }
    }
}

struct HullState<F> {
    volume: F,
    signature: Vec<Vec<usize>>,
    simplices: Vec<Vec<usize>>,
    repaired: Option<Vec<Vec<F>>>,
}

/// Builds the hull of the current coordinates, reprojecting vertices
/// that numerically fell inside the hull of the others (sent to the
/// direction of their last force, away from the opposing cap).
fn hull_state<F: Real>(
    d: usize,
    verts: &[Vec<F>],
    last_force: &mut [Vec<F>],
) -> Result<HullState<F>> {
    let attempt = |vs: &[Vec<F>]| -> Result<(InscribedPolytope<F>, Vec<usize>)> {
        InscribedPolytope::new_allowing_interior(d, vs.to_vec())
    };
    let (mut poly, mut interior) = attempt(verts)?;
    let mut repaired = None;
    if !interior.is_empty() {
        let mut fixed = verts.to_vec();
        for &i in &interior {
            let dir = if last_force[i].is_empty() {
                let mut c = vec![F::zero(); d];
                for (j, v) in fixed.iter().enumerate() {
                    if j != i {
                        for (ck, &x) in c.iter_mut().zip(v) {
                            *ck -= x;
                        }
                    }
                }
                normalized(&c)
            } else {
                Some(last_force[i].clone())
            };
            match dir {
                Some(u) => fixed[i] = u,
                None => {
                    return Err(Error::Degenerate(
                        "cannot reproject an interior vertex".into(),
                    ))
                }
            }
        }
        let (p2, i2) = attempt(&fixed)?;
        poly = p2;
        interior = i2;
        repaired = Some(fixed);
        if !interior.is_empty() {
            return Err(Error::Degenerate(
                "vertex remains inside the hull after reprojection".into(),
            ));
        }
    }
    if !poly.origin_interior() {
        return Err(Error::Degenerate("origin left the hull interior".into()));
    }
    let complex = poly.triangulate_boundary()?;
    let volume = poly.volume()?;
    let signature: Vec<Vec<usize>> = poly
        .enumerate_facets()
        .iter()
        .map(|f| f.vertex_indices.clone())
        .collect();
    Ok(HullState {
        volume,
        signature,
        simplices: complex.simplices,
        repaired,
    })
}

/// Samples a start: unit Gaussian directions, resampled until the hull
/// is full-dimensional with the origin strictly interior.
fn sample_start<F: Real>(
    config: &OptimizerConfig<F>,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Vec<F>>> {
    for _ in 0..100 {
        let verts: Vec<Vec<F>> = (0..config.nverts)
            .map(|_| {
                loop {
                    let v: Vec<F> = (0..config.dim)
                        .map(|_| F::of(rng.sample::<f64, _>(StandardNormal)))
                        .collect();
                    if let Some(u) = normalized(&v) {
                        return u;
                    }
                }
            })
            .collect();
        if let Ok((poly, interior)) =
            InscribedPolytope::new_allowing_interior(config.dim, verts.clone())
        {
            if interior.is_empty() && poly.origin_interior() {
                return Ok(verts);
            }
        }
    }
    Err(Error::Degenerate(
        "no valid start found after 100 resamples".into(),
    ))
}

/// Canonical tie-breaking order: vertices rotated onto principal axes,
/// then sorted; smaller lexicographic list wins.
fn canonical_lex_less<F: Real>(a: &[Vec<F>], b: &[Vec<F>], d: usize) -> bool {
    let ca = canonical_vertex_list(a, d);
    let cb = canonical_vertex_list(b, d);
    for (x, y) in ca.iter().flatten().zip(cb.iter().flatten()) {
        if x < y {
            return true;
        }
        if x > y {
            return false;
        }
    }
    false
}

fn canonical_vertex_list<F: Real>(verts: &[Vec<F>], d: usize) -> Vec<Vec<F>> {
    let mut moment: Matrix<F> = Matrix::zeros(d, d);
    for v in verts {
        for i in 0..d {
            for j in 0..d {
                moment[(i, j)] += v[i] * v[j];
            }
        }
    }
    let axes = match jacobi_eigh(&moment) {
        Ok((_, v)) => v,
        Err(_) => Matrix::identity(d),
    };
    let mut rotated: Vec<Vec<F>> = verts
        .iter()
        .map(|v| (0..d).map(|c| dot(v, &axes.col(c))).collect())
        .collect();
    rotated.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    rotated
}

/// Perturbation certificate for a stationary polytope.
#[derive(Clone, Debug)]
pub struct Certificate<F> {
    /// First-order residual from the stationarity report.
    pub residual: F,
    pub samples: usize,
    pub radius: F,
    /// Largest volume gain over the base volume across all sampled
    /// single-vertex perturbations (positive means a violation).
    pub worst_violation: F,
    /// Number of samples that beat the base volume by more than 1e-12.
    pub violations: usize,
    pub test: String,
}

/// Tests local maximality by sampled single-vertex perturbations: each
/// sampled move of one vertex along the sphere (geodesic angle at most
/// `radius`) must not increase the hull volume beyond 1e-12.
pub fn certify<F: Real>(
    polytope: &InscribedPolytope<F>,
    samples: usize,
    radius: F,
    seed: u64,
) -> Result<Certificate<F>> {
    let report = check_property_z(polytope, F::of(DEFAULT_Z_TOL))?;
    let d = polytope.dim();
    let n = polytope.vertex_count();
    let base = polytope.volume()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = F::neg_infinity();
    let mut violations = 0usize;
    for _ in 0..samples {
        let i = rng.random_range(0..n);
        let p = polytope.vertex(i);
        // random tangent direction at p
        let tangent = loop {
            let g: Vec<F> = (0..d)
                .map(|_| F::of(rng.sample::<f64, _>(StandardNormal)))
                .collect();
            let proj = dot(&g, p);
            let t: Vec<F> = g.iter().zip(p).map(|(&x, &pi)| x - proj * pi).collect();
            if let Some(u) = normalized(&t) {
                break u;
            }
        };
        let angle = radius * F::of(rng.random::<f64>());
        let (c, s) = (angle.cos(), angle.sin());
        let moved: Vec<F> = p.iter().zip(&tangent).map(|(&pi, &ti)| c * pi + s * ti).collect();
        let mut verts = polytope.vertices().to_vec();
        verts[i] = moved;
        let vol = hull_volume(&verts, d)?;
        let gain = vol - base;
        worst = worst.max(gain);
        if gain > F::of(1e-12) {
            violations += 1;
        }
    }
    Ok(Certificate {
        residual: report.max_residual,
        samples,
        radius,
        worst_violation: worst,
        violations,
        test: "first-order residual + sampled single-vertex perturbations".into(),
    })
}

/// Comparison of the known families at `n = d + 3` for even `d`.
#[derive(Clone, Debug)]
pub struct EvenDComparison<F> {
    pub d: usize,
    pub n: usize,
    /// Volume of the trigonometric cyclic polytope `C_d(d+3)`.
    pub cyclic_volume: F,
    /// Volume of the balanced orthogonal simplex product.
    pub product_volume: F,
    /// Best volume found by the ascent.
    pub ascend_best: F,
    pub ascend_identification: Option<String>,
    /// Candidates sorted by volume, descending.
    pub ranking: Vec<(String, F)>,
    /// True when no closed form backs the comparison (d = 8).
    pub experimental: bool,
}

/// Compares `C_d(d+3)`, the orthogonal simplex product, and the ascent's
/// best find for even `d` up to 8. For `d = 8` no closed form exists and
/// the output is labeled experimental.
pub fn compare_even_d<F: Real>(
    d: usize,
    config: Option<OptimizerConfig<F>>,
) -> Result<EvenDComparison<F>> {
    if !d.is_multiple_of(2) || !(4..=8).contains(&d) {
        return Err(Error::Unsupported(
            "comparison is defined for even d in 4..=8".into(),
        ));
    }
    let n = d + 3;
    let cyclic = constructions::cyclic_trig::<F>(d, n)?.volume()?;
    let product = constructions::optimal_dplus3::<F>(d)?.volume()?;
    let config = config.unwrap_or_else(|| {
        let mut c = OptimizerConfig::new(d, n);
        c.starts = 12;
        c.max_iters = 1200;
        c.move_tol = F::of(1e-9);
        c
    });
    let result = ascend(&config)?;
    let ident = crate::gram::identify_realization(result.best.vertices())
        .ok()
        .map(|i| i.to_string());
    let mut ranking = vec![
        (format!("C_{d}({n})"), cyclic),
        ("orthogonal simplex product".into(), product),
        ("ascent best".into(), result.best_volume),
    ];
    ranking.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    Ok(EvenDComparison {
        d,
        n,
        cyclic_volume: cyclic,
        product_volume: product,
        ascend_best: result.best_volume,
        ascend_identification: ident,
        ranking,
        experimental: d == 8,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds;

    fn quick_config(d: usize, n: usize, starts: usize) -> OptimizerConfig<f64> {
        let mut c = OptimizerConfig::new(d, n);
        c.starts = starts;
        c.max_iters = 1500;
        c.move_tol = 1e-10;
        c
    }

    #[test]
    fn pentagon_is_recovered() {
        let r = ascend(&quick_config(2, 5, 8)).unwrap();
        let target = 2.5 * (2.0 * std::f64::consts::PI / 5.0).sin();
        assert!(
            (r.best_volume - target).abs() < 1e-7,
            "pentagon volume {} vs {target}",
            r.best_volume
        );
        assert!(r.stationarity.max_residual <= 1e-6);
    }

    #[test]
    fn bipyramid_is_recovered_in_three_dims() {
        let r = ascend(&quick_config(3, 5, 10)).unwrap();
        let target = bounds::v_dplus2::<f64>(3).unwrap();
        assert!(
            (r.best_volume - target).abs() < 1e-6,
            "d=3 n=5 volume {} vs {target}",
            r.best_volume
        );
    }

    #[test]
    fn no_monotone_violations_on_record() {
        let r = ascend(&quick_config(3, 6, 6)).unwrap();
        for run in &r.runs {
            assert_eq!(run.monotone_violations, 0);
        }
    }

    #[test]
    fn rotation_equivariance() {
        let config = quick_config(3, 6, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let start: Vec<Vec<f64>> = (0..6)
            .map(|_| {
                let v: Vec<f64> = (0..3).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
                normalized(&v).unwrap()
            })
            .collect();
        // make sure this particular start is usable
        let (run_a, best_a) = ascend_from(&config, start.clone()).unwrap();
        let Some(best_a) = best_a else {
            return;
        };
        // rotate by 90 degrees in the xy-plane
        let rotated: Vec<Vec<f64>> = start
            .iter()
            .map(|v| vec![-v[1], v[0], v[2]])
            .collect();
        let (run_b, best_b) = ascend_from(&config, rotated).unwrap();
        let Some(best_b) = best_b else {
            return;
        };
        assert_eq!(run_a.converged, run_b.converged);
        let va = best_a.volume().unwrap();
        let vb = best_b.volume().unwrap();
        assert!((va - vb).abs() < 1e-9, "rotated trajectory: {va} vs {vb}");
    }

    #[test]
    fn certify_accepts_the_octahedron() {
        let p = crate::constructions::optimal_dplus3::<f64>(3).unwrap();
        let c = certify(&p, 200, 1e-2, 1).unwrap();
        assert!(c.residual <= 1e-9);
        assert_eq!(c.violations, 0, "worst violation {}", c.worst_violation);
        assert!(c.worst_violation <= 1e-12);
    }

    #[test]
    fn certify_accepts_p4_and_c47() {
        let p4 = crate::constructions::optimal_dplus3::<f64>(4).unwrap();
        let c = certify(&p4, 500, 1e-2, 2).unwrap();
        assert_eq!(c.violations, 0, "P_4 worst violation {}", c.worst_violation);

        let c47 = crate::constructions::cyclic_trig::<f64>(4, 7).unwrap();
        let c = certify(&c47, 500, 1e-2, 2).unwrap();
        assert_eq!(c.violations, 0, "C_4(7) worst violation {}", c.worst_violation);
        assert!(c.residual <= 1e-9);
    }

    #[test]
    fn certify_flags_a_non_optimum() {
        // square pyramid: moving the apex cannot help, but moving a base
        // vertex toward the fifth "missing" octahedron position gains
        // volume, so violations must show up
        let h = -0.5f64;
        let r = (1.0 - h * h).sqrt();
        let p = InscribedPolytope::new(
            3,
            vec![
                vec![0.0, 0.0, 1.0],
                vec![r, 0.0, h],
                vec![0.0, r, h],
                vec![-r, 0.0, h],
                vec![0.0, -r, h],
            ],
        )
        .unwrap();
        let c = certify(&p, 300, 5e-2, 3).unwrap();
        assert!(c.violations > 0);
        assert!(c.worst_violation > 1e-6);
    }

    #[test]
    fn even_d_comparison_orders_product_first() {
        let mut cfg = OptimizerConfig::new(4, 7);
        cfg.starts = 4;
        cfg.max_iters = 600;
        cfg.move_tol = 1e-8;
        let cmp = compare_even_d::<f64>(4, Some(cfg)).unwrap();
        assert!(cmp.product_volume > cmp.cyclic_volume);
        assert!(!cmp.experimental);
        assert_eq!(cmp.ranking[0].1, cmp.ranking.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max));
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut c = OptimizerConfig::<f64>::new(3, 6);
        c.alpha = 0.0;
        assert!(ascend(&c).is_err());
        let mut c = OptimizerConfig::<f64>::new(3, 2);
        c.starts = 1;
        assert!(ascend(&c).is_err());
    }
}
