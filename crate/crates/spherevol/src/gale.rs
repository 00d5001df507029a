//! Gale transforms and diagrams of polytopes with few vertices.
//!
//! The transform sends the n vertices to n points in `R^{n-d-1}`; faces
//! of the polytope correspond to cofaces whose convex hull has the
//! origin in its relative interior. Only codimensions 0, 1 and 2 are
//! supported (n <= d+3), which covers every instance here.

use crate::error::{Error, Result};
use crate::numerics::Matrix;
use crate::polytope::InscribedPolytope;
use crate::real::{dist, dot, normalized, Real};

/// Points within this distance coincide (multiplicity detection).
pub const MERGE_TOL: f64 = 1e-7;
/// Angular tolerance when merging diagram directions into diameters.
pub const ANGLE_TOL: f64 = 1e-6;

/// A Gale diagram: one labeled point per polytope vertex in `R^{codim}`.
#[derive(Clone, Debug)]
pub struct GaleDiagram<F> {
    pub codim: usize,
    pub points: Vec<Vec<F>>,
    /// `labels[k]` is the polytope vertex represented by `points[k]`.
    pub labels: Vec<usize>,
}

/// A maximal group of coincident diagram points.
#[derive(Clone, Debug)]
pub struct PointGroup<F> {
    pub representative: Vec<F>,
    pub labels: Vec<usize>,
}

impl<F: Real> GaleDiagram<F> {
    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    /// Groups coincident points (within [`MERGE_TOL`]) with their labels.
    pub fn multiplicity_groups(&self) -> Vec<PointGroup<F>> {
        let tol = F::of(MERGE_TOL);
        let mut groups: Vec<PointGroup<F>> = Vec::new();
        for (k, p) in self.points.iter().enumerate() {
            match groups.iter_mut().find(|g| dist(&g.representative, p) <= tol) {
                Some(g) => g.labels.push(self.labels[k]),
                None => groups.push(PointGroup {
                    representative: p.clone(),
                    labels: vec![self.labels[k]],
                }),
            }
        }
        groups
    }

    fn points_of_labels(&self, subset: &[usize]) -> Vec<Vec<F>> {
        self.points
            .iter()
            .zip(&self.labels)
            .filter(|(_, l)| subset.contains(l))
            .map(|(p, _)| p.clone())
            .collect()
    }
}

/// Gale transform: homogenize the vertices as columns of a `(d+1) x n`
/// matrix `M`; the rows of a kernel basis `Mbar` (satisfying
/// `M * Mbar = 0`) are the diagram points.
pub fn gale_transform<F: Real>(p: &InscribedPolytope<F>) -> Result<GaleDiagram<F>> {
    let n = p.vertex_count();
    let d = p.dim();
    let mut rows = Vec::with_capacity(d + 1);
    for r in 0..d {
        rows.push(p.vertices().iter().map(|v| v[r]).collect::<Vec<F>>());
    }
    rows.push(vec![F::one(); n]);
    let m = Matrix::from_rows(&rows)?;
    if m.rank() != d + 1 {
        return Err(Error::Dimension(
            "vertex matrix is rank-deficient; vertices do not span".into(),
        ));
    }
    let kernel = m.kernel_basis();
    let codim = n - d - 1;
    debug_assert_eq!(kernel.cols(), codim);
    let points = (0..n).map(|i| kernel.row(i).to_vec()).collect();
    Ok(GaleDiagram {
        codim,
        points,
        labels: (0..n).collect(),
    })
}

/// Does the origin lie in the relative interior of the convex hull of
/// `points`? Exact geometric test for ambient dimension <= 2.
///
/// Equivalent characterization used here: a strictly positive convex
/// combination of all points sums to the origin, which for the nonzero
/// points means they positively span their linear hull.
fn relint_contains_origin<F: Real>(points: &[Vec<F>], codim: usize) -> Result<bool> {
    if codim == 0 {
        return Ok(true);
    }
    let zero_tol = F::of(1e-9);
    let nonzero: Vec<&Vec<F>> = points
        .iter()
        .filter(|p| crate::real::norm(p) > zero_tol)
        .collect();
    if nonzero.is_empty() {
        return Ok(true);
    }
    match codim {
        1 => {
            let pos = nonzero.iter().any(|p| p[0] > F::zero());
            let neg = nonzero.iter().any(|p| p[0] < F::zero());
            Ok(pos && neg)
        }
        2 => {
            // collinear case first: all points within tolerance of one line
            let dir = normalized(nonzero[0]).unwrap();
            let collinear = nonzero.iter().all(|p| {
                let along = dot(p, &dir);
                let off = (dot(p, p) - along * along).max(F::zero()).sqrt();
                off <= zero_tol
            });
            if collinear {
                let pos = nonzero.iter().any(|p| dot(p, &dir) > F::zero());
                let neg = nonzero.iter().any(|p| dot(p, &dir) < F::zero());
                return Ok(pos && neg);
            }
            // planar: positive spanning iff the largest angular gap
            // between consecutive directions is below pi
            let mut angles: Vec<F> = nonzero.iter().map(|p| p[1].atan2(p[0])).collect();
            angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let two_pi = F::PI() + F::PI();
            let mut max_gap = angles[0] + two_pi - angles[angles.len() - 1];
            for w in angles.windows(2) {
                max_gap = max_gap.max(w[1] - w[0]);
            }
            Ok(max_gap < F::PI() - F::of(ANGLE_TOL))
        }
        _ => Err(Error::Unsupported(format!("codimension {codim} > 2"))),
    }
}

/// Face predicate: `subset` spans a face of the polytope iff the origin
/// lies in the relative interior of the hull of the complementary
/// diagram points.
pub fn is_face<F: Real>(diag: &GaleDiagram<F>, subset: &[usize]) -> Result<bool> {
    let n = diag.vertex_count();
    if subset.iter().any(|&i| i >= n) {
        return Err(Error::InvalidArgument("subset label out of range".into()));
    }
    if subset.len() >= n {
        return Err(Error::InvalidArgument("subset must be proper".into()));
    }
    let coface: Vec<usize> = (0..n).filter(|i| !subset.contains(i)).collect();
    let pts = diag.points_of_labels(&coface);
    relint_contains_origin(&pts, diag.codim)
}

/// Outcome of the diagram validity check.
#[derive(Clone, Debug)]
pub struct DiagramValidity<F> {
    pub valid: bool,
    /// A unit direction whose open half-space holds fewer than two
    /// points, when the diagram is invalid.
    pub witness: Option<Vec<F>>,
}

/// A multiset is the Gale diagram of some polytope iff every open
/// half-space bounded by a hyperplane through the origin contains at
/// least two points (or all points sit at the origin and the polytope is
/// a simplex).
pub fn validate_diagram<F: Real>(diag: &GaleDiagram<F>) -> Result<DiagramValidity<F>> {
    let zero_tol = F::of(1e-9);
    match diag.codim {
        0 => Ok(DiagramValidity {
            valid: true,
            witness: None,
        }),
        1 => {
            let pos = diag.points.iter().filter(|p| p[0] > zero_tol).count();
            let neg = diag.points.iter().filter(|p| p[0] < -zero_tol).count();
            if pos >= 2 && neg >= 2 {
                Ok(DiagramValidity {
                    valid: true,
                    witness: None,
                })
            } else {
                Ok(DiagramValidity {
                    valid: false,
                    witness: Some(vec![if pos < 2 { F::one() } else { -F::one() }]),
                })
            }
        }
        2 => {
            // candidate boundary directions: perpendicular to each point,
            // plus midpoints of consecutive angular sectors
            let nonzero: Vec<&Vec<F>> = diag
                .points
                .iter()
                .filter(|p| crate::real::norm(p) > zero_tol)
                .collect();
            if nonzero.len() < 4 {
                return Ok(DiagramValidity {
                    valid: false,
                    witness: Some(vec![F::one(), F::zero()]),
                });
            }
            let mut candidates: Vec<F> = Vec::new();
            let half_pi = F::PI() / F::of(2.0);
            for p in &nonzero {
                let a = p[1].atan2(p[0]);
                candidates.push(a + half_pi);
                candidates.push(a - half_pi);
            }
            let mut sorted = candidates.clone();
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for w in sorted.windows(2) {
                candidates.push((w[0] + w[1]) / F::of(2.0));
            }
            for a in candidates {
                let u = vec![a.cos(), a.sin()];
                let count = diag
                    .points
                    .iter()
                    .filter(|p| dot(p, &u) > zero_tol)
                    .count();
                if count < 2 {
                    return Ok(DiagramValidity {
                        valid: false,
                        witness: Some(u),
                    });
                }
            }
            Ok(DiagramValidity {
                valid: true,
                witness: None,
            })
        }
        c => Err(Error::Unsupported(format!("codimension {c} > 2"))),
    }
}

/// Combinatorial predicates readable off the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramPredicates {
    /// No hyperplane section of the diagram captures the origin in the
    /// relative interior of its hull.
    pub simplicial: bool,
    /// Some diagram point coincides with the origin.
    pub pyramid: bool,
}

/// Evaluates the simplicial and pyramid predicates.
pub fn diagram_predicates<F: Real>(diag: &GaleDiagram<F>) -> Result<DiagramPredicates> {
    let zero_tol = F::of(MERGE_TOL);
    let at_origin = diag
        .points
        .iter()
        .any(|p| crate::real::norm(p) <= zero_tol);
    match diag.codim {
        0 => Ok(DiagramPredicates {
            simplicial: true,
            pyramid: true,
        }),
        1 => Ok(DiagramPredicates {
            // the only hyperplane through o is {o} itself; its section
            // captures o exactly when a point sits there
            simplicial: !at_origin,
            pyramid: at_origin,
        }),
        2 => {
            if at_origin {
                return Ok(DiagramPredicates {
                    simplicial: false,
                    pyramid: true,
                });
            }
            // a line section captures o iff two points lie on opposite
            // rays of one line through o
            let mut simplicial = true;
            'outer: for (i, p) in diag.points.iter().enumerate() {
                let pu = normalized(p).unwrap();
                for q in diag.points.iter().skip(i + 1) {
                    let qu = normalized(q).unwrap();
                    if dot(&pu, &qu) < -F::one() + F::of(ANGLE_TOL) {
                        simplicial = false;
                        break 'outer;
                    }
                }
            }
            Ok(DiagramPredicates {
                simplicial,
                pyramid: false,
            })
        }
        c => Err(Error::Unsupported(format!("codimension {c} > 2"))),
    }
}

/// A contracted (or merely normalized) diagram.
#[derive(Clone, Debug)]
pub struct ContractedDiagram<F> {
    pub diagram: GaleDiagram<F>,
    /// Whether the equidistant-diameter structure was reached.
    pub contracted: bool,
    /// Number of diameters after merging.
    pub diameters: usize,
    /// Coincident-direction groups in cyclic order (for codim 2) or the
    /// -1 / +1 groups (codim 1).
    pub groups: Vec<PointGroup<F>>,
}

impl<F: Real> ContractedDiagram<F> {
    /// Multiplicities of the groups, in group order.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.labels.len()).collect()
    }
}

/// Brings a diagram to standard form: points radially normalized and
/// merged into diameters; for codim 1 this is the multiset on {-1, +1},
/// for codim 2 the diameters are mapped onto an equiangular set when
/// possible (a linear change of basis fixes any three diameters). If no
/// equidistant structure is reachable the normalized diagram is returned
/// with `contracted = false`.
pub fn contract_diagram<F: Real>(diag: &GaleDiagram<F>) -> Result<ContractedDiagram<F>> {
    match diag.codim {
        0 => Ok(ContractedDiagram {
            diagram: diag.clone(),
            contracted: true,
            diameters: 0,
            groups: vec![PointGroup {
                representative: Vec::new(),
                labels: diag.labels.clone(),
            }],
        }),
        1 => {
            let points: Vec<Vec<F>> = diag
                .points
                .iter()
                .map(|p| {
                    vec![if p[0] > F::of(1e-9) {
                        F::one()
                    } else if p[0] < -F::of(1e-9) {
                        -F::one()
                    } else {
                        F::zero()
                    }]
                })
                .collect();
            let out = GaleDiagram {
                codim: 1,
                points,
                labels: diag.labels.clone(),
            };
            let mut groups = out.multiplicity_groups();
            groups.sort_by(|a, b| a.representative[0].partial_cmp(&b.representative[0]).unwrap());
            Ok(ContractedDiagram {
                diagram: out,
                contracted: true,
                diameters: 1,
                groups,
            })
        }
        2 => contract_planar(diag),
        c => Err(Error::Unsupported(format!("codimension {c} > 2"))),
    }
}

fn contract_planar<F: Real>(diag: &GaleDiagram<F>) -> Result<ContractedDiagram<F>> {
    let zero_tol = F::of(1e-9);
    if diag.points.iter().any(|p| crate::real::norm(p) <= zero_tol) {
        return Err(Error::Unsupported(
            "contraction of pyramids (origin points) is out of scope".into(),
        ));
    }
    let normalize = |points: &[Vec<F>]| -> GaleDiagram<F> {
        GaleDiagram {
            codim: 2,
            points: points.iter().map(|p| normalized(p).unwrap()).collect(),
            labels: diag.labels.clone(),
        }
    };
    let normalized_diag = normalize(&diag.points);
    let direct = assemble_planar(normalized_diag.clone());
    if direct.contracted {
        return Ok(direct);
    }

    // A kernel basis is only defined up to GL(2), so the raw diagram is a
    // linearly distorted image of the standard one. Pin three diameters
    // onto the equiangular grid (a projective map is determined by three
    // lines) and verify the rest follows; linear maps preserve the cyclic
    // order of lines up to reversal, so both orientations are tried.
    let lines = line_angles(&direct.groups);
    let m = lines.len();
    if m < 2 {
        return Ok(direct);
    }
    let pi = F::PI();
    let step = pi / F::of_usize(m);
    let base = lines[0].1[1].atan2(lines[0].1[0]);
    for orient in [F::one(), -F::one()] {
        let take = 3.min(m);
        let sources: Vec<Vec<F>> = lines[..take].iter().map(|(_, u)| u.clone()).collect();
        let targets: Vec<Vec<F>> = (0..take)
            .map(|j| {
                let a = base + orient * step * F::of_usize(j);
                vec![a.cos(), a.sin()]
            })
            .collect();
        let map = match solve_line_map(&sources, &targets) {
            Some(a) => a,
            None => continue,
        };
        let mapped: Vec<Vec<F>> = diag
            .points
            .iter()
            .map(|p| {
                vec![
                    map[0][0] * p[0] + map[0][1] * p[1],
                    map[1][0] * p[0] + map[1][1] * p[1],
                ]
            })
            .collect();
        if mapped.iter().any(|p| crate::real::norm(p) <= zero_tol) {
            continue;
        }
        let fixed = assemble_planar(normalize(&mapped));
        if fixed.contracted {
            return Ok(fixed);
        }
    }
    Ok(direct)
}

/// Groups a planar diagram and tests the equidistant-diameter condition.
fn assemble_planar<F: Real>(d: GaleDiagram<F>) -> ContractedDiagram<F> {
    let mut groups = d.multiplicity_groups();
    groups.sort_by(|a, b| {
        let aa = a.representative[1].atan2(a.representative[0]);
        let ab = b.representative[1].atan2(b.representative[0]);
        aa.partial_cmp(&ab).unwrap()
    });
    let lines = line_angles(&groups);
    let m = lines.len();
    let step = F::PI() / F::of_usize(m.max(1));
    let mut equidistant = true;
    for w in lines.windows(2) {
        if ((w[1].0 - w[0].0) - step).abs() > F::of(ANGLE_TOL) {
            equidistant = false;
        }
    }
    ContractedDiagram {
        contracted: equidistant,
        diameters: m,
        groups,
        diagram: d,
    }
}

/// Distinct diameter angles in `[0, pi)`, sorted, each with one unit
/// direction representative.
fn line_angles<F: Real>(groups: &[PointGroup<F>]) -> Vec<(F, Vec<F>)> {
    let pi = F::PI();
    let mut lines: Vec<(F, Vec<F>)> = Vec::new();
    for g in groups {
        let dir = normalized(&g.representative).unwrap();
        let mut a = dir[1].atan2(dir[0]) % pi;
        if a < F::zero() {
            a += pi;
        }
        if a >= pi - F::of(ANGLE_TOL) {
            a -= pi;
        }
        if !lines
            .iter()
            .any(|(b, _)| (*b - a).abs() <= F::of(ANGLE_TOL))
        {
            lines.push((a, dir));
        }
    }
    lines.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    lines
}

/// Solves for a 2x2 map sending each source direction onto the line of
/// the corresponding target (`A u_i = mu_i t_i`, signs of `mu_i` free).
fn solve_line_map<F: Real>(sources: &[Vec<F>], targets: &[Vec<F>]) -> Option<[[F; 2]; 2]> {
    match sources.len() {
        2 => {
            // A = [t_0 t_1] * [u_0 u_1]^{-1}
            let u = Matrix::from_cols(&[sources[0].clone(), sources[1].clone()]).ok()?;
            let t = Matrix::from_cols(&[targets[0].clone(), targets[1].clone()]).ok()?;
            let c0 = u.solve(t.row(0)).ok()?;
            let c1 = u.solve(t.row(1)).ok()?;
            Some([[c0[0], c0[1]], [c1[0], c1[1]]])
        }
        3 => {
            // unknowns a11 a12 a21 a22 mu_1 mu_2, with mu_0 pinned to 1
            let mut m = Matrix::zeros(6, 6);
            let mut rhs = vec![F::zero(); 6];
            for i in 0..3 {
                for r in 0..2 {
                    let row = 2 * i + r;
                    m[(row, 2 * r)] = sources[i][0];
                    m[(row, 2 * r + 1)] = sources[i][1];
                    if i == 0 {
                        rhs[row] = targets[0][r];
                    } else {
                        m[(row, 3 + i)] = -targets[i][r];
                    }
                }
            }
            let sol = m.solve(&rhs).ok()?;
            Some([[sol[0], sol[1]], [sol[2], sol[3]]])
        }
        _ => None,
    }
}
