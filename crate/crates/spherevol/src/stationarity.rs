//! First-order stationarity of inscribed vertex configurations.
//!
//! At a volume-maximal configuration every vertex must coincide with the
//! normalized force `m/|m|`, where `m` sums the area-weighted unit
//! normals of the origin-simplices spanned by the opposite walls of the
//! incident facial simplices. The residual `|m/|m| - p|` measures the
//! failure of that fixed-point condition.

use crate::error::{Error, Result};
use crate::numerics::Matrix;
use crate::polytope::{FacetComplex, InscribedPolytope};
use crate::real::{dot, norm, normalized, sub, Real};

/// Default residual tolerance: closed-form optima reach 1e-10, optimizer
/// outputs 1e-7.
pub const DEFAULT_Z_TOL: f64 = 1e-8;

/// Force data of one vertex.
#[derive(Clone, Debug)]
pub struct VertexForce<F> {
    pub vertex: usize,
    /// Weighted normal sum `m`.
    pub force: Vec<F>,
    /// Area weight per incident boundary simplex.
    pub weights: Vec<F>,
    /// Unit wall normal per incident boundary simplex, signed toward the
    /// vertex.
    pub normals: Vec<Vec<F>>,
    /// Complex indices of simplices whose wall was degenerate (zero
    /// weight, undefined normal); they contribute nothing.
    pub degenerate: Vec<usize>,
    /// `| m/|m| - p |`.
    pub residual: F,
}

/// Stationarity certificate for a whole polytope.
#[derive(Clone, Debug)]
pub struct StationarityReport<F> {
    pub per_vertex: Vec<VertexForce<F>>,
    pub max_residual: F,
    pub tol: F,
    pub satisfies: bool,
    /// Which test produced the verdict. This report checks the
    /// first-order fixed-point condition only; local maximality proper
    /// needs the sampled-perturbation certificate on top.
    pub test: &'static str,
}

/// Computes the force vector of vertex `i` from the boundary complex.
pub fn vertex_force<F: Real>(
    polytope: &InscribedPolytope<F>,
    complex: &FacetComplex<F>,
    i: usize,
) -> Result<VertexForce<F>> {
    raw_vertex_force(polytope.vertices(), &complex.simplices, polytope.dim(), i)
}

/// Force computation on raw coordinates against a fixed simplex list.
/// The optimizer uses this mid-sweep, where vertices move while the
/// combinatorics stay frozen.
pub(crate) fn raw_vertex_force<F: Real>(
    vertices: &[Vec<F>],
    simplices: &[Vec<usize>],
    d: usize,
    i: usize,
) -> Result<VertexForce<F>> {
    if i >= vertices.len() {
        return Err(Error::InvalidArgument(format!("vertex index {i} out of range")));
    }
    let p = &vertices[i];
    let mut force = vec![F::zero(); d];
    let mut weights = Vec::new();
    let mut normals = Vec::new();
    let mut degenerate = Vec::new();
    for (si, simplex) in simplices.iter().enumerate() {
        if !simplex.contains(&i) {
            continue;
        }
        // wall simplex: the other d-1 vertices together with the origin
        let others: Vec<&[F]> = simplex
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| vertices[j].as_slice())
            .collect();
        match wall_weight_and_normal(&others, p, d)? {
            Some((weight, normal)) => {
                for (f, &x) in force.iter_mut().zip(&normal) {
                    *f += weight * x;
                }
                weights.push(weight);
                normals.push(normal);
            }
            None => degenerate.push(si),
        }
    }
    let residual = match normalized(&force) {
        Some(dir) => norm(&sub(&dir, p)),
        None => F::of(2.0), // zero force: worst possible residual
    };
    Ok(VertexForce {
        vertex: i,
        force,
        weights,
        normals,
        degenerate,
        residual,
    })
}

/// Area weight `vol_{d-1}(conv(o, walls))` and unit normal of the wall
/// span signed toward `p`. Returns `None` when the wall is degenerate.
fn wall_weight_and_normal<F: Real>(
    walls: &[&[F]],
    p: &[F],
    d: usize,
) -> Result<Option<(F, Vec<F>)>> {
    // weight via the Gram determinant square root (orientation-free)
    let b = Matrix::from_rows(&walls.iter().map(|w| w.to_vec()).collect::<Vec<_>>())?;
    let gram = b.matmul(&b.transpose())?;
    let g = gram.determinant()?;
    if g <= F::zero() {
        return Ok(None);
    }
    let weight = g.sqrt() / F::factorial(d - 1);
    let kernel = b.kernel_basis();
    if kernel.cols() != 1 {
        return Ok(None);
    }
    let mut normal = match normalized(&kernel.col(0)) {
        Some(u) => u,
        None => return Ok(None),
    };
    let side = dot(&normal, p);
    if side.abs() <= F::of(1e-12) {
        return Ok(None);
    }
    if side < F::zero() {
        for x in normal.iter_mut() {
            *x = -*x;
        }
    }
    Ok(Some((weight, normal)))
}

/// Runs the first-order Property-Z test on every vertex.
pub fn check_property_z<F: Real>(
    polytope: &InscribedPolytope<F>,
    tol: F,
) -> Result<StationarityReport<F>> {
    let complex = polytope.triangulate_boundary()?;
    let mut per_vertex = Vec::with_capacity(polytope.vertex_count());
    let mut max_residual = F::zero();
    for i in 0..polytope.vertex_count() {
        let vf = vertex_force(polytope, &complex, i)?;
        max_residual = max_residual.max(vf.residual);
        per_vertex.push(vf);
    }
    Ok(StationarityReport {
        per_vertex,
        max_residual,
        tol,
        satisfies: max_residual <= tol,
        test: "first-order residual |m/|m| - p|",
    })
}

/// Norm of the area-weighted sum of external facet normals of the
/// simplex `conv(o, points)`. Identically zero in exact arithmetic.
pub fn facet_normal_balance<F: Real>(points: &[Vec<F>]) -> Result<F> {
    let d = points.first().map_or(0, Vec::len);
    if d < 2 || points.len() != d {
        return Err(Error::Dimension(format!(
            "need exactly d points in R^d with d >= 2, got {} in R^{d}",
            points.len()
        )));
    }
    let origin = vec![F::zero(); d];
    let mut all: Vec<&[F]> = vec![&origin];
    for p in points {
        all.push(p);
    }
    let mut sum = vec![F::zero(); d];
    for omit in 0..all.len() {
        let facet: Vec<&[F]> = (0..all.len()).filter(|&k| k != omit).map(|k| all[k]).collect();
        let base = facet[0];
        let spans: Vec<Vec<F>> = facet[1..].iter().map(|q| sub(q, base)).collect();
        let b = Matrix::from_rows(&spans)?;
        let gram = b.matmul(&b.transpose())?;
        let g = gram.determinant()?;
        if g <= F::zero() {
            return Err(Error::Degenerate("flat facet in simplex".into()));
        }
        let area = g.sqrt() / F::factorial(d - 1);
        let kernel = b.kernel_basis();
        if kernel.cols() != 1 {
            return Err(Error::Degenerate("simplex facet does not span a hyperplane".into()));
        }
        let mut normal = normalized(&kernel.col(0))
            .ok_or_else(|| Error::Degenerate("zero facet normal".into()))?;
        // external: away from the omitted vertex
        let toward = dot(&normal, &sub(all[omit], base));
        if toward > F::zero() {
            for x in normal.iter_mut() {
                *x = -*x;
            }
        } else if toward == F::zero() {
            return Err(Error::Degenerate("degenerate simplex".into()));
        }
        for (s, &x) in sum.iter_mut().zip(&normal) {
            *s += area * x;
        }
    }
    Ok(norm(&sum))
}

/// Result of comparing two edge lengths at a common vertex.
#[derive(Clone, Debug)]
pub struct EqualEdge<F> {
    pub equal: bool,
    /// `|<p_i, p_j1> - <p_i, p_j2>|`, zero exactly when the edges have
    /// equal length (all points are unit).
    pub difference: F,
}

/// Measures whether edges `i-j1` and `i-j2` have equal length.
///
/// Both `j1` and `j2` must be adjacent to `i`; checking the facet-pairing
/// hypothesis that forces equality is the caller's concern.
pub fn equal_edge_check<F: Real>(
    polytope: &InscribedPolytope<F>,
    i: usize,
    j1: usize,
    j2: usize,
) -> Result<EqualEdge<F>> {
    let graph = polytope.edge_graph();
    if !graph.is_edge(i, j1) || !graph.is_edge(i, j2) {
        return Err(Error::InvalidArgument(format!(
            "vertices {j1} and {j2} must both be adjacent to {i}"
        )));
    }
    let p = polytope.vertex(i);
    let difference = (dot(p, polytope.vertex(j1)) - dot(p, polytope.vertex(j2))).abs();
    Ok(EqualEdge {
        equal: difference <= F::of(1e-9),
        difference,
    })
}
