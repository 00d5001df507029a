//! Exact constructors for the polytope families named in the volume
//! problem: regular simplices, orthogonal simplex products, trigonometric
//! cyclic polytopes, bipyramids and cross-polytopes.

use crate::error::{Error, Result};
use crate::polytope::InscribedPolytope;
use crate::real::Real;

/// Dimensions of the orthogonal regular-simplex factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexFactorSpec {
    dims: Vec<usize>,
}

impl SimplexFactorSpec {
    /// One to three factor dimensions, each at least 1.
    pub fn new(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() || dims.len() > 3 {
            return Err(Error::InvalidArgument(format!(
                "{} simplex factors, supported range is 1..=3",
                dims.len()
            )));
        }
        if dims.contains(&0) {
            return Err(Error::InvalidArgument("factor dimensions must be >= 1".into()));
        }
        Ok(Self { dims: dims.to_vec() })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total ambient dimension `d = sum k_i`.
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Total vertex count `sum (k_i + 1)`.
    pub fn vertex_count(&self) -> usize {
        self.dims.iter().map(|&k| k + 1).sum()
    }
}

/// The `k+1` vertices of a regular simplex inscribed in the unit sphere
/// of `R^k`: unit points with pairwise inner products `-1/k` and centroid
/// at the origin.
pub fn regular_simplex<F: Real>(k: usize) -> Vec<Vec<F>> {
    assert!(k >= 1, "simplex dimension must be >= 1");
    // vertices e_i of R^{k+1}, centered and rescaled, then rotated so the
    // all-ones direction becomes the last coordinate (dropped)
    let kk = F::of_usize(k);
    let c = F::one() / F::of_usize(k + 1);
    let scale = ((kk + F::one()) / kk).sqrt();
    // Householder vector mapping ones/sqrt(k+1) to e_{k+1}
    let mut h = vec![F::one() / (kk + F::one()).sqrt(); k + 1];
    h[k] -= F::one();
    let hn = crate::real::norm(&h);
    let reflect = hn > F::of(1e-12);
    if reflect {
        for x in h.iter_mut() {
            *x /= hn;
        }
    }
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut v = vec![-c; k + 1];
        v[i] += F::one();
        for x in v.iter_mut() {
            *x *= scale;
        }
        if reflect {
            let d = crate::real::dot(&v, &h);
            for (x, &hh) in v.iter_mut().zip(&h) {
                *x -= (d + d) * hh;
            }
        }
        v.truncate(k);
        out.push(v);
    }
    out
}

/// The regular simplex as an inscribed polytope (needs `k >= 2`).
pub fn regular_simplex_polytope<F: Real>(k: usize) -> Result<InscribedPolytope<F>> {
    InscribedPolytope::new(k, regular_simplex(k))
}

/// Convex hull of regular simplices inscribed in mutually orthogonal
/// coordinate blocks. Factor `j` occupies the coordinates after all the
/// factors before it.
pub fn orthogonal_simplex_product<F: Real>(
    spec: &SimplexFactorSpec,
) -> Result<InscribedPolytope<F>> {
    let d = spec.total();
    let mut vertices = Vec::with_capacity(spec.vertex_count());
    let mut offset = 0;
    for &k in spec.dims() {
        for pt in regular_simplex::<F>(k) {
            let mut v = vec![F::zero(); d];
            v[offset..offset + k].copy_from_slice(&pt);
            vertices.push(v);
        }
        offset += k;
    }
    InscribedPolytope::new(d, vertices)
}

/// Balanced two-factor split: the maximizer for `n = d + 2` vertices.
pub fn optimal_dplus2<F: Real>(d: usize) -> Result<InscribedPolytope<F>> {
    if d < 2 {
        return Err(Error::InvalidArgument("optimal_dplus2 needs d >= 2".into()));
    }
    orthogonal_simplex_product(&SimplexFactorSpec::new(&[d / 2, d - d / 2])?)
}

/// Balanced three-factor split: the (for odd `d`, global; for even `d`,
/// non-cyclic local) maximizer for `n = d + 3` vertices.
pub fn optimal_dplus3<F: Real>(d: usize) -> Result<InscribedPolytope<F>> {
    if d < 3 {
        return Err(Error::InvalidArgument("optimal_dplus3 needs d >= 3".into()));
    }
    let base = d / 3;
    let rem = d % 3;
    let mut dims = [base; 3];
    for item in dims.iter_mut().take(rem) {
        *item += 1;
    }
    dims.sort_unstable();
    orthogonal_simplex_product(&SimplexFactorSpec::new(&dims)?)
}

/// Trigonometric cyclic polytope `C_d(n)` inscribed in the unit sphere:
/// vertex `i` is `sqrt(2/d) * (cos t, sin t, cos 2t, sin 2t, ...,
/// cos(d/2)t, sin(d/2)t)` at `t = 2*pi*i/n`. Dihedrally symmetric,
/// simplicial, and neighborly.
pub fn cyclic_trig<F: Real>(d: usize, n: usize) -> Result<InscribedPolytope<F>> {
    if !d.is_multiple_of(2) || d < 2 {
        return Err(Error::Unsupported(format!(
            "cyclic_trig is defined for even d >= 2, got {d}"
        )));
    }
    if n < d + 3 {
        return Err(Error::InvalidArgument(format!(
            "cyclic_trig needs n >= d + 3, got n = {n}, d = {d}"
        )));
    }
    InscribedPolytope::new(d, cyclic_trig_vertices(d, n))
}

/// Vertex coordinates of `C_d(n)` (also used to build reference Gram
/// matrices without the polytope wrapper).
pub fn cyclic_trig_vertices<F: Real>(d: usize, n: usize) -> Vec<Vec<F>> {
    let scale = (F::of(2.0) / F::of_usize(d)).sqrt();
    let two_pi = F::PI() + F::PI();
    (0..n)
        .map(|i| {
            let theta = two_pi * F::of_usize(i) / F::of_usize(n);
            let mut v = Vec::with_capacity(d);
            for h in 1..=d / 2 {
                let a = theta * F::of_usize(h);
                v.push(scale * a.cos());
                v.push(scale * a.sin());
            }
            v
        })
        .collect()
}

/// Bipyramid over a base polytope: the base is embedded in the first
/// `d-1` coordinates and the apexes are the antipodal pair on the last
/// axis. `vol = (2/d) * vol(base)`.
pub fn bipyramid<F: Real>(base: &InscribedPolytope<F>) -> Result<InscribedPolytope<F>> {
    let d = base.dim() + 1;
    let mut vertices = Vec::with_capacity(base.vertex_count() + 2);
    for v in base.vertices() {
        let mut w = v.clone();
        w.push(F::zero());
        vertices.push(w);
    }
    let mut north = vec![F::zero(); d];
    north[d - 1] = F::one();
    let mut south = vec![F::zero(); d];
    south[d - 1] = -F::one();
    vertices.push(north);
    vertices.push(south);
    InscribedPolytope::new(d, vertices)
}

/// Regular cross-polytope: `d` pairwise orthogonal diameters.
pub fn cross_polytope<F: Real>(d: usize) -> Result<InscribedPolytope<F>> {
    if d < 2 {
        return Err(Error::InvalidArgument("cross_polytope needs d >= 2".into()));
    }
    let mut vertices = Vec::with_capacity(2 * d);
    for i in 0..d {
        let mut plus = vec![F::zero(); d];
        plus[i] = F::one();
        let mut minus = vec![F::zero(); d];
        minus[i] = -F::one();
        vertices.push(plus);
        vertices.push(minus);
    }
    InscribedPolytope::new(d, vertices)
}

/// The six-vertex 3-polytope from the dihedral-symmetry catalog, with its
/// coordinates as listed.
pub fn remark54_3polytope<F: Real>() -> InscribedPolytope<F> {
    let t = F::one() / F::of(3.0);
    let s = -F::of(2.0) / F::of(3.0);
    let verts = vec![
        vec![F::one(), F::zero(), F::zero()],
        vec![s, s, t],
        vec![F::zero(), F::one(), F::zero()],
        vec![t, s, s],
        vec![F::zero(), F::zero(), F::one()],
        vec![s, t, s],
    ];
    InscribedPolytope::new(3, verts).expect("catalog coordinates are a valid 3-polytope")
}
