//! Inscribed polytopes: facet enumeration, boundary triangulation,
//! volume, and combinatorial predicates.
//!
//! Facets are found by brute force over vertex subsets, which is exact
//! and comfortably fast at this scale (nothing here exceeds a dozen
//! vertices).

use crate::error::{Error, Result};
use crate::numerics::Matrix;
use crate::real::{dist, dot, normalized, Real};

/// Vertices must lie on the unit sphere within this tolerance; input is
/// normalized first, then asserted.
pub const ON_SPHERE_TOL: f64 = 1e-9;
/// A vertex within this distance of a facet hyperplane belongs to it.
pub const COPLANAR_TOL: f64 = 1e-9;

/// A facet of an inscribed polytope: maximal coplanar vertex set with its
/// supporting hyperplane.
#[derive(Clone, Debug)]
pub struct Facet<F> {
    /// Sorted indices of all vertices on the facet hyperplane.
    pub vertex_indices: Vec<usize>,
    /// Unit normal pointing away from the polytope interior.
    pub outward_normal: Vec<F>,
    /// Support value `<normal, p>` for facet vertices.
    pub offset: F,
}

/// Oriented simplicial triangulation of the boundary.
///
/// Simplices are `d`-tuples of vertex indices ordered so that the d x d
/// determinant of their coordinates is positive (origin on the inner
/// side). `facet_of[k]` is the index of the facet whose hyperplane
/// carries simplex `k`.
#[derive(Clone, Debug)]
pub struct FacetComplex<F> {
    pub simplices: Vec<Vec<usize>>,
    pub facet_of: Vec<usize>,
    _marker: std::marker::PhantomData<F>,
}

/// A convex polytope with all vertices on the unit sphere.
#[derive(Clone, Debug)]
pub struct InscribedPolytope<F> {
    dim: usize,
    vertices: Vec<Vec<F>>,
    facets: Vec<Facet<F>>,
}

impl<F: Real> InscribedPolytope<F> {
    /// Builds a polytope from vertex coordinates.
    ///
    /// Vertices are normalized onto the sphere, then validated: at least
    /// `d+1` of them, pairwise distinct, spanning all of `R^d`, each one
    /// extreme.
    pub fn new(dim: usize, vertices: Vec<Vec<F>>) -> Result<Self> {
        let p = Self::from_raw(dim, vertices, true)?;
        Ok(p)
    }

    /// Same as [`Self::new`] but tolerates non-extreme points: the hull of
    /// the input is built and vertices landing strictly inside are
    /// reported in the second return value. Used by the optimizer.
    pub(crate) fn new_allowing_interior(
        dim: usize,
        vertices: Vec<Vec<F>>,
    ) -> Result<(Self, Vec<usize>)> {
        let p = Self::from_raw(dim, vertices, false)?;
        let mut seen = vec![false; p.vertices.len()];
        for f in &p.facets {
            for &i in &f.vertex_indices {
                seen[i] = true;
            }
        }
        let interior = (0..p.vertices.len()).filter(|&i| !seen[i]).collect();
        Ok((p, interior))
    }

    fn from_raw(dim: usize, vertices: Vec<Vec<F>>, require_extreme: bool) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Dimension(format!("dimension {dim} < 2")));
        }
        let n = vertices.len();
        if n < dim + 1 {
            return Err(Error::Dimension(format!(
                "need at least {} vertices in dimension {dim}, got {n}",
                dim + 1
            )));
        }
        let mut pts = Vec::with_capacity(n);
        let tol = F::of(ON_SPHERE_TOL);
        for (i, v) in vertices.into_iter().enumerate() {
            if v.len() != dim {
                return Err(Error::Dimension(format!(
                    "vertex {i} has {} coordinates, expected {dim}",
                    v.len()
                )));
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidArgument(format!("vertex {i} is not finite")));
            }
            let u = normalized(&v)
                .ok_or_else(|| Error::Degenerate(format!("vertex {i} is at the origin")))?;
            debug_assert!((crate::real::norm(&u) - F::one()).abs() <= tol);
            pts.push(u);
        }
        for i in 0..n {
            for j in i + 1..n {
                if dist(&pts[i], &pts[j]) <= F::of(1e-9) {
                    return Err(Error::Degenerate(format!("vertices {i} and {j} coincide")));
                }
            }
        }
        // affine (here: linear, since points are homogenized) span check
        let mut homog = Vec::with_capacity(n);
        for p in &pts {
            let mut row = p.clone();
            row.push(F::one());
            homog.push(row);
        }
        let m = Matrix::from_rows(&homog)?.transpose();
        if m.rank() != dim + 1 {
            return Err(Error::Dimension(
                "vertices do not affinely span the ambient space".into(),
            ));
        }
        let facets = hull_facets(&pts, dim)?;
        if require_extreme {
            let mut seen = vec![false; n];
            for f in &facets {
                for &i in &f.vertex_indices {
                    seen[i] = true;
                }
            }
            if let Some(i) = seen.iter().position(|&s| !s) {
                return Err(Error::Degenerate(format!(
                    "vertex {i} is not extreme (lies in the hull of the others)"
                )));
            }
        }
        Ok(Self {
            dim,
            vertices: pts,
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vec<F>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &[F] {
        &self.vertices[i]
    }

    /// The facets of the polytope (supporting hyperplanes with their
    /// maximal coplanar vertex sets).
    pub fn enumerate_facets(&self) -> &[Facet<F>] {
        &self.facets
    }

    /// True iff every facet has exactly `d` vertices.
    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(|f| f.vertex_indices.len() == self.dim)
    }

    /// True iff the origin is strictly inside (all facet offsets positive).
    pub fn origin_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset > F::of(1e-12))
    }

    /// Oriented boundary triangulation: simplicial facets are emitted
    /// directly, non-simplicial ones are fanned from their least vertex.
    pub fn triangulate_boundary(&self) -> Result<FacetComplex<F>> {
        if !self.origin_interior() {
            return Err(Error::Unsupported(
                "boundary orientation requires the origin strictly interior".into(),
            ));
        }
        let mut simplices = Vec::new();
        let mut facet_of = Vec::new();
        for (fi, facet) in self.facets.iter().enumerate() {
            for mut tri in triangulate_facet(&self.vertices, facet, self.dim)? {
                let m = Matrix::from_cols(
                    &tri.iter().map(|&i| self.vertices[i].clone()).collect::<Vec<_>>(),
                )?;
                let det = m.determinant()?;
                if det == F::zero() {
                    return Err(Error::Degenerate(
                        "triangulation produced a flat facial simplex".into(),
                    ));
                }
                if det < F::zero() {
                    tri.swap(0, 1);
                }
                simplices.push(tri);
                facet_of.push(fi);
            }
        }
        Ok(FacetComplex {
            simplices,
            facet_of,
            _marker: std::marker::PhantomData,
        })
    }

    /// Volume by facial-simplex decomposition: the sum of
    /// `|p_{i_1},...,p_{i_d}| / d!` over the boundary triangulation.
    ///
    /// Requires the origin strictly interior; every paper instance has it.
    pub fn volume(&self) -> Result<F> {
        if !self.origin_interior() {
            return Err(Error::Unsupported(
                "volume decomposition requires the origin strictly interior".into(),
            ));
        }
        let complex = self.triangulate_boundary()?;
        let mut vol = F::zero();
        for s in &complex.simplices {
            let m = Matrix::from_cols(
                &s.iter().map(|&i| self.vertices[i].clone()).collect::<Vec<_>>(),
            )?;
            vol += m.determinant()?;
        }
        Ok(vol / F::factorial(self.dim))
    }

    /// Vertex adjacency: `i ~ j` iff they share at least `d-1` facets and
    /// the intersection of all shared facets is exactly `{i, j}`.
    pub fn edge_graph(&self) -> EdgeGraph {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                let shared: Vec<&Facet<F>> = self
                    .facets
                    .iter()
                    .filter(|f| {
                        f.vertex_indices.binary_search(&i).is_ok()
                            && f.vertex_indices.binary_search(&j).is_ok()
                    })
                    .collect();
                if shared.len() < self.dim.saturating_sub(1) || shared.is_empty() {
                    continue;
                }
                let mut common: Vec<usize> = shared[0].vertex_indices.clone();
                for f in &shared[1..] {
                    common.retain(|v| f.vertex_indices.binary_search(v).is_ok());
                }
                if common == [i, j] {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        EdgeGraph { adjacency: adj }
    }

    /// Per-shift vertex distance multisets under the given cyclic order.
    ///
    /// For each shift `k = 1..=n/2` reports the distances
    /// `|p_{ordering[i+k]} - p_{ordering[i]}|` and their spread.
    pub fn distance_profile(&self, ordering: &[usize]) -> Result<Vec<ShiftDistances<F>>> {
        let n = self.vertices.len();
        let mut check: Vec<usize> = ordering.to_vec();
        check.sort_unstable();
        if check != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(
                "ordering must be a permutation of all vertex indices".into(),
            ));
        }
        let mut out = Vec::new();
        for k in 1..=n / 2 {
            let mut distances = Vec::with_capacity(n);
            for i in 0..n {
                let a = &self.vertices[ordering[i]];
                let b = &self.vertices[ordering[(i + k) % n]];
                distances.push(dist(a, b));
            }
            let max = distances.iter().cloned().fold(F::neg_infinity(), F::max);
            let min = distances.iter().cloned().fold(F::infinity(), F::min);
            out.push(ShiftDistances {
                shift: k,
                spread: max - min,
                distances,
            });
        }
        Ok(out)
    }
}

/// Distance multiset for one cyclic shift.
#[derive(Clone, Debug)]
pub struct ShiftDistances<F> {
    pub shift: usize,
    pub distances: Vec<F>,
    pub spread: F,
}

/// Vertex adjacency structure.
#[derive(Clone, Debug)]
pub struct EdgeGraph {
    pub adjacency: Vec<Vec<usize>>,
}

impl EdgeGraph {
    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// The unique hyperplane through `dim` affinely independent points, as
/// `(unit normal, offset)`. `None` if the points are affinely dependent.
fn hyperplane_through<F: Real>(points: &[&[F]], dim: usize) -> Option<(Vec<F>, F)> {
    debug_assert_eq!(points.len(), dim);
    // normal spans the kernel of the (dim-1) x dim difference matrix
    let base = points[0];
    let diffs: Vec<Vec<F>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(&a, &b)| a - b).collect())
        .collect();
    let m = Matrix::from_rows(&diffs).ok()?;
    let k = m.kernel_basis();
    if k.cols() != 1 {
        return None;
    }
    let normal = normalized(&k.col(0))?;
    let offset = dot(&normal, base);
    Some((normal, offset))
}

/// Brute-force facet enumeration for the hull of `points` (assumed to
/// affinely span `R^dim`). Works for arbitrary point sets: points inside
/// the hull simply end up on no facet.
pub(crate) fn hull_facets<F: Real>(points: &[Vec<F>], dim: usize) -> Result<Vec<Facet<F>>> {
    let n = points.len();
    if n <= dim {
        return Err(Error::Dimension(format!(
            "{n} points cannot span a full-dimensional polytope in R^{dim}"
        )));
    }
    let tol = F::of(COPLANAR_TOL);
    let mut facets: Vec<Facet<F>> = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut subset: Vec<usize> = (0..dim).collect();
    loop {
        let pts: Vec<&[F]> = subset.iter().map(|&i| points[i].as_slice()).collect();
        if let Some((normal, offset)) = hyperplane_through(&pts, dim) {
            let vals: Vec<F> = points.iter().map(|p| dot(&normal, p)).collect();
            let on: Vec<usize> = (0..n).filter(|&i| (vals[i] - offset).abs() <= tol).collect();
            let above = (0..n).any(|i| vals[i] > offset + tol);
            let below = (0..n).any(|i| vals[i] < offset - tol);
            if !(above && below) && above != below {
                // supporting hyperplane; orient outward
                let (normal, offset) = if above {
                    (normal.iter().map(|&x| -x).collect(), -offset)
                } else {
                    (normal, offset)
                };
                if !seen.contains(&on) {
                    seen.push(on.clone());
                    facets.push(Facet {
                        vertex_indices: on,
                        outward_normal: normal,
                        offset,
                    });
                }
            }
        }
        // next combination
        let mut i = dim;
        loop {
            if i == 0 {
                return finish_facets(facets);
            }
            i -= 1;
            if subset[i] != i + n - dim {
                subset[i] += 1;
                for j in i + 1..dim {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn finish_facets<F: Real>(mut facets: Vec<Facet<F>>) -> Result<Vec<Facet<F>>> {
    if facets.is_empty() {
        return Err(Error::Dimension(
            "no supporting hyperplanes: input is lower-dimensional".into(),
        ));
    }
    facets.sort_by(|a, b| a.vertex_indices.cmp(&b.vertex_indices));
    Ok(facets)
}

/// Triangulates one facet into (d-1)-simplices given by vertex index
/// tuples. Simplicial facets pass through; larger ones are fanned from
/// their lexicographically least vertex after projecting into the facet
/// hyperplane, recursing on dimension.
fn triangulate_facet<F: Real>(
    vertices: &[Vec<F>],
    facet: &Facet<F>,
    dim: usize,
) -> Result<Vec<Vec<usize>>> {
    if facet.vertex_indices.len() == dim {
        return Ok(vec![facet.vertex_indices.clone()]);
    }
    let basis = hyperplane_basis(&facet.outward_normal, dim);
    let projected: Vec<Vec<F>> = facet
        .vertex_indices
        .iter()
        .map(|&i| basis.iter().map(|b| dot(b, &vertices[i])).collect())
        .collect();
    let local = triangulate_full_polytope(&projected, dim - 1)?;
    Ok(local
        .into_iter()
        .map(|tri| tri.into_iter().map(|k| facet.vertex_indices[k]).collect())
        .collect())
}

/// Triangulation of a full-dimensional polytope in `R^k` given by its
/// vertex list: cone from the lexicographically least vertex over the
/// triangulated facets that do not contain it.
fn triangulate_full_polytope<F: Real>(points: &[Vec<F>], k: usize) -> Result<Vec<Vec<usize>>> {
    let apex = lexicographic_least(points);
    if k == 1 {
        // a segment: the single 1-simplex between the extremes
        let far = (0..points.len())
            .max_by(|&a, &b| {
                dist(&points[a], &points[apex])
                    .partial_cmp(&dist(&points[b], &points[apex]))
                    .unwrap()
            })
            .unwrap();
        return Ok(vec![vec![apex, far]]);
    }
    let facets = hull_facets(points, k)?;
    let mut out = Vec::new();
    for f in &facets {
        if f.vertex_indices.contains(&apex) {
            continue;
        }
        for tri in triangulate_facet(points, f, k)? {
            let mut s = vec![apex];
            s.extend(tri);
            out.push(s);
        }
    }
    Ok(out)
}

fn lexicographic_least<F: Real>(points: &[Vec<F>]) -> usize {
    let mut best = 0;
    for i in 1..points.len() {
        if lex_less(&points[i], &points[best]) {
            best = i;
        }
    }
    best
}

fn lex_less<F: Real>(a: &[F], b: &[F]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return true;
        }
        if x > y {
            return false;
        }
    }
    false
}

/// Orthonormal basis of the hyperplane orthogonal to `normal`.
fn hyperplane_basis<F: Real>(normal: &[F], dim: usize) -> Vec<Vec<F>> {
    let mut basis: Vec<Vec<F>> = Vec::with_capacity(dim - 1);
    for k in 0..dim {
        let mut v = vec![F::zero(); dim];
        v[k] = F::one();
        let c = dot(&v, normal);
        for (vi, &ni) in v.iter_mut().zip(normal) {
            *vi -= c * ni;
        }
        for b in &basis {
            let c = dot(&v, b);
            for (vi, &bi) in v.iter_mut().zip(b) {
                *vi -= c * bi;
            }
        }
        if let Some(u) = normalized(&v) {
            if crate::real::norm(&v) > F::of(1e-7) {
                basis.push(u);
                if basis.len() == dim - 1 {
                    break;
                }
            }
        }
    }
    debug_assert_eq!(basis.len(), dim - 1);
    basis
}

/// Hull volume of an arbitrary full-dimensional point set, via the signed
/// divergence sum over outward-oriented facets. Does not require the
/// origin inside the hull; interior points are ignored.
pub fn hull_volume<F: Real>(points: &[Vec<F>], dim: usize) -> Result<F> {
    let facets = hull_facets(points, dim)?;
    let mut vol = F::zero();
    for f in &facets {
        let sign = if f.offset >= F::zero() { F::one() } else { -F::one() };
        for tri in triangulate_facet(points, f, dim)? {
            let m = Matrix::from_cols(
                &tri.iter().map(|&i| points[i].clone()).collect::<Vec<_>>(),
            )?;
            vol += sign * m.determinant()?.abs();
        }
    }
    Ok(vol / F::factorial(dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    fn square() -> InscribedPolytope<f64> {
        InscribedPolytope::new(
            2,
            vec![
                vec![1.0, 0.0],
                vec![0.0, 1.0],
                vec![-1.0, 0.0],
                vec![0.0, -1.0],
            ],
        )
        .unwrap()
    }

    fn octahedron() -> InscribedPolytope<f64> {
        constructions::cross_polytope::<f64>(3).unwrap()
    }

    #[test]
    fn tetrahedron_has_four_triangles() {
        let p = constructions::regular_simplex_polytope::<f64>(3).unwrap();
        let facets = p.enumerate_facets();
        assert_eq!(facets.len(), 4);
        assert!(facets.iter().all(|f| f.vertex_indices.len() == 3));
    }

    #[test]
    fn octahedron_has_eight_triangles() {
        let p = octahedron();
        assert_eq!(p.enumerate_facets().len(), 8);
        assert!(p.is_simplicial());
        let v = p.volume().unwrap();
        assert!((v - 4.0 / 3.0).abs() < 1e-12, "octahedron volume {v}");
    }

    #[test]
    fn square_has_four_edges_and_volume_two() {
        let p = square();
        assert_eq!(p.enumerate_facets().len(), 4);
        let c = p.triangulate_boundary().unwrap();
        assert_eq!(c.simplices.len(), 4);
        for s in &c.simplices {
            let m = Matrix::from_cols(&[p.vertex(s[0]).to_vec(), p.vertex(s[1]).to_vec()])
                .unwrap();
            assert!(m.determinant().unwrap() > 0.0);
        }
        assert!((p.volume().unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn pyramid_over_square_is_not_simplicial() {
        // apex at the north pole, square base below the equator so the
        // origin stays interior
        let h = -0.2f64;
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
        assert!(!p.is_simplicial());
        let base = p
            .enumerate_facets()
            .iter()
            .find(|f| f.vertex_indices.len() == 4)
            .expect("square base facet");
        assert_eq!(base.vertex_indices, vec![1, 2, 3, 4]);
        // base is fanned into two triangles
        let c = p.triangulate_boundary().unwrap();
        assert_eq!(c.simplices.len(), 4 + 2);
        let vol = p.volume().unwrap();
        let base_area = 2.0 * r * r;
        let expect = base_area * (1.0 - h) / 3.0;
        assert!((vol - expect).abs() < 1e-12, "{vol} vs {expect}");
    }

    #[test]
    fn volume_requires_origin_interior() {
        // pyramid with its base above the equator: origin lies outside
        let h = 0.4f64;
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
        assert!(!p.origin_interior());
        assert!(matches!(p.volume(), Err(Error::Unsupported(_))));
        // the orientation-free hull volume still works
        let v = hull_volume(p.vertices(), 3).unwrap();
        assert!((v - 2.0 * r * r * (1.0 - h) / 3.0).abs() < 1e-12);
    }

    #[test]
    fn edge_graph_shapes() {
        let simplex = constructions::regular_simplex_polytope::<f64>(3).unwrap();
        let g = simplex.edge_graph();
        assert_eq!(g.edge_count(), 6); // complete graph on 4

        let oct = octahedron();
        let g = oct.edge_graph();
        assert_eq!(g.edge_count(), 12); // complete minus perfect matching
        assert!(!g.is_edge(0, 1)); // antipodal pair in cross-polytope order

        let sq = square();
        let g = sq.edge_graph();
        assert_eq!(g.edge_count(), 4); // 4-cycle
        assert!(!g.is_edge(0, 2));
    }

    #[test]
    fn facet_enumeration_is_input_order_independent() {
        let p1 = octahedron();
        let mut verts: Vec<Vec<f64>> = p1.vertices().to_vec();
        verts.reverse();
        let p2 = InscribedPolytope::new(3, verts).unwrap();
        let canon = |p: &InscribedPolytope<f64>| {
            let n = p.vertex_count();
            let mut sets: Vec<Vec<Vec<i64>>> = p
                .enumerate_facets()
                .iter()
                .map(|f| {
                    let mut vv: Vec<Vec<i64>> = f
                        .vertex_indices
                        .iter()
                        .map(|&i| {
                            p.vertex(i)
                                .iter()
                                .map(|x| (x * 1e9).round() as i64)
                                .collect()
                        })
                        .collect();
                    vv.sort();
                    vv
                })
                .collect();
            sets.sort();
            assert_eq!(sets.len(), 8);
            let _ = n;
            sets
        };
        assert_eq!(canon(&p1), canon(&p2));
    }

    #[test]
    fn degenerate_input_is_rejected() {
        // a square on a great circle of S^2 spans only a 2-plane
        let r = InscribedPolytope::<f64>::new(
            3,
            vec![
                vec![1.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![-1.0, 0.0, 0.0],
                vec![0.0, -1.0, 0.0],
            ],
        );
        assert!(matches!(r, Err(Error::Dimension(_))));
    }

    #[test]
    fn coincident_vertices_are_rejected() {
        let s = constructions::regular_simplex::<f64>(3);
        let mut verts = s.clone();
        verts.push(s[0].clone());
        assert!(matches!(
            InscribedPolytope::<f64>::new(3, verts),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn sphere_points_are_always_extreme() {
        // distinct points on a strictly convex surface are in convex
        // position, so the interior report stays empty
        let p = constructions::cyclic_trig_vertices::<f64>(4, 7);
        let (_, interior) = InscribedPolytope::<f64>::new_allowing_interior(4, p).unwrap();
        assert!(interior.is_empty());
    }

    #[test]
    fn distance_profile_of_pentagon() {
        let p = constructions::cyclic_trig::<f64>(2, 5).unwrap();
        let ordering: Vec<usize> = (0..5).collect();
        let prof = p.distance_profile(&ordering).unwrap();
        assert_eq!(prof.len(), 2);
        for s in &prof {
            assert!(s.spread < 1e-12, "regular pentagon spread {}", s.spread);
        }
    }

    #[test]
    fn hull_volume_ignores_interior_points_and_origin_position() {
        // unit square shifted so the origin is outside
        let pts = vec![
            vec![2.0f64, 2.0],
            vec![3.0, 2.0],
            vec![3.0, 3.0],
            vec![2.0, 3.0],
            vec![2.5, 2.5],
        ];
        let v = hull_volume(&pts, 2).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }
}
