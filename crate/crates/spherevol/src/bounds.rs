//! Closed-form volumes of the optimal families.

use crate::constructions::SimplexFactorSpec;
use crate::error::{Error, Result};
use crate::real::Real;

/// Volume of the regular `k`-simplex inscribed in the unit sphere of
/// `R^k`: `(k+1)^{(k+1)/2} / (k^{k/2} k!)`.
pub fn v_simplex<F: Real>(k: usize) -> F {
    assert!(k >= 1);
    let kk = F::of_usize(k);
    let k1 = F::of_usize(k + 1);
    k1.powf(k1 / F::of(2.0)) / (kk.powf(kk / F::of(2.0)) * F::factorial(k))
}

/// Volume of the convex hull of regular simplices of the given dimensions
/// placed in orthogonal subspaces: `(prod k_i!) / d! * prod v_simplex(k_i)`.
pub fn product_volume<F: Real>(spec: &SimplexFactorSpec) -> F {
    let d = spec.total();
    let mut v = F::one() / F::factorial(d);
    for &k in spec.dims() {
        v *= F::factorial(k) * v_simplex::<F>(k);
    }
    v
}

/// Maximal volume over inscribed `d`-polytopes with `d+2` vertices
/// (balanced two-way split).
pub fn v_dplus2<F: Real>(d: usize) -> Result<F> {
    if d < 2 {
        return Err(Error::InvalidArgument("v_dplus2 needs d >= 2".into()));
    }
    Ok(product_volume(&SimplexFactorSpec::new(&[d / 2, d - d / 2])?))
}

/// Volume of the balanced three-way split with `d+3` vertices. For odd
/// `d` this is the global maximum; for even `d` it is the non-cyclic
/// local maximizer's value and only conjecturally global.
pub fn v_dplus3<F: Real>(d: usize) -> Result<F> {
    if d < 3 {
        return Err(Error::InvalidArgument("v_dplus3 needs d >= 3".into()));
    }
    let base = d / 3;
    let rem = d % 3;
    let mut dims = [base; 3];
    for item in dims.iter_mut().take(rem) {
        *item += 1;
    }
    Ok(product_volume(&SimplexFactorSpec::new(&dims)?))
}

/// Closed-form volume of `C_4(7)`: `49/192 * (cos(pi/7) + cos(2*pi/7))`.
pub fn c47_volume<F: Real>() -> F {
    let pi = F::PI();
    F::of(49.0) / F::of(192.0) * ((pi / F::of(7.0)).cos() + (F::of(2.0) * pi / F::of(7.0)).cos())
}

/// Closed-form volume of `C_6(9)`:
/// `(3/640) * (4 sin(pi/9) + 2 sin(2 pi/9) + sqrt 3)`.
///
/// Derived from the facial-simplex decomposition of the construction
/// (facet determinant orbits `(2 s1 + s2)/4` x9, `(4 s1 + 2 s2 + sqrt3)/8`
/// x18 and `3 sqrt3 / 8` x3, with `s_k = sin(k pi / 9)`).
pub fn c69_volume<F: Real>() -> F {
    let pi = F::PI();
    let s1 = (pi / F::of(9.0)).sin();
    let s2 = (F::of(2.0) * pi / F::of(9.0)).sin();
    F::of(3.0) / F::of(640.0) * (F::of(4.0) * s1 + F::of(2.0) * s2 + F::of(3.0).sqrt())
}

/// Status of a closed-form value in the optimality picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptimalityStatus {
    /// Proven global maximum over the family.
    Global,
    /// Certified stationary local maximizer; global optimality is open
    /// (even-dimensional three-factor splits).
    ConjecturalGlobal,
    /// No closed form is claimed; value is experimental.
    Experimental,
}

impl OptimalityStatus {
    pub fn label(self) -> &'static str {
        match self {
            Self::Global => "global",
            Self::ConjecturalGlobal => "conjectural global / certified non-cyclic local",
            Self::Experimental => "experimental",
        }
    }
}

/// One row of the closed-form table.
#[derive(Clone, Debug)]
pub struct VolumeRecord<F> {
    pub d: usize,
    pub n: usize,
    pub family: String,
    pub value: F,
    pub status: OptimalityStatus,
}

/// Closed-form records for all families up to dimension `dmax`.
pub fn closed_form_table<F: Real>(dmax: usize) -> Result<Vec<VolumeRecord<F>>> {
    let mut rows = Vec::new();
    for d in 1..=dmax {
        rows.push(VolumeRecord {
            d,
            n: d + 1,
            family: "simplex".into(),
            value: v_simplex::<F>(d),
            status: OptimalityStatus::Global,
        });
    }
    for d in 2..=dmax {
        rows.push(VolumeRecord {
            d,
            n: d + 2,
            family: "dplus2".into(),
            value: v_dplus2::<F>(d)?,
            status: OptimalityStatus::Global,
        });
    }
    for d in 3..=dmax {
        rows.push(VolumeRecord {
            d,
            n: d + 3,
            family: "dplus3".into(),
            value: v_dplus3::<F>(d)?,
            status: if d % 2 == 1 {
                OptimalityStatus::Global
            } else {
                OptimalityStatus::ConjecturalGlobal
            },
        });
    }
    for d in (4..=dmax).step_by(2) {
        let value = match d {
            4 => Some(c47_volume::<F>()),
            6 => Some(c69_volume::<F>()),
            _ => None,
        };
        rows.push(VolumeRecord {
            d,
            n: d + 3,
            family: "cyclic".into(),
            value: value.unwrap_or(F::nan()),
            status: if value.is_some() {
                OptimalityStatus::ConjecturalGlobal
            } else {
                OptimalityStatus::Experimental
            },
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn simplex_volume_values() {
        assert_eq!(v_simplex::<f64>(1), 2.0);
        assert!((v_simplex::<f64>(2) - 3.0 * 3.0f64.sqrt() / 4.0).abs() < 1e-14);
        assert!((v_simplex::<f64>(3) - 8.0 * 3.0f64.sqrt() / 27.0).abs() < 1e-14);
        // cross-check against the constructed polytope
        let p = constructions::regular_simplex_polytope::<f64>(3).unwrap();
        assert!((p.volume().unwrap() - v_simplex::<f64>(3)).abs() < 1e-12);
    }

    #[test]
    fn dplus2_values() {
        assert!((v_dplus2::<f64>(2).unwrap() - 2.0).abs() < 1e-14);
        assert!((v_dplus2::<f64>(3).unwrap() - 3.0f64.sqrt() / 2.0).abs() < 1e-14);
        assert!((v_dplus2::<f64>(4).unwrap() - 0.28125).abs() < 1e-14);
    }

    #[test]
    fn dplus3_values() {
        assert!((v_dplus3::<f64>(3).unwrap() - 4.0 / 3.0).abs() < 1e-14);
        assert!((v_dplus3::<f64>(4).unwrap() - 3.0f64.sqrt() / 4.0).abs() < 1e-14);
        assert!((v_dplus3::<f64>(6).unwrap() - 9.0 * 3.0f64.sqrt() / 640.0).abs() < 1e-14);
    }

    #[test]
    fn product_volume_examples() {
        let v12 = product_volume::<f64>(&SimplexFactorSpec::new(&[1, 2]).unwrap());
        assert!((v12 - 3.0f64.sqrt() / 2.0).abs() < 1e-14);
        let v22 = product_volume::<f64>(&SimplexFactorSpec::new(&[2, 2]).unwrap());
        assert!((v22 - 27.0 / 96.0).abs() < 1e-14);
        let v222 = product_volume::<f64>(&SimplexFactorSpec::new(&[2, 2, 2]).unwrap());
        assert!((v222 - v_dplus3::<f64>(6).unwrap()).abs() < 1e-16);
    }

    #[test]
    fn cyclic_values_and_ordering() {
        let c47 = c47_volume::<f64>();
        assert!((c47 - 0.38905455634529407).abs() < 1e-14);
        assert!(c47 < v_dplus3::<f64>(4).unwrap());
        let c69 = c69_volume::<f64>();
        assert!((c69 - 0.020557999688646707).abs() < 1e-14);
        assert!(c69 < v_dplus3::<f64>(6).unwrap());
    }

    #[test]
    fn balanced_split_maximizes_two_way_products() {
        for d in 2..=8usize {
            let best = (1..=d / 2)
                .map(|k| product_volume::<f64>(&SimplexFactorSpec::new(&[k, d - k]).unwrap()))
                .fold(f64::NEG_INFINITY, f64::max);
            assert!(
                (best - v_dplus2::<f64>(d).unwrap()).abs() < 1e-15,
                "balanced split must win for d={d}"
            );
        }
    }

    #[test]
    fn balanced_split_maximizes_three_way_products_odd_d() {
        for d in (3..=9usize).step_by(2) {
            let mut best = f64::NEG_INFINITY;
            for a in 1..=d - 2 {
                for b in 1..=d - 1 - a {
                    let c = d - a - b;
                    if c < 1 {
                        continue;
                    }
                    let v =
                        product_volume::<f64>(&SimplexFactorSpec::new(&[a, b, c]).unwrap());
                    best = best.max(v);
                }
            }
            assert!(
                (best - v_dplus3::<f64>(d).unwrap()).abs() < 1e-15,
                "balanced 3-split must win for d={d}"
            );
        }
    }

    #[test]
    fn formulas_match_constructions() {
        for d in 2..=6usize {
            let p = constructions::optimal_dplus2::<f64>(d).unwrap();
            assert!(
                (p.volume().unwrap() - v_dplus2::<f64>(d).unwrap()).abs() < 1e-10,
                "dplus2 d={d}"
            );
        }
        for d in 3..=6usize {
            let p = constructions::optimal_dplus3::<f64>(d).unwrap();
            assert!(
                (p.volume().unwrap() - v_dplus3::<f64>(d).unwrap()).abs() < 1e-10,
                "dplus3 d={d}"
            );
        }
        let c47 = constructions::cyclic_trig::<f64>(4, 7).unwrap();
        assert!((c47.volume().unwrap() - c47_volume::<f64>()).abs() < 1e-12);
        let c69 = constructions::cyclic_trig::<f64>(6, 9).unwrap();
        assert!((c69.volume().unwrap() - c69_volume::<f64>()).abs() < 1e-12);
    }
}
