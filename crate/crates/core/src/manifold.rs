//! The classifying invariants of simply-connected 6-manifolds `M` with
//! `H²(M) = Z·x`: the spin flag, `d = |⟨x³, [M]⟩|`, the first-Pontryagin
//! divisibility datum `k` (`p₁ = 2ky` when spin, `p₁ + x² = 2ky` when not,
//! with `y = x²/d`), and the genus `g = b₃/2`. The derived slope `l` is
//! `(k − 2d)/12` for spin manifolds and `(k − d)/24` otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Validated classifying data `(spin, d, k, g)` with the derived `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ManifoldInvariants {
    pub spin: bool,
    pub d: i64,
    pub k: i64,
    pub g: i64,
    pub l: i64,
}

impl ManifoldInvariants {
    /// Half of `d`, defined in the non-spin case (where `d` must be even).
    pub fn delta(&self) -> i64 {
        debug_assert!(!self.spin);
        self.d / 2
    }

    /// `k/2`, the slope of the diagonal in the Johnson-type target; integral
    /// in both cases (`k = 2(d + 6l)` spin, `k = d + 24l` with `d` even).
    pub fn half_k(&self) -> i64 {
        self.k / 2
    }
}

/// Check the classification constraints and derive `l`.
///
/// Spin: `12 | k − 2d`. Non-spin: `24 | k − d` and `d` even and `d > 0`.
pub fn validate(spin: bool, d: i64, k: i64, g: i64) -> Result<ManifoldInvariants> {
    if d < 0 {
        return Err(Error::Domain(format!("d = {d} must be nonnegative")));
    }
    if g < 0 {
        return Err(Error::Domain(format!("g = {g} must be nonnegative")));
    }
    let l = if spin {
        let num = k - 2 * d;
        if num % 12 != 0 {
            return Err(Error::Classification(format!(
                "spin requires 12 | k - 2d, but k - 2d = {num}"
            )));
        }
        num / 12
    } else {
        if d == 0 {
            return Err(Error::Classification(
                "non-spin invariants with d = 0 are not supported".into(),
            ));
        }
        if d % 2 != 0 {
            return Err(Error::Classification(format!(
                "non-spin requires d even, but d = {d}"
            )));
        }
        let num = k - d;
        if num % 24 != 0 {
            return Err(Error::Classification(format!(
                "non-spin requires 24 | k - d, but k - d = {num}"
            )));
        }
        num / 24
    };
    Ok(ManifoldInvariants { spin, d, k, g, l })
}

/// Coefficients of the total Chern class `1 + c₁x + c₂x² + c₃x³` of a
/// 3-dimensional complete intersection, truncated exactly at degree 3,
/// together with the degree `d = ∏dᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    pub c1: BigInt,
    pub c2: BigInt,
    pub c3: BigInt,
    pub degree: BigInt,
}

/// Degree-3 truncated polynomial `a₀ + a₁x + a₂x² + a₃x³` over Z.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Trunc3([BigInt; 4]);

impl Trunc3 {
    fn one() -> Self {
        Trunc3([BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::zero()])
    }

    /// `1 + c·x`
    fn linear(c: &BigInt) -> Self {
        Trunc3([BigInt::one(), c.clone(), BigInt::zero(), BigInt::zero()])
    }

    fn mul(&self, other: &Trunc3) -> Trunc3 {
        let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for i in 0..4 {
            for j in 0..4 - i {
                out[i + j] += &self.0[i] * &other.0[j];
            }
        }
        Trunc3(out)
    }

    /// Inverse of `1 + c·x` truncated at degree 3: `1 − cx + c²x² − c³x³`.
    fn linear_inverse(c: &BigInt) -> Self {
        Trunc3([BigInt::one(), -c.clone(), c * c, -(c * c * c)])
    }

    fn pow(&self, e: u32) -> Trunc3 {
        let mut acc = Trunc3::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Total Chern class data of the complete intersection `X(d₁,…,d_r) ⊂ CP^{3+r}`:
/// `c(X) = (1+x)^{4+r} / ∏ᵢ (1 + dᵢx)` truncated at `x³`.
pub fn ci_chern_data(degrees: &[i64]) -> Result<ChernData> {
    if degrees.is_empty() {
        return Err(Error::Domain("empty degree list".into()));
    }
    if let Some(bad) = degrees.iter().find(|&&d| d < 1) {
        return Err(Error::Domain(format!("degree {bad} must be positive")));
    }
    // degree-1 factors are hyperplanes: X(1, …) is the same intersection one
    // codimension down, so they are normalized away
    let degrees: Vec<i64> = degrees.iter().copied().filter(|&d| d != 1).collect();
    let r = degrees.len() as u32;
    let mut c = Trunc3::linear(&BigInt::one()).pow(4 + r);
    let mut degree = BigInt::one();
    for &di in &degrees {
        let di = BigInt::from(di);
        c = c.mul(&Trunc3::linear_inverse(&di));
        degree *= di;
    }
    Ok(ChernData {
        c1: c.0[1].clone(),
        c2: c.0[2].clone(),
        c3: c.0[3].clone(),
        degree,
    })
}

/// Classifying invariants of the complete intersection `X(d₁,…,d_r)`.
///
/// `d = ∏dᵢ`; spin iff the `c₁`-coefficient is even; `k` from
/// `p₁ = c₁² − 2c₂` via `p₁ = 2ky` (spin) or `p₁ + x² = 2ky` (non-spin)
/// with `y = x²/d`; `χ = c₃-coefficient · d` and `g = (4 − χ)/2`.
pub fn ci_invariants(degrees: &[i64]) -> Result<ManifoldInvariants> {
    let chern = ci_chern_data(degrees)?;
    let spin = chern.c1.is_even();
    // coefficient of x² in p₁ = c₁² − 2c₂
    let p1 = &chern.c1 * &chern.c1 - 2 * &chern.c2;
    let two_k: BigInt = if spin {
        &p1 * &chern.degree
    } else {
        (&p1 + BigInt::one()) * &chern.degree
    };
    if !two_k.is_even() {
        return Err(Error::Internal(format!(
            "characteristic class arithmetic produced odd 2k = {two_k}"
        )));
    }
    let k = two_k / 2;
    let euler = &chern.c3 * &chern.degree;
    let b3 = BigInt::from(4) - euler;
    if !b3.is_even() || b3.is_negative() {
        return Err(Error::Internal(format!(
            "Euler characteristic gives invalid third Betti number {b3}"
        )));
    }
    let g = b3 / 2;
    let to_i64 = |v: &BigInt, name: &str| -> Result<i64> {
        i64::try_from(v).map_err(|_| Error::Domain(format!("{name} = {v} out of range")))
    };
    validate(
        spin,
        to_i64(&chern.degree, "d")?,
        to_i64(&k, "k")?,
        to_i64(&g, "g")?,
    )
}

/// Registered example manifolds.
pub fn named_example(name: &str) -> Result<ManifoldInvariants> {
    match name {
        "CP3" => validate(true, 1, 2, 0),
        "X5" => ci_invariants(&[5]),
        "X24" => ci_invariants(&[2, 4]),
        "X33" => ci_invariants(&[3, 3]),
        "X223" => ci_invariants(&[2, 2, 3]),
        "X2222" => ci_invariants(&[2, 2, 2, 2]),
        // homology-CP3 stub: d = 0, p₁ = 0, genus 0
        "S2xS4" => validate(true, 0, 0, 0),
        other => Err(Error::Lookup(other.to_string())),
    }
}

pub const NAMED_EXAMPLES: &[&str] = &["CP3", "X5", "X24", "X33", "X223", "X2222", "S2xS4"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        let cp3 = validate(true, 1, 2, 0).unwrap();
        assert_eq!(cp3.l, 0);
        let quintic = validate(true, 5, -50, 102).unwrap();
        assert_eq!(quintic.l, -5);
        assert!(matches!(
            validate(true, 1, 3, 1),
            Err(Error::Classification(_))
        ));
        assert!(matches!(validate(true, -1, 2, 0), Err(Error::Domain(_))));
        assert!(matches!(validate(true, 1, 2, -3), Err(Error::Domain(_))));
        // non-spin: d must be even and positive, 24 | k − d
        assert!(validate(false, 2, 26, 1).is_ok());
        assert!(matches!(validate(false, 3, 27, 1), Err(Error::Classification(_))));
        assert!(matches!(validate(false, 0, 24, 1), Err(Error::Classification(_))));
        assert!(matches!(validate(false, 2, 27, 1), Err(Error::Classification(_))));
        // spin with d = 0: k interpreted as the divisibility of p₁/2
        assert!(validate(true, 0, 12, 0).is_ok());
        assert!(matches!(validate(true, 0, 13, 0), Err(Error::Classification(_))));
    }

    #[test]
    fn quintic_chern_class() {
        let c = ci_chern_data(&[5]).unwrap();
        assert_eq!(c.c1, BigInt::zero());
        assert_eq!(c.c2, BigInt::from(10));
        assert_eq!(c.c3, BigInt::from(-40));
        assert_eq!(c.degree, BigInt::from(5));
    }

    #[test]
    fn ci_named_values() {
        let x5 = ci_invariants(&[5]).unwrap();
        assert_eq!((x5.spin, x5.d, x5.k, x5.g, x5.l), (true, 5, -50, 102, -5));
        let x24 = ci_invariants(&[2, 4]).unwrap();
        assert_eq!((x24.spin, x24.d, x24.k, x24.g), (true, 8, -56, 90));
        assert_eq!((x24.k - 2 * x24.d) % 12, 0);
        // the quadric: c₁ = (4+1−2)x = 3x is odd, so X(2) is not spin
        let quadric = ci_invariants(&[2]).unwrap();
        assert_eq!(
            (quadric.spin, quadric.d, quadric.k, quadric.g, quadric.l),
            (false, 2, 2, 0, 0)
        );
    }

    #[test]
    fn degree_one_factors_normalized() {
        assert_eq!(ci_invariants(&[5]).unwrap(), ci_invariants(&[1, 5, 1]).unwrap());
        // all degrees 1 collapse to CP3 itself
        assert_eq!(ci_invariants(&[1, 1]).unwrap(), validate(true, 1, 2, 0).unwrap());
        assert!(matches!(ci_invariants(&[]), Err(Error::Domain(_))));
        assert!(matches!(ci_invariants(&[0]), Err(Error::Domain(_))));
    }

    #[test]
    fn permutation_invariance() {
        assert_eq!(
            ci_invariants(&[2, 3, 4]).unwrap(),
            ci_invariants(&[4, 2, 3]).unwrap()
        );
    }

    #[test]
    fn named_lookup() {
        assert_eq!(named_example("CP3").unwrap(), validate(true, 1, 2, 0).unwrap());
        assert_eq!(named_example("X5").unwrap(), ci_invariants(&[5]).unwrap());
        assert_eq!(named_example("X33").unwrap(), ci_invariants(&[3, 3]).unwrap());
        assert!(matches!(named_example("X7"), Err(Error::Lookup(_))));
        for name in NAMED_EXAMPLES {
            named_example(name).unwrap();
        }
    }

    #[test]
    fn congruence_consistency_grid() {
        // every multidegree with bounded product satisfies the spin/non-spin
        // congruence by construction (validate would reject otherwise)
        let mut count = 0;
        for a in 2i64..=12 {
            for b in 1i64..=8 {
                for c in 1i64..=5 {
                    let degs = [a, b, c];
                    let prod: i64 = degs.iter().product();
                    if prod > 300 {
                        continue;
                    }
                    let inv = ci_invariants(&degs).unwrap();
                    assert!(inv.g >= 0);
                    if inv.spin {
                        assert_eq!((inv.k - 2 * inv.d) % 12, 0);
                    } else {
                        assert_eq!((inv.k - inv.d) % 24, 0);
                        assert_eq!(inv.d % 2, 0);
                    }
                    count += 1;
                }
            }
        }
        assert!(count > 50);
    }
}
